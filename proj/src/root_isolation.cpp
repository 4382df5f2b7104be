#include "fibcensus/root_isolation.hpp"

#include <optional>
#include <vector>

namespace fibcensus {

namespace {

constexpr int kSturmDegreeCap = 400;

// Strips factors of x, normalizes the leading sign, removes repeated roots
// and any root at 1. The result has the same root set above 1 as the input.
UniPoly prepare(const UniPoly& p) {
  if (p.is_zero()) throw domain_error("not a dilatation polynomial: zero polynomial");
  std::vector<mpz_class> c(p.coeffs());
  std::size_t v = 0;
  while (v < c.size() && c[v] == 0) ++v;
  c.erase(c.begin(), c.begin() + static_cast<long>(v));
  UniPoly q{std::move(c)};
  if (q.degree() < 1)
    throw domain_error("not a dilatation polynomial: no root greater than 1");
  q = squarefree_part(q);
  while (value_at_one(q) == 0) q = divide_out_root_one(q);
  if (q.degree() < 1)
    throw domain_error("not a dilatation polynomial: no root greater than 1");
  if (sgn(q.leading()) < 0) q = negate(q);
  return q;
}

// Scans (1, U) on progressively finer uniform grids, from the right, for a
// point with negative sign. Exact evaluation throughout.
std::optional<mpq_class> scan_for_negative(const UniPoly& q, const mpq_class& lo,
                                           const mpq_class& hi) {
  for (long n : {64L, 512L, 4096L}) {
    mpq_class step = (hi - lo) / n;
    for (long j = n - 1; j >= 1; --j) {
      mpq_class x = lo + step * j;
      if (sign_at(q, x) < 0) return x;
    }
  }
  return std::nullopt;
}

// Exact largest-root isolation through Sturm counts: shrink (a, b] keeping at
// least one root in (a, U] and none in (b, U].
RootInterval sturm_isolate_largest(const UniPoly& q, const std::vector<UniPoly>& chain,
                                   mpq_class a, mpq_class b, const mpq_class& tol) {
  while (b - a > tol || a <= 1) {
    mpq_class m = (a + b) / 2;
    if (sign_at(q, m) == 0) {
      // m is a root; decide whether anything lives above it
      mpq_class m2 = m + (b - m) / 2;
      while (sign_at(q, m2) == 0) m2 = (m + m2) / 2;
      if (sturm_count_in(chain, m2, b) == 0) return RootInterval{m, m};
      a = m2;
      continue;
    }
    if (sturm_count_in(chain, m, b) >= 1)
      a = m;
    else
      b = m;
  }
  return RootInterval{a, b};
}

}  // namespace

RootInterval perron_root(const UniPoly& p, const mpq_class& tol) {
  if (tol <= 0) throw domain_error("tolerance must be positive");
  UniPoly q = prepare(p);
  const mpq_class one = 1;
  mpq_class upper = mpq_class(cauchy_root_bound(q));
  if (upper <= 1)
    throw domain_error("not a dilatation polynomial: no root greater than 1");
  if (sign_at(q, upper) <= 0) throw domain_error("root bound failed; data corrupt");

  std::vector<UniPoly> chain;  // built on demand
  auto ensure_chain = [&]() {
    if (chain.empty()) {
      if (q.degree() > kSturmDegreeCap)
        throw domain_error("unable to certify largest real root at this degree");
      chain = sturm_chain(q);
    }
  };

  // certified point with q < 0; every real root above it is bracketed
  std::optional<mpq_class> witness;
  if (sign_at(q, one) < 0)
    witness = one;
  else
    witness = scan_for_negative(q, one, upper);
  if (!witness) {
    ensure_chain();
    if (sturm_count_in(chain, one, upper) == 0)
      throw domain_error("not a dilatation polynomial: no root greater than 1");
    return sturm_isolate_largest(q, chain, one, upper, tol);
  }

  mpq_class lo = *witness, hi = upper;
  for (int attempt = 0; attempt < 4; ++attempt) {
    while (hi - lo > tol || lo <= 1) {
      mpq_class mid = (lo + hi) / 2;
      int s = sign_at(q, mid);
      if (s < 0) {
        lo = mid;
      } else if (s > 0) {
        hi = mid;
      } else {
        // landed exactly on a root
        ensure_chain();
        mpq_class m2 = mid + (hi - mid) / 2;
        while (sign_at(q, m2) == 0) m2 = (mid + m2) / 2;
        if (sturm_count_in(chain, m2, upper) == 0) return RootInterval{mid, mid};
        auto w = scan_for_negative(q, m2, upper);
        if (!w) return sturm_isolate_largest(q, chain, m2, upper, tol);
        lo = *w;
        hi = upper;
      }
    }
    if (certify_no_roots_at_or_above(q, hi)) return RootInterval{lo, hi};
    // inconclusive: look for a sign change further right
    auto w = scan_for_negative(q, hi, upper);
    if (w) {
      lo = *w;
      hi = upper;
      continue;
    }
    ensure_chain();
    mpq_class h2 = hi;
    while (sign_at(q, h2) == 0) h2 += tol / 4;
    if (sturm_count_in(chain, h2, upper) == 0) return RootInterval{lo, hi};
    return sturm_isolate_largest(q, chain, h2, upper, tol);
  }
  throw domain_error("unable to certify largest real root");
}

}  // namespace fibcensus
