#include "fibcensus/unipoly.hpp"

#include <algorithm>
#include <cstdint>

namespace fibcensus {

UniPoly::UniPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::from_ints(const std::vector<long>& coeffs) {
  std::vector<mpz_class> c(coeffs.begin(), coeffs.end());
  return UniPoly(std::move(c));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& UniPoly::leading() const {
  if (c_.empty()) throw domain_error("zero polynomial has no leading coefficient");
  return c_.back();
}

int UniPoly::term_count() const {
  int n = 0;
  for (const mpz_class& x : c_)
    if (x != 0) ++n;
  return n;
}

UniPoly derivative(const UniPoly& p) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return UniPoly{};
  std::vector<mpz_class> d(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<long>(i);
  return UniPoly(std::move(d));
}

UniPoly negate(const UniPoly& p) {
  std::vector<mpz_class> c(p.coeffs());
  for (mpz_class& x : c) x = -x;
  return UniPoly(std::move(c));
}

UniPoly compose_power(const UniPoly& p, int k) {
  if (k < 1) throw domain_error("compose_power needs k >= 1");
  if (p.is_zero()) return p;
  std::vector<mpz_class> c(static_cast<std::size_t>(p.degree()) * k + 1, 0);
  for (int i = 0; i <= p.degree(); ++i) c[static_cast<std::size_t>(i) * k] = p.coeffs()[i];
  return UniPoly(std::move(c));
}

int sign_at(const UniPoly& p, const mpz_class& num, const mpz_class& den) {
  if (den <= 0) throw domain_error("sign_at requires positive denominator");
  if (p.is_zero()) return 0;
  const auto& c = p.coeffs();
  const int d = p.degree();
  mpz_class acc;
  if (p.term_count() <= 32 && d > 64) {
    // few terms, large degree: sum c_i * num^i * den^(d-i) directly
    mpz_class t, pn, pd;
    for (int i = 0; i <= d; ++i) {
      if (c[i] == 0) continue;
      mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(i));
      mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(d - i));
      t = c[i] * pn * pd;
      acc += t;
    }
  } else {
    // Horner with an incrementally maintained power of the denominator
    acc = c[d];
    mpz_class dp = 1;
    for (int i = d - 1; i >= 0; --i) {
      dp *= den;
      acc = acc * num + c[i] * dp;
    }
  }
  return sgn(acc);
}

int sign_at(const UniPoly& p, const mpq_class& x) {
  return sign_at(p, x.get_num(), x.get_den());
}

mpz_class value_at_one(const UniPoly& p) {
  mpz_class s = 0;
  for (const mpz_class& x : p.coeffs()) s += x;
  return s;
}

mpz_class content(const UniPoly& p) {
  mpz_class g = 0;
  for (const mpz_class& x : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UniPoly primitive_part(const UniPoly& p) {
  if (p.is_zero()) return p;
  mpz_class g = content(p);
  if (sgn(p.leading()) < 0) g = -g;
  if (g == 1) return p;
  std::vector<mpz_class> c(p.coeffs());
  for (mpz_class& x : c) x /= g;
  return UniPoly(std::move(c));
}

UniPoly exact_divide(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw domain_error("division by zero polynomial");
  if (a.is_zero()) return a;
  if (a.degree() < b.degree()) throw domain_error("exact_divide: degree underflow");
  std::vector<mpz_class> rem(a.coeffs());
  std::vector<mpz_class> q(a.degree() - b.degree() + 1, 0);
  const auto& bc = b.coeffs();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    mpz_class& top = rem[k + b.degree()];
    if (top == 0) continue;
    mpz_class t, r;
    mpz_tdiv_qr(t.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
    if (r != 0) throw domain_error("exact_divide: not divisible");
    q[k] = t;
    for (int i = 0; i <= b.degree(); ++i) rem[k + i] -= t * bc[i];
  }
  for (const mpz_class& x : rem)
    if (x != 0) throw domain_error("exact_divide: nonzero remainder");
  return UniPoly(std::move(q));
}

UniPoly divide_out_root_one(const UniPoly& p) {
  if (value_at_one(p) != 0) throw domain_error("1 is not a root");
  const auto& c = p.coeffs();
  std::vector<mpz_class> q(c.size() - 1);
  mpz_class acc = 0;
  for (int i = p.degree(); i >= 1; --i) {
    acc += c[i];
    q[i - 1] = acc;
  }
  return UniPoly(std::move(q));
}

namespace {

// Pseudo-remainder: returns r with r == s * (a mod b) for a positive integer
// s, suitable for sign-sensitive (Sturm) use.
UniPoly positive_pseudo_rem(const UniPoly& a, const UniPoly& b) {
  std::vector<mpz_class> r(a.coeffs());
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const mpz_class& lb = b.leading();
  int steps = 0;
  auto deg_of = [](const std::vector<mpz_class>& v) {
    int d = static_cast<int>(v.size()) - 1;
    while (d >= 0 && v[d] == 0) --d;
    return d;
  };
  int dr = deg_of(r);
  while (dr >= db) {
    mpz_class top = r[dr];
    for (int i = 0; i < dr; ++i) r[i] *= lb;
    for (int i = 0; i <= db; ++i) r[dr - db + i] -= top * bc[i];
    r[dr] = 0;
    ++steps;
    dr = deg_of(r);
  }
  r.resize(dr + 1);
  UniPoly out{std::move(r)};
  // each step scaled by lc(b); flip once if that scaling was negative overall
  if (sgn(lb) < 0 && steps % 2 == 1) out = negate(out);
  return out;
}

UniPoly strip_content(const UniPoly& p) {
  if (p.is_zero()) return p;
  mpz_class g = content(p);
  if (g == 1) return p;
  std::vector<mpz_class> c(p.coeffs());
  for (mpz_class& x : c) x /= g;
  return UniPoly(std::move(c));
}

constexpr std::uint64_t kModPrimes[] = {2305843009213693951ull,  // 2^61 - 1
                                        2147483647ull};          // 2^31 - 1

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> reduce_mod(const UniPoly& p, std::uint64_t m) {
  std::vector<std::uint64_t> r(p.coeffs().size());
  mpz_class t;
  for (std::size_t i = 0; i < r.size(); ++i) {
    t = p.coeffs()[i] % static_cast<unsigned long>(m);
    if (t < 0) t += static_cast<unsigned long>(m);
    r[i] = t.get_ui();
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

int gcd_degree_mod(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b,
                   std::uint64_t m) {
  auto trim = [](std::vector<std::uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  while (!b.empty()) {
    // a = a mod b
    std::uint64_t inv = powmod(b.back(), m - 2, m);
    while (a.size() >= b.size() && !a.empty()) {
      std::uint64_t f = mulmod(a.back(), inv, m);
      std::size_t off = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        std::uint64_t sub = mulmod(f, b[i], m);
        a[off + i] = (a[off + i] + m - sub) % m;
      }
      trim(a);
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

}  // namespace

UniPoly poly_gcd(const UniPoly& a_in, const UniPoly& b_in) {
  UniPoly a = strip_content(a_in), b = strip_content(b_in);
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    UniPoly r = positive_pseudo_rem(a, b);
    a = std::move(b);
    b = strip_content(r);
  }
  return primitive_part(a);
}

bool squarefree_certified(const UniPoly& p) {
  if (p.is_zero()) return false;
  if (p.degree() <= 1) return true;
  UniPoly d = derivative(p);
  for (std::uint64_t m : kModPrimes) {
    auto pm = reduce_mod(p, m);
    auto dm = reduce_mod(d, m);
    if (static_cast<int>(pm.size()) - 1 != p.degree()) continue;  // lead vanished
    if (static_cast<int>(dm.size()) - 1 != d.degree()) continue;
    if (gcd_degree_mod(pm, dm, m) == 0) return true;
  }
  return false;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw domain_error("square-free part of zero polynomial");
  UniPoly pr = primitive_part(p);
  if (pr.degree() <= 1 || squarefree_certified(pr)) return pr;
  if (pr.degree() > 800)
    throw domain_error("square-free reduction not supported beyond degree 800");
  UniPoly g = poly_gcd(pr, derivative(pr));
  if (g.degree() == 0) return pr;
  return primitive_part(exact_divide(pr, g));
}

mpz_class cauchy_root_bound(const UniPoly& p) {
  if (p.is_zero() || p.degree() == 0) throw domain_error("root bound needs degree >= 1");
  mpz_class lead = abs(p.leading());
  mpz_class maxabs = 0;
  for (int i = 0; i < p.degree(); ++i) {
    mpz_class a = abs(p.coeffs()[i]);
    if (a > maxabs) maxabs = a;
  }
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), maxabs.get_mpz_t(), lead.get_mpz_t());
  return q + 1;
}

namespace {

// Sparse route: derivative values via falling factorials against precomputed
// powers of the numerator.
bool taylor_nonneg_sparse(const UniPoly& p, const mpz_class& num, const mpz_class& den) {
  const int d = p.degree();
  std::vector<int> exps;
  std::vector<mpz_class> coef, denpow;
  for (int i = 0; i <= d; ++i)
    if (p.coeffs()[i] != 0) {
      exps.push_back(i);
      coef.push_back(p.coeffs()[i]);
    }
  const int m = static_cast<int>(exps.size());
  denpow.resize(m);
  for (int t = 0; t < m; ++t)
    mpz_pow_ui(denpow[t].get_mpz_t(), den.get_mpz_t(),
               static_cast<unsigned long>(d - exps[t]));
  std::vector<mpz_class> numpow(static_cast<std::size_t>(d) + 1);
  numpow[0] = 1;
  for (int t = 1; t <= d; ++t) numpow[t] = numpow[t - 1] * num;
  std::vector<mpz_class> ff(m, 1);
  const int second = (m >= 2) ? exps[m - 2] : -1;
  mpz_class sum, term;
  for (int j = 0; j <= d; ++j) {
    if (j > second) break;  // only the (positive) leading term survives
    sum = 0;
    for (int t = 0; t < m; ++t) {
      if (exps[t] < j) continue;
      term = coef[t] * ff[t] * numpow[exps[t] - j] * denpow[t];
      sum += term;
    }
    if (j == 0 ? sum <= 0 : sum < 0) return false;
    for (int t = 0; t < m; ++t)
      if (exps[t] >= j + 1) ff[t] *= (exps[t] - j);
  }
  return true;
}

// Dense route: integer Taylor shift of den^d * p(x/den) by num; the shifted
// coefficients are positive multiples of the derivative values.
bool taylor_nonneg_dense(const UniPoly& p, const mpz_class& num, const mpz_class& den) {
  const int d = p.degree();
  std::vector<mpz_class> a(static_cast<std::size_t>(d) + 1);
  mpz_class dp = 1;
  for (int i = d; i >= 0; --i) {
    a[i] = p.coeffs()[i] * dp;
    if (i > 0) dp *= den;
  }
  for (int k = 0; k < d; ++k)
    for (int j = d - 1; j >= k; --j) a[j] += num * a[j + 1];
  if (sgn(a[0]) <= 0) return false;
  for (int j = 1; j <= d; ++j)
    if (sgn(a[j]) < 0) return false;
  return true;
}

}  // namespace

bool certify_no_roots_at_or_above(const UniPoly& p, const mpq_class& a) {
  if (p.is_zero()) throw domain_error("zero polynomial");
  if (a <= 0) throw domain_error("certificate point must be positive");
  if (sgn(p.leading()) < 0) return certify_no_roots_at_or_above(negate(p), a);
  if (p.degree() == 0) return true;
  const mpz_class& num = a.get_num();
  const mpz_class& den = a.get_den();
  if (p.term_count() <= 32) return taylor_nonneg_sparse(p, num, den);
  if (p.degree() <= 1200) return taylor_nonneg_dense(p, num, den);
  throw domain_error("no positivity certificate available at this size");
}

std::vector<UniPoly> sturm_chain(const UniPoly& squarefree) {
  std::vector<UniPoly> chain;
  chain.push_back(primitive_part(squarefree));
  UniPoly d = strip_content(derivative(squarefree));
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    const UniPoly& s0 = chain[chain.size() - 2];
    const UniPoly& s1 = chain[chain.size() - 1];
    if (s1.degree() == 0) break;
    UniPoly r = positive_pseudo_rem(s0, s1);
    if (r.is_zero()) break;  // squarefree input should not get here
    chain.push_back(strip_content(negate(r)));
  }
  return chain;
}

namespace {

int sturm_variations(const std::vector<UniPoly>& chain, const mpq_class& x) {
  int var = 0, prev = 0;
  for (const UniPoly& s : chain) {
    int sg = sign_at(s, x);
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++var;
    prev = sg;
  }
  return var;
}

}  // namespace

int sturm_count_in(const std::vector<UniPoly>& chain, const mpq_class& a,
                   const mpq_class& b) {
  if (chain.empty()) throw domain_error("empty Sturm chain");
  if (a >= b) return 0;
  if (sign_at(chain[0], a) == 0 || sign_at(chain[0], b) == 0)
    throw domain_error("Sturm endpoints must avoid roots");
  return sturm_variations(chain, a) - sturm_variations(chain, b);
}

}  // namespace fibcensus
