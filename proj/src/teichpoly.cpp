#include "fibcensus/teichpoly.hpp"

#include <algorithm>
#include <map>

namespace fibcensus {

TeichPoly::TeichPoly(int b1, std::vector<TeichTerm> terms)
    : b1_(b1), terms_(std::move(terms)) {
  if (b1_ <= 0) throw domain_error("b1 must be positive");
  if (terms_.size() < 2)
    throw domain_error("polynomial needs at least two terms; a monomial has no root > 1");
  for (const TeichTerm& t : terms_) {
    if (static_cast<int>(t.exponents.size()) != b1_)
      throw domain_error("exponent vector " + to_string(t.exponents) + " has wrong length");
    if (t.coeff == 0)
      throw domain_error("zero coefficient at exponent " + to_string(t.exponents));
  }
  std::sort(terms_.begin(), terms_.end(),
            [](const TeichTerm& a, const TeichTerm& b) { return a.exponents < b.exponents; });
  for (std::size_t i = 1; i < terms_.size(); ++i)
    if (terms_[i].exponents == terms_[i - 1].exponents)
      throw domain_error("duplicate exponent vector " + to_string(terms_[i].exponents));
}

UniPoly specialize(const TeichPoly& theta, const IntVec& eta) {
  if (is_zero(eta)) throw domain_error("cannot specialize along the zero class");
  std::map<Coord, Coord> collected;
  for (const TeichTerm& t : theta.terms()) collected[dot(eta, t.exponents)] += t.coeff;
  Coord lo = 0, hi = 0;
  bool any = false;
  for (const auto& [e, c] : collected) {
    if (c == 0) continue;
    if (!any) {
      lo = hi = e;
      any = true;
    } else {
      lo = std::min(lo, e);
      hi = std::max(hi, e);
    }
  }
  if (!any) throw domain_error("degenerate specialization: all terms cancel");
  if (hi - lo > 2'000'000) throw domain_error("specialization degree too large");
  std::vector<mpz_class> c(static_cast<std::size_t>(hi - lo) + 1, 0);
  for (const auto& [e, coeff] : collected)
    if (coeff != 0) c[static_cast<std::size_t>(e - lo)] = coeff;
  return UniPoly(std::move(c));
}

}  // namespace fibcensus
