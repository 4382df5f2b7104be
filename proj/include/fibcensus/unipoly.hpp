#pragma once

#include <gmpxx.h>

#include <vector>

#include "fibcensus/errors.hpp"

namespace fibcensus {

// Dense integer polynomial, c[i] the coefficient of x^i. Kept trimmed:
// either empty (the zero polynomial) or c.back() != 0.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<mpz_class> coeffs);

  static UniPoly from_ints(const std::vector<long>& coeffs);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  const mpz_class& leading() const;
  int term_count() const;

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

 private:
  void trim();
  std::vector<mpz_class> c_;
};

UniPoly derivative(const UniPoly& p);
UniPoly negate(const UniPoly& p);
UniPoly compose_power(const UniPoly& p, int k);  // p(x^k)

// Exact sign of p(num/den), den > 0. Uses a sparse term sum when the
// polynomial has few nonzero coefficients, Horner otherwise.
int sign_at(const UniPoly& p, const mpz_class& num, const mpz_class& den);
int sign_at(const UniPoly& p, const mpq_class& x);
mpz_class value_at_one(const UniPoly& p);

// Content (gcd of coefficients, positive) and primitive part.
mpz_class content(const UniPoly& p);
UniPoly primitive_part(const UniPoly& p);

// Quotient of exact division; throws if the division leaves a remainder.
UniPoly exact_divide(const UniPoly& a, const UniPoly& b);

// Divides out one factor of (x - 1); p(1) must vanish.
UniPoly divide_out_root_one(const UniPoly& p);

// Primitive-PRS gcd, positive leading coefficient.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

// Certifies gcd(p, p') = const by a modular computation; "false" only means
// the cheap certificate did not apply, not that p has a repeated root.
bool squarefree_certified(const UniPoly& p);

// Square-free part pp(p)/gcd(p, p'). Uses the modular certificate to skip
// the gcd entirely in the common case.
UniPoly squarefree_part(const UniPoly& p);

// Integer upper bound 1 + ceil(max|c_i| / |lc|) dominating every real root.
mpz_class cauchy_root_bound(const UniPoly& p);

// True when every derivative value p^(j)(a) is >= 0 with p(a) > 0, which
// forces p > 0 on [a, oo). A "false" is inconclusive.
bool certify_no_roots_at_or_above(const UniPoly& p, const mpq_class& a);

// Sturm chain of a square-free polynomial and exact root counting.
std::vector<UniPoly> sturm_chain(const UniPoly& squarefree);
int sturm_count_in(const std::vector<UniPoly>& chain, const mpq_class& a,
                   const mpq_class& b);  // roots in (a, b]; requires p(a), p(b) != 0

}  // namespace fibcensus
