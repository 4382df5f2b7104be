#include "fibcensus/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "fibcensus/errors.hpp"

namespace fibcensus {

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpq_class parse_decimal(const std::string& s) {
  // [sign] digits [. digits] [eE [sign] digits]
  std::size_t pos = 0;
  bool neg = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    neg = (s[pos] == '-');
    ++pos;
  }
  std::string digits;
  long frac_digits = 0;
  bool any = false;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    digits += s[pos++];
    any = true;
  }
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      digits += s[pos++];
      ++frac_digits;
      any = true;
    }
  }
  if (!any) throw domain_error("invalid rational literal: '" + s + "'");
  long exp10 = 0;
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    bool eneg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      eneg = (s[pos] == '-');
      ++pos;
    }
    if (pos == s.size()) throw domain_error("invalid rational literal: '" + s + "'");
    long e = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      e = e * 10 + (s[pos++] - '0');
      if (e > 100000) throw domain_error("exponent out of range: '" + s + "'");
    }
    exp10 = eneg ? -e : e;
  }
  if (pos != s.size()) throw domain_error("invalid rational literal: '" + s + "'");

  mpz_class num(digits.empty() ? "0" : digits);
  if (neg) num = -num;
  long net = exp10 - frac_digits;
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(net)));
  mpq_class q;
  if (net >= 0)
    q = mpq_class(num * p10);
  else
    q = mpq_class(num, p10);
  q.canonicalize();
  return q;
}

}  // namespace

mpq_class parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den))
      throw domain_error("invalid rational literal: '" + s + "'");
    mpz_class n(num), d(den);
    if (d == 0) throw domain_error("zero denominator: '" + s + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return q;
  }
  if (is_integer_literal(s)) return mpq_class(mpz_class(s));
  return parse_decimal(s);
}

std::string format_rational(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double_down(const mpq_class& q) {
  double d = q.get_d();  // truncated toward zero
  while (mpq_class(d) > q) d = std::nextafter(d, -std::numeric_limits<double>::infinity());
  return d;
}

double to_double_up(const mpq_class& q) {
  double d = q.get_d();
  while (mpq_class(d) < q) d = std::nextafter(d, std::numeric_limits<double>::infinity());
  return d;
}

double log_down(double x) {
  double l = std::log(x);
  l = std::nextafter(l, -std::numeric_limits<double>::infinity());
  return std::nextafter(l, -std::numeric_limits<double>::infinity());
}

double log_up(double x) {
  double l = std::log(x);
  l = std::nextafter(l, std::numeric_limits<double>::infinity());
  return std::nextafter(l, std::numeric_limits<double>::infinity());
}

}  // namespace fibcensus
