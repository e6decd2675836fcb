#include "polylin/rational.hpp"

#include <cctype>

#include "polylin/errors.hpp"

namespace polylin {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text))
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  Integer num = parse_integer(num_text);
  if (slash == std::string_view::npos) return Rational(num);
  auto den_text = text.substr(slash + 1);
  if (!is_integer_literal(den_text))
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  Integer den = parse_integer(den_text);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

}  // namespace polylin
