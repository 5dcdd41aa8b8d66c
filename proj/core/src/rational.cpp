#include "kcausal/rational.hpp"

#include <cctype>

#include "kcausal/errors.hpp"

namespace kcausal {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_integer_literal(num) ||
      (slash != std::string_view::npos && (!is_integer_literal(den) || den.front() == '-' ||
                                           den.front() == '+'))) {
    throw ValidationError("not a rational literal: \"" + std::string(text) + "\"");
  }
  Integer numerator(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  Integer denominator = 1;
  if (slash != std::string_view::npos) {
    denominator = Integer(std::string(den), 10);
    if (denominator == 0) {
      throw ValidationError("zero denominator in \"" + std::string(text) + "\"");
    }
  }
  Rational value(numerator, denominator);
  value.canonicalize();
  return value;
}

std::string format_rational(const Rational& value) {
  Rational reduced = value;
  reduced.canonicalize();
  return reduced.get_num().get_str() + "/" + reduced.get_den().get_str();
}

Integer common_denominator(std::span<const Rational> values) {
  Integer d = 1;
  for (const auto& v : values) {
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den_mpz_t());
  }
  return d;
}

double to_double(const Rational& value) { return value.get_d(); }

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw ValidationError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace kcausal
