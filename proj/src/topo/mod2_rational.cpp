#include "perispec/topo/mod2_rational.hpp"

#include <cctype>

#include "perispec/error.hpp"

namespace perispec {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  auto fail = [&](std::size_t col) -> Rational {
    throw ParseError("not a rational number: '" + text + "'", 1, col + 1);
  };
  if (text.empty()) return fail(0);
  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    // Terminating decimal: digits before and after the point.
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const std::size_t frac = text.size() - dot - 1;
    for (std::size_t i = 0; i < digits.size(); ++i) {
      const char ch = digits[i];
      if (!(std::isdigit(static_cast<unsigned char>(ch)) || (i == 0 && (ch == '-' || ch == '+')))) {
        return fail(i);
      }
    }
    if (digits == "-" || digits == "+" || digits.empty()) return fail(0);
    if (digits[0] == '+') digits.erase(0, 1);
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  std::string body = text[0] == '+' ? text.substr(1) : text;
  for (std::size_t i = 0; i < body.size(); ++i) {
    const char ch = body[i];
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || (i == 0 && ch == '-'))) {
      return fail(i);
    }
  }
  const auto slash = body.find('/');
  if (slash == 0 || slash + 1 == body.size() || body == "-" ||
      (slash != std::string::npos && body.find('/', slash + 1) != std::string::npos)) {
    return fail(slash == std::string::npos ? 0 : slash);
  }
  Rational q;
  if (q.set_str(body, 10) != 0) return fail(0);
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + text + "'", 1, slash + 1);
  q.canonicalize();
  return q;
}

Mod2Rational::Mod2Rational(Rational value) : value_(std::move(value)) {
  value_.canonicalize();
  // residue = value − 2·⌊value/2⌋
  Rational half = value_ / 2;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), half.get_num_mpz_t(), half.get_den_mpz_t());
  residue_ = value_ - Rational(2 * fl);
  residue_.canonicalize();
}

}  // namespace perispec
