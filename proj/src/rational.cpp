#include "ultralip/rational.hpp"

#include <cctype>

#include "ultralip/errors.hpp"

namespace ultralip {

Rational parse_rational(const std::string& text) {
  if (text.empty()) fail(Err::ParseError, "empty rational");
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string num = (slash == std::string::npos) ? text : text.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) fail(Err::ParseError, "bad rational '" + text + "'");
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
    fail(Err::ParseError, "bad rational '" + text + "'");
  if (r.get_den() == 0) fail(Err::ParseError, "zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string rat_str(const Rational& r) { return r.get_str(); }

Rational rat_pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0 && exp < 0) fail(Err::BadArgument, "0 to a negative power");
  unsigned long k = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), k);
  Rational r = (exp > 0) ? Rational(num, den) : Rational(den, num);
  r.canonicalize();
  return r;
}

Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

Rational pow2_inv(unsigned long k) {
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, k);
  return Rational(Integer(1), den);
}

}  // namespace ultralip
