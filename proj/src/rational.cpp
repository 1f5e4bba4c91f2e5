#include "savlie/rational.hpp"

namespace savlie {

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  std::string s = text;
  if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
      s.find('E') != std::string::npos) {
    throw ParseError("rational literal must be \"p\" or \"p/q\", got: " + text);
  }
  mpq_class value;
  if (value.set_str(s, 10) != 0) {
    throw ParseError("bad rational literal: " + text);
  }
  if (sgn(value.get_den()) == 0) {
    throw ParseError("zero denominator in rational literal: " + text);
  }
  value.canonicalize();
  return value;
}

std::string rational_to_string(const Rational& value) {
  return value.get_str();
}

Rational rational_binomial(long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class bin;
  mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Rational(bin);
}

}  // namespace savlie
