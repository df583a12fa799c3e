#include "bidisk/rational.hpp"

#include <stdexcept>

namespace bidisk {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator: '" + s + "'");
  }
  q.canonicalize();
  return q;
}

double to_double(const Rational& q) { return q.get_d(); }

bool exact_sqrt(const Rational& q, Rational* root) {
  if (sgn(q) < 0) {
    return false;
  }
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 ||
      mpz_perfect_square_p(q.get_den_mpz_t()) == 0) {
    return false;
  }
  if (root != nullptr) {
    mpz_class num = sqrt(q.get_num());
    mpz_class den = sqrt(q.get_den());
    *root = Rational(num, den);
    root->canonicalize();
  }
  return true;
}

}  // namespace bidisk
