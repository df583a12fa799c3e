#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bidisk {

/// Exact arbitrary-precision rational. Every eigenvalue, operator weight and
/// vector coefficient in the library is one of these; floating point only
/// appears in the dense normalized matrices.
using Rational = mpq_class;

/// "numerator/denominator" in lowest terms, always with an explicit
/// denominator ("1/1", "-3/4").
std::string to_string(const Rational& q);

/// Inverse of to_string; also accepts a bare integer. Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);

/// True when q is the square of a rational, in which case *root receives the
/// nonnegative square root.
bool exact_sqrt(const Rational& q, Rational* root);

}  // namespace bidisk
