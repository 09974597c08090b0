#pragma once

#include <gmpxx.h>

#include <string>

namespace epsnet {

using Rational = mpq_class;

// Parses a decimal string ("0.05", "1e-3", ".5", "-2.75e+1") into an exact
// rational. Throws std::invalid_argument on malformed input.
Rational rational_from_decimal(const std::string& text);

// Exact value of a finite double.
Rational rational_from_double(double x);

std::string rational_to_string(const Rational& q);

}  // namespace epsnet
