#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace apolar {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

/// Thrown for malformed or out-of-contract input (CLI exit code 2).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a floating-point stage cannot meet its tolerance (CLI exit code 3).
class NumericFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses "p", "-p" or "p/q" into a canonical rational. Rejects q = 0.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

Integer binomial(unsigned long n, unsigned long k);

/// n (n-1) ... (n-m+1); 1 when m = 0.
Integer falling_factorial(unsigned long n, unsigned long m);

/// Scales a nonzero vector to a primitive integer vector whose first nonzero
/// entry is positive. The zero vector is returned unchanged.
RationalVector primitive_normalize(const RationalVector& v);

bool is_zero(const RationalVector& v);

}  // namespace apolar
