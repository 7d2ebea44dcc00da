#pragma once

#include "apolar/rational.hpp"

#include <utility>

namespace apolar {

/// Dense univariate polynomial over Q, coefficients ordered from t^0 upward.
/// Trailing zeros are trimmed; the zero polynomial has no coefficients.
class UnivariatePolynomial {
public:
    UnivariatePolynomial() = default;
    explicit UnivariatePolynomial(RationalVector low_to_high);

    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] const RationalVector& coeffs() const { return coeffs_; }
    [[nodiscard]] Rational coeff(int i) const;
    [[nodiscard]] const Rational& leading() const { return coeffs_.back(); }

    [[nodiscard]] Rational operator()(const Rational& t) const;
    [[nodiscard]] UnivariatePolynomial derivative() const;
    [[nodiscard]] UnivariatePolynomial monic() const;

    friend UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
    friend UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
    friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
    friend bool operator==(const UnivariatePolynomial& a, const UnivariatePolynomial& b) = default;

private:
    void trim();
    RationalVector coeffs_;
};

/// Quotient and remainder; throws InvalidInput on division by zero.
std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& a,
                                                             const UnivariatePolynomial& b);

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
UnivariatePolynomial gcd(UnivariatePolynomial a, UnivariatePolynomial b);

}  // namespace apolar
