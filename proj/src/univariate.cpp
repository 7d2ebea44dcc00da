#include "apolar/univariate.hpp"

#include <algorithm>

namespace apolar {

UnivariatePolynomial::UnivariatePolynomial(RationalVector low_to_high) : coeffs_(std::move(low_to_high)) {
    trim();
}

void UnivariatePolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UnivariatePolynomial::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational UnivariatePolynomial::operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    RationalVector out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial UnivariatePolynomial::monic() const {
    if (is_zero()) return {};
    RationalVector out = coeffs_;
    Rational lead = out.back();
    for (auto& c : out) c /= lead;
    return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    RationalVector out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    RationalVector out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    RationalVector out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UnivariatePolynomial(std::move(out));
}

std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& a,
                                                             const UnivariatePolynomial& b) {
    if (b.is_zero()) throw InvalidInput("polynomial division by zero");
    if (a.degree() < b.degree()) return {UnivariatePolynomial{}, a};
    RationalVector rem = a.coeffs();
    RationalVector quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        Rational q = rem[static_cast<std::size_t>(i)] / b.leading();
        quot[static_cast<std::size_t>(i - db)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {UnivariatePolynomial(std::move(quot)), UnivariatePolynomial(std::move(rem))};
}

UnivariatePolynomial gcd(UnivariatePolynomial a, UnivariatePolynomial b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second.monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace apolar
