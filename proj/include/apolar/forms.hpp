#pragma once

#include "apolar/rational.hpp"
#include "apolar/univariate.hpp"

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace apolar {

struct PrimalSide {
    static constexpr char var0 = 'x';
};
struct DualSide {
    static constexpr char var0 = 'y';
};

/// A binary form of fixed degree with exact coefficients in the lex monomial
/// basis: coefficient i multiplies v0^(degree-i) v1^i.
template <class Side>
class HomogeneousForm {
public:
    HomogeneousForm() : coeffs_{Rational(0)} {}
    HomogeneousForm(unsigned degree, RationalVector coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != degree_ + 1)
            throw InvalidInput("form of degree " + std::to_string(degree_) + " needs " +
                               std::to_string(degree_ + 1) + " coefficients, got " +
                               std::to_string(coeffs_.size()));
    }

    static HomogeneousForm zero(unsigned degree) { return {degree, RationalVector(degree + 1)}; }
    /// v0^(degree-i) v1^i
    static HomogeneousForm monomial(unsigned degree, unsigned i) {
        auto f = zero(degree);
        f.coeffs_.at(i) = 1;
        return f;
    }

    [[nodiscard]] unsigned degree() const { return degree_; }
    [[nodiscard]] const RationalVector& coeffs() const { return coeffs_; }
    [[nodiscard]] const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
    [[nodiscard]] bool is_zero() const { return apolar::is_zero(coeffs_); }

    /// Same form scaled to primitive integer coefficients, first nonzero positive.
    [[nodiscard]] HomogeneousForm normalized() const { return {degree_, primitive_normalize(coeffs_)}; }

    [[nodiscard]] Rational evaluate(const Rational& v0, const Rational& v1) const {
        Rational acc = 0;
        for (unsigned i = 0; i <= degree_; ++i) {
            Rational term = coeffs_[i];
            if (term == 0) continue;
            for (unsigned e = 0; e < degree_ - i; ++e) term *= v0;
            for (unsigned e = 0; e < i; ++e) term *= v1;
            acc += term;
        }
        return acc;
    }

    [[nodiscard]] std::complex<double> evaluate(std::complex<double> v0, std::complex<double> v1) const {
        std::complex<double> acc = 0;
        for (unsigned i = 0; i <= degree_; ++i)
            acc += coeffs_[i].get_d() * std::pow(v0, static_cast<int>(degree_ - i)) * std::pow(v1, static_cast<int>(i));
        return acc;
    }

    /// f(t, 1) as a polynomial in t.
    [[nodiscard]] UnivariatePolynomial dehomogenize() const {
        return UnivariatePolynomial(RationalVector(coeffs_.rbegin(), coeffs_.rend()));
    }

    /// Inverse of dehomogenize at a fixed degree (degree >= p.degree()).
    static HomogeneousForm homogenize(const UnivariatePolynomial& p, unsigned degree) {
        if (p.degree() > static_cast<int>(degree)) throw InvalidInput("homogenize: degree too small");
        auto f = zero(degree);
        for (int i = 0; i <= p.degree(); ++i) f.coeffs_[degree - static_cast<unsigned>(i)] = p.coeff(i);
        return f;
    }

    /// Largest m with v1^m dividing the form (degree+1 for the zero form).
    [[nodiscard]] unsigned v1_order() const {
        unsigned m = 0;
        while (m <= degree_ && coeffs_[m] == 0) ++m;
        return m;
    }

    [[nodiscard]] std::string to_string() const {
        std::string out;
        for (unsigned i = 0; i <= degree_; ++i) {
            const Rational& c = coeffs_[i];
            if (c == 0) continue;
            std::string mono;
            auto power = [&](int var, unsigned e) {
                if (e == 0) return;
                if (!mono.empty()) mono += '*';
                mono += Side::var0;
                mono += static_cast<char>('0' + var);
                if (e > 1) mono += "^" + std::to_string(e);
            };
            power(0, degree_ - i);
            power(1, i);
            std::string cs = apolar::to_string(abs(c));
            std::string sign = c < 0 ? "-" : "+";
            if (out.empty()) out = c < 0 ? "-" : "";
            else out += " " + sign + " ";
            if (mono.empty()) out += cs;
            else if (cs == "1") out += mono;
            else out += cs + "*" + mono;
        }
        return out.empty() ? "0" : out;
    }

    friend HomogeneousForm operator+(const HomogeneousForm& a, const HomogeneousForm& b) {
        check_same_degree(a, b);
        RationalVector c(a.coeffs_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
        return {a.degree_, std::move(c)};
    }
    friend HomogeneousForm operator-(const HomogeneousForm& a, const HomogeneousForm& b) {
        check_same_degree(a, b);
        RationalVector c(a.coeffs_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] - b.coeffs_[i];
        return {a.degree_, std::move(c)};
    }
    friend HomogeneousForm operator*(const Rational& s, const HomogeneousForm& a) {
        RationalVector c = a.coeffs_;
        for (auto& x : c) x *= s;
        return {a.degree_, std::move(c)};
    }
    /// Polynomial product; degrees add.
    friend HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b) {
        auto out = zero(a.degree_ + b.degree_);
        for (unsigned i = 0; i <= a.degree_; ++i)
            for (unsigned j = 0; j <= b.degree_; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return out;
    }
    friend bool operator==(const HomogeneousForm& a, const HomogeneousForm& b) {
        return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }

private:
    static void check_same_degree(const HomogeneousForm& a, const HomogeneousForm& b) {
        if (a.degree_ != b.degree_) throw InvalidInput("degree mismatch in form arithmetic");
    }

    unsigned degree_ = 0;
    RationalVector coeffs_;
};

/// Element of S = K[x0, x1].
using BinaryForm = HomogeneousForm<PrimalSide>;
/// Element of T = K[y0, y1], acting on S by differentiation.
using DualForm = HomogeneousForm<DualSide>;

/// a*x0 + b*x1, stored as a primitive integer pair with positive first nonzero entry.
class LinearForm {
public:
    LinearForm(const Rational& a, const Rational& b);

    [[nodiscard]] const Rational& a() const { return a_; }
    [[nodiscard]] const Rational& b() const { return b_; }
    [[nodiscard]] BinaryForm as_form() const { return {1, {a_, b_}}; }
    /// b*y0 - a*y1, the dual linear form vanishing at [a:b].
    [[nodiscard]] DualForm annihilator() const { return {1, {b_, -a_}}; }
    [[nodiscard]] std::string to_string() const { return as_form().to_string(); }

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
    friend auto operator<=>(const LinearForm& l, const LinearForm& r) {
        if (auto c = cmp(l.a_, r.a_); c != 0) return c <=> 0;
        return cmp(l.b_, r.b_) <=> 0;
    }

private:
    Rational a_, b_;
};

/// A point [p:q] of the projective line, either exact (rational, primitive
/// integer normalized) or numeric (unit norm, first nonzero coordinate real
/// positive).
class ProjectivePoint {
public:
    using Complex = std::complex<double>;

    static ProjectivePoint exact(const Rational& p, const Rational& q);
    static ProjectivePoint numeric(Complex p, Complex q);

    [[nodiscard]] bool is_exact() const { return exact_; }
    /// Requires is_exact().
    [[nodiscard]] const Rational& p() const;
    [[nodiscard]] const Rational& q() const;
    /// Numeric coordinates (exact points are converted and normalized).
    [[nodiscard]] std::pair<Complex, Complex> coords() const { return {np_, nq_}; }

    /// Root [p:q] corresponds to the linear form p*x0 + q*x1.
    [[nodiscard]] LinearForm linear_form() const { return {p(), q()}; }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const ProjectivePoint& l, const ProjectivePoint& r) {
        if (l.exact_ != r.exact_) return false;
        if (l.exact_) return l.p_ == r.p_ && l.q_ == r.q_;
        return l.np_ == r.np_ && l.nq_ == r.nq_;
    }

private:
    ProjectivePoint() = default;
    bool exact_ = false;
    Rational p_, q_;
    Complex np_, nq_;
};

/// Sum of c_j * (a_j x0 + b_j x1)^d, expanded exactly.
BinaryForm expand_power_sum(unsigned d, const std::vector<std::pair<LinearForm, Rational>>& terms);

/// D o f under the differentiation action; result has degree d - k.
BinaryForm apolar_apply(const DualForm& D, const BinaryForm& f);

/// True iff D has deg D distinct projective roots.
bool squarefree_test(const DualForm& D);

/// Homogeneous gcd, primitive integer coefficients with positive leading entry.
DualForm form_gcd(const DualForm& D1, const DualForm& D2);

/// Gcd of several forms; zero forms are skipped. At least one must be nonzero.
DualForm form_gcd(const std::vector<DualForm>& forms);

}  // namespace apolar
