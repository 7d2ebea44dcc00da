#include "apolar/forms.hpp"

#include <cmath>
#include <sstream>

namespace apolar {

LinearForm::LinearForm(const Rational& a, const Rational& b) {
    if (a == 0 && b == 0) throw InvalidInput("zero linear form");
    auto n = primitive_normalize({a, b});
    a_ = n[0];
    b_ = n[1];
}

ProjectivePoint ProjectivePoint::exact(const Rational& p, const Rational& q) {
    if (p == 0 && q == 0) throw InvalidInput("[0:0] is not a projective point");
    auto n = primitive_normalize({p, q});
    ProjectivePoint pt;
    pt.exact_ = true;
    pt.p_ = n[0];
    pt.q_ = n[1];
    double norm = std::hypot(pt.p_.get_d(), pt.q_.get_d());
    pt.np_ = pt.p_.get_d() / norm;
    pt.nq_ = pt.q_.get_d() / norm;
    return pt;
}

ProjectivePoint ProjectivePoint::numeric(Complex p, Complex q) {
    double norm = std::sqrt(std::norm(p) + std::norm(q));
    if (norm == 0.0 || !std::isfinite(norm)) throw InvalidInput("[0:0] is not a projective point");
    p /= norm;
    q /= norm;
    Complex lead = p != Complex(0.0) ? p : q;
    Complex phase = std::conj(lead) / std::abs(lead);
    ProjectivePoint pt;
    pt.np_ = p * phase;
    pt.nq_ = q * phase;
    // the leading coordinate is real positive by construction
    if (p != Complex(0.0)) pt.np_ = std::abs(pt.np_);
    else pt.nq_ = std::abs(pt.nq_);
    return pt;
}

const Rational& ProjectivePoint::p() const {
    if (!exact_) throw InvalidInput("numeric point has no exact coordinates");
    return p_;
}

const Rational& ProjectivePoint::q() const {
    if (!exact_) throw InvalidInput("numeric point has no exact coordinates");
    return q_;
}

std::string ProjectivePoint::to_string() const {
    if (exact_) return "[" + apolar::to_string(p_) + ":" + apolar::to_string(q_) + "]";
    std::ostringstream os;
    os.precision(12);
    auto put = [&os](Complex z) {
        os << z.real();
        if (z.imag() != 0.0) os << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    };
    os << "[";
    put(np_);
    os << ":";
    put(nq_);
    os << "]";
    return os.str();
}

BinaryForm expand_power_sum(unsigned d, const std::vector<std::pair<LinearForm, Rational>>& terms) {
    if (d == 0) throw InvalidInput("power sums need degree >= 1");
    auto f = BinaryForm::zero(d);
    RationalVector acc(d + 1);
    for (const auto& [l, c] : terms) {
        for (unsigned i = 0; i <= d; ++i) {
            Rational term = c * Rational(binomial(d, i));
            for (unsigned e = 0; e < d - i; ++e) term *= l.a();
            for (unsigned e = 0; e < i; ++e) term *= l.b();
            acc[i] += term;
        }
    }
    return {d, std::move(acc)};
}

BinaryForm apolar_apply(const DualForm& D, const BinaryForm& f) {
    const unsigned k = D.degree();
    const unsigned d = f.degree();
    if (k > d) throw InvalidInput("apolar_apply: dual degree " + std::to_string(k) + " exceeds form degree " +
                                  std::to_string(d));
    RationalVector out(d - k + 1);
    for (unsigned j = 0; j <= k; ++j) {
        if (D[j] == 0) continue;
        const unsigned p = k - j;  // y0 exponent
        const unsigned q = j;      // y1 exponent
        for (unsigned i = q; i <= d && d - i >= p; ++i) {
            if (f[i] == 0) continue;
            Integer scale = falling_factorial(d - i, p) * falling_factorial(i, q);
            out[i - q] += D[j] * f[i] * Rational(scale);
        }
    }
    return {d - k, std::move(out)};
}

bool squarefree_test(const DualForm& D) {
    if (D.is_zero()) throw InvalidInput("squarefree_test: zero form");
    if (D.v1_order() > 1) return false;
    UnivariatePolynomial g = D.dehomogenize();
    if (g.degree() <= 0) return true;
    return gcd(g, g.derivative()).degree() == 0;
}

DualForm form_gcd(const DualForm& D1, const DualForm& D2) {
    if (D1.is_zero() && D2.is_zero()) throw InvalidInput("form_gcd: both inputs are zero");
    if (D1.is_zero()) return D2.normalized();
    if (D2.is_zero()) return D1.normalized();
    const unsigned m = std::min(D1.v1_order(), D2.v1_order());
    UnivariatePolynomial g = gcd(D1.dehomogenize(), D2.dehomogenize());
    DualForm affine_part = DualForm::homogenize(g, static_cast<unsigned>(g.degree()));
    return (DualForm::monomial(m, m) * affine_part).normalized();
}

DualForm form_gcd(const std::vector<DualForm>& forms) {
    DualForm acc;
    bool any = false;
    for (const auto& D : forms) {
        if (D.is_zero()) continue;
        acc = any ? form_gcd(acc, D) : D.normalized();
        any = true;
    }
    if (!any) throw InvalidInput("form_gcd: all inputs are zero");
    return acc;
}

}  // namespace apolar
