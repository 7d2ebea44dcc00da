#include "apolar/decomposer.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <numbers>
#include <stdexcept>

namespace apolar {

namespace {

using LComplex = std::complex<long double>;

Integer abs_int(const Integer& n) { return n < 0 ? Integer(-n) : n; }

/// Primitive integer coefficients of p (low to high).
std::vector<Integer> integer_coeffs(const UnivariatePolynomial& p) {
    auto prim = primitive_normalize(p.coeffs());
    std::vector<Integer> out;
    out.reserve(prim.size());
    for (const auto& c : prim) out.push_back(c.get_num());
    return out;
}

/// All positive divisors of n, or nullopt when n exceeds the trial-division range.
std::optional<std::vector<Integer>> small_divisors(const Integer& n) {
    static const Integer limit("1000000000000");
    if (n > limit || n <= 0) return std::nullopt;
    unsigned long long v = n.get_ui();
    std::vector<std::pair<unsigned long long, int>> factors;
    for (unsigned long long p = 2; p * p <= v; ++p) {
        int e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        if (e > 0) factors.emplace_back(p, e);
    }
    if (v > 1) factors.emplace_back(v, 1);
    std::vector<Integer> divs{1};
    for (auto [p, e] : factors) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= static_cast<unsigned long>(p);
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    return divs;
}

/// Evaluates sum a_i num^i den^(n-i); zero iff num/den is a root.
bool is_root(const std::vector<Integer>& a, const Integer& num, const Integer& den) {
    Integer acc = 0;
    Integer num_pow = 1;
    const std::size_t n = a.size() - 1;
    std::vector<Integer> den_pow(n + 1);
    den_pow[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) den_pow[i] = den_pow[i - 1] * den;
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] != 0) acc += a[i] * num_pow * den_pow[n - i];
        num_pow *= num;
    }
    return acc == 0;
}

LComplex horner(const std::vector<LComplex>& c, LComplex z, LComplex* deriv) {
    LComplex p = 0;
    LComplex dp = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dp = dp * z + p;
        p = p * z + *it;
    }
    if (deriv != nullptr) *deriv = dp;
    return p;
}

std::vector<LComplex> to_complex(const UnivariatePolynomial& p) {
    Rational scale = 0;
    for (const auto& c : p.coeffs()) scale = std::max<Rational>(scale, abs(c));
    if (scale == 0) scale = 1;
    std::vector<LComplex> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        // divide in exact arithmetic first so huge coefficients stay representable
        Rational scaled = c / scale;
        out.emplace_back(static_cast<long double>(scaled.get_d()), 0.0L);
    }
    return out;
}

/// Simultaneous Aberth-Ehrlich iteration on a polynomial of degree >= 1,
/// followed by Newton polishing. Sweeps stop at max_iterations.
std::vector<LComplex> aberth_roots(const UnivariatePolynomial& poly) {
    auto c = to_complex(poly);
    const int n = poly.degree();
    const LComplex lead = c.back();
    for (auto& x : c) x /= lead;
    // Fujiwara bound: every root has modulus below 2 max |c_{n-i}|^(1/i)
    long double radius = 0;
    for (int i = 1; i <= n; ++i) {
        long double m = std::abs(c[static_cast<std::size_t>(n - i)]);
        if (m > 0) radius = std::max(radius, std::pow(m, 1.0L / static_cast<long double>(i)));
    }
    radius = radius > 0 ? 2 * radius : 1;
    std::vector<LComplex> z(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        long double angle = 2 * std::numbers::pi_v<long double> * j / n + 0.4L;
        z[static_cast<std::size_t>(j)] = std::polar(radius * (1.0L + 0.01L * j / n), angle);
    }
    constexpr int max_iterations = 2000;
    bool converged = false;
    for (int iter = 0; iter < max_iterations && !converged; ++iter) {
        converged = true;
        for (std::size_t i = 0; i < z.size(); ++i) {
            LComplex dp;
            LComplex p = horner(c, z[i], &dp);
            if (p == LComplex(0)) continue;
            LComplex ratio = p / dp;
            LComplex s = 0;
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != i) s += 1.0L / (z[i] - z[j]);
            LComplex w = ratio / (1.0L - ratio * s);
            if (!std::isfinite(std::abs(w))) continue;
            z[i] -= w;
            if (std::abs(w) > 1e-15L * (1.0L + std::abs(z[i]))) converged = false;
        }
    }
    // Stagnation is not fatal here; callers verify residuals.
    for (auto& zi : z) {
        for (int it = 0; it < 3; ++it) {
            LComplex dp;
            LComplex p = horner(c, zi, &dp);
            if (dp == LComplex(0)) break;
            LComplex step = p / dp;
            if (!std::isfinite(std::abs(step))) break;
            zi -= step;
        }
    }
    return z;
}

/// Continued-fraction convergents of x with denominators up to `max_den`.
std::vector<Rational> convergents(long double x, const Integer& max_den) {
    std::vector<Rational> out;
    Integer h_prev = 0, k_prev = 1;  // h_{-2}/k_{-2}
    Integer h = 1, k = 0;            // h_{-1}/k_{-1}
    long double rem = x;
    for (int iter = 0; iter < 64; ++iter) {
        long double a_ld = std::floor(rem);
        if (std::fabs(a_ld) > 1e18L) break;
        Integer a(static_cast<double>(a_ld));
        Integer h_next = a * h + h_prev;
        Integer k_next = a * k + k_prev;
        if (abs_int(k_next) > max_den) break;
        h_prev = h;
        k_prev = k;
        h = h_next;
        k = k_next;
        out.emplace_back(h, k);
        out.back().canonicalize();
        long double frac = rem - a_ld;
        if (frac < 1e-30L) break;
        rem = 1.0L / frac;
    }
    return out;
}

void sort_points(std::vector<ProjectivePoint>& pts) {
    std::stable_sort(pts.begin(), pts.end(), [](const ProjectivePoint& a, const ProjectivePoint& b) {
        if (a.is_exact() != b.is_exact()) return a.is_exact();
        if (a.is_exact()) {
            if (a.p() != b.p()) return a.p() < b.p();
            return a.q() < b.q();
        }
        auto [ap, aq] = a.coords();
        auto [bp, bq] = b.coords();
        // numeric roots are affine ([t:1] normalized); order by arg t, then |t|
        Complex ta = ap / aq;
        Complex tb = bp / bq;
        double ga = std::arg(ta), gb = std::arg(tb);
        if (ga != gb) return ga < gb;
        return std::abs(ta) < std::abs(tb);
    });
}

std::pair<Complex, Complex> linear_coords(const ProjectivePoint& pt) {
    if (pt.is_exact()) return {Complex(pt.p().get_d()), Complex(pt.q().get_d())};
    return pt.coords();
}

/// Coefficient vector of (p x0 + q x1)^d.
std::vector<Complex> numeric_power(unsigned d, Complex p, Complex q) {
    std::vector<Complex> out(d + 1);
    for (unsigned m = 0; m <= d; ++m)
        out[m] = binomial(d, m).get_d() * std::pow(p, static_cast<int>(d - m)) * std::pow(q, static_cast<int>(m));
    return out;
}

double relative_deviation(const BinaryForm& f, const std::vector<Complex>& recon) {
    double scale = 0;
    double dev = 0;
    for (unsigned m = 0; m <= f.degree(); ++m) {
        scale = std::max(scale, std::fabs(f[m].get_d()));
        dev = std::max(dev, std::abs(recon[m] - Complex(f[m].get_d())));
    }
    return scale > 0 ? dev / scale : dev;
}

std::vector<ProjectivePoint> small_rational_points(int height) {
    std::vector<ProjectivePoint> pts;
    for (int h = 1; h <= height; ++h) {
        for (int p = 0; p <= h; ++p) {
            for (int q = -h; q <= h; ++q) {
                if (std::max(p, std::abs(q)) != h) continue;
                if (std::gcd(p, std::abs(q)) != 1) continue;
                if (p == 0 && q != 1) continue;
                pts.push_back(ProjectivePoint::exact(p, q));
            }
        }
    }
    return pts;
}

bool splits_over_q(const DualForm& D) {
    if (!squarefree_test(D)) return false;
    const unsigned at_infinity = D.v1_order();
    return at_infinity + rational_roots(D.dehomogenize()).size() == D.degree();
}

/// A squarefree element of a pencil that splits over Q, found by forcing a
/// root at each small rational point in turn.
std::optional<DualForm> exact_pencil_witness(const GradedSubspace& space, int height) {
    if (space.dim() != 2) return std::nullopt;
    const auto basis = space.dual_basis();
    for (const auto& pt : small_rational_points(height)) {
        Rational u = basis[0].evaluate(pt.p(), pt.q());
        Rational v = basis[1].evaluate(pt.p(), pt.q());
        if (u == 0 && v == 0) continue;
        DualForm D = v * basis[0] - u * basis[1];
        if (splits_over_q(D)) return D.normalized();
    }
    return std::nullopt;
}

}  // namespace

bool RootSet::all_exact() const {
    return std::all_of(points.begin(), points.end(), [](const ProjectivePoint& p) { return p.is_exact(); });
}

std::vector<LinearForm> Decomposition::linear_forms() const {
    if (!exact) throw InvalidInput("numeric decomposition has no exact linear forms");
    std::vector<LinearForm> out;
    for (const auto& p : points) out.push_back(p.linear_form());
    return out;
}

std::vector<Rational> rational_roots(const UnivariatePolynomial& p) {
    std::vector<Rational> roots;
    if (p.degree() <= 0) return roots;
    RationalVector c = p.coeffs();
    if (c.front() == 0) {
        roots.emplace_back(0);
        auto nz = std::find_if(c.begin(), c.end(), [](const Rational& x) { return x != 0; });
        c.erase(c.begin(), nz);
    }
    UnivariatePolynomial q(c);
    if (q.degree() <= 0) return roots;
    auto a = integer_coeffs(q);
    auto try_root = [&](const Integer& num, const Integer& den) {
        Rational r(num, den);
        r.canonicalize();
        if (std::find(roots.begin(), roots.end(), r) != roots.end()) return;
        if (is_root(a, r.get_num(), r.get_den())) roots.push_back(r);
    };

    auto divs0 = small_divisors(abs_int(a.front()));
    auto divsn = small_divisors(abs_int(a.back()));
    if (divs0 && divsn && divs0->size() * divsn->size() <= 20000) {
        for (const auto& num : *divs0)
            for (const auto& den : *divsn) {
                try_root(num, den);
                try_root(-num, den);
            }
    } else {
        const Integer max_den = abs_int(a.back());
        for (const auto& z : aberth_roots(q)) {
            if (std::fabs(z.imag()) > 1e-6L * std::max<long double>(1.0L, std::abs(z))) continue;
            for (const auto& cand : convergents(z.real(), max_den)) try_root(cand.get_num(), cand.get_den());
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

RootSet binary_form_roots(const DualForm& D, double tol) {
    if (D.is_zero()) throw InvalidInput("binary_form_roots: zero form");
    if (!squarefree_test(D))
        throw InvalidInput("binary_form_roots: " + D.to_string() + " has a repeated root");
    RootSet out;
    if (D.degree() == 0) return out;
    if (D.v1_order() == 1) out.points.push_back(ProjectivePoint::exact(1, 0));

    UnivariatePolynomial g = D.dehomogenize();
    UnivariatePolynomial rest = g;
    for (const auto& r : rational_roots(g)) {
        out.points.push_back(ProjectivePoint::exact(r, 1));
        rest = divmod(rest, UnivariatePolynomial({-r, Rational(1)})).first;
    }
    if (rest.degree() == 1) {
        Rational r = -rest.coeff(0) / rest.coeff(1);
        out.points.push_back(ProjectivePoint::exact(r, 1));
        rest = UnivariatePolynomial({Rational(1)});
    }

    if (rest.degree() >= 2) {
        auto roots = aberth_roots(rest);
        // polish once more against the full dehomogenized form
        auto full = to_complex(g);
        for (auto& z : roots) {
            LComplex dp;
            LComplex p = horner(full, z, &dp);
            if (dp != LComplex(0)) {
                LComplex step = p / dp;
                if (std::isfinite(std::abs(step)) && std::abs(step) < 1e-6L * (1 + std::abs(z))) z -= step;
            }
            // real coefficients: a root this close to the real axis is real
            if (std::fabs(z.imag()) <= 1e-12L * (1 + std::abs(z))) z = LComplex(z.real(), 0);
            out.points.push_back(ProjectivePoint::numeric(Complex(static_cast<double>(z.real()), static_cast<double>(z.imag())),
                                                          Complex(1.0)));
        }
        double scale = 0;
        for (const auto& c : D.coeffs()) scale = std::max(scale, std::fabs(c.get_d()));
        for (const auto& pt : out.points) {
            if (pt.is_exact()) continue;
            auto [p, q] = pt.coords();
            out.residual = std::max(out.residual, std::abs(D.evaluate(p, q)) / scale);
        }
        if (!(out.residual < tol))
            throw NumericFailure("root residual " + std::to_string(out.residual) + " exceeds tolerance " +
                                 std::to_string(tol));
        for (std::size_t i = 0; i < out.points.size(); ++i)
            for (std::size_t j = i + 1; j < out.points.size(); ++j) {
                auto [pi, qi] = out.points[i].coords();
                auto [pj, qj] = out.points[j].coords();
                if (std::abs(pi * qj - pj * qi) < 1e-12) {
                    out.multiplicity_free = false;
                    throw NumericFailure("numeric roots failed to separate");
                }
            }
    }
    sort_points(out.points);
    return out;
}

CoefficientSolution solve_coefficients(const std::vector<BinaryForm>& forms, const std::vector<ProjectivePoint>& roots) {
    if (forms.empty()) throw InvalidInput("solve_coefficients: no forms");
    const unsigned d = forms.front().degree();
    for (const auto& f : forms)
        if (f.degree() != d) throw InvalidInput("forms must share one degree");
    const std::size_t k = roots.size();
    if (k == 0) throw InvalidInput("solve_coefficients: no roots");
    if (k > d + 1) throw InvalidInput("solve_coefficients: more than d+1 points");
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            auto [pi, qi] = linear_coords(roots[i]);
            auto [pj, qj] = linear_coords(roots[j]);
            bool same = roots[i].is_exact() && roots[j].is_exact() ? roots[i] == roots[j]
                                                                    : std::abs(pi * qj - pj * qi) < 1e-12;
            if (same) throw InvalidInput("solve_coefficients: repeated point " + roots[i].to_string());
        }

    CoefficientSolution sol;
    const bool exact = std::all_of(roots.begin(), roots.end(), [](const ProjectivePoint& p) { return p.is_exact(); });
    if (exact) {
        RationalMatrix v(d + 1, k);
        for (std::size_t j = 0; j < k; ++j) {
            auto power = expand_power_sum(d, {{roots[j].linear_form(), Rational(1)}});
            for (unsigned m = 0; m <= d; ++m) v(m, j) = power[m];
        }
        sol.exact = true;
        sol.exact_coefficients = RationalMatrix(forms.size(), k);
        for (std::size_t i = 0; i < forms.size(); ++i) {
            auto x = solve_linear(v, forms[i].coeffs());
            if (!x) throw std::logic_error("coefficient system is inconsistent: the witness is not apolar to form " +
                                           std::to_string(i + 1));
            std::vector<Complex> row;
            for (std::size_t j = 0; j < k; ++j) {
                sol.exact_coefficients(i, j) = (*x)[j];
                row.emplace_back((*x)[j].get_d());
            }
            sol.numeric_coefficients.push_back(std::move(row));
        }
        sol.residual = 0.0;
        return sol;
    }

    Eigen::MatrixXcd v(d + 1, static_cast<Eigen::Index>(k));
    std::vector<std::vector<Complex>> powers;
    for (std::size_t j = 0; j < k; ++j) {
        auto [p, q] = linear_coords(roots[j]);
        powers.push_back(numeric_power(d, p, q));
        for (unsigned m = 0; m <= d; ++m) v(m, static_cast<Eigen::Index>(j)) = powers.back()[m];
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(v);
    const bool real_points = v.imag().isZero(0.0);
    for (const auto& f : forms) {
        Eigen::VectorXcd b(d + 1);
        for (unsigned m = 0; m <= d; ++m) b(m) = f[m].get_d();
        Eigen::VectorXcd x = qr.solve(b);
        if (real_points) x = x.real().cast<Complex>();
        std::vector<Complex> row(x.data(), x.data() + x.size());
        std::vector<Complex> recon(d + 1);
        for (std::size_t j = 0; j < k; ++j)
            for (unsigned m = 0; m <= d; ++m) recon[m] += row[j] * powers[j][m];
        sol.residual = std::max(sol.residual, relative_deviation(f, recon));
        sol.numeric_coefficients.push_back(std::move(row));
    }
    return sol;
}

Decomposition decompose_with_witness(const std::vector<BinaryForm>& forms, const DualForm& D, const Tolerances& tol) {
    require_independent(forms);
    const unsigned d = forms.front().degree();
    if (D.is_zero()) throw InvalidInput("witness is the zero form");
    if (D.degree() > d + 1) throw InvalidInput("witness degree exceeds d+1");
    if (D.degree() <= d)
        for (std::size_t i = 0; i < forms.size(); ++i)
            if (!apolar_apply(D, forms[i]).is_zero())
                throw InvalidInput("witness " + D.to_string() + " is not apolar to form " + std::to_string(i + 1));
    if (!squarefree_test(D))
        throw InvalidInput("witness " + D.to_string() +
                           " has a repeated root; decompositions on the boundary of VSSP are not supported");
    auto roots = binary_form_roots(D, tol.root);
    auto sol = solve_coefficients(forms, roots.points);
    Decomposition dec;
    dec.degree = d;
    dec.witness = D.normalized();
    dec.points = roots.points;
    dec.exact = sol.exact;
    dec.exact_coefficients = sol.exact_coefficients;
    dec.numeric_coefficients = sol.numeric_coefficients;
    dec.reconstruction_residual = sol.residual;
    auto report = verify_decomposition(forms, dec, tol.reconstruction);
    if (!report.passed)
        throw NumericFailure("reconstruction residual " + std::to_string(report.max_deviation) +
                             " exceeds tolerance " + std::to_string(tol.reconstruction));
    return dec;
}

DecomposeResult decompose(const std::vector<BinaryForm>& forms, unsigned k, const DecomposeOptions& options) {
    DecomposeResult out;
    out.vsps = vsps(forms, k, options.witness);
    if (!out.vsps.vssp_nonempty) return out;
    DualForm witness = *out.vsps.squarefree_witness;
    if (options.prefer_exact && !splits_over_q(witness)) {
        if (auto exact = exact_pencil_witness(out.vsps.space, options.exact_search_height)) witness = *exact;
    }
    out.decomposition = decompose_with_witness(forms, witness, options.tol);
    return out;
}

VerificationReport verify_decomposition(const std::vector<BinaryForm>& forms, const Decomposition& dec, double tol) {
    VerificationReport rep;
    rep.exact = dec.exact;
    const std::size_t k = dec.points.size();
    bool shape_ok = !forms.empty() && dec.numeric_coefficients.size() == forms.size();
    for (const auto& f : forms) shape_ok = shape_ok && f.degree() == dec.degree;
    for (const auto& row : dec.numeric_coefficients) shape_ok = shape_ok && row.size() == k;
    if (dec.exact)
        shape_ok = shape_ok && dec.exact_coefficients.rows() == forms.size() && dec.exact_coefficients.cols() == k;
    if (!shape_ok) {
        rep.max_deviation = std::numeric_limits<double>::infinity();
        return rep;
    }

    if (dec.exact) {
        bool all_equal = true;
        for (std::size_t i = 0; i < forms.size(); ++i) {
            std::vector<std::pair<LinearForm, Rational>> terms;
            for (std::size_t j = 0; j < k; ++j) terms.emplace_back(dec.points[j].linear_form(), dec.exact_coefficients(i, j));
            BinaryForm recon = expand_power_sum(dec.degree, terms);
            if (recon == forms[i]) continue;
            all_equal = false;
            std::vector<Complex> r(dec.degree + 1);
            for (unsigned m = 0; m <= dec.degree; ++m) r[m] = recon[m].get_d();
            double dev = relative_deviation(forms[i], r);
            // an exact mismatch is never reported as zero deviation
            rep.max_deviation = std::max(rep.max_deviation, dev > 0 ? dev : std::numeric_limits<double>::min());
        }
        rep.passed = all_equal;
        return rep;
    }

    for (std::size_t i = 0; i < forms.size(); ++i) {
        std::vector<Complex> recon(dec.degree + 1);
        for (std::size_t j = 0; j < k; ++j) {
            auto [p, q] = linear_coords(dec.points[j]);
            auto power = numeric_power(dec.degree, p, q);
            for (unsigned m = 0; m <= dec.degree; ++m) recon[m] += dec.numeric_coefficients[i][j] * power[m];
        }
        rep.max_deviation = std::max(rep.max_deviation, relative_deviation(forms[i], recon));
    }
    rep.passed = rep.max_deviation < tol;
    return rep;
}

}  // namespace apolar
