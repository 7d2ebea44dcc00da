#pragma once

#include "apolar/apolarity.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace apolar {

using Complex = std::complex<double>;
using ComplexMatrix = std::vector<std::vector<Complex>>;

struct RootSet {
    /// Exact roots first in lex order of (p, q), then numeric roots by angle.
    std::vector<ProjectivePoint> points;
    bool multiplicity_free = true;
    /// max |D(p, q)| over numeric points, D scaled to unit max coefficient and
    /// (p, q) to unit norm; 0 when every root is exact.
    double residual = 0.0;

    [[nodiscard]] bool all_exact() const;
};

struct Tolerances {
    double root = 1e-10;
    double reconstruction = 1e-8;
};

/// Coefficients c_ij with f_i = sum_j c_ij l_j^d.
struct CoefficientSolution {
    bool exact = false;
    RationalMatrix exact_coefficients;  // r x k, set when exact
    ComplexMatrix numeric_coefficients; // r x k, always set
    /// max_i max_m |(sum_j c_ij l_j^d - f_i)_m| / max_m |f_i,m|
    double residual = 0.0;
};

struct Decomposition {
    unsigned degree = 0;
    DualForm witness;
    std::vector<ProjectivePoint> points;  // root [p:q] <-> linear form p x0 + q x1
    bool exact = false;
    RationalMatrix exact_coefficients;
    ComplexMatrix numeric_coefficients;
    double reconstruction_residual = 0.0;

    [[nodiscard]] std::size_t size() const { return points.size(); }
    /// Exact linear forms; throws unless exact.
    [[nodiscard]] std::vector<LinearForm> linear_forms() const;
};

struct VerificationReport {
    bool exact = false;
    double max_deviation = 0.0;
    bool passed = false;
};

struct DecomposeOptions {
    WitnessOptions witness;
    Tolerances tol;
    /// Before the generic witness search, look for an element of the solution
    /// space that splits into rational linear factors (exact path).
    bool prefer_exact = true;
    int exact_search_height = 6;
};

struct DecomposeResult {
    VspsResult vsps;
    std::optional<Decomposition> decomposition;
};

/// Rational roots of p (each once).
std::vector<Rational> rational_roots(const UnivariatePolynomial& p);

/// All deg D projective roots of a squarefree dual form.
RootSet binary_form_roots(const DualForm& D, double tol = Tolerances{}.root);

CoefficientSolution solve_coefficients(const std::vector<BinaryForm>& forms, const std::vector<ProjectivePoint>& roots);

/// Decomposition driven by a given squarefree apolar form D of the system.
Decomposition decompose_with_witness(const std::vector<BinaryForm>& forms, const DualForm& D,
                                     const Tolerances& tol = {});

/// vsps -> witness -> roots -> coefficients -> verification. An absent
/// decomposition mirrors an empty (or unwitnessed) VSSP at this k.
DecomposeResult decompose(const std::vector<BinaryForm>& forms, unsigned k, const DecomposeOptions& options = {});

VerificationReport verify_decomposition(const std::vector<BinaryForm>& forms, const Decomposition& dec,
                                        double tol = Tolerances{}.reconstruction);

}  // namespace apolar
