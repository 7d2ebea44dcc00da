#pragma once

#include "apolar/apolarity.hpp"

#include <optional>
#include <string>
#include <vector>

namespace apolar {

/// Rational curve C in P^n obtained by projecting the degree-d rational normal
/// curve from the span of r = d - n forms of degree d.
struct CurveSpec {
    unsigned d = 0;
    unsigned n = 0;
    std::vector<BinaryForm> center_forms;

    [[nodiscard]] unsigned r() const { return d - n; }
};

/// S^a_b(C) in the extremal case b - a = d - n + 1.
struct SecantReport {
    unsigned a = 0;
    unsigned b = 0;
    /// Projective dimension of S^a_b(C); -1 when empty.
    int projective_dim = -1;
    bool smooth_part_nonempty = false;
    bool smooth_part_empty_proven = false;
    std::optional<DualForm> witness;
    std::string note;
};

/// Closed-form prediction for a generic curve.
struct SecantPrediction {
    unsigned a = 0;
    unsigned b = 0;
    std::optional<int> projective_dim;  // nullopt = empty
    std::string note;
};

struct ProbeRow {
    SecantReport computed;
    SecantPrediction predicted;
    std::string mismatch;  // empty when consistent
    bool inconclusive = false;
};

struct GenericityReport {
    bool non_generic_certified = false;
    bool inconclusive = false;
    std::vector<ProbeRow> rows;
    /// "non-generic (certified)", "consistent with generic" or "inconclusive"
    std::string verdict;
};

/// Validates the projection data. Throws InvalidInput on a wrong form count,
/// dependent forms, or a center that contains a pure power l^d.
CurveSpec make_curve(unsigned d, unsigned n, std::vector<BinaryForm> center_forms);

/// True iff b - a > d - n + 1, where S^a_b(C) is empty for every such curve.
bool emptiness_bound_check(unsigned d, unsigned n, unsigned a, unsigned b);

SecantReport secant_space(const CurveSpec& curve, unsigned a, unsigned b, const WitnessOptions& options = {});

/// Rows a = 0..n-1, b = a + d - n + 1.
std::vector<SecantPrediction> generic_secant_table(unsigned d, unsigned n);

GenericityReport genericity_probe(const CurveSpec& curve, const WitnessOptions& options = {});

/// "double", "triple", ... for b-uple points.
std::string multiplicity_name(unsigned b);

}  // namespace apolar
