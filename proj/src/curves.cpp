#include "apolar/curves.hpp"

#include <iterator>

namespace apolar {

namespace {

std::string plane_name(unsigned a) {
    if (a == 1) return "line";
    if (a == 2) return "plane";
    return "P^" + std::to_string(a);
}

std::string describe(unsigned a, unsigned b, std::optional<int> dim) {
    if (!dim) {
        if (a == 0) return "C has no " + multiplicity_name(b) + " points";
        return "no " + std::to_string(b) + "-secant " + plane_name(a);
    }
    if (*dim == 0) {
        if (a == 0) return "C has a unique " + multiplicity_name(b) + " point";
        return "a unique " + std::to_string(b) + "-secant " + plane_name(a) + " when C is smooth";
    }
    if (a == 0) return "a P^" + std::to_string(*dim) + " of " + multiplicity_name(b) + " points";
    return std::to_string(b) + "-secant " + plane_name(a) + "s fill a dense subset of P^" + std::to_string(*dim);
}

}  // namespace

std::string multiplicity_name(unsigned b) {
    static const char* names[] = {"", "simple", "double", "triple", "quadruple", "quintuple", "sextuple"};
    if (b < std::size(names)) return names[b];
    return std::to_string(b) + "-fold";
}

CurveSpec make_curve(unsigned d, unsigned n, std::vector<BinaryForm> center_forms) {
    if (n < 1 || d <= n) throw InvalidInput("curve needs d > n >= 1, got d = " + std::to_string(d) + ", n = " + std::to_string(n));
    if (center_forms.size() != d - n)
        throw InvalidInput("projection center of a degree " + std::to_string(d) + " curve in P^" + std::to_string(n) +
                           " needs " + std::to_string(d - n) + " forms, got " + std::to_string(center_forms.size()));
    for (const auto& f : center_forms)
        if (f.degree() != d) throw InvalidInput("center forms must have degree " + std::to_string(d));
    require_independent(center_forms);
    // l^d lies in the span iff every element of (cap f_i^perp)_d vanishes at l,
    // i.e. iff that space has a common root.
    auto annihilator = graded_intersection(center_forms, d);
    auto common = form_gcd(annihilator.dual_basis());
    if (common.degree() > 0)
        throw InvalidInput("projection center meets the rational normal curve: the dual forms vanish on the roots of " +
                           common.to_string() + ", whose linear forms have pure d-th powers in the span");
    return {d, n, std::move(center_forms)};
}

bool emptiness_bound_check(unsigned d, unsigned n, unsigned a, unsigned b) {
    if (n < 1 || d <= n) throw InvalidInput("emptiness_bound_check needs d > n >= 1");
    return static_cast<long>(b) - static_cast<long>(a) > static_cast<long>(d - n + 1);
}

SecantReport secant_space(const CurveSpec& curve, unsigned a, unsigned b, const WitnessOptions& options) {
    const unsigned d = curve.d, n = curve.n;
    if (emptiness_bound_check(d, n, a, b))
        throw InvalidInput("S^" + std::to_string(a) + "_" + std::to_string(b) + " is empty for every curve since b - a > d - n + 1");
    if (b != a + d - n + 1)
        throw InvalidInput("only the extremal case b - a = d - n + 1 is computable from apolar ideals");
    if (a > n - 1) throw InvalidInput("a must lie in [0, n-1]");

    auto v = vsps(curve.center_forms, b, options);
    SecantReport rep;
    rep.a = a;
    rep.b = b;
    rep.projective_dim = v.projective_dim;
    rep.smooth_part_nonempty = v.vssp_nonempty;
    rep.smooth_part_empty_proven = v.vssp_empty_proven;
    rep.witness = v.squarefree_witness;
    if (v.vssp_nonempty) rep.note = describe(a, b, v.projective_dim);
    else if (v.projective_dim < 0) rep.note = describe(a, b, std::nullopt);
    else if (v.vssp_empty_proven) rep.note = "only non-reduced intersections: the smooth part is empty";
    else rep.note = "no reduced witness found; the smooth part is undecided";
    return rep;
}

std::vector<SecantPrediction> generic_secant_table(unsigned d, unsigned n) {
    if (n < 1 || d <= n) throw InvalidInput("generic_secant_table needs d > n >= 1");
    const unsigned r = d - n;
    std::vector<SecantPrediction> rows;
    for (unsigned a = 0; a < n; ++a) {
        SecantPrediction p;
        p.a = a;
        p.b = a + r + 1;
        p.projective_dim = vssp_dim_formula(d, r, p.b);
        p.note = describe(a, p.b, p.projective_dim);
        rows.push_back(std::move(p));
    }
    return rows;
}

GenericityReport genericity_probe(const CurveSpec& curve, const WitnessOptions& options) {
    GenericityReport rep;
    const auto table = generic_secant_table(curve.d, curve.n);
    for (const auto& pred : table) {
        ProbeRow row;
        row.predicted = pred;
        row.computed = secant_space(curve, pred.a, pred.b, options);
        const auto& c = row.computed;
        const std::string label = "S^" + std::to_string(pred.a) + "_" + std::to_string(pred.b);
        if (!pred.projective_dim) {
            if (c.smooth_part_nonempty)
                row.mismatch = label + " predicted empty but contains " + c.witness->to_string() + " (" + c.note + ")";
            else if (c.projective_dim >= 0)
                row.mismatch = label + " predicted empty but has projective dimension " + std::to_string(c.projective_dim);
        } else if (c.projective_dim > *pred.projective_dim) {
            row.mismatch = label + " has projective dimension " + std::to_string(c.projective_dim) + " > predicted " +
                           std::to_string(*pred.projective_dim);
        } else if (c.smooth_part_empty_proven) {
            row.mismatch = label + " smooth part is empty but predicted nonempty";
        } else if (!c.smooth_part_nonempty) {
            row.inconclusive = true;
        }
        if (!row.mismatch.empty()) rep.non_generic_certified = true;
        if (row.inconclusive) rep.inconclusive = true;
        rep.rows.push_back(std::move(row));
    }
    if (rep.non_generic_certified) rep.verdict = "non-generic (certified)";
    else if (rep.inconclusive) rep.verdict = "inconclusive";
    else rep.verdict = "consistent with generic";
    return rep;
}

}  // namespace apolar
