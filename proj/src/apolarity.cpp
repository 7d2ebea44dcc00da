#include "apolar/apolarity.hpp"

#include "apolar/random.hpp"

#include <stdexcept>

namespace apolar {

DualForm GradedSubspace::dual_element(std::size_t i) const { return {degree, basis.vectors().at(i)}; }

BinaryForm GradedSubspace::primal_element(std::size_t i) const { return {degree, basis.vectors().at(i)}; }

std::vector<DualForm> GradedSubspace::dual_basis() const {
    std::vector<DualForm> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(dual_element(i));
    return out;
}

bool GradedSubspace::contains(const DualForm& D) const {
    return side == Side::T && D.degree() == degree && basis.contains(D.coeffs());
}

bool GradedSubspace::contains(const BinaryForm& f) const {
    return side == Side::S && f.degree() == degree && basis.contains(f.coeffs());
}

RationalMatrix catalecticant_matrix(const BinaryForm& f, unsigned k) {
    const unsigned d = f.degree();
    if (k > d) throw InvalidInput("catalecticant: k = " + std::to_string(k) + " exceeds degree " + std::to_string(d));
    RationalMatrix m(d - k + 1, k + 1);
    for (unsigned row = 0; row <= d - k; ++row) {
        for (unsigned j = 0; j <= k; ++j) {
            const unsigned i = row + j;
            if (f[i] == 0) continue;
            m(row, j) = f[i] * Rational(falling_factorial(d - i, k - j) * falling_factorial(i, j));
        }
    }
    return m;
}

GradedSubspace orthogonal_component(const BinaryForm& f, unsigned k) {
    if (f.is_zero()) throw InvalidInput("orthogonal_component: zero form");
    return {Side::T, k, kernel(catalecticant_matrix(f, k))};
}

GradedSubspace inverse_system_component(const DualForm& D, unsigned d) {
    if (D.is_zero()) throw InvalidInput("inverse_system_component: zero form");
    const unsigned k = D.degree();
    if (k > d) throw InvalidInput("inverse_system_component: dual degree exceeds d");
    RationalMatrix m(d - k + 1, d + 1);
    for (unsigned i = 0; i <= d; ++i) {
        auto image = apolar_apply(D, BinaryForm::monomial(d, i));
        for (unsigned row = 0; row <= d - k; ++row) m(row, i) = image[row];
    }
    return {Side::S, d, kernel(m)};
}

GradedSubspace graded_intersection(const std::vector<BinaryForm>& forms, unsigned k) {
    if (forms.empty()) throw InvalidInput("need at least one form");
    const unsigned d = forms.front().degree();
    for (const auto& f : forms)
        if (f.degree() != d) throw InvalidInput("forms must share one degree");
    if (k > d) return {Side::T, k, SubspaceBasis::full(k + 1)};
    std::vector<SubspaceBasis> parts;
    parts.reserve(forms.size());
    for (const auto& f : forms) parts.push_back(kernel(catalecticant_matrix(f, k)));
    return {Side::T, k, intersect_subspaces(parts)};
}

void require_independent(const std::vector<BinaryForm>& forms) {
    if (forms.empty()) throw InvalidInput("need at least one form");
    const unsigned d = forms.front().degree();
    std::vector<RationalVector> rows;
    for (const auto& f : forms) {
        if (f.degree() != d) throw InvalidInput("forms must share one degree");
        rows.push_back(f.coeffs());
    }
    const auto r = rank(RationalMatrix::from_rows(rows, d + 1));
    if (r != forms.size())
        throw InvalidInput("the " + std::to_string(forms.size()) + " forms are linearly dependent (rank " +
                           std::to_string(r) + "); the problem reduces to " + std::to_string(r) +
                           " independent forms, pass a basis of their span instead");
}

namespace {

bool try_candidate(const GradedSubspace& space, const RationalVector& weights, WitnessSearch& out) {
    RationalVector v = space.basis.combine(weights);
    if (is_zero(v)) return false;
    ++out.candidates_tested;
    DualForm D(space.degree, std::move(v));
    if (!squarefree_test(D)) return false;
    out.witness = D.normalized();
    return true;
}

// Enumerates {0..side-1}^dim \ {0}; stops at the first squarefree element.
bool exhaustive_grid(const GradedSubspace& space, std::int64_t side, WitnessSearch& out) {
    const std::size_t dim = space.dim();
    std::vector<std::int64_t> idx(dim, 0);
    while (true) {
        std::size_t pos = 0;
        while (pos < dim && ++idx[pos] == side) idx[pos++] = 0;
        if (pos == dim) return false;
        RationalVector w(dim);
        for (std::size_t i = 0; i < dim; ++i) w[i] = static_cast<long>(idx[i]);
        if (try_candidate(space, w, out)) return true;
    }
}

}  // namespace

WitnessSearch find_squarefree_witness(const GradedSubspace& space, const WitnessOptions& options) {
    if (space.side != Side::T) throw InvalidInput("witness search runs on subspaces of T");
    const std::size_t dim = space.dim();
    if (dim == 0) throw InvalidInput("witness search on the zero subspace");
    const unsigned k = space.degree;
    WitnessSearch out;

    if (dim == 1) {
        out.method = "single generator";
        if (!try_candidate(space, {Rational(1)}, out)) out.proven_absent = true;
        return out;
    }

    // A nonzero discriminant restricted to the span has degree <= 2k-2, so
    // 2k-1 distinct pencil points (or a grid of side 2k-1) cannot all miss it.
    const std::int64_t side = 2 * static_cast<std::int64_t>(k) - 1;

    if (dim == 2) {
        out.method = "pencil sweep";
        if (try_candidate(space, {Rational(1), Rational(0)}, out)) return out;
        for (std::int64_t s = 0; s < side - 1; ++s)
            if (try_candidate(space, {Rational(static_cast<long>(s)), Rational(1)}, out)) return out;
        out.proven_absent = true;
        return out;
    }

    out.method = "random search";
    for (std::size_t i = 0; i < dim; ++i) {
        RationalVector w(dim);
        w[i] = 1;
        if (try_candidate(space, w, out)) return out;
    }
    SplitMix64 rng(derive_seed(options.seed, {k, dim}));
    std::int64_t bound = std::max<std::int64_t>(options.coeff_bound, 1);
    for (std::size_t t = 0; t < options.budget; ++t) {
        if (t > 0 && t % 32 == 0 && bound < (std::int64_t{1} << 20)) bound *= 2;
        RationalVector w(dim);
        for (auto& x : w) x = static_cast<long>(rng.uniform(-bound, bound));
        if (try_candidate(space, w, out)) return out;
    }

    double grid = 1.0;
    for (std::size_t i = 0; i < dim; ++i) grid *= static_cast<double>(side);
    if (grid <= static_cast<double>(options.exhaustive_cap)) {
        out.method = "exhaustive grid";
        if (exhaustive_grid(space, side, out)) return out;
        out.proven_absent = true;
    }
    return out;
}

VspsResult vsps(const std::vector<BinaryForm>& forms, unsigned k, const WitnessOptions& options) {
    require_independent(forms);
    const unsigned d = forms.front().degree();
    if (k < 1 || k > d + 1)
        throw InvalidInput("vsps: k must lie in [1, " + std::to_string(d + 1) + "], got " + std::to_string(k));
    VspsResult res;
    res.k = k;
    res.space = graded_intersection(forms, k);
    res.projective_dim = res.space.projective_dim();
    if (res.space.dim() == 0) {
        res.vssp_empty_proven = true;
        res.witness_method = "vsps empty";
        return res;
    }
    auto search = find_squarefree_witness(res.space, options);
    res.squarefree_witness = search.witness;
    res.vssp_nonempty = search.witness.has_value();
    res.vssp_empty_proven = search.proven_absent;
    res.witness_method = search.method;
    return res;
}

KminResult compute_kmin(const std::vector<BinaryForm>& forms, const WitnessOptions& options) {
    require_independent(forms);
    const unsigned d = forms.front().degree();
    KminResult out;
    for (unsigned k = 1; k <= d; ++k) {
        auto res = vsps(forms, k, options);
        if (res.vssp_nonempty) {
            out.k = k;
            out.witness = *res.squarefree_witness;
            return out;
        }
        if (!res.vssp_empty_proven) out.lower_degrees_certified = false;
    }
    // Every dual form of degree d+1 annihilates S_d; take d+1 distinct points.
    DualForm w = DualForm::monomial(0, 0);
    for (unsigned j = 0; j <= d; ++j) w = w * DualForm(1, {Rational(1), Rational(-static_cast<long>(j))});
    out.k = d + 1;
    out.witness = w.normalized();
    out.extended = true;
    return out;
}

unsigned kmin_formula(unsigned d, unsigned r) {
    if (d < 1) throw InvalidInput("kmin_formula: d must be >= 1");
    if (r < 1 || r > d + 1)
        throw InvalidInput("kmin_formula: r must lie in [1, d+1], got r = " + std::to_string(r));
    return (r * (d + 1) - 1) / (r + 1) + 1;
}

unsigned epsilon_class(unsigned d, unsigned r) { return (r * (d + 1)) % (r + 1); }

std::optional<int> vssp_dim_formula(unsigned d, unsigned r, unsigned k) {
    const unsigned kmin = kmin_formula(d, r);
    if (k < kmin) return std::nullopt;
    const int dim = static_cast<int>(k * (r + 1)) - static_cast<int>(r * (d + 1));
    if (k == kmin) {
        const unsigned eps = epsilon_class(d, r);
        const int expected = eps != 0 ? static_cast<int>(r + 1 - eps) : 0;
        if (dim != expected) throw std::logic_error("vssp_dim_formula: epsilon refinement disagrees");
    }
    return dim;
}

}  // namespace apolar
