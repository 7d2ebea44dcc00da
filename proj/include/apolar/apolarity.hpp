#pragma once

#include "apolar/forms.hpp"
#include "apolar/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace apolar {

enum class Side { S, T };

/// A subspace of S_degree or T_degree in monomial coefficient coordinates.
struct GradedSubspace {
    Side side = Side::T;
    unsigned degree = 0;
    SubspaceBasis basis;

    [[nodiscard]] std::size_t dim() const { return basis.dim(); }
    /// dim - 1; -1 stands for the empty projective space.
    [[nodiscard]] int projective_dim() const { return static_cast<int>(basis.dim()) - 1; }
    [[nodiscard]] DualForm dual_element(std::size_t i) const;
    [[nodiscard]] BinaryForm primal_element(std::size_t i) const;
    [[nodiscard]] std::vector<DualForm> dual_basis() const;
    [[nodiscard]] bool contains(const DualForm& D) const;
    [[nodiscard]] bool contains(const BinaryForm& f) const;
};

struct WitnessOptions {
    std::uint64_t seed = 0;
    /// Random trials before falling back to the exhaustive grid.
    std::size_t budget = 256;
    std::int64_t coeff_bound = 10;
    /// Largest exhaustive grid (number of points) attempted for dim >= 3.
    std::size_t exhaustive_cap = 20000;
};

/// Outcome of a squarefree witness search with its provenance.
struct WitnessSearch {
    std::optional<DualForm> witness;
    /// True when the search proves no squarefree element exists.
    bool proven_absent = false;
    std::string method;
    std::size_t candidates_tested = 0;
};

struct VspsResult {
    unsigned k = 0;
    GradedSubspace space;
    int projective_dim = -1;
    std::optional<DualForm> squarefree_witness;
    bool vssp_nonempty = false;
    /// Set when VSSP is empty with certainty (VSPS empty, or witness search proved absence).
    bool vssp_empty_proven = false;
    std::string witness_method;
};

struct KminResult {
    unsigned k = 0;
    DualForm witness;
    /// Every smaller k was certified empty rather than merely unsearched.
    bool lower_degrees_certified = true;
    /// No witness up to degree d; fell back to d+1 distinct points.
    bool extended = false;
};

/// Matrix of D -> D o f from T_k to S_{d-k}: (d-k+1) x (k+1).
RationalMatrix catalecticant_matrix(const BinaryForm& f, unsigned k);

/// (f^perp)_k
GradedSubspace orthogonal_component(const BinaryForm& f, unsigned k);

/// (D^{-1})_d
GradedSubspace inverse_system_component(const DualForm& D, unsigned d);

/// (f_1^perp cap ... cap f_r^perp)_k for arbitrary (possibly dependent) forms of
/// equal degree. For k > d the whole of T_k is returned.
GradedSubspace graded_intersection(const std::vector<BinaryForm>& forms, unsigned k);

/// Throws InvalidInput unless the forms are nonzero, of equal degree and independent.
void require_independent(const std::vector<BinaryForm>& forms);

WitnessSearch find_squarefree_witness(const GradedSubspace& space, const WitnessOptions& options = {});

/// P(cap f_i^perp)_k with a squarefree witness search. Accepts k = d+1, where
/// every dual form annihilates S_d.
VspsResult vsps(const std::vector<BinaryForm>& forms, unsigned k, const WitnessOptions& options = {});

/// Smallest k with a certified squarefree element of (cap f_i^perp)_k, scanning upward from 1.
KminResult compute_kmin(const std::vector<BinaryForm>& forms, const WitnessOptions& options = {});

/// min { k : k > (r(d+1) - 1) / (r+1) }
unsigned kmin_formula(unsigned d, unsigned r);

/// k(r+1) - r(d+1) for k >= kmin_formula(d, r), nullopt (empty) below it.
std::optional<int> vssp_dim_formula(unsigned d, unsigned r, unsigned k);

/// r(d+1) mod (r+1)
unsigned epsilon_class(unsigned d, unsigned r);

}  // namespace apolar
