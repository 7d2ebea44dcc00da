#pragma once

#include "apolar/apolarity.hpp"
#include "apolar/decomposer.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace apolar {

inline constexpr const char* kSchema = "apolar/1";

/// A system of forms read from the JSON input format.
struct FormSystem {
    unsigned d = 0;
    std::vector<BinaryForm> forms;
};

/// {"d": int, "forms": [{"coeffs": ["p/q", ...]} | {"powers": [{"l": [a, b], "c": c}, ...]}]}
FormSystem parse_form_system(const nlohmann::json& doc);
FormSystem load_form_system(const std::string& path);

struct RunConfig {
    std::uint64_t seed = 0;
    std::size_t trials = 50;
    unsigned d_min = 1, d_max = 8;
    unsigned r_min = 1, r_max = 3;
    std::int64_t coeff_bound = 10;
    std::size_t witness_budget = 256;
    unsigned threads = 1;
    bool resample_nongeneric = false;
};

struct TrialReport {
    unsigned d = 0, r = 0;
    std::uint64_t seed = 0;
    std::size_t trial = 0;
    std::int64_t coeff_bound = 0;
    unsigned resamples = 0;

    unsigned computed_kmin = 0;
    unsigned formula_kmin = 0;
    bool kmin_certified = true;
    /// First k below the formula value where VSPS is nonzero, if any.
    std::optional<unsigned> vsps_nonzero_below;
    int dim_at_kmin = -1, dim_at_kmin_plus1 = -1;
    int formula_dim_at_kmin = -1, formula_dim_at_kmin_plus1 = -1;
    int epsilon = 0;
    int epsilon_prediction = 0;

    bool kmin_match = false;
    bool below_empty_match = false;
    bool dims_match = false;
    bool epsilon_match = false;
    bool non_generic = false;
    std::string certificate;

    [[nodiscard]] bool agrees() const { return kmin_match && below_empty_match && dims_match && epsilon_match; }
    /// Disagreement without a non-genericity certificate.
    [[nodiscard]] bool failed() const { return !agrees() && !non_generic; }
};

struct TheoremSummary {
    std::size_t trials = 0;
    std::size_t agreements = 0;
    std::size_t non_generic = 0;
    std::size_t failures = 0;
    std::vector<TrialReport> reports;

    [[nodiscard]] double agreement_rate() const {
        return trials == 0 ? 1.0 : static_cast<double>(agreements) / static_cast<double>(trials);
    }
};

struct GrassmannCase {
    std::string suite;
    unsigned d = 0, r = 0, k = 0;
    std::size_t dim = 0;
};

struct GrassmannSummary {
    std::size_t cases = 0;
    std::size_t nonzero = 0;
    std::vector<GrassmannCase> failures;
    std::vector<std::pair<std::string, std::size_t>> suite_counts;
};

/// r independent integer forms of degree d, coefficients uniform in
/// [-bound, bound]; the stream depends only on (seed, d, r, trial, attempt).
std::vector<BinaryForm> sample_forms(unsigned d, unsigned r, std::int64_t coeff_bound, std::uint64_t seed,
                                     std::size_t trial, unsigned attempt = 0);

/// One Monte Carlo trial of the closed-form predictions.
TrialReport run_theorem_trial(unsigned d, unsigned r, const RunConfig& config, std::size_t trial);

TheoremSummary validate_kmin_theorem(const RunConfig& config);

/// Nonvanishing of the graded intersection at k = kmin_formula(d, r) on
/// adversarial and random families.
GrassmannSummary validate_grassmann_bound(const RunConfig& config);

/// Adversarial families used by validate_grassmann_bound, labelled by suite.
std::vector<std::pair<std::string, std::vector<BinaryForm>>> adversarial_families(unsigned d, unsigned r);

nlohmann::json to_json(const BinaryForm& f);
nlohmann::json to_json(const DualForm& D);
nlohmann::json to_json(const TrialReport& t);
nlohmann::json to_json(const TheoremSummary& s, bool include_trials);
nlohmann::json to_json(const GrassmannSummary& s);
nlohmann::json to_json(const Decomposition& dec);

}  // namespace apolar
