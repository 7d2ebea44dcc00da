#include "apolar/harness.hpp"

#include "apolar/random.hpp"

#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

namespace apolar {

namespace {

Rational json_rational(const nlohmann::json& v, const std::string& where) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<long long>())));
    throw InvalidInput(where + ": rationals must be strings like \"-3/4\" or integers");
}

BinaryForm parse_form(const nlohmann::json& f, unsigned d, std::size_t index) {
    const std::string where = "forms[" + std::to_string(index) + "]";
    if (!f.is_object()) throw InvalidInput(where + " must be an object");
    if (f.contains("coeffs") == f.contains("powers"))
        throw InvalidInput(where + " needs exactly one of \"coeffs\" or \"powers\"");
    if (f.contains("coeffs")) {
        const auto& c = f.at("coeffs");
        if (!c.is_array()) throw InvalidInput(where + ".coeffs must be an array");
        RationalVector coeffs;
        for (const auto& x : c) coeffs.push_back(json_rational(x, where));
        if (coeffs.size() != d + 1)
            throw InvalidInput(where + " has " + std::to_string(coeffs.size()) + " coefficients, degree " +
                               std::to_string(d) + " needs " + std::to_string(d + 1));
        return {d, std::move(coeffs)};
    }
    const auto& p = f.at("powers");
    if (!p.is_array() || p.empty()) throw InvalidInput(where + ".powers must be a nonempty array");
    std::vector<std::pair<LinearForm, Rational>> terms;
    for (const auto& t : p) {
        if (!t.is_object() || !t.contains("l") || !t.contains("c") || !t.at("l").is_array() || t.at("l").size() != 2)
            throw InvalidInput(where + ": each power needs \"l\": [a, b] and \"c\"");
        Rational a = json_rational(t.at("l")[0], where);
        Rational b = json_rational(t.at("l")[1], where);
        Rational c = json_rational(t.at("c"), where);
        // keep the scaling of l: c (a x0 + b x1)^d, LinearForm normalizes
        LinearForm l(a, b);
        Rational scale = (l.a() != 0) ? a / l.a() : b / l.b();
        Rational factor = 1;
        for (unsigned e = 0; e < d; ++e) factor *= scale;
        terms.emplace_back(l, c * factor);
    }
    return expand_power_sum(d, terms);
}

}  // namespace

FormSystem parse_form_system(const nlohmann::json& doc) {
    if (!doc.is_object()) throw InvalidInput("input must be a JSON object");
    if (doc.contains("schema") && doc.at("schema") != kSchema)
        throw InvalidInput("unsupported schema " + doc.at("schema").dump() + ", expected \"" + kSchema + "\"");
    if (!doc.contains("d") || !doc.at("d").is_number_integer() || doc.at("d").get<long long>() < 1)
        throw InvalidInput("input needs an integer degree \"d\" >= 1");
    if (!doc.contains("forms") || !doc.at("forms").is_array() || doc.at("forms").empty())
        throw InvalidInput("input needs a nonempty \"forms\" array");
    FormSystem sys;
    sys.d = doc.at("d").get<unsigned>();
    std::size_t i = 0;
    for (const auto& f : doc.at("forms")) sys.forms.push_back(parse_form(f, sys.d, i++));
    return sys;
}

FormSystem load_form_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(path + ": " + e.what());
    }
    return parse_form_system(doc);
}

std::vector<BinaryForm> sample_forms(unsigned d, unsigned r, std::int64_t coeff_bound, std::uint64_t seed,
                                     std::size_t trial, unsigned attempt) {
    if (d < 1) throw InvalidInput("sample_forms: d must be >= 1");
    if (r < 1 || r > d + 1) throw InvalidInput("sample_forms: r must lie in [1, d+1]");
    if (coeff_bound < 0) throw InvalidInput("sample_forms: negative coefficient bound");
    SplitMix64 rng(derive_seed(seed, {d, r, trial, attempt}));
    constexpr int max_retries = 64;
    for (int retry = 0; retry < max_retries; ++retry) {
        std::vector<BinaryForm> forms;
        std::vector<RationalVector> rows;
        for (unsigned i = 0; i < r; ++i) {
            RationalVector c(d + 1);
            for (auto& x : c) x = static_cast<long>(rng.uniform(-coeff_bound, coeff_bound));
            rows.push_back(c);
            forms.emplace_back(d, std::move(c));
        }
        if (rank(RationalMatrix::from_rows(rows, d + 1)) == r) return forms;
    }
    throw InvalidInput("sample_forms: no independent sample after " + std::to_string(max_retries) +
                       " retries (coefficient bound " + std::to_string(coeff_bound) + ")");
}

TrialReport run_theorem_trial(unsigned d, unsigned r, const RunConfig& config, std::size_t trial) {
    TrialReport t;
    const unsigned max_attempts = config.resample_nongeneric ? 8 : 1;
    for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
        t = TrialReport{};
        t.d = d;
        t.r = r;
        t.seed = config.seed;
        t.trial = trial;
        t.coeff_bound = config.coeff_bound;
        t.resamples = attempt;
        auto forms = sample_forms(d, r, config.coeff_bound, config.seed, trial, attempt);
        WitnessOptions wopt;
        wopt.seed = derive_seed(config.seed, {d, r, trial, attempt, 0x77});
        wopt.budget = config.witness_budget;

        t.formula_kmin = kmin_formula(d, r);
        auto km = compute_kmin(forms, wopt);
        t.computed_kmin = km.k;
        t.kmin_certified = km.lower_degrees_certified;
        for (unsigned k = 1; k < t.formula_kmin; ++k)
            if (graded_intersection(forms, k).dim() > 0) {
                t.vsps_nonzero_below = k;
                break;
            }
        t.dim_at_kmin = graded_intersection(forms, t.formula_kmin).projective_dim();
        t.dim_at_kmin_plus1 = graded_intersection(forms, t.formula_kmin + 1).projective_dim();
        t.formula_dim_at_kmin = *vssp_dim_formula(d, r, t.formula_kmin);
        t.formula_dim_at_kmin_plus1 = *vssp_dim_formula(d, r, t.formula_kmin + 1);
        t.epsilon = static_cast<int>(epsilon_class(d, r));
        t.epsilon_prediction = t.epsilon != 0 ? static_cast<int>(r) + 1 - t.epsilon : 0;

        t.kmin_match = t.computed_kmin == t.formula_kmin;
        t.below_empty_match = !t.vsps_nonzero_below.has_value();
        t.dims_match = t.dim_at_kmin == t.formula_dim_at_kmin && t.dim_at_kmin_plus1 == t.formula_dim_at_kmin_plus1;
        t.epsilon_match = t.kmin_match && t.dim_at_kmin == t.epsilon_prediction;

        if (t.computed_kmin < t.formula_kmin) {
            t.certificate = "witnessed k_min = " + std::to_string(t.computed_kmin) + " < " +
                            std::to_string(t.formula_kmin) + " via " + km.witness.to_string();
        } else if (t.vsps_nonzero_below) {
            t.certificate = "VSPS nonzero at k = " + std::to_string(*t.vsps_nonzero_below);
        } else if (t.dim_at_kmin > t.formula_dim_at_kmin || t.dim_at_kmin_plus1 > t.formula_dim_at_kmin_plus1) {
            t.certificate = "fiber dimension " + std::to_string(t.dim_at_kmin) + "/" + std::to_string(t.dim_at_kmin_plus1) +
                            " exceeds " + std::to_string(t.formula_dim_at_kmin) + "/" +
                            std::to_string(t.formula_dim_at_kmin_plus1);
        } else if (t.computed_kmin > t.formula_kmin && km.lower_degrees_certified) {
            t.certificate = "every element of VSPS at k = " + std::to_string(t.formula_kmin) +
                            " has a repeated root (proved), so k_min = " + std::to_string(t.computed_kmin);
        }
        t.non_generic = !t.certificate.empty();
        if (!t.non_generic) break;
    }
    return t;
}

namespace {

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

TheoremSummary validate_kmin_theorem(const RunConfig& config) {
    if (config.trials == 0 || config.d_min < 1 || config.d_min > config.d_max || config.r_min < 1 ||
        config.r_min > config.r_max)
        throw InvalidInput("invalid validation grid");
    struct Task {
        unsigned d, r;
        std::size_t trial;
    };
    std::vector<Task> tasks;
    for (unsigned d = config.d_min; d <= config.d_max; ++d)
        for (unsigned r = config.r_min; r <= std::min(config.r_max, d); ++r)
            for (std::size_t t = 0; t < config.trials; ++t) tasks.push_back({d, r, t});

    TheoremSummary s;
    s.reports.resize(tasks.size());
    parallel_for(tasks.size(), config.threads,
                 [&](std::size_t i) { s.reports[i] = run_theorem_trial(tasks[i].d, tasks[i].r, config, tasks[i].trial); });
    s.trials = s.reports.size();
    for (const auto& t : s.reports) {
        if (t.agrees()) ++s.agreements;
        if (t.non_generic) ++s.non_generic;
        if (t.failed()) ++s.failures;
    }
    return s;
}

std::vector<std::pair<std::string, std::vector<BinaryForm>>> adversarial_families(unsigned d, unsigned r) {
    std::vector<std::pair<std::string, std::vector<BinaryForm>>> out;
    auto monomials = [d](std::vector<unsigned> idx) {
        std::vector<BinaryForm> fs;
        for (auto i : idx) fs.push_back(BinaryForm::monomial(d, i));
        return fs;
    };
    for (unsigned s = 0; s + r <= d + 1; ++s) {
        std::vector<unsigned> idx;
        for (unsigned i = 0; i < r; ++i) idx.push_back(s + i);
        out.emplace_back("monomial-window", monomials(idx));
    }
    {
        std::vector<unsigned> idx;
        for (unsigned j = 0; j < r; ++j) idx.push_back(r == 1 ? 0 : (j * d) / (r - 1));
        out.emplace_back("monomial-spread", monomials(idx));
    }
    {
        std::vector<BinaryForm> fs;
        for (unsigned j = 0; j < r; ++j) fs.push_back(expand_power_sum(d, {{LinearForm(1, static_cast<long>(j)), Rational(1)}}));
        out.emplace_back("pure-powers", fs);
    }
    {
        // (x0 + x1)^(d-i) (x0 - x1)^i: high-multiplicity shared roots
        BinaryForm plus(1, {Rational(1), Rational(1)});
        BinaryForm minus(1, {Rational(1), Rational(-1)});
        std::vector<BinaryForm> fs;
        for (unsigned i = 0; i < r; ++i) {
            BinaryForm f(0, {Rational(1)});
            for (unsigned e = 0; e < d - i; ++e) f = f * plus;
            for (unsigned e = 0; e < i; ++e) f = f * minus;
            fs.push_back(f);
        }
        out.emplace_back("repeated-roots", fs);
    }
    {
        // power sums on one shared set of r+1 points (or all d+1 if fewer)
        const unsigned m = std::min(d + 1, r + 1);
        std::vector<BinaryForm> fs;
        for (unsigned i = 0; i < r; ++i) {
            std::vector<std::pair<LinearForm, Rational>> terms;
            Rational c = 1;
            for (unsigned j = 0; j < m; ++j) {
                terms.emplace_back(LinearForm(1, static_cast<long>(j)), c);
                c *= static_cast<long>(i + 1);
            }
            fs.push_back(expand_power_sum(d, terms));
        }
        out.emplace_back("shared-support", fs);
    }
    {
        BinaryForm f = expand_power_sum(d, {{LinearForm(1, 1), Rational(1)}, {LinearForm(1, -2), Rational(3)}});
        std::vector<BinaryForm> fs;
        for (unsigned i = 0; i < r; ++i) fs.push_back(Rational(static_cast<long>(i + 1)) * f);
        out.emplace_back("dependent-copies", fs);
    }
    return out;
}

GrassmannSummary validate_grassmann_bound(const RunConfig& config) {
    GrassmannSummary s;
    std::map<std::string, std::size_t> counts;
    auto check = [&](const std::string& suite, unsigned d, unsigned r, const std::vector<BinaryForm>& forms) {
        const unsigned k = kmin_formula(d, r);
        auto space = graded_intersection(forms, k);
        ++s.cases;
        ++counts[suite];
        if (space.dim() > 0) ++s.nonzero;
        else s.failures.push_back({suite, d, r, k, space.dim()});
    };
    for (unsigned d = config.d_min; d <= config.d_max; ++d) {
        for (unsigned r = config.r_min; r <= std::min(config.r_max, d); ++r) {
            for (const auto& [suite, forms] : adversarial_families(d, r)) check(suite, d, r, forms);
            for (std::size_t t = 0; t < config.trials; ++t)
                check("random", d, r, sample_forms(d, r, config.coeff_bound, config.seed, t));
        }
    }
    s.suite_counts.assign(counts.begin(), counts.end());
    return s;
}

nlohmann::json to_json(const BinaryForm& f) {
    nlohmann::json c = nlohmann::json::array();
    for (const auto& x : f.coeffs()) c.push_back(to_string(x));
    return {{"degree", f.degree()}, {"coeffs", c}, {"text", f.to_string()}};
}

nlohmann::json to_json(const DualForm& D) {
    nlohmann::json c = nlohmann::json::array();
    for (const auto& x : D.coeffs()) c.push_back(to_string(x));
    return {{"degree", D.degree()}, {"coeffs", c}, {"text", D.to_string()}};
}

nlohmann::json to_json(const TrialReport& t) {
    nlohmann::json j = {{"d", t.d},
                        {"r", t.r},
                        {"seed", t.seed},
                        {"trial", t.trial},
                        {"coeff_bound", t.coeff_bound},
                        {"resamples", t.resamples},
                        {"computed_kmin", t.computed_kmin},
                        {"formula_kmin", t.formula_kmin},
                        {"kmin_certified", t.kmin_certified},
                        {"dim_at_kmin", t.dim_at_kmin},
                        {"dim_at_kmin_plus1", t.dim_at_kmin_plus1},
                        {"formula_dim_at_kmin", t.formula_dim_at_kmin},
                        {"formula_dim_at_kmin_plus1", t.formula_dim_at_kmin_plus1},
                        {"epsilon", t.epsilon},
                        {"epsilon_prediction", t.epsilon_prediction},
                        {"kmin_match", t.kmin_match},
                        {"below_empty_match", t.below_empty_match},
                        {"dims_match", t.dims_match},
                        {"epsilon_match", t.epsilon_match},
                        {"non_generic", t.non_generic},
                        {"certificate", t.certificate}};
    j["vsps_nonzero_below"] = t.vsps_nonzero_below ? nlohmann::json(*t.vsps_nonzero_below) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json to_json(const TheoremSummary& s, bool include_trials) {
    nlohmann::json j = {{"trials", s.trials},
                        {"agreements", s.agreements},
                        {"agreement_rate", s.agreement_rate()},
                        {"non_generic", s.non_generic},
                        {"failures", s.failures}};
    nlohmann::json bad = nlohmann::json::array();
    for (const auto& t : s.reports)
        if (!t.agrees()) bad.push_back(to_json(t));
    j["disagreements"] = bad;
    if (include_trials) {
        nlohmann::json all = nlohmann::json::array();
        for (const auto& t : s.reports) all.push_back(to_json(t));
        j["reports"] = all;
    }
    return j;
}

nlohmann::json to_json(const GrassmannSummary& s) {
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& f : s.failures) fails.push_back({{"suite", f.suite}, {"d", f.d}, {"r", f.r}, {"k", f.k}});
    nlohmann::json suites = nlohmann::json::object();
    for (const auto& [name, n] : s.suite_counts) suites[name] = n;
    return {{"cases", s.cases}, {"nonzero", s.nonzero}, {"failures", fails}, {"suites", suites}};
}

nlohmann::json to_json(const Decomposition& dec) {
    nlohmann::json terms = nlohmann::json::array();
    for (std::size_t j = 0; j < dec.points.size(); ++j) {
        const auto& pt = dec.points[j];
        nlohmann::json t = {{"point", pt.to_string()}, {"exact", pt.is_exact()}};
        if (pt.is_exact()) {
            auto l = pt.linear_form();
            t["linear_form"] = {to_string(l.a()), to_string(l.b())};
            t["text"] = l.to_string();
        } else {
            auto [p, q] = pt.coords();
            t["linear_form"] = {{p.real(), p.imag()}, {q.real(), q.imag()}};
        }
        terms.push_back(t);
    }
    nlohmann::json coeffs = nlohmann::json::array();
    for (std::size_t i = 0; i < dec.numeric_coefficients.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < dec.points.size(); ++j) {
            if (dec.exact) row.push_back(to_string(dec.exact_coefficients(i, j)));
            else row.push_back({dec.numeric_coefficients[i][j].real(), dec.numeric_coefficients[i][j].imag()});
        }
        coeffs.push_back(row);
    }
    return {{"degree", dec.degree},
            {"k", dec.points.size()},
            {"exact", dec.exact},
            {"witness", to_json(dec.witness)},
            {"linear_forms", terms},
            {"coefficients", coeffs},
            {"reconstruction_residual", dec.reconstruction_residual}};
}

}  // namespace apolar
