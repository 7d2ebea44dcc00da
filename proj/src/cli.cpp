#include "apolar/cli.hpp"

#include "apolar/curves.hpp"
#include "apolar/decomposer.hpp"
#include "apolar/harness.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <regex>

namespace apolar {

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("APOLAR_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw InvalidInput(std::string("APOLAR_SEED is not an unsigned integer: ") + env);
        }
    }
    return 0;
}

std::string space_name(std::optional<int> dim) {
    if (!dim || *dim < 0) return "empty";
    if (*dim == 0) return "point";
    return "P^" + std::to_string(*dim);
}

std::string secant_label(unsigned a, unsigned b) { return "S^" + std::to_string(a) + "_" + std::to_string(b); }

nlohmann::json envelope(const std::string& command) { return {{"schema", kSchema}, {"command", command}}; }

void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

struct GridSpec {
    unsigned d_min, d_max, r_min, r_max;
};

GridSpec parse_grid(const std::string& text, const GridSpec& defaults) {
    GridSpec g = defaults;
    static const std::regex item(R"(\s*([dr])\s*=\s*(\d+)(?:\.\.(\d+))?\s*)");
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::smatch m;
        if (!std::regex_match(part, m, item)) throw InvalidInput("malformed grid item '" + part + "', expected d=LO..HI or r=LO..HI");
        unsigned lo = static_cast<unsigned>(std::stoul(m[2]));
        unsigned hi = m[3].matched ? static_cast<unsigned>(std::stoul(m[3])) : lo;
        if (m[1] == "d") g.d_min = lo, g.d_max = hi;
        else g.r_min = lo, g.r_max = hi;
    }
    if (g.d_min < 1 || g.d_min > g.d_max || g.r_min < 1 || g.r_min > g.r_max) throw InvalidInput("empty or invalid grid '" + text + "'");
    return g;
}

int cmd_kmin(const std::string& input, std::uint64_t seed, bool json, std::ostream& out) {
    auto sys = load_form_system(input);
    WitnessOptions w;
    w.seed = seed;
    auto res = compute_kmin(sys.forms, w);
    const unsigned r = static_cast<unsigned>(sys.forms.size());
    std::optional<unsigned> formula;
    if (r <= sys.d + 1) formula = kmin_formula(sys.d, r);
    if (json) {
        auto j = envelope("kmin");
        j["d"] = sys.d;
        j["r"] = r;
        j["k_min"] = res.k;
        j["witness"] = to_json(res.witness);
        j["lower_degrees_certified"] = res.lower_degrees_certified;
        j["extended"] = res.extended;
        j["formula_k_min"] = formula ? nlohmann::json(*formula) : nlohmann::json(nullptr);
        j["non_generic_certified"] = formula && res.k < *formula;
        emit(out, j);
        return kExitOk;
    }
    out << "k_min = " << res.k << "\n";
    out << "witness: " << res.witness.to_string() << "\n";
    if (res.extended) out << "no squarefree apolar form up to degree d; used d+1 distinct points\n";
    if (formula) {
        out << "generic value k_min(" << sys.d << "," << r << ") = " << *formula;
        if (res.k < *formula) out << "; the system is not generic (smaller k_min witnessed)";
        else if (res.k > *formula) out << "; computed value exceeds the generic one";
        out << "\n";
    }
    if (!res.lower_degrees_certified) out << "note: some lower degrees were searched but not certified empty\n";
    return kExitOk;
}

int cmd_vsps(const std::string& input, unsigned k, std::uint64_t seed, bool json, std::ostream& out) {
    auto sys = load_form_system(input);
    WitnessOptions w;
    w.seed = seed;
    auto res = vsps(sys.forms, k, w);
    if (json) {
        auto j = envelope("vsps");
        j["d"] = sys.d;
        j["k"] = k;
        j["dim"] = res.space.dim();
        j["projective_dim"] = res.projective_dim;
        nlohmann::json basis = nlohmann::json::array();
        for (const auto& D : res.space.dual_basis()) basis.push_back(to_json(D));
        j["basis"] = basis;
        j["vssp_nonempty"] = res.vssp_nonempty;
        j["vssp_empty_proven"] = res.vssp_empty_proven;
        j["witness"] = res.squarefree_witness ? to_json(*res.squarefree_witness) : nlohmann::json(nullptr);
        j["witness_method"] = res.witness_method;
        emit(out, j);
    } else {
        out << "VSPS(k=" << k << "): dim " << res.space.dim() << ", " << space_name(res.projective_dim) << "\n";
        for (const auto& D : res.space.dual_basis()) out << "  " << D.to_string() << "\n";
        if (res.vssp_nonempty)
            out << "VSSP: nonempty, equal to VSPS; witness " << res.squarefree_witness->to_string() << " ("
                << res.witness_method << ")\n";
        else if (res.vssp_empty_proven)
            out << "VSSP: empty (" << res.witness_method << ")\n";
        else
            out << "VSSP: no squarefree witness found (" << res.witness_method << ", not a proof)\n";
    }
    return res.vssp_nonempty ? kExitOk : kExitEmpty;
}

int cmd_decompose(const std::string& input, unsigned k, std::uint64_t seed, const Tolerances& tol, bool json,
                  std::ostream& out) {
    auto sys = load_form_system(input);
    DecomposeOptions opt;
    opt.witness.seed = seed;
    opt.tol = tol;
    auto res = decompose(sys.forms, k, opt);
    if (!res.decomposition) {
        if (json) {
            auto j = envelope("decompose");
            j["k"] = k;
            j["decomposition"] = nullptr;
            j["vsps_projective_dim"] = res.vsps.projective_dim;
            j["vssp_empty_proven"] = res.vsps.vssp_empty_proven;
            emit(out, j);
        } else {
            out << "no decomposition with k = " << k << ": VSSP is "
                << (res.vsps.vssp_empty_proven ? "empty" : "not witnessed") << " (VSPS " << space_name(res.vsps.projective_dim)
                << ")\n";
        }
        return kExitEmpty;
    }
    const auto& dec = *res.decomposition;
    auto report = verify_decomposition(sys.forms, dec, tol.reconstruction);
    if (!report.passed) throw NumericFailure("decomposition failed verification");
    if (json) {
        auto j = envelope("decompose");
        j["decomposition"] = to_json(dec);
        j["verified"] = report.passed;
        j["max_deviation"] = report.max_deviation;
        emit(out, j);
        return kExitOk;
    }
    out << "decomposition with k = " << dec.size() << " (" << (dec.exact ? "exact" : "numeric") << ")\n";
    out << "witness: " << dec.witness.to_string() << "\n";
    out << std::setprecision(12);
    for (std::size_t i = 0; i < sys.forms.size(); ++i) {
        out << "f" << (i + 1) << " =";
        for (std::size_t j = 0; j < dec.size(); ++j) {
            out << (j == 0 ? " " : " + ");
            if (dec.exact) {
                out << "(" << to_string(dec.exact_coefficients(i, j)) << ")*(" << dec.points[j].linear_form().to_string() << ")^"
                    << dec.degree;
            } else {
                auto c = dec.numeric_coefficients[i][j];
                out << "(" << c.real();
                if (c.imag() != 0) out << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i";
                out << ")*L" << (j + 1) << "^" << dec.degree;
            }
        }
        out << "\n";
    }
    if (!dec.exact)
        for (std::size_t j = 0; j < dec.size(); ++j) out << "L" << (j + 1) << " = p*x0 + q*x1 with [p:q] = " << dec.points[j].to_string() << "\n";
    out << "verified, max deviation " << report.max_deviation << "\n";
    return kExitOk;
}

int cmd_predict(unsigned d, unsigned n, bool json, std::ostream& out) {
    auto table = generic_secant_table(d, n);
    const unsigned r = d - n;
    if (json) {
        auto j = envelope("predict");
        j["d"] = d;
        j["n"] = n;
        j["k_min"] = kmin_formula(d, r);
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& p : table)
            rows.push_back({{"a", p.a},
                            {"b", p.b},
                            {"projective_dim", p.projective_dim ? nlohmann::json(*p.projective_dim) : nlohmann::json(nullptr)},
                            {"space", space_name(p.projective_dim)},
                            {"note", p.note}});
        j["rows"] = rows;
        emit(out, j);
        return kExitOk;
    }
    out << "generic rational curve of degree " << d << " in P^" << n << " (r = " << r << ", k_min(" << d << "," << r
        << ") = " << kmin_formula(d, r) << ")\n";
    for (const auto& p : table)
        out << secant_label(p.a, p.b) << ": " << space_name(p.projective_dim) << "  (" << p.note << ")\n";
    return kExitOk;
}

int cmd_curve(const std::string& input, unsigned n, bool table, std::uint64_t seed, bool json, std::ostream& out) {
    auto sys = load_form_system(input);
    auto curve = make_curve(sys.d, n, sys.forms);
    WitnessOptions w;
    w.seed = seed;
    auto probe = genericity_probe(curve, w);
    if (json) {
        auto j = envelope("curve");
        j["d"] = curve.d;
        j["n"] = curve.n;
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : probe.rows) {
            const auto& c = row.computed;
            nlohmann::json r = {{"a", c.a},
                                {"b", c.b},
                                {"projective_dim", c.projective_dim},
                                {"space", space_name(c.projective_dim)},
                                {"smooth_part_nonempty", c.smooth_part_nonempty},
                                {"witness", c.witness ? to_json(*c.witness) : nlohmann::json(nullptr)},
                                {"note", c.note}};
            if (table) {
                r["predicted_projective_dim"] = row.predicted.projective_dim ? nlohmann::json(*row.predicted.projective_dim)
                                                                             : nlohmann::json(nullptr);
                r["mismatch"] = row.mismatch;
            }
            rows.push_back(r);
        }
        j["rows"] = rows;
        if (table) j["verdict"] = probe.verdict;
        emit(out, j);
        return kExitOk;
    }
    out << "rational curve of degree " << curve.d << " in P^" << curve.n << " projected from " << curve.r() << " forms\n";
    for (const auto& row : probe.rows) {
        const auto& c = row.computed;
        out << secant_label(c.a, c.b) << ": " << space_name(c.projective_dim);
        if (c.witness) out << ", smooth part witness " << c.witness->to_string();
        out << "  (" << c.note << ")";
        if (table) out << "  [generic: " << space_name(row.predicted.projective_dim) << "]";
        out << "\n";
    }
    if (table) {
        out << "genericity: " << probe.verdict << "\n";
        for (const auto& row : probe.rows)
            if (!row.mismatch.empty()) out << "  certificate: " << row.mismatch << "\n";
    }
    return kExitOk;
}

struct ValidateArgs {
    std::string grid;
    std::size_t trials = 50;
    std::int64_t bound = 10;
    unsigned threads = 1;
    std::string suite = "all";
    std::string out_path;
    bool resample = false;
    bool full = false;
};

int cmd_validate(const ValidateArgs& a, std::uint64_t seed, bool json, std::ostream& out) {
    GridSpec g = parse_grid(a.grid, {1, 8, 1, 3});
    RunConfig cfg;
    cfg.seed = seed;
    cfg.trials = a.trials;
    cfg.d_min = g.d_min;
    cfg.d_max = g.d_max;
    cfg.r_min = g.r_min;
    cfg.r_max = g.r_max;
    cfg.coeff_bound = a.bound;
    cfg.threads = a.threads;
    cfg.resample_nongeneric = a.resample;
    if (a.suite != "all" && a.suite != "theorem" && a.suite != "grassmann")
        throw InvalidInput("--suite must be theorem, grassmann or all");

    auto report = envelope("validate");
    report["config"] = {{"seed", seed},      {"trials", cfg.trials}, {"d", {cfg.d_min, cfg.d_max}},
                        {"r", {cfg.r_min, cfg.r_max}}, {"coeff_bound", cfg.coeff_bound},
                        {"resample_nongeneric", cfg.resample_nongeneric}};
    std::ostringstream text;
    if (a.suite != "grassmann") {
        auto s = validate_kmin_theorem(cfg);
        report["theorem"] = to_json(s, a.full);
        text << "theorem: " << s.agreements << "/" << s.trials << " trials agree (" << std::fixed << std::setprecision(2)
             << 100.0 * s.agreement_rate() << "%), " << s.non_generic << " non-generic certified, " << s.failures
             << " unexplained\n";
        for (const auto& t : s.reports)
            if (!t.agrees())
                text << "  d=" << t.d << " r=" << t.r << " trial " << t.trial << ": k_min " << t.computed_kmin << " vs "
                     << t.formula_kmin << ", dims " << t.dim_at_kmin << "/" << t.dim_at_kmin_plus1 << " vs "
                     << t.formula_dim_at_kmin << "/" << t.formula_dim_at_kmin_plus1
                     << (t.non_generic ? ", certificate: " + t.certificate : ", UNEXPLAINED") << "\n";
    }
    if (a.suite != "theorem") {
        auto s = validate_grassmann_bound(cfg);
        report["grassmann"] = to_json(s);
        text << "intersection bound: " << s.nonzero << "/" << s.cases << " cases nonzero\n";
        for (const auto& f : s.failures)
            text << "  FAILED " << f.suite << " d=" << f.d << " r=" << f.r << " k=" << f.k << "\n";
    }
    if (!a.out_path.empty()) {
        std::ofstream f(a.out_path);
        if (!f) throw InvalidInput("cannot write " + a.out_path);
        f << report.dump(2) << "\n";
    }
    if (json) emit(out, report);
    else out << text.str();
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Simultaneous Waring decompositions of binary forms via apolarity", "apolar"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Emit a machine-readable JSON report");

    std::string input;
    unsigned k = 0;
    unsigned n = 0;
    unsigned d = 0;
    std::uint64_t seed = 0;
    bool table = false;
    Tolerances tol;
    ValidateArgs va;

    auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", seed, "Random seed (default: $APOLAR_SEED or 0)"); };

    auto* kmin = app.add_subcommand("kmin", "Smallest simultaneous decomposition length");
    kmin->add_option("input", input, "JSON form system")->required();
    add_seed(kmin);

    auto* vsps_cmd = app.add_subcommand("vsps", "Graded intersection of orthogonal ideals at degree k");
    vsps_cmd->add_option("input", input, "JSON form system")->required();
    vsps_cmd->add_option("--k", k, "Degree")->required();
    add_seed(vsps_cmd);

    auto* dec = app.add_subcommand("decompose", "Explicit simultaneous decomposition with k linear forms");
    dec->add_option("input", input, "JSON form system")->required();
    dec->add_option("--k", k, "Number of linear forms")->required();
    dec->add_option("--tol", tol.reconstruction, "Reconstruction tolerance for numeric results");
    dec->add_option("--root-tol", tol.root, "Residual tolerance for numeric roots");
    add_seed(dec);

    auto* curve = app.add_subcommand("curve", "Extremal multisecant spaces of a projected rational normal curve");
    curve->add_option("input", input, "JSON projection center (d - n forms of degree d)")->required();
    curve->add_option("--n", n, "Target projective space dimension")->required();
    curve->add_flag("--table", table, "Compare against the generic prediction");
    add_seed(curve);

    auto* predict = app.add_subcommand("predict", "Generic multisecant table from closed forms");
    predict->add_option("--d", d, "Curve degree")->required();
    predict->add_option("--n", n, "Target projective space dimension")->required();

    auto* validate = app.add_subcommand("validate", "Monte Carlo validation of the closed-form predictions");
    validate->add_option("--grid", va.grid, "Grid such as d=1..12,r=1..4");
    validate->add_option("--trials", va.trials, "Trials per (d, r) cell");
    validate->add_option("--bound", va.bound, "Coefficient bound B for random forms");
    validate->add_option("--threads", va.threads, "Worker threads");
    validate->add_option("--suite", va.suite, "theorem, grassmann or all");
    validate->add_option("--out", va.out_path, "Also write the JSON report to this path");
    validate->add_flag("--resample-nongeneric", va.resample, "Resample trials certified non-generic");
    validate->add_flag("--full", va.full, "Include every trial in the JSON report");
    add_seed(validate);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInvalidInput;
    }

    try {
        bool seed_given = false;
        for (auto* sub : {kmin, vsps_cmd, dec, curve, validate})
            if (sub->parsed() && sub->count("--seed") > 0) seed_given = true;
        if (!seed_given) seed = default_seed();

        if (kmin->parsed()) return cmd_kmin(input, seed, json, out);
        if (vsps_cmd->parsed()) return cmd_vsps(input, k, seed, json, out);
        if (dec->parsed()) return cmd_decompose(input, k, seed, tol, json, out);
        if (curve->parsed()) return cmd_curve(input, n, table, seed, json, out);
        if (predict->parsed()) return cmd_predict(d, n, json, out);
        if (validate->parsed()) return cmd_validate(va, seed, json, out);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const NumericFailure& e) {
        err << "numeric failure: " << e.what() << "\n";
        return kExitNumericFailure;
    }
    return kExitInvalidInput;
}

}  // namespace apolar
