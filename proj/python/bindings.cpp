#include "apolar/cli.hpp"
#include "apolar/curves.hpp"
#include "apolar/decomposer.hpp"
#include "apolar/harness.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace apolar;

namespace {

RationalVector parse_coeffs(const std::vector<std::string>& coeffs) {
    RationalVector out;
    for (const auto& c : coeffs) out.push_back(parse_rational(c));
    return out;
}

std::vector<BinaryForm> to_forms(unsigned d, const std::vector<std::vector<std::string>>& forms) {
    std::vector<BinaryForm> out;
    for (const auto& f : forms) out.emplace_back(d, parse_coeffs(f));
    return out;
}

std::vector<std::string> coeff_strings(const RationalVector& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

py::dict decomposition_dict(const Decomposition& dec) {
    py::dict out;
    out["exact"] = dec.exact;
    out["witness"] = coeff_strings(dec.witness.coeffs());
    std::vector<std::pair<std::complex<double>, std::complex<double>>> pts;
    for (const auto& p : dec.points) pts.push_back(p.coords());
    out["points"] = pts;
    if (dec.exact) {
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < dec.exact_coefficients.rows(); ++i) rows.push_back(coeff_strings(dec.exact_coefficients.row(i)));
        out["coefficients"] = rows;
        std::vector<std::pair<std::string, std::string>> ls;
        for (const auto& l : dec.linear_forms()) ls.emplace_back(to_string(l.a()), to_string(l.b()));
        out["linear_forms"] = ls;
    } else {
        out["coefficients"] = dec.numeric_coefficients;
    }
    out["residual"] = dec.reconstruction_residual;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact apolarity computations for binary forms";

    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<NumericFailure>(m, "NumericFailure", PyExc_ArithmeticError);

    m.def("kmin_formula", &kmin_formula, py::arg("d"), py::arg("r"));
    m.def("vssp_dim_formula", &vssp_dim_formula, py::arg("d"), py::arg("r"), py::arg("k"));

    m.def(
        "graded_intersection_dim",
        [](unsigned d, const std::vector<std::vector<std::string>>& forms, unsigned k) {
            return graded_intersection(to_forms(d, forms), k).dim();
        },
        py::arg("d"), py::arg("forms"), py::arg("k"));

    m.def(
        "kmin",
        [](unsigned d, const std::vector<std::vector<std::string>>& forms, std::uint64_t seed) {
            WitnessOptions w;
            w.seed = seed;
            auto res = compute_kmin(to_forms(d, forms), w);
            return py::make_tuple(res.k, coeff_strings(res.witness.coeffs()));
        },
        py::arg("d"), py::arg("forms"), py::arg("seed") = 0);

    m.def(
        "decompose",
        [](unsigned d, const std::vector<std::vector<std::string>>& forms, unsigned k, std::uint64_t seed) -> py::object {
            DecomposeOptions opt;
            opt.witness.seed = seed;
            auto res = decompose(to_forms(d, forms), k, opt);
            if (!res.decomposition) return py::none();
            return decomposition_dict(*res.decomposition);
        },
        py::arg("d"), py::arg("forms"), py::arg("k"), py::arg("seed") = 0);

    m.def(
        "predict",
        [](unsigned d, unsigned n) {
            std::vector<py::tuple> rows;
            for (const auto& p : generic_secant_table(d, n))
                rows.push_back(py::make_tuple(p.a, p.b, p.projective_dim ? py::cast(*p.projective_dim) : py::none()));
            return rows;
        },
        py::arg("d"), py::arg("n"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::vector<std::string> full{"apolar"};
            full.insert(full.end(), args.begin(), args.end());
            std::ostringstream out, err;
            int code = run_cli(full, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
