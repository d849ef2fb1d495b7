#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dwork/acceptance.hpp"
#include "dwork/chars.hpp"
#include "dwork/counting.hpp"
#include "dwork/report.hpp"
#include "dwork/zeta.hpp"

namespace py = pybind11;
using namespace dwork;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::int_ to_py_int(const BigInt& x) { return py::int_(py::module_::import("builtins").attr("int")(x.str())); }

GroupElement element(int n, const std::vector<int>& twist, const std::string& sigma) {
    std::vector<int> t = twist.empty() ? std::vector<int>(n, 0) : twist;
    Perm s = sigma.empty() ? identity_perm(n) : parse_cycles(n, sigma);
    return make_element(n, t, s);
}

ZetaMode parse_mode(const std::string& m) {
    if (m == "predict") return ZetaMode::predict;
    if (m == "extract") return ZetaMode::extract;
    if (m == "check") return ZetaMode::check;
    invalid_input("mode", "expected predict, extract or check");
}

}  // namespace

PYBIND11_MODULE(_dwork, m) {
    m.doc() = "Dwork hypersurface zeta factorization: predictions and finite-field verification";

    py::register_exception<Error>(m, "DworkError", PyExc_ValueError);

    m.def("prim_dimension", &prim_dimension, py::arg("n"));
    m.def("predict", [](int n) { return to_py(to_json(predict_report(n))); }, py::arg("n"));
    m.def("predict_markdown", [](int n) { return predict_md(predict_report(n)); }, py::arg("n"));
    m.def(
        "count_points",
        [](int n, std::int64_t q, std::int64_t psi, int r) { return to_py_int(count_points(make_instance(n, q, psi), r)); },
        py::arg("n"), py::arg("q"), py::arg("psi"), py::arg("r") = 1);
    m.def(
        "fixed_count",
        [](int n, std::int64_t q, std::int64_t psi, int r, const std::vector<int>& twist, const std::string& sigma) {
            return to_py_int(fixed_count_general(make_instance(n, q, psi), element(n, twist, sigma), r));
        },
        py::arg("n"), py::arg("q"), py::arg("psi"), py::arg("r") = 1, py::arg("twist") = std::vector<int>{},
        py::arg("sigma") = "");
    m.def(
        "oracle_fixed_count",
        [](int n, std::int64_t q, std::int64_t psi, int r, const std::vector<int>& twist, const std::string& sigma) {
            return to_py_int(oracle_fixed_count(make_instance(n, q, psi), element(n, twist, sigma), r));
        },
        py::arg("n"), py::arg("q"), py::arg("psi"), py::arg("r") = 1, py::arg("twist") = std::vector<int>{},
        py::arg("sigma") = "");
    m.def(
        "zeta",
        [](int n, std::int64_t q, std::int64_t psi, const std::string& mode, std::optional<std::vector<int>> orbit) {
            py::gil_scoped_release release;
            auto rep = zeta_report(make_instance(n, q, psi), parse_mode(mode), orbit);
            py::gil_scoped_acquire acquire;
            return to_py(to_json(rep));
        },
        py::arg("n"), py::arg("q"), py::arg("psi"), py::arg("mode") = "check", py::arg("orbit") = py::none());
    m.def("verify_rep", [](int n) { return to_py(to_json(verify_rep_checks(n))); }, py::arg("n"));
    m.def(
        "acceptance_criterion",
        [](int id) {
            auto r = run_criterion(id);
            return to_py(Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        },
        py::arg("id"));
    m.def("set_jobs", &set_jobs, py::arg("jobs"));
    m.attr("criteria") = kCriteria;
}
