#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "grasscohom/analysis.hpp"
#include "grasscohom/bott.hpp"
#include "grasscohom/cli.hpp"
#include "grasscohom/criteria.hpp"
#include "grasscohom/expr.hpp"
#include "grasscohom/weights.hpp"

namespace py = pybind11;
using namespace grc;

namespace {

// Arbitrary-precision integers cross the boundary as Python ints.
py::int_ to_py(const BigInt& v)
{
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::tuple weight_tuple(const GLWeight& w)
{
    const auto& v = w.vec();
    py::tuple t(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        t[i] = v[i];
    return t;
}

GLWeight to_weight(const std::vector<int>& v)
{
    return GLWeight(v);
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact cohomology of homogeneous bundles on the Grassmannian of lines G(1,n)";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

    m.def("weyl_dim", [](const std::vector<int>& w) { return to_py(weyl_dim(to_weight(w))); }, py::arg("weight"));
    m.def("dual_weight", [](const std::vector<int>& w) { return weight_tuple(dual_weight(to_weight(w))); },
          py::arg("weight"));
    m.def(
        "tensor_weights",
        [](const std::vector<int>& a, const std::vector<int>& b) {
            py::dict out;
            for (const auto& [w, mult] : tensor_weights(to_weight(a), to_weight(b)))
                out[weight_tuple(w)] = to_py(mult);
            return out;
        },
        py::arg("lam"), py::arg("mu"));

    m.def(
        "bott",
        [](int n, const std::vector<int>& alpha, const std::vector<int>& beta) -> py::object {
            const auto r = bott(Irred(n, to_weight(alpha), to_weight(beta)));
            if (!r)
                return py::none();
            return py::make_tuple(r->degree, weight_tuple(r->lambda), to_py(r->dim));
        },
        py::arg("n"), py::arg("alpha"), py::arg("beta"),
        "Return (degree, lambda, dim) of the single nonzero cohomology module, or None.");

    m.def(
        "cohomology",
        [](const std::string& expr, int n, int twist_by) {
            const CohomRecord rec = cohomology(twist(bundle(expr, n), twist_by));
            py::list dims;
            for (int d = 0; d <= rec.top(); ++d)
                dims.append(to_py(rec.dim(d)));
            return dims;
        },
        py::arg("expr"), py::arg("n"), py::arg("twist") = 0, "Dimensions h^0..h^{2n-2}.");

    m.def("rank", [](const std::string& expr, int n) { return to_py(rank(bundle(expr, n))); }, py::arg("expr"),
          py::arg("n"));

    m.def(
        "g_reg",
        [](const std::string& expr, int n) -> py::object {
            const auto v = g_reg(bundle(expr, n));
            if (!v)
                return py::none();
            return py::int_(*v);
        },
        py::arg("expr"), py::arg("n"), "Least G-regular twist; None for the zero bundle (minus infinity).");

    m.def("is_g_regular", [](const std::string& expr, int n) { return is_g_regular(bundle(expr, n)).verdict; },
          py::arg("expr"), py::arg("n"));

    m.def(
        "check",
        [](const std::string& criterion, const std::string& expr, int n) {
            const IrredSum s = bundle(expr, n);
            const auto colon = criterion.find(':');
            const std::string kind = criterion.substr(0, colon);
            const int arg = colon == std::string::npos ? 0 : std::stoi(criterion.substr(colon + 1));
            CriterionReport rep;
            if (kind == "eg")
                rep = colon == std::string::npos ? check_evans_griffith(s) : check_evans_griffith(s, arg);
            else if (kind == "wedge")
                rep = check_wedge_summand(s, arg);
            else if (kind == "sym")
                rep = check_sym_summand(s, arg);
            else if (kind == "mt")
                rep = check_mt(s);
            else if (kind == "qreg")
                rep = check_q_regular(s);
            else
                throw py::value_error("unknown criterion '" + criterion + "'");
            py::dict failed;
            for (const auto& c : rep.conditions)
                failed[py::str(c.label)] = c.satisfied;
            return py::make_tuple(rep.verdict, failed);
        },
        py::arg("criterion"), py::arg("expr"), py::arg("n"),
        "Return (verdict, {condition label: satisfied}).");

    m.def(
        "run",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command line tool in-process; returns (exit code, stdout, stderr).");
}
