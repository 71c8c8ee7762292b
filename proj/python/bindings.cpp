#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "narayana/closedforms.hpp"
#include "narayana/hankel.hpp"
#include "narayana/hfrac.hpp"
#include "narayana/sequences.hpp"
#include "narayana/verify.hpp"

namespace py = pybind11;
using namespace narayana;

namespace {

// Coefficients cross the boundary as decimal strings; the Python layer turns them into Fractions.
std::vector<std::string> coeff_strings(const PolyT& p) {
    std::vector<std::string> out;
    for (const Rational& c : p.coeffs()) out.push_back(to_string(c));
    return out;
}

py::tuple ratfunc_parts(const RatFunc& r) { return py::make_tuple(coeff_strings(r.num()), coeff_strings(r.den())); }

py::list hfrac_quotients(const HFraction& h) {
    py::list out;
    for (const PartialQuotient& pq : h.quotients) {
        py::list u;
        for (const RatFunc& c : pq.u.coeffs()) u.append(ratfunc_parts(c));
        out.append(py::make_tuple(pq.k, ratfunc_parts(pq.v), u));
    }
    return out;
}

SuiteBounds bounds_from(const py::dict& d) {
    SuiteBounds b;
    for (const auto& [key, value] : d) {
        const auto k = key.cast<std::string>();
        const auto v = value.cast<long>();
        if (k == "m_min") b.m_min = v;
        else if (k == "m_max") b.m_max = v;
        else if (k == "n_max") b.n_max = v;
        else if (k == "j_max") b.j_max = v;
        else if (k == "order") b.order = v;
        else if (k == "shift") b.shift = v;
        else throw PreconditionError("unknown bound: " + k);
    }
    return b;
}

}  // namespace

PYBIND11_MODULE(_narayana, m) {
    m.doc() = "Exact Hankel determinants of convolution powers of Narayana polynomials";

    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<MathError>(m, "MathError", PyExc_ArithmeticError);

    m.def("narayana_poly", [](unsigned n) { return coeff_strings(narayana_poly(n)); }, py::arg("n"));
    m.def(
        "conv_power_seq",
        [](unsigned tau, std::size_t count) {
            std::vector<std::vector<std::string>> out;
            for (const PolyT& p : conv_power_seq(tau, count)) out.push_back(coeff_strings(p));
            return out;
        },
        py::arg("tau"), py::arg("count"));
    m.def(
        "family_entries",
        [](unsigned mm, unsigned shift, std::size_t count) {
            std::vector<std::vector<std::string>> out;
            for (const PolyT& p : family_entries({mm, shift}, count)) out.push_back(coeff_strings(p));
            return out;
        },
        py::arg("m"), py::arg("shift"), py::arg("count"));
    m.def(
        "hankel_dets",
        [](unsigned mm, unsigned shift, std::size_t max_size) {
            const auto e = family_entries({mm, shift}, 2 * max_size + 1);
            py::list out;
            for (const RatFunc& d : hankel_dets({e.begin(), e.end()}, max_size)) out.append(ratfunc_parts(d));
            return out;
        },
        py::arg("m"), py::arg("shift"), py::arg("max_size"));
    m.def(
        "main_det",
        [](unsigned mm, unsigned shift, std::size_t size) {
            const DetCase c = main_det({mm, shift}, size);
            return py::make_tuple(ratfunc_parts(c.value), c.case_label, c.ambiguous);
        },
        py::arg("m"), py::arg("shift"), py::arg("size"));
    m.def("cigler_det", [](unsigned variant, std::size_t size) { return ratfunc_parts(cigler_det(variant, size)); },
          py::arg("variant"), py::arg("size"));
    m.def(
        "hfrac",
        [](unsigned mm, unsigned shift, std::size_t order, std::size_t max_terms) {
            const HFraction h = hfrac_expand(family_series({mm, shift}, order), 2, max_terms);
            return py::make_tuple(hfrac_quotients(h), to_string(h.status));
        },
        py::arg("m"), py::arg("shift"), py::arg("order"), py::arg("max_terms"));
    m.def("suite_names", &suite_names);
    m.def(
        "run_suite",
        [](const std::string& name, const py::dict& bounds) {
            py::list out;
            for (const CheckRecord& r : run_suite(name, bounds_from(bounds))) {
                py::dict d;
                d["suite"] = r.suite;
                d["params"] = r.params;
                d["status"] = to_string(r.status);
                d["expected"] = r.expected;
                d["actual"] = r.actual;
                d["elapsed_us"] = r.elapsed_us;
                out.append(d);
            }
            return out;
        },
        py::arg("name"), py::arg("bounds") = py::dict());
}
