// Python bindings for the core operations.
#include "qsymcat/composition.hpp"
#include "qsymcat/gfunction.hpp"
#include "qsymcat/groebner.hpp"
#include "qsymcat/ideal.hpp"
#include "qsymcat/qsym.hpp"
#include "qsymcat/rational.hpp"
#include "qsymcat/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

namespace py = pybind11;
using namespace qsymcat;

namespace {

py::int_ big_int(const Int& value) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(value.str().c_str(), nullptr, 10));
}

py::object rational(const Rat& value) {
    py::object fractions = py::module_::import("fractions");
    return fractions.attr("Fraction")(value.str());
}

Composition comp(const std::vector<int>& parts) { return Composition(parts); }
GenComposition gcomp(const std::vector<int>& parts) { return GenComposition(parts); }

py::list poly_terms(const Polynomial& p) {
    py::list out;
    for (const auto& [m, c] : p.terms())
        out.append(py::make_tuple(c.str(), m.exponents()));
    return out;
}

py::dict report_dict(const VerifyReport& r) {
    py::dict out;
    out["suite"] = r.suite;
    out["instances"] = r.instances;
    out["failures"] = r.failures;
    out["passed"] = r.passed();
    py::dict info;
    for (const auto& [k, v] : r.info) info[py::str(k)] = v;
    out["info"] = info;
    return out;
}

VerifyOptions options_from(int max_deg, int max_len, int max_n, int max_e, int window,
                           long long samples, unsigned long long seed, int threads) {
    VerifyOptions o;
    o.max_deg = max_deg;
    o.max_len = max_len;
    o.max_n = max_n;
    o.max_e = max_e;
    o.window = window;
    o.samples = samples;
    o.seed = seed;
    o.threads = threads;
    return o;
}

}  // namespace

PYBIND11_MODULE(_qsymcat, m) {
    m.doc() = "quasi-symmetric quotient calculator";

    py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);

    py::class_<Polynomial>(m, "Polynomial")
        .def("__str__", &Polynomial::str)
        .def("__repr__",
             [](const Polynomial& p) { return "Polynomial(" + p.str() + ")"; })
        .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
        .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
        .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
        .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
        .def_property_readonly("window", &Polynomial::window)
        .def_property_readonly("is_zero", &Polynomial::is_zero)
        .def("terms", &poly_terms, "list of (coefficient string, exponent list)");

    m.def("parse_polynomial", [](const std::string& text, int window) {
        return Polynomial::parse(text, window);
    });

    // compositions
    m.def("descent_set", [](const std::vector<int>& alpha) {
        return descent_set(comp(alpha));
    });
    m.def("composition_from_subset", [](const std::set<int>& subset, int d) {
        return composition_from_subset(subset, d).parts();
    });
    m.def("refines", [](const std::vector<int>& beta, const std::vector<int>& alpha) {
        return refines(comp(beta), comp(alpha));
    });
    m.def("refinements", [](const std::vector<int>& alpha) {
        py::list out;
        for (const Composition& beta : refinements(comp(alpha))) out.append(beta.parts());
        return out;
    });
    m.def("reaches_level", [](const std::vector<int>& alpha, int e) {
        return reaches_level(gcomp(alpha), e);
    });
    m.def("is_e_catalan", [](const std::vector<int>& alpha, int e) {
        return is_e_catalan(gcomp(alpha), e);
    });
    m.def("enumerate_e_catalan", [](int n, int e) {
        py::list out;
        for (const GenComposition& alpha : enumerate_e_catalan(n, e))
            out.append(alpha.parts());
        return out;
    });
    m.def("count_e_catalan", [](int n, int e) { return big_int(count_e_catalan(n, e)); });
    m.def("render_path", [](const std::vector<int>& alpha) {
        return render_path(gcomp(alpha)).text;
    });
    m.def("factorize_for_recursion", [](const std::vector<int>& alpha) {
        GFactorization f = factorize_for_recursion(gcomp(alpha));
        return py::make_tuple(f.gamma.parts(), f.a, f.beta.parts());
    });

    // qsym
    m.def("monomial_qsym", [](const std::vector<int>& alpha, int n) {
        return monomial_qsym(comp(alpha), n);
    });
    m.def("fundamental_qsym", [](const std::vector<int>& alpha, int n) {
        return fundamental_qsym(comp(alpha), n);
    });
    m.def("check_f_recurrence", [](const std::vector<int>& alpha, int n) {
        return check_f_recurrence(comp(alpha), n);
    });
    m.def("expand_in_m", [](const std::vector<int>& alpha) {
        py::list out;
        for (const auto& [beta, c] : expand_in_M(comp(alpha)))
            out.append(py::make_tuple(beta.parts(), c));
        return out;
    });

    // generators
    m.def("gfun", [](const std::vector<int>& alpha, int n) { return gfun(gcomp(alpha), n); });
    m.def("check_lm", [](const std::vector<int>& alpha, int n) {
        return check_lm(gcomp(alpha), n);
    });
    m.def("check_shift_relation", [](const std::vector<int>& rho, int n) {
        return check_shift_relation(gcomp(rho), n);
    });
    m.def("m_remainder", [](const std::vector<int>& alpha, int n) {
        return m_remainder(gcomp(alpha), n);
    });

    // ideal slices
    m.def("hilbert_function", [](int n, int e, int d_max) {
        HilbertTable table = hilbert_function(n, e, d_max);
        py::dict out;
        out["n"] = table.window;
        out["e"] = table.level;
        out["dims"] = table.dims;
        out["total"] = big_int(table.total());
        Int bound = count_e_catalan(n, e);
        out["catalan_bound"] = big_int(bound);
        out["equality"] = table.total() == bound;
        return out;
    });
    m.def("slice_rank", [](int n, int e, int d) { return ideal_slice(n, e, d).rank(); });
    m.def("contains", [](const Polynomial& p, int n, int e) { return contains(p, n, e); });
    m.def("normal_form", [](const Polynomial& p, int n, int e) {
        return normal_form(p, n, e);
    });
    m.def("normal_form_monomial", [](const std::vector<int>& exponents, int n, int e) {
        Polynomial p = Polynomial::monomial(Monomial::from_composition(gcomp(exponents), n));
        return normal_form(p, n, e);
    });
    m.def("apolar_pair", [](const Polynomial& p, const Polynomial& q) {
        return rational(apolar_pair(p, q));
    });
    m.def("superharmonic_dim", [](int n, int e, int d) {
        return superharmonic_dim(n, e, d);
    });

    // groebner
    m.def("s_polynomial", [](const Polynomial& p, const Polynomial& q) {
        return s_polynomial(p, q);
    });
    m.def("check_lattice", [](const std::vector<int>& alpha, const std::vector<int>& rho,
                              int e) { return check_lattice(gcomp(alpha), gcomp(rho), e); });
    m.def("reduce_by_gbasis", [](const Polynomial& p, int n, int e) {
        return reduce_by_gbasis(p, n, e);
    });

    // verification sweeps
    m.def(
        "verify",
        [](const std::string& suite, int max_deg, int max_len, int max_n, int max_e,
           int window, long long samples, unsigned long long seed, int threads) {
            VerifyOptions o = options_from(max_deg, max_len, max_n, max_e, window, samples,
                                           seed, threads);
            if (suite == "all") {
                py::list out;
                for (const VerifyReport& r : verify_all(o)) out.append(report_dict(r));
                return py::object(out);
            }
            return py::object(report_dict(verify_suite(suite, o)));
        },
        py::arg("suite"), py::arg("max_deg") = -1, py::arg("max_len") = -1,
        py::arg("max_n") = -1, py::arg("max_e") = -1, py::arg("window") = -1,
        py::arg("samples") = -1, py::arg("seed") = 12345, py::arg("threads") = 1);
}
