// Python bindings for the main operations: dimension oracles, bases of the
// invariant harmonic spaces (both pipelines), Hecke matrices, congruence
// certificates, CM points, and the universal-form divisions. Exact values
// cross the boundary as decimal strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qmf/arith.hpp"
#include "qmf/ecoord.hpp"
#include "qmf/harmonic.hpp"
#include "qmf/hecke.hpp"
#include "qmf/quaternion.hpp"

namespace py = pybind11;
using namespace qmf;

namespace {

py::dict poly_to_dict(const HomogeneousPoly& f) {
    py::dict out;
    out["l"] = f.degree();
    out["frame"] = frame_name(f.frame());
    py::list terms;
    for (const auto& [t, c] : f.terms())
        terms.append(py::make_tuple(py::make_tuple(t.a, t.b, t.c), to_string(c)));
    out["terms"] = terms;
    out["text"] = f.to_text();
    return out;
}

py::list matrix_to_list(const RationalMatrix& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_string(m.at(i, j)));
        rows.append(row);
    }
    return rows;
}

BasisResult basis_for(int l, const std::string& variant, const std::string& algorithm) {
    Variant v = variant_from_name(variant);
    if (algorithm == "ecoord") return ecoord_basis(l, v);
    if (algorithm != "main") throw std::invalid_argument("algorithm must be main|ecoord");
    return basis(l, v);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact bases of invariant harmonic polynomial spaces, Hecke matrices, "
              "dimension oracles, and mod-2 congruence certificates.";

    m.def("dims", [](int l) {
        DimTriple d = dim_formula(l);
        return py::make_tuple(d.gamma, d.plus, d.minus);
    }, py::arg("l"), "Closed-form dimensions (full, plus, minus) at degree l.");

    m.def("dim_via_trace_formula", &dim_via_trace_formula, py::arg("l"));
    m.def("trace_t2_formula", &trace_t2_formula, py::arg("l"));
    m.def("dim_eh_formula", &dim_eh_formula, py::arg("m"));

    m.def("theta_character", [](int l, long trace) {
        return to_string(theta_character(l, Rational(trace)));
    }, py::arg("l"), py::arg("trace"),
       "Character value at a rotation with the given integer trace.");

    m.def("legendre", [](int l) {
        py::list out;
        for (const auto& c : legendre(l)) out.append(to_string(c));
        return out;
    }, py::arg("l"), "Legendre coefficients, constant term first.");

    m.def("basis", [](int l, const std::string& variant, const std::string& algorithm) {
        BasisResult b = basis_for(l, variant, algorithm);
        py::list out;
        for (std::size_t k = 0; k < b.dim(); ++k) {
            py::dict entry;
            entry["poly"] = poly_to_dict(b.basis[k]);
            entry["scale"] = to_string(b.scales[k]);
            out.append(entry);
        }
        return out;
    }, py::arg("l"), py::arg("variant") = "gamma", py::arg("algorithm") = "main",
       "Primitive integer basis of the invariant harmonic space.");

    m.def("hecke_matrix", [](int l, const std::string& variant, long p,
                             const std::string& algorithm) {
        BasisResult b = basis_for(l, variant, algorithm);
        HeckeMatrix h = hecke_matrix(p, b);
        py::dict out;
        out["p"] = p;
        out["l"] = l;
        out["variant"] = variant;
        out["matrix"] = matrix_to_list(h.matrix);
        py::list cp;
        for (const auto& c : char_poly(h.matrix)) cp.append(to_string(c));
        out["charpoly"] = cp;
        return out;
    }, py::arg("l"), py::arg("variant"), py::arg("p"), py::arg("algorithm") = "main",
       "Matrix of the norm-p operator in the computed basis (columns = images).");

    m.def("congruence_certificate", [](int l, long max_multiplier) {
        CongruenceCertificate c = congruence_certificate(l, max_multiplier);
        py::dict out;
        out["l"] = c.l;
        out["found"] = c.found;
        out["pair"] = c.pair;
        out["index_i"] = c.index_i;
        out["index_j"] = c.index_j;
        out["multiplier"] = c.multiplier;
        out["sign"] = c.sign;
        out["description"] = c.describe();
        if (c.found) out["certified"] = poly_to_dict(c.certified);
        return out;
    }, py::arg("l"), py::arg("max_multiplier") = 15,
       "Integer-coefficient combination of the plus basis congruent to the "
       "norm power mod 2.");

    m.def("cm_points", [](long disc) {
        py::list out;
        for (const auto& p : cm_points(disc))
            out.append(py::make_tuple(p.coords[0], p.coords[1], p.coords[2]));
        return out;
    }, py::arg("disc"), "All lattice points of norm -disc.");

    m.def("parity_at_cm", [](int l, const std::string& variant, std::size_t index, long disc) {
        BasisResult b = basis_for(l, variant, "main");
        if (index >= b.dim()) throw std::out_of_range("basis index");
        return parity_at_cm(b.basis[index], disc);
    }, py::arg("l"), py::arg("variant"), py::arg("index"), py::arg("disc"));

    m.def("divide", [](int l, const std::string& variant, std::size_t index,
                       const std::string& by) -> py::object {
        BasisResult b = basis_for(l, variant, "main");
        if (index >= b.dim()) throw std::out_of_range("basis index");
        DivisionResult r =
            by == "f3" ? divides_f3(b.basis[index]) : divides_f6minus(b.basis[index]);
        if (!r.ok) return py::none();
        return poly_to_dict(r.quotient);
    }, py::arg("l"), py::arg("variant"), py::arg("index"), py::arg("by"),
       "Exact quotient by a universal form, or None when not divisible.");

    m.def("hecke_coset_count", [](long p) {
        return hecke_coset_reps(p).size();
    }, py::arg("p"));
}
