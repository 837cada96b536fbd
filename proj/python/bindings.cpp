#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vanhom/builders.hpp"
#include "vanhom/document.hpp"
#include "vanhom/errors.hpp"
#include "vanhom/thinness.hpp"
#include "vanhom/vanishing.hpp"

namespace py = pybind11;
using namespace vanhom;

namespace {

// Complexes cross the boundary as documents; ids are plain ints.
CellSet to_cells(const std::vector<std::uint32_t>& ids) {
    CellSet out;
    for (auto id : ids) out.insert(CellId{id});
    return out;
}

std::vector<std::uint32_t> from_cells(const CellSet& s) {
    std::vector<std::uint32_t> out;
    for (const auto& id : s) out.push_back(id.value);
    return out;
}

Velocity velocity(const std::string& text) { return Velocity::parse(text); }

RateAnnotation rates_of(const ComplexDocument& doc) { return resolve_rates(doc, ExtRational::infinity()); }

ComplexDocument with_subcomplex(ComplexDocument doc, const std::string& name, const CellSet& cells) {
    doc.subcomplexes[name] = cells;
    return doc;
}

}  // namespace

PYBIND11_MODULE(_vanhom, m) {
    m.doc() = "Exact vanishing homology of annotated cell complexes";

    auto base = py::register_exception<Error>(m, "VanhomError");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<IndeterminateAtPrecision>(m, "IndeterminateAtPrecision", base.ptr());
    py::register_exception<DegenerateSimplex>(m, "DegenerateSimplex", base.ptr());
    py::register_exception<NotFaceClosed>(m, "NotFaceClosed", base.ptr());
    py::register_exception<NotNested>(m, "NotNested", base.ptr());
    py::register_exception<MissingRate>(m, "MissingRate", base.ptr());
    py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());

    py::class_<PuiseuxSeries>(m, "Series")
        .def(py::init([](const std::string& text) { return PuiseuxSeries::parse(text); }))
        .def("valuation", [](const PuiseuxSeries& s) { return s.valuation().str(); })
        .def("sign", &PuiseuxSeries::sign)
        .def("__add__", [](const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + b; })
        .def("__sub__", [](const PuiseuxSeries& a, const PuiseuxSeries& b) { return a - b; })
        .def("__mul__", [](const PuiseuxSeries& a, const PuiseuxSeries& b) { return a * b; })
        .def("__neg__", [](const PuiseuxSeries& a) { return -a; })
        .def("__eq__", [](const PuiseuxSeries& a, const PuiseuxSeries& b) { return a == b; })
        .def("__lt__", [](const PuiseuxSeries& a, const PuiseuxSeries& b) { return compare(a, b) < 0; })
        .def("__gt__", [](const PuiseuxSeries& a, const PuiseuxSeries& b) { return compare(a, b) > 0; })
        .def("__str__", &PuiseuxSeries::str)
        .def("__repr__", [](const PuiseuxSeries& s) { return "Series('" + s.str() + "')"; });

    m.def(
        "in_velocity", [](const PuiseuxSeries& x, const std::string& v) { return velocity(v).contains(x); },
        py::arg("x"), py::arg("velocity"));

    py::class_<ComplexDocument>(m, "Complex")
        .def_readonly("name", &ComplexDocument::name)
        .def_property_readonly("f_vector", [](const ComplexDocument& d) { return d.complex.f_vector(); })
        .def_property_readonly("dimension", [](const ComplexDocument& d) { return d.complex.dimension(); })
        .def_property_readonly("subcomplexes",
                               [](const ComplexDocument& d) {
                                   std::map<std::string, std::vector<std::uint32_t>> out;
                                   for (const auto& [name, s] : d.subcomplexes) out[name] = from_cells(s);
                                   return out;
                               })
        .def("cells_of_dim",
             [](const ComplexDocument& d, int j) {
                 std::vector<std::uint32_t> out;
                 for (const auto& id : d.complex.cells_of_dim(j)) out.push_back(id.value);
                 return out;
             })
        .def("rates",
             [](const ComplexDocument& d) {
                 std::map<std::uint32_t, std::string> out;
                 for (const auto& [id, r] : rates_of(d)) out[id.value] = r.str();
                 return out;
             })
        .def("with_subcomplex",
             [](const ComplexDocument& d, const std::string& name, const std::vector<std::uint32_t>& ids) {
                 return with_subcomplex(d, name, to_cells(ids));
             })
        .def("dumps", &dump_document)
        .def("save", [](const ComplexDocument& d, const std::string& path) { save_document(d, path); });

    m.def("loads", &parse_document, py::arg("text"));
    m.def("load", &load_document, py::arg("path"));

    m.def(
        "torus",
        [](const std::string& p, const std::string& q, int n, bool geometry) {
            const Rational rp = Rational::parse(p);
            const Rational rq = Rational::parse(q);
            const std::string name = "torus(p=" + rp.str() + ",q=" + rq.str() + ",n=" + std::to_string(n) + ")";
            return geometry ? document_from(torus_geometry(rp, rq, n), name)
                            : document_from(build_torus(rp, rq, n), name);
        },
        py::arg("p") = "0", py::arg("q") = "2", py::arg("n") = 3, py::arg("geometry") = false);
    m.def(
        "pinched_spheres",
        [](const std::string& r, int n) {
            const auto ps = build_pinched_spheres(Rational::parse(r), n);
            auto doc = document_from(AnnotatedComplex{ps.complex, ps.rates}, "pinched");
            doc.subcomplexes["A"] = ps.equator;
            return doc;
        },
        py::arg("r") = "2", py::arg("n") = 3);
    m.def(
        "circle",
        [](int n, const std::string& rate) { return document_from(build_circle(n, ExtRational::parse(rate)), "circle"); },
        py::arg("n") = 6, py::arg("rate") = "2");

    m.def(
        "vanishing_betti",
        [](const ComplexDocument& d, const std::string& v, bool oracle) {
            const auto rates = rates_of(d);
            const auto t = oracle ? vanishing_betti_oracle(d.complex, rates, velocity(v))
                                  : vanishing_betti(d.complex, rates, velocity(v));
            return t.dims;
        },
        py::arg("complex"), py::arg("velocity"), py::arg("oracle") = false);
    m.def(
        "euler",
        [](const ComplexDocument& d, const std::string& v) {
            return vanishing_betti(d.complex, rates_of(d), velocity(v)).euler;
        },
        py::arg("complex"), py::arg("velocity"));
    m.def(
        "sweep",
        [](const ComplexDocument& d) {
            std::map<int, std::vector<py::tuple>> out;
            for (const auto& [j, intervals] : sweep(d.complex, rates_of(d)).degrees) {
                for (const auto& iv : intervals) {
                    out[j].push_back(py::make_tuple(iv.lower ? iv.lower->str() : "-inf",
                                                    iv.upper ? iv.upper->str() : "inf", iv.dimension));
                }
            }
            return out;
        },
        py::arg("complex"));
    m.def(
        "relative",
        [](const ComplexDocument& d, const std::vector<std::uint32_t>& a, const std::string& v) {
            const auto r = relative_vanishing(d.complex, rates_of(d), to_cells(a), velocity(v));
            py::dict out;
            out["absolute"] = r.absolute;
            out["relative"] = r.relative;
            out["boundary"] = r.boundary;
            out["exact"] = r.exact;
            return out;
        },
        py::arg("complex"), py::arg("subcomplex"), py::arg("velocity"));
    m.def(
        "les_exact",
        [](const ComplexDocument& d, const std::vector<std::uint32_t>& a, const std::string& v) {
            return les_check(d.complex, rates_of(d), to_cells(a), velocity(v)).exact;
        },
        py::arg("complex"), py::arg("subcomplex"), py::arg("velocity"));
    m.def(
        "excision",
        [](const ComplexDocument& d, const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& w,
           const std::string& v) {
            const auto r = excision_check(d.complex, rates_of(d), to_cells(a), to_cells(w), velocity(v));
            return py::make_tuple(r.full, r.excised, r.equal);
        },
        py::arg("complex"), py::arg("subcomplex"), py::arg("excise"), py::arg("velocity"));
}
