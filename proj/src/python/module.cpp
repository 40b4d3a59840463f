#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "crossprod/certificate.hpp"
#include "crossprod/parse.hpp"
#include "crossprod/properties.hpp"
#include "crossprod/semigroup.hpp"

namespace py = pybind11;
using namespace crossprod;

namespace {

using PresPtr = std::shared_ptr<const AlgebraPresentation>;

struct PyElement {
    PresPtr pres;
    CrossedElement value;

    std::string str() const { return element_str(value, *pres); }
};

PyElement make_element(const PresPtr& pres, const std::string& expr) {
    return PyElement{pres, parse_element(expr, *pres)};
}

OrderRule rule_of(const std::string& name) {
    if (name == "deglex") return OrderRule::Deglex;
    if (name == "paper") return OrderRule::PaperLiteral;
    throw std::invalid_argument("order must be 'deglex' or 'paper'");
}

struct PyPresentation {
    PresPtr pres;

    PyElement parse(const std::string& expr) const { return make_element(pres, expr); }

    py::object find_cofactors(const std::string& a, const std::string& b,
                              int cofactor_bound) const {
        auto row = crossprod::find_cofactors(parse_element(a, *pres), parse_element(b, *pres),
                                             cofactor_bound, *pres);
        if (!row) return py::none();
        py::dict d;
        py::list cofs;
        for (const auto& c : row->cofactors) cofs.append(element_str(c, *pres));
        d["cofactors"] = cofs;
        d["certificate"] = certificate_unimodular_row(*row, *pres);
        return d;
    }

    py::object intersection_ideal(const std::string& a, const std::string& b, int cofactor_bound,
                                  int syzygy_bound) const {
        auto row = crossprod::find_cofactors(parse_element(a, *pres), parse_element(b, *pres),
                                             cofactor_bound, *pres);
        if (!row) return py::none();
        auto ideal = build_intersection_ideal(*row, syzygy_bound, *pres);
        if (!ideal) return py::none();
        py::dict d;
        py::list gens;
        for (const auto& g : ideal->generators) gens.append(element_str(g, *pres));
        d["generators"] = gens;
        d["certificate"] = certificate_intersection_ideal(*ideal, *pres);
        return d;
    }

    py::object certify_noncyclic(const std::string& a, const std::string& b, int degree_cap,
                                 int cofactor_bound, int syzygy_bound, bool lift) const {
        const AlgebraPresentation& target = *pres;
        AlgebraPresentation sub = lift ? target.restrict_to_first_generator() : target;
        const AlgebraPresentation& row_pres = lift ? sub : target;
        auto row = crossprod::find_cofactors(parse_element(a, row_pres),
                                             parse_element(b, row_pres), cofactor_bound,
                                             row_pres);
        py::dict d;
        if (!row) {
            d["status"] = "inconclusive";
            d["reason"] = "row not unimodular at the cofactor bound";
            return d;
        }
        auto ideal = build_intersection_ideal(*row, syzygy_bound, row_pres);
        if (!ideal) {
            d["status"] = "inconclusive";
            d["reason"] = "empty syzygy space at the bound";
            return d;
        }
        IdealSpec target_ideal = lift ? lift_ideal(*ideal, sub, target) : *ideal;
        auto outcome = crossprod::certify_noncyclic(target_ideal, degree_cap, cofactor_bound,
                                                    target);
        switch (outcome.status) {
            case NonCyclicityOutcome::Status::Certified:
                d["status"] = "certified";
                d["d0"] = outcome.cert->d0;
                d["d_witness"] = outcome.cert->d_witness;
                d["dim_ideal_at_witness"] = outcome.cert->dim_ideal_at_witness;
                d["dim_full_at_witness"] = outcome.cert->dim_full_at_witness;
                d["certificate"] = certificate_noncyclicity(target_ideal, *outcome.cert, target);
                break;
            case NonCyclicityOutcome::Status::Inconclusive:
                d["status"] = "inconclusive";
                d["reason"] = outcome.reason;
                break;
            default:
                d["status"] = "refused";
                d["reason"] = outcome.reason;
        }
        return d;
    }
};

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact crossed-product kernel: PBW normal forms, unimodular rows, "
              "stably free right ideals, certificates.";

    py::class_<PyElement>(m, "Element")
        .def("__repr__", &PyElement::str)
        .def("__str__", &PyElement::str)
        .def("__eq__", [](const PyElement& a, const PyElement& b) { return a.value == b.value; })
        .def("__add__",
             [](const PyElement& a, const PyElement& b) {
                 return PyElement{a.pres, ce_add(a.value, b.value)};
             })
        .def("__sub__",
             [](const PyElement& a, const PyElement& b) {
                 return PyElement{a.pres, ce_sub(a.value, b.value)};
             })
        .def("__mul__",
             [](const PyElement& a, const PyElement& b) {
                 return PyElement{a.pres, multiply(*a.pres, a.value, b.value)};
             })
        .def("__pow__",
             [](const PyElement& a, int k) { return PyElement{a.pres, ce_pow(*a.pres, a.value, k)}; })
        .def_property_readonly("degree",
                               [](const PyElement& e) -> py::object {
                                   auto d = total_degree(e.value);
                                   if (!d) return py::none();
                                   return py::int_(*d);
                               })
        .def("type",
             [](const PyElement& e, const std::string& order) {
                 return type_of(e.value, rule_of(order));
             },
             py::arg("order") = "deglex")
        .def("filtration_index",
             [](const PyElement& e) { return filtration_index(e.value); })
        .def("str",
             [](const PyElement& e, const std::string& order) {
                 return element_str(e.value, *e.pres, rule_of(order));
             },
             py::arg("order") = "deglex");

    py::class_<PyPresentation>(m, "Presentation")
        .def_property_readonly("num_generators",
                               [](const PyPresentation& p) { return p.pres->num_generators(); })
        .def_property_readonly("num_vars",
                               [](const PyPresentation& p) { return p.pres->num_vars(); })
        .def_property_readonly("hash",
                               [](const PyPresentation& p) { return p.pres->content_hash(); })
        .def("canonical_text",
             [](const PyPresentation& p) { return p.pres->canonical_text(); })
        .def("parse", &PyPresentation::parse, py::arg("expr"))
        .def("nf",
             [](const PyPresentation& p, const std::string& expr) {
                 return p.parse(expr).str();
             },
             py::arg("expr"))
        .def("pbw_count",
             [](const PyPresentation& p, int degree_bound) {
                 return pbw_count(*p.pres, degree_bound);
             },
             py::arg("degree_bound"))
        .def("consistency_check",
             [](const PyPresentation& p, long trials, std::uint64_t seed) {
                 auto rep = consistency_check(*p.pres, trials, seed);
                 return py::make_tuple(rep.pass, rep.witness);
             },
             py::arg("trials") = 200, py::arg("seed") = 1)
        .def("check_a1_freeness",
             [](const PyPresentation& p, int degree_bound) {
                 return check_A1_freeness(*p.pres, degree_bound).pass;
             },
             py::arg("degree_bound") = 6)
        .def("find_cofactors", &PyPresentation::find_cofactors, py::arg("a"), py::arg("b"),
             py::arg("cofactor_bound") = 6)
        .def("intersection_ideal", &PyPresentation::intersection_ideal, py::arg("a"),
             py::arg("b"), py::arg("cofactor_bound") = 6, py::arg("syzygy_bound") = 6)
        .def("certify_noncyclic", &PyPresentation::certify_noncyclic, py::arg("a"), py::arg("b"),
             py::arg("degree_cap") = 10, py::arg("cofactor_bound") = 6,
             py::arg("syzygy_bound") = 6, py::arg("lift") = false);

    m.def("preset",
          [](const std::string& name) {
              return PyPresentation{std::make_shared<AlgebraPresentation>(
                  AlgebraPresentation::preset(name))};
          },
          py::arg("name"));
    m.def("load",
          [](const std::string& name_or_path) {
              return PyPresentation{std::make_shared<AlgebraPresentation>(
                  AlgebraPresentation::load(name_or_path))};
          },
          py::arg("name_or_path"));
    m.def("from_text",
          [](const std::string& text) {
              return PyPresentation{
                  std::make_shared<AlgebraPresentation>(AlgebraPresentation::parse(text))};
          },
          py::arg("text"));

    m.def("sphere",
          [](int n) {
              SphereInstance inst = sphere_column(n);
              StableFreenessWitness w = cokernel_presentation(inst);
              py::dict d;
              d["trace"] = element_str(w.trace, inst.pres);
              d["rank"] = w.rank ? py::cast(*w.rank) : py::none().cast<py::object>();
              d["certificate"] = certificate_stable_freeness(w, inst.pres);
              return d;
          },
          py::arg("n"));

    m.def("verify_certificate",
          [](const std::string& text) {
              VerifyResult r = verify_certificate(text);
              return py::make_tuple(r.ok, r.kind, r.reason);
          },
          py::arg("text"));

    m.def("check_ordered_like",
          [](const std::string& spec, int subset_bound, bool strict) {
              auto sample = FiniteSemigroupSample::builtin(spec);
              auto rep = check_ordered_like(sample, subset_bound, strict);
              py::dict d;
              d["verdict"] = rep.verdict == OrderedLikeReport::Verdict::Pass
                                 ? "pass"
                                 : rep.verdict == OrderedLikeReport::Verdict::Fail
                                       ? "fail"
                                       : "inconclusive";
              d["checked"] = rep.checked;
              d["skipped"] = rep.skipped;
              d["report"] = rep.str(sample);
              return d;
          },
          py::arg("spec"), py::arg("subset_bound") = 3, py::arg("strict") = true);
}
