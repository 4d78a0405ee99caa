#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hsm/albert.hpp"
#include "hsm/atlas.hpp"
#include "hsm/boundary.hpp"
#include "hsm/composition.hpp"
#include "hsm/cones.hpp"
#include "hsm/domains.hpp"
#include "hsm/hsla.hpp"
#include "hsm/jordan.hpp"
#include "hsm/jts.hpp"
#include "hsm/siegel.hpp"
#include "hsm/verify.hpp"

namespace py = pybind11;
using namespace hsm;

namespace {

Convention convention(const std::string& s) {
  if (s == "corrected") return Convention::Corrected;
  if (s == "printed") return Convention::Printed;
  throw Error("UsageError", "convention must be 'corrected' or 'printed'");
}

py::dict symmetry_dict(const SiegelData& S, double tol) {
  const SymmetryReport r = symmetry_criteria(S, tol);
  py::dict d;
  d["cone_symmetric"] = r.cone_symmetric;
  d["criterion_ii"] = r.criterion_ii;
  d["criterion_iii"] = r.criterion_iii;
  d["residual_ii"] = r.residual_ii;
  d["residual_iii"] = r.residual_iii;
  d["symmetric"] = r.cone_symmetric && r.criterion_ii && r.criterion_iii;
  d["witness"] = r.witness;
  return d;
}

}  // namespace

PYBIND11_MODULE(_hsm, m) {
  m.doc() = "Hermitian symmetric spaces: Jordan triple systems, domains, cones, Siegel domains";

  static py::exception<Error> exc(m, "HsmError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, e.what());
    }
  });

  // composition algebras
  m.def("oct_mul", [](const std::array<double, 8>& x, const std::array<double, 8>& y) {
    return oct_mul(Octonion::from_array(x), Octonion::from_array(y)).to_array();
  });

  // Jordan algebras and cones
  m.def("jordan_dim", [](const std::string& a) { return JordanAlgebra::parse(a).dim(); });
  m.def("jordan_mul", [](const std::string& a, const RVec& x, const RVec& y) {
    return jordan_mul(JordanAlgebra::parse(a), x, y);
  });
  m.def("jordan_unit", [](const std::string& a) { return jordan_unit(JordanAlgebra::parse(a)); });
  m.def("jordan_inverse", [](const std::string& a, const RVec& x) {
    return jordan_inverse(JordanAlgebra::parse(a), x);
  });
  m.def("cone_margin", [](const std::string& c, const RVec& x) { return cone_margin(ConeDescriptor::parse(c), x); });
  m.def(
      "cone_classify",
      [](const std::string& c, const RVec& x, double band) {
        return std::string(to_string(cone_classify(ConeDescriptor::parse(c), x, band)));
      },
      py::arg("cone"), py::arg("x"), py::arg("band") = kConeBoundaryBand);
  m.def("cone_for_jordan", [](const std::string& a) { return cone_from_jordan(JordanAlgebra::parse(a)).name(); });

  // Jordan triple systems and domains
  m.def("domain_dim", [](const std::string& t) { return parse_domain(t).dim(); });
  m.def(
      "triple",
      [](const std::string& t, const CVec& x, const CVec& y, const CVec& z, const std::string& conv) {
        const JtsDescriptor D = JtsDescriptor::parse(t);
        for (const CVec* v : {&x, &y, &z}) check_element(D, *v);
        return triple(D, x, y, z, convention(conv));
      },
      py::arg("type"), py::arg("x"), py::arg("y"), py::arg("z"), py::arg("convention") = "corrected");
  m.def("rank", [](const std::string& t, std::uint64_t seed) { return rank(JtsDescriptor::parse(t), seed); },
        py::arg("type"), py::arg("seed") = 42);
  m.def("box_spectrum", [](const std::string& t, const CVec& z) {
    const DomainDescriptor D = parse_domain(t);
    check_element(D, z);
    return box_spectrum(D, z);
  });
  m.def(
      "contains",
      [](const std::string& t, const CVec& z, double tol) {
        const DomainDescriptor D = parse_domain(t);
        check_element(D, z);
        return std::string(to_string(contains(D, z, tol)));
      },
      py::arg("type"), py::arg("z"), py::arg("tol") = kDefaultTol);
  m.def(
      "contains_via_box",
      [](const std::string& t, const CVec& z, double tol) {
        const DomainDescriptor D = parse_domain(t);
        check_element(D, z);
        return std::string(to_string(contains_via_box(D, z, tol)));
      },
      py::arg("type"), py::arg("z"), py::arg("tol") = kDefaultTol);
  m.def("to_matrix", [](const std::string& t, const CVec& z) { return jts_to_matrix(parse_domain(t), z); });
  m.def("from_matrix", [](const std::string& t, const CMat& M) { return jts_from_matrix(parse_domain(t), M); });

  // Siegel domains
  m.def("cayley", [](const std::string& a, const CVec& w) { return cayley(JordanAlgebra::parse(a), w); });
  m.def("cayley_inverse", [](const std::string& a, const CVec& u) {
    return cayley_inverse(JordanAlgebra::parse(a), u);
  });
  m.def("tube_member", [](const std::string& a, const CVec& u, double tol) {
    return std::string(to_string(tube_member(JordanAlgebra::parse(a), u, tol)));
  }, py::arg("alg"), py::arg("u"), py::arg("tol") = kDefaultTol);
  m.def(
      "catalog_criteria", [](const std::string& tag, double tol) { return symmetry_dict(build_catalog(tag), tol); },
      py::arg("tag"), py::arg("tol") = 1e-9);
  m.def("catalog_symmetric_equivalent", &catalog_symmetric_equivalent);

  // atlas
  m.def("lookup", [](const std::string& t) {
    const AtlasRecord r = lookup(t);
    py::dict d;
    d["type"] = r.tag;
    d["canonical"] = r.canonical;
    d["dim"] = r.real_dim;
    d["rank"] = r.rank;
    d["group"] = r.group;
    d["compact_group"] = r.compact_group;
    d["isotropy"] = r.isotropy;
    d["tube"] = r.tube;
    d["boundary_cones"] = r.boundary_cones;
    return d;
  });
  m.def("normalize_type", &normalize_type);
  m.def("tube_type", &tube_type);
  m.def(
      "cominuscule_roots",
      [](const std::string& series, int n) { return cominuscule_roots(DynkinDiagram::parse(series, n)); },
      py::arg("series"), py::arg("n") = 0);

  // Lie algebras
  m.def("central_H", [](const std::string& s) { return central_H(SlaDescriptor::parse(s)); });
  m.def("bracket_triple", [](const std::string& s, const CVec& x, const CVec& y, const CVec& z) {
    return bracket_triple(SlaDescriptor::parse(s), x, y, z);
  });
  m.def("sla_for_domain", [](const std::string& t) { return sla_for_domain(parse_domain(t)).name(); });

  // verification batteries
  m.def("suite_names", &suite_names);
  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t seed, std::optional<int> samples, double tol) {
        VerifyOptions o;
        o.seed = seed;
        o.samples = samples;
        o.tol = tol;
        py::list out;
        for (const Check& c : run_suite(suite, o)) {
          py::dict d;
          d["criterion"] = c.criterion;
          d["suite"] = c.suite;
          d["name"] = c.name;
          d["pass"] = c.pass;
          d["metric"] = c.metric;
          d["detail"] = c.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("suite") = "all", py::arg("seed") = 42, py::arg("samples") = py::none(), py::arg("tol") = 1e-9);
}
