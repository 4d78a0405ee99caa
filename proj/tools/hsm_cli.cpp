// hsm: command-line front end. JSON on stdout, diagnostics on stderr.
// Exit codes: 0 ok/member, 1 negative, 2 usage or input error, 3 boundary band.
#include <CLI11.hpp>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "hsm/atlas.hpp"
#include "hsm/boundary.hpp"
#include "hsm/cones.hpp"
#include "hsm/hsla.hpp"
#include "hsm/io.hpp"
#include "hsm/jts.hpp"
#include "hsm/siegel.hpp"
#include "hsm/verify.hpp"

using namespace hsm;
using io::json;

namespace {

struct Globals {
  double tol = 1e-9;
  std::uint64_t seed = 42;
  int samples = 100;
  bool pretty = false, json_out = false;
  bool samples_given = false, tol_given = false;
};

struct TypeArgs {
  std::string type;
  int p = 0, q = 0, n = 0;
};

void add_type(CLI::App* sub, TypeArgs& t, bool required = true) {
  auto* o = sub->add_option("--type", t.type, "I, II, III, IV, V, VI or a full tag such as I:3:2");
  if (required) o->required();
  sub->add_option("--p", t.p, "type I: rows");
  sub->add_option("--q", t.q, "type I: columns");
  sub->add_option("--n", t.n, "types II, III, IV: size");
}

std::string type_tag(const TypeArgs& t) {
  if (t.type == "I") {
    if (t.p < 1 || t.q < 1) throw Error("UsageError", "type I needs --p and --q");
    return "I:" + std::to_string(t.p) + ":" + std::to_string(t.q);
  }
  if (t.type == "II" || t.type == "III" || t.type == "IV") {
    if (t.n < 1) throw Error("UsageError", "type " + t.type + " needs --n");
    return t.type + ":" + std::to_string(t.n);
  }
  return t.type;
}

DomainDescriptor domain_of(const TypeArgs& t) { return parse_domain(type_tag(t)); }

int tri_exit(TriState s) { return s == TriState::Member ? 0 : s == TriState::Boundary ? 3 : 1; }

// Human rendering of a payload: "key: value" lines, nested objects indented.
void render(std::ostream& os, const json& j, int indent = 0) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !v.empty() && v[0].is_object())) {
        os << pad << k << ":\n";
        render(os, v, indent + 2);
      } else {
        os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      render(os, v, indent + 2);
      if (v.is_object()) os << "\n";
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void render_checks(std::ostream& os, const std::vector<Check>& cs) {
  for (const auto& c : cs) {
    os << (c.criterion == 0 ? "INFO" : c.pass ? "PASS" : "FAIL") << "  ";
    os << std::left << std::setw(4) << (c.criterion ? std::to_string(c.criterion) : "-") << std::setw(20) << c.suite
       << c.name;
    if (!c.detail.empty()) os << "  [" << c.detail << "]";
    os << "\n";
  }
}

json meta(const Globals& g) {
  return {{"rng", Rng::algorithm()}, {"seed", g.seed}, {"tol", g.tol}};
}

std::string names(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  Globals G;
  if (const char* env = std::getenv("HSM_TOL")) {
    try {
      G.tol = std::stod(env);
    } catch (...) {
      std::cerr << "HSM_TOL is not a number: " << env << "\n";
      return 2;
    }
  }

  CLI::App app{"Hermitian symmetric manifolds: Jordan algebras, triple systems, domains, cones"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--tol", G.tol, "classification tolerance (default 1e-9, env HSM_TOL)");
  app.add_option("--seed", G.seed, "RNG seed");
  app.add_option("--samples", G.samples, "sample count");
  app.add_flag("--json", G.json_out, "JSON output (default)");
  app.add_flag("--pretty", G.pretty, "human-readable output");

  TypeArgs T;
  std::string alg, cone, point, gfile, xs, ys, zs, es, catalog, series, route = "direct", reading = "corrected",
                                                                       convention = "corrected", suite = "all";
  int k = 0, nn = 0;
  bool inverse = false;
  double radius = 0.5;

  std::vector<std::pair<CLI::App*, std::function<int(json&)>>> handlers;
  std::vector<Check> checks_out;  // for table rendering
  auto on = [&](CLI::App* sub, std::function<int(json&)> f) { handlers.emplace_back(sub, std::move(f)); };

  // ---- atlas ----
  auto* atlas = app.add_subcommand("atlas", "classification tables");
  atlas->require_subcommand(1);
  {
    auto* show = atlas->add_subcommand("show", "one row of the classification");
    add_type(show, T);
    on(show, [&](json& out) {
      const AtlasRecord r = lookup(type_tag(T));
      out = {{"type", r.tag},         {"canonical", r.canonical},   {"dim", r.real_dim},
             {"complex_dim", r.real_dim / 2}, {"rank", r.rank},     {"group", r.group},
             {"compact_group", r.compact_group}, {"isotropy", r.isotropy}, {"tube", r.tube},
             {"boundary_cones", r.boundary_cones}, {"aliases", r.aliases}};
      return 0;
    });
    auto* com = atlas->add_subcommand("cominuscule", "cominuscule nodes via the highest root");
    com->add_option("--series", series, "A, B, C, D, E6, E7, E8, F4, G2")->required();
    com->add_option("--n", nn, "rank for A-D");
    on(com, [&](json& out) {
      const DynkinDiagram d = DynkinDiagram::parse(series, nn);
      out = {{"series", d.series}, {"n", d.n}, {"highest_root", highest_root(d)},
             {"positive_roots", positive_roots(d).size()}, {"cominuscule", cominuscule_roots(d)}};
      return 0;
    });
    auto* tubes = atlas->add_subcommand("tubes", "tube-type domains and their cones");
    on(tubes, [&](json& out) {
      out = json::array();
      for (const auto& r : tube_table()) out.push_back({{"cone", r.cone}, {"domain", r.domain}});
      return 0;
    });
  }

  // ---- domain ----
  auto* domain = app.add_subcommand("domain", "bounded symmetric domains");
  domain->require_subcommand(1);
  {
    auto* mem = domain->add_subcommand("member", "tri-state membership");
    add_type(mem, T);
    mem->add_option("--point", point, "JSON text or file")->required();
    mem->add_option("--route", route)->check(CLI::IsMember({"box", "direct", "both"}));
    mem->add_option("--reading", reading, "type V inequality reading")->check(CLI::IsMember({"corrected", "literal"}));
    on(mem, [&](json& out) {
      const DomainDescriptor D = domain_of(T);
      const CVec z = io::point_from_json(D, io::load(point));
      const VReading rd = reading == "literal" ? VReading::Literal : VReading::Corrected;
      out = {{"type", D.name()}, {"meta", meta(G)}};
      TriState s = TriState::Member;
      if (route != "box") {
        const double m = domain_margin(D, z, rd);
        s = classify_margin(m, G.tol);
        out["direct"] = {{"margin", m}, {"result", to_string(s)}};
      }
      if (route != "direct") {
        const double m = box_margin(D, z);
        const TriState b = classify_margin(m, G.tol);
        out["box"] = {{"margin", m}, {"result", to_string(b)}};
        if (route == "box") s = b;
        else out["agree"] = b == s;
      }
      out["result"] = to_string(s);
      return tri_exit(s);
    });
    auto* act = domain->add_subcommand("act", "Mobius action of a group element");
    add_type(act, T);
    act->add_option("--g", gfile, "group element (JSON matrix)")->required();
    act->add_option("--point", point)->required();
    on(act, [&](json& out) {
      const DomainDescriptor D = domain_of(T);
      const GroupElement g = io::group_from_json(D, io::load(gfile), std::max(G.tol, 1e-9));
      const CVec z = io::point_from_json(D, io::load(point));
      const CVec w = mobius_act(D, g, z);
      out = {{"type", D.name()}, {"group", g.tag()}, {"image", io::to_json(w)},
             {"image_result", to_string(contains(D, w, G.tol))}, {"meta", meta(G)}};
      return 0;
    });
    auto* samp = domain->add_subcommand("sample", "seeded point of spectral radius --radius");
    add_type(samp, T);
    samp->add_option("--radius", radius);
    on(samp, [&](json& out) {
      const DomainDescriptor D = domain_of(T);
      Rng rng(G.seed);
      CVec z = rng.cnormal_vec(D.dim());
      z *= radius / std::sqrt(box_spectrum(D, z).maxCoeff());
      out = {{"type", D.name()}, {"point", io::to_json(z)}, {"result", to_string(contains(D, z, G.tol))},
             {"meta", meta(G)}};
      return 0;
    });
    auto* sym = domain->add_subcommand("symmetry", "the symmetry at 0 as a group element");
    add_type(sym, T);
    on(sym, [&](json& out) {
      const DomainDescriptor D = domain_of(T);
      const GroupElement g = symmetry_at_zero(D);
      out = {{"type", D.name()}, {"group", g.tag()}, {"g", io::to_json(g.g)}};
      return 0;
    });
  }

  // ---- cone ----
  auto* conec = app.add_subcommand("cone", "symmetric cones");
  conec->require_subcommand(1);
  {
    auto* mem = conec->add_subcommand("member", "tri-state cone membership");
    mem->add_option("--cone", cone)->required();
    mem->add_option("--point", point, "real coordinates or a Hermitian matrix")->required();
    on(mem, [&](json& out) {
      const ConeDescriptor C = ConeDescriptor::parse(cone);
      const JordanAlgebra A = jordan_from_cone(C);
      const json pj = io::load(point);
      RVec x;
      // a list of rows whose length differs from dim(A) is a matrix; [[a,b],[c,d]] would read
      // as two complex coordinates otherwise
      const bool rows = pj.is_array() && !pj.empty() && pj[0].is_array() &&
                        (!io::is_complex_scalar(pj[0]) || int(pj.size()) != A.dim());
      if (rows) {
        const CVec c = from_matrix(A, io::cmat_from_json(pj));
        x = c.real();
      } else {
        x = io::rvec_from_json(pj);
      }
      check_element(A, x);
      const double band = G.tol_given ? G.tol : kConeBoundaryBand;
      const TriState s = cone_classify(C, x, band);
      out = {{"cone", C.name()}, {"margin", cone_margin(C, x)}, {"band", band}, {"result", to_string(s)}};
      return tri_exit(s);
    });
    auto* info = conec->add_subcommand("info", "cone data and its Jordan algebra");
    info->add_option("--cone", cone)->required();
    on(info, [&](json& out) {
      const ConeDescriptor C = ConeDescriptor::parse(cone);
      const JordanAlgebra A = jordan_from_cone(C);
      out = {{"cone", C.name()}, {"dim", C.dim()}, {"rank", C.rank()}, {"jordan", A.name()},
             {"unit", io::to_json(jordan_unit(A))}, {"roundtrip", cone_from_jordan(A) == C}};
      return 0;
    });
    auto* bc = conec->add_subcommand("boundary", "boundary component of an idempotent");
    bc->add_option("--cone", cone)->required();
    bc->add_option("--e", es, "idempotent (real coordinates)")->required();
    on(bc, [&](json& out) {
      const ConeDescriptor C = ConeDescriptor::parse(cone);
      const ConeBoundaryComponent B = cone_boundary_component(C, io::rvec_from_json(io::load(es)));
      out = {{"cone", C.name()}, {"component", B.cone.name()}, {"idempotent_rank", B.idempotent_rank},
             {"dim", B.basis.cols()}};
      return 0;
    });
  }

  // ---- jordan ----
  auto* jordan = app.add_subcommand("jordan", "Euclidean Jordan algebras");
  jordan->require_subcommand(1);
  {
    auto* info = jordan->add_subcommand("info", "dimension, rank, unit and cone");
    info->add_option("--alg", alg)->required();
    on(info, [&](json& out) {
      const JordanAlgebra A = JordanAlgebra::parse(alg);
      const RVec ev = Eigen::SelfAdjointEigenSolver<RMat>(trace_gram(A)).eigenvalues();
      out = {{"alg", A.name()}, {"dim", A.dim()}, {"rank", A.rank()}, {"unit", io::to_json(jordan_unit(A))},
             {"cone", cone_from_jordan(A).name()}, {"trace_form_lambda_min", ev(0)}};
      return 0;
    });
    auto* mul = jordan->add_subcommand("mul", "x o y");
    mul->add_option("--alg", alg)->required();
    mul->add_option("--x", xs)->required();
    mul->add_option("--y", ys)->required();
    on(mul, [&](json& out) {
      const JordanAlgebra A = JordanAlgebra::parse(alg);
      const RVec x = io::rvec_from_json(io::load(xs)), y = io::rvec_from_json(io::load(ys));
      check_element(A, x);
      check_element(A, y);
      out = {{"alg", A.name()}, {"product", io::to_json(jordan_mul(A, x, y))}};
      return 0;
    });
    auto* inv = jordan->add_subcommand("inverse", "x^-1 via the quadratic representation");
    inv->add_option("--alg", alg)->required();
    inv->add_option("--x", xs)->required();
    on(inv, [&](json& out) {
      const JordanAlgebra A = JordanAlgebra::parse(alg);
      const RVec x = io::rvec_from_json(io::load(xs));
      check_element(A, x);
      out = {{"alg", A.name()}, {"inverse", io::to_json(jordan_inverse(A, x))}};
      return 0;
    });
    auto* pe = jordan->add_subcommand("peirce", "Peirce decomposition of an idempotent");
    pe->add_option("--alg", alg)->required();
    pe->add_option("--e", es)->required();
    on(pe, [&](json& out) {
      const JordanAlgebra A = JordanAlgebra::parse(alg);
      const PeirceDecomposition P = peirce_decompose(A, io::rvec_from_json(io::load(es)));
      out = {{"alg", A.name()}, {"dim_1", P.one.cols()}, {"dim_half", P.half.cols()}, {"dim_0", P.zero.cols()}};
      return 0;
    });
  }

  // ---- jts ----
  auto* jts = app.add_subcommand("jts", "Hermitian positive Jordan triple systems");
  jts->require_subcommand(1);
  {
    auto* info = jts->add_subcommand("info", "dimension, rank, standard frame");
    add_type(info, T);
    on(info, [&](json& out) {
      const JtsDescriptor J = JtsDescriptor::parse(type_tag(T));
      json frame = json::array();
      for (const auto& e : standard_frame(J)) frame.push_back(io::to_json(e));
      out = {{"type", J.name()}, {"dim", J.dim()}, {"rank", rank(J, G.seed)}, {"table_rank", J.table_rank()},
             {"frame", frame}, {"meta", meta(G)}};
      return 0;
    });
    auto* tr = jts->add_subcommand("triple", "{x, y, z}");
    add_type(tr, T);
    tr->add_option("--x", xs)->required();
    tr->add_option("--y", ys)->required();
    tr->add_option("--z", zs)->required();
    tr->add_option("--convention", convention)->check(CLI::IsMember({"corrected", "printed"}));
    on(tr, [&](json& out) {
      const JtsDescriptor J = JtsDescriptor::parse(type_tag(T));
      const CVec x = io::point_from_json(J, io::load(xs)), y = io::point_from_json(J, io::load(ys)),
                 z = io::point_from_json(J, io::load(zs));
      const Convention c = convention == "printed" ? Convention::Printed : Convention::Corrected;
      out = {{"type", J.name()}, {"convention", convention}, {"triple", io::to_json(triple(J, x, y, z, c))}};
      return 0;
    });
    auto* tp = jts->add_subcommand("tripotent", "tripotent test and spectrum of e box e");
    add_type(tp, T);
    tp->add_option("--point", point)->required();
    on(tp, [&](json& out) {
      const JtsDescriptor J = JtsDescriptor::parse(type_tag(T));
      const CVec e = io::point_from_json(J, io::load(point));
      const bool t = is_tripotent(J, e, std::max(G.tol, 1e-9));
      out = {{"type", J.name()}, {"tripotent", t}, {"box_spectrum", io::to_json(box_spectrum(J, e))}};
      return t ? 0 : 1;
    });
  }

  // ---- siegel ----
  auto* siegel = app.add_subcommand("siegel", "Siegel domains and Cayley transforms");
  siegel->require_subcommand(1);
  {
    auto* cay = siegel->add_subcommand("cayley", "w -> i(e+w)(e-w)^-1");
    cay->add_option("--alg", alg)->required();
    cay->add_option("--point", point)->required();
    cay->add_flag("--inverse", inverse, "tube -> bounded domain");
    on(cay, [&](json& out) {
      const JordanAlgebra A = JordanAlgebra::parse(alg);
      const CVec w = io::cvec_from_json(io::load(point));
      const CVec u = inverse ? cayley_inverse(A, w) : cayley(A, w);
      out = {{"alg", A.name()}, {"direction", inverse ? "inverse" : "forward"}, {"image", io::to_json(u)}};
      if (!inverse) out["tube"] = to_string(tube_member(A, u, G.tol));
      return 0;
    });
    auto* cr = siegel->add_subcommand("criteria", "symmetry criteria for a catalog instance");
    cr->add_option("--catalog", catalog, "I:n:r:s, II:n:r, III:n:r, VI0, half-space, tube(<alg>)")->required();
    on(cr, [&](json& out) {
      const SiegelData S = build_catalog(catalog);
      const SymmetryReport r = symmetry_criteria(S, G.tol);
      const auto eq = catalog_symmetric_equivalent(catalog);
      out = {{"catalog", S.label},
             {"U_dim", S.U.dim},
             {"V_dim", S.k},
             {"cone_symmetric", r.cone_symmetric},
             {"criterion_ii", r.criterion_ii},
             {"criterion_iii", r.criterion_iii},
             {"residual_ii", r.residual_ii},
             {"residual_iii", r.residual_iii},
             {"witness", r.witness},
             {"symmetric", r.cone_symmetric && r.criterion_ii && r.criterion_iii},
             {"equivalent_domain", eq ? json(*eq) : json(nullptr)}};
      return out["symmetric"].get<bool>() ? 0 : 1;
    });
    auto* cat = siegel->add_subcommand("catalog", "quasi-symmetric catalog rows");
    on(cat, [&](json& out) {
      out = json::array();
      for (const auto& r : quasi_symmetric_catalog())
        out.push_back({{"family", r.family}, {"conditions", r.conditions}, {"cone", r.cone},
                       {"representation", r.representation}, {"symmetric", r.symmetric_cases},
                       {"equivalent_domain", r.symmetric_cases}, {"constructible", r.constructible}});
      return 0;
    });
    auto* fj = siegel->add_subcommand("from-jts", "Siegel realization at the principal tripotent");
    add_type(fj, T);
    on(fj, [&](json& out) {
      const JtsDescriptor J = JtsDescriptor::parse(type_tag(T));
      const SiegelFromJts R = siegel_from_jts(J, principal_tripotent(J));
      out = {{"type", J.name()}, {"U_dim", R.S.U.dim}, {"V_dim", R.S.k}, {"tube", R.S.k == 0},
             {"roundtrip_error", siegel_roundtrip_error(J, R)}};
      return 0;
    });
  }

  // ---- boundary ----
  auto* bnd = app.add_subcommand("boundary", "boundary components");
  bnd->require_subcommand(1);
  {
    auto* info = bnd->add_subcommand("info", "o_F, cone, smaller domain and Levi data");
    add_type(info, T);
    info->add_option("--k", k)->required();
    on(info, [&](json& out) {
      const DomainDescriptor D = domain_of(T);
      validate_boundary(D, k);
      const CVec o = standard_boundary_point(D, k);
      out = {{"type", D.name()},
             {"k", k},
             {"o_F", io::to_json(o)},
             {"tripotent", is_tripotent(D, o)},
             {"result", to_string(contains_via_box(D, o, G.tol))},
             {"cone", boundary_cone(D, k).name()},
             {"boundary_component", boundary_domain_name(D, k)},
             {"peirce0_dim", boundary_peirce_zero(D, k).cols()},
             {"levi", boundary_levi(D, k)}};
      return 0;
    });
    auto* cl = bnd->add_subcommand("classify", "limit of w_F(t) g w_F(t)^-1 as t -> 0");
    add_type(cl, T);
    cl->add_option("--k", k)->required();
    cl->add_option("--g", gfile)->required();
    on(cl, [&](json& out) {
      const DomainDescriptor D = domain_of(T);
      const GroupElement g = io::group_from_json(D, io::load(gfile), std::max(G.tol, 1e-9));
      const LimitClass c = limit_classify(D, k, g);
      out = {{"type", D.name()}, {"k", k}, {"class", to_string(c)}, {"levi_member", levi_member(D, k, g)},
             {"unipotent_member", unipotent_member(D, k, g)}};
      return 0;
    });
  }

  // ---- sla ----
  auto* sla = app.add_subcommand("sla", "Hermitian simple Lie algebras");
  sla->require_subcommand(1);
  {
    auto* info = sla->add_subcommand("info", "dimensions, compact dual and the associated domain");
    info->add_option("--alg", alg)->required();
    on(info, [&](json& out) {
      const SlaDescriptor L = SlaDescriptor::parse(alg);
      out = {{"alg", L.name()}, {"dim", L.dim()}, {"matrix_size", L.size()}, {"dual", dual_sla(L).name()},
             {"k_dim", k_basis(L).size()}, {"p_dim", p_basis(L).size()}};
      if (!L.compact) out["domain"] = domain_for_sla(L).name();
      return 0;
    });
    auto* ver = sla->add_subcommand("verify", "axiom battery");
    ver->add_option("--alg", alg)->required();
    on(ver, [&](json& out) {
      checks_out = sla_axiom_checks(SlaDescriptor::parse(alg), G.tol);
      out = {{"alg", alg}, {"checks", json::array()}, {"pass", all_pass(checks_out)}};
      for (const auto& c : checks_out) out["checks"].push_back(io::to_json(c));
      return all_pass(checks_out) ? 0 : 1;
    });
  }

  // ---- verify ----
  auto* ver = app.add_subcommand("verify", "invariant batteries");
  ver->add_option("--suite", suite, names(suite_names()))->check(CLI::IsMember(suite_names()));
  on(ver, [&](json& out) {
    VerifyOptions o;
    o.seed = G.seed;
    o.tol = G.tol;
    if (G.samples_given) o.samples = G.samples;
    checks_out = run_suite(suite, o);
    out = {{"suite", suite}, {"checks", json::array()}, {"pass", all_pass(checks_out)}, {"meta", meta(G)}};
    if (o.samples) out["meta"]["samples"] = *o.samples;
    for (const auto& c : checks_out) out["checks"].push_back(io::to_json(c));
    return all_pass(checks_out) ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << "\n" << app.help();
    std::cout << json{{"error", "UsageError"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }
  G.samples_given = app.count("--samples") > 0;
  G.tol_given = app.count("--tol") > 0;

  for (auto& [sub, fn] : handlers) {
    if (!sub->parsed()) continue;
    json out;
    int code = 0;
    try {
      code = fn(out);
    } catch (const Error& e) {
      std::cerr << e.what() << "\n";
      std::cout << json{{"error", e.code()}, {"message", e.what()}}.dump() << "\n";
      return 2;
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\n";
      std::cout << json{{"error", "Error"}, {"message", e.what()}}.dump() << "\n";
      return 2;
    }
    if (G.pretty) {
      if (!checks_out.empty()) {
        render_checks(std::cout, checks_out);
        std::cout << (all_pass(checks_out) ? "all checks pass" : "FAILURES present") << "\n";
      } else {
        render(std::cout, out);
      }
    } else {
      std::cout << out.dump() << "\n";
    }
    return code;
  }
  std::cerr << app.help();
  return 2;
}
