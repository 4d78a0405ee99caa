#include "hsm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "hsm/atlas.hpp"
#include "hsm/boundary.hpp"
#include "hsm/hsla.hpp"
#include "hsm/siegel.hpp"

namespace hsm {

namespace {

using Battery = std::function<std::vector<Check>(const VerifyOptions&)>;

int count(const VerifyOptions& o, int dflt) { return o.samples ? *o.samples : dflt; }

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

const std::vector<std::string>& main_families() {
  static const std::vector<std::string> f = {"I:3:2", "I:2:2", "II:4", "II:5", "III:3", "IV:3", "IV:5", "V", "VI"};
  return f;
}

// Random point with spectral radius r (largest singular value in the matrix cases).
CVec scaled_point(const JtsDescriptor& J, Rng& rng, double r) {
  CVec z = rng.cnormal_vec(J.dim());
  const RVec ev = box_spectrum(J, z);
  return z * (r / std::sqrt(ev(ev.size() - 1)));
}

double jt2_residual(const JtsDescriptor& J, const CVec& a, const CVec& b, const CVec& x, const CVec& y,
                    Convention c = Convention::Corrected) {
  // [a box b, x box y] = {a,b,x} box y - x box {b,a,y}
  const CMat lhs = box(J, a, b, c) * box(J, x, y, c) - box(J, x, y, c) * box(J, a, b, c);
  const CMat rhs = box(J, triple(J, a, b, x, c), y, c) - box(J, x, triple(J, b, a, y, c), c);
  return la::max_abs(CMat(lhs - rhs));
}

// ---- 1 ----
std::vector<Check> rank_battery(const VerifyOptions& o) {
  std::vector<Check> out;
  const std::map<std::string, int> expect = {{"I:3:2", 2}, {"I:2:2", 2}, {"II:4", 2}, {"II:5", 2}, {"III:3", 3},
                                              {"IV:3", 2},  {"IV:5", 2},  {"V", 2},    {"VI", 3}};
  Check c{1, "rank", "jordan-frame rank equals the classification rank", true, 0, ""};
  for (const auto& f : main_families()) {
    const int r = rank(JtsDescriptor::parse(f), o.seed);
    const bool ok = r == expect.at(f) && r == lookup(f).rank;
    c.detail += f + "=" + std::to_string(r) + (ok ? " " : "(!) ");
    if (!ok) {
      c.pass = false;
      c.metric += 1;
    }
  }
  out.push_back(c);
  return out;
}

// ---- 2 ----
std::vector<Check> membership_battery(const VerifyOptions& o) {
  std::vector<Check> out;
  const int n = count(o, 300);
  for (const auto& f : main_families()) {
    const JtsDescriptor D = JtsDescriptor::parse(f);
    Rng rng(o.seed);
    int agree = 0, lit_disagree = 0, members = 0, boundary = 0;
    const int rk = D.table_rank();
    for (int s = 0; s < n; ++s) {
      CVec z;
      if (s % 30 == 29) {  // exact boundary: one polydisk coordinate on the circle
        std::vector<cd> zs(rk);
        for (int i = 0; i < rk; ++i) zs[i] = std::polar(i == 0 ? 1.0 : rng.uniform(0.0, 0.9), rng.uniform(0, 2 * M_PI));
        z = polydisk_embed(D, zs);
      } else {
        z = scaled_point(D, rng, rng.uniform(0.6, 1.4));
      }
      const TriState a = contains(D, z, o.tol), b = contains_via_box(D, z, o.tol);
      agree += a == b;
      members += a == TriState::Member;
      boundary += a == TriState::Boundary;
      if (D.kind == JtsDescriptor::Kind::V) lit_disagree += contains(D, z, o.tol, VReading::Literal) != b;
    }
    Check c{2, "membership", f + ": inequalities vs z box z < id", agree == n, double(n - agree),
            std::to_string(agree) + "/" + std::to_string(n) + " agree (" + std::to_string(members) + " member, " +
                std::to_string(boundary) + " boundary)"};
    out.push_back(c);
    if (D.kind == JtsDescriptor::Kind::V)
      out.push_back({0, "membership", "V literal reading vs box route (informational)", true, double(lit_disagree),
                     std::to_string(lit_disagree) + "/" + std::to_string(n) + " disagree"});
  }
  return out;
}

// ---- 3 ----
std::vector<Check> bracket_battery(const VerifyOptions& o) {
  std::vector<Check> out;
  for (const std::string f : {"I:2:1", "II:3", "III:2", "IV:4"}) {
    const JtsDescriptor D = JtsDescriptor::parse(f);
    const SlaDescriptor L = sla_for_domain(D);
    const int d = D.dim();
    double err = 0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          const CVec x = basis_vector(d, i), y = basis_vector(d, j), z = basis_vector(d, k);
          err = std::max(err, (bracket_triple(L, x, y, z) - triple(D, x, y, z)).cwiseAbs().maxCoeff());
        }
    Rng rng(o.seed);
    const int n = count(o, 20);
    for (int s = 0; s < n; ++s) {
      const CVec x = rng.cnormal_vec(d), y = rng.cnormal_vec(d), z = rng.cnormal_vec(d);
      err = std::max(err, (bracket_triple(L, x, y, z) - triple(D, x, y, z)).cwiseAbs().maxCoeff());
    }
    out.push_back({3, "bracket-triple", f + " (" + L.name() + "): 1/2[[x,sigma y],z] vs table product", err < 1e-10, err,
                   "max entry error " + fmt(err)});
  }
  return out;
}

// ---- 4 ----
std::vector<Check> albert_battery(const VerifyOptions& o) {
  Rng rng(o.seed);
  const int n = count(o, 200);
  double e1 = 0, e2 = 0;
  for (int s = 0; s < n; ++s) {
    const H3Element x = H3Element::unflatten(rng.cnormal_vec(27));
    const cd det = det3_expanded(x);
    const H3Element lhs = sharp(sharp(x)), rhs = det * x;
    e1 = std::max(e1, max_abs_diff(lhs, rhs) / std::max(1.0, max_abs(rhs)));
    const cd f = h3_form(sharp(x), x.bar());
    e2 = std::max(e2, std::abs(f - 3.0 * det) / std::max(1.0, std::abs(det)));
  }
  return {{4, "albert", "(x#)# = det(x) x", e1 < 1e-9, e1, "max relative error " + fmt(e1)},
          {4, "albert", "(x# | x-bar) = 3 det(x)", e2 < 1e-9, e2, "max relative error " + fmt(e2)}};
}

// ---- 5 ----
std::vector<Check> cayley_battery(const VerifyOptions& o) {
  std::vector<Check> out;
  const int n = count(o, 200);
  for (const std::string a : {"herm-r:2", "herm-c:2", "spin:3"}) {
    const JordanAlgebra A = JordanAlgebra::parse(a);
    const JtsDescriptor D = JtsDescriptor::from_jordan(A);
    Rng rng(o.seed);
    double err = 0;
    int in_tube = 0, in_disk = 0;
    for (int s = 0; s < n; ++s) {
      const CVec w = scaled_point(D, rng, rng.uniform(0.0, 0.95));
      in_disk += 1.0 - box_spectrum(D, w).maxCoeff() > o.tol;  // D_Omega via its box operator
      const CVec u = cayley(A, w);
      in_tube += tube_member(A, u, o.tol) == TriState::Member;
      err = std::max(err, (cayley_inverse(A, u) - w).cwiseAbs().maxCoeff());
    }
    const bool ok = in_tube == n && in_disk == n && err < 1e-10;
    out.push_back({5, "cayley", a + ": D_Omega -> tube -> D_Omega", ok, err,
                   std::to_string(in_tube) + "/" + std::to_string(n) + " in tube, round trip " + fmt(err)});
  }
  return out;
}

// ---- 6 ----
std::vector<Check> hsla_battery(const VerifyOptions& o) {
  std::vector<Check> out;
  for (const std::string s : {"su:2:1", "su:2:2", "sp-nc:2", "so-nc:4", "so-nc:3:2"}) {
    const std::vector<Check> items = sla_axiom_checks(SlaDescriptor::parse(s), o.tol);
    Check c{6, "hsla", s, true, 0, ""};
    for (const auto& it : items) {
      c.pass = c.pass && it.pass;
      c.metric = std::max(c.metric, it.metric);
      c.detail += it.name + (it.pass ? ": ok; " : ": FAIL; ");
    }
    out.push_back(c);
  }
  return out;
}

// ---- 7 ----
std::vector<Check> boundary_battery(const VerifyOptions& o) {
  std::vector<Check> out;
  const JtsDescriptor D = JtsDescriptor::parse("III:2");
  for (int k = 0; k < 2; ++k) {
    Rng rng(o.seed + k);
    int bad = 0, n_u = count(o, 50), n_l = count(o, 50), n_o = std::max(1, count(o, 50) * 2 / 5);
    std::string first;
    auto note = [&](const std::string& what) {
      ++bad;
      if (first.empty()) first = what;
    };
    for (int s = 0; s < n_u; ++s) {
      CMat F(k, 2 - k), X(2 - k, 2 - k);
      for (int i = 0; i < F.size(); ++i) F(i) = rng.cnormal();
      for (int i = 0; i < X.size(); ++i) X(i) = rng.normal();
      const GroupElement g = unipotent_element(D, k, F, CMat(), X);
      const LimitClass c = limit_classify(D, k, g);
      if (c != LimitClass::Unipotent || !unipotent_member(D, k, g) || levi_member(D, k, g))
        note(std::string("unipotent sample classified ") + to_string(c));
    }
    for (int s = 0; s < n_l; ++s) {
      CMat h(2 * k, 2 * k);
      if (k > 0) h = sample_group_element(JtsDescriptor::type_iii(k), rng, 0.5).g;
      RMat E(2 - k, 2 - k);
      do {
        for (int i = 0; i < E.size(); ++i) E(i) = rng.normal();
      } while (std::abs(E.determinant()) < 0.1);
      const GroupElement g = levi_element(D, k, h, E.cast<cd>());
      const LimitClass c = limit_classify(D, k, g);
      if (c != LimitClass::Levi || !levi_member(D, k, g) || unipotent_member(D, k, g))
        note(std::string("levi sample classified ") + to_string(c));
    }
    for (int s = 0; s < n_o; ++s) {
      const GroupElement g = sample_group_element(D, rng, 0.7);
      LimitClass c = LimitClass::Levi;
      try {
        c = limit_classify(D, k, g);
      } catch (const Error& e) {
        note(std::string("generic sample: ") + e.what());
        continue;
      }
      if (c != LimitClass::Outside || levi_member(D, k, g) || unipotent_member(D, k, g))
        note(std::string("generic sample classified ") + to_string(c));
    }
    out.push_back({7, "boundary", "III(2), k=" + std::to_string(k) + ": 5-term classification", bad == 0, double(bad),
                   std::to_string(n_u) + " unipotent, " + std::to_string(n_l) + " levi, " + std::to_string(n_o) +
                       " generic; misclassified " + std::to_string(bad) + (first.empty() ? "" : " (" + first + ")")});
  }
  return out;
}

// ---- 8 ----
std::vector<Check> cones_battery(const VerifyOptions&) {
  std::vector<Check> out;
  Check c{8, "cones", "cone <-> Jordan algebra round trip", true, 0, ""};
  for (const std::string s : {"lorentz:0", "lorentz:1", "lorentz:3", "psd-r:1", "psd-r:3", "psd-c:2", "psd-h:2", "albert",
                              "prod(psd-r:2,lorentz:3)"}) {
    const ConeDescriptor C = ConeDescriptor::parse(s);
    const JordanAlgebra A = jordan_from_cone(C);
    const bool ok = cone_from_jordan(A) == C && jordan_from_cone(cone_from_jordan(A)) == A;
    if (!ok) {
      c.pass = false;
      c.metric += 1;
    }
    c.detail += s + (ok ? " " : "(!) ");
  }
  out.push_back(c);
  Check p{8, "cones", "Peirce dimensions of e_p in Herm_n(F)", true, 0, ""};
  for (char F : {'R', 'C', 'H'})
    for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {2, 1}}) {
      const JordanAlgebra A = F == 'R' ? JordanAlgebra::herm_r(n) : F == 'C' ? JordanAlgebra::herm_c(n) : JordanAlgebra::herm_h(n);
      const int d = F == 'R' ? 1 : F == 'C' ? 2 : 4;
      RVec e = RVec::Zero(A.dim());
      for (int i = 0; i < k; ++i) e(i) = 1;
      const PeirceDecomposition P = peirce_decompose(A, e);
      const int m = n - k;
      const bool ok = P.one.cols() == k + k * (k - 1) * d / 2 && P.half.cols() == k * m * d &&
                      P.zero.cols() == m + m * (m - 1) * d / 2;
      if (!ok) {
        p.pass = false;
        p.metric += 1;
      }
      p.detail += std::string(1, F) + "(" + std::to_string(n) + "," + std::to_string(k) + ")=" +
                  std::to_string(P.one.cols()) + "/" + std::to_string(P.half.cols()) + "/" +
                  std::to_string(P.zero.cols()) + (ok ? " " : "(!) ");
    }
  out.push_back(p);
  return out;
}

// ---- 9 ----
std::vector<Check> siegel_battery(const VerifyOptions& o) {
  std::vector<Check> out;
  Check t{9, "siegel", "tube catalog rows satisfy (i),(ii),(iii)", true, 0, ""};
  for (const std::string s : {"tube(herm-r:2)", "tube(herm-r:3)", "tube(herm-c:2)", "tube(herm-h:2)", "tube(spin:3)", "VI0",
                              "III:3:0", "I:3:0:0"}) {
    const SymmetryReport r = symmetry_criteria(build_catalog(s), o.tol);
    const bool ok = r.cone_symmetric && r.criterion_ii && r.criterion_iii;
    if (!ok) {
      t.pass = false;
      t.metric += 1;
    }
    t.detail += s + (ok ? " " : "(!) ");
  }
  out.push_back(t);
  {
    const SymmetryReport r = symmetry_criteria(build_catalog("I:3:1:1"), o.tol);
    const bool ok = r.cone_symmetric && r.criterion_ii && !r.criterion_iii && !r.witness.empty();
    out.push_back({9, "siegel", "I_{3;1,1}: (true, true, false) with witness", ok, r.residual_iii, r.witness});
  }
  {
    const SymmetryReport r = symmetry_criteria(build_catalog("I:3:1:0"), o.tol);
    out.push_back({9, "siegel", "I_{3;1,0}: (true, true, true)", r.criterion_ii && r.criterion_iii,
                   std::max(r.residual_ii, r.residual_iii), ""});
  }
  Check tb{9, "siegel", "tube type <=> V = 0 in the Siegel realization", true, 0, ""};
  for (const std::string f : {"I:1:1", "I:2:1", "I:2:2", "I:3:2", "I:3:3", "II:4", "II:5", "II:6", "III:2", "III:3", "IV:3",
                              "IV:4", "IV:5", "V", "VI"}) {
    const JtsDescriptor J = JtsDescriptor::parse(f);
    const SiegelFromJts R = siegel_from_jts(J, principal_tripotent(J));
    const bool ok = (R.S.k == 0) == tube_type(f) && siegel_roundtrip_error(J, R) < 1e-9;
    if (!ok) {
      tb.pass = false;
      tb.metric += 1;
    }
    tb.detail += f + (tube_type(f) ? "[tube:" : "[k=") + std::to_string(R.S.k) + "]" + (ok ? " " : "(!) ");
  }
  out.push_back(tb);
  return out;
}

// ---- 10 ----
std::vector<Check> cominuscule_battery(const VerifyOptions&) {
  struct Row {
    std::string s;
    int n;
    std::vector<int> expect;
  };
  const std::vector<Row> rows = {{"A", 5, {1, 2, 3, 4, 5}}, {"B", 4, {1}}, {"C", 4, {4}}, {"D", 5, {1, 4, 5}},
                                 {"D", 6, {1, 5, 6}},       {"E6", 0, {1, 6}}, {"E7", 0, {7}}, {"E8", 0, {}},
                                 {"F4", 0, {}},             {"G2", 0, {}}};
  Check c{10, "cominuscule", "cominuscule nodes from the highest root", true, 0, ""};
  for (const auto& r : rows) {
    const DynkinDiagram d = DynkinDiagram::parse(r.s, r.n);
    const auto got = cominuscule_roots(d);
    const bool ok = got == r.expect;
    if (!ok) {
      c.pass = false;
      c.metric += 1;
    }
    c.detail += r.s + (r.n ? std::to_string(r.n) : "") + "={";
    for (size_t i = 0; i < got.size(); ++i) c.detail += (i ? "," : "") + std::to_string(got[i]);
    c.detail += ok ? "} " : "}(!) ";
  }
  return {c};
}

// ---- 11 ----
std::vector<Check> jts_battery(const VerifyOptions& o) {
  std::vector<Check> out;
  std::vector<std::string> fams = main_families();
  for (const std::string extra : {"jordan(herm-r:2)", "jordan(herm-h:2)", "jordan(spin:3)", "prod(I:1:1,IV:3)"})
    fams.push_back(extra);
  const int n = count(o, 100);
  for (const auto& f : fams) {
    const JtsDescriptor J = JtsDescriptor::parse(f);
    Rng rng(o.seed);
    const int d = J.dim();
    double jt1 = 0, jt2 = 0;
    for (int s = 0; s < n; ++s) {
      const CVec a = rng.cnormal_vec(d), b = rng.cnormal_vec(d), x = rng.cnormal_vec(d), y = rng.cnormal_vec(d);
      jt1 = std::max(jt1, (triple(J, a, b, x) - triple(J, x, b, a)).cwiseAbs().maxCoeff());
      jt2 = std::max(jt2, jt2_residual(J, a, b, x, y));
    }
    const CMat G = jts_inner_matrix(J);
    const double lmin = Eigen::SelfAdjointEigenSolver<CMat>(G).eigenvalues()(0);
    const bool ok = jt1 < 1e-12 && jt2 < 1e-9 && lmin > 0;
    out.push_back({11, "jts-axioms", f, ok, std::max(jt1, jt2),
                   "JT1 " + fmt(jt1) + ", JT2 " + fmt(jt2) + ", trace form lambda_min " + fmt(lmin)});
  }
  return out;
}

std::vector<Check> printed_battery(const VerifyOptions& o) {
  std::vector<Check> out;
  for (const std::string f : {"IV:4", "V", "VI"}) {
    const JtsDescriptor J = JtsDescriptor::parse(f);
    Rng rng(o.seed);
    const int d = J.dim();
    double r = 0;
    for (int s = 0; s < 5; ++s) {
      const CVec a = rng.cnormal_vec(d), b = rng.cnormal_vec(d), x = rng.cnormal_vec(d), y = rng.cnormal_vec(d);
      r = std::max(r, jt2_residual(J, a, b, x, y, Convention::Printed));
    }
    // Printed conventions are not expected to pass; reported for reference.
    out.push_back({0, "printed-convention", f + ": JT2 residual of the displayed product", true, r, fmt(r)});
  }
  return out;
}

const std::vector<std::pair<std::string, Battery>>& registry() {
  static const std::vector<std::pair<std::string, Battery>> r = {
      {"rank", rank_battery},
      {"membership", membership_battery},
      {"bracket-triple", bracket_battery},
      {"albert", albert_battery},
      {"cayley", cayley_battery},
      {"hsla", hsla_battery},
      {"boundary", boundary_battery},
      {"cones", cones_battery},
      {"siegel", siegel_battery},
      {"cominuscule", cominuscule_battery},
      {"jts-axioms", jts_battery},
      {"printed-convention", printed_battery},
  };
  return r;
}

}  // namespace

std::vector<Check> sla_axiom_checks(const SlaDescriptor& L, double tol) {
  const auto& B = sla_basis(L);
  const CMat H = central_H(L);
  double r_theta = 0, r_H = sla_residual(L, H), r_dual = 0;
  for (const auto& X : B) r_theta = std::max(r_theta, la::max_abs(CMat(theta(L, theta(L, X)) - X)));
  for (const auto& X : k_basis(L)) r_H = std::max(r_H, la::max_abs(bracket(H, X)));
  r_H = std::max(r_H, la::max_abs(CMat(theta(L, H) - H)));
  const double r_ad = ad_H_squared_residual(L, H);
  const RVec kk = Eigen::SelfAdjointEigenSolver<RMat>(killing_gram(L, k_basis(L))).eigenvalues();
  const RVec kp = Eigen::SelfAdjointEigenSolver<RMat>(killing_gram(L, p_basis(L))).eigenvalues();
  const SlaDescriptor Lc = dual_sla(L);
  std::vector<CMat> dual_basis;
  for (const auto& X : B) {
    const CMat Y = dual_map(L, X);
    r_dual = std::max(r_dual, sla_residual(Lc, Y));
    r_dual = std::max(r_dual, la::max_abs(CMat(dual_map(Lc, Y) - X)));
    dual_basis.push_back(Y);
  }
  const RVec kc = Eigen::SelfAdjointEigenSolver<RMat>(killing_gram(Lc, dual_basis)).eigenvalues();
  const double kmax = kk.size() ? kk(kk.size() - 1) : -1, pmin = kp.size() ? kp(0) : 1;
  return {
      {6, "hsla", "theta^2 = id", r_theta < tol, r_theta, fmt(r_theta)},
      {6, "hsla", "H central in k", r_H < tol, r_H, fmt(r_H)},
      {6, "hsla", "ad(H)^2 = -id on p", r_ad < tol, r_ad, fmt(r_ad)},
      {6, "hsla", "Killing negative on k", kmax < -tol, kmax, "max eigenvalue " + fmt(kmax)},
      {6, "hsla", "Killing positive on p", pmin > tol, pmin, "min eigenvalue " + fmt(pmin)},
      {6, "hsla", "dual relations (" + Lc.name() + ")", r_dual < tol, r_dual, fmt(r_dual)},
      {6, "hsla", "dual Killing negative definite", kc(kc.size() - 1) < -tol, kc(kc.size() - 1),
       "max eigenvalue " + fmt(kc(kc.size() - 1))},
  };
}

std::vector<std::string> suite_names() {
  std::vector<std::string> n;
  for (const auto& [k, v] : registry()) n.push_back(k);
  n.push_back("all");
  return n;
}

std::vector<Check> run_suite(const std::string& suite, const VerifyOptions& opt) {
  std::vector<Check> out;
  bool found = false;
  for (const auto& [name, fn] : registry()) {
    if (suite != "all" && suite != name) continue;
    found = true;
    std::vector<Check> part;
    try {
      part = fn(opt);
    } catch (const Error& e) {
      part.push_back({0, name, "battery aborted", false, 1, e.what()});
    }
    out.insert(out.end(), part.begin(), part.end());
  }
  if (!found) throw Error("UnknownSuite", "unknown suite '" + suite + "'");
  return out;
}

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

}  // namespace hsm
