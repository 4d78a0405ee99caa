#include <doctest.h>

#include "hsm/atlas.hpp"
#include "hsm/domains.hpp"
#include "hsm/siegel.hpp"

using namespace hsm;

namespace {
CVec cvec(std::initializer_list<cd> v) {
  CVec r(v.size());
  int i = 0;
  for (cd x : v) r(i++) = x;
  return r;
}
double diff(const CVec& a, const CVec& b) { return (a - b).cwiseAbs().maxCoeff(); }
}  // namespace

TEST_CASE("tube membership") {
  const JordanAlgebra R2 = JordanAlgebra::herm_r(2);
  const CVec e = jordan_unit(R2).cast<cd>();
  CHECK(tube_member(R2, CVec(I_ * e)) == TriState::Member);
  CHECK(tube_member(R2, cvec({I_, 0, 0})) == TriState::Boundary);
  CHECK(tube_member(R2, cvec({cd(3, 2), cd(-1, 2), cd(5, 1)})) == TriState::Member);
  CHECK(tube_member(R2, cvec({cd(0, 1), cd(0, 1), cd(0, 2)})) == TriState::Exterior);
}

TEST_CASE("Siegel domain membership") {
  const SiegelData S = half_space();
  CHECK(siegel_member(S, cvec({I_}), cvec({0})) == TriState::Member);
  CHECK(siegel_member(S, cvec({2.0 * I_}), cvec({1})) == TriState::Member);
  // Im u - H(v,v) = 0
  CHECK(siegel_member(S, cvec({I_}), cvec({1})) == TriState::Boundary);
  CHECK(siegel_member(S, cvec({I_}), cvec({2})) == TriState::Exterior);
  const SiegelData T = build_catalog("I:3:1:1");
  Rng rng(1);
  const CVec v = rng.cnormal_vec(T.k);
  const CVec Hv = T.h_map(v, v);
  CHECK(siegel_member(T, CVec(I_ * Hv), v) == TriState::Boundary);
  CHECK(siegel_member(T, CVec(I_ * (Hv + T.U.unit.cast<cd>())), v) == TriState::Member);
  validate_siegel(T);
}

TEST_CASE("R_u operator") {
  for (const std::string tag : {"half-space", "I:3:1:0", "I:3:1:1", "II:3:1", "III:3:1"}) {
    const SiegelData S = build_catalog(tag);
    const CVec e = S.U.unit.cast<cd>();
    CHECK(la::max_abs(CMat(r_operator(S, e) - 0.5 * CMat::Identity(S.k, S.k))) < 1e-12);
    CHECK(la::max_abs(r_operator(S, CVec::Zero(S.U.dim))) == 0.0);
    // defining identity <u, H(v,v')> = 2 h(v, R_u v')
    Rng rng(2);
    const CMat h = S.h_matrix();
    for (int s = 0; s < 5; ++s) {
      const CVec u = rng.normal_vec(S.U.dim).cast<cd>(), v = rng.cnormal_vec(S.k), w = rng.cnormal_vec(S.k);
      const cd lhs = S.U.tau(u, S.h_map(v, w));
      const cd rhs = 2.0 * (v.adjoint() * h * (r_operator(S, u) * w))(0, 0);
      CHECK(std::abs(lhs - rhs) < 1e-10 * (1 + std::abs(lhs)));
    }
  }
  const SiegelData H = half_space();
  CHECK(std::abs(r_operator(H, cvec({3.0}))(0, 0) - 1.5) < 1e-15);
}

TEST_CASE("2R is a unital Jordan homomorphism in the symmetric cases") {
  for (const std::string tag : {"half-space", "I:3:1:0", "I:2:2:0", "II:3:1"}) {
    const SiegelData S = build_catalog(tag);
    const int m = S.U.dim;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        const CVec ua = basis_vector(m, a), ub = basis_vector(m, b);
        const CMat Ra = 2.0 * r_operator(S, ua), Rb = 2.0 * r_operator(S, ub);
        const CMat Rab = 2.0 * r_operator(S, S.U.mul(ua, ub));
        CHECK_MESSAGE(la::max_abs(CMat(Rab - 0.5 * (Ra * Rb + Rb * Ra))) < 1e-10, tag);
      }
  }
}

TEST_CASE("symmetry criteria") {
  for (const std::string tag : {"tube(herm-r:2)", "tube(herm-r:3)", "tube(herm-c:3)", "tube(herm-h:2)", "tube(spin:4)",
                                "VI0", "I:3:1:0", "I:3:2:0", "II:3:1", "III:3:0", "half-space"}) {
    const SymmetryReport r = symmetry_criteria(build_catalog(tag));
    CHECK_MESSAGE(r.cone_symmetric, tag);
    CHECK_MESSAGE(r.criterion_ii, tag);
    CHECK_MESSAGE(r.criterion_iii, tag);
  }
  for (const std::string tag : {"I:3:1:1", "I:3:2:1", "III:3:1", "II:3:2"}) {
    const SymmetryReport r = symmetry_criteria(build_catalog(tag));
    CHECK_MESSAGE(!(r.criterion_ii && r.criterion_iii), tag);
    CHECK_FALSE(r.witness.empty());
    // the symmetric column of the catalog has no equivalent for these rows
    CHECK_FALSE(catalog_symmetric_equivalent(tag).has_value());
  }
  const SymmetryReport r = symmetry_criteria(build_catalog("I:3:1:1"));
  CHECK(r.criterion_ii);
  CHECK_FALSE(r.criterion_iii);
  CHECK(r.witness.find("(iii)") != std::string::npos);
  CHECK_THROWS_AS(build_catalog("IV:4:1:0"), Error);
  CHECK_THROWS_AS(build_catalog("nonsense"), Error);
}

TEST_CASE("catalog instances have the dimension of their symmetric equivalent") {
  for (const std::string tag : {"I:3:1:0", "I:3:2:0", "II:3:1", "III:3:0", "VI0"}) {
    const SiegelData S = build_catalog(tag);
    const auto eq = catalog_symmetric_equivalent(tag);
    REQUIRE(eq.has_value());
    CHECK(2 * (S.U.dim + S.k) == lookup(*eq).real_dim);
  }
}

TEST_CASE("Cayley transform examples") {
  const JordanAlgebra R2 = JordanAlgebra::herm_r(2);
  const CVec e = jordan_unit(R2).cast<cd>();
  CHECK(diff(cayley(R2, CVec::Zero(3)), CVec(I_ * e)) < 1e-15);
  CHECK(diff(cayley(R2, CVec(0.5 * e)), CVec(3.0 * I_ * e)) < 1e-14);
  // scalar case: tau = 1 + 2i, w = (tau - i)/(tau + i)
  const JordanAlgebra R1 = JordanAlgebra::herm_r(1);
  const cd tau(1, 2), w = (tau - I_) / (tau + I_);
  CHECK(std::abs(cayley(R1, cvec({w}))(0) - tau) < 1e-14);
  CHECK(std::abs(cayley_inverse(R1, cvec({tau}))(0) - w) < 1e-14);
  CHECK_THROWS_AS(cayley(R2, CVec(e)), Error);  // e - w singular
}

TEST_CASE("Cayley bijectivity") {
  for (const std::string a : {"herm-r:2", "herm-c:2", "spin:3", "herm-h:2", "albert"}) {
    const JordanAlgebra A = JordanAlgebra::parse(a);
    const JtsDescriptor D = JtsDescriptor::from_jordan(A);
    Rng rng(3);
    double worst = 0;
    for (int s = 0; s < 200; ++s) {
      CVec w = rng.cnormal_vec(A.dim());
      w *= rng.uniform(0.0, 0.95) / std::sqrt(box_spectrum(D, w).maxCoeff());
      const CVec u = cayley(A, w);
      CHECK(tube_member(A, u) == TriState::Member);
      worst = std::max(worst, diff(cayley_inverse(A, u), w));
    }
    CHECK_MESSAGE(worst < 1e-10, a);
    // tube points map into the bounded domain
    for (int s = 0; s < 20; ++s) {
      const RVec x = rng.normal_vec(A.dim());
      RVec y = rng.normal_vec(A.dim());
      y = jordan_mul(A, y, y) + 0.1 * jordan_unit(A);
      const CVec w = cayley_inverse(A, CVec(x.cast<cd>() + I_ * y.cast<cd>()));
      CHECK(box_spectrum(D, w).maxCoeff() < 1);
    }
  }
}

TEST_CASE("JTS from a Siegel domain") {
  for (const std::string tag : {"half-space", "I:3:1:0", "II:3:1", "tube(herm-r:2)", "VI0"}) {
    const SiegelData S = build_catalog(tag);
    const SiegelJts T = jts_from_siegel(S);
    const int d = T.dim();
    Rng rng(4);
    double jt1 = 0, jt2 = 0;
    for (int s = 0; s < 10; ++s) {
      const CVec a = rng.cnormal_vec(d), b = rng.cnormal_vec(d), x = rng.cnormal_vec(d), y = rng.cnormal_vec(d);
      jt1 = std::max(jt1, diff(T.triple(a, b, x), T.triple(x, b, a)));
      const CMat lhs = T.box(a, b) * T.box(x, y) - T.box(x, y) * T.box(a, b);
      const CMat rhs = T.box(T.triple(a, b, x), y) - T.box(x, T.triple(b, a, y));
      jt2 = std::max(jt2, la::max_abs(CMat(lhs - rhs)));
    }
    CHECK_MESSAGE(jt1 < 1e-12, tag);
    CHECK_MESSAGE(jt2 < 1e-9, tag << " " << jt2);
    const CVec e = T.distinguished();
    const CMat B = T.box(e, e);
    CMat ref = CMat::Identity(d, d);
    ref.bottomRightCorner(S.k, S.k) *= 0.5;
    CHECK(la::max_abs(CMat(B - ref)) < 1e-12);
  }
  // half-space: the recovered product is that of I(1,1) on C^2 after scaling coordinates
  const SiegelJts T = jts_from_siegel(half_space());
  const CVec eu = basis_vector(2, 0);
  CHECK(diff(T.triple(eu, eu, eu), eu) < 1e-15);
}

TEST_CASE("Siegel realization of a JTS") {
  {
    const JtsDescriptor J = JtsDescriptor::parse("III:3");
    const SiegelFromJts R = siegel_from_jts(J, principal_tripotent(J));
    CHECK(R.S.k == 0);
    CHECK(R.S.U.dim == 6);
    CHECK(siegel_roundtrip_error(J, R) < 1e-9);
  }
  {
    const JtsDescriptor J = JtsDescriptor::parse("I:2:1");
    const SiegelFromJts R = siegel_from_jts(J, principal_tripotent(J));
    CHECK(R.S.k == 1);  // (p - q) q
    CHECK(R.S.U.dim == 1);
    CHECK(siegel_roundtrip_error(J, R) < 1e-9);
  }
  {
    const JtsDescriptor J = JtsDescriptor::parse("I:1:1");
    const SiegelFromJts R = siegel_from_jts(J, principal_tripotent(J));
    CHECK(R.S.k == 0);
    CHECK(R.S.U.dim == 1);
  }
  for (const std::string f : {"I:3:1", "I:4:2", "II:5", "IV:4", "V"}) {
    const JtsDescriptor J = JtsDescriptor::parse(f);
    const SiegelFromJts R = siegel_from_jts(J, principal_tripotent(J));
    CHECK_MESSAGE(siegel_roundtrip_error(J, R) < 1e-9, f);
    CHECK_MESSAGE((R.S.k == 0) == tube_type(f), f);
    validate_siegel(R.S);
  }
  CHECK_THROWS_AS(siegel_from_jts(JtsDescriptor::parse("I:2:1"), CVec::Zero(2)), Error);
}
