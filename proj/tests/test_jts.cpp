#include <doctest.h>

#include "hsm/atlas.hpp"
#include "hsm/jts.hpp"

using namespace hsm;

namespace {
const std::vector<std::string> kFamilies = {"I:1:1", "I:2:1", "I:3:2", "I:2:2", "II:4", "II:5", "III:2", "III:3",
                                           "IV:3",  "IV:5",  "V",     "VI",    "jordan(herm-r:2)",
                                           "jordan(spin:3)", "jordan(albert)", "prod(I:1:1,IV:3)"};
double diff(const CVec& a, const CVec& b) { return (a - b).cwiseAbs().maxCoeff(); }
CVec cvec(std::initializer_list<cd> v) {
  CVec r(v.size());
  int i = 0;
  for (cd x : v) r(i++) = x;
  return r;
}
// Matrix-model triple ½(x y* z + z y* x) for type I, computed directly.
CMat tripleI(const CMat& x, const CMat& y, const CMat& z) { return 0.5 * (x * y.adjoint() * z + z * y.adjoint() * x); }
}  // namespace

TEST_CASE("triple examples") {
  const JtsDescriptor I21 = JtsDescriptor::parse("I:2:1");
  const CVec E11 = cvec({1, 0});
  CHECK(diff(triple(I21, E11, E11, E11), E11) == 0.0);
  const JtsDescriptor IV2 = JtsDescriptor::type_iv(2);
  CHECK(diff(triple(IV2, cvec({1, 0}), cvec({0, 1}), cvec({1, 0})), cvec({0, -1})) < 1e-15);
  CHECK(diff(triple(IV2, cvec({1, 0}), cvec({0, 1}), cvec({1, 0}), Convention::Printed), cvec({0, 1})) < 1e-15);
  const JtsDescriptor F = JtsDescriptor::parse("jordan(herm-r:2)");
  const CVec e = cvec({1, 1, 0});
  CHECK(diff(triple(F, e, e, e), e) < 1e-15);
}

TEST_CASE("type I triple matches the matrix formula") {
  const JtsDescriptor J = JtsDescriptor::parse("I:3:2");
  Rng rng(1);
  for (int s = 0; s < 20; ++s) {
    const CVec x = rng.cnormal_vec(6), y = rng.cnormal_vec(6), z = rng.cnormal_vec(6);
    const CMat ref = tripleI(jts_to_matrix(J, x), jts_to_matrix(J, y), jts_to_matrix(J, z));
    CHECK(la::max_abs(CMat(jts_to_matrix(J, triple(J, x, y, z)) - ref)) < 1e-12);
  }
}

TEST_CASE("box operator") {
  const JtsDescriptor J = JtsDescriptor::parse("I:1:1");
  const CVec z = cvec({cd(0.3, -0.4)});
  CHECK(std::abs(box(J, z, z)(0, 0) - 0.25) < 1e-15);
  const JtsDescriptor III2 = JtsDescriptor::parse("III:2");
  CHECK(la::max_abs(box(III2, CVec::Zero(3), cvec({1, 2, 3}))) == 0.0);
  Rng rng(2);
  for (int s = 0; s < 50; ++s) {
    const CVec a = rng.cnormal_vec(3), b = rng.cnormal_vec(3), x = rng.cnormal_vec(3), y = rng.cnormal_vec(3);
    const CMat lhs = box(III2, a, b) * box(III2, x, y) - box(III2, x, y) * box(III2, a, b);
    const CMat rhs = box(III2, triple(III2, a, b, x), y) - box(III2, x, triple(III2, b, a, y));
    CHECK(la::max_abs(CMat(lhs - rhs)) < 1e-9);
    // box(a,b) x = {a,b,x}
    CHECK(diff(box(III2, a, b) * x, triple(III2, a, b, x)) < 1e-12);
  }
}

TEST_CASE("JT1, JT2, linearity") {
  Rng rng(3);
  for (const auto& f : kFamilies) {
    const JtsDescriptor J = JtsDescriptor::parse(f);
    const int d = J.dim();
    double jt1 = 0, jt2 = 0, lin = 0;
    for (int s = 0; s < 20; ++s) {
      const CVec a = rng.cnormal_vec(d), b = rng.cnormal_vec(d), x = rng.cnormal_vec(d), y = rng.cnormal_vec(d);
      jt1 = std::max(jt1, diff(triple(J, a, b, x), triple(J, x, b, a)));
      const CMat lhs = box(J, a, b) * box(J, x, y) - box(J, x, y) * box(J, a, b);
      const CMat rhs = box(J, triple(J, a, b, x), y) - box(J, x, triple(J, b, a, y));
      jt2 = std::max(jt2, la::max_abs(CMat(lhs - rhs)));
      const cd c(0.7, -1.3);
      lin = std::max(lin, diff(triple(J, CVec(c * a), b, x), c * triple(J, a, b, x)));
      lin = std::max(lin, diff(triple(J, a, CVec(c * b), x), std::conj(c) * triple(J, a, b, x)));
    }
    CHECK_MESSAGE(jt1 < 1e-12, f);
    CHECK_MESSAGE(jt2 < 1e-9, f << " " << jt2);
    CHECK_MESSAGE(lin < 1e-12, f);
  }
}

TEST_CASE("trace form: positivity, Hermitian symmetry, adjoints") {
  Rng rng(4);
  for (const auto& f : kFamilies) {
    const JtsDescriptor J = JtsDescriptor::parse(f);
    const int d = J.dim();
    const RVec ev = Eigen::SelfAdjointEigenSolver<CMat>(jts_inner_matrix(J)).eigenvalues();
    CHECK_MESSAGE(ev(0) > 0, f);
    for (int s = 0; s < 10; ++s) {
      const CVec x = rng.cnormal_vec(d), y = rng.cnormal_vec(d), a = rng.cnormal_vec(d), b = rng.cnormal_vec(d);
      CHECK(jts_trace_form(J, x, x).real() > 0);
      CHECK(std::abs(jts_trace_form(J, x, y) - std::conj(jts_trace_form(J, y, x))) < 1e-9);
      // (a box b)* = b box a
      CHECK(la::max_abs(CMat(jts_adjoint(J, box(J, a, b)) - box(J, b, a))) < 1e-9);
    }
    CHECK(std::abs(jts_trace_form(J, CVec::Zero(d), rng.cnormal_vec(d))) == 0.0);
  }
}

TEST_CASE("FromJordan trace form equals the Jordan trace form on the real slice") {
  for (const std::string a : {"herm-r:2", "herm-c:2", "spin:3", "albert"}) {
    const JordanAlgebra A = JordanAlgebra::parse(a);
    const JtsDescriptor J = JtsDescriptor::from_jordan(A);
    Rng rng(5);
    for (int s = 0; s < 5; ++s) {
      const RVec x = rng.normal_vec(A.dim()), y = rng.normal_vec(A.dim());
      const cd t = jts_trace_form(J, x.cast<cd>(), y.cast<cd>());
      CHECK(std::abs(t - trace_form(A, x, y)) < 1e-9 * (1 + std::abs(t)));
    }
  }
}

TEST_CASE("tripotents") {
  const JtsDescriptor J = JtsDescriptor::parse("I:3:2");
  for (int i = 0; i < 6; ++i) CHECK(is_tripotent(J, basis_vector(6, i)));
  CHECK_FALSE(is_tripotent(J, CVec(2.0 * basis_vector(6, 0))));
  CHECK(diff(triple(J, CVec(2.0 * basis_vector(6, 0)), CVec(2.0 * basis_vector(6, 0)), CVec(2.0 * basis_vector(6, 0))),
             CVec(8.0 * basis_vector(6, 0))) == 0.0);
  CHECK(is_tripotent(J, CVec::Zero(6)));
}

TEST_CASE("frames and rank") {
  CHECK(jordan_frame(JtsDescriptor::parse("I:3:2")).size() == 2);
  CHECK(jordan_frame(JtsDescriptor::parse("IV:5")).size() == 2);
  CHECK(jordan_frame(JtsDescriptor::parse("III:3")).size() == 3);
  CHECK(rank(JtsDescriptor::parse("II:5")) == 2);
  CHECK(rank(JtsDescriptor::parse("VI")) == 3);
  CHECK(rank(JtsDescriptor::parse("I:1:1")) == 1);
  for (const auto& f : kFamilies) {
    const JtsDescriptor J = JtsDescriptor::parse(f);
    const auto fr = jordan_frame(J, 7);
    CHECK_MESSAGE(int(fr.size()) == J.table_rank(), f);
    for (size_t i = 0; i < fr.size(); ++i) {
      CHECK(is_tripotent(J, fr[i]));
      for (size_t j = 0; j < i; ++j) CHECK(orthogonal_tripotents(J, fr[i], fr[j]));
    }
    const auto sf = standard_frame(J);
    CHECK_MESSAGE(int(sf.size()) == J.table_rank(), f);
    // the frame sum is a maximal tripotent: e box e has no zero eigenvalue
    const CVec e = principal_tripotent(J);
    CHECK(is_tripotent(J, e));
    CHECK(box_spectrum(J, e)(0) > 0.25);
  }
}

TEST_CASE("matrix types: rank = number of singular values above 1e-6") {
  Rng rng(6);
  for (const std::string f : {"I:3:2", "I:4:2", "II:4", "II:5", "III:3"}) {
    const JtsDescriptor J = JtsDescriptor::parse(f);
    const CMat M = jts_to_matrix(J, rng.cnormal_vec(J.dim()));
    const RVec sv = Eigen::JacobiSVD<CMat>(M).singularValues();
    int r = 0;
    for (int i = 0; i < sv.size(); ++i) r += sv(i) > 1e-6;
    if (J.kind == JtsDescriptor::Kind::II) r /= 2;  // singular values of a skew matrix come in pairs
    CHECK_MESSAGE(r == rank(J), f);
  }
}

TEST_CASE("rank agrees with the atlas, dimension with the carrier") {
  for (const std::string f : {"I:3:2", "I:2:2", "II:4", "II:5", "II:6", "III:3", "IV:3", "IV:5", "V", "VI"}) {
    const JtsDescriptor J = JtsDescriptor::parse(f);
    CHECK(lookup(f).rank == rank(J));
    CHECK(lookup(f).real_dim == 2 * J.dim());
  }
}

TEST_CASE("matrix views round trip and errors") {
  Rng rng(7);
  for (const std::string f : {"I:3:2", "II:4", "III:3"}) {
    const JtsDescriptor J = JtsDescriptor::parse(f);
    const CVec x = rng.cnormal_vec(J.dim());
    CHECK(diff(jts_from_matrix(J, jts_to_matrix(J, x)), x) == 0.0);
  }
  CMat notsym(2, 2);
  notsym << 1, 2, 3, 4;
  CHECK_THROWS_AS(jts_from_matrix(JtsDescriptor::parse("III:2"), notsym), Error);
  CHECK_THROWS_AS(JtsDescriptor::parse("VII"), Error);
  CHECK_THROWS_AS(triple(JtsDescriptor::parse("IV:3"), CVec::Zero(2), CVec::Zero(3), CVec::Zero(3)), Error);
}
