#include <doctest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include "hsm/hsla.hpp"

using namespace hsm;

namespace {
const std::vector<std::string> kNonCompact = {"su:1:1", "su:2:1", "su:2:2", "sp-nc:1", "sp-nc:2", "so-nc:4", "so-nc:6",
                                             "so-nc:3:2", "so-nc:4:2"};
}

TEST_CASE("algebra membership") {
  const SlaDescriptor L = SlaDescriptor::parse("su:2:1");
  CHECK(sla_member(L, CMat::Zero(3, 3)));
  CMat H = CMat::Zero(3, 3);
  H.diagonal() << I_ / 3.0, I_ / 3.0, -2.0 * I_ / 3.0;
  CHECK(sla_member(L, H));
  CHECK(la::max_abs(CMat(central_H(L) - H)) < 1e-15);
  CMat herm(3, 3);
  herm << 1, 2, 0, 2, 3, I_, 0, -I_, 1;
  CHECK_FALSE(sla_member(L, herm));
  for (const auto& s : kNonCompact) {
    const SlaDescriptor A = SlaDescriptor::parse(s);
    for (const auto& X : sla_basis(A)) CHECK(sla_member(A, X));
    CHECK(int(sla_basis(A).size()) == A.dim());
    CHECK(k_basis(A).size() + p_basis(A).size() == sla_basis(A).size());
  }
}

TEST_CASE("Cartan involution") {
  Rng rng(1);
  for (const auto& s : kNonCompact) {
    const SlaDescriptor L = SlaDescriptor::parse(s);
    const CMat H = central_H(L);
    CHECK(la::max_abs(CMat(theta(L, H) - H)) < 1e-15);
    for (int k = 0; k < 10; ++k) {
      const CMat X = sample_sla(L, rng), Y = sample_sla(L, rng);
      CHECK(la::max_abs(CMat(theta(L, bracket(X, Y)) - bracket(theta(L, X), theta(L, Y)))) < 1e-12);
      const CartanSplit c = cartan_split(L, X);
      CHECK(la::max_abs(CMat(c.k + c.p - X)) < 1e-15);
      CHECK(la::max_abs(CMat(theta(L, c.k) - c.k)) < 1e-15);
    }
    const CartanSplit ch = cartan_split(L, H);
    CHECK(la::max_abs(ch.p) < 1e-15);
    for (const auto& X : k_basis(L)) {
      CHECK(la::max_abs(CMat(cartan_split(L, X).k - X)) < 1e-15);
      CHECK(la::max_abs(bracket(H, X)) < 1e-15);
    }
    // [p, p] lies in k
    const auto& P = p_basis(L);
    for (size_t i = 0; i + 1 < P.size(); ++i) CHECK(la::max_abs(cartan_split(L, bracket(P[i], P[i + 1])).p) < 1e-12);
  }
  CMat Hsp = CMat::Zero(4, 4);
  Hsp.diagonal() << 0.5 * I_, 0.5 * I_, -0.5 * I_, -0.5 * I_;
  CHECK(la::max_abs(CMat(central_H(SlaDescriptor::parse("sp-nc:2")) - Hsp)) < 1e-15);
}

TEST_CASE("Killing form") {
  const SlaDescriptor L = SlaDescriptor::parse("su:1:1");
  const RVec kk = Eigen::SelfAdjointEigenSolver<RMat>(killing_gram(L, k_basis(L))).eigenvalues();
  const RVec kp = Eigen::SelfAdjointEigenSolver<RMat>(killing_gram(L, p_basis(L))).eigenvalues();
  CHECK(kk.size() == 1);
  CHECK(kk(0) < 0);
  CHECK(kp.minCoeff() > 0);
  // tr(ad X ad Y) against the closed form 2(p+q) tr(XY) on su(p,q)
  Rng rng(2);
  for (const std::string s : {"su:1:1", "su:2:1", "su:2:2"}) {
    const SlaDescriptor A = SlaDescriptor::parse(s);
    for (int k = 0; k < 5; ++k) {
      const CMat X = sample_sla(A, rng), Y = sample_sla(A, rng);
      CHECK(std::abs(killing_form(A, X, Y) - killing_form(A, Y, X)) < 1e-10);
      const double ref = (2.0 * A.size() * (X * Y).trace()).real();
      CHECK(std::abs(killing_form(A, X, Y) - ref) < 1e-9 * (1 + std::abs(ref)));
    }
  }
  const SlaDescriptor C = SlaDescriptor::parse("su-c:2:1");
  const RVec kc = Eigen::SelfAdjointEigenSolver<RMat>(killing_gram(C, sla_basis(C))).eigenvalues();
  CHECK(kc.maxCoeff() < 0);
}

TEST_CASE("compact duals") {
  CHECK(dual_sla(SlaDescriptor::parse("su:2:1")).name() == "su-c:2:1");
  Rng rng(3);
  for (const auto& s : kNonCompact) {
    const SlaDescriptor L = SlaDescriptor::parse(s), Lc = dual_sla(L);
    CHECK(dual_sla(Lc).name() == L.name());
    for (int k = 0; k < 5; ++k) {
      const CMat X = sample_sla(L, rng);
      const CMat Y = dual_map(L, X);
      CHECK(sla_member(Lc, Y));
      CHECK(la::max_abs(CMat(dual_map(Lc, Y) - X)) < 1e-13);
    }
  }
  // su(1,1) -> su(2): anti-Hermitian traceless image
  const SlaDescriptor L = SlaDescriptor::parse("su:1:1");
  const CMat Y = dual_map(L, sample_sla(L, rng));
  CHECK(la::max_abs(CMat(Y + Y.adjoint())) < 1e-14);
  CHECK(std::abs(Y.trace()) < 1e-14);
}

TEST_CASE("ad(H)^2 = -id on p") {
  for (const std::string s : {"su:2:1", "su:2:2", "sp-nc:2", "so-nc:4", "so-nc:3:2"}) CHECK(ad_H_squared_check(SlaDescriptor::parse(s)));
  const SlaDescriptor L = SlaDescriptor::parse("su:2:1");
  CHECK(ad_H_squared_residual(L, CMat(1.1 * central_H(L))) > 0.1);
}

TEST_CASE("p+ projection") {
  const SlaDescriptor L = SlaDescriptor::parse("su:2:1");
  CMat up = CMat::Zero(3, 3);
  up(0, 2) = 1;
  up(1, 2) = cd(0.5, 0.2);
  const PPlusSplit a = pplus_project(L, up);
  CHECK(la::max_abs(CMat(a.plus - up)) < 1e-15);
  CHECK(la::max_abs(a.minus) < 1e-15);
  const PPlusSplit b = pplus_project(L, up.adjoint());
  CHECK(la::max_abs(b.plus) < 1e-15);
  CHECK(la::max_abs(CMat(b.minus - up.adjoint())) < 1e-15);
  Rng rng(4);
  for (const auto& s : kNonCompact) {
    const SlaDescriptor A = SlaDescriptor::parse(s);
    const DomainDescriptor D = domain_for_sla(A);
    for (int k = 0; k < 5; ++k) {
      const CVec z = rng.cnormal_vec(D.dim()), w = rng.cnormal_vec(D.dim());
      const CMat X = pplus_embed(A, z), Y = pplus_embed(A, w);
      CHECK(la::max_abs(bracket(X, Y)) < 1e-12);  // p+ is abelian
      CHECK((pplus_extract(A, X) - z).norm() < 1e-13);
      CHECK(la::max_abs(CMat(bracket(central_H(A), X) - I_ * X)) < 1e-13);
    }
  }
}

TEST_CASE("bracket triple equals the table triple with no scalar") {
  const SlaDescriptor L = SlaDescriptor::parse("su:2:1");
  const CVec e11 = basis_vector(2, 0);
  CHECK((bracket_triple(L, e11, e11, e11) - e11).norm() < 1e-15);
  CHECK(bracket_triple(L, CVec::Zero(2), CVec::Zero(2), CVec::Zero(2)).norm() == 0.0);
  Rng rng(5);
  for (const auto& s : kNonCompact) {
    const SlaDescriptor A = SlaDescriptor::parse(s);
    const DomainDescriptor D = domain_for_sla(A);
    double worst = 0;
    for (int k = 0; k < 50; ++k) {
      const CVec x = rng.cnormal_vec(D.dim()), y = rng.cnormal_vec(D.dim()), z = rng.cnormal_vec(D.dim());
      worst = std::max(worst, (bracket_triple(A, x, y, z) - triple(D, x, y, z)).cwiseAbs().maxCoeff());
    }
    CHECK_MESSAGE(worst < 1e-10, s << " -> " << D.name());
  }
  CHECK(sla_for_domain(parse_domain("IV:4")).name() == "so-nc:4:2");
  CHECK(sla_for_domain(parse_domain("II:3")).name() == "so-nc:6");
}

TEST_CASE("real form conjugation") {
  for (auto v : {RealFormVariant::II, RealFormVariant::III}) {
    const int n = 2;
    const CMat I4 = CMat::Identity(2 * n, 2 * n);
    CHECK(la::max_abs(CMat(real_form_conjugation(v, I4, false) - I4)) < 1e-15);
  }
  Rng rng(6);
  const SlaDescriptor L = SlaDescriptor::parse("sp-nc:2");
  for (int k = 0; k < 10; ++k) {
    const CMat X = sample_sla(L, rng, 0.5);
    const CMat g = X.exp();
    const CMat h = real_form_conjugation(RealFormVariant::III, g, false);
    // h lies in Sp(2, R): real and h^t J h = J
    CHECK(h.imag().cwiseAbs().maxCoeff() < 1e-12);
    CMat J = CMat::Zero(4, 4);
    J.topRightCorner(2, 2) = CMat::Identity(2, 2);
    J.bottomLeftCorner(2, 2) = -CMat::Identity(2, 2);
    CHECK(la::max_abs(CMat(h.transpose() * J * h - J)) < 1e-12);
    CHECK(real_form_target_residual(RealFormVariant::III, h, false) < 1e-12);
    CHECK(la::max_abs(CMat(real_form_inverse(RealFormVariant::III, h) - g)) < 1e-12);
    const CMat x = real_form_conjugation(RealFormVariant::III, X, true);
    CHECK(real_form_target_residual(RealFormVariant::III, x, true) < 1e-12);
    CHECK(la::max_abs(CMat(real_form_inverse(RealFormVariant::III, x) - X)) < 1e-12);
  }
  const SlaDescriptor S = SlaDescriptor::parse("so-nc:4");
  for (int k = 0; k < 5; ++k) {
    const CMat g = sample_sla(S, rng, 0.5).exp();
    CHECK(real_form_target_residual(RealFormVariant::II, real_form_conjugation(RealFormVariant::II, g, false), false) <
          1e-12);
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(SlaDescriptor::parse("e7"), Error);
  CHECK_THROWS_AS(SlaDescriptor::parse("su:0:1"), Error);
}
