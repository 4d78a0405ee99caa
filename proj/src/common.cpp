#include "hsm/common.hpp"

#include <cmath>

namespace hsm {

const char* to_string(TriState s) {
  switch (s) {
    case TriState::Member: return "member";
    case TriState::Boundary: return "boundary";
    case TriState::Exterior: return "exterior";
  }
  return "?";
}

TriState classify_margin(double margin, double tol) {
  if (margin > tol) return TriState::Member;
  if (margin < -tol) return TriState::Exterior;
  return TriState::Boundary;
}

double Rng::uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double t = 2.0 * M_PI * u2;
  spare_ = r * std::sin(t);
  has_spare_ = true;
  return r * std::cos(t);
}

RVec Rng::normal_vec(int n) {
  RVec v(n);
  for (int i = 0; i < n; ++i) v(i) = normal();
  return v;
}

CVec Rng::cnormal_vec(int n) {
  CVec v(n);
  for (int i = 0; i < n; ++i) v(i) = cnormal();
  return v;
}

namespace la {

template <class M>
static M nullspace_impl(const M& A, double tol) {
  const int n = static_cast<int>(A.cols());
  if (A.rows() == 0) return M::Identity(n, n);
  Eigen::JacobiSVD<M> svd(A, Eigen::ComputeFullV);
  auto s = svd.singularValues();
  double scale = s.size() ? std::max(1.0, s(0)) : 1.0;
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > tol * scale) ++r;
  return svd.matrixV().rightCols(n - r);
}

CMat nullspace(const CMat& A, double tol) { return nullspace_impl(A, tol); }
RMat nullspace(const RMat& A, double tol) { return nullspace_impl(A, tol); }

RVec selfadjoint_eigs(const CMat& A, const CMat& P, CMat& vecs) {
  Eigen::LLT<CMat> llt(P);
  if (llt.info() != Eigen::Success) throw Error("NotPositive", "Gram matrix is not positive definite");
  CMat L = llt.matrixL();
  // L^H A L^{-H} is Hermitian when A is P-self-adjoint.
  CMat Linv = L.inverse();
  CMat S = L.adjoint() * A * Linv.adjoint();
  S = 0.5 * (S + S.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<CMat> es(S);
  vecs = Linv.adjoint() * es.eigenvectors();
  return es.eigenvalues();
}

RVec selfadjoint_eigs(const CMat& A, const CMat& P) {
  CMat v;
  return selfadjoint_eigs(A, P, v);
}

double max_abs(const CMat& A) { return A.size() ? A.cwiseAbs().maxCoeff() : 0.0; }
double max_abs(const RMat& A) { return A.size() ? A.cwiseAbs().maxCoeff() : 0.0; }

CVec coords(const CMat& B, const CVec& y, double* resid) {
  CVec c = B.colPivHouseholderQr().solve(y);
  if (resid) *resid = (B * c - y).norm();
  return c;
}

RVec realify(const CVec& v) {
  RVec r(2 * v.size());
  r << v.real(), v.imag();
  return r;
}

CVec complexify(const RVec& v) {
  const int n = static_cast<int>(v.size() / 2);
  CVec c(n);
  for (int i = 0; i < n; ++i) c(i) = cd(v(i), v(n + i));
  return c;
}

}  // namespace la
}  // namespace hsm
