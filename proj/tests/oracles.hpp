#pragma once
// Independent reference implementations used by the unit tests.
#include <complex>
#include <vector>

#include "hsm/albert.hpp"
#include "hsm/jordan.hpp"

namespace oracle {

using cd = std::complex<double>;
using Vec = std::vector<double>;

inline Vec conj(const Vec& x) {
  Vec r(x.size());
  r[0] = x[0];
  for (size_t i = 1; i < x.size(); ++i) r[i] = -x[i];
  return r;
}
inline Vec axpy(Vec a, const Vec& b, double s) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
  return a;
}
inline Vec cat(Vec a, const Vec& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Cayley-Dickson doubling from R: quaternions via (a,b)(c,d) = (ac - d*b, da + bc*) (Hamilton ij = k),
// octonions via (a,b)(c,d) = (ac - d b*, a* d + c b).
inline Vec cd_mul(const Vec& x, const Vec& y) {
  if (x.size() == 1) return {x[0] * y[0]};
  const size_t h = x.size() / 2;
  const Vec a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
  const Vec c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
  if (h < 4) return cat(axpy(cd_mul(a, c), cd_mul(conj(d), b), -1), axpy(cd_mul(d, a), cd_mul(b, conj(c)), 1));
  return cat(axpy(cd_mul(a, c), cd_mul(d, conj(b)), -1), axpy(cd_mul(conj(a), d), cd_mul(c, b), 1));
}

inline Vec to_vec(const hsm::Octonion& x) {
  const auto a = x.to_array();
  return Vec(a.begin(), a.end());
}
inline double norm2(const Vec& x) {
  double s = 0;
  for (double v : x) s += v * v;
  return s;
}

// Complexified octonion product over 8 complex coordinates.
inline std::vector<cd> coct_mul(const std::vector<cd>& x, const std::vector<cd>& y) {
  Vec xr(8), xi(8), yr(8), yi(8);
  for (int k = 0; k < 8; ++k) xr[k] = x[k].real(), xi[k] = x[k].imag(), yr[k] = y[k].real(), yi[k] = y[k].imag();
  const Vec rr = cd_mul(xr, yr), ii = cd_mul(xi, yi), ri = cd_mul(xr, yi), ir = cd_mul(xi, yr);
  std::vector<cd> out(8);
  for (int k = 0; k < 8; ++k) out[k] = {rr[k] - ii[k], ri[k] + ir[k]};
  return out;
}

// 3x3 matrix over O (x) C, product ½(XY + YX) entrywise.
using OMat = std::array<std::array<std::vector<cd>, 3>, 3>;
inline OMat omat(const hsm::H3Element& x) {
  OMat m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const auto e = x.entry(i, j);
      m[i][j].resize(8);
      for (int k = 0; k < 8; ++k) m[i][j][k] = e[k];
    }
  return m;
}
inline OMat omat_jordan(const OMat& X, const OMat& Y) {
  OMat R;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      R[i][j].assign(8, 0.0);
      for (int l = 0; l < 3; ++l) {
        const auto p = coct_mul(X[i][l], Y[l][j]), q = coct_mul(Y[i][l], X[l][j]);
        for (int k = 0; k < 8; ++k) R[i][j][k] += 0.5 * (p[k] + q[k]);
      }
    }
  return R;
}
inline double omat_diff(const OMat& A, const OMat& B) {
  double m = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 8; ++k) m = std::max(m, std::abs(A[i][j][k] - B[i][j][k]));
  return m;
}

// Matrix-model Jordan product ½(XY + YX) for the Hermitian matrix variants.
inline hsm::RVec matrix_jordan(const hsm::JordanAlgebra& A, const hsm::RVec& x, const hsm::RVec& y) {
  const hsm::CMat X = hsm::to_matrix(A, x), Y = hsm::to_matrix(A, y);
  return hsm::from_matrix(A, hsm::CMat(0.5 * (X * Y + Y * X))).real();
}

}  // namespace oracle
