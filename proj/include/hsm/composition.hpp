#pragma once

#include <array>

#include "hsm/common.hpp"

namespace hsm {

inline constexpr double kCompositionTol = 1e-12;

struct Quaternion {
  double x0 = 0, x1 = 0, x2 = 0, x3 = 0;

  static Quaternion unit() { return {1, 0, 0, 0}; }
  double operator[](int k) const;
  double& operator[](int k);
  Quaternion tilde() const { return {x0, -x1, -x2, -x3}; }
  double norm2() const { return x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3; }
};

Quaternion operator*(const Quaternion& p, const Quaternion& q);
Quaternion operator+(const Quaternion& p, const Quaternion& q);
Quaternion operator-(const Quaternion& p, const Quaternion& q);
Quaternion operator-(const Quaternion& p);
Quaternion operator*(double s, const Quaternion& p);

// Cayley-Dickson pair (a, b) over the quaternions.
struct Octonion {
  Quaternion a, b;

  static Octonion unit() { return {Quaternion::unit(), {}}; }
  static Octonion basis(int k);
  static Octonion from_array(const std::array<double, 8>& c);
  std::array<double, 8> to_array() const;
  double operator[](int k) const;
  double& operator[](int k);
  Octonion tilde() const { return {a.tilde(), -b}; }
  double norm2() const { return a.norm2() + b.norm2(); }
};

Octonion operator*(const Octonion& x, const Octonion& y);
Octonion operator+(const Octonion& x, const Octonion& y);
Octonion operator-(const Octonion& x, const Octonion& y);
Octonion operator-(const Octonion& x);
Octonion operator*(double s, const Octonion& x);

Octonion oct_mul(const Octonion& x, const Octonion& y);
double oct_pairing(const Octonion& x, const Octonion& y);
double max_abs_diff(const Octonion& x, const Octonion& y);

// Structure constants T[i][j][k]: (e_i e_j) = sum_k T[i][j][k] e_k,
// generated once from the Cayley-Dickson rule.
using OctTable = std::array<std::array<std::array<double, 8>, 8>, 8>;
const OctTable& oct_table();

// Element of O (x) C.
struct ComplexOctonion {
  Octonion re, im;

  static ComplexOctonion unit() { return {Octonion::unit(), {}}; }
  static ComplexOctonion real(const Octonion& x) { return {x, {}}; }
  cd operator[](int k) const { return {re[k], im[k]}; }
  void set(int k, cd v) { re[k] = v.real(); im[k] = v.imag(); }
  // C-linear involution.
  ComplexOctonion tilde() const { return {re.tilde(), im.tilde()}; }
  // C-antilinear involution w.r.t. the real form O.
  ComplexOctonion bar() const { return {re, -im}; }
  // The complex quadratic form x x~ (a scalar multiple of e).
  cd norm2() const;
  CVec to_vec() const;
  static ComplexOctonion from_vec(const CVec& v, int offset = 0);
};

ComplexOctonion operator*(const ComplexOctonion& x, const ComplexOctonion& y);
ComplexOctonion operator+(const ComplexOctonion& x, const ComplexOctonion& y);
ComplexOctonion operator-(const ComplexOctonion& x, const ComplexOctonion& y);
ComplexOctonion operator-(const ComplexOctonion& x);
ComplexOctonion operator*(cd s, const ComplexOctonion& x);

// C-bilinear extension of <,>.
cd coct_pairing(const ComplexOctonion& x, const ComplexOctonion& y);
double max_abs_diff(const ComplexOctonion& x, const ComplexOctonion& y);

struct ComplexOctonionOps {
  ComplexOctonion tilde, bar;
  cd norm;
};
ComplexOctonionOps coct_ops(const ComplexOctonion& x);

}  // namespace hsm
