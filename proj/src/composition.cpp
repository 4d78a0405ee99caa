#include "hsm/composition.hpp"

#include <algorithm>
#include <cmath>

namespace hsm {

double Quaternion::operator[](int k) const {
  switch (k) {
    case 0: return x0;
    case 1: return x1;
    case 2: return x2;
    default: return x3;
  }
}

double& Quaternion::operator[](int k) {
  switch (k) {
    case 0: return x0;
    case 1: return x1;
    case 2: return x2;
    default: return x3;
  }
}

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.x0 * q.x0 - p.x1 * q.x1 - p.x2 * q.x2 - p.x3 * q.x3,
          p.x0 * q.x1 + p.x1 * q.x0 + p.x2 * q.x3 - p.x3 * q.x2,
          p.x0 * q.x2 - p.x1 * q.x3 + p.x2 * q.x0 + p.x3 * q.x1,
          p.x0 * q.x3 + p.x1 * q.x2 - p.x2 * q.x1 + p.x3 * q.x0};
}
Quaternion operator+(const Quaternion& p, const Quaternion& q) {
  return {p.x0 + q.x0, p.x1 + q.x1, p.x2 + q.x2, p.x3 + q.x3};
}
Quaternion operator-(const Quaternion& p, const Quaternion& q) {
  return {p.x0 - q.x0, p.x1 - q.x1, p.x2 - q.x2, p.x3 - q.x3};
}
Quaternion operator-(const Quaternion& p) { return {-p.x0, -p.x1, -p.x2, -p.x3}; }
Quaternion operator*(double s, const Quaternion& p) { return {s * p.x0, s * p.x1, s * p.x2, s * p.x3}; }

Octonion Octonion::basis(int k) {
  Octonion o;
  o[k] = 1.0;
  return o;
}

Octonion Octonion::from_array(const std::array<double, 8>& c) {
  Octonion o;
  for (int k = 0; k < 8; ++k) o[k] = c[k];
  return o;
}

std::array<double, 8> Octonion::to_array() const {
  std::array<double, 8> c{};
  for (int k = 0; k < 8; ++k) c[k] = (*this)[k];
  return c;
}

double Octonion::operator[](int k) const { return k < 4 ? a[k] : b[k - 4]; }
double& Octonion::operator[](int k) { return k < 4 ? a[k] : b[k - 4]; }

Octonion operator*(const Octonion& x, const Octonion& y) {
  return {x.a * y.a - y.b * x.b.tilde(), x.a.tilde() * y.b + y.a * x.b};
}
Octonion operator+(const Octonion& x, const Octonion& y) { return {x.a + y.a, x.b + y.b}; }
Octonion operator-(const Octonion& x, const Octonion& y) { return {x.a - y.a, x.b - y.b}; }
Octonion operator-(const Octonion& x) { return {-x.a, -x.b}; }
Octonion operator*(double s, const Octonion& x) { return {s * x.a, s * x.b}; }

Octonion oct_mul(const Octonion& x, const Octonion& y) { return x * y; }

double oct_pairing(const Octonion& x, const Octonion& y) {
  return (x + y).norm2() - x.norm2() - y.norm2();
}

double max_abs_diff(const Octonion& x, const Octonion& y) {
  double m = 0;
  for (int k = 0; k < 8; ++k) m = std::max(m, std::abs(x[k] - y[k]));
  return m;
}

const OctTable& oct_table() {
  static const OctTable table = [] {
    OctTable t{};
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        Octonion p = Octonion::basis(i) * Octonion::basis(j);
        for (int k = 0; k < 8; ++k) t[i][j][k] = p[k];
      }
    return t;
  }();
  return table;
}

cd ComplexOctonion::norm2() const {
  cd s = 0;
  for (int k = 0; k < 8; ++k) s += (*this)[k] * (*this)[k];
  return s;
}

CVec ComplexOctonion::to_vec() const {
  CVec v(8);
  for (int k = 0; k < 8; ++k) v(k) = (*this)[k];
  return v;
}

ComplexOctonion ComplexOctonion::from_vec(const CVec& v, int offset) {
  ComplexOctonion x;
  for (int k = 0; k < 8; ++k) x.set(k, v(offset + k));
  return x;
}

ComplexOctonion operator*(const ComplexOctonion& x, const ComplexOctonion& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}
ComplexOctonion operator+(const ComplexOctonion& x, const ComplexOctonion& y) {
  return {x.re + y.re, x.im + y.im};
}
ComplexOctonion operator-(const ComplexOctonion& x, const ComplexOctonion& y) {
  return {x.re - y.re, x.im - y.im};
}
ComplexOctonion operator-(const ComplexOctonion& x) { return {-x.re, -x.im}; }
ComplexOctonion operator*(cd s, const ComplexOctonion& x) {
  return {s.real() * x.re - s.imag() * x.im, s.real() * x.im + s.imag() * x.re};
}

cd coct_pairing(const ComplexOctonion& x, const ComplexOctonion& y) {
  cd s = 0;
  for (int k = 0; k < 8; ++k) s += x[k] * y[k];
  return 2.0 * s;
}

double max_abs_diff(const ComplexOctonion& x, const ComplexOctonion& y) {
  return std::max(max_abs_diff(x.re, y.re), max_abs_diff(x.im, y.im));
}

ComplexOctonionOps coct_ops(const ComplexOctonion& x) { return {x.tilde(), x.bar(), x.norm2()}; }

}  // namespace hsm
