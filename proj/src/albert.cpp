#include "hsm/albert.hpp"

#include <algorithm>

namespace hsm {

H3Element H3Element::identity() { return diag(1, 1, 1); }

H3Element H3Element::diag(cd a1, cd a2, cd a3) {
  H3Element x;
  x.alpha = {a1, a2, a3};
  return x;
}

CVec H3Element::flatten() const {
  CVec v(kDim);
  for (int i = 0; i < 3; ++i) v(i) = alpha[i];
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 8; ++k) v(3 + 8 * j + k) = a[j][k];
  return v;
}

H3Element H3Element::unflatten(const CVec& v, int offset) {
  H3Element x;
  for (int i = 0; i < 3; ++i) x.alpha[i] = v(offset + i);
  for (int j = 0; j < 3; ++j) x.a[j] = ComplexOctonion::from_vec(v, offset + 3 + 8 * j);
  return x;
}

H3Element H3Element::bar() const {
  H3Element x;
  for (int i = 0; i < 3; ++i) {
    x.alpha[i] = std::conj(alpha[i]);
    x.a[i] = a[i].bar();
  }
  return x;
}

static ComplexOctonion scalar(cd s) { return s * ComplexOctonion::unit(); }

ComplexOctonion H3Element::entry(int i, int j) const {
  if (i == j) return scalar(alpha[i]);
  if (i == 0 && j == 1) return a[2];
  if (i == 0 && j == 2) return a[1].tilde();
  if (i == 1 && j == 0) return a[2].tilde();
  if (i == 1 && j == 2) return a[0];
  if (i == 2 && j == 0) return a[1];
  return a[0].tilde();
}

H3Element H3Element::from_entries(const std::array<std::array<ComplexOctonion, 3>, 3>& m) {
  H3Element x;
  for (int i = 0; i < 3; ++i) x.alpha[i] = m[i][i][0];
  x.a[0] = m[1][2];
  x.a[1] = m[2][0];
  x.a[2] = m[0][1];
  return x;
}

H3Element operator+(const H3Element& x, const H3Element& y) {
  H3Element z;
  for (int i = 0; i < 3; ++i) {
    z.alpha[i] = x.alpha[i] + y.alpha[i];
    z.a[i] = x.a[i] + y.a[i];
  }
  return z;
}

H3Element operator-(const H3Element& x, const H3Element& y) { return x + cd(-1) * y; }

H3Element operator*(cd s, const H3Element& x) {
  H3Element z;
  for (int i = 0; i < 3; ++i) {
    z.alpha[i] = s * x.alpha[i];
    z.a[i] = s * x.a[i];
  }
  return z;
}

double max_abs_diff(const H3Element& x, const H3Element& y) { return max_abs(x - y); }

double max_abs(const H3Element& x) { return x.flatten().cwiseAbs().maxCoeff(); }

H3Element freudenthal(const H3Element& A, const H3Element& B) {
  const auto& al = A.alpha;
  const auto& be = B.alpha;
  const auto& a = A.a;
  const auto& b = B.a;
  H3Element c;
  c.alpha[0] = al[1] * be[2] + al[2] * be[1] - coct_pairing(a[0], b[0]);
  c.alpha[1] = al[2] * be[0] + al[0] * be[2] - coct_pairing(a[1], b[1]);
  c.alpha[2] = al[0] * be[1] + al[1] * be[0] - coct_pairing(a[2], b[2]);
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    c.a[i] = b[k].tilde() * a[j].tilde() + a[k].tilde() * b[j].tilde() - al[i] * b[i] - be[i] * a[i];
  }
  return c;
}

cd h3_form(const H3Element& A, const H3Element& B) {
  cd s = 0;
  for (int i = 0; i < 3; ++i) s += A.alpha[i] * std::conj(B.alpha[i]);
  for (int j = 0; j < 3; ++j) s += coct_pairing(A.a[j], B.a[j].bar());
  return s;
}

cd det3(const H3Element& a) { return h3_form(freudenthal(a, a), a.bar()) / 6.0; }

cd det3_expanded(const H3Element& x) {
  const auto& al = x.alpha;
  const auto& a = x.a;
  cd d = al[0] * al[1] * al[2];
  for (int i = 0; i < 3; ++i) d -= al[i] * a[i].norm2();
  ComplexOctonion t = a[0] * (a[1] * a[2]) + (a[2].tilde() * a[1].tilde()) * a[0].tilde();
  return d + t[0];
}

H3Element sharp(const H3Element& a) { return 0.5 * freudenthal(a, a); }

H3Element albert_jordan_mul(const H3Element& x, const H3Element& y) {
  std::array<std::array<ComplexOctonion, 3>, 3> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      ComplexOctonion s;
      for (int k = 0; k < 3; ++k) s = s + x.entry(i, k) * y.entry(k, j) + y.entry(i, k) * x.entry(k, j);
      m[i][j] = 0.5 * s;
    }
  return H3Element::from_entries(m);
}

}  // namespace hsm
