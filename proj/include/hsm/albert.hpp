#pragma once

#include <array>

#include "hsm/composition.hpp"

namespace hsm {

// [[a1_, a3, a2~], [a3~, a2_, a1], [a2, a1~, a3_]] with a_i_ = alpha_i.
struct H3Element {
  std::array<cd, 3> alpha{};
  std::array<ComplexOctonion, 3> a{};

  static H3Element identity();
  static H3Element diag(cd a1, cd a2, cd a3);
  static constexpr int kDim = 27;
  // 27 complex coordinates: alpha_1..3, then the 8 coordinates of a_1, a_2, a_3.
  CVec flatten() const;
  static H3Element unflatten(const CVec& v, int offset = 0);
  H3Element bar() const;
  cd trace() const { return alpha[0] + alpha[1] + alpha[2]; }
  // Entry (i,j) of the 3x3 octonionic matrix.
  ComplexOctonion entry(int i, int j) const;
  static H3Element from_entries(const std::array<std::array<ComplexOctonion, 3>, 3>& m);
};

H3Element operator+(const H3Element& x, const H3Element& y);
H3Element operator-(const H3Element& x, const H3Element& y);
H3Element operator*(cd s, const H3Element& x);
double max_abs_diff(const H3Element& x, const H3Element& y);
double max_abs(const H3Element& x);

H3Element freudenthal(const H3Element& a, const H3Element& b);
cd h3_form(const H3Element& a, const H3Element& b);
cd det3(const H3Element& a);
// alpha1 alpha2 alpha3 - sum alpha_i |a_i|^2 + <scalar part of a1(a2 a3) + (a3~ a2~) a1~>
cd det3_expanded(const H3Element& a);
H3Element sharp(const H3Element& a);
// 1/2 (xy + yx) computed entrywise with octonion products.
H3Element albert_jordan_mul(const H3Element& x, const H3Element& y);

}  // namespace hsm
