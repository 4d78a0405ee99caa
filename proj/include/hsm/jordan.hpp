#pragma once

#include <string>
#include <vector>

#include "hsm/albert.hpp"
#include "hsm/common.hpp"

namespace hsm {

inline constexpr double kIdempotentTol = 1e-8;
inline constexpr double kDefaultTol = 1e-9;

// Coordinates (real):
//   SpinFactor(n): (x0, x1..xn)
//   HermR(n): diagonal, then M_ij for i<j (row-major)
//   HermC(n): diagonal, then (Re M_ij, Im M_ij) for i<j
//   HermH(n): diagonal, then the 4 quaternion components of M_ij for i<j
//   Albert: alpha_1..3, then a_1, a_2, a_3 (8 each)
//   DirectSum: concatenation
struct JordanAlgebra {
  enum class Kind { SpinFactor, HermR, HermC, HermH, Albert, DirectSum };
  Kind kind = Kind::HermR;
  int n = 1;
  std::vector<JordanAlgebra> parts;

  static JordanAlgebra spin(int n) { return {Kind::SpinFactor, n, {}}; }
  static JordanAlgebra herm_r(int n) { return {Kind::HermR, n, {}}; }
  static JordanAlgebra herm_c(int n) { return {Kind::HermC, n, {}}; }
  static JordanAlgebra herm_h(int n) { return {Kind::HermH, n, {}}; }
  static JordanAlgebra albert() { return {Kind::Albert, 3, {}}; }
  static JordanAlgebra sum(std::vector<JordanAlgebra> parts) { return {Kind::DirectSum, 0, std::move(parts)}; }
  // "spin:3", "herm-r:2", "herm-c:2", "herm-h:2", "albert", "sum(herm-r:2,spin:3)"
  static JordanAlgebra parse(const std::string& s);

  int dim() const;
  int rank() const;
  std::string name() const;
  bool operator==(const JordanAlgebra& o) const { return name() == o.name(); }
};

RVec jordan_mul(const JordanAlgebra& A, const RVec& x, const RVec& y);
// C-bilinear extension to the complexification A_C.
CVec jordan_mul(const JordanAlgebra& A, const CVec& x, const CVec& y);
RVec jordan_unit(const JordanAlgebra& A);
RVec jordan_power(const JordanAlgebra& A, const RVec& x, int p);

// T_x as a real dim x dim matrix on the coordinate basis.
RMat mult_operator(const JordanAlgebra& A, const RVec& x);
CMat mult_operator(const JordanAlgebra& A, const CVec& x);
// P(x) = 2 T_x^2 - T_{x^2}
CMat quadratic_operator(const JordanAlgebra& A, const CVec& x);

// Gram matrix of tau(x,y) = tr T_{x o y} on the coordinate basis (cached).
const RMat& trace_gram(const JordanAlgebra& A);
double trace_form(const JordanAlgebra& A, const RVec& x, const RVec& y);

// Sorted eigenvalues of T_x (tau-symmetric).
RVec mult_spectrum(const JordanAlgebra& A, const RVec& x);
double cone_margin(const JordanAlgebra& A, const RVec& x);
bool cone_member(const JordanAlgebra& A, const RVec& x, double tol = kDefaultTol);

RVec jordan_inverse(const JordanAlgebra& A, const RVec& x);
CVec jordan_inverse(const JordanAlgebra& A, const CVec& x);

struct PeirceDecomposition {
  RMat one, half, zero;  // bases as columns, tau-orthonormal
  RVec eigenvalues;
};
PeirceDecomposition peirce_decompose(const JordanAlgebra& A, const RVec& e, double tol = kIdempotentTol);

// Matrix views of the Hermitian variants (HermH as its 2n x 2n complex embedding).
CMat to_matrix(const JordanAlgebra& A, const RVec& x);
CMat to_matrix(const JordanAlgebra& A, const CVec& x);
CVec from_matrix(const JordanAlgebra& A, const CMat& M);
H3Element to_h3(const RVec& x);
RVec from_h3_real(const H3Element& h);

// Herm_2(F) <-> spin factor, F in {R, C, H, O} (dims 1, 2, 4, 8).
struct Herm2Element {
  double a = 0, b = 0;
  RVec z;  // the off-diagonal entry, coordinates of F (F embedded in O as the first coordinates)
};
int division_dim(char F);
RVec herm2_to_spin(char F, const Herm2Element& x);
Herm2Element spin_to_herm2(char F, const RVec& s);
// Native product in Herm_2(F) via entrywise F-arithmetic.
Herm2Element herm2_mul(char F, const Herm2Element& x, const Herm2Element& y);

void check_element(const JordanAlgebra& A, const RVec& x);

}  // namespace hsm
