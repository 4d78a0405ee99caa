#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hsm/jordan.hpp"

namespace hsm {

// Complex coordinates:
//   I(p,q): p x q matrix, row-major
//   II(n): entries (i<j) of a skew n x n matrix, row-major
//   III(n): entries (i<=j) of a symmetric n x n matrix, row-major
//   IV(n): C^n
//   V: (x1, x2) in O_C^2, 8 coordinates each
//   VI: H3Element::flatten()
//   FromJordan(A): complex coordinates of A_C
//   Product: concatenation
struct JtsDescriptor {
  enum class Kind { I, II, III, IV, V, VI, FromJordan, Product };
  Kind kind = Kind::I;
  int p = 1, q = 1, n = 1;
  std::vector<JordanAlgebra> alg;  // one entry for FromJordan
  std::vector<JtsDescriptor> parts;

  static JtsDescriptor type_i(int p, int q) { return {Kind::I, p, q, 0, {}, {}}; }
  static JtsDescriptor type_ii(int n) { return {Kind::II, 0, 0, n, {}, {}}; }
  static JtsDescriptor type_iii(int n) { return {Kind::III, 0, 0, n, {}, {}}; }
  static JtsDescriptor type_iv(int n) { return {Kind::IV, 0, 0, n, {}, {}}; }
  static JtsDescriptor type_v() { return {Kind::V, 0, 0, 0, {}, {}}; }
  static JtsDescriptor type_vi() { return {Kind::VI, 0, 0, 0, {}, {}}; }
  static JtsDescriptor from_jordan(const JordanAlgebra& A) { return {Kind::FromJordan, 0, 0, 0, {A}, {}}; }
  static JtsDescriptor product(std::vector<JtsDescriptor> parts) { return {Kind::Product, 0, 0, 0, {}, std::move(parts)}; }
  // "I:3:2", "II:4", "III:3", "IV:5", "V", "VI", "jordan(herm-r:2)", "prod(I:1:1,IV:3)"
  static JtsDescriptor parse(const std::string& s);

  int dim() const;
  // Rank column of the classification tables.
  int table_rank() const;
  std::string name() const;
};

// Corrected is the default; Printed reproduces the displayed IV, V, VI formulas verbatim.
enum class Convention { Corrected, Printed };

CVec triple(const JtsDescriptor& J, const CVec& x, const CVec& y, const CVec& z,
            Convention c = Convention::Corrected);
CMat box(const JtsDescriptor& J, const CVec& a, const CVec& b, Convention c = Convention::Corrected);

// T_jk = tau(e_j, e_k) = tr(e_j box e_k) (cached); tau(x,y) = x^T T conj(y).
const CMat& jts_trace_gram(const JtsDescriptor& J);
cd jts_trace_form(const JtsDescriptor& J, const CVec& x, const CVec& y);
// Hermitian positive matrix P with tau(x,y) = y^H P x.
CMat jts_inner_matrix(const JtsDescriptor& J);
// Adjoint of an operator with respect to tau.
CMat jts_adjoint(const JtsDescriptor& J, const CMat& A);
// Sorted spectrum of the tau-self-adjoint operator a box a.
RVec box_spectrum(const JtsDescriptor& J, const CVec& a);

bool is_tripotent(const JtsDescriptor& J, const CVec& e, double tol = 1e-9);
bool orthogonal_tripotents(const JtsDescriptor& J, const CVec& e, const CVec& f, double tol = 1e-9);

std::vector<CVec> jordan_frame(const JtsDescriptor& J, std::uint64_t seed = 42);
// Frame built from standard elements (matrix units, ½(e1±ie2), diagonal units, ...).
std::vector<CVec> standard_frame(const JtsDescriptor& J);
int rank(const JtsDescriptor& J, std::uint64_t seed = 42);
CVec principal_tripotent(const JtsDescriptor& J);

// Matrix views for I, II, III.
CMat jts_to_matrix(const JtsDescriptor& J, const CVec& x);
// Throws ShapeError if M violates the carrier invariant.
CVec jts_from_matrix(const JtsDescriptor& J, const CMat& M, double tol = 1e-12);
CVec jts_conj(const CVec& x);
CVec basis_vector(int d, int k);
void check_element(const JtsDescriptor& J, const CVec& x);

}  // namespace hsm
