#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hsm/cones.hpp"
#include "hsm/jts.hpp"

namespace hsm {

// Real Jordan algebra given by structure constants: b_i o b_j = L[i].col(j).
struct RealJordan {
  int dim = 0;
  std::vector<RMat> L;
  RVec unit;
  std::optional<JordanAlgebra> desc;

  static RealJordan from_descriptor(const JordanAlgebra& A);
  RVec mul(const RVec& x, const RVec& y) const;
  CVec mul(const CVec& x, const CVec& y) const;
  RMat mult_operator(const RVec& x) const;
  const RMat& gram() const;  // trace form tr T_{x o y}
  double tau(const RVec& x, const RVec& y) const { return x.dot(gram() * y); }
  // C-bilinear extension.
  cd tau(const CVec& x, const CVec& y) const { return (x.transpose() * gram().cast<cd>() * y)(0, 0); }
  double cone_margin(const RVec& x) const;
  CVec inverse(const CVec& x) const;

 private:
  mutable std::optional<RMat> gram_;
};

// H(v,w) = sum_ab conj(v_a) w_b H[a*k + b], H[.] in U_C coordinates.
struct SiegelData {
  RealJordan U;
  int k = 0;
  std::vector<CVec> H;
  std::string label;

  CVec h_map(const CVec& v, const CVec& w) const;
  // h(v,w) = <e, H(v,w)> as a k x k matrix.
  CMat h_matrix() const;
};

// Hermitian symmetry, h > 0 and Omega-positivity of H(v,v) on sampled v.
void validate_siegel(const SiegelData& S, int samples = 50, std::uint64_t seed = 42);

TriState tube_member(const JordanAlgebra& A, const CVec& u, double tol = kDefaultTol);
TriState tube_member(const RealJordan& U, const CVec& u, double tol = kDefaultTol);
TriState siegel_member(const SiegelData& S, const CVec& u, const CVec& v, double tol = kDefaultTol);

// <u, H(v,v')> = 2 h(v, R_u v').
CMat r_operator(const SiegelData& S, const CVec& u);

struct SymmetryReport {
  bool cone_symmetric = true, criterion_ii = true, criterion_iii = true;
  double residual_ii = 0, residual_iii = 0;
  std::string witness;  // basis data violating the first failing criterion
};
SymmetryReport symmetry_criteria(const SiegelData& S, double tol = 1e-9);

CVec cayley(const JordanAlgebra& A, const CVec& w);
CVec cayley_inverse(const JordanAlgebra& A, const CVec& u);

// Triple product on U_C + V (coordinates: U part, then V part).
struct SiegelJts {
  SiegelData S;
  int dim() const { return S.U.dim + S.k; }
  CVec triple(const CVec& x, const CVec& y, const CVec& z) const;
  CMat box(const CVec& a, const CVec& b) const;
  CVec distinguished() const;  // (e, 0)
};
SiegelJts jts_from_siegel(const SiegelData& S, double tol = 1e-9);

struct SiegelFromJts {
  SiegelData S;
  CMat Ubasis;  // real basis of W_1^+ inside W
  CMat Vbasis;  // basis of W_1/2
};
SiegelFromJts siegel_from_jts(const JtsDescriptor& J, const CVec& e);
// Max deviation between the JTS triple and the Siegel triple on the basis [Ubasis, Vbasis].
double siegel_roundtrip_error(const JtsDescriptor& J, const SiegelFromJts& R);

// "I:n:r:s", "III:n:r", "II:n:r", "VI0", "half-space", "tube(<alg>)"; IV rows are not constructible.
SiegelData build_catalog(const std::string& tag);
SiegelData tube_data(const JordanAlgebra& A);
SiegelData half_space();

}  // namespace hsm
