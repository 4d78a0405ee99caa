#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hsm/jordan.hpp"

namespace hsm {

inline constexpr double kConeBoundaryBand = 1e-7;

struct ConeDescriptor {
  enum class Kind { Lorentz, PsdR, PsdC, PsdH, Albert, Product };
  Kind kind = Kind::PsdR;
  int n = 1;
  std::vector<ConeDescriptor> parts;

  // Lorentz(n) = P(1,n) lives in R + R^n; Lorentz(0) is the half-line.
  static ConeDescriptor lorentz(int n) { return {Kind::Lorentz, n, {}}; }
  static ConeDescriptor psd_r(int n) { return {Kind::PsdR, n, {}}; }
  static ConeDescriptor psd_c(int n) { return {Kind::PsdC, n, {}}; }
  static ConeDescriptor psd_h(int n) { return {Kind::PsdH, n, {}}; }
  static ConeDescriptor albert() { return {Kind::Albert, 3, {}}; }
  static ConeDescriptor product(std::vector<ConeDescriptor> parts) { return {Kind::Product, 0, std::move(parts)}; }
  // "lorentz:3", "psd-r:3", "psd-c:2", "psd-h:2", "albert", "prod(psd-r:2,lorentz:3)"
  static ConeDescriptor parse(const std::string& s);

  int dim() const;
  int rank() const;
  std::string name() const;
  bool operator==(const ConeDescriptor& o) const { return name() == o.name(); }
};

ConeDescriptor cone_from_jordan(const JordanAlgebra& A);
JordanAlgebra jordan_from_cone(const ConeDescriptor& C);

// Smallest eigenvalue of T_x (x0 - |x⃗| for the Lorentz cone, computed directly).
double cone_margin(const ConeDescriptor& C, const RVec& x);
bool cone_member(const ConeDescriptor& C, const RVec& x, double tol = kDefaultTol);
// Boundary when |margin| <= band.
TriState cone_classify(const ConeDescriptor& C, const RVec& x, double band = kConeBoundaryBand);

struct DualWitness {
  bool member = true;
  std::optional<RVec> witness;  // x in C with <x,y> <= 0
  double min_pairing = 0;       // min over samples of <x,y>/|x|
};
// Samples x in C (powers of squares of Gaussian elements) and looks for <x,y> <= 0, <,> = tau.
DualWitness dual_member_witness(const ConeDescriptor& C, const RVec& y, int samples, std::uint64_t seed);

// Random interior point z^2 + eps e.
RVec sample_cone_interior(const ConeDescriptor& C, Rng& rng);

struct ConeBoundaryComponent {
  ConeDescriptor cone;  // Omega(e), the cone of the Peirce-1 subalgebra
  RMat basis;           // tau-orthonormal basis of V(e,1)
  // Coordinates of jordan_from_cone(cone) -> V, a Jordan embedding onto V(e,1)
  // (constructed for PsdR/PsdC, e = unit and rank-one e).
  std::optional<RMat> embedding;
  int idempotent_rank = 0;
};
ConeBoundaryComponent cone_boundary_component(const ConeDescriptor& C, const RVec& e, double tol = kIdempotentTol);
// x in V(e,1) and T_x restricted to V(e,1) positive.
bool boundary_component_member(const ConeDescriptor& C, const RVec& e, const RVec& x, double tol = kDefaultTol);

// Rank of an idempotent: its Jordan trace.
int idempotent_rank(const JordanAlgebra& A, const RVec& e);

}  // namespace hsm
