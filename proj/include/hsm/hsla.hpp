#pragma once

#include <string>
#include <vector>

#include "hsm/domains.hpp"

namespace hsm {

// Matrix models (n x n blocks):
//   su(p,q)   X* K + K X = 0, tr X = 0, K = diag(-I_p, I_q)
//   so_nc(2n) X^t S + S X = 0, X* K + K X = 0, S = (0 I; I 0), K = diag(-I_n, I_n)
//   sp_nc(n)  X^t J + J X = 0, X* K + K X = 0, J = (0 I; -I 0)
//   so_nc(n,2) X^t + X = 0, X* D + D X = 0, D = diag(I_n, -I_2)
// Compact duals keep the C-linear relations and replace the Hermitian one by X* = -X.
struct SlaDescriptor {
  enum class Family { SU, SOStar, SpNC, SONC };
  Family family = Family::SU;
  bool compact = false;
  int p = 1, q = 1;  // SU: (p,q); SOStar, SpNC: n in p; SONC: n in p

  // "su:2:1", "so-nc:4" (so_nc(2n), 2n = 4), "sp-nc:2", "so-nc:3:2";
  // compact: "su-c:2:1", "so-c:4", "sp-c:2", "so-c:3:2".
  static SlaDescriptor parse(const std::string& s);
  std::string name() const;
  int size() const;  // matrix size
  int dim() const;   // real dimension, from the basis
};

SlaDescriptor sla_for_domain(const DomainDescriptor& D);
DomainDescriptor domain_for_sla(const SlaDescriptor& L);

double sla_residual(const SlaDescriptor& L, const CMat& X);
bool sla_member(const SlaDescriptor& L, const CMat& X, double tol = 1e-10);
// Real basis of L (cached).
const std::vector<CMat>& sla_basis(const SlaDescriptor& L);
const std::vector<CMat>& k_basis(const SlaDescriptor& L);
const std::vector<CMat>& p_basis(const SlaDescriptor& L);
// Real coordinates of X in sla_basis.
RVec sla_coords(const SlaDescriptor& L, const CMat& X);

CMat bracket(const CMat& X, const CMat& Y);
CMat theta(const SlaDescriptor& L, const CMat& X);
CMat central_H(const SlaDescriptor& L);

struct CartanSplit {
  CMat k, p;
};
CartanSplit cartan_split(const SlaDescriptor& L, const CMat& X);

// Matrix of ad X on sla_basis.
RMat ad_matrix(const SlaDescriptor& L, const CMat& X);
double killing_form(const SlaDescriptor& L, const CMat& X, const CMat& Y);
RMat killing_gram(const SlaDescriptor& L, const std::vector<CMat>& basis);

// k + p -> k + i p (non-compact -> compact) and k + p -> k - i p (compact -> non-compact).
SlaDescriptor dual_sla(const SlaDescriptor& L);
CMat dual_map(const SlaDescriptor& L, const CMat& X);

double ad_H_squared_residual(const SlaDescriptor& L, const CMat& H);
bool ad_H_squared_check(const SlaDescriptor& L, double tol = 1e-10);

struct PPlusSplit {
  CMat plus, minus;
};
PPlusSplit pplus_project(const SlaDescriptor& L, const CMat& X);
// Carrier coordinates of the matching JTS <-> p_+ (non-compact variants).
CMat pplus_embed(const SlaDescriptor& L, const CVec& z);
CVec pplus_extract(const SlaDescriptor& L, const CMat& X);
// Conjugation with respect to the real form: sigma(M) = -K M* K.
CMat real_conjugate(const SlaDescriptor& L, const CMat& M);
// 1/2 [[x, sigma(y)], z] transported back to carrier coordinates.
CVec bracket_triple(const SlaDescriptor& L, const CVec& x, const CVec& y, const CVec& z);

// h -> C h C^{-1}, C = (I iI; iI I): SO_nc(2n) -> SO*(2n), Sp_nc(n) -> Sp(n,R)
// (group or Lie algebra elements).
enum class RealFormVariant { II, III };
CMat real_form_conjugation(RealFormVariant v, const CMat& h, bool lie_algebra, double tol = 1e-9);
double real_form_target_residual(RealFormVariant v, const CMat& h, bool lie_algebra);
CMat real_form_inverse(RealFormVariant v, const CMat& h);

CMat sample_sla(const SlaDescriptor& L, Rng& rng, double scale = 1.0);
// exp of a sampled Lie algebra element, tagged for the matching domain.
GroupElement sample_group_element(const DomainDescriptor& D, Rng& rng, double scale = 0.5);

}  // namespace hsm
