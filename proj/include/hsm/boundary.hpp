#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hsm/cones.hpp"
#include "hsm/domains.hpp"

namespace hsm {

struct BoundaryDescriptor {
  DomainDescriptor D;
  int k = 0;
};
// Throws UnsupportedRank unless D is irreducible and 0 <= k < rank(D).
void validate_boundary(const DomainDescriptor& D, int k);

// Tripotent o_F spanning the standard boundary component of rank k.
CVec standard_boundary_point(const DomainDescriptor& D, int k);

// Peirce-0 space of o_F (tau-orthonormal columns). The component is o_F + (D cap this space).
CMat boundary_peirce_zero(const DomainDescriptor& D, int k);

// I, II, III: diag(Z', o-block) for Z' in the carrier of the smaller domain.
// IV (k = 1): o_F + z (e1 - i e2)/2 with Z' = (z).
// V, VI: o_F + B c with B = boundary_peirce_zero and Z' = c; the admissible c form a domain
// isomorphic to boundary_is_domain(D, k), but c is not in that domain's carrier coordinates.
CVec component_point(const DomainDescriptor& D, int k, const CVec& zprime);

// Type of the boundary component; nullopt when it is a point.
std::optional<DomainDescriptor> boundary_is_domain(const DomainDescriptor& D, int k);
std::string boundary_domain_name(const DomainDescriptor& D, int k);

ConeDescriptor boundary_cone(const DomainDescriptor& D, int k);
// G_h . G_l . M factors of the Levi subgroup.
std::string boundary_levi(const DomainDescriptor& D, int k);

// f_F(z) for types I, III.
CVec boundary_f(const DomainDescriptor& D, int k, cd z);
// phi_F(e^{i theta}, [[a,b],[c,d]]) for types I, III.
GroupElement boundary_phi(const DomainDescriptor& D, int k, double theta, const RMat& sl2);
// Action of (e^{i theta}, sl2) on the unit disk through phi_F.
cd disk_action(const RMat& sl2, cd z);
GroupElement boundary_w(const DomainDescriptor& D, int k, double t);
// Omega_F = 1/2 I on U(F).
CMat boundary_omega(const DomainDescriptor& D, int k);

enum class LimitClass { Unipotent, Levi, Normalizer, Outside };
const char* to_string(LimitClass c);
LimitClass limit_classify(const DomainDescriptor& D, int k, const GroupElement& g);

bool levi_member(const DomainDescriptor& D, int k, const GroupElement& g, double tol = 1e-9);
bool unipotent_member(const DomainDescriptor& D, int k, const GroupElement& g, double tol = 1e-9);

// Elements of the unipotent radical. Type I: F1 (p-q+k)x(q-k), F2 kx(q-k), X Hermitian,
// M = X + i(F1*F1 - F2*F2)/2. Type III: F kx(n-k), S real symmetric, M = S - Im(F*F).
GroupElement unipotent_element(const DomainDescriptor& D, int k, const CMat& F1, const CMat& F2, const CMat& X);
// Levi elements from a block in the smaller group (U(p-q+k,k) or Sp^nc(k)) and E.
GroupElement levi_element(const DomainDescriptor& D, int k, const CMat& h, const CMat& E);

}  // namespace hsm
