#pragma once

#include <string>
#include <vector>

#include "hsm/jts.hpp"

namespace hsm {

// Domains share descriptors and carrier coordinates with the JTS module:
// I(p,q) p>=q>=1, II(n>=2), III(n>=1), IV(n>=1, n!=2), V, VI and products of these.
using DomainDescriptor = JtsDescriptor;
void validate_domain(const DomainDescriptor& D);
DomainDescriptor parse_domain(const std::string& s);

// Reading of the D_V inequality. Corrected: sum |q(x_i)|^2 and <x1 x2, conj(x1 x2)>.
// Literal: Re(q(x1)^2 + q(x2)^2) with the x2 x3 term dropped (x3 := 0).
enum class VReading { Corrected, Literal };

// Smallest margin of the defining inequalities (positive inside).
double domain_margin(const DomainDescriptor& D, const CVec& z, VReading reading = VReading::Corrected);
TriState contains(const DomainDescriptor& D, const CVec& z, double tol = kDefaultTol,
                  VReading reading = VReading::Corrected);
// 1 - lambda_max(z box z).
double box_margin(const DomainDescriptor& D, const CVec& z);
TriState contains_via_box(const DomainDescriptor& D, const CVec& z, double tol = kDefaultTol);

struct GroupElement {
  enum class Kind { SU, SOStar, SpNC, SONC };
  Kind kind = Kind::SU;
  int p = 1, q = 1;  // SU(p,q); n for the others stored in p
  CMat g;
  std::string tag() const;
};
// The group acting on a classical domain (identity matrix of the right size).
GroupElement group_identity(const DomainDescriptor& D);
// Largest residual of the defining relations.
double group_residual(const GroupElement& g);
bool group_valid(const GroupElement& g, double tol = 1e-9);
GroupElement group_mul(const GroupElement& a, const GroupElement& b);

CVec mobius_act(const DomainDescriptor& D, const GroupElement& g, const CVec& z);
GroupElement symmetry_at_zero(const DomainDescriptor& D);
// z -> -z, available for every type.
CVec negate_point(const CVec& z);

struct CompactDualPoint {
  JtsDescriptor::Kind kind = JtsDescriptor::Kind::I;
  CMat span;           // I, II, III: columns span the point
  CVec vec;            // IV: projective vector in C^{n+2}; V: flattened H3 class
  cd lambda = 0, mu = 0;
  CVec x, y;           // VI: flattened H3 elements of [lambda, x, y, mu]
};
CompactDualPoint borel_embed(const DomainDescriptor& D, const CVec& z);
bool borel_incidence(const DomainDescriptor& D, const CompactDualPoint& P, double tol = 1e-9);
double borel_incidence_residual(const DomainDescriptor& D, const CompactDualPoint& P);
// Affine chart back to carrier coordinates.
CVec borel_chart(const DomainDescriptor& D, const CompactDualPoint& P);

CVec polydisk_embed(const DomainDescriptor& D, const std::vector<cd>& zs);

// 2 x n real matrix with M M^T < I_2 for z in D_IV(n).
RMat type4_real_form(const CVec& z);

struct HermitianForms {
  CMat h;        // m x m Hermitian matrix on a g-orthonormal complex basis
  RMat basis;    // columns e_1..e_m (real 2m vectors)
  RMat omega;    // omega(X,Y) = g(JX,Y) as a real 2m x 2m matrix
  CMat h_real;   // h(X,Y) = g(X,Y) - i omega(X,Y) as a real-bilinear complex matrix
};
HermitianForms hermitian_forms_convert(const RMat& J, const RMat& g, double tol = 1e-9);

}  // namespace hsm
