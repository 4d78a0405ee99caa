#include "hsm/boundary.hpp"

#include <cmath>

namespace hsm {

using Kind = JtsDescriptor::Kind;

namespace {

bool classical_pair(const DomainDescriptor& D) { return D.kind == Kind::I || D.kind == Kind::III; }

void require_pair_type(const DomainDescriptor& D) {
  if (!classical_pair(D)) throw Error("UnsupportedType", "only types I and III carry explicit (f_F, phi_F, w_F)");
}

// Offsets/sizes of the four diagonal blocks used by phi_F, w_F, Levi and radical shapes.
struct Blocks {
  int o[4], s[4];
  int size() const { return o[3] + s[3]; }
};

Blocks blocks(const DomainDescriptor& D, int k) {
  Blocks b;
  if (D.kind == Kind::I) {
    b.s[0] = D.p - D.q + k;
    b.s[1] = D.q - k;
    b.s[2] = k;
    b.s[3] = D.q - k;
  } else {
    b.s[0] = k;
    b.s[1] = D.n - k;
    b.s[2] = k;
    b.s[3] = D.n - k;
  }
  b.o[0] = 0;
  for (int i = 1; i < 4; ++i) b.o[i] = b.o[i - 1] + b.s[i - 1];
  return b;
}

auto blk(CMat& g, const Blocks& b, int i, int j) { return g.block(b.o[i], b.o[j], b.s[i], b.s[j]); }
CMat blk(const CMat& g, const Blocks& b, int i, int j) { return g.block(b.o[i], b.o[j], b.s[i], b.s[j]); }

GroupElement empty_group(const DomainDescriptor& D) {
  GroupElement g = group_identity(D);
  g.g.setZero();
  return g;
}

// Radical element with a given M block (F blocks from F1, F2; type III uses F2 = conj(F1)).
CMat radical_matrix(const DomainDescriptor& D, const Blocks& b, const CMat& F1, const CMat& F2, const CMat& M) {
  CMat g = CMat::Zero(b.size(), b.size());
  const CMat Ib = CMat::Identity(b.s[1], b.s[1]);
  blk(g, b, 0, 0).setIdentity();
  blk(g, b, 2, 2).setIdentity();
  blk(g, b, 1, 1) = Ib + I_ * M;
  blk(g, b, 3, 3) = Ib - I_ * M;
  blk(g, b, 1, 3) = M;
  blk(g, b, 3, 1) = M;
  blk(g, b, 0, 1) = F1;
  blk(g, b, 0, 3) = -I_ * F1;
  blk(g, b, 1, 0) = -F1.adjoint();
  blk(g, b, 3, 0) = I_ * F1.adjoint();
  if (D.kind == Kind::I) {
    blk(g, b, 2, 1) = I_ * F2;
    blk(g, b, 2, 3) = F2;
    blk(g, b, 1, 2) = -I_ * F2.adjoint();
    blk(g, b, 3, 2) = -F2.adjoint();
  } else {
    blk(g, b, 2, 1) = I_ * F1.conjugate();
    blk(g, b, 2, 3) = F1.conjugate();
    blk(g, b, 1, 2) = -I_ * F1.transpose();
    blk(g, b, 3, 2) = -F1.transpose();
  }
  return g;
}

CMat radical_constraint(const DomainDescriptor& D, const CMat& F1, const CMat& F2, const CMat& M) {
  if (D.kind == Kind::I) return F1.adjoint() * F1 - F2.adjoint() * F2 - I_ * (M.adjoint() - M);
  return F1.adjoint() * F1 - F1.transpose() * F1.conjugate() - I_ * (M.transpose() - M);
}

}  // namespace

void validate_boundary(const DomainDescriptor& D, int k) {
  validate_domain(D);
  if (D.kind == Kind::Product || D.kind == Kind::FromJordan)
    throw Error("UnsupportedType", "boundary components are shipped for irreducible domains only");
  if (k < 0 || k >= D.table_rank())
    throw Error("UnsupportedRank", "rank " + std::to_string(k) + " outside [0, " + std::to_string(D.table_rank()) + ")");
}

CVec standard_boundary_point(const DomainDescriptor& D, int k) {
  validate_boundary(D, k);
  switch (D.kind) {
    case Kind::I: {
      CMat Z = CMat::Zero(D.p, D.q);
      Z.bottomRightCorner(D.q - k, D.q - k).setIdentity();
      return jts_from_matrix(D, Z);
    }
    case Kind::II: {
      const int eps = D.n % 2, m = 2 * k + eps;
      CMat Z = CMat::Zero(D.n, D.n);
      for (int i = m; i + 1 < D.n; i += 2) {
        Z(i, i + 1) = 1;
        Z(i + 1, i) = -1;
      }
      return jts_from_matrix(D, Z);
    }
    case Kind::III: {
      CMat Z = CMat::Zero(D.n, D.n);
      Z.bottomRightCorner(D.n - k, D.n - k).setIdentity();
      return jts_from_matrix(D, Z);
    }
    case Kind::IV: {
      CVec z = CVec::Zero(D.n);
      if (k == 0 && D.n >= 3) {
        z(0) = -I_;
      } else if (k == 0) {
        z(0) = 1;
      } else {
        z(0) = 0.5;
        z(1) = 0.5 * I_;
      }
      return z;
    }
    case Kind::V: {
      // (0, 1) is a maximal tripotent here; rank 1 needs a null octonion in the second slot.
      CVec z = CVec::Zero(16);
      if (k == 0) {
        z(8) = 1;
      } else {
        z(8) = 0.5;
        z(9) = 0.5 * I_;
      }
      return z;
    }
    case Kind::VI: {
      CVec z = CVec::Zero(27);
      for (int i = k; i < 3; ++i) z(i) = 1;
      return z;
    }
    default: break;
  }
  throw Error("UnsupportedType", D.name());
}

CMat boundary_peirce_zero(const DomainDescriptor& D, int k) {
  const CVec o = standard_boundary_point(D, k);
  CMat vecs;
  RVec ev = la::selfadjoint_eigs(box(D, o, o), jts_inner_matrix(D), vecs);
  std::vector<int> keep;
  for (int i = 0; i < ev.size(); ++i)
    if (ev(i) < 0.25) keep.push_back(i);
  CMat B(D.dim(), keep.size());
  for (size_t j = 0; j < keep.size(); ++j) B.col(j) = vecs.col(keep[j]);
  return B;
}

std::optional<DomainDescriptor> boundary_is_domain(const DomainDescriptor& D, int k) {
  validate_boundary(D, k);
  switch (D.kind) {
    case Kind::I:
      if (k == 0) return std::nullopt;
      return DomainDescriptor::type_i(D.p - D.q + k, k);
    case Kind::II: {
      const int m = 2 * k + D.n % 2;
      if (m < 2) return std::nullopt;
      return DomainDescriptor::type_ii(m);
    }
    case Kind::III:
      if (k == 0) return std::nullopt;
      return DomainDescriptor::type_iii(k);
    case Kind::IV:
      if (k == 0) return std::nullopt;
      return DomainDescriptor::type_i(1, 1);
    case Kind::V:
      if (k == 0) return std::nullopt;
      return DomainDescriptor::type_i(5, 1);
    case Kind::VI:
      if (k == 0) return std::nullopt;
      if (k == 1) return DomainDescriptor::type_i(1, 1);
      return DomainDescriptor::type_iv(10);
    default: break;
  }
  throw Error("UnsupportedType", D.name());
}

std::string boundary_domain_name(const DomainDescriptor& D, int k) {
  auto d = boundary_is_domain(D, k);
  return d ? d->name() : "point";
}

CVec component_point(const DomainDescriptor& D, int k, const CVec& zprime) {
  const CVec o = standard_boundary_point(D, k);
  auto small = boundary_is_domain(D, k);
  if (!small) {
    if (zprime.size() != 0) throw Error("DescriptorMismatch", "the component is a point");
    return o;
  }
  switch (D.kind) {
    case Kind::I:
    case Kind::II:
    case Kind::III: {
      CMat Zs = jts_to_matrix(*small, zprime);
      CMat Z = jts_to_matrix(D, o);
      Z.topLeftCorner(Zs.rows(), Zs.cols()) = Zs;
      return jts_from_matrix(D, Z);
    }
    case Kind::IV: {
      if (zprime.size() != 1) throw Error("DescriptorMismatch", "expected one coordinate");
      CVec z = o;
      z(0) += 0.5 * zprime(0);
      z(1) -= 0.5 * I_ * zprime(0);
      return z;
    }
    default: {
      CMat B = boundary_peirce_zero(D, k);
      if (zprime.size() != B.cols()) throw Error("DescriptorMismatch", "expected Peirce-0 coordinates");
      return o + B * zprime;
    }
  }
}

ConeDescriptor boundary_cone(const DomainDescriptor& D, int k) {
  validate_boundary(D, k);
  switch (D.kind) {
    case Kind::I: return ConeDescriptor::psd_c(D.q - k);
    case Kind::II: {
      const int m = D.n / 2 - k;
      if (m == 1) return ConeDescriptor::lorentz(0);
      if (m == 2) return ConeDescriptor::lorentz(5);
      return ConeDescriptor::psd_h(m);
    }
    case Kind::III: return ConeDescriptor::psd_r(D.n - k);
    case Kind::IV: return ConeDescriptor::lorentz(k == 1 ? 0 : D.n - 1);
    case Kind::V: return ConeDescriptor::lorentz(k == 1 ? 0 : 7);
    case Kind::VI:
      if (k == 2) return ConeDescriptor::lorentz(0);
      if (k == 1) return ConeDescriptor::lorentz(9);
      return ConeDescriptor::albert();
    default: break;
  }
  throw Error("UnsupportedType", D.name());
}

std::string boundary_levi(const DomainDescriptor& D, int k) {
  validate_boundary(D, k);
  auto s = [](int x) { return std::to_string(x); };
  switch (D.kind) {
    case Kind::I: return "SU(" + s(D.p - D.q + k) + "," + s(k) + ") . GL^o_" + s(D.q - k) + "(C) . S^1";
    case Kind::II: {
      const int n = D.n, eps = n % 2;
      if (k == 0 && eps == 0) return "{1} . GL_" + s(n / 2) + "(H) . {1}";
      if (k == 0) return "{1} . GL_" + s((n - 1) / 2) + "(H) . S^1";
      if (k == 1 && eps == 0) return "SU(1,1) . GL_" + s((n - 2) / 2) + "(H) . SL_1(H)";
      if (2 * k == n - 2 - eps) return "SO^nc(" + s(2 * n - 4) + ") . R^* . SL_1(H)";
      return "SO^nc(" + s(4 * k + 2 * eps) + ") . GL_" + s((n - 2 * k - eps) / 2) + "(H) x {1}";
    }
    case Kind::III: return "Sp^nc(" + s(k) + ") x GL_" + s(D.n - k) + "(R) x {1}";
    case Kind::IV:
      if (k == 1) return "SO(1,1) . GL_1(R) . SO(" + s(D.n - 2) + ")";
      return "{1} . (SO(" + s(D.n - 1) + ",1) x R^*) . {1}";
    case Kind::V:
      if (k == 1) return "SU(5,1) . GL_1(R) . {1}";
      return "{1} . (SO(7,1) x R^*) . S^1";
    case Kind::VI:
      if (k == 2) return "SO(2,10) . GL_1(R) . {1}";
      if (k == 1) return "SU(1,1) . (SO(9,1) x R^*) . {1}";
      return "{1} . (E6(-26) x R^*) . {1}";
    default: break;
  }
  throw Error("UnsupportedType", D.name());
}

CVec boundary_f(const DomainDescriptor& D, int k, cd z) {
  validate_boundary(D, k);
  require_pair_type(D);
  CMat Z = jts_to_matrix(D, standard_boundary_point(D, k));
  return jts_from_matrix(D, CMat(z * Z));
}

namespace {
struct DiskCoeffs {
  cd al, be, ga, de;
};
DiskCoeffs disk_coeffs(const RMat& m) {
  if (m.rows() != 2 || m.cols() != 2) throw Error("ShapeError", "expected a 2x2 matrix");
  if (std::abs(m.determinant() - 1.0) > 1e-9) throw Error("RelationViolation", "matrix is not in SL_2(R)");
  const double a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  return {cd(a + d, b - c) / 2.0, cd(b + c, a - d) / 2.0, cd(b + c, d - a) / 2.0, cd(a + d, c - b) / 2.0};
}
}  // namespace

cd disk_action(const RMat& sl2, cd z) {
  DiskCoeffs k = disk_coeffs(sl2);
  return (k.al * z + k.be) / (k.ga * z + k.de);
}

GroupElement boundary_phi(const DomainDescriptor& D, int k, double theta, const RMat& sl2) {
  validate_boundary(D, k);
  require_pair_type(D);
  const DiskCoeffs c = disk_coeffs(sl2);
  const Blocks b = blocks(D, k);
  GroupElement g = empty_group(D);
  blk(g.g, b, 0, 0) = std::exp(I_ * theta) * CMat::Identity(b.s[0], b.s[0]);
  blk(g.g, b, 2, 2) = std::exp(-I_ * theta) * CMat::Identity(b.s[2], b.s[2]);
  const CMat Ib = CMat::Identity(b.s[1], b.s[1]);
  blk(g.g, b, 1, 1) = c.al * Ib;
  blk(g.g, b, 1, 3) = c.be * Ib;
  blk(g.g, b, 3, 1) = c.ga * Ib;
  blk(g.g, b, 3, 3) = c.de * Ib;
  // det = e^{i theta (p-q)} for type I; a central scalar with the same action restores det 1.
  if (D.kind == Kind::I && D.p != D.q) g.g *= std::exp(-I_ * theta * double(D.p - D.q) / double(D.p + D.q));
  return g;
}

GroupElement boundary_w(const DomainDescriptor& D, int k, double t) {
  if (!(t > 0)) throw Error("NonpositiveParameter", "w_F needs t > 0");
  RMat m(2, 2);
  m << t, 0, 0, 1 / t;
  return boundary_phi(D, k, 0.0, m);
}

CMat boundary_omega(const DomainDescriptor& D, int k) {
  validate_boundary(D, k);
  require_pair_type(D);
  const int m = D.kind == Kind::I ? D.q - k : D.n - k;
  return 0.5 * CMat::Identity(m, m);
}

const char* to_string(LimitClass c) {
  switch (c) {
    case LimitClass::Unipotent: return "unipotent";
    case LimitClass::Levi: return "levi";
    case LimitClass::Normalizer: return "normalizer";
    case LimitClass::Outside: return "outside";
  }
  return "?";
}

namespace {
// w_F(t) = V diag(t^mu) V* with V unitary, t-independent.
void w_eigenbasis(const DomainDescriptor& D, int k, CMat& V, std::vector<int>& mu) {
  const Blocks b = blocks(D, k);
  const int n = b.size();
  V = CMat::Zero(n, n);
  mu.assign(n, 0);
  for (int i = 0; i < b.s[0]; ++i) V(b.o[0] + i, b.o[0] + i) = 1;
  for (int i = 0; i < b.s[2]; ++i) V(b.o[2] + i, b.o[2] + i) = 1;
  const double r = std::sqrt(0.5);
  for (int j = 0; j < b.s[1]; ++j) {
    const int x = b.o[1] + j, y = b.o[3] + j;
    V(x, x) = r;
    V(y, x) = -I_ * r;
    V(x, y) = r;
    V(y, y) = I_ * r;
    mu[x] = 1;
    mu[y] = -1;
  }
}
}  // namespace

LimitClass limit_classify(const DomainDescriptor& D, int k, const GroupElement& g) {
  validate_boundary(D, k);
  require_pair_type(D);
  if (!group_valid(g, 1e-8)) throw Error("RelationViolation", "g is not in the group");
  const CMat& G = g.g;
  const int n = static_cast<int>(G.rows());
  CMat V;
  std::vector<int> mu;
  w_eigenbasis(D, k, V, mu);
  CMat Gp = V.adjoint() * G * V;
  // Roundoff in entries that get scaled by t^-2 would otherwise fake divergence.
  const double floor_ = 1e-12 * (1 + G.norm());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (std::abs(Gp(i, j)) < floor_) Gp(i, j) = 0;
  std::vector<CMat> seq;
  for (int e = 1; e <= 6; ++e) {
    const double t = std::pow(10.0, -e);
    CMat C = Gp;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) C(i, j) *= std::pow(t, mu[i] - mu[j]);
    seq.push_back(V * C * V.adjoint());
  }
  bool constant = true;
  for (const auto& c : seq)
    if ((c - G).norm() > 1e-9 * (1 + G.norm())) constant = false;
  if (constant) return LimitClass::Levi;
  for (const auto& c : seq)
    if (c.norm() > 1e6) return LimitClass::Outside;
  std::vector<double> d;
  for (size_t i = 0; i + 1 < seq.size(); ++i) d.push_back((seq[i + 1] - seq[i]).norm());
  for (size_t i = 0; i + 1 < d.size(); ++i)
    if (!(d[i + 1] <= d[i] / 5 || d[i + 1] < 1e-12)) throw Error("Inconclusive", "conjugates neither converge nor diverge");
  if ((seq.back() - CMat::Identity(n, n)).norm() <= d.back() + 1e-9) return LimitClass::Unipotent;
  return LimitClass::Normalizer;
}

bool levi_member(const DomainDescriptor& D, int k, const GroupElement& g, double tol) {
  validate_boundary(D, k);
  require_pair_type(D);
  const Blocks b = blocks(D, k);
  if (g.g.rows() != b.size() || !group_valid(g, tol)) return false;
  const CMat& G = g.g;
  const double scale = 1 + G.norm();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if ((i % 2) != (j % 2) && la::max_abs(blk(G, b, i, j)) > tol * scale) return false;
  if (b.s[1] == 0) return true;
  const CMat P = blk(G, b, 1, 1), Q = -I_ * blk(G, b, 1, 3);
  if (la::max_abs(CMat(blk(G, b, 3, 3) - P)) > tol * scale) return false;
  if (la::max_abs(CMat(blk(G, b, 3, 1) + I_ * Q)) > tol * scale) return false;
  const CMat E = P + Q, Ei = P - Q;
  const CMat Et = D.kind == Kind::I ? CMat(E.adjoint()) : CMat(E.transpose());
  if (la::max_abs(CMat(Ei * Et - CMat::Identity(b.s[1], b.s[1]))) > tol * scale * scale) return false;
  if (D.kind == Kind::III && la::max_abs(CMat(E.imag().cast<cd>())) > tol * scale) return false;
  return true;
}

bool unipotent_member(const DomainDescriptor& D, int k, const GroupElement& g, double tol) {
  validate_boundary(D, k);
  require_pair_type(D);
  const Blocks b = blocks(D, k);
  if (g.g.rows() != b.size()) return false;
  const CMat& G = g.g;
  const CMat F1 = blk(G, b, 0, 1), F2 = blk(G, b, 2, 3), M = blk(G, b, 1, 3);
  if (D.kind == Kind::III && la::max_abs(CMat(M.imag().cast<cd>())) > tol) return false;
  const double scale = 1 + G.norm();
  if (la::max_abs(CMat(radical_matrix(D, b, F1, F2, M) - G)) > tol * scale) return false;
  if (la::max_abs(radical_constraint(D, F1, F2, M)) > tol * scale * scale) return false;
  return group_valid(g, tol * scale * scale);
}

GroupElement unipotent_element(const DomainDescriptor& D, int k, const CMat& F1, const CMat& F2, const CMat& X) {
  validate_boundary(D, k);
  require_pair_type(D);
  const Blocks b = blocks(D, k);
  if (F1.rows() != b.s[0] || F1.cols() != b.s[1] || X.rows() != b.s[1] || X.cols() != b.s[1])
    throw Error("ShapeError", "radical blocks have wrong shape");
  CMat M;
  if (D.kind == Kind::I) {
    if (F2.rows() != b.s[2] || F2.cols() != b.s[3]) throw Error("ShapeError", "F2 has wrong shape");
    const CMat Xh = 0.5 * (X + X.adjoint());
    M = Xh + 0.5 * I_ * (F1.adjoint() * F1 - F2.adjoint() * F2);
  } else {
    const RMat S = 0.5 * (X.real() + X.real().transpose());
    const CMat H = F1.adjoint() * F1;
    M = (S - RMat(H.imag())).cast<cd>();
  }
  GroupElement g = empty_group(D);
  g.g = radical_matrix(D, b, F1, F2, M);
  return g;
}

GroupElement levi_element(const DomainDescriptor& D, int k, const CMat& h, const CMat& E) {
  validate_boundary(D, k);
  require_pair_type(D);
  const Blocks b = blocks(D, k);
  if (h.rows() != b.s[0] + b.s[2] || h.cols() != h.rows() || E.rows() != b.s[1] || E.cols() != b.s[1])
    throw Error("ShapeError", "Levi blocks have wrong shape");
  GroupElement g = empty_group(D);
  const int a = b.s[0], c = b.s[2];
  blk(g.g, b, 0, 0) = h.topLeftCorner(a, a);
  blk(g.g, b, 0, 2) = h.topRightCorner(a, c);
  blk(g.g, b, 2, 0) = h.bottomLeftCorner(c, a);
  blk(g.g, b, 2, 2) = h.bottomRightCorner(c, c);
  if (b.s[1] > 0) {
    Eigen::FullPivLU<CMat> lu(D.kind == Kind::I ? CMat(E.adjoint()) : CMat(E.transpose()));
    if (!lu.isInvertible()) throw Error("Singular", "E is not invertible");
    const CMat Ei = lu.inverse();
    const CMat P = 0.5 * (E + Ei), Q = 0.5 * (E - Ei);
    blk(g.g, b, 1, 1) = P;
    blk(g.g, b, 3, 3) = P;
    blk(g.g, b, 1, 3) = I_ * Q;
    blk(g.g, b, 3, 1) = -I_ * Q;
  }
  return g;
}

}  // namespace hsm
