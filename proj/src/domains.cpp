#include "hsm/domains.hpp"

#include <cmath>

#include "hsm/albert.hpp"

namespace hsm {

using Kind = JtsDescriptor::Kind;

void validate_domain(const DomainDescriptor& D) {
  switch (D.kind) {
    case Kind::I:
      if (D.q < 1 || D.p < D.q) throw Error("InvalidDescriptor", "type I needs p >= q >= 1");
      return;
    case Kind::II:
      if (D.n < 2) throw Error("InvalidDescriptor", "type II needs n >= 2");
      return;
    case Kind::III:
      if (D.n < 1) throw Error("InvalidDescriptor", "type III needs n >= 1");
      return;
    case Kind::IV:
      if (D.n < 1 || D.n == 2) throw Error("InvalidDescriptor", "type IV needs n >= 1, n != 2");
      return;
    case Kind::V:
    case Kind::VI: return;
    case Kind::Product:
      for (const auto& p : D.parts) validate_domain(p);
      return;
    case Kind::FromJordan: throw Error("InvalidDescriptor", "not a domain type: " + D.name());
  }
}

DomainDescriptor parse_domain(const std::string& s) {
  DomainDescriptor D = JtsDescriptor::parse(s);
  validate_domain(D);
  return D;
}

namespace {

using CO = ComplexOctonion;

double matrix_margin(const DomainDescriptor& D, const CVec& z) {
  Eigen::JacobiSVD<CMat> svd(jts_to_matrix(D, z));
  const double s = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  return 1.0 - s * s;
}

double type4_margin(const CVec& z) {
  const double s = z.squaredNorm();
  const double q = std::norm(cd((z.transpose() * z)(0, 0)));
  return std::min(1.0 + q - 2.0 * s, 1.0 - s);
}

double type5_margin(const CVec& z, VReading reading) {
  CO x1 = CO::from_vec(z, 0), x2 = CO::from_vec(z, 8);
  const double s = (coct_pairing(x1, x1.bar()) + coct_pairing(x2, x2.bar())).real();
  const cd q1 = x1.norm2(), q2 = x2.norm2();
  double first;
  if (reading == VReading::Literal) {
    first = 1.0 - s + (q1 * q1 + q2 * q2).real();
  } else {
    CO p = x1 * x2;
    first = 1.0 - s + std::norm(q1) + std::norm(q2) + coct_pairing(p, p.bar()).real();
  }
  return std::min(first, 2.0 - s);
}

double type6_margin(const CVec& z) {
  H3Element a = H3Element::unflatten(z);
  const double s = h3_form(a, a).real();
  H3Element sh = sharp(a);
  const double t = h3_form(sh, sh).real();
  const double d = std::norm(det3(a));
  return std::min({1.0 - s + t - d, 3.0 - 2.0 * s + t, 3.0 - s});
}

}  // namespace

double domain_margin(const DomainDescriptor& D, const CVec& z, VReading reading) {
  validate_domain(D);
  check_element(D, z);
  switch (D.kind) {
    case Kind::I:
    case Kind::II:
    case Kind::III: return matrix_margin(D, z);
    case Kind::IV: return type4_margin(z);
    case Kind::V: return type5_margin(z, reading);
    case Kind::VI: return type6_margin(z);
    case Kind::Product: {
      double m = INFINITY;
      int off = 0;
      for (const auto& p : D.parts) {
        m = std::min(m, domain_margin(p, z.segment(off, p.dim()), reading));
        off += p.dim();
      }
      return m;
    }
    default: break;
  }
  throw Error("InvalidDescriptor", D.name());
}

TriState contains(const DomainDescriptor& D, const CVec& z, double tol, VReading reading) {
  return classify_margin(domain_margin(D, z, reading), tol);
}

double box_margin(const DomainDescriptor& D, const CVec& z) {
  validate_domain(D);
  check_element(D, z);
  RVec ev = box_spectrum(D, z);
  return 1.0 - ev(ev.size() - 1);
}

TriState contains_via_box(const DomainDescriptor& D, const CVec& z, double tol) {
  return classify_margin(box_margin(D, z), tol);
}

// ---- groups ----

namespace {

CMat blockdiag(cd a, int na, cd b, int nb) {
  CMat M = CMat::Zero(na + nb, na + nb);
  M.topLeftCorner(na, na).diagonal().setConstant(a);
  M.bottomRightCorner(nb, nb).diagonal().setConstant(b);
  return M;
}

CMat offdiag_unit(int n, cd lower) {
  CMat M = CMat::Zero(2 * n, 2 * n);
  M.topRightCorner(n, n).setIdentity();
  M.bottomLeftCorner(n, n) = lower * CMat::Identity(n, n);
  return M;
}

}  // namespace

std::string GroupElement::tag() const {
  switch (kind) {
    case Kind::SU: return "SU(" + std::to_string(p) + "," + std::to_string(q) + ")";
    case Kind::SOStar: return "SO*(" + std::to_string(2 * p) + ")";
    case Kind::SpNC: return "Sp(" + std::to_string(p) + ",R)";
    case Kind::SONC: return "SO(" + std::to_string(p) + ",2)";
  }
  return "?";
}

GroupElement group_identity(const DomainDescriptor& D) {
  validate_domain(D);
  GroupElement g;
  switch (D.kind) {
    case Kind::I:
      g.kind = GroupElement::Kind::SU;
      g.p = D.p;
      g.q = D.q;
      g.g = CMat::Identity(D.p + D.q, D.p + D.q);
      return g;
    case Kind::II:
      g.kind = GroupElement::Kind::SOStar;
      g.p = D.n;
      g.g = CMat::Identity(2 * D.n, 2 * D.n);
      return g;
    case Kind::III:
      g.kind = GroupElement::Kind::SpNC;
      g.p = D.n;
      g.g = CMat::Identity(2 * D.n, 2 * D.n);
      return g;
    case Kind::IV:
      g.kind = GroupElement::Kind::SONC;
      g.p = D.n;
      g.g = CMat::Identity(D.n + 2, D.n + 2);
      return g;
    default: throw Error("Unsupported", "no matrix group model for " + D.name());
  }
}

double group_residual(const GroupElement& ge) {
  const CMat& g = ge.g;
  double r = 0;
  switch (ge.kind) {
    case GroupElement::Kind::SU: {
      if (g.rows() != ge.p + ge.q || g.cols() != g.rows()) return INFINITY;
      CMat K = blockdiag(-1.0, ge.p, 1.0, ge.q);
      r = la::max_abs(CMat(g.adjoint() * K * g - K));
      break;
    }
    case GroupElement::Kind::SOStar:
    case GroupElement::Kind::SpNC: {
      if (g.rows() != 2 * ge.p || g.cols() != g.rows()) return INFINITY;
      CMat K = blockdiag(-1.0, ge.p, 1.0, ge.p);
      CMat S = offdiag_unit(ge.p, ge.kind == GroupElement::Kind::SOStar ? 1.0 : -1.0);
      r = std::max(la::max_abs(CMat(g.adjoint() * K * g - K)), la::max_abs(CMat(g.transpose() * S * g - S)));
      break;
    }
    case GroupElement::Kind::SONC: {
      if (g.rows() != ge.p + 2 || g.cols() != g.rows()) return INFINITY;
      CMat Dm = blockdiag(1.0, ge.p, -1.0, 2);
      r = std::max(la::max_abs(CMat(g.adjoint() * Dm * g - Dm)),
                   la::max_abs(CMat(g.transpose() * g - CMat::Identity(g.rows(), g.cols()))));
      break;
    }
  }
  return std::max(r, std::abs(g.determinant() - 1.0));
}

bool group_valid(const GroupElement& g, double tol) { return group_residual(g) <= tol; }

GroupElement group_mul(const GroupElement& a, const GroupElement& b) {
  if (a.kind != b.kind || a.p != b.p || a.q != b.q) throw Error("DescriptorMismatch", "group tags differ");
  GroupElement c = a;
  c.g = a.g * b.g;
  return c;
}

CVec mobius_act(const DomainDescriptor& D, const GroupElement& ge, const CVec& z) {
  validate_domain(D);
  check_element(D, z);
  const CMat& g = ge.g;
  switch (D.kind) {
    case Kind::I:
    case Kind::II:
    case Kind::III: {
      CMat Z = jts_to_matrix(D, z);
      const int r = static_cast<int>(Z.rows()), c = static_cast<int>(Z.cols());
      if (g.rows() != r + c) throw Error("DescriptorMismatch", "group element has wrong size");
      CMat num = g.topLeftCorner(r, r) * Z + g.topRightCorner(r, c);
      CMat den = g.bottomLeftCorner(c, r) * Z + g.bottomRightCorner(c, c);
      Eigen::FullPivLU<CMat> lu(den);
      lu.setThreshold(1e-12);
      if (!lu.isInvertible()) throw Error("Singular", "CZ + D is not invertible");
      CMat W = num * lu.inverse();
      return jts_from_matrix(D, W, 1e-8);
    }
    case Kind::IV: {
      const int n = D.n;
      if (g.rows() != n + 2) throw Error("DescriptorMismatch", "group element has wrong size");
      const cd s = (z.transpose() * z)(0, 0);
      CVec v(2);
      v << 1.0 + s, I_ - I_ * s;
      CVec num = 2.0 * I_ * g.topLeftCorner(n, n) * z + g.topRightCorner(n, 2) * v;
      CVec den = 2.0 * I_ * g.bottomLeftCorner(2, n) * z + g.bottomRightCorner(2, 2) * v;
      const cd d = I_ * (den(0) - I_ * den(1));
      if (std::abs(d) < 1e-12 * std::max(1.0, num.norm())) throw Error("Singular", "denominator vanishes");
      return num / d;
    }
    default: throw Error("Unsupported", "no matrix group action for " + D.name());
  }
}

GroupElement symmetry_at_zero(const DomainDescriptor& D) {
  GroupElement g = group_identity(D);
  switch (D.kind) {
    case Kind::I: {
      // det = (-1)^p; rescale by a central scalar when p is odd (same action).
      cd w = 1.0;
      if (D.p % 2) w = std::exp(I_ * (M_PI * D.p / (D.p + D.q)));
      g.g = w * blockdiag(-1.0, D.p, 1.0, D.q);
      return g;
    }
    case Kind::II:
    case Kind::III: g.g = blockdiag(I_, D.n, -I_, D.n); return g;
    case Kind::IV: g.g = blockdiag(1.0, D.n, -1.0, 2).cast<cd>(); return g;
    default: break;
  }
  throw Error("Unsupported", "no matrix group model for " + D.name());
}

CVec negate_point(const CVec& z) { return -z; }

// ---- Borel embedding ----

CompactDualPoint borel_embed(const DomainDescriptor& D, const CVec& z) {
  validate_domain(D);
  check_element(D, z);
  CompactDualPoint P;
  P.kind = D.kind;
  switch (D.kind) {
    case Kind::I:
    case Kind::II:
    case Kind::III: {
      CMat Z = jts_to_matrix(D, z);
      const int c = static_cast<int>(Z.cols());
      P.span = CMat(Z.rows() + c, c);
      P.span << Z, CMat::Identity(c, c);
      return P;
    }
    case Kind::IV: {
      const int n = D.n;
      const cd s = (z.transpose() * z)(0, 0);
      P.vec = CVec(n + 2);
      P.vec << 2.0 * I_ * z, 1.0 + s, I_ - I_ * s;
      return P;
    }
    case Kind::V: {
      CO x1 = CO::from_vec(z, 0), x2 = CO::from_vec(z, 8);
      H3Element h;
      h.alpha = {1.0, x2.norm2(), x1.norm2()};
      h.a = {x2.tilde() * x1.tilde(), x1, x2};
      P.vec = h.flatten();
      return P;
    }
    case Kind::VI: {
      H3Element a = H3Element::unflatten(z);
      P.lambda = 1.0;
      P.x = z;
      P.y = sharp(a).flatten();
      P.mu = det3(a);
      return P;
    }
    default: break;
  }
  throw Error("Unsupported", "no Borel embedding for " + D.name());
}

double borel_incidence_residual(const DomainDescriptor& D, const CompactDualPoint& P) {
  switch (D.kind) {
    case Kind::I: {
      if (P.span.cols() != D.q || P.span.rows() != D.p + D.q) return INFINITY;
      Eigen::JacobiSVD<CMat> svd(P.span);
      const RVec& sv = svd.singularValues();
      // Full column rank: relative smallest singular value must not vanish.
      return sv(sv.size() - 1) > 1e-9 * std::max(1.0, sv(0)) ? 0.0 : 1.0;
    }
    case Kind::II:
    case Kind::III: {
      const int n = D.n;
      if (P.span.rows() != 2 * n) return INFINITY;
      CMat S = offdiag_unit(n, D.kind == Kind::II ? 1.0 : -1.0);
      const double scale = std::max(1.0, la::max_abs(P.span));
      return la::max_abs(CMat(P.span.transpose() * S * P.span)) / (scale * scale);
    }
    case Kind::IV: {
      const double nv = P.vec.norm();
      if (!(nv > 0)) return INFINITY;
      return std::abs(cd((P.vec.transpose() * P.vec)(0, 0))) / (nv * nv);
    }
    case Kind::V: {
      H3Element h = H3Element::unflatten(P.vec);
      const double nh = std::max(1e-300, max_abs(h));
      if (max_abs(h) == 0) return INFINITY;
      return max_abs(sharp(h)) / (nh * nh);
    }
    case Kind::VI: {
      H3Element x = H3Element::unflatten(P.x), y = H3Element::unflatten(P.y);
      const double sc = std::max({std::abs(P.lambda), std::abs(P.mu), max_abs(x), max_abs(y), 1e-300});
      if (sc == 1e-300) return INFINITY;
      double r = max_abs(sharp(y) - P.mu * x);
      r = std::max(r, max_abs(sharp(x) - P.lambda * y));
      // (x | conj(y)) is the C-bilinear pairing.
      r = std::max(r, std::abs(h3_form(x, y.bar()) - 3.0 * P.lambda * P.mu));
      return r / (sc * sc);
    }
    default: break;
  }
  throw Error("Unsupported", "no incidence predicate for " + D.name());
}

bool borel_incidence(const DomainDescriptor& D, const CompactDualPoint& P, double tol) {
  return borel_incidence_residual(D, P) <= tol;
}

CVec borel_chart(const DomainDescriptor& D, const CompactDualPoint& P) {
  switch (D.kind) {
    case Kind::I:
    case Kind::II:
    case Kind::III: {
      const int c = static_cast<int>(P.span.cols());
      const int r = static_cast<int>(P.span.rows()) - c;
      CMat bottom = P.span.bottomRows(c);
      return jts_from_matrix(D, CMat(P.span.topRows(r) * bottom.inverse()), 1e-8);
    }
    case Kind::IV: {
      const int n = D.n;
      const cd lam = 0.5 * (P.vec(n) - I_ * P.vec(n + 1));
      return P.vec.head(n) / (2.0 * I_ * lam);
    }
    case Kind::V: {
      H3Element h = H3Element::unflatten(P.vec);
      CVec z(16);
      z << h.a[1].to_vec(), h.a[2].to_vec();
      return z / h.alpha[0];
    }
    case Kind::VI: return P.x / P.lambda;
    default: break;
  }
  throw Error("Unsupported", "no affine chart for " + D.name());
}

CVec polydisk_embed(const DomainDescriptor& D, const std::vector<cd>& zs) {
  validate_domain(D);
  std::vector<CVec> frame = standard_frame(D);
  if (zs.size() != frame.size())
    throw Error("LengthMismatch", "expected " + std::to_string(frame.size()) + " disk coordinates");
  CVec z = CVec::Zero(D.dim());
  for (size_t k = 0; k < zs.size(); ++k) z += zs[k] * frame[k];
  return z;
}

RMat type4_real_form(const CVec& z) {
  const int n = static_cast<int>(z.size());
  const cd s = (z.transpose() * z)(0, 0);
  Eigen::Matrix2cd N;
  N << s + 1.0, I_ * (s - 1.0), std::conj(s) + 1.0, -I_ * (std::conj(s) - 1.0);
  Eigen::FullPivLU<Eigen::Matrix2cd> lu(N);
  lu.setThreshold(1e-12);
  if (!lu.isInvertible()) throw Error("Singular", "2x2 matrix is not invertible");
  CMat R(2, n);
  R.row(0) = z.transpose();
  R.row(1) = z.conjugate().transpose();
  CMat M = 2.0 * lu.inverse() * R;
  return M.real();
}

HermitianForms hermitian_forms_convert(const RMat& J, const RMat& g, double tol) {
  const int d = static_cast<int>(J.rows());
  if (J.cols() != d || g.rows() != d || g.cols() != d || d % 2)
    throw Error("IncompatiblePair", "J and g must be square of the same even size");
  const RMat Id = RMat::Identity(d, d);
  const double sc = std::max(1.0, la::max_abs(g));
  if (la::max_abs(RMat(J * J + Id)) > tol) throw Error("IncompatiblePair", "J^2 != -id");
  if (la::max_abs(RMat(g - g.transpose())) > tol * sc) throw Error("IncompatiblePair", "g is not symmetric");
  if (la::max_abs(RMat(J.transpose() * g * J - g)) > tol * sc) throw Error("IncompatiblePair", "g is not J-invariant");
  Eigen::LLT<RMat> llt(g);
  if (llt.info() != Eigen::Success) throw Error("IncompatiblePair", "g is not positive definite");

  HermitianForms out;
  out.omega = J.transpose() * g;
  out.h_real = g.cast<cd>() - I_ * out.omega.cast<cd>();
  // g-orthonormal vectors e_k with {e_k, J e_k} a real basis.
  const int m = d / 2;
  RMat E(d, 0);
  RMat span(d, 0);
  for (int c = 0; c < d && E.cols() < m; ++c) {
    RVec v = Id.col(c);
    for (int k = 0; k < span.cols(); ++k) v -= span.col(k).dot(g * v) * span.col(k);
    const double nv = std::sqrt(v.dot(g * v));
    if (nv < 1e-8) continue;
    v /= nv;
    E.conservativeResize(d, E.cols() + 1);
    E.col(E.cols() - 1) = v;
    span.conservativeResize(d, span.cols() + 2);
    span.col(span.cols() - 2) = v;
    span.col(span.cols() - 1) = J * v;
  }
  out.basis = E;
  out.h = CMat(m, m);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) out.h(j, k) = E.col(j).dot(g * E.col(k)) - I_ * E.col(j).dot(out.omega * E.col(k));
  return out;
}

}  // namespace hsm
