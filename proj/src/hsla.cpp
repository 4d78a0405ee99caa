#include "hsm/hsla.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <unsupported/Eigen/MatrixFunctions>

namespace hsm {

using Family = SlaDescriptor::Family;

namespace {

CMat blockdiag(cd a, int na, cd b, int nb) {
  CMat M = CMat::Zero(na + nb, na + nb);
  M.topLeftCorner(na, na).diagonal().setConstant(a);
  M.bottomRightCorner(nb, nb).diagonal().setConstant(b);
  return M;
}

CMat offdiag(int n, cd lower) {
  CMat M = CMat::Zero(2 * n, 2 * n);
  M.topRightCorner(n, n).setIdentity();
  M.bottomLeftCorner(n, n) = lower * CMat::Identity(n, n);
  return M;
}

// Matrix defining theta (X -> K X K) and the Hermitian form.
CMat form_matrix(const SlaDescriptor& L) {
  switch (L.family) {
    case Family::SU: return blockdiag(-1.0, L.p, 1.0, L.q);
    case Family::SOStar:
    case Family::SpNC: return blockdiag(-1.0, L.p, 1.0, L.p);
    case Family::SONC: return blockdiag(1.0, L.p, -1.0, 2);
  }
  return {};
}

using Relation = std::function<CMat(const CMat&)>;

std::vector<Relation> relations(const SlaDescriptor& L) {
  std::vector<Relation> r;
  const CMat K = form_matrix(L);
  switch (L.family) {
    case Family::SU:
      r.push_back([](const CMat& X) { return CMat::Constant(1, 1, X.trace()); });
      break;
    case Family::SOStar: {
      CMat S = offdiag(L.p, 1.0);
      r.push_back([S](const CMat& X) { return CMat(X.transpose() * S + S * X); });
      break;
    }
    case Family::SpNC: {
      CMat J = offdiag(L.p, -1.0);
      r.push_back([J](const CMat& X) { return CMat(X.transpose() * J + J * X); });
      break;
    }
    case Family::SONC: r.push_back([](const CMat& X) { return CMat(X.transpose() + X); }); break;
  }
  if (L.compact) {
    r.push_back([](const CMat& X) { return CMat(X.adjoint() + X); });
  } else {
    r.push_back([K](const CMat& X) { return CMat(X.adjoint() * K + K * X); });
  }
  return r;
}

RVec realify_mat(const CMat& X) {
  RVec v(2 * X.size());
  for (Eigen::Index k = 0; k < X.size(); ++k) {
    v(k) = X.data()[k].real();
    v(X.size() + k) = X.data()[k].imag();
  }
  return v;
}

CMat complexify_mat(const RVec& v, int N) {
  CMat X(N, N);
  for (int k = 0; k < N * N; ++k) X.data()[k] = cd(v(k), v(N * N + k));
  return X;
}

std::vector<CMat> real_nullspace_basis(int N, const std::vector<Relation>& rel) {
  const int d = 2 * N * N;
  std::vector<RVec> cols;
  int rows = 0;
  for (int k = 0; k < d; ++k) {
    RVec e = RVec::Zero(d);
    e(k) = 1;
    CMat X = complexify_mat(e, N);
    std::vector<RVec> parts;
    int len = 0;
    for (const auto& f : rel) {
      parts.push_back(realify_mat(f(X)));
      len += static_cast<int>(parts.back().size());
    }
    RVec c(len);
    int off = 0;
    for (const auto& p : parts) {
      c.segment(off, p.size()) = p;
      off += static_cast<int>(p.size());
    }
    cols.push_back(c);
    rows = len;
  }
  RMat A(rows, d);
  for (int k = 0; k < d; ++k) A.col(k) = cols[k];
  RMat Nsp = la::nullspace(A, 1e-10);
  std::vector<CMat> basis;
  for (int k = 0; k < Nsp.cols(); ++k) basis.push_back(complexify_mat(Nsp.col(k), N));
  return basis;
}

struct BasisCache {
  std::vector<CMat> all, k, p;
  RMat realified;  // columns: realified basis elements
};

const BasisCache& basis_cache(const SlaDescriptor& L) {
  static std::mutex mu;
  static std::map<std::string, BasisCache> cache;
  const std::string key = L.name();
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const int N = L.size();
  const CMat K = form_matrix(L);
  BasisCache c;
  auto rel = relations(L);
  c.all = real_nullspace_basis(N, rel);
  auto relk = rel;
  relk.push_back([K](const CMat& X) { return CMat(K * X * K - X); });
  c.k = real_nullspace_basis(N, relk);
  auto relp = rel;
  relp.push_back([K](const CMat& X) { return CMat(K * X * K + X); });
  c.p = real_nullspace_basis(N, relp);
  c.realified = RMat(2 * N * N, static_cast<int>(c.all.size()));
  for (size_t j = 0; j < c.all.size(); ++j) c.realified.col(j) = realify_mat(c.all[j]);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(c)).first->second;
}

int parse_int(const std::string& s) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size() || v < 1) throw 0;
    return v;
  } catch (...) {
    throw Error("ParseError", "bad size '" + s + "'");
  }
}

}  // namespace

SlaDescriptor SlaDescriptor::parse(const std::string& s) {
  std::vector<std::string> tok;
  size_t pos = 0;
  while (true) {
    size_t c = s.find(':', pos);
    tok.push_back(s.substr(pos, c == std::string::npos ? std::string::npos : c - pos));
    if (c == std::string::npos) break;
    pos = c + 1;
  }
  SlaDescriptor L;
  const std::string& h = tok[0];
  L.compact = h.size() > 2 && h.substr(h.size() - 2) == "-c";
  const std::string base = L.compact ? h.substr(0, h.size() - 2) : h;
  if (base == "su" && tok.size() == 3) {
    L.family = Family::SU;
    L.p = parse_int(tok[1]);
    L.q = parse_int(tok[2]);
    return L;
  }
  if ((base == "so-nc" || base == "so") && tok.size() == 3) {
    L.family = Family::SONC;
    L.p = parse_int(tok[1]);
    if (tok[2] != "2") throw Error("ParseError", "only so(n,2) is supported");
    L.q = 2;
    return L;
  }
  if ((base == "so-nc" || base == "so") && tok.size() == 2) {
    const int m = parse_int(tok[1]);
    if (m % 2) throw Error("ParseError", "so_nc(2n) needs an even size");
    L.family = Family::SOStar;
    L.p = m / 2;
    return L;
  }
  if ((base == "sp-nc" || base == "sp") && tok.size() == 2) {
    L.family = Family::SpNC;
    L.p = parse_int(tok[1]);
    return L;
  }
  throw Error("ParseError", "bad Lie algebra descriptor '" + s + "'");
}

std::string SlaDescriptor::name() const {
  const std::string c = compact ? "-c" : "";
  switch (family) {
    case Family::SU: return "su" + c + ":" + std::to_string(p) + ":" + std::to_string(q);
    case Family::SOStar: return (compact ? "so-c:" : "so-nc:") + std::to_string(2 * p);
    case Family::SpNC: return (compact ? "sp-c:" : "sp-nc:") + std::to_string(p);
    case Family::SONC: return (compact ? "so-c:" : "so-nc:") + std::to_string(p) + ":2";
  }
  return "?";
}

int SlaDescriptor::size() const {
  switch (family) {
    case Family::SU: return p + q;
    case Family::SOStar:
    case Family::SpNC: return 2 * p;
    case Family::SONC: return p + 2;
  }
  return 0;
}

int SlaDescriptor::dim() const { return static_cast<int>(sla_basis(*this).size()); }

SlaDescriptor sla_for_domain(const DomainDescriptor& D) {
  SlaDescriptor L;
  switch (D.kind) {
    case JtsDescriptor::Kind::I: L.family = Family::SU; L.p = D.p; L.q = D.q; return L;
    case JtsDescriptor::Kind::II: L.family = Family::SOStar; L.p = D.n; return L;
    case JtsDescriptor::Kind::III: L.family = Family::SpNC; L.p = D.n; return L;
    case JtsDescriptor::Kind::IV: L.family = Family::SONC; L.p = D.n; L.q = 2; return L;
    default: throw Error("Unsupported", "no classical Lie algebra for " + D.name());
  }
}

DomainDescriptor domain_for_sla(const SlaDescriptor& L) {
  switch (L.family) {
    case Family::SU: return JtsDescriptor::type_i(L.p, L.q);
    case Family::SOStar: return JtsDescriptor::type_ii(L.p);
    case Family::SpNC: return JtsDescriptor::type_iii(L.p);
    case Family::SONC: return JtsDescriptor::type_iv(L.p);
  }
  return {};
}

double sla_residual(const SlaDescriptor& L, const CMat& X) {
  if (X.rows() != L.size() || X.cols() != L.size()) return INFINITY;
  double r = 0;
  for (const auto& f : relations(L)) r = std::max(r, la::max_abs(f(X)));
  return r;
}

bool sla_member(const SlaDescriptor& L, const CMat& X, double tol) { return sla_residual(L, X) <= tol; }

const std::vector<CMat>& sla_basis(const SlaDescriptor& L) { return basis_cache(L).all; }
const std::vector<CMat>& k_basis(const SlaDescriptor& L) { return basis_cache(L).k; }
const std::vector<CMat>& p_basis(const SlaDescriptor& L) { return basis_cache(L).p; }

RVec sla_coords(const SlaDescriptor& L, const CMat& X) {
  const BasisCache& c = basis_cache(L);
  // Basis is orthonormal in the realified picture.
  return c.realified.transpose() * realify_mat(X);
}

CMat bracket(const CMat& X, const CMat& Y) { return X * Y - Y * X; }

CMat theta(const SlaDescriptor& L, const CMat& X) {
  const CMat K = form_matrix(L);
  return K * X * K;
}

CMat central_H(const SlaDescriptor& L) {
  switch (L.family) {
    case Family::SU: {
      const double s = L.p + L.q;
      return blockdiag(I_ * (L.q / s), L.p, -I_ * (L.p / s), L.q);
    }
    case Family::SOStar:
    case Family::SpNC: return blockdiag(0.5 * I_, L.p, -0.5 * I_, L.p);
    case Family::SONC: {
      CMat H = CMat::Zero(L.p + 2, L.p + 2);
      H(L.p, L.p + 1) = 1;
      H(L.p + 1, L.p) = -1;
      return H;
    }
  }
  return {};
}

CartanSplit cartan_split(const SlaDescriptor& L, const CMat& X) {
  CMat t = theta(L, X);
  return {0.5 * (X + t), 0.5 * (X - t)};
}

RMat ad_matrix(const SlaDescriptor& L, const CMat& X) {
  const auto& B = sla_basis(L);
  RMat M(B.size(), B.size());
  for (size_t j = 0; j < B.size(); ++j) M.col(j) = sla_coords(L, bracket(X, B[j]));
  return M;
}

double killing_form(const SlaDescriptor& L, const CMat& X, const CMat& Y) {
  return (ad_matrix(L, X) * ad_matrix(L, Y)).trace();
}

RMat killing_gram(const SlaDescriptor& L, const std::vector<CMat>& basis) {
  std::vector<RMat> ads;
  for (const auto& b : basis) ads.push_back(ad_matrix(L, b));
  RMat G(basis.size(), basis.size());
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i; j < basis.size(); ++j) G(i, j) = G(j, i) = (ads[i] * ads[j]).trace();
  return G;
}

SlaDescriptor dual_sla(const SlaDescriptor& L) {
  SlaDescriptor D = L;
  D.compact = !L.compact;
  return D;
}

CMat dual_map(const SlaDescriptor& L, const CMat& X) {
  CartanSplit s = cartan_split(L, X);
  return L.compact ? CMat(s.k - I_ * s.p) : CMat(s.k + I_ * s.p);
}

double ad_H_squared_residual(const SlaDescriptor& L, const CMat& H) {
  double r = 0;
  for (const auto& b : p_basis(L)) r = std::max(r, la::max_abs(CMat(bracket(H, bracket(H, b)) + b)));
  return r;
}

bool ad_H_squared_check(const SlaDescriptor& L, double tol) {
  return ad_H_squared_residual(L, central_H(L)) <= tol;
}

PPlusSplit pplus_project(const SlaDescriptor& L, const CMat& X) {
  CMat hx = bracket(central_H(L), X);
  return {0.5 * (X - I_ * hx), 0.5 * (X + I_ * hx)};
}

CMat pplus_embed(const SlaDescriptor& L, const CVec& z) {
  const DomainDescriptor D = domain_for_sla(L);
  check_element(D, z);
  const int N = L.size();
  CMat X = CMat::Zero(N, N);
  if (L.family == Family::SONC) {
    const int n = L.p;
    CMat P(n, 2);
    P.col(0) = -I_ * z;
    P.col(1) = z;
    X.topRightCorner(n, 2) = P;
    X.bottomLeftCorner(2, n) = -P.transpose();
    return X;
  }
  CMat M = jts_to_matrix(D, z);
  X.topRightCorner(M.rows(), M.cols()) = M;
  return X;
}

CVec pplus_extract(const SlaDescriptor& L, const CMat& X) {
  const DomainDescriptor D = domain_for_sla(L);
  if (L.family == Family::SONC) return X.topRightCorner(L.p, 2).col(1);
  const int c = L.family == Family::SU ? L.q : L.p;
  const int r = L.p;
  return jts_from_matrix(D, CMat(X.topRightCorner(r, c)), 1e-8);
}

CMat real_conjugate(const SlaDescriptor& L, const CMat& M) {
  const CMat K = form_matrix(L);
  return -K * M.adjoint() * K;
}

CVec bracket_triple(const SlaDescriptor& L, const CVec& x, const CVec& y, const CVec& z) {
  if (L.compact) throw Error("Unsupported", "bracket triple needs a non-compact algebra");
  CMat X = pplus_embed(L, x), Y = pplus_embed(L, y), Z = pplus_embed(L, z);
  CMat T = 0.5 * bracket(bracket(X, real_conjugate(L, Y)), Z);
  return pplus_extract(L, T);
}

namespace {

CMat cayley_C(int n) {
  CMat C(2 * n, 2 * n);
  CMat Id = CMat::Identity(n, n);
  C << Id, I_ * Id, I_ * Id, Id;
  return C;
}

double source_residual(RealFormVariant v, const CMat& h, bool lie) {
  const int n = static_cast<int>(h.rows()) / 2;
  SlaDescriptor L;
  L.family = v == RealFormVariant::II ? Family::SOStar : Family::SpNC;
  L.p = n;
  if (lie) return sla_residual(L, h);
  GroupElement g;
  g.kind = v == RealFormVariant::II ? GroupElement::Kind::SOStar : GroupElement::Kind::SpNC;
  g.p = n;
  g.g = h;
  return group_residual(g);
}

}  // namespace

double real_form_target_residual(RealFormVariant v, const CMat& g, bool lie) {
  const int n = static_cast<int>(g.rows()) / 2;
  CMat J = offdiag(n, -1.0);
  CMat Id = CMat::Identity(2 * n, 2 * n);
  if (v == RealFormVariant::II) {
    // SO*(2n): g^t g = I, conj(g)^t J g = J
    if (lie) return std::max(la::max_abs(CMat(g.transpose() + g)), la::max_abs(CMat(g.adjoint() * J + J * g)));
    return std::max({la::max_abs(CMat(g.transpose() * g - Id)), la::max_abs(CMat(g.adjoint() * J * g - J)),
                     std::abs(g.determinant() - 1.0)});
  }
  // Sp(n,R): real, g^t J g = J
  double im = la::max_abs(RMat(g.imag()));
  if (lie) return std::max(im, la::max_abs(CMat(g.transpose() * J + J * g)));
  return std::max(im, la::max_abs(CMat(g.transpose() * J * g - J)));
}

CMat real_form_conjugation(RealFormVariant v, const CMat& h, bool lie, double tol) {
  if (h.rows() != h.cols() || h.rows() % 2) throw Error("ShapeError", "expected a 2n x 2n matrix");
  if (source_residual(v, h, lie) > tol) throw Error("RelationViolation", "element violates the source relations");
  const CMat C = cayley_C(static_cast<int>(h.rows()) / 2);
  return C * h * C.inverse();
}

CMat real_form_inverse(RealFormVariant, const CMat& g) {
  const CMat C = cayley_C(static_cast<int>(g.rows()) / 2);
  return C.inverse() * g * C;
}

CMat sample_sla(const SlaDescriptor& L, Rng& rng, double scale) {
  const auto& B = sla_basis(L);
  CMat X = CMat::Zero(L.size(), L.size());
  for (const auto& b : B) X += (scale * rng.normal()) * b;
  return X;
}

GroupElement sample_group_element(const DomainDescriptor& D, Rng& rng, double scale) {
  GroupElement g = group_identity(D);
  const SlaDescriptor L = sla_for_domain(D);
  g.g = sample_sla(L, rng, scale).exp();
  return g;
}

}  // namespace hsm
