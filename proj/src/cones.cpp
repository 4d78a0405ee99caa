#include "hsm/cones.hpp"

#include <cmath>

namespace hsm {

namespace {

std::vector<std::string> split_top(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int parse_size(const std::string& s, int lo) {
  int v;
  try {
    size_t used = 0;
    v = std::stoi(s, &used);
    if (used != s.size()) throw 0;
  } catch (...) {
    throw Error("ParseError", "bad size '" + s + "'");
  }
  if (v < lo) throw Error("ParseError", "size out of range: " + s);
  return v;
}

}  // namespace

ConeDescriptor ConeDescriptor::parse(const std::string& s) {
  if (s.rfind("prod(", 0) == 0 && s.back() == ')') {
    std::vector<ConeDescriptor> parts;
    for (const auto& p : split_top(s.substr(5, s.size() - 6))) parts.push_back(parse(p));
    if (parts.empty()) throw Error("ParseError", "empty product");
    return product(parts);
  }
  if (s == "albert") return albert();
  auto c = s.find(':');
  if (c == std::string::npos) throw Error("ParseError", "bad cone descriptor '" + s + "'");
  std::string head = s.substr(0, c), tail = s.substr(c + 1);
  if (head == "lorentz") return lorentz(parse_size(tail, 0));
  if (head == "psd-r") return psd_r(parse_size(tail, 1));
  if (head == "psd-c") return psd_c(parse_size(tail, 1));
  if (head == "psd-h") return psd_h(parse_size(tail, 1));
  throw Error("ParseError", "bad cone descriptor '" + s + "'");
}

int ConeDescriptor::dim() const { return jordan_from_cone(*this).dim(); }
int ConeDescriptor::rank() const { return jordan_from_cone(*this).rank(); }

std::string ConeDescriptor::name() const {
  switch (kind) {
    case Kind::Lorentz: return "lorentz:" + std::to_string(n);
    case Kind::PsdR: return "psd-r:" + std::to_string(n);
    case Kind::PsdC: return "psd-c:" + std::to_string(n);
    case Kind::PsdH: return "psd-h:" + std::to_string(n);
    case Kind::Albert: return "albert";
    case Kind::Product: {
      std::string s = "prod(";
      for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i].name();
      return s + ")";
    }
  }
  return "?";
}

ConeDescriptor cone_from_jordan(const JordanAlgebra& A) {
  switch (A.kind) {
    case JordanAlgebra::Kind::SpinFactor: return ConeDescriptor::lorentz(A.n);
    case JordanAlgebra::Kind::HermR: return ConeDescriptor::psd_r(A.n);
    case JordanAlgebra::Kind::HermC: return ConeDescriptor::psd_c(A.n);
    case JordanAlgebra::Kind::HermH: return ConeDescriptor::psd_h(A.n);
    case JordanAlgebra::Kind::Albert: return ConeDescriptor::albert();
    case JordanAlgebra::Kind::DirectSum: {
      std::vector<ConeDescriptor> p;
      for (const auto& x : A.parts) p.push_back(cone_from_jordan(x));
      return ConeDescriptor::product(p);
    }
  }
  throw Error("Unsupported", "unknown algebra");
}

JordanAlgebra jordan_from_cone(const ConeDescriptor& C) {
  switch (C.kind) {
    case ConeDescriptor::Kind::Lorentz: return JordanAlgebra::spin(C.n);
    case ConeDescriptor::Kind::PsdR: return JordanAlgebra::herm_r(C.n);
    case ConeDescriptor::Kind::PsdC: return JordanAlgebra::herm_c(C.n);
    case ConeDescriptor::Kind::PsdH: return JordanAlgebra::herm_h(C.n);
    case ConeDescriptor::Kind::Albert: return JordanAlgebra::albert();
    case ConeDescriptor::Kind::Product: {
      std::vector<JordanAlgebra> p;
      for (const auto& x : C.parts) p.push_back(jordan_from_cone(x));
      return JordanAlgebra::sum(p);
    }
  }
  throw Error("Unsupported", "unknown cone");
}

double cone_margin(const ConeDescriptor& C, const RVec& x) {
  const JordanAlgebra A = jordan_from_cone(C);
  check_element(A, x);
  switch (C.kind) {
    case ConeDescriptor::Kind::Lorentz: return x(0) - x.tail(C.n).norm();
    case ConeDescriptor::Kind::PsdR:
    case ConeDescriptor::Kind::PsdC:
    case ConeDescriptor::Kind::PsdH: {
      Eigen::SelfAdjointEigenSolver<CMat> es(to_matrix(A, x));
      return es.eigenvalues()(0);
    }
    case ConeDescriptor::Kind::Albert: return hsm::cone_margin(A, x);
    case ConeDescriptor::Kind::Product: {
      double m = INFINITY;
      int off = 0;
      for (const auto& p : C.parts) {
        m = std::min(m, cone_margin(p, x.segment(off, p.dim())));
        off += p.dim();
      }
      return m;
    }
  }
  return 0;
}

bool cone_member(const ConeDescriptor& C, const RVec& x, double tol) { return cone_margin(C, x) > tol; }

TriState cone_classify(const ConeDescriptor& C, const RVec& x, double band) {
  return classify_margin(cone_margin(C, x), band);
}

RVec sample_cone_interior(const ConeDescriptor& C, Rng& rng) {
  const JordanAlgebra A = jordan_from_cone(C);
  RVec z = rng.normal_vec(A.dim());
  return jordan_mul(A, z, z) + 1e-3 * jordan_unit(A);
}

DualWitness dual_member_witness(const ConeDescriptor& C, const RVec& y, int samples, std::uint64_t seed) {
  const JordanAlgebra A = jordan_from_cone(C);
  check_element(A, y);
  Rng rng(seed);
  DualWitness out;
  out.min_pairing = INFINITY;
  for (int s = 0; s < samples; ++s) {
    RVec z = rng.normal_vec(A.dim());
    RVec x = jordan_mul(A, z, z);
    // Higher powers concentrate on the top spectral idempotent of z.
    const int squarings = s % 4;
    for (int k = 0; k < squarings; ++k) {
      x = jordan_mul(A, x, x);
      x /= x.norm();
    }
    x /= x.norm();
    const double pr = trace_form(A, x, y);
    if (pr < out.min_pairing) out.min_pairing = pr;
    if (pr <= 0) {
      out.member = false;
      out.witness = x;
      return out;
    }
  }
  return out;
}

int idempotent_rank(const JordanAlgebra& A, const RVec& e) {
  check_element(A, e);
  if (A.kind == JordanAlgebra::Kind::DirectSum) {
    int r = 0, off = 0;
    for (const auto& p : A.parts) {
      r += idempotent_rank(p, e.segment(off, p.dim()));
      off += p.dim();
    }
    return r;
  }
  const RVec u = jordan_unit(A);
  const double tr = A.rank() * trace_form(A, e, u) / trace_form(A, u, u);
  return static_cast<int>(std::lround(tr));
}

namespace {

ConeDescriptor peirce_one_cone(const JordanAlgebra& A, const RVec& e) {
  if (A.kind == JordanAlgebra::Kind::DirectSum) {
    std::vector<ConeDescriptor> parts;
    int off = 0;
    for (const auto& p : A.parts) {
      const RVec ep = e.segment(off, p.dim());
      off += p.dim();
      if (idempotent_rank(p, ep) == 0) continue;
      parts.push_back(peirce_one_cone(p, ep));
    }
    return ConeDescriptor::product(parts);
  }
  const int r = idempotent_rank(A, e);
  if (r == A.rank()) return cone_from_jordan(A);
  if (r == 0) return ConeDescriptor::product({});
  if (r == 1) return ConeDescriptor::psd_r(1);
  switch (A.kind) {
    case JordanAlgebra::Kind::HermR: return ConeDescriptor::psd_r(r);
    case JordanAlgebra::Kind::HermC: return ConeDescriptor::psd_c(r);
    case JordanAlgebra::Kind::HermH: return ConeDescriptor::psd_h(r);
    case JordanAlgebra::Kind::Albert: return ConeDescriptor::lorentz(9);  // Herm_2(O)
    default: break;
  }
  throw Error("Unsupported", "unexpected idempotent rank");
}

// Matrix-unit embedding Herm_r(F) -> V(e,1) through an orthonormal basis of range(e).
std::optional<RMat> herm_embedding(const JordanAlgebra& A, const RVec& e, int r) {
  if (A.kind != JordanAlgebra::Kind::HermR && A.kind != JordanAlgebra::Kind::HermC) return std::nullopt;
  Eigen::SelfAdjointEigenSolver<CMat> es(to_matrix(A, e));
  CMat Ur = es.eigenvectors().rightCols(r);
  const JordanAlgebra B = A.kind == JordanAlgebra::Kind::HermR ? JordanAlgebra::herm_r(r) : JordanAlgebra::herm_c(r);
  RMat M(A.dim(), B.dim());
  for (int k = 0; k < B.dim(); ++k) {
    RVec b = RVec::Zero(B.dim());
    b(k) = 1;
    CMat X = Ur * to_matrix(B, b) * Ur.adjoint();
    M.col(k) = from_matrix(A, X).real();
  }
  return M;
}

}  // namespace

ConeBoundaryComponent cone_boundary_component(const ConeDescriptor& C, const RVec& e, double tol) {
  const JordanAlgebra A = jordan_from_cone(C);
  PeirceDecomposition pd = peirce_decompose(A, e, tol);
  ConeBoundaryComponent out;
  out.cone = peirce_one_cone(A, e);
  out.basis = pd.one;
  out.idempotent_rank = idempotent_rank(A, e);
  if (out.idempotent_rank == A.rank() && A.kind != JordanAlgebra::Kind::DirectSum) {
    out.embedding = RMat::Identity(A.dim(), A.dim());
  } else if (out.idempotent_rank == 1 && A.kind != JordanAlgebra::Kind::DirectSum) {
    out.embedding = RMat(e);
  } else if (A.kind != JordanAlgebra::Kind::DirectSum) {
    out.embedding = herm_embedding(A, e, out.idempotent_rank);
  }
  return out;
}

bool boundary_component_member(const ConeDescriptor& C, const RVec& e, const RVec& x, double tol) {
  const JordanAlgebra A = jordan_from_cone(C);
  check_element(A, x);
  PeirceDecomposition pd = peirce_decompose(A, e);
  const int m = static_cast<int>(pd.one.cols());
  if (m == 0) return false;
  const RMat& G = trace_gram(A);
  // Coordinates in the tau-orthonormal basis; x must lie in V(e,1).
  RVec c = pd.one.transpose() * G * x;
  if ((pd.one * c - x).norm() > 1e-8 * std::max(1.0, x.norm())) return false;
  RMat T(m, m);
  RMat Tx = mult_operator(A, x);
  T = pd.one.transpose() * G * Tx * pd.one;
  Eigen::SelfAdjointEigenSolver<RMat> es(0.5 * (T + T.transpose()));
  return es.eigenvalues()(0) > tol;
}

}  // namespace hsm
