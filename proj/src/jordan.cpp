#include "hsm/jordan.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace hsm {

namespace {

int herm_dim(JordanAlgebra::Kind k, int n) {
  switch (k) {
    case JordanAlgebra::Kind::HermR: return n * (n + 1) / 2;
    case JordanAlgebra::Kind::HermC: return n * n;
    case JordanAlgebra::Kind::HermH: return n * (2 * n - 1);
    default: return 0;
  }
}

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

}  // namespace

JordanAlgebra JordanAlgebra::parse(const std::string& s) {
  if (s.rfind("sum(", 0) == 0 && s.back() == ')') {
    std::vector<JordanAlgebra> parts;
    for (const auto& p : split_top(s.substr(4, s.size() - 5))) parts.push_back(parse(p));
    if (parts.empty()) throw Error("ParseError", "empty direct sum");
    return sum(parts);
  }
  if (s == "albert") return albert();
  auto colon = s.find(':');
  if (colon == std::string::npos) throw Error("ParseError", "bad algebra '" + s + "'");
  std::string head = s.substr(0, colon);
  int n = 0;
  try {
    n = std::stoi(s.substr(colon + 1));
  } catch (...) {
    throw Error("ParseError", "bad size in '" + s + "'");
  }
  if (n < 1 && !(head == "spin" && n == 0)) throw Error("ParseError", "size must be positive");
  if (head == "spin") return spin(n);
  if (head == "herm-r") return herm_r(n);
  if (head == "herm-c") return herm_c(n);
  if (head == "herm-h") return herm_h(n);
  throw Error("ParseError", "unknown algebra '" + head + "'");
}

int JordanAlgebra::dim() const {
  switch (kind) {
    case Kind::SpinFactor: return n + 1;
    case Kind::Albert: return 27;
    case Kind::DirectSum: {
      int d = 0;
      for (const auto& p : parts) d += p.dim();
      return d;
    }
    default: return herm_dim(kind, n);
  }
}

int JordanAlgebra::rank() const {
  switch (kind) {
    case Kind::SpinFactor: return n == 0 ? 1 : 2;
    case Kind::Albert: return 3;
    case Kind::DirectSum: {
      int r = 0;
      for (const auto& p : parts) r += p.rank();
      return r;
    }
    default: return n;
  }
}

std::string JordanAlgebra::name() const {
  switch (kind) {
    case Kind::SpinFactor: return "spin:" + std::to_string(n);
    case Kind::HermR: return "herm-r:" + std::to_string(n);
    case Kind::HermC: return "herm-c:" + std::to_string(n);
    case Kind::HermH: return "herm-h:" + std::to_string(n);
    case Kind::Albert: return "albert";
    case Kind::DirectSum: {
      std::string s = "sum(";
      for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i].name();
      return s + ")";
    }
  }
  return "?";
}

void check_element(const JordanAlgebra& A, const RVec& x) {
  if (x.size() != A.dim())
    throw Error("DescriptorMismatch", "element of length " + std::to_string(x.size()) + " for " + A.name());
}

static void check_element(const JordanAlgebra& A, const CVec& x) {
  if (x.size() != A.dim())
    throw Error("DescriptorMismatch", "element of length " + std::to_string(x.size()) + " for " + A.name());
}

CMat to_matrix(const JordanAlgebra& A, const CVec& x) {
  check_element(A, x);
  const int n = A.n;
  if (A.kind == JordanAlgebra::Kind::HermR || A.kind == JordanAlgebra::Kind::HermC) {
    CMat M = CMat::Zero(n, n);
    int k = n;
    for (int i = 0; i < n; ++i) M(i, i) = x(i);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (A.kind == JordanAlgebra::Kind::HermR) {
          M(i, j) = M(j, i) = x(k++);
        } else {
          cd re = x(k++), im = x(k++);
          M(i, j) = re + I_ * im;
          M(j, i) = re - I_ * im;
        }
      }
    return M;
  }
  if (A.kind == JordanAlgebra::Kind::HermH) {
    CMat E = CMat::Zero(2 * n, 2 * n);
    int k = n;
    for (int i = 0; i < n; ++i) E(i, i) = E(n + i, n + i) = x(i);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        cd q0 = x(k), q1 = x(k + 1), q2 = x(k + 2), q3 = x(k + 3);
        k += 4;
        // upper entry q, lower entry q~
        E(i, j) = q0 + I_ * q1;
        E(n + i, n + j) = q0 - I_ * q1;
        E(i, n + j) = q2 + I_ * q3;
        E(n + i, j) = -(q2 - I_ * q3);
        E(j, i) = q0 - I_ * q1;
        E(n + j, n + i) = q0 + I_ * q1;
        E(j, n + i) = -q2 - I_ * q3;
        E(n + j, i) = -(-q2 + I_ * q3);
      }
    return E;
  }
  throw Error("Unsupported", "no matrix view for " + A.name());
}

CMat to_matrix(const JordanAlgebra& A, const RVec& x) { return to_matrix(A, CVec(x.cast<cd>())); }

CVec from_matrix(const JordanAlgebra& A, const CMat& M) {
  const int n = A.n;
  CVec x(A.dim());
  int k = n;
  if (A.kind == JordanAlgebra::Kind::HermR || A.kind == JordanAlgebra::Kind::HermC) {
    for (int i = 0; i < n; ++i) x(i) = M(i, i);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (A.kind == JordanAlgebra::Kind::HermR) {
          x(k++) = 0.5 * (M(i, j) + M(j, i));
        } else {
          x(k++) = 0.5 * (M(i, j) + M(j, i));
          x(k++) = (M(i, j) - M(j, i)) / (2.0 * I_);
        }
      }
    return x;
  }
  if (A.kind == JordanAlgebra::Kind::HermH) {
    for (int i = 0; i < n; ++i) x(i) = 0.5 * (M(i, i) + M(n + i, n + i));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        cd a = M(i, j), a2 = M(n + i, n + j), b = M(i, n + j), b2 = -M(n + i, j);
        x(k++) = 0.5 * (a + a2);
        x(k++) = (a - a2) / (2.0 * I_);
        x(k++) = 0.5 * (b + b2);
        x(k++) = (b - b2) / (2.0 * I_);
      }
    return x;
  }
  throw Error("Unsupported", "no matrix view for " + A.name());
}

H3Element to_h3(const RVec& x) { return H3Element::unflatten(CVec(x.cast<cd>())); }

RVec from_h3_real(const H3Element& h) { return h.flatten().real(); }

CVec jordan_mul(const JordanAlgebra& A, const CVec& x, const CVec& y) {
  check_element(A, x);
  check_element(A, y);
  switch (A.kind) {
    case JordanAlgebra::Kind::SpinFactor: {
      CVec z(A.dim());
      z(0) = x(0) * y(0) + (x.tail(A.n).array() * y.tail(A.n).array()).sum();
      z.tail(A.n) = x(0) * y.tail(A.n) + y(0) * x.tail(A.n);
      return z;
    }
    case JordanAlgebra::Kind::Albert:
      return albert_jordan_mul(H3Element::unflatten(x), H3Element::unflatten(y)).flatten();
    case JordanAlgebra::Kind::DirectSum: {
      CVec z(A.dim());
      int off = 0;
      for (const auto& p : A.parts) {
        const int d = p.dim();
        z.segment(off, d) = jordan_mul(p, CVec(x.segment(off, d)), CVec(y.segment(off, d)));
        off += d;
      }
      return z;
    }
    default: {
      CMat X = to_matrix(A, x), Y = to_matrix(A, y);
      return from_matrix(A, 0.5 * (X * Y + Y * X));
    }
  }
}

RVec jordan_mul(const JordanAlgebra& A, const RVec& x, const RVec& y) {
  return jordan_mul(A, CVec(x.cast<cd>()), CVec(y.cast<cd>())).real();
}

RVec jordan_unit(const JordanAlgebra& A) {
  RVec e = RVec::Zero(A.dim());
  switch (A.kind) {
    case JordanAlgebra::Kind::SpinFactor: e(0) = 1; break;
    case JordanAlgebra::Kind::Albert: e.head(3).setOnes(); break;
    case JordanAlgebra::Kind::DirectSum: {
      int off = 0;
      for (const auto& p : A.parts) {
        e.segment(off, p.dim()) = jordan_unit(p);
        off += p.dim();
      }
      break;
    }
    default: e.head(A.n).setOnes();
  }
  return e;
}

RVec jordan_power(const JordanAlgebra& A, const RVec& x, int p) {
  if (p < 1) throw Error("InvalidArgument", "power must be >= 1");
  RVec r = x;
  for (int k = 1; k < p; ++k) r = jordan_mul(A, x, r);
  return r;
}

CMat mult_operator(const JordanAlgebra& A, const CVec& x) {
  const int d = A.dim();
  CMat T(d, d);
  CVec b = CVec::Zero(d);
  for (int j = 0; j < d; ++j) {
    b.setZero();
    b(j) = 1;
    T.col(j) = jordan_mul(A, x, b);
  }
  return T;
}

RMat mult_operator(const JordanAlgebra& A, const RVec& x) { return mult_operator(A, CVec(x.cast<cd>())).real(); }

CMat quadratic_operator(const JordanAlgebra& A, const CVec& x) {
  CMat T = mult_operator(A, x);
  return 2.0 * T * T - mult_operator(A, jordan_mul(A, x, x));
}

const RMat& trace_gram(const JordanAlgebra& A) {
  static std::mutex mu;
  static std::map<std::string, RMat> cache;
  const std::string key = A.name();
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const int d = A.dim();
  RVec t(d);
  RVec b = RVec::Zero(d);
  for (int k = 0; k < d; ++k) {
    b.setZero();
    b(k) = 1;
    t(k) = mult_operator(A, b).trace();
  }
  RMat G(d, d);
  RVec bi = RVec::Zero(d), bj = RVec::Zero(d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      bi.setZero();
      bj.setZero();
      bi(i) = 1;
      bj(j) = 1;
      G(i, j) = G(j, i) = t.dot(jordan_mul(A, bi, bj));
    }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(G)).first->second;
}

double trace_form(const JordanAlgebra& A, const RVec& x, const RVec& y) {
  check_element(A, x);
  check_element(A, y);
  return x.dot(trace_gram(A) * y);
}

namespace {

// Eigen-decomposition of a G-symmetric operator; vecs are G-orthonormal.
RVec gram_symmetric_eigs(const RMat& T, const RMat& G, RMat* vecs) {
  Eigen::LLT<RMat> llt(G);
  if (llt.info() != Eigen::Success) throw Error("NotPositive", "trace form is not positive definite");
  RMat L = llt.matrixL();
  RMat Linv = L.inverse();
  RMat S = L.transpose() * T * Linv.transpose();
  S = 0.5 * (S + S.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<RMat> es(S);
  if (vecs) *vecs = Linv.transpose() * es.eigenvectors();
  return es.eigenvalues();
}

}  // namespace

RVec mult_spectrum(const JordanAlgebra& A, const RVec& x) {
  check_element(A, x);
  return gram_symmetric_eigs(mult_operator(A, x), trace_gram(A), nullptr);
}

double cone_margin(const JordanAlgebra& A, const RVec& x) { return mult_spectrum(A, x)(0); }

bool cone_member(const JordanAlgebra& A, const RVec& x, double tol) { return cone_margin(A, x) > tol; }

CVec jordan_inverse(const JordanAlgebra& A, const CVec& x) {
  check_element(A, x);
  CMat P = quadratic_operator(A, x);
  Eigen::FullPivLU<CMat> lu(P);
  lu.setThreshold(1e-12);
  if (!lu.isInvertible()) throw Error("Singular", "element is not invertible");
  CVec y = lu.solve(x);
  CVec e = jordan_unit(A).cast<cd>();
  double res = (jordan_mul(A, x, y) - e).norm();
  if (!std::isfinite(res) || res > 1e-8 * (1.0 + y.norm()))
    throw Error("Singular", "inverse residual too large");
  return y;
}

RVec jordan_inverse(const JordanAlgebra& A, const RVec& x) { return jordan_inverse(A, CVec(x.cast<cd>())).real(); }

PeirceDecomposition peirce_decompose(const JordanAlgebra& A, const RVec& e, double tol) {
  check_element(A, e);
  if ((jordan_mul(A, e, e) - e).norm() > tol) throw Error("NotIdempotent", "e o e != e");
  RMat vecs;
  RVec ev = gram_symmetric_eigs(mult_operator(A, e), trace_gram(A), &vecs);
  std::vector<int> one, half, zero;
  for (int i = 0; i < ev.size(); ++i) {
    if (ev(i) > 0.75) one.push_back(i);
    else if (ev(i) > 0.25) half.push_back(i);
    else zero.push_back(i);
  }
  auto pick = [&](const std::vector<int>& idx) {
    RMat B(vecs.rows(), static_cast<int>(idx.size()));
    for (size_t k = 0; k < idx.size(); ++k) B.col(k) = vecs.col(idx[k]);
    return B;
  };
  return {pick(one), pick(half), pick(zero), ev};
}

int division_dim(char F) {
  switch (F) {
    case 'R': return 1;
    case 'C': return 2;
    case 'H': return 4;
    case 'O': return 8;
  }
  throw Error("InvalidArgument", std::string("unknown division algebra ") + F);
}

RVec herm2_to_spin(char F, const Herm2Element& x) {
  const int m = division_dim(F);
  if (x.z.size() != m) throw Error("DescriptorMismatch", "off-diagonal entry has wrong length");
  RVec s(m + 2);
  s(0) = 0.5 * (x.a + x.b);
  s(1) = 0.5 * (x.a - x.b);
  s.tail(m) = x.z;
  return s;
}

Herm2Element spin_to_herm2(char F, const RVec& s) {
  const int m = division_dim(F);
  if (s.size() != m + 2) throw Error("DescriptorMismatch", "spin element has wrong length");
  return {s(0) + s(1), s(0) - s(1), s.tail(m)};
}

Herm2Element herm2_mul(char F, const Herm2Element& x, const Herm2Element& y) {
  const int m = division_dim(F);
  auto oct = [m](const RVec& v) {
    Octonion o;
    for (int k = 0; k < m; ++k) o[k] = v(k);
    return o;
  };
  Octonion z = oct(x.z), w = oct(y.z);
  // X = [[a, z], [z~, b]]
  Herm2Element r;
  r.a = x.a * y.a + 0.5 * ((z * w.tilde())[0] + (w * z.tilde())[0]);
  r.b = x.b * y.b + 0.5 * ((z.tilde() * w)[0] + (w.tilde() * z)[0]);
  Octonion off = 0.5 * (x.a * w + y.b * z + y.a * z + x.b * w);
  r.z = RVec(m);
  for (int k = 0; k < m; ++k) r.z(k) = off[k];
  return r;
}

}  // namespace hsm
