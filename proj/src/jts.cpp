#include "hsm/jts.hpp"

#include <cmath>
#include <map>
#include <mutex>

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

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> v;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t c = s.find(':', pos);
    std::string tok = s.substr(pos, c == std::string::npos ? std::string::npos : c - pos);
    try {
      v.push_back(std::stoi(tok));
    } catch (...) {
      throw Error("ParseError", "bad integer '" + tok + "'");
    }
    if (c == std::string::npos) break;
    pos = c + 1;
  }
  return v;
}

}  // namespace

JtsDescriptor JtsDescriptor::parse(const std::string& s) {
  if (s.rfind("prod(", 0) == 0 && s.back() == ')') {
    std::vector<JtsDescriptor> parts;
    for (const auto& p : split_top(s.substr(5, s.size() - 6))) parts.push_back(parse(p));
    if (parts.empty()) throw Error("ParseError", "empty product");
    return product(parts);
  }
  if (s.rfind("jordan(", 0) == 0 && s.back() == ')') return from_jordan(JordanAlgebra::parse(s.substr(7, s.size() - 8)));
  if (s == "V") return type_v();
  if (s == "VI") return type_vi();
  auto colon = s.find(':');
  if (colon == std::string::npos) throw Error("ParseError", "bad JTS descriptor '" + s + "'");
  std::string head = s.substr(0, colon);
  auto v = parse_ints(s.substr(colon + 1));
  for (int k : v)
    if (k < 1) throw Error("ParseError", "sizes must be positive");
  if (head == "I" && v.size() == 2) return type_i(v[0], v[1]);
  if (head == "II" && v.size() == 1) return type_ii(v[0]);
  if (head == "III" && v.size() == 1) return type_iii(v[0]);
  if (head == "IV" && v.size() == 1) return type_iv(v[0]);
  throw Error("ParseError", "bad JTS descriptor '" + s + "'");
}

int JtsDescriptor::dim() const {
  switch (kind) {
    case Kind::I: return p * q;
    case Kind::II: return n * (n - 1) / 2;
    case Kind::III: return n * (n + 1) / 2;
    case Kind::IV: return n;
    case Kind::V: return 16;
    case Kind::VI: return 27;
    case Kind::FromJordan: return alg.at(0).dim();
    case Kind::Product: {
      int d = 0;
      for (const auto& x : parts) d += x.dim();
      return d;
    }
  }
  return 0;
}

int JtsDescriptor::table_rank() const {
  switch (kind) {
    case Kind::I: return std::min(p, q);
    case Kind::II: return n / 2;
    case Kind::III: return n;
    case Kind::IV: return std::min(2, n);
    case Kind::V: return 2;
    case Kind::VI: return 3;
    case Kind::FromJordan: return alg.at(0).rank();
    case Kind::Product: {
      int r = 0;
      for (const auto& x : parts) r += x.table_rank();
      return r;
    }
  }
  return 0;
}

std::string JtsDescriptor::name() const {
  switch (kind) {
    case Kind::I: return "I:" + std::to_string(p) + ":" + std::to_string(q);
    case Kind::II: return "II:" + std::to_string(n);
    case Kind::III: return "III:" + std::to_string(n);
    case Kind::IV: return "IV:" + std::to_string(n);
    case Kind::V: return "V";
    case Kind::VI: return "VI";
    case Kind::FromJordan: return "jordan(" + alg.at(0).name() + ")";
    case Kind::Product: {
      std::string s = "prod(";
      for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i].name();
      return s + ")";
    }
  }
  return "?";
}

void check_element(const JtsDescriptor& J, const CVec& x) {
  if (x.size() != J.dim())
    throw Error("DescriptorMismatch", "element of length " + std::to_string(x.size()) + " for " + J.name());
}

CVec basis_vector(int d, int k) {
  CVec b = CVec::Zero(d);
  b(k) = 1;
  return b;
}

CVec jts_conj(const CVec& x) { return x.conjugate(); }

CMat jts_to_matrix(const JtsDescriptor& J, const CVec& x) {
  check_element(J, x);
  switch (J.kind) {
    case JtsDescriptor::Kind::I: {
      CMat M(J.p, J.q);
      for (int i = 0; i < J.p; ++i)
        for (int j = 0; j < J.q; ++j) M(i, j) = x(i * J.q + j);
      return M;
    }
    case JtsDescriptor::Kind::II: {
      CMat M = CMat::Zero(J.n, J.n);
      int k = 0;
      for (int i = 0; i < J.n; ++i)
        for (int j = i + 1; j < J.n; ++j) {
          M(i, j) = x(k);
          M(j, i) = -x(k++);
        }
      return M;
    }
    case JtsDescriptor::Kind::III: {
      CMat M(J.n, J.n);
      int k = 0;
      for (int i = 0; i < J.n; ++i)
        for (int j = i; j < J.n; ++j) M(i, j) = M(j, i) = x(k++);
      return M;
    }
    default: throw Error("Unsupported", "no matrix view for " + J.name());
  }
}

CVec jts_from_matrix(const JtsDescriptor& J, const CMat& M, double tol) {
  auto shape = [&](int r, int c) {
    if (M.rows() != r || M.cols() != c)
      throw Error("ShapeError", "expected a " + std::to_string(r) + "x" + std::to_string(c) + " matrix");
  };
  double scale = std::max(1.0, la::max_abs(M));
  switch (J.kind) {
    case JtsDescriptor::Kind::I: {
      shape(J.p, J.q);
      CVec x(J.dim());
      for (int i = 0; i < J.p; ++i)
        for (int j = 0; j < J.q; ++j) x(i * J.q + j) = M(i, j);
      return x;
    }
    case JtsDescriptor::Kind::II: {
      shape(J.n, J.n);
      if (la::max_abs(CMat(M + M.transpose())) > tol * scale) throw Error("ShapeError", "matrix is not skew-symmetric");
      CVec x(J.dim());
      int k = 0;
      for (int i = 0; i < J.n; ++i)
        for (int j = i + 1; j < J.n; ++j) x(k++) = M(i, j);
      return x;
    }
    case JtsDescriptor::Kind::III: {
      shape(J.n, J.n);
      if (la::max_abs(CMat(M - M.transpose())) > tol * scale) throw Error("ShapeError", "matrix is not symmetric");
      CVec x(J.dim());
      int k = 0;
      for (int i = 0; i < J.n; ++i)
        for (int j = i; j < J.n; ++j) x(k++) = M(i, j);
      return x;
    }
    default: throw Error("Unsupported", "no matrix view for " + J.name());
  }
}

namespace {

using CO = ComplexOctonion;

CVec triple_v(const CVec& x, const CVec& y, const CVec& z, Convention conv) {
  CO a1 = CO::from_vec(x, 0), a2 = CO::from_vec(x, 8);
  CO B1 = CO::from_vec(y, 0).bar(), B2 = CO::from_vec(y, 8).bar();
  CO c1 = CO::from_vec(z, 0), c2 = CO::from_vec(z, 8);
  CO r1 = (a1 * B1.tilde()) * c1 + (c1 * B1.tilde()) * a1 + (a1 * B2) * c2.tilde() + (c1 * B2) * a2.tilde();
  CO r2;
  if (conv == Convention::Printed) {
    r2 = a1.tilde() * (B1 * c2) + c1.tilde() * (B1 * a2) + a2.tilde() * (B2 * c2) + c2.tilde() * (B2 * a2);
  } else {
    r2 = a1.tilde() * (B1 * c2) + c1.tilde() * (B1 * a2) + (a2 * B2.tilde()) * c2 + (c2 * B2.tilde()) * a2;
    r1 = cd(0.5) * r1;
    r2 = cd(0.5) * r2;
  }
  CVec out(16);
  out << r1.to_vec(), r2.to_vec();
  return out;
}

CVec triple_vi(const CVec& x, const CVec& y, const CVec& z, Convention conv) {
  H3Element a = H3Element::unflatten(x), b = H3Element::unflatten(y), c = H3Element::unflatten(z);
  H3Element r = h3_form(a, b) * c + h3_form(c, b) * a - freudenthal(freudenthal(a, c), b.bar());
  if (conv == Convention::Corrected) r = cd(0.5) * r;
  return r.flatten();
}

}  // namespace

CVec triple(const JtsDescriptor& J, const CVec& x, const CVec& y, const CVec& z, Convention conv) {
  check_element(J, x);
  check_element(J, y);
  check_element(J, z);
  switch (J.kind) {
    case JtsDescriptor::Kind::I:
    case JtsDescriptor::Kind::II:
    case JtsDescriptor::Kind::III: {
      CMat X = jts_to_matrix(J, x), Y = jts_to_matrix(J, y), Z = jts_to_matrix(J, z);
      CMat R = 0.5 * (X * Y.adjoint() * Z + Z * Y.adjoint() * X);
      return jts_from_matrix(J, R, 1e-8);
    }
    case JtsDescriptor::Kind::IV: {
      CVec yb = y.conjugate();
      cd xy = x.transpose() * yb, zy = z.transpose() * yb, xz = x.transpose() * z;
      CVec r = xy * z + zy * x - xz * yb;
      return conv == Convention::Printed ? CVec(-r) : r;
    }
    case JtsDescriptor::Kind::V: return triple_v(x, y, z, conv);
    case JtsDescriptor::Kind::VI: return triple_vi(x, y, z, conv);
    case JtsDescriptor::Kind::FromJordan: {
      const JordanAlgebra& A = J.alg.at(0);
      CVec yb = y.conjugate();
      return jordan_mul(A, jordan_mul(A, x, yb), z) + jordan_mul(A, jordan_mul(A, z, yb), x) -
             jordan_mul(A, jordan_mul(A, x, z), yb);
    }
    case JtsDescriptor::Kind::Product: {
      CVec r(J.dim());
      int off = 0;
      for (const auto& P : J.parts) {
        const int d = P.dim();
        r.segment(off, d) = triple(P, x.segment(off, d), y.segment(off, d), z.segment(off, d), conv);
        off += d;
      }
      return r;
    }
  }
  return {};
}

CMat box(const JtsDescriptor& J, const CVec& a, const CVec& b, Convention conv) {
  const int d = J.dim();
  CMat M(d, d);
  for (int j = 0; j < d; ++j) M.col(j) = triple(J, a, b, basis_vector(d, j), conv);
  return M;
}

const CMat& jts_trace_gram(const JtsDescriptor& J) {
  static std::mutex mu;
  static std::map<std::string, CMat> cache;
  const std::string key = J.name();
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const int d = J.dim();
  CMat T(d, d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      cd t = 0;
      CVec ej = basis_vector(d, j), ek = basis_vector(d, k);
      for (int m = 0; m < d; ++m) t += triple(J, ej, ek, basis_vector(d, m))(m);
      T(j, k) = t;
    }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(T)).first->second;
}

cd jts_trace_form(const JtsDescriptor& J, const CVec& x, const CVec& y) {
  check_element(J, x);
  check_element(J, y);
  return (x.transpose() * jts_trace_gram(J) * y.conjugate())(0, 0);
}

CMat jts_inner_matrix(const JtsDescriptor& J) {
  CMat P = jts_trace_gram(J).transpose();
  return 0.5 * (P + P.adjoint());
}

CMat jts_adjoint(const JtsDescriptor& J, const CMat& A) {
  CMat P = jts_inner_matrix(J);
  return P.ldlt().solve(A.adjoint() * P);
}

RVec box_spectrum(const JtsDescriptor& J, const CVec& a) {
  return la::selfadjoint_eigs(box(J, a, a), jts_inner_matrix(J));
}

bool is_tripotent(const JtsDescriptor& J, const CVec& e, double tol) {
  return la::max_abs(CMat(triple(J, e, e, e) - e)) <= tol;
}

bool orthogonal_tripotents(const JtsDescriptor& J, const CVec& e, const CVec& f, double tol) {
  return la::max_abs(box(J, e, f)) <= tol;
}

std::vector<CVec> jordan_frame(const JtsDescriptor& J, std::uint64_t seed) {
  const int d = J.dim();
  for (int attempt = 0; attempt < 10; ++attempt) {
    Rng rng(seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(attempt));
    CMat W = CMat::Identity(d, d);
    std::vector<CVec> frame;
    bool ok = true;
    while (W.cols() > 0 && ok) {
      CVec x = W * rng.cnormal_vec(static_cast<int>(W.cols()));
      x.normalize();
      for (int it = 0; it < 200; ++it) {
        CVec y = W * (W.adjoint() * triple(J, x, x, x));
        double ny = y.norm();
        if (!(ny > 0)) {
          ok = false;
          break;
        }
        y /= ny;
        double delta = (y - x).norm();
        x = y;
        if (delta < 1e-14) break;
      }
      if (!ok) break;
      CVec t = triple(J, x, x, x);
      double mu = (x.adjoint() * t)(0, 0).real() / x.squaredNorm();
      if (!(mu > 0)) {
        ok = false;
        break;
      }
      CVec e = x / std::sqrt(mu);
      if (!is_tripotent(J, e, 1e-9)) {
        ok = false;
        break;
      }
      frame.push_back(e);
      CMat K = la::nullspace(CMat(box(J, e, e) * W), 1e-8);
      W = W * K;
    }
    if (!ok) continue;
    for (size_t i = 0; i < frame.size() && ok; ++i)
      for (size_t j = i + 1; j < frame.size() && ok; ++j)
        if (!orthogonal_tripotents(J, frame[i], frame[j], 1e-8)) ok = false;
    if (ok) return frame;
  }
  throw Error("FrameSearchFailed", "could not certify a maximal frame for " + J.name());
}

std::vector<CVec> standard_frame(const JtsDescriptor& J) {
  const int d = J.dim();
  std::vector<CVec> f;
  switch (J.kind) {
    case JtsDescriptor::Kind::I:
      for (int i = 0; i < std::min(J.p, J.q); ++i) f.push_back(basis_vector(d, i * J.q + i));
      return f;
    case JtsDescriptor::Kind::II:
      for (int k = 0; 2 * k + 1 < J.n; ++k) {
        CMat M = CMat::Zero(J.n, J.n);
        M(2 * k, 2 * k + 1) = 1;
        M(2 * k + 1, 2 * k) = -1;
        f.push_back(jts_from_matrix(J, M));
      }
      return f;
    case JtsDescriptor::Kind::III:
      for (int i = 0; i < J.n; ++i) {
        CMat M = CMat::Zero(J.n, J.n);
        M(i, i) = 1;
        f.push_back(jts_from_matrix(J, M));
      }
      return f;
    case JtsDescriptor::Kind::IV: {
      if (J.n == 1) return {basis_vector(1, 0)};
      CVec a = CVec::Zero(d), b = CVec::Zero(d);
      a(0) = b(0) = 0.5;
      a(1) = 0.5 * I_;
      b(1) = -0.5 * I_;
      return {a, b};
    }
    case JtsDescriptor::Kind::VI:
      for (int i = 0; i < 3; ++i) f.push_back(basis_vector(27, i));
      return f;
    case JtsDescriptor::Kind::FromJordan: {
      const JordanAlgebra& A = J.alg.at(0);
      if (A.kind == JordanAlgebra::Kind::SpinFactor) {
        if (A.n == 0) return {basis_vector(1, 0)};
        CVec a = CVec::Zero(d), b = CVec::Zero(d);
        a(0) = b(0) = 0.5;
        a(1) = 0.5;
        b(1) = -0.5;
        return {a, b};
      }
      if (A.kind == JordanAlgebra::Kind::DirectSum) break;
      for (int i = 0; i < A.rank(); ++i) f.push_back(basis_vector(d, i));
      return f;
    }
    case JtsDescriptor::Kind::Product: {
      int off = 0;
      for (const auto& P : J.parts) {
        for (const auto& e : standard_frame(P)) {
          CVec g = CVec::Zero(d);
          g.segment(off, P.dim()) = e;
          f.push_back(g);
        }
        off += P.dim();
      }
      return f;
    }
    default: break;
  }
  return jordan_frame(J, 42);
}

int rank(const JtsDescriptor& J, std::uint64_t seed) { return static_cast<int>(jordan_frame(J, seed).size()); }

CVec principal_tripotent(const JtsDescriptor& J) {
  CVec e = CVec::Zero(J.dim());
  for (const auto& f : standard_frame(J)) e += f;
  return e;
}

}  // namespace hsm
