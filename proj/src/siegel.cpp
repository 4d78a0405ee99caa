#include "hsm/siegel.hpp"

#include <cmath>
#include <functional>
#include <sstream>

namespace hsm {

RealJordan RealJordan::from_descriptor(const JordanAlgebra& A) {
  RealJordan U;
  U.dim = A.dim();
  U.desc = A;
  U.unit = jordan_unit(A);
  for (int i = 0; i < U.dim; ++i) {
    RVec b = RVec::Zero(U.dim);
    b(i) = 1;
    U.L.push_back(hsm::mult_operator(A, b));
  }
  return U;
}

RMat RealJordan::mult_operator(const RVec& x) const {
  RMat T = RMat::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) T += x(i) * L[i];
  return T;
}

RVec RealJordan::mul(const RVec& x, const RVec& y) const { return mult_operator(x) * y; }

CVec RealJordan::mul(const CVec& x, const CVec& y) const {
  CVec r = CVec::Zero(dim);
  for (int i = 0; i < dim; ++i) r += x(i) * (L[i].cast<cd>() * y);
  return r;
}

const RMat& RealJordan::gram() const {
  if (!gram_) {
    if (desc) {
      gram_ = trace_gram(*desc);
    } else {
      RVec t(dim);
      for (int k = 0; k < dim; ++k) t(k) = L[k].trace();
      RMat G(dim, dim);
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) G(i, j) = t.dot(L[i].col(j));
      gram_ = 0.5 * (G + G.transpose());
    }
  }
  return *gram_;
}

double RealJordan::cone_margin(const RVec& x) const {
  if (desc) return hsm::cone_margin(*desc, x);
  Eigen::LLT<RMat> llt(gram());
  if (llt.info() != Eigen::Success) throw Error("NotPositive", "trace form is not positive definite");
  RMat Lc = llt.matrixL();
  RMat Li = Lc.inverse();
  RMat S = Lc.transpose() * mult_operator(x) * Li.transpose();
  Eigen::SelfAdjointEigenSolver<RMat> es(0.5 * (S + S.transpose()));
  return es.eigenvalues()(0);
}

CVec RealJordan::inverse(const CVec& x) const {
  if (desc) return jordan_inverse(*desc, x);
  CMat T = CMat::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) T += x(i) * L[i].cast<cd>();
  CVec x2 = T * x;
  CMat T2 = CMat::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) T2 += x2(i) * L[i].cast<cd>();
  CMat P = 2.0 * T * T - T2;
  Eigen::FullPivLU<CMat> lu(P);
  lu.setThreshold(1e-12);
  if (!lu.isInvertible()) throw Error("Singular", "element is not invertible");
  return lu.solve(x);
}

CVec SiegelData::h_map(const CVec& v, const CVec& w) const {
  if (v.size() != k || w.size() != k) throw Error("DescriptorMismatch", "vector of wrong length for V");
  CVec r = CVec::Zero(U.dim);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) r += std::conj(v(a)) * w(b) * H[a * k + b];
  return r;
}

CMat SiegelData::h_matrix() const {
  CMat h(k, k);
  const CVec e = U.unit.cast<cd>();
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) h(a, b) = U.tau(e, H[a * k + b]);
  return h;
}

void validate_siegel(const SiegelData& S, int samples, std::uint64_t seed) {
  if (static_cast<int>(S.H.size()) != S.k * S.k) throw Error("InvalidSiegelData", "H has wrong size");
  for (int a = 0; a < S.k; ++a)
    for (int b = 0; b < S.k; ++b)
      if ((S.H[a * S.k + b] - S.H[b * S.k + a].conjugate()).norm() > 1e-10)
        throw Error("InvalidSiegelData", "H is not Hermitian");
  if (S.k == 0) return;
  Eigen::SelfAdjointEigenSolver<CMat> es(S.h_matrix());
  if (!(es.eigenvalues()(0) > 1e-10)) throw Error("DegenerateH", "h is not positive definite");
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    CVec v = rng.cnormal_vec(S.k);
    if (!(S.U.cone_margin(S.h_map(v, v).real()) > -1e-10))
      throw Error("InvalidSiegelData", "H(v,v) is not in the closed cone");
  }
}

TriState tube_member(const RealJordan& U, const CVec& u, double tol) {
  if (u.size() != U.dim) throw Error("DescriptorMismatch", "element of wrong length");
  return classify_margin(U.cone_margin(u.imag()), tol);
}

TriState tube_member(const JordanAlgebra& A, const CVec& u, double tol) {
  return tube_member(RealJordan::from_descriptor(A), u, tol);
}

TriState siegel_member(const SiegelData& S, const CVec& u, const CVec& v, double tol) {
  if (u.size() != S.U.dim) throw Error("DescriptorMismatch", "u has wrong length");
  RVec y = u.imag() - S.h_map(v, v).real();
  return classify_margin(S.U.cone_margin(y), tol);
}

CMat r_operator(const SiegelData& S, const CVec& u) {
  if (u.size() != S.U.dim) throw Error("DescriptorMismatch", "u has wrong length");
  if (S.k == 0) return CMat(0, 0);
  CMat Au(S.k, S.k);
  for (int a = 0; a < S.k; ++a)
    for (int b = 0; b < S.k; ++b) Au(a, b) = S.U.tau(u, S.H[a * S.k + b]);
  Eigen::FullPivLU<CMat> lu(S.h_matrix());
  lu.setThreshold(1e-12);
  if (!lu.isInvertible()) throw Error("DegenerateH", "h is singular");
  return 0.5 * lu.solve(Au);
}

SymmetryReport symmetry_criteria(const SiegelData& S, double tol) {
  SymmetryReport rep;
  const int k = S.k, m = S.U.dim;
  if (k == 0) return rep;
  auto basis = [](int d, int i) { return basis_vector(d, i); };
  std::vector<CMat> Rb;
  for (int i = 0; i < m; ++i) Rb.push_back(r_operator(S, basis(m, i)));
  // (ii) on a real basis of U and complex bases of V
  for (int i = 0; i < m; ++i)
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        CVec v = basis(k, a), w = basis(k, b);
        CVec lhs = S.U.mul(CVec(basis(m, i)), S.h_map(v, w));
        CVec rhs = S.h_map(Rb[i] * v, w) + S.h_map(v, Rb[i] * w);
        const double r = (lhs - rhs).cwiseAbs().maxCoeff();
        if (r > rep.residual_ii) rep.residual_ii = r;
        if (r > tol && rep.criterion_ii) {
          rep.criterion_ii = false;
          if (rep.witness.empty()) {
            std::ostringstream os;
            os << "(ii): u=b" << i << " v=e" << a << " v'=e" << b << " residual " << r;
            rep.witness = os.str();
          }
        }
      }
  // (iii): quadratic in v'', polarized on e_c and e_c + e_d
  std::vector<CVec> v2;
  for (int c = 0; c < k; ++c) v2.push_back(basis(k, c));
  for (int c = 0; c < k; ++c)
    for (int d = c + 1; d < k; ++d) v2.push_back(basis(k, c) + basis(k, d));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (size_t c = 0; c < v2.size(); ++c) {
        CVec v = basis(k, a), vp = basis(k, b);
        const CVec& vpp = v2[c];
        CVec lhs = S.h_map(r_operator(S, S.h_map(vpp, vp)) * v, vpp);
        CVec rhs = S.h_map(vp, r_operator(S, S.h_map(v, vpp)) * vpp);
        const double r = (lhs - rhs).cwiseAbs().maxCoeff();
        if (r > rep.residual_iii) rep.residual_iii = r;
        if (r > tol && rep.criterion_iii) {
          rep.criterion_iii = false;
          std::ostringstream os;
          os << "(iii): v=e" << a << " v'=e" << b << " v''=";
          if (static_cast<int>(c) < k) os << "e" << c;
          else {
            int idx = static_cast<int>(c) - k;
            for (int p = 0; p < k; ++p)
              for (int q = p + 1; q < k; ++q)
                if (idx-- == 0) os << "e" << p << "+e" << q;
          }
          os << " residual " << r;
          if (rep.criterion_ii) rep.witness = os.str();
        }
      }
  return rep;
}

CVec cayley(const JordanAlgebra& A, const CVec& w) {
  if (w.size() != A.dim()) throw Error("DescriptorMismatch", "element of wrong length");
  const CVec e = jordan_unit(A).cast<cd>();
  return I_ * jordan_mul(A, CVec(e + w), jordan_inverse(A, CVec(e - w)));
}

CVec cayley_inverse(const JordanAlgebra& A, const CVec& u) {
  if (u.size() != A.dim()) throw Error("DescriptorMismatch", "element of wrong length");
  const CVec e = jordan_unit(A).cast<cd>();
  return jordan_mul(A, CVec(u - I_ * e), jordan_inverse(A, CVec(u + I_ * e)));
}

CVec SiegelJts::triple(const CVec& x, const CVec& y, const CVec& z) const {
  const int m = S.U.dim, k = S.k;
  if (x.size() != m + k || y.size() != m + k || z.size() != m + k)
    throw Error("DescriptorMismatch", "element of wrong length");
  const CVec u1 = x.head(m), u2 = y.head(m), u3 = z.head(m);
  const CVec v1 = x.tail(k), v2 = y.tail(k), v3 = z.tail(k);
  const CVec u2b = u2.conjugate();
  const RealJordan& U = S.U;
  CVec top = U.mul(U.mul(u1, u2b), u3) + U.mul(U.mul(u3, u2b), u1) - U.mul(U.mul(u1, u3), u2b);
  CVec out(m + k);
  if (k == 0) {
    out = top;
    return out;
  }
  const CMat R1b = r_operator(S, u1.conjugate()), R2b = r_operator(S, u2b), R3b = r_operator(S, u3.conjugate());
  top += 2.0 * S.h_map(R3b * v2, v1) + 2.0 * S.h_map(R1b * v2, v3);
  CVec bot = 2.0 * r_operator(S, u3) * (R2b * v1) + 2.0 * r_operator(S, u1) * (R2b * v3) +
             2.0 * r_operator(S, S.h_map(v2, v1)) * v3 + 2.0 * r_operator(S, S.h_map(v2, v3)) * v1;
  out << top, bot;
  return out;
}

CMat SiegelJts::box(const CVec& a, const CVec& b) const {
  const int d = dim();
  CMat M(d, d);
  for (int j = 0; j < d; ++j) M.col(j) = triple(a, b, basis_vector(d, j));
  return M;
}

CVec SiegelJts::distinguished() const {
  CVec e = CVec::Zero(dim());
  e.head(S.U.dim) = S.U.unit.cast<cd>();
  return e;
}

SiegelJts jts_from_siegel(const SiegelData& S, double tol) {
  validate_siegel(S);
  SymmetryReport rep = symmetry_criteria(S, tol);
  if (!rep.criterion_ii || !rep.criterion_iii) throw Error("NotSymmetric", rep.witness);
  return {S};
}

SiegelFromJts siegel_from_jts(const JtsDescriptor& J, const CVec& e) {
  check_element(J, e);
  if (!is_tripotent(J, e, 1e-8)) throw Error("NotTripotent", "{e,e,e} != e");
  const int d = J.dim();
  CMat vecs;
  RVec ev = la::selfadjoint_eigs(box(J, e, e), jts_inner_matrix(J), vecs);
  std::vector<int> one, half;
  for (int i = 0; i < ev.size(); ++i) {
    if (ev(i) > 0.75) one.push_back(i);
    else if (ev(i) > 0.25) half.push_back(i);
    else throw Error("NotPrincipal", "0 is an eigenvalue of e box e");
  }
  const int m = static_cast<int>(one.size()), k = static_cast<int>(half.size());
  CMat B1(d, m), Bh(d, k);
  for (int j = 0; j < m; ++j) B1.col(j) = vecs.col(one[j]);
  for (int j = 0; j < k; ++j) Bh.col(j) = vecs.col(half[j]);

  // W_1^+ = {a = B1 c : {e,a,e} = a}, solved over the reals.
  RMat M(2 * d, 2 * m);
  for (int j = 0; j < 2 * m; ++j) {
    CVec a = (j < m) ? CVec(B1.col(j)) : CVec(I_ * B1.col(j - m));
    M.col(j) = la::realify(CVec(triple(J, e, a, e) - a));
  }
  RMat Nsp = la::nullspace(M, 1e-9);
  if (Nsp.cols() != m) throw Error("NotPrincipal", "real form of W_1 has unexpected dimension");
  CMat Ub(d, m);
  for (int j = 0; j < m; ++j) {
    CVec c = Nsp.col(j).head(m).cast<cd>() + I_ * Nsp.col(j).tail(m).cast<cd>();
    Ub.col(j) = B1 * c;
  }
  auto ucoords = [&](const CVec& w) {
    double res = 0;
    CVec c = la::coords(Ub, w, &res);
    if (res > 1e-8 * std::max(1.0, w.norm())) throw Error("NotPrincipal", "element left W_1");
    return c;
  };

  SiegelFromJts out;
  RealJordan U;
  U.dim = m;
  for (int i = 0; i < m; ++i) {
    RMat Li(m, m);
    for (int j = 0; j < m; ++j) Li.col(j) = ucoords(triple(J, Ub.col(i), e, Ub.col(j))).real();
    U.L.push_back(Li);
  }
  U.unit = ucoords(e).real();
  out.S.U = U;
  out.S.k = k;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) out.S.H.push_back(ucoords(triple(J, e, Bh.col(a), Bh.col(b))));
  out.S.label = "W(" + J.name() + ")";
  out.Ubasis = Ub;
  out.Vbasis = Bh;
  return out;
}

double siegel_roundtrip_error(const JtsDescriptor& J, const SiegelFromJts& R) {
  const int d = J.dim();
  CMat F(d, R.Ubasis.cols() + R.Vbasis.cols());
  F << R.Ubasis, R.Vbasis;
  if (F.cols() != d) return INFINITY;
  Eigen::FullPivLU<CMat> lu(F);
  SiegelJts T{R.S};
  double err = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int l = 0; l < d; ++l) {
        CVec lhs = lu.solve(triple(J, F.col(i), F.col(j), F.col(l)));
        CVec rhs = T.triple(basis_vector(d, i), basis_vector(d, j), basis_vector(d, l));
        err = std::max(err, (lhs - rhs).cwiseAbs().maxCoeff());
      }
  return err;
}

// ---- catalog ----

SiegelData tube_data(const JordanAlgebra& A) {
  SiegelData S;
  S.U = RealJordan::from_descriptor(A);
  S.k = 0;
  S.label = "tube(" + A.name() + ")";
  return S;
}

SiegelData half_space() {
  SiegelData S;
  S.U = RealJordan::from_descriptor(JordanAlgebra::herm_r(1));
  S.k = 1;
  S.H = {CVec::Ones(1)};
  S.label = "half-space";
  return S;
}

namespace {

// Copies of C^m with H(e_i, e_j) = f(i, j) for each copy, zero across copies.
SiegelData block_copies(const JordanAlgebra& A, int m, const std::vector<std::function<CMat(int, int)>>& copies,
                        const std::string& label) {
  SiegelData S;
  S.U = RealJordan::from_descriptor(A);
  S.k = m * static_cast<int>(copies.size());
  S.H.assign(S.k * S.k, CVec::Zero(A.dim()));
  for (size_t c = 0; c < copies.size(); ++c)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) S.H[(c * m + i) * S.k + c * m + j] = from_matrix(A, copies[c](i, j));
  S.label = label;
  return S;
}

CMat unit_matrix(int n, int i, int j) {
  CMat E = CMat::Zero(n, n);
  E(i, j) = 1;
  return E;
}

std::vector<int> tag_ints(const std::string& s) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ':')) {
    try {
      size_t used = 0;
      v.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw 0;
    } catch (...) {
      throw Error("ParseError", "bad catalog tag component '" + tok + "'");
    }
  }
  return v;
}

}  // namespace

SiegelData build_catalog(const std::string& tag) {
  if (tag == "half-space") return half_space();
  if (tag == "VI0") return tube_data(JordanAlgebra::albert());
  if (tag.rfind("tube(", 0) == 0 && tag.back() == ')') return tube_data(JordanAlgebra::parse(tag.substr(5, tag.size() - 6)));
  auto c = tag.find(':');
  if (c == std::string::npos) throw Error("ParseError", "bad catalog tag '" + tag + "'");
  const std::string head = tag.substr(0, c);
  const auto v = tag_ints(tag.substr(c + 1));
  for (int x : v)
    if (x < 0) throw Error("ParseError", "negative catalog parameter");
  if (head == "I" && v.size() == 3 && v[0] >= 1) {
    const int n = v[0];
    std::vector<std::function<CMat(int, int)>> copies;
    for (int r = 0; r < v[1]; ++r) copies.push_back([n](int i, int j) { return unit_matrix(n, j, i); });  // w v*
    for (int s = 0; s < v[2]; ++s) copies.push_back([n](int i, int j) { return unit_matrix(n, i, j); });  // conj(v) w^t
    return block_copies(JordanAlgebra::herm_c(n), n, copies, tag);
  }
  if (head == "III" && v.size() == 2 && v[0] >= 1) {
    const int n = v[0];
    std::vector<std::function<CMat(int, int)>> copies(
        v[1], [n](int i, int j) { return CMat(0.5 * (unit_matrix(n, j, i) + unit_matrix(n, i, j))); });
    return block_copies(JordanAlgebra::herm_r(n), n, copies, tag);
  }
  if (head == "II" && v.size() == 2 && v[0] >= 1) {
    const int n = v[0];
    CMat J = CMat::Zero(2 * n, 2 * n);
    J.topRightCorner(n, n).setIdentity();
    J.bottomLeftCorner(n, n) = -CMat::Identity(n, n);
    std::vector<std::function<CMat(int, int)>> copies(v[1], [n, J](int i, int j) {
      CMat W = unit_matrix(2 * n, j, i);
      return CMat(0.5 * (W + J * W.transpose() * J.inverse()));
    });
    return block_copies(JordanAlgebra::herm_h(n), 2 * n, copies, tag);
  }
  if (head == "IV") throw Error("NotConstructible", "spin representations are not constructed");
  throw Error("ParseError", "bad catalog tag '" + tag + "'");
}

}  // namespace hsm
