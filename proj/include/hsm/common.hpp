#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace hsm {

using cd = std::complex<double>;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

inline constexpr cd I_ = cd(0.0, 1.0);

// Every failure carries a short machine-readable code (NotIdempotent, Singular, ...).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

enum class TriState { Member, Boundary, Exterior };
const char* to_string(TriState s);
TriState classify_margin(double margin, double tol);

// Deterministic across standard libraries: the engine is specified by the
// standard, the distributions are not, so both are done by hand.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double uniform();
  double normal();
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  cd cnormal() { double r = normal(); return {r, normal()}; }
  RVec normal_vec(int n);
  CVec cnormal_vec(int n);
  std::uint64_t next() { return eng_(); }
  static const char* algorithm() { return "mt19937_64/u53/box-muller"; }

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

namespace la {

// Orthonormal basis of the (numerical) kernel of A.
CMat nullspace(const CMat& A, double tol = 1e-9);
RMat nullspace(const RMat& A, double tol = 1e-9);

// Eigenvalues (ascending) of A, self-adjoint for <x,y> = y^H P x, P > 0.
RVec selfadjoint_eigs(const CMat& A, const CMat& P);
// Same, also returning P-orthonormal eigenvectors as columns.
RVec selfadjoint_eigs(const CMat& A, const CMat& P, CMat& vecs);

double max_abs(const CMat& A);
double max_abs(const RMat& A);

// Least-squares coordinates of y in the column span of B; sets resid to the residual norm.
CVec coords(const CMat& B, const CVec& y, double* resid = nullptr);

// Real-linear structure: complex vector <-> stacked (re, im).
RVec realify(const CVec& v);
CVec complexify(const RVec& v);

}  // namespace la

}  // namespace hsm
