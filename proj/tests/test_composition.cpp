#include <doctest.h>

#include "hsm/composition.hpp"
#include "oracles.hpp"

using namespace hsm;

namespace {
Octonion rand_oct(Rng& r) {
  Octonion x;
  for (int k = 0; k < 8; ++k) x[k] = r.normal();
  return x;
}
ComplexOctonion rand_coct(Rng& r) { return {rand_oct(r), rand_oct(r)}; }
Octonion pair(Quaternion a, Quaternion b) { return {a, b}; }
const Quaternion qi{0, 1, 0, 0}, qj{0, 0, 1, 0}, qk{0, 0, 0, 1};
}  // namespace

TEST_CASE("octonion product: examples") {
  const Octonion x = pair(qi, qj);
  CHECK(max_abs_diff(Octonion::unit() * x, x) == 0.0);
  CHECK(max_abs_diff(x * Octonion::unit(), x) == 0.0);

  // quaternion subalgebra: (1+i) j = j + k
  const Octonion p = pair({1, 1, 0, 0}, {}) * pair(qj, {});
  CHECK(max_abs_diff(p, pair({0, 0, 1, 1}, {})) == 0.0);

  const Octonion a = pair({1, 1, 0, 0}, qj), b = pair(qk, Quaternion::unit());
  CHECK(std::abs((a * b).norm2() - a.norm2() * b.norm2()) < 1e-12);
}

TEST_CASE("octonion product matches a recursive Cayley-Dickson oracle") {
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      oracle::Vec x(8, 0), y(8, 0);
      x[i] = y[j] = 1;  // note: x and y distinct even when i == j
      const oracle::Vec r = oracle::cd_mul(x, y);
      const auto t = oct_table()[i][j];
      const auto o = (Octonion::basis(i) * Octonion::basis(j)).to_array();
      for (int k = 0; k < 8; ++k) {
        CHECK(o[k] == r[k]);
        CHECK(t[k] == r[k]);
      }
    }
  Rng rng(3);
  for (int s = 0; s < 50; ++s) {
    const Octonion x = rand_oct(rng), y = rand_oct(rng);
    const oracle::Vec r = oracle::cd_mul(oracle::to_vec(x), oracle::to_vec(y));
    const auto o = oct_mul(x, y).to_array();
    for (int k = 0; k < 8; ++k) CHECK(std::abs(o[k] - r[k]) < 1e-12);
  }
}

TEST_CASE("octonion pairing") {
  const Octonion e = Octonion::unit();
  CHECK(oct_pairing(e, e) == doctest::Approx(2.0));
  CHECK(std::abs(oct_pairing(e, pair(qi, {}))) < 1e-15);
  Rng rng(5);
  for (int s = 0; s < 20; ++s) {
    const Octonion x = rand_oct(rng), y = rand_oct(rng);
    CHECK(std::abs(oct_pairing(x, y) - oct_pairing(y, x)) < 1e-12);
    // <x,y> = 2 sum x_k y_k in the orthonormal basis
    double dot = 0;
    for (int k = 0; k < 8; ++k) dot += x[k] * y[k];
    CHECK(std::abs(oct_pairing(x, y) - 2 * dot) < 1e-10);
  }
}

TEST_CASE("octonion invariants") {
  Rng rng(42);
  double alt = 0, mult = 0, anti = 0, assoc_gap = 0;
  for (int s = 0; s < 200; ++s) {
    const Octonion x = rand_oct(rng), y = rand_oct(rng), z = rand_oct(rng);
    alt = std::max(alt, max_abs_diff(x * (x * y), (x * x) * y));
    alt = std::max(alt, max_abs_diff((y * x) * x, y * (x * x)));
    mult = std::max(mult, std::abs((x * y).norm2() - x.norm2() * y.norm2()) / (x.norm2() * y.norm2()));
    anti = std::max(anti, max_abs_diff((x * y).tilde(), y.tilde() * x.tilde()));
    assoc_gap = std::max(assoc_gap, max_abs_diff((x * y) * z, x * (y * z)));
  }
  CHECK(alt < 1e-12 * 100);  // entries are O(10); 1e-12 relative
  CHECK(mult < 1e-12);
  CHECK(anti < 1e-12 * 10);
  CHECK(assoc_gap > 1e-6);  // non-associative
}

TEST_CASE("complex octonions") {
  const ComplexOctonion e = ComplexOctonion::unit();
  // bar(i e) = -i bar(e)
  CHECK(max_abs_diff((I_ * e).bar(), cd(0, -1) * e.bar()) == 0.0);
  Rng rng(9);
  for (int s = 0; s < 20; ++s) {
    const ComplexOctonion x = rand_coct(rng), y = rand_coct(rng);
    CHECK(max_abs_diff(x.tilde().tilde(), x) == 0.0);
    CHECK(max_abs_diff(x.bar().bar(), x) == 0.0);
    // real parts multiply like O
    CHECK(max_abs_diff((ComplexOctonion::real(x.re) * ComplexOctonion::real(y.re)).re, x.re * y.re) < 1e-13);
    // C-bilinear product against the oracle
    std::vector<cd> xv(8), yv(8);
    for (int k = 0; k < 8; ++k) xv[k] = x[k], yv[k] = y[k];
    const auto r = oracle::coct_mul(xv, yv);
    const ComplexOctonion p = x * y;
    for (int k = 0; k < 8; ++k) CHECK(std::abs(p[k] - r[k]) < 1e-12);
    // x x~ is a scalar multiple of e
    const ComplexOctonion n = x * x.tilde();
    for (int k = 1; k < 8; ++k) CHECK(std::abs(n[k]) < 1e-12);
    CHECK(std::abs(n[0] - x.norm2()) < 1e-12);
    const ComplexOctonionOps ops = coct_ops(x);
    CHECK(max_abs_diff(ops.tilde, x.tilde()) == 0.0);
    CHECK(std::abs(ops.norm - x.norm2()) == 0.0);
  }
}
