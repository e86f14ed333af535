#include <catch_amalgamated.hpp>

#include <random>

#include "gybe/error.hpp"
#include "gybe/fusion.hpp"
#include "gybe/limits.hpp"
#include "gybe/matrix.hpp"

using gybe::CycloScalar;
using gybe::direct_sum;
using gybe::ExactMatrix;
using gybe::kron;
using gybe::make_rational;
using gybe::root_of_unity;

namespace {

CycloScalar rational(long p, long q = 1) { return CycloScalar(p, q); }

ExactMatrix hadamard() {
  const CycloScalar h = CycloScalar::from_terms(
      24, {{make_rational(1, 2), 3}, {make_rational(1, 2), 21}});
  ExactMatrix m(2, 2);
  m.set(0, 0, h);
  m.set(0, 1, h);
  m.set(1, 0, h);
  m.set(1, 1, -h);
  return m;
}

ExactMatrix sigma_x() {
  ExactMatrix m(2, 2);
  m.set(0, 1, rational(1));
  m.set(1, 0, rational(1));
  return m;
}

ExactMatrix one_by_one(long v) {
  ExactMatrix m(1, 1);
  m.set(0, 0, rational(v));
  return m;
}

ExactMatrix paper_p() {
  return direct_sum({one_by_one(1), sigma_x(), one_by_one(1), one_by_one(1),
                     sigma_x(), one_by_one(1)});
}

ExactMatrix random_matrix(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> exp(0, 23);
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 4);
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.set(i, j, CycloScalar::from_terms(
                      24, {{make_rational(num(rng), den(rng)), exp(rng)}}));
  return m;
}

// Invertible by construction: unit triangular times a unit diagonal.
ExactMatrix random_invertible(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> exp(0, 23);
  std::uniform_int_distribution<long> num(-2, 2);
  ExactMatrix lower = ExactMatrix::identity(n);
  ExactMatrix upper = ExactMatrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i > j) lower.set(i, j, rational(num(rng)));
      if (i < j) upper.set(i, j, rational(num(rng)));
    }
  ExactMatrix diag(n, n);
  for (int i = 0; i < n; ++i) diag.set(i, i, root_of_unity(exp(rng), 24));
  return lower * diag * upper;
}

}  // namespace

TEST_CASE("kron of identities") {
  CHECK(kron(ExactMatrix::identity(2), ExactMatrix::identity(2)) ==
        ExactMatrix::identity(4));
  CHECK(kron(paper_p(), ExactMatrix::identity(1)) == paper_p());
}

TEST_CASE("hadamard squares to identity, directly and under kron") {
  const ExactMatrix h = hadamard();
  // Oracle: 2x2 product by hand; each entry is (1/2)(1 ± 1).
  const CycloScalar half = rational(1, 2);
  const CycloScalar hh00 = half * rational(2);
  CHECK(hh00 == rational(1));
  CHECK(h * h == ExactMatrix::identity(2));
  const ExactMatrix hh = kron(h, h);
  CHECK(hh * hh == ExactMatrix::identity(4));
  CHECK(h.is_unitary());
}

TEST_CASE("direct sums build the published permutation") {
  CHECK(direct_sum({one_by_one(1), one_by_one(1)}) == ExactMatrix::identity(2));
  const ExactMatrix p = paper_p();
  CHECK(p * p == ExactMatrix::identity(8));  // P = P^{-1}
  CHECK(p == p.inverse());
  CHECK_THROWS_AS(direct_sum({}), gybe::Error);
}

TEST_CASE("conjugating the block sum by P gives the published R-matrix") {
  const ExactMatrix h = hadamard();
  auto block = [&](long p1, long p2) {
    ExactMatrix d(2, 2);
    d.set(0, 0, root_of_unity(p1, 6));
    d.set(1, 1, root_of_unity(p2, 6));
    return h * d * h;
  };
  const ExactMatrix b =
      direct_sum({block(2, 4), block(5, 4), block(5, 4), block(2, 4)});
  const ExactMatrix p = paper_p();
  CHECK(p.inverse() * b * p == gybe::reference_jk6_r_matrix());
}

TEST_CASE("matrix inverse is exact and verified") {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 20; ++iter) {
    const ExactMatrix m = random_invertible(rng, 4);
    CHECK(m * m.inverse() == ExactMatrix::identity(4));
  }
  ExactMatrix singular(2, 2);
  singular.set(0, 0, rational(1));
  singular.set(1, 0, rational(2));
  CHECK(singular.is_singular());
  CHECK_THROWS_WITH(singular.inverse(),
                    Catch::Matchers::ContainsSubstring("stage 1"));
}

TEST_CASE("kron properties") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 15; ++iter) {
    const ExactMatrix a = random_matrix(rng, 2);
    const ExactMatrix a2 = random_matrix(rng, 2);
    const ExactMatrix b = random_matrix(rng, 3);
    const ExactMatrix c = random_matrix(rng, 2);
    const ExactMatrix d = random_matrix(rng, 3);
    CHECK(kron(a, kron(b, c)) == kron(kron(a, b), c));
    CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
    CHECK(kron(a + a2, b) == kron(a, b) + kron(a2, b));
  }
}

TEST_CASE("direct sum properties") {
  std::mt19937_64 rng(7);
  const ExactMatrix a = random_matrix(rng, 2);
  const ExactMatrix b = random_matrix(rng, 3);
  const ExactMatrix c = random_matrix(rng, 2);
  CHECK(direct_sum({direct_sum({a, b}), c}) == direct_sum({a, b, c}));
  CHECK(direct_sum({a, b, c}).trace() == a.trace() + b.trace() + c.trace());
}

TEST_CASE("unitarity is preserved by the matrix operations") {
  const ExactMatrix h = hadamard();
  const ExactMatrix p = paper_p();
  ExactMatrix d(2, 2);
  d.set(0, 0, root_of_unity(2, 6));
  d.set(1, 1, root_of_unity(4, 6));
  CHECK(h.is_unitary());
  CHECK(d.is_unitary());
  CHECK((h * d).is_unitary());
  CHECK(kron(h, d).is_unitary());
  CHECK(direct_sum({h, d}).is_unitary());
  CHECK(h.inverse().is_unitary());
  CHECK(h.transpose().is_unitary());
  CHECK(h.conjugate_transpose().is_unitary());
  CHECK(p.is_unitary());
}

TEST_CASE("annihilation check certifies eigenvalue sets") {
  CHECK(gybe::annihilation_check(ExactMatrix::identity(2), {rational(1)}));
  CHECK_FALSE(gybe::annihilation_check(sigma_x(), {rational(1)}));
  CHECK(gybe::annihilation_check(sigma_x(), {rational(1), rational(-1)}));
  CHECK_THROWS_AS(gybe::annihilation_check(sigma_x(), {}), gybe::Error);

  CHECK(gybe::annihilation_check(
      gybe::reference_jk6_r_matrix(),
      {root_of_unity(2, 6), root_of_unity(4, 6), root_of_unity(5, 6)}));
  // The Ising matrix squares to I: spectrum {1, -1}.
  CHECK(gybe::annihilation_check(gybe::reference_ising_r_matrix(),
                                 {rational(1), rational(-1)}));
}

TEST_CASE("entry cap rejects oversized kron products") {
  const std::size_t saved = gybe::limits::matrix_entry_cap();
  gybe::limits::set_matrix_entry_cap(64);
  CHECK_THROWS_AS(kron(ExactMatrix::identity(8), ExactMatrix::identity(8)),
                  gybe::Error);
  gybe::limits::set_matrix_entry_cap(saved);
}

TEST_CASE("matrix file round trip") {
  std::mt19937_64 rng(31337);
  const ExactMatrix m = random_matrix(rng, 3);
  const gybe::Json j = gybe::matrix_to_json(m);
  CHECK(gybe::matrix_from_json(j) == m);
  const gybe::Json dec = gybe::matrix_to_decimal_json(m);
  CHECK(dec.at("non_authoritative").get<bool>());
  CHECK_THROWS_AS(gybe::matrix_from_json(dec), gybe::Error);
}
