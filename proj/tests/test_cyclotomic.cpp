#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "gybe/cyclotomic.hpp"
#include "gybe/error.hpp"

using gybe::CycloScalar;
using gybe::CycloTerm;
using gybe::make_rational;
using gybe::Rational;
using gybe::root_of_unity;

namespace {

CycloScalar rational(long p, long q = 1) { return CycloScalar(p, q); }

// Independent oracle: evaluate a term list with plain trig.
std::complex<double> trig_eval(int order, const std::vector<CycloTerm>& ts) {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& t : ts) {
    const double angle = 2.0 * M_PI * t.exponent / order;
    acc += gybe::rat_to_double(t.coeff) *
           std::complex<double>{std::cos(angle), std::sin(angle)};
  }
  return acc;
}

CycloScalar random_scalar(std::mt19937_64& rng, int order, int max_terms,
                          long coeff_num_range, long coeff_den_range) {
  std::uniform_int_distribution<int> term_count(0, max_terms);
  std::uniform_int_distribution<int> exp(0, order - 1);
  std::uniform_int_distribution<long> num(-coeff_num_range, coeff_num_range);
  std::uniform_int_distribution<long> den(1, coeff_den_range);
  std::vector<CycloTerm> ts;
  const int k = term_count(rng);
  for (int i = 0; i < k; ++i)
    ts.push_back({make_rational(num(rng), den(rng)), exp(rng)});
  return CycloScalar::from_terms(order, ts);
}

}  // namespace

TEST_CASE("roots of unity multiply by adding exponents") {
  CHECK(root_of_unity(8, 24) * root_of_unity(16, 24) == rational(1));
  CHECK(root_of_unity(0, 24) == rational(1));
  CHECK(root_of_unity(1, 1) == rational(1));
  CHECK(root_of_unity(12, 24) == rational(-1));
  CHECK(root_of_unity(-1, 24) == root_of_unity(23, 24));
}

TEST_CASE("square root of one half") {
  // (ζ24^3 + ζ24^21)/2 = 2cos(π/4)/2 = 1/√2; its square is 1/2.
  const CycloScalar h = CycloScalar::from_terms(
      24, {{make_rational(1, 2), 3}, {make_rational(1, 2), 21}});
  const double numeric = 2.0 * std::cos(M_PI / 4) / 2.0;
  CHECK(std::abs(h.embed().real() - numeric) < 1e-15);
  CHECK(std::abs(h.embed().imag()) < 1e-15);
  CHECK(h * h == rational(1, 2));
}

TEST_CASE("nontrivial cube roots sum to minus one") {
  CHECK(root_of_unity(1, 3) + root_of_unity(2, 3) == rational(-1));
}

TEST_CASE("paper constants live in order 24") {
  // i, e^{±πi/3}, e^{±πi/12}, √2, √3 and the derived entries 1/√2, (√3/2)i.
  const CycloScalar i = root_of_unity(6, 24);
  CHECK(std::abs(i.embed().imag() - 1.0) < 1e-15);
  const CycloScalar sqrt2 = root_of_unity(3, 24) + root_of_unity(21, 24);
  CHECK(sqrt2 * sqrt2 == rational(2));
  const CycloScalar sqrt3 = root_of_unity(2, 24) + root_of_unity(22, 24);
  CHECK(sqrt3 * sqrt3 == rational(3));
  const CycloScalar kauffman = i * root_of_unity(-1, 24);
  CHECK(kauffman == root_of_unity(5, 24));
  const CycloScalar b = sqrt3 * i / rational(2);  // (√3/2)i
  CHECK(std::abs(b.embed().real()) < 1e-15);
  CHECK(std::abs(b.embed().imag() - 0.8660254037844386) < 1e-12);
}

TEST_CASE("embedding matches trig evaluation") {
  CHECK(rational(1).embed() == std::complex<double>{1.0, 0.0});
  const auto w = root_of_unity(1, 3).embed();
  CHECK(std::abs(w.real() - (-0.5)) < 1e-15);
  CHECK(std::abs(w.imag() - 0.8660254037844386) < 1e-12);
}

TEST_CASE("division by zero and zero order are rejected") {
  CHECK_THROWS_AS(rational(1) / CycloScalar(), gybe::Error);
  CHECK_THROWS_AS(root_of_unity(1, 0), gybe::Error);
  CHECK_THROWS_AS(CycloScalar(1, 0), gybe::Error);
}

TEST_CASE("order promotion is capped") {
  // lcm(352, 45) far exceeds 360.
  const CycloScalar a = root_of_unity(1, 352);
  const CycloScalar b = root_of_unity(1, 45);
  CHECK_THROWS_AS(a * b, gybe::Error);
  CHECK_THROWS_AS(root_of_unity(1, 361), gybe::Error);
}

TEST_CASE("cross-order equality promotes to the lcm") {
  CHECK(root_of_unity(1, 3) == root_of_unity(8, 24));
  CHECK(root_of_unity(1, 2) == rational(-1));
  CHECK(root_of_unity(1, 4) == root_of_unity(6, 24));
  CHECK(root_of_unity(1, 3) != root_of_unity(2, 3));
}

TEST_CASE("conjugation flips exponents") {
  const CycloScalar z = root_of_unity(5, 24);
  CHECK(z.conjugate() == root_of_unity(19, 24));
  CHECK((z * z.conjugate()) == rational(1));
}

TEST_CASE("root_of_unity powers back to one for q up to 24") {
  for (long q = 1; q <= 24; ++q)
    for (long p = 0; p < q; ++p) {
      const CycloScalar z = root_of_unity(p, q);
      CHECK(z.pow(q) == rational(1));
    }
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(20240811);
  const std::vector<int> orders = {8, 12, 24};
  for (int iter = 0; iter < 1000; ++iter) {
    const int order = orders[std::size_t(iter) % orders.size()];
    const CycloScalar a = random_scalar(rng, order, 6, 40, 12);
    const CycloScalar b = random_scalar(rng, order, 6, 40, 12);
    const CycloScalar c = random_scalar(rng, 24, 6, 40, 12);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a - b) + b == a);
    CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
    CHECK(a.conjugate().conjugate() == a);
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == CycloScalar(1, 1));
      CHECK((b / a) * a == b);
    }
  }
}

TEST_CASE("embedding is a ring homomorphism within 2^-40") {
  std::mt19937_64 rng(987654321);
  const double tol = std::ldexp(1.0, -40);
  for (int iter = 0; iter < 200; ++iter) {
    // 100-term elements with coefficients of magnitude <= 1/4 keep the
    // double rounding of the product below the tolerance.
    std::vector<CycloTerm> ta, tb;
    std::uniform_int_distribution<int> exp(0, 23);
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> den(12, 64);
    for (int i = 0; i < 100; ++i) {
      ta.push_back({make_rational(num(rng), den(rng)), exp(rng)});
      tb.push_back({make_rational(num(rng), den(rng)), exp(rng)});
    }
    const CycloScalar a = CycloScalar::from_terms(24, ta);
    const CycloScalar b = CycloScalar::from_terms(24, tb);
    CHECK(std::abs((a * b).embed() - a.embed() * b.embed()) < tol);
    CHECK(std::abs((a + b).embed() - (a.embed() + b.embed())) < tol);
  }
}

TEST_CASE("embedding agrees with the independent trig oracle") {
  std::mt19937_64 rng(555);
  for (int iter = 0; iter < 200; ++iter) {
    const CycloScalar a = random_scalar(rng, 24, 8, 20, 8);
    const auto oracle = trig_eval(24, a.terms());
    CHECK(std::abs(a.embed() - oracle) < 1e-12);
  }
}

TEST_CASE("canonical form makes equal elements identical") {
  // ζ24^8 reduces to ζ24^4 − 1 (both are e^{2πi/3}).
  const CycloScalar via_power = root_of_unity(1, 24).pow(8);
  const CycloScalar via_terms =
      CycloScalar::from_terms(24, {{Rational(-1), 0}, {Rational(1), 4}});
  CHECK(via_power == via_terms);
  CHECK(via_power.coeffs() == via_terms.coeffs());
  const CycloScalar zero =
      root_of_unity(1, 24).pow(12) + CycloScalar(1, 1);  // ζ^12 + 1 = 0
  CHECK(zero.is_zero());
}

TEST_CASE("rational accessors") {
  CHECK(rational(3, 6).as_rational() == make_rational(1, 2));
  CHECK_THROWS_AS(root_of_unity(1, 3).as_rational(), gybe::Error);
  CHECK(root_of_unity(1, 3).pow(3).is_one());
}
