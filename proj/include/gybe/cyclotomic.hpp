#pragma once

#include <complex>
#include <string>
#include <vector>

#include "gybe/rational.hpp"

namespace gybe {

/// One term (p/q)·ζ_N^k of a serialized scalar; k lives in [0, N).
struct CycloTerm {
  Rational coeff;
  int exponent = 0;
};

/// Exact element of the cyclotomic field Q(ζ_N), ζ_N = e^{2πi/N}.
///
/// Values are kept in canonical form (coefficients on exponents
/// 0..φ(N)−1 after reduction by the N-th cyclotomic polynomial), so equality
/// is a plain coefficient comparison. Binary operations between different
/// orders promote both sides to the lcm, capped by
/// limits::field_order_cap(). Instances are immutable after construction and
/// safe to share between threads.
class CycloScalar {
 public:
  /// Zero in Q (order 1).
  CycloScalar();
  explicit CycloScalar(const Rational& value);
  CycloScalar(long num, long den);

  static CycloScalar zero(int order);
  static CycloScalar one() { return CycloScalar(Rational(1)); }
  /// Builds Σ terms[i].coeff · ζ_order^terms[i].exponent.
  static CycloScalar from_terms(int order, const std::vector<CycloTerm>& terms);

  int order() const { return order_; }
  /// Canonical coefficients, size φ(order()), exponent i-th.
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Nonzero canonical terms in increasing exponent order.
  std::vector<CycloTerm> terms() const;

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Value as a rational; throws if the value is not in Q.
  Rational as_rational() const;

  CycloScalar operator-() const;
  CycloScalar conjugate() const;
  /// Multiplicative inverse; throws on zero.
  CycloScalar inverse() const;
  CycloScalar pow(long e) const;

  /// Same value in the given order (a multiple of order(), within cap).
  CycloScalar promoted(int new_order) const;

  /// Floating complex image, for reporting only; never used for verdicts.
  std::complex<double> embed() const;

  std::string str() const;
  /// Appends a canonical byte key (order + coefficients) for hashing.
  void append_key(std::string& out) const;

  friend CycloScalar operator+(const CycloScalar& a, const CycloScalar& b);
  friend CycloScalar operator-(const CycloScalar& a, const CycloScalar& b);
  friend CycloScalar operator*(const CycloScalar& a, const CycloScalar& b);
  friend CycloScalar operator/(const CycloScalar& a, const CycloScalar& b);
  friend bool operator==(const CycloScalar& a, const CycloScalar& b);
  friend bool operator!=(const CycloScalar& a, const CycloScalar& b) {
    return !(a == b);
  }

 private:
  CycloScalar(int order, std::vector<Rational> canonical_coeffs);

  int order_;
  std::vector<Rational> coeffs_;
};

/// ζ_q^p = e^{2πi·p/q}; p may be any integer, q must be positive and within
/// the field-order cap.
CycloScalar root_of_unity(long p, long q);

/// Default order for ad-hoc constructions (24 unless overridden through
/// GYBE_FIELD_ORDER by the CLI).
int default_field_order();
void set_default_field_order(int order);

int euler_phi(int n);

}  // namespace gybe
