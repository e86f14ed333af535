#include "gybe/cyclotomic.hpp"

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "gybe/error.hpp"
#include "gybe/limits.hpp"

namespace gybe {

namespace limits {

namespace {
std::atomic<int> g_field_order_cap{kDefaultFieldOrderCap};
std::atomic<std::size_t> g_matrix_entry_cap{kDefaultMatrixEntryCap};
}  // namespace

int field_order_cap() { return g_field_order_cap.load(); }
void set_field_order_cap(int cap) {
  if (cap < 1) fail("field order cap must be positive");
  g_field_order_cap.store(cap);
}
std::size_t matrix_entry_cap() { return g_matrix_entry_cap.load(); }
void set_matrix_entry_cap(std::size_t cap) {
  if (cap == 0) fail("matrix entry cap must be positive");
  g_matrix_entry_cap.store(cap);
}

}  // namespace limits

std::string rat_to_string(const Rational& r) { return r.get_str(); }

Rational rat_from_string(const std::string& s) {
  Rational r;
  if (s.empty() || mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    fail("malformed rational '" + s + "'");
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
    fail("rational with zero denominator '" + s + "'");
  r.canonicalize();
  return r;
}

double rat_to_double(const Rational& r) { return r.get_d(); }

namespace {

long double mpz_to_long_double(const mpz_class& z) {
  // mpz_get_d truncates to 53 bits; rebuild from limbs to keep 64.
  const std::size_t n = mpz_size(z.get_mpz_t());
  long double acc = 0.0L;
  for (std::size_t i = n; i-- > 0;) {
    acc = acc * std::ldexp(1.0L, 8 * int(sizeof(mp_limb_t))) +
          (long double)mpz_getlimbn(z.get_mpz_t(), i);
  }
  return mpz_sgn(z.get_mpz_t()) < 0 ? -acc : acc;
}

}  // namespace

long double rat_to_long_double(const Rational& r) {
  return mpz_to_long_double(r.get_num()) / mpz_to_long_double(r.get_den());
}

int euler_phi(int n) {
  int result = n, m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

using Poly = std::vector<mpz_class>;  // dense, index = exponent

// Exact division of polynomials with integer coefficients (remainder known
// to be zero). Divisor must be monic.
Poly poly_divide_exact(const Poly& num, const Poly& den) {
  Poly rem = num;
  const int dn = int(num.size()) - 1;
  const int dd = int(den.size()) - 1;
  Poly quot(dn - dd + 1, mpz_class(0));
  for (int k = dn - dd; k >= 0; --k) {
    mpz_class c = rem[k + dd];
    quot[k] = c;
    if (c == 0) continue;
    for (int i = 0; i <= dd; ++i) rem[k + i] -= c * den[i];
  }
  return quot;
}

// Coefficients of the N-th cyclotomic polynomial, via
// x^N − 1 = Π_{d | N} Φ_d.
Poly cyclotomic_poly(int n, std::map<int, Poly>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  Poly p(n + 1, mpz_class(0));
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    p = poly_divide_exact(p, cyclotomic_poly(d, memo));
  }
  memo.emplace(n, p);
  return p;
}

struct CycloTable {
  int order = 1;
  int deg = 1;
  // red[e]: canonical coefficients of ζ^e, for e in [0, 2·order).
  std::vector<std::vector<mpz_class>> red;
  std::vector<long double> cos_v, sin_v;
};

const CycloTable& table_for(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;

  auto t = std::make_unique<CycloTable>();
  t->order = n;
  static std::map<int, Poly> poly_memo;
  Poly phi = cyclotomic_poly(n, poly_memo);
  t->deg = int(phi.size()) - 1;
  const int deg = t->deg;

  t->red.resize(2 * n);
  for (int e = 0; e < 2 * n && e < deg; ++e) {
    t->red[e].assign(deg, mpz_class(0));
    t->red[e][e] = 1;
  }
  for (int e = deg; e < 2 * n; ++e) {
    // ζ^e = ζ · ζ^{e−1}; shift then fold the overflowing top coefficient
    // using x^deg = −(phi[0] + … + phi[deg−1]·x^{deg−1}).
    const auto& prev = t->red[e - 1];
    std::vector<mpz_class> cur(deg, mpz_class(0));
    for (int i = 0; i + 1 < deg; ++i) cur[i + 1] = prev[i];
    const mpz_class& top = prev[deg - 1];
    if (top != 0)
      for (int i = 0; i < deg; ++i) cur[i] -= top * phi[i];
    t->red[e] = std::move(cur);
  }

  t->cos_v.resize(n);
  t->sin_v.resize(n);
  const long double tau = 6.283185307179586476925286766559005768L;
  for (int k = 0; k < n; ++k) {
    t->cos_v[k] = cosl(tau * k / n);
    t->sin_v[k] = sinl(tau * k / n);
  }

  auto [pos, _] = cache.emplace(n, std::move(t));
  return *pos->second;
}

// Canonicalize a raw coefficient vector over exponents [0, len) of order n.
std::vector<Rational> reduce_vector(int n, const std::vector<Rational>& raw) {
  const CycloTable& t = table_for(n);
  std::vector<Rational> out(t.deg, Rational(0));
  for (int e = 0; e < int(raw.size()); ++e) {
    if (rat_is_zero(raw[e])) continue;
    if (e < t.deg) {
      out[e] += raw[e];
    } else {
      const auto& row = t.red[e];
      for (int i = 0; i < t.deg; ++i)
        if (row[i] != 0) out[i] += raw[e] * Rational(row[i]);
    }
  }
  return out;
}

int checked_lcm(int a, int b) {
  const long l = std::lcm(long(a), long(b));
  if (l > limits::field_order_cap())
    fail("cyclotomic order promotion to " + std::to_string(l) +
         " exceeds the configured cap " +
         std::to_string(limits::field_order_cap()));
  return int(l);
}

std::atomic<int> g_default_field_order{limits::kDefaultFieldOrder};

}  // namespace

int default_field_order() { return g_default_field_order.load(); }

void set_default_field_order(int order) {
  if (order < 1 || order > limits::field_order_cap())
    fail("default field order must lie in [1, " +
         std::to_string(limits::field_order_cap()) + "]");
  g_default_field_order.store(order);
}

CycloScalar::CycloScalar() : order_(1), coeffs_(1, Rational(0)) {}

CycloScalar::CycloScalar(const Rational& value)
    : order_(1), coeffs_(1, value) {}

namespace {
Rational checked_rational(long num, long den) {
  if (den == 0) fail("rational with zero denominator");
  return make_rational(num, den);
}
}  // namespace

CycloScalar::CycloScalar(long num, long den)
    : CycloScalar(checked_rational(num, den)) {}

CycloScalar::CycloScalar(int order, std::vector<Rational> canonical_coeffs)
    : order_(order), coeffs_(std::move(canonical_coeffs)) {}

CycloScalar CycloScalar::zero(int order) {
  if (order < 1 || order > limits::field_order_cap())
    fail("cyclotomic order " + std::to_string(order) + " out of range");
  return CycloScalar(order,
                     std::vector<Rational>(table_for(order).deg, Rational(0)));
}

CycloScalar CycloScalar::from_terms(int order,
                                    const std::vector<CycloTerm>& terms) {
  if (order < 1 || order > limits::field_order_cap())
    fail("cyclotomic order " + std::to_string(order) + " out of range");
  std::vector<Rational> raw(order, Rational(0));
  for (const auto& t : terms) {
    if (t.exponent < 0 || t.exponent >= order)
      fail("scalar term exponent " + std::to_string(t.exponent) +
           " outside [0, " + std::to_string(order) + ")");
    raw[t.exponent] += t.coeff;
  }
  return CycloScalar(order, reduce_vector(order, raw));
}

std::vector<CycloTerm> CycloScalar::terms() const {
  std::vector<CycloTerm> out;
  for (int k = 0; k < int(coeffs_.size()); ++k)
    if (!rat_is_zero(coeffs_[k])) out.push_back({coeffs_[k], k});
  return out;
}

bool CycloScalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (!rat_is_zero(c)) return false;
  return true;
}

bool CycloScalar::is_one() const {
  if (rat_is_zero(coeffs_[0]) || coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!rat_is_zero(coeffs_[i])) return false;
  return true;
}

bool CycloScalar::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!rat_is_zero(coeffs_[i])) return false;
  return true;
}

Rational CycloScalar::as_rational() const {
  if (!is_rational()) fail("scalar " + str() + " is not rational");
  return coeffs_[0];
}

CycloScalar CycloScalar::promoted(int new_order) const {
  if (new_order == order_) return *this;
  if (new_order % order_ != 0)
    fail("order " + std::to_string(new_order) + " is not a multiple of " +
         std::to_string(order_));
  if (new_order > limits::field_order_cap())
    fail("cyclotomic order " + std::to_string(new_order) +
         " exceeds the configured cap");
  const int stride = new_order / order_;
  std::vector<Rational> raw(new_order, Rational(0));
  for (int k = 0; k < int(coeffs_.size()); ++k)
    if (!rat_is_zero(coeffs_[k])) raw[k * stride] += coeffs_[k];
  return CycloScalar(new_order, reduce_vector(new_order, raw));
}

CycloScalar CycloScalar::operator-() const {
  std::vector<Rational> out(coeffs_);
  for (auto& c : out) c = -c;
  return CycloScalar(order_, std::move(out));
}

CycloScalar CycloScalar::conjugate() const {
  std::vector<Rational> raw(order_, Rational(0));
  for (int k = 0; k < int(coeffs_.size()); ++k) {
    if (rat_is_zero(coeffs_[k])) continue;
    raw[(order_ - k) % order_] += coeffs_[k];
  }
  return CycloScalar(order_, reduce_vector(order_, raw));
}

namespace {

// Applies the Galois automorphism ζ → ζ^j, gcd(j, N) = 1.
CycloScalar apply_galois(const CycloScalar& a, int j) {
  std::vector<CycloTerm> mapped;
  for (const auto& t : a.terms())
    mapped.push_back({t.coeff, int((long(t.exponent) * j) % a.order())});
  return CycloScalar::from_terms(a.order(), mapped);
}

}  // namespace

CycloScalar CycloScalar::inverse() const {
  if (is_zero()) fail("division by zero scalar");
  if (is_rational()) {
    Rational r = coeffs_[0];
    return CycloScalar(Rational(1) / r).promoted(order_);
  }
  // Multiply by all nontrivial Galois conjugates: a · Π σ_j(a) is the field
  // norm, a nonzero rational.
  CycloScalar prod = CycloScalar(Rational(1)).promoted(order_);
  for (int j = 2; j < order_; ++j) {
    if (std::gcd(j, order_) != 1) continue;
    prod = prod * apply_galois(*this, j);
  }
  CycloScalar norm = *this * prod;
  if (!norm.is_rational() || norm.is_zero())
    fail("internal error: field norm of " + str() + " is not rational");
  Rational inv_norm = Rational(1) / norm.as_rational();
  std::vector<Rational> out = prod.coeffs_;
  for (auto& c : out) c *= inv_norm;
  return CycloScalar(order_, std::move(out));
}

CycloScalar CycloScalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloScalar acc = CycloScalar(Rational(1)).promoted(order_);
  CycloScalar base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::complex<double> CycloScalar::embed() const {
  const CycloTable& t = table_for(order_);
  long double re = 0.0L, im = 0.0L;
  for (int k = 0; k < int(coeffs_.size()); ++k) {
    if (rat_is_zero(coeffs_[k])) continue;
    const long double c = rat_to_long_double(coeffs_[k]);
    re += c * t.cos_v[k];
    im += c * t.sin_v[k];
  }
  return {double(re), double(im)};
}

std::string CycloScalar::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << rat_to_string(t.coeff) << ")";
    if (t.exponent != 0) os << "*z" << order_ << "^" << t.exponent;
  }
  return os.str();
}

void CycloScalar::append_key(std::string& out) const {
  out += 'o';
  out += std::to_string(order_);
  for (const auto& c : coeffs_) {
    out += ';';
    if (rat_is_zero(c))
      out += '0';
    else
      out += c.get_str();
  }
  out += '|';
}

namespace {

std::pair<CycloScalar, CycloScalar> aligned(const CycloScalar& a,
                                            const CycloScalar& b) {
  if (a.order() == b.order()) return {a, b};
  const int n = checked_lcm(a.order(), b.order());
  return {a.promoted(n), b.promoted(n)};
}

}  // namespace

CycloScalar operator+(const CycloScalar& a, const CycloScalar& b) {
  auto [x, y] = aligned(a, b);
  std::vector<Rational> out = x.coeffs_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += y.coeffs_[i];
  return CycloScalar(x.order_, std::move(out));
}

CycloScalar operator-(const CycloScalar& a, const CycloScalar& b) {
  return a + (-b);
}

CycloScalar operator*(const CycloScalar& a, const CycloScalar& b) {
  auto [x, y] = aligned(a, b);
  const int n = x.order_;
  const int deg = int(x.coeffs_.size());
  // Convolve over nonzero terms only; operands are canonical so exponents
  // stay below 2·deg − 1 < 2n, which the reduction table covers.
  std::vector<Rational> conv(2 * deg, Rational(0));
  for (int i = 0; i < deg; ++i) {
    if (rat_is_zero(x.coeffs_[i])) continue;
    for (int j = 0; j < deg; ++j) {
      if (rat_is_zero(y.coeffs_[j])) continue;
      conv[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  return CycloScalar(n, reduce_vector(n, conv));
}

CycloScalar operator/(const CycloScalar& a, const CycloScalar& b) {
  return a * b.inverse();
}

bool operator==(const CycloScalar& a, const CycloScalar& b) {
  auto [x, y] = aligned(a, b);
  return x.coeffs() == y.coeffs();
}

CycloScalar root_of_unity(long p, long q) {
  if (q <= 0) fail("root_of_unity requires a positive order q");
  if (q > limits::field_order_cap())
    fail("root order " + std::to_string(q) + " exceeds the configured cap");
  long k = ((p % q) + q) % q;
  return CycloScalar::from_terms(int(q), {{Rational(1), int(k)}});
}

}  // namespace gybe
