#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qcenter/rational.hpp"

namespace qcenter {

/// Largest conductor any scalar may be promoted to (default 2^20).
uint64_t conductor_bound();
void set_conductor_bound(uint64_t bound);

/// Thrown for literal syntax errors; `offset` is the 0-based column in the literal.
struct ScalarParseError : std::invalid_argument {
  ScalarParseError(size_t offset, const std::string& what)
      : std::invalid_argument(what), offset(offset) {}
  size_t offset;
};

/// Element of the cyclotomic field Q(zeta_n), stored in the power basis
/// 1, zeta, ..., zeta^(phi(n)-1) modulo the n-th cyclotomic polynomial.
///
/// Conductors are kept normalized (never 2 mod 4) and an element whose
/// non-constant coefficients vanish is demoted to conductor 1, so rational
/// values stay cheap. Mixed-conductor operands are promoted to the lcm field.
class CycloScalar {
 public:
  using Coeffs = boost::container::small_vector<Rational, 4>;

  CycloScalar() : coeffs_(1) {}
  CycloScalar(Rational r) : coeffs_{std::move(r)} {}  // NOLINT(google-explicit-constructor)
  CycloScalar(int64_t v) : coeffs_{Rational(v)} {}      // NOLINT(google-explicit-constructor)

  /// zeta_n^k for the primitive root exp(2 pi i / n).
  static CycloScalar zeta(uint64_t n, int64_t k = 1);
  static CycloScalar from_coeffs(uint64_t n, std::vector<Rational> coeffs);
  static CycloScalar parse(std::string_view text);

  uint64_t conductor() const { return conductor_; }
  const Coeffs& coeffs() const { return coeffs_; }

  bool is_zero() const { return conductor_ == 1 && coeffs_[0].is_zero(); }
  bool is_one() const { return conductor_ == 1 && coeffs_[0].is_one(); }
  bool is_rational() const { return conductor_ == 1; }
  const Rational& rational() const;  // throws unless is_rational()

  CycloScalar conj() const;
  CycloScalar inverse() const;
  CycloScalar operator-() const;
  /// Same value, re-expressed in Q(zeta_n); n must be a multiple of conductor().
  CycloScalar promoted(uint64_t n) const;
  /// Same value in the smallest cyclotomic field containing it.
  CycloScalar canonical() const;
  bool is_real() const { return *this == conj(); }

  friend CycloScalar operator+(const CycloScalar& a, const CycloScalar& b);
  friend CycloScalar operator-(const CycloScalar& a, const CycloScalar& b);
  friend CycloScalar operator*(const CycloScalar& a, const CycloScalar& b);
  friend CycloScalar operator/(const CycloScalar& a, const CycloScalar& b);
  CycloScalar& operator+=(const CycloScalar& o);
  CycloScalar& operator-=(const CycloScalar& o);
  CycloScalar& operator*=(const CycloScalar& o) { return *this = *this * o; }
  /// this += a * b without a temporary for the common rational case.
  void add_product(const CycloScalar& a, const CycloScalar& b);

  friend bool operator==(const CycloScalar& a, const CycloScalar& b);

  /// Literal form "<rational>" or sums of "<rational>*z<n>^<k>" in canonical field.
  std::string str() const;

 private:
  void demote();

  uint64_t conductor_ = 1;
  Coeffs coeffs_;
};

/// Euler phi.
uint64_t euler_phi(uint64_t n);
/// Normalized conductor: n/2 when n = 2 mod 4, otherwise n.
uint64_t normalize_conductor(uint64_t n);

/// Positive square root of a nonnegative rational (i * sqrt(|q|) for negative q),
/// built from quadratic Gauss sums.
CycloScalar sqrt_rational(const Rational& q);

/// Sign of a real element in the embedding zeta_n = exp(2 pi i / n); throws if
/// the argument is not real. Decided with rational interval bounds, never floats.
int real_sign(const CycloScalar& x);

}  // namespace qcenter
