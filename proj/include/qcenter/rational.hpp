#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace qcenter {

/// Exact rational number.
///
/// Values whose reduced numerator and denominator fit in 64 bits are kept
/// inline and combined through 128-bit intermediates; anything larger is
/// promoted to a shared, immutable GMP rational. The representation is
/// canonical (reduced, positive denominator, big only when it must be), so
/// equality is a field comparison.
class Rational {
 public:
  Rational() = default;
  Rational(int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int64_t n, int64_t d);
  explicit Rational(const mpq_class& q);

  /// Parses "a", "-a", "a/b". Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;
  std::string str() const;

  Rational operator-() const;
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void assign(__int128 n, __int128 d);
  void assign_big(mpq_class q);

  int64_t num_ = 0;
  int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

}  // namespace qcenter
