#include "qcenter/rational.hpp"

#include <limits>
#include <stdexcept>

namespace qcenter {

namespace {

using u128 = unsigned __int128;

u128 uabs(__int128 v) { return v < 0 ? u128(-(v + 1)) + 1 : u128(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr int64_t kMax = std::numeric_limits<int64_t>::max();

bool fits(__int128 v) { return v <= kMax && v >= -kMax; }

mpz_class to_mpz(__int128 v) {
  bool neg = v < 0;
  u128 u = uabs(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(int64_t n, int64_t d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  assign(n, d);
}

Rational::Rational(const mpq_class& q) { assign_big(q); }

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::string s(text);
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || ((c == '-' || c == '+') && i == 0);
    if (!ok) throw std::invalid_argument("bad rational literal '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  auto slash = s.find('/');
  if (slash != std::string::npos && (slash == 0 || slash + 1 == s.size() ||
                                     s.find('/', slash + 1) != std::string::npos))
    throw std::invalid_argument("bad rational literal '" + s + "'");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return Rational(q);
}

void Rational::assign(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  u128 g = gcd128(uabs(n), u128(d));
  if (g > 1) {
    n /= static_cast<__int128>(g);
    d /= static_cast<__int128>(g);
  }
  if (n == 0) d = 1;
  if (fits(n) && d <= kMax) {
    num_ = static_cast<int64_t>(n);
    den_ = static_cast<int64_t>(d);
    big_.reset();
    return;
  }
  mpq_class q(to_mpz(n), to_mpz(d));
  big_ = std::make_shared<const mpq_class>(std::move(q));
  num_ = 0;
  den_ = 1;
}

void Rational::assign_big(mpq_class q) {
  q.canonicalize();
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != std::numeric_limits<long>::min()) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
    return;
  }
  big_ = std::make_shared<const mpq_class>(std::move(q));
  num_ = 0;
  den_ = 1;
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  return q;
}

mpz_class Rational::numerator() const {
  return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  Rational r;
  if (big_) {
    r.assign_big(-*big_);
  } else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational");
  Rational r;
  if (big_) {
    r.assign_big(1 / *big_);
  } else {
    r.assign(den_, num_);
  }
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  Rational r;
  if (a.big_ || b.big_) {
    r.assign_big(a.to_mpq() + b.to_mpq());
    return r;
  }
  if (a.den_ == b.den_) {
    r.assign(__int128(a.num_) + b.num_, a.den_);
  } else {
    r.assign(__int128(a.num_) * b.den_ + __int128(b.num_) * a.den_, __int128(a.den_) * b.den_);
  }
  return r;
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational();
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  Rational r;
  if (a.big_ || b.big_) {
    r.assign_big(a.to_mpq() * b.to_mpq());
    return r;
  }
  r.assign(__int128(a.num_) * b.num_, __int128(a.den_) * b.den_);
  return r;
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical: a big value never equals a small one
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  __int128 l = __int128(a.num_) * b.den_;
  __int128 r = __int128(b.num_) * a.den_;
  return l <=> r;
}

}  // namespace qcenter
