#include "qcenter/cyclotomic.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>

namespace qcenter {

namespace {

std::atomic<uint64_t> g_conductor_bound{uint64_t(1) << 20};

struct Field {
  uint64_t n = 1;
  size_t phi = 1;
  // Monic cyclotomic polynomial; lower coefficients only, as (index, value) pairs.
  std::vector<std::pair<size_t, int64_t>> low;
  // conj_cols[k] = coordinates of zeta^{-k}.
  std::vector<std::vector<Rational>> conj_cols;

  mutable std::mutex embed_mutex;
  mutable std::map<uint64_t, std::vector<std::vector<Rational>>> embed;

  // In-place reduction of a coefficient vector of any length to length phi.
  void reduce(std::vector<Rational>& c) const {
    for (size_t k = c.size(); k-- > phi;) {
      if (c[k].is_zero()) continue;
      Rational t = c[k];
      c[k] = Rational();
      for (auto [j, v] : low) c[k - phi + j] -= t * Rational(v);
    }
    c.resize(phi);
  }

  std::vector<Rational> mul(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
    std::vector<Rational> c(2 * phi - 1);
    for (size_t i = 0; i < phi; ++i) {
      if (a[i].is_zero()) continue;
      for (size_t j = 0; j < phi; ++j) {
        if (b[j].is_zero()) continue;
        c[i + j] += a[i] * b[j];
      }
    }
    reduce(c);
    return c;
  }

  std::vector<Rational> monomial(uint64_t j) const {
    j %= n;
    std::vector<Rational> result(phi);
    if (j < phi) {
      result[j] = Rational(1);
      return result;
    }
    result[0] = Rational(1);
    std::vector<Rational> base(phi);
    if (phi > 1) {
      base[1] = Rational(1);
    } else {
      // Q(zeta_1) = Q: zeta = 1.
      base[0] = Rational(1);
    }
    while (j > 0) {
      if (j & 1) result = mul(result, base);
      base = mul(base, base);
      j >>= 1;
    }
    return result;
  }

  const std::vector<std::vector<Rational>>& embedding_from(uint64_t m) const {
    std::lock_guard<std::mutex> lock(embed_mutex);
    auto it = embed.find(m);
    if (it != embed.end()) return it->second;
    std::vector<std::vector<Rational>> cols;
    size_t phim = euler_phi(m);
    for (size_t j = 0; j < phim; ++j) cols.push_back(monomial(j * (n / m)));
    return embed.emplace(m, std::move(cols)).first->second;
  }
};

std::vector<int64_t> cyclotomic_poly(uint64_t n) {
  // Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}, applied as sparse multiply/divide.
  auto mobius = [](uint64_t k) {
    int mu = 1;
    for (uint64_t p = 2; p * p <= k; ++p) {
      if (k % p) continue;
      k /= p;
      if (k % p == 0) return 0;
      mu = -mu;
    }
    if (k > 1) mu = -mu;
    return mu;
  };
  std::vector<int64_t> poly{1};
  std::vector<uint64_t> divisors;
  for (uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) divisors.push_back(d);
  // Multiply first so the exact divisions never see negative degree.
  for (int pass = 0; pass < 2; ++pass) {
    for (uint64_t d : divisors) {
      int mu = mobius(n / d);
      if (pass == 0 && mu == 1) {
        std::vector<int64_t> next(poly.size() + d, 0);
        for (size_t i = 0; i < poly.size(); ++i) {
          next[i + d] += poly[i];
          next[i] -= poly[i];
        }
        poly = std::move(next);
      } else if (pass == 1 && mu == -1) {
        // Divide by (x^d - 1): q = -(p + x^d q) solved from the low end.
        size_t deg = poly.size() - 1 - d;
        std::vector<int64_t> q(deg + 1, 0);
        for (size_t i = 0; i <= deg; ++i) {
          int64_t v = -poly[i];
          if (i >= d) v += q[i - d];
          q[i] = v;
        }
        poly = std::move(q);
      }
    }
  }
  return poly;
}

const Field& field(uint64_t n) {
  static std::mutex mutex;
  static std::map<uint64_t, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  auto f = std::make_unique<Field>();
  f->n = n;
  f->phi = euler_phi(n);
  auto poly = cyclotomic_poly(n);
  for (size_t j = 0; j < f->phi; ++j)
    if (poly[j] != 0) f->low.emplace_back(j, poly[j]);
  for (size_t k = 0; k < f->phi; ++k) f->conj_cols.push_back(f->monomial((n - k) % n));
  return *cache.emplace(n, std::move(f)).first->second;
}

uint64_t lcm_conductor(uint64_t a, uint64_t b) {
  uint64_t l = normalize_conductor(std::lcm(a, b));
  if (l > g_conductor_bound.load())
    throw std::overflow_error("cyclotomic conductor " + std::to_string(l) + " exceeds bound " +
                              std::to_string(g_conductor_bound.load()));
  return l;
}

std::vector<Rational> to_vec(const CycloScalar::Coeffs& c) { return {c.begin(), c.end()}; }

// Solves A x = b over Q for a dense column-major system; nullopt if inconsistent.
std::optional<std::vector<Rational>> solve_columns(const std::vector<std::vector<Rational>>& cols,
                                                   const std::vector<Rational>& b) {
  size_t rows = b.size(), ncols = cols.size();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(ncols + 1));
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < ncols; ++c) m[r][c] = cols[c][r];
    m[r][ncols] = b[r];
  }
  std::vector<size_t> pivots;
  size_t rank = 0;
  for (size_t c = 0; c < ncols && rank < rows; ++c) {
    size_t p = rank;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    Rational inv = m[rank][c].inverse();
    for (auto& v : m[rank]) v *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      Rational f = m[r][c];
      for (size_t k = c; k <= ncols; ++k) m[r][k] -= f * m[rank][k];
    }
    pivots.push_back(c);
    ++rank;
  }
  for (size_t r = rank; r < rows; ++r)
    if (!m[r][ncols].is_zero()) return std::nullopt;
  std::vector<Rational> x(ncols);
  for (size_t i = 0; i < rank; ++i) x[pivots[i]] = m[i][ncols];
  return x;
}

}  // namespace

uint64_t conductor_bound() { return g_conductor_bound.load(); }
void set_conductor_bound(uint64_t bound) { g_conductor_bound.store(bound); }

uint64_t euler_phi(uint64_t n) {
  uint64_t result = n;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

uint64_t normalize_conductor(uint64_t n) { return n % 4 == 2 ? n / 2 : n; }

const Rational& CycloScalar::rational() const {
  if (conductor_ != 1) throw std::logic_error("scalar " + str() + " is not rational");
  return coeffs_[0];
}

void CycloScalar::demote() {
  if (conductor_ == 1) return;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return;
  coeffs_.resize(1);
  conductor_ = 1;
}

CycloScalar CycloScalar::zeta(uint64_t n, int64_t k) {
  if (n == 0) throw std::invalid_argument("zeta_0 is undefined");
  int64_t kk = k % int64_t(n);
  if (kk < 0) kk += int64_t(n);
  uint64_t e = uint64_t(kk);
  uint64_t g = std::gcd(e, n);
  if (e == 0) g = n;
  n /= g;
  e /= g;
  bool negate = false;
  if (n % 4 == 2) {
    // zeta_{2m} = -zeta_m^{(m+1)/2} for odd m.
    uint64_t m = n / 2;
    negate = (e % 2) == 1;
    e = (e * ((m + 1) / 2)) % m;
    n = m;
  }
  if (n > g_conductor_bound.load()) throw std::overflow_error("conductor exceeds bound");
  CycloScalar out;
  if (n == 1) {
    out.coeffs_[0] = Rational(negate ? -1 : 1);
    return out;
  }
  const Field& f = field(n);
  auto v = f.monomial(e);
  out.conductor_ = n;
  out.coeffs_.assign(v.begin(), v.end());
  if (negate)
    for (auto& c : out.coeffs_) c = -c;
  out.demote();
  return out;
}

CycloScalar CycloScalar::from_coeffs(uint64_t n, std::vector<Rational> coeffs) {
  if (n == 0 || n % 4 == 2) throw std::invalid_argument("conductor must be normalized");
  if (coeffs.size() != euler_phi(n)) throw std::invalid_argument("coefficient count != phi(n)");
  CycloScalar out;
  out.conductor_ = n;
  out.coeffs_.assign(coeffs.begin(), coeffs.end());
  out.demote();
  return out;
}

CycloScalar CycloScalar::promoted(uint64_t n) const {
  n = normalize_conductor(n);
  if (n == conductor_) return *this;
  if (n % conductor_ != 0) throw std::invalid_argument("promotion target is not a multiple");
  if (n > g_conductor_bound.load()) throw std::overflow_error("conductor exceeds bound");
  CycloScalar out;
  const Field& f = field(n);
  out.conductor_ = n;
  out.coeffs_.assign(f.phi, Rational());
  if (conductor_ == 1) {
    out.coeffs_[0] = coeffs_[0];
    return out;
  }
  const auto& cols = f.embedding_from(conductor_);
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    for (size_t i = 0; i < f.phi; ++i)
      if (!cols[j][i].is_zero()) out.coeffs_[i] += coeffs_[j] * cols[j][i];
  }
  return out;  // not demoted: caller asked for this field
}

CycloScalar CycloScalar::canonical() const {
  if (conductor_ == 1) return *this;
  std::vector<uint64_t> divisors;
  for (uint64_t m = 3; m < conductor_; ++m)
    if (conductor_ % m == 0 && m % 4 != 2) divisors.push_back(m);
  const Field& f = field(conductor_);
  auto target = to_vec(coeffs_);
  for (uint64_t m : divisors) {
    auto sol = solve_columns(f.embedding_from(m), target);
    if (sol) return from_coeffs(m, std::move(*sol)).canonical();
  }
  return *this;
}

CycloScalar CycloScalar::conj() const {
  if (conductor_ == 1) return *this;
  const Field& f = field(conductor_);
  CycloScalar out;
  out.conductor_ = conductor_;
  out.coeffs_.assign(f.phi, Rational());
  for (size_t k = 0; k < f.phi; ++k) {
    if (coeffs_[k].is_zero()) continue;
    for (size_t i = 0; i < f.phi; ++i)
      if (!f.conj_cols[k][i].is_zero()) out.coeffs_[i] += coeffs_[k] * f.conj_cols[k][i];
  }
  out.demote();
  return out;
}

CycloScalar CycloScalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  if (conductor_ == 1) return CycloScalar(coeffs_[0].inverse());
  const Field& f = field(conductor_);
  // Columns of the multiplication-by-this matrix: this * zeta^j.
  std::vector<std::vector<Rational>> cols;
  auto self = to_vec(coeffs_);
  for (size_t j = 0; j < f.phi; ++j) cols.push_back(f.mul(self, f.monomial(j)));
  std::vector<Rational> one(f.phi);
  one[0] = Rational(1);
  auto sol = solve_columns(cols, one);
  if (!sol) throw std::logic_error("nonzero cyclotomic element without inverse");
  return from_coeffs(conductor_, std::move(*sol));
}

CycloScalar CycloScalar::operator-() const {
  CycloScalar out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
  if (o.conductor_ == 1) {
    coeffs_[0] += o.coeffs_[0];
    return *this;
  }
  if (conductor_ == o.conductor_) {
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    demote();
    return *this;
  }
  if (conductor_ == 1) {
    Rational c = coeffs_[0];
    *this = o;
    coeffs_[0] += c;
    return *this;
  }
  uint64_t n = lcm_conductor(conductor_, o.conductor_);
  CycloScalar a = promoted(n);
  CycloScalar b = o.promoted(n);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  a.demote();
  return *this = std::move(a);
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o) { return *this += -o; }

CycloScalar operator+(const CycloScalar& a, const CycloScalar& b) {
  CycloScalar r = a;
  r += b;
  return r;
}

CycloScalar operator-(const CycloScalar& a, const CycloScalar& b) {
  CycloScalar r = a;
  r += -b;
  return r;
}

CycloScalar operator*(const CycloScalar& a, const CycloScalar& b) {
  if (a.conductor_ == 1 && b.conductor_ == 1) return CycloScalar(a.coeffs_[0] * b.coeffs_[0]);
  if (a.conductor_ == 1 || b.conductor_ == 1) {
    const CycloScalar& s = a.conductor_ == 1 ? a : b;
    const CycloScalar& v = a.conductor_ == 1 ? b : a;
    if (s.coeffs_[0].is_zero()) return CycloScalar();
    CycloScalar r = v;
    for (auto& c : r.coeffs_) c *= s.coeffs_[0];
    return r;
  }
  uint64_t n = a.conductor_ == b.conductor_ ? a.conductor_ : lcm_conductor(a.conductor_, b.conductor_);
  CycloScalar pa = a.promoted(n), pb = b.promoted(n);
  const Field& f = field(n);
  auto prod = f.mul(to_vec(pa.coeffs_), to_vec(pb.coeffs_));
  CycloScalar r;
  r.conductor_ = n;
  r.coeffs_.assign(prod.begin(), prod.end());
  r.demote();
  return r;
}

CycloScalar operator/(const CycloScalar& a, const CycloScalar& b) { return a * b.inverse(); }

void CycloScalar::add_product(const CycloScalar& a, const CycloScalar& b) {
  if (a.conductor_ == 1 && b.conductor_ == 1) {
    if (a.coeffs_[0].is_zero() || b.coeffs_[0].is_zero()) return;
    if (conductor_ == 1) {
      coeffs_[0] += a.coeffs_[0] * b.coeffs_[0];
    } else {
      coeffs_[0] += a.coeffs_[0] * b.coeffs_[0];
    }
    return;
  }
  *this += a * b;
}

bool operator==(const CycloScalar& a, const CycloScalar& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  if (a.conductor_ == 1 || b.conductor_ == 1) return false;
  return (a - b).is_zero();
}

std::string CycloScalar::str() const {
  CycloScalar c = canonical();
  if (c.conductor_ == 1) return c.coeffs_[0].str();
  std::string out;
  for (size_t k = 0; k < c.coeffs_.size(); ++k) {
    const Rational& r = c.coeffs_[k];
    if (r.is_zero()) continue;
    std::string term = r.str();
    if (!out.empty() && term[0] != '-') out += '+';
    out += term;
    if (k > 0) out += "*z" + std::to_string(c.conductor_) + "^" + std::to_string(k);
  }
  return out;
}

CycloScalar CycloScalar::parse(std::string_view text) {
  size_t i = 0;
  auto fail = [&](const std::string& msg) -> ScalarParseError {
    return ScalarParseError(i, msg + " in scalar literal '" + std::string(text) + "'");
  };
  auto read_uint = [&]() {
    size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (start == i) throw fail("expected digits");
    if (i - start > 18) throw fail("integer too long");
    return std::stoull(std::string(text.substr(start, i - start)));
  };
  if (text.empty()) throw fail("empty literal");
  CycloScalar sum;
  bool first = true;
  while (i < text.size()) {
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
      negative = text[i] == '-';
      ++i;
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;
    if (i >= text.size()) throw fail("dangling sign");
    Rational coeff(1);
    bool have_coeff = false;
    if (text[i] != 'z') {
      size_t start = i;
      while (i < text.size() && ((text[i] >= '0' && text[i] <= '9') || text[i] == '/')) ++i;
      if (start == i) throw fail("expected rational or 'z'");
      try {
        coeff = Rational::parse(text.substr(start, i - start));
      } catch (const std::exception&) {
        i = start;
        throw fail("malformed rational");
      }
      have_coeff = true;
    }
    CycloScalar term(coeff);
    bool want_root = !have_coeff || (i < text.size() && text[i] == '*');
    if (have_coeff && want_root) ++i;  // consume '*'
    if (want_root) {
      if (i >= text.size() || text[i] != 'z') throw fail("expected 'z<n>'");
      ++i;
      uint64_t n = read_uint();
      if (n == 0) throw fail("conductor must be positive");
      uint64_t k = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        k = read_uint();
      }
      term = term * zeta(n, int64_t(k % n));
    }
    sum += negative ? -term : term;
  }
  return sum;
}

CycloScalar sqrt_rational(const Rational& q) {
  if (q.is_zero()) return CycloScalar();
  bool negative = q.sign() < 0;
  Rational a = negative ? -q : q;
  // sqrt(n/d) = sqrt(n*d)/d, then pull out the square part of n*d.
  mpz_class prod = a.numerator() * a.denominator();
  mpz_class square_root(1), rest(prod);
  std::vector<uint64_t> primes;
  uint64_t steps = 0;
  for (mpz_class p = 2; p * p <= rest; ++p) {
    if (++steps > 10'000'000) throw std::overflow_error("sqrt_rational: factorization too large");
    int e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    for (int j = 0; j + 1 < e; j += 2) square_root *= p;
    if (e % 2) primes.push_back(p.get_ui());
  }
  if (rest > 1) {
    if (!rest.fits_ulong_p()) throw std::overflow_error("sqrt_rational: prime too large");
    primes.push_back(rest.get_ui());
  }
  CycloScalar result(Rational(mpq_class(square_root, a.denominator())));
  for (uint64_t p : primes) {
    if (p == 2) {
      result *= CycloScalar::zeta(8, 1) + CycloScalar::zeta(8, 7);
      continue;
    }
    auto legendre = [p](uint64_t k) {
      // Euler's criterion.
      unsigned __int128 r = 1, b = k % p;
      uint64_t e = (p - 1) / 2;
      while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
      }
      return r == 1 ? 1 : -1;
    };
    CycloScalar gauss;
    for (uint64_t k = 1; k < p; ++k) gauss += CycloScalar(int64_t(legendre(k))) * CycloScalar::zeta(p, int64_t(k));
    if (p % 4 == 3) gauss = -(CycloScalar::zeta(4, 1) * gauss);
    result *= gauss;
  }
  if (negative) result *= CycloScalar::zeta(4, 1);
  return result;
}

namespace {

// Rational enclosure of pi with error at most 10^-digits (Machin's formula).
std::pair<mpq_class, mpq_class> pi_enclosure(unsigned digits) {
  mpq_class eps(1, 1);
  for (unsigned i = 0; i < digits; ++i) eps /= 10;
  auto arctan_inv = [&](long x, mpq_class& err) {
    mpq_class sum = 0, term(1, x), x2(x * x, 1);
    for (long j = 0;; ++j) {
      mpq_class t = term / (2 * j + 1);
      if (t < eps / 64) {
        err = t;
        break;
      }
      sum += (j % 2 == 0) ? t : mpq_class(-t);
      term /= x2;
    }
    return sum;
  };
  mpq_class e1, e2;
  mpq_class a = arctan_inv(5, e1);
  mpq_class b = arctan_inv(239, e2);
  mpq_class approx = 16 * a - 4 * b;
  mpq_class err = 16 * e1 + 4 * e2;
  return {approx, err};
}

// cos(theta) for rational theta with |theta| <= 4, truncated Taylor series and bound.
std::pair<mpq_class, mpq_class> cos_enclosure(const mpq_class& theta, const mpq_class& eps) {
  mpq_class sum = 0, term = 1, t2 = theta * theta;
  for (long k = 0;; ++k) {
    sum += term;
    term = -term * t2 / ((2 * k + 1) * (2 * k + 2));
    if (abs(term) < eps) return {sum, abs(term)};
  }
}

}  // namespace

int real_sign(const CycloScalar& x) {
  if (!x.is_real()) throw std::invalid_argument("real_sign of non-real scalar " + x.str());
  if (x.is_rational()) return x.rational().sign();
  const uint64_t n = x.conductor();
  const auto& c = x.coeffs();
  for (unsigned digits = 20;; digits *= 2) {
    auto [pi, pi_err] = pi_enclosure(digits);
    mpq_class eps(1, 1);
    for (unsigned i = 0; i < digits; ++i) eps /= 10;
    mpq_class value = 0, bound = 0;
    for (size_t k = 0; k < c.size(); ++k) {
      if (c[k].is_zero()) continue;
      mpq_class ck = c[k].to_mpq();
      if (k == 0) {
        value += ck;
        continue;
      }
      // Re(zeta^k) = cos(2 pi k' / n) with k' reduced to [-n/2, n/2].
      long kk = long(k % n);
      if (2 * uint64_t(kk) > n) kk -= long(n);
      mpq_class theta = 2 * pi * kk / mpq_class(long(n));
      auto [cv, cerr] = cos_enclosure(theta, eps);
      mpq_class err = cerr + 2 * pi_err;  // |d theta| <= 2 |d pi|
      value += ck * cv;
      bound += abs(ck) * err;
    }
    if (value > bound) return 1;
    if (value < -bound) return -1;
    if (digits > 4000) throw std::runtime_error("real_sign: failed to separate from zero");
  }
}

}  // namespace qcenter
