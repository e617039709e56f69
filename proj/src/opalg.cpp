#include "qcenter/opalg.hpp"

#include <deque>
#include <numeric>
#include <stdexcept>

namespace qcenter {

// ---------------------------------------------------------------- OperatorSubspace

OperatorSubspace::OperatorSubspace(size_t gns_dim, Subspace space) : d_(gns_dim), space_(std::move(space)) {
  if (space_.ambient() != d_ * d_) throw std::invalid_argument("operator subspace: ambient mismatch");
}

OperatorSubspace OperatorSubspace::span(size_t gns_dim, const std::vector<Mat>& ops) {
  OperatorSubspace s(gns_dim);
  for (const auto& x : ops) s.insert(x);
  return s;
}

OperatorSubspace OperatorSubspace::scalars(size_t gns_dim) { return span(gns_dim, {Mat::identity(gns_dim)}); }

OperatorSubspace OperatorSubspace::full(size_t gns_dim) {
  return OperatorSubspace(gns_dim, Subspace::full(gns_dim * gns_dim));
}

Mat OperatorSubspace::element(size_t i) const { return Mat::from_vec(d_, d_, space_.basis()[i]); }

std::vector<Mat> OperatorSubspace::elements() const {
  std::vector<Mat> out;
  for (size_t i = 0; i < dim(); ++i) out.push_back(element(i));
  return out;
}

bool OperatorSubspace::insert(const Mat& x) {
  if (x.rows() != d_ || x.cols() != d_) throw std::invalid_argument("operator size mismatch");
  bool grew = space_.insert(x.vec());
  if (grew) {
    once_ = std::make_shared<std::once_flag>();
    flags_.reset();
  }
  return grew;
}

bool OperatorSubspace::contains(const Mat& x) const {
  if (x.rows() != d_ || x.cols() != d_) throw std::invalid_argument("operator size mismatch");
  return space_.contains(x.vec());
}

bool OperatorSubspace::contains(const OperatorSubspace& o) const { return space_.contains(o.space_); }

std::optional<Vec> OperatorSubspace::coordinates(const Mat& x) const { return space_.coordinates(x.vec()); }

const OperatorSubspace::Flags& OperatorSubspace::flags() const {
  std::call_once(*once_, [this] {
    auto f = std::make_shared<Flags>();
    auto els = elements();
    f->is_unital = contains(Mat::identity(d_));
    f->is_star_closed = true;
    for (const auto& x : els)
      if (!contains(x.adjoint())) {
        f->is_star_closed = false;
        break;
      }
    f->is_algebra = true;
    for (size_t i = 0; i < els.size() && f->is_algebra; ++i)
      for (size_t j = 0; j < els.size(); ++j)
        if (!contains(els[i] * els[j])) {
          f->is_algebra = false;
          break;
        }
    flags_ = f;
  });
  return *flags_;
}

OperatorSubspace intersect(const OperatorSubspace& a, const OperatorSubspace& b) {
  if (a.d_ != b.d_) throw std::invalid_argument("intersect: gns dimension mismatch");
  return OperatorSubspace(a.d_, intersect(a.space_, b.space_));
}

OperatorSubspace generate_algebra(size_t d, const std::vector<Mat>& generators, bool unital) {
  OperatorSubspace s(d);
  std::vector<Mat> elems;
  std::deque<size_t> queue;
  auto add = [&](const Mat& x) {
    if (s.insert(x)) {
      elems.push_back(x);
      queue.push_back(elems.size() - 1);
    }
  };
  if (unital) add(Mat::identity(d));
  for (const auto& g : generators) {
    if (g.rows() != d || g.cols() != d) throw std::invalid_argument("generate_algebra: size mismatch");
    add(g);
  }
  while (!queue.empty()) {
    size_t i = queue.front();
    queue.pop_front();
    Mat x = elems[i];
    add(x.adjoint());
    for (size_t j = 0; j < elems.size() && s.dim() < d * d; ++j) {
      add(x * elems[j]);
      add(elems[j] * x);
    }
  }
  return s;
}

OperatorSubspace commutant(const OperatorSubspace& n) {
  size_t d = n.gns_dim();
  Subspace rows(d * d);
  for (const auto& a : n.elements()) {
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) {
        Vec row(d * d);
        for (size_t k = 0; k < d; ++k) {
          if (!a(k, j).is_zero()) row[i * d + k] += a(k, j);
          if (!a(i, k).is_zero()) row[k * d + j] -= a(i, k);
        }
        rows.insert(std::move(row));
      }
    if (rows.dim() == d * d - 1) break;  // only scalars remain
  }
  return OperatorSubspace(d, kernel(rows.basis(), d * d));
}

OperatorSubspace relative_commutant(const OperatorSubspace& n, const OperatorSubspace& m) {
  if (n.gns_dim() != m.gns_dim()) throw std::invalid_argument("relative_commutant: gns dimension mismatch");
  size_t d = n.gns_dim();
  auto ms = m.elements();
  Subspace rows(ms.size());
  for (const auto& y : n.elements()) {
    std::vector<Mat> comm;
    for (const auto& x : ms) comm.push_back(commutator(x, y));
    for (size_t e = 0; e < d * d; ++e) {
      Vec row(ms.size());
      bool any = false;
      for (size_t k = 0; k < ms.size(); ++k) {
        row[k] = comm[k].vec()[e];
        any = any || !row[k].is_zero();
      }
      if (any) rows.insert(std::move(row));
    }
  }
  Subspace ker = kernel(rows.basis(), ms.size());
  OperatorSubspace out(d);
  for (const auto& c : ker.basis()) out.insert(Mat::from_vec(d, d, m.space().combine(c)));
  return out;
}

OperatorSubspace center_of_algebra(const OperatorSubspace& n) {
  if (!n.flags().is_algebra) throw std::invalid_argument("not an algebra");
  return relative_commutant(n, n);
}

bool is_abelian(const OperatorSubspace& n) {
  auto els = n.elements();
  for (size_t i = 0; i < els.size(); ++i)
    for (size_t j = i + 1; j < els.size(); ++j)
      if (!commutator(els[i], els[j]).is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------- AlgebraTable

AlgebraTable AlgebraTable::from_operators(const OperatorSubspace& algebra) {
  AlgebraTable t;
  t.space_ = algebra;
  t.ops_ = algebra.elements();
  size_t m = t.ops_.size();
  t.prod_.assign(m, std::vector<Vec>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      auto c = algebra.coordinates(t.ops_[i] * t.ops_[j]);
      if (!c) throw std::invalid_argument("operator subspace is not closed under products");
      t.prod_[i][j] = std::move(*c);
    }
  auto u = algebra.coordinates(Mat::identity(algebra.gns_dim()));
  if (!u) throw std::invalid_argument("operator algebra is not unital");
  t.unit_ = std::move(*u);
  t.star_ = Mat(m, m);
  for (size_t k = 0; k < m; ++k) {
    auto c = algebra.coordinates(t.ops_[k].adjoint());
    if (!c) throw std::invalid_argument("operator algebra is not *-closed");
    for (size_t i = 0; i < m; ++i) t.star_(i, k) = (*c)[i];
  }
  return t;
}

AlgebraTable AlgebraTable::from_constants(std::vector<std::vector<Vec>> prod, Vec unit, Mat star) {
  AlgebraTable t;
  size_t m = prod.size();
  if (unit.size() != m || star.rows() != m || star.cols() != m)
    throw std::invalid_argument("algebra table: shape mismatch");
  t.prod_ = std::move(prod);
  t.unit_ = std::move(unit);
  t.star_ = std::move(star);
  return t;
}

Vec AlgebraTable::mul(const Vec& a, const Vec& b) const {
  size_t m = dim();
  Vec r(m);
  for (size_t i = 0; i < m; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < m; ++j) {
      if (b[j].is_zero()) continue;
      CycloScalar ab = a[i] * b[j];
      const Vec& p = prod_[i][j];
      for (size_t k = 0; k < m; ++k)
        if (!p[k].is_zero()) r[k].add_product(ab, p[k]);
    }
  }
  return r;
}

Vec AlgebraTable::adjoint(const Vec& a) const {
  size_t m = dim();
  Vec r(m);
  for (size_t k = 0; k < m; ++k) {
    if (a[k].is_zero()) continue;
    CycloScalar c = a[k].conj();
    for (size_t i = 0; i < m; ++i)
      if (!star_(i, k).is_zero()) r[i].add_product(c, star_(i, k));
  }
  return r;
}

Vec AlgebraTable::basis_vector(size_t i) const {
  Vec v(dim());
  v[i] = CycloScalar(1);
  return v;
}

Mat AlgebraTable::element(const Vec& c) const {
  if (ops_.empty()) throw std::logic_error("algebra table has no operator basis");
  Mat x(ops_[0].rows(), ops_[0].cols());
  for (size_t k = 0; k < c.size(); ++k) x.add_scaled(c[k], ops_[k]);
  return x;
}

std::optional<Vec> AlgebraTable::coords(const Mat& x) const { return space_.coordinates(x); }

Vec AlgebraTable::coords_unchecked(const Mat& x) const {
  const auto& piv = space_.space().pivots();
  Vec c(piv.size());
  for (size_t i = 0; i < piv.size(); ++i) c[i] = x.vec()[piv[i]];
  return c;
}

Subspace AlgebraTable::relative_commutant(const Subspace& n) const {
  size_t m = dim();
  Subspace rows(m);
  for (const auto& y : n.basis()) {
    std::vector<Vec> comm;
    for (size_t i = 0; i < m; ++i) {
      Vec e = basis_vector(i);
      Vec c = mul(e, y);
      Vec c2 = mul(y, e);
      for (size_t k = 0; k < m; ++k) c[k] -= c2[k];
      comm.push_back(std::move(c));
    }
    for (size_t k = 0; k < m; ++k) {
      Vec row(m);
      for (size_t i = 0; i < m; ++i) row[i] = comm[i][k];
      if (!is_zero(row)) rows.insert(std::move(row));
    }
  }
  return kernel(rows.basis(), m);
}

Subspace AlgebraTable::center() const { return relative_commutant(Subspace::full(dim())); }

Subspace AlgebraTable::generate(const std::vector<Vec>& gens, bool unital) const {
  size_t m = dim();
  Subspace s(m);
  std::vector<Vec> elems;
  std::deque<size_t> queue;
  auto add = [&](const Vec& x) {
    if (s.insert(x)) {
      elems.push_back(x);
      queue.push_back(elems.size() - 1);
    }
  };
  if (unital) add(unit_);
  for (const auto& g : gens) add(g);
  while (!queue.empty() && s.dim() < m) {
    size_t i = queue.front();
    queue.pop_front();
    Vec x = elems[i];
    add(adjoint(x));
    for (size_t j = 0; j < elems.size() && s.dim() < m; ++j) {
      add(mul(x, elems[j]));
      add(mul(elems[j], x));
    }
  }
  return s;
}

bool AlgebraTable::is_subalgebra(const Subspace& s) const {
  for (const auto& a : s.basis())
    for (const auto& b : s.basis())
      if (!s.contains(mul(a, b))) return false;
  return true;
}

bool AlgebraTable::is_star_closed(const Subspace& s) const {
  for (const auto& a : s.basis())
    if (!s.contains(adjoint(a))) return false;
  return true;
}

OperatorSubspace AlgebraTable::to_operators(const Subspace& s) const {
  if (ops_.empty()) throw std::logic_error("algebra table has no operator basis");
  OperatorSubspace out(ops_[0].rows());
  for (const auto& c : s.basis()) out.insert(element(c));
  return out;
}

// ---------------------------------------------------------------- roots and spectra

namespace {

CycloScalar eval(const std::vector<CycloScalar>& p, const CycloScalar& x) {
  CycloScalar r;
  for (size_t k = p.size(); k-- > 0;) r = r * x + p[k];
  return r;
}

// Divides by (t - r), dropping the remainder.
std::vector<CycloScalar> deflate(const std::vector<CycloScalar>& p, const CycloScalar& r) {
  size_t n = p.size() - 1;
  std::vector<CycloScalar> q(n);
  CycloScalar carry = p[n];
  for (size_t k = n; k-- > 0;) {
    q[k] = carry;
    carry = p[k] + carry * r;
  }
  return q;
}

std::vector<int64_t> divisors(const mpz_class& v) {
  std::vector<int64_t> out;
  mpz_class a = abs(v);
  if (a == 0 || !a.fits_slong_p() || a > 1000000) return out;
  long n = a.get_si();
  for (long k = 1; k <= n; ++k)
    if (n % k == 0) out.push_back(k);
  return out;
}

std::vector<CycloScalar> candidates(const std::vector<CycloScalar>& p) {
  std::vector<CycloScalar> out;
  bool rational = true;
  uint64_t cond = 1;
  for (const auto& c : p) {
    CycloScalar cc = c.canonical();
    rational = rational && cc.is_rational();
    cond = std::lcm(cond, cc.conductor());
  }
  if (rational) {
    mpz_class den = 1;
    for (const auto& c : p) den = lcm(den, c.rational().denominator());
    mpz_class a0 = mpq_class(p.front().rational().to_mpq() * den).get_num();
    mpz_class an = mpq_class(p.back().rational().to_mpq() * den).get_num();
    for (int64_t num : divisors(a0))
      for (int64_t d : divisors(an)) {
        out.emplace_back(Rational(num, d));
        out.emplace_back(Rational(-num, d));
      }
  }
  uint64_t l = std::lcm<uint64_t>(24, 2 * cond);
  if (l > 240) l = std::lcm<uint64_t>(24, cond);
  for (uint64_t k = 0; k < l; ++k) {
    CycloScalar zk = CycloScalar::zeta(l, int64_t(k));
    out.push_back(zk);
    out.push_back(zk + zk.conj());
    for (int64_t s : {2, -2, 3, 4}) out.push_back(CycloScalar(s) * zk);
  }
  return out;
}

}  // namespace

std::vector<CycloScalar> find_roots(std::vector<CycloScalar> poly) {
  while (!poly.empty() && poly.back().is_zero()) poly.pop_back();
  std::vector<CycloScalar> roots;
  if (poly.size() <= 1) return roots;
  CycloScalar lead = poly.back().inverse();
  for (auto& c : poly) c *= lead;
  auto cand = candidates(poly);
  auto add_root = [&](const CycloScalar& r) {
    for (const auto& x : roots)
      if (x == r) return;
    roots.push_back(r);
  };
  while (poly.size() > 1) {
    size_t deg = poly.size() - 1;
    if (deg == 1) {
      add_root(-poly[0]);
      break;
    }
    if (poly[0].is_zero()) {
      add_root(CycloScalar());
      poly.erase(poly.begin());
      continue;
    }
    bool found = false;
    for (const auto& r : cand) {
      if (eval(poly, r).is_zero()) {
        add_root(r);
        poly = deflate(poly, r);
        found = true;
        break;
      }
    }
    if (found) continue;
    if (deg == 2) {
      CycloScalar disc = (poly[1] * poly[1] - CycloScalar(4) * poly[0]).canonical();
      if (disc.is_rational()) {
        CycloScalar s = sqrt_rational(disc.rational());
        CycloScalar half(Rational(1, 2));
        add_root(half * (-poly[1] + s));
        add_root(half * (-poly[1] - s));
      }
    }
    break;
  }
  return roots;
}

namespace {

// Minimal polynomial of x inside the corner algebra with identity `one`.
std::vector<CycloScalar> min_poly(const AlgebraTable& a, const Vec& x, const Vec& one) {
  std::vector<Vec> powers{one};
  Subspace span(a.dim());
  span.insert(one);
  for (;;) {
    Vec next = a.mul(x, powers.back());
    if (span.contains(next)) {
      size_t k = powers.size();
      std::vector<Vec> rows;
      for (size_t e = 0; e < a.dim(); ++e) {
        Vec row(k);
        for (size_t j = 0; j < k; ++j) row[j] = powers[j][e];
        rows.push_back(std::move(row));
      }
      auto c = solve(rows, next, k);
      if (!c) throw std::logic_error("min_poly: inconsistent Krylov system");
      std::vector<CycloScalar> poly(k + 1);
      for (size_t j = 0; j < k; ++j) poly[j] = -(*c)[j];
      poly[k] = CycloScalar(1);
      return poly;
    }
    span.insert(next);
    powers.push_back(std::move(next));
  }
}

Vec eval_poly(const AlgebraTable& a, const std::vector<CycloScalar>& p, const Vec& x, const Vec& one) {
  Vec r(a.dim());
  for (size_t k = p.size(); k-- > 0;) {
    r = a.mul(x, r);
    if (!p[k].is_zero())
      for (size_t e = 0; e < r.size(); ++e)
        if (!one[e].is_zero()) r[e].add_product(p[k], one[e]);
  }
  return r;
}

Vec scaled(Vec v, const CycloScalar& s) {
  for (auto& x : v)
    if (!x.is_zero()) x *= s;
  return v;
}

Vec sub(Vec a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] -= b[i];
  return a;
}

// Spectral projections of a diagonalizable x in the corner `one` for the roots found.
std::vector<Vec> spectral_split(const AlgebraTable& a, const Vec& x, const Vec& one) {
  auto m = min_poly(a, x, one);
  if (m.size() <= 2) return {};
  auto roots = find_roots(m);
  std::vector<Vec> parts;
  Vec rest = one;
  for (const auto& r : roots) {
    auto q = deflate(m, r);
    CycloScalar qr = eval(q, r);
    if (qr.is_zero()) throw std::runtime_error("spectral split: repeated eigenvalue (element not diagonalizable)");
    Vec p = scaled(eval_poly(a, q, x, one), qr.inverse());
    rest = sub(std::move(rest), p);
    parts.push_back(std::move(p));
  }
  if (parts.empty()) return {};
  if (!is_zero(rest)) parts.push_back(std::move(rest));
  return parts;
}

size_t corner_dim(const AlgebraTable& a, const Vec& p, const std::vector<Vec>& elems, bool two_sided) {
  Subspace s(a.dim());
  for (const auto& e : elems) s.insert(two_sided ? a.mul(a.mul(p, e), p) : a.mul(p, e));
  return s.dim();
}

}  // namespace

std::vector<Vec> minimal_central_projections(const AlgebraTable& a) {
  Subspace z = a.center();
  const auto& zb = z.basis();
  std::vector<Vec> parts{a.unit()};
  auto needs_split = [&](const Vec& p) { return corner_dim(a, p, zb, false) > 1; };
  std::vector<Vec> probes = zb;
  for (size_t i = 0; i < zb.size(); ++i)
    for (size_t j = i + 1; j < zb.size(); ++j) {
      Vec s = zb[i];
      for (size_t k = 0; k < s.size(); ++k) s[k] += CycloScalar(2) * zb[j][k];
      probes.push_back(std::move(s));
    }
  for (const auto& zk : probes) {
    std::vector<Vec> next;
    bool all_done = true;
    for (auto& p : parts) {
      if (!needs_split(p)) {
        next.push_back(std::move(p));
        continue;
      }
      auto pieces = spectral_split(a, a.mul(p, zk), p);
      if (pieces.empty()) {
        next.push_back(std::move(p));
        all_done = false;
        continue;
      }
      for (auto& q : pieces) {
        all_done = all_done && !needs_split(q);
        next.push_back(std::move(q));
      }
    }
    parts = std::move(next);
    if (all_done) break;
  }
  for (const auto& p : parts)
    if (needs_split(p)) throw std::runtime_error("could not split the center into minimal projections exactly");
  return parts;
}

MatrixUnits matrix_units(const AlgebraTable& a) {
  MatrixUnits out;
  std::vector<Vec> basis;
  for (size_t i = 0; i < a.dim(); ++i) basis.push_back(a.basis_vector(i));
  const CycloScalar i_unit = CycloScalar::zeta(4);
  for (const auto& p : minimal_central_projections(a)) {
    size_t block_dim = corner_dim(a, p, basis, false);
    size_t n = 0;
    while ((n + 1) * (n + 1) <= block_dim) ++n;
    if (n * n != block_dim) throw std::runtime_error("central block is not a full matrix algebra");
    MatrixUnits::Block blk;
    blk.size = n;
    blk.central = p;
    // Shrink to a rank-one projection q with qAq = C q.
    Vec q = p;
    while (corner_dim(a, q, basis, true) > 1) {
      bool split = false;
      for (const auto& b : basis) {
        Vec y = a.mul(a.mul(q, b), q);
        Vec ys = a.adjoint(y);
        Vec herm = y;
        Vec skew = y;
        for (size_t k = 0; k < y.size(); ++k) {
          herm[k] += ys[k];
          skew[k] = i_unit * (skew[k] - ys[k]);
        }
        for (const Vec* x : {&herm, &skew}) {
          auto pieces = spectral_split(a, *x, q);
          if (pieces.empty()) continue;
          size_t best = 0, best_dim = SIZE_MAX;
          for (size_t t = 0; t < pieces.size(); ++t) {
            size_t dd = corner_dim(a, pieces[t], basis, true);
            if (dd < best_dim) {
              best_dim = dd;
              best = t;
            }
          }
          q = pieces[best];
          split = true;
          break;
        }
        if (split) break;
      }
      if (!split) throw std::runtime_error("could not find a rank-one projection exactly");
    }
    // Orthonormal basis of the column space pAq, with v^* w in C q.
    size_t piv = 0;
    while (q[piv].is_zero()) ++piv;
    std::vector<Vec> v{q};
    for (const auto& b : basis) {
      if (v.size() == n) break;
      Vec y = a.mul(a.mul(p, b), q);
      for (const auto& va : v) y = sub(std::move(y), a.mul(va, a.mul(a.adjoint(va), y)));
      if (is_zero(y)) continue;
      CycloScalar c = (a.mul(a.adjoint(y), y)[piv] / q[piv]).canonical();
      if (!c.is_rational()) continue;
      v.push_back(scaled(std::move(y), sqrt_rational(c.rational()).inverse()));
    }
    if (v.size() != n) throw std::runtime_error("could not normalize matrix units with rational norms");
    blk.e.assign(n, std::vector<Vec>(n));
    for (size_t r = 0; r < n; ++r)
      for (size_t s = 0; s < n; ++s) blk.e[r][s] = a.mul(v[r], a.adjoint(v[s]));
    out.blocks.push_back(std::move(blk));
  }
  return out;
}

}  // namespace qcenter
