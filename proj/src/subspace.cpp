#include "qcenter/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcenter {

namespace {

void axpy(Vec& y, const CycloScalar& a, const Vec& x, size_t from) {
  for (size_t k = from; k < x.size(); ++k)
    if (!x[k].is_zero()) y[k] -= a * x[k];
}

}  // namespace

Subspace Subspace::span(size_t ambient, const std::vector<Vec>& vectors) {
  Subspace s(ambient);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Subspace Subspace::full(size_t ambient) {
  Subspace s(ambient);
  for (size_t i = 0; i < ambient; ++i) {
    Vec v(ambient);
    v[i] = CycloScalar(1);
    s.basis_.push_back(std::move(v));
    s.pivots_.push_back(i);
  }
  return s;
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != ambient_) throw std::invalid_argument("subspace: dimension mismatch");
  for (size_t i = 0; i < basis_.size(); ++i) {
    CycloScalar c = v[pivots_[i]];
    if (!c.is_zero()) axpy(v, c, basis_[i], pivots_[i]);
  }
  return v;
}

bool Subspace::insert(Vec v) {
  v = reduce(std::move(v));
  size_t p = 0;
  while (p < v.size() && v[p].is_zero()) ++p;
  if (p == v.size()) return false;
  CycloScalar inv = v[p].inverse();
  for (size_t k = p; k < v.size(); ++k)
    if (!v[k].is_zero()) v[k] *= inv;
  for (auto& row : basis_) {
    CycloScalar c = row[p];
    if (!c.is_zero()) axpy(row, c, v, p);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  basis_.insert(basis_.begin() + pos, std::move(v));
  return true;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("subspace: dimension mismatch");
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  Vec c(basis_.size());
  for (size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
  if (combine(c) != v) return std::nullopt;
  return c;
}

Vec Subspace::combine(const Vec& c) const {
  if (c.size() != basis_.size()) throw std::invalid_argument("combine: coefficient count");
  Vec v(ambient_);
  for (size_t i = 0; i < basis_.size(); ++i) {
    if (c[i].is_zero()) continue;
    for (size_t k = pivots_[i]; k < ambient_; ++k)
      if (!basis_[i][k].is_zero()) v[k].add_product(c[i], basis_[i][k]);
  }
  return v;
}

Subspace Subspace::annihilator() const { return kernel(basis_, ambient_); }

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw std::invalid_argument("intersect: dimension mismatch");
  if (a.dim() == 0 || b.dim() == 0) return Subspace(a.ambient_);
  if (a.dim() == a.ambient_) return b;
  if (b.dim() == b.ambient_) return a;
  auto rows = a.annihilator().basis_;
  auto more = b.annihilator().basis_;
  rows.insert(rows.end(), more.begin(), more.end());
  return kernel(rows, a.ambient_);
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw std::invalid_argument("sum: dimension mismatch");
  Subspace s = a;
  for (const auto& v : b.basis_) s.insert(v);
  return s;
}

Subspace kernel(const std::vector<Vec>& rows, size_t ncols) {
  Subspace r = Subspace::span(ncols, rows);
  std::vector<bool> is_pivot(ncols, false);
  for (size_t p : r.pivots()) is_pivot[p] = true;
  Subspace k(ncols);
  for (size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    Vec x(ncols);
    x[f] = CycloScalar(1);
    for (size_t i = 0; i < r.dim(); ++i)
      if (!r.basis()[i][f].is_zero()) x[r.pivots()[i]] = -r.basis()[i][f];
    k.insert(std::move(x));
  }
  return k;
}

std::optional<Vec> solve(const std::vector<Vec>& rows, const Vec& rhs, size_t ncols) {
  if (rows.size() != rhs.size()) throw std::invalid_argument("solve: row count mismatch");
  std::vector<Vec> aug;
  aug.reserve(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != ncols) throw std::invalid_argument("solve: column mismatch");
    Vec v = rows[i];
    v.push_back(rhs[i]);
    aug.push_back(std::move(v));
  }
  Subspace r = Subspace::span(ncols + 1, aug);
  Vec x(ncols);
  for (size_t i = 0; i < r.dim(); ++i) {
    if (r.pivots()[i] == ncols) return std::nullopt;
    x[r.pivots()[i]] = r.basis()[i][ncols];
  }
  return x;
}

CycloScalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  CycloScalar s;
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s.add_product(a[i], b[i]);
  return s;
}

std::optional<Mat> inverse(const Mat& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  size_t n = m.rows();
  std::vector<Vec> aug;
  for (size_t i = 0; i < n; ++i) {
    Vec row(2 * n);
    for (size_t j = 0; j < n; ++j) row[j] = m(i, j);
    row[n + i] = CycloScalar(1);
    aug.push_back(std::move(row));
  }
  Subspace r = Subspace::span(2 * n, aug);
  if (r.dim() != n || r.pivots().back() != n - 1) return std::nullopt;
  Mat inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = r.basis()[i][n + j];
  return inv;
}

}  // namespace qcenter
