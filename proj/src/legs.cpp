#include "qcenter/legs.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcenter {

SparseOp SparseOp::from_dense(const Mat& m) {
  if (!m.is_square()) throw std::invalid_argument("sparse operator must be square");
  SparseOp s(m.rows());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) s.rows_[i].emplace_back(uint32_t(j), m(i, j));
  return s;
}

SparseOp SparseOp::identity(size_t n) {
  SparseOp s(n);
  for (size_t i = 0; i < n; ++i) s.rows_[i].emplace_back(uint32_t(i), CycloScalar(1));
  return s;
}

SparseOp SparseOp::from_rows(std::vector<Row> rows) {
  SparseOp s;
  s.rows_ = std::move(rows);
  return s;
}

size_t SparseOp::nonzeros() const {
  size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

Mat SparseOp::to_dense() const {
  Mat m(size(), size());
  for (size_t i = 0; i < size(); ++i)
    for (const auto& [j, v] : rows_[i]) m(i, j) = v;
  return m;
}

SparseOp SparseOp::adjoint() const {
  std::vector<Row> rows(size());
  for (size_t i = 0; i < size(); ++i)
    for (const auto& [j, v] : rows_[i]) rows[j].emplace_back(uint32_t(i), v.conj());
  return from_rows(std::move(rows));  // columns visited in increasing i, already sorted
}

SparseOp operator*(const SparseOp& a, const SparseOp& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sparse product: size mismatch");
  size_t n = a.size();
  std::vector<SparseOp::Row> rows(n);
  std::vector<CycloScalar> acc(n);
  std::vector<char> touched(n, 0);
  std::vector<uint32_t> cols;
  for (size_t i = 0; i < n; ++i) {
    cols.clear();
    for (const auto& [k, x] : a.rows_[i])
      for (const auto& [j, y] : b.rows_[k]) {
        if (!touched[j]) {
          touched[j] = 1;
          cols.push_back(j);
        }
        acc[j].add_product(x, y);
      }
    std::sort(cols.begin(), cols.end());
    for (uint32_t j : cols) {
      if (!acc[j].is_zero()) rows[i].emplace_back(j, std::move(acc[j]));
      acc[j] = CycloScalar();
      touched[j] = 0;
    }
  }
  return SparseOp::from_rows(std::move(rows));
}

namespace {

size_t flat(const std::array<size_t, 3>& dims, const std::array<size_t, 3>& idx) {
  return (idx[0] * dims[1] + idx[1]) * dims[2] + idx[2];
}

}  // namespace

SparseOp place(const Mat& x, std::array<size_t, 3> dims, int a, int b) {
  if (a == b || a < 0 || b < 0 || a > 2 || b > 2) throw std::invalid_argument("place: bad legs");
  if (x.rows() != dims[a] * dims[b] || !x.is_square()) throw std::invalid_argument("place: operator size");
  int c = 3 - a - b;
  size_t n = dims[0] * dims[1] * dims[2];
  std::vector<SparseOp::Row> rows(n);
  for (size_t ia = 0; ia < dims[a]; ++ia)
    for (size_t ib = 0; ib < dims[b]; ++ib)
      for (size_t ja = 0; ja < dims[a]; ++ja)
        for (size_t jb = 0; jb < dims[b]; ++jb) {
          const CycloScalar& v = x(ia * dims[b] + ib, ja * dims[b] + jb);
          if (v.is_zero()) continue;
          for (size_t k = 0; k < dims[c]; ++k) {
            std::array<size_t, 3> r{}, s{};
            r[a] = ia;
            r[b] = ib;
            r[c] = k;
            s[a] = ja;
            s[b] = jb;
            s[c] = k;
            rows[flat(dims, r)].emplace_back(uint32_t(flat(dims, s)), v);
          }
        }
  for (auto& r : rows) std::sort(r.begin(), r.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  return SparseOp::from_rows(std::move(rows));
}

SparseOp flip(const SparseOp& x, std::array<size_t, 3> dims, int a, int b) {
  // Flip maps an operator on H_0 (x) H_1 (x) H_2 to one on the space with
  // factors a and b exchanged; new dims are dims with a and b swapped.
  std::array<size_t, 3> nd = dims;
  std::swap(nd[a], nd[b]);
  size_t n = x.size();
  auto remap = [&](size_t f) {
    std::array<size_t, 3> idx{f / (dims[1] * dims[2]), (f / dims[2]) % dims[1], f % dims[2]};
    std::swap(idx[a], idx[b]);
    return flat(nd, idx);
  };
  std::vector<SparseOp::Row> rows(n);
  for (size_t i = 0; i < n; ++i) {
    auto& r = rows[remap(i)];
    for (const auto& [j, v] : x.row(i)) r.emplace_back(uint32_t(remap(j)), v);
  }
  for (auto& r : rows) std::sort(r.begin(), r.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  return SparseOp::from_rows(std::move(rows));
}

}  // namespace qcenter
