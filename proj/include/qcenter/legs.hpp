#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "qcenter/matrix.hpp"

namespace qcenter {

/// Sparse square operator stored by rows; used for three-leg identities
/// where dense d^3 x d^3 matrices would be wasteful.
class SparseOp {
 public:
  using Row = std::vector<std::pair<uint32_t, CycloScalar>>;

  SparseOp() = default;
  explicit SparseOp(size_t n) : rows_(n) {}
  static SparseOp from_dense(const Mat& m);
  static SparseOp identity(size_t n);

  size_t size() const { return rows_.size(); }
  const Row& row(size_t i) const { return rows_[i]; }
  size_t nonzeros() const;
  Mat to_dense() const;
  SparseOp adjoint() const;

  friend SparseOp operator*(const SparseOp& a, const SparseOp& b);
  friend bool operator==(const SparseOp& a, const SparseOp& b) { return a.rows_ == b.rows_; }

  /// Takes ownership of rows already sorted by column with no zero entries.
  static SparseOp from_rows(std::vector<Row> rows);

 private:
  std::vector<Row> rows_;
};

/// Places an operator x on legs (a, b) of H_0 (x) H_1 (x) H_2 with the given
/// dimensions; x acts on H_a (x) H_b in that order (a may exceed b, giving
/// the flipped placement).
SparseOp place(const Mat& x, std::array<size_t, 3> dims, int a, int b);
/// sigma on two legs of a three-leg operator: swaps tensor factors a and b.
SparseOp flip(const SparseOp& x, std::array<size_t, 3> dims, int a, int b);

}  // namespace qcenter
