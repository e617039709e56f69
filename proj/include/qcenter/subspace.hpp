#pragma once

#include <optional>
#include <vector>

#include "qcenter/matrix.hpp"

namespace qcenter {

/// Linear subspace of K^n held as a reduced row echelon basis. The RREF is
/// unique, so two subspaces are equal exactly when their bases are.
class Subspace {
 public:
  explicit Subspace(size_t ambient = 0) : ambient_(ambient) {}

  static Subspace span(size_t ambient, const std::vector<Vec>& vectors);
  static Subspace full(size_t ambient);

  size_t ambient() const { return ambient_; }
  size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  /// pivots()[i] is the leading column of basis()[i]; basis()[i][pivots()[j]] = delta_ij.
  const std::vector<size_t>& pivots() const { return pivots_; }

  /// Adds v to the span; returns true if the dimension grew.
  bool insert(Vec v);
  /// v minus its echelon reduction against the basis (zero iff v is in the span).
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of v in basis(), or nullopt when v is outside the span.
  std::optional<Vec> coordinates(const Vec& v) const;
  /// {a : sum_j a_j v_j = 0 for every v in the span} (bilinear, no conjugation).
  Subspace annihilator() const;
  /// Combination sum_i c_i basis()[i].
  Vec combine(const Vec& c) const;

  friend Subspace intersect(const Subspace& a, const Subspace& b);
  friend Subspace operator+(const Subspace& a, const Subspace& b);
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  size_t ambient_;
  std::vector<Vec> basis_;
  std::vector<size_t> pivots_;
};

/// {x : r . x = 0 for every row r}.
Subspace kernel(const std::vector<Vec>& rows, size_t ncols);
/// Some x with r_i . x = rhs_i for all i, or nullopt when inconsistent.
std::optional<Vec> solve(const std::vector<Vec>& rows, const Vec& rhs, size_t ncols);

CycloScalar dot(const Vec& a, const Vec& b);
/// Inverse of a square matrix, nullopt when singular.
std::optional<Mat> inverse(const Mat& m);

}  // namespace qcenter
