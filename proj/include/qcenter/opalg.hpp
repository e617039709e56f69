#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "qcenter/subspace.hpp"

namespace qcenter {

/// Linear subspace of operators on C^d, stored through the row-major
/// vectorization in K^{d^2}. Flags are computed on first use.
class OperatorSubspace {
 public:
  struct Flags {
    bool is_star_closed = false;
    bool is_algebra = false;
    bool is_unital = false;
  };

  explicit OperatorSubspace(size_t gns_dim = 0) : d_(gns_dim), space_(gns_dim * gns_dim) {}
  OperatorSubspace(size_t gns_dim, Subspace space);

  static OperatorSubspace span(size_t gns_dim, const std::vector<Mat>& ops);
  static OperatorSubspace scalars(size_t gns_dim);
  static OperatorSubspace full(size_t gns_dim);

  size_t gns_dim() const { return d_; }
  size_t dim() const { return space_.dim(); }
  const Subspace& space() const { return space_; }
  Mat element(size_t i) const;
  std::vector<Mat> elements() const;

  bool insert(const Mat& x);
  bool contains(const Mat& x) const;
  bool contains(const OperatorSubspace& o) const;
  /// Coefficients of x in the echelon basis, or nullopt when x is outside.
  std::optional<Vec> coordinates(const Mat& x) const;

  const Flags& flags() const;

  friend bool operator==(const OperatorSubspace& a, const OperatorSubspace& b) {
    return a.d_ == b.d_ && a.space_ == b.space_;
  }
  friend OperatorSubspace intersect(const OperatorSubspace& a, const OperatorSubspace& b);

 private:
  size_t d_;
  Subspace space_;
  mutable std::shared_ptr<std::once_flag> once_ = std::make_shared<std::once_flag>();
  mutable std::shared_ptr<Flags> flags_;
};

/// Smallest (unital) *-closed algebra containing the generators.
OperatorSubspace generate_algebra(size_t gns_dim, const std::vector<Mat>& generators, bool unital = true);
OperatorSubspace commutant(const OperatorSubspace& n);
/// N' intersected with M, solved inside M.
OperatorSubspace relative_commutant(const OperatorSubspace& n, const OperatorSubspace& m);
/// Throws std::invalid_argument("not an algebra") unless N is an algebra.
OperatorSubspace center_of_algebra(const OperatorSubspace& n);
bool is_abelian(const OperatorSubspace& n);

/// Finite-dimensional *-algebra in coordinates: structure constants, unit,
/// and the antilinear involution. Optionally carries an operator basis.
class AlgebraTable {
 public:
  AlgebraTable() = default;
  /// From a unital *-closed operator algebra; coordinates follow its echelon basis.
  static AlgebraTable from_operators(const OperatorSubspace& algebra);
  /// From abstract data: prod[i][j] = coords of b_i b_j, star column k = coords of b_k^*.
  static AlgebraTable from_constants(std::vector<std::vector<Vec>> prod, Vec unit, Mat star);

  size_t dim() const { return prod_.size(); }
  const Vec& unit() const { return unit_; }
  const Mat& star_matrix() const { return star_; }
  const std::vector<std::vector<Vec>>& constants() const { return prod_; }
  bool has_operators() const { return !ops_.empty(); }
  const OperatorSubspace& operator_space() const { return space_; }
  const std::vector<Mat>& operators() const { return ops_; }

  Vec mul(const Vec& a, const Vec& b) const;
  Vec adjoint(const Vec& a) const;
  Vec basis_vector(size_t i) const;
  /// Operator for a coordinate vector (requires operators).
  Mat element(const Vec& c) const;
  /// Coordinates of an operator, nullopt when outside the algebra.
  std::optional<Vec> coords(const Mat& x) const;
  /// Coordinates read off the pivot entries without a membership check.
  Vec coords_unchecked(const Mat& x) const;

  Subspace center() const;
  /// {x : x n = n x for all n in N} (N given in coordinates).
  Subspace relative_commutant(const Subspace& n) const;
  /// Unital *-subalgebra generated by the given coordinate vectors.
  Subspace generate(const std::vector<Vec>& gens, bool unital = true) const;
  bool is_subalgebra(const Subspace& s) const;
  bool is_star_closed(const Subspace& s) const;
  /// Convert a coordinate subspace to operators.
  OperatorSubspace to_operators(const Subspace& s) const;

 private:
  std::vector<std::vector<Vec>> prod_;
  Vec unit_;
  Mat star_;
  OperatorSubspace space_;
  std::vector<Mat> ops_;
};

/// Wedderburn data of a semisimple *-algebra: per block the minimal central
/// projection and *-matrix units e_ab (e_ab^* = e_ba, e_ab e_cd = delta_bc e_ad).
struct MatrixUnits {
  struct Block {
    size_t size = 0;
    Vec central;
    std::vector<std::vector<Vec>> e;  // e[a][b]
  };
  std::vector<Block> blocks;
};

/// Minimal central projections of the algebra, in coordinates.
std::vector<Vec> minimal_central_projections(const AlgebraTable& a);
/// Throws std::runtime_error when an eigenvalue or a normalizing square root
/// falls outside what the exact root finder can produce.
MatrixUnits matrix_units(const AlgebraTable& a);

/// Roots of a polynomial (coefficients low to high) that the candidate search
/// finds exactly: rationals, roots of unity, 2cos values, and quadratic leftovers.
std::vector<CycloScalar> find_roots(std::vector<CycloScalar> poly);

}  // namespace qcenter
