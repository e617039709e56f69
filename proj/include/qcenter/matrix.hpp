#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qcenter/cyclotomic.hpp"

namespace qcenter {

using Vec = std::vector<CycloScalar>;

/// Dense row-major matrix over the cyclotomic scalars.
class Mat {
 public:
  Mat() = default;
  Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Mat identity(size_t n);
  /// Matrix unit E_ij of the given size.
  static Mat unit(size_t n, size_t i, size_t j);
  /// Inverse of vec(): row-major reshape.
  static Mat from_vec(size_t rows, size_t cols, const Vec& v);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  CycloScalar& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const CycloScalar& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }
  const Vec& vec() const { return data_; }

  Mat adjoint() const;
  Mat transpose() const;
  Mat conj() const;
  CycloScalar trace() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  size_t nonzeros() const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const CycloScalar& s);
  /// this += s * o
  void add_scaled(const CycloScalar& s, const Mat& o);

  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator*(const CycloScalar& s, const Mat& a);
  friend bool operator==(const Mat& a, const Mat& b);

  std::string str() const;

 private:
  size_t rows_ = 0, cols_ = 0;
  Vec data_;
};

Mat kron(const Mat& a, const Mat& b);
/// Commutator ab - ba.
Mat commutator(const Mat& a, const Mat& b);

/// Flip of the two tensor legs of an operator on C^m (x) C^n.
Mat swap_legs(const Mat& x, size_t m, size_t n);

/// Block (i, j) of an operator on C^m (x) C^n, i.e. the slice (omega_ij (x) id).
Mat left_slice(const Mat& x, size_t m, size_t n, size_t i, size_t j);
/// The slice (id (x) omega_ij).
Mat right_slice(const Mat& x, size_t m, size_t n, size_t i, size_t j);

bool is_zero(const Vec& v);

}  // namespace qcenter
