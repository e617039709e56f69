#include "qcenter/matrix.hpp"

#include <stdexcept>

namespace qcenter {

namespace {

void check_same_shape(const Mat& a, const Mat& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument(std::string("shape mismatch in ") + op);
}

}  // namespace

Mat Mat::identity(size_t n) {
  Mat m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = CycloScalar(1);
  return m;
}

Mat Mat::unit(size_t n, size_t i, size_t j) {
  Mat m(n, n);
  m(i, j) = CycloScalar(1);
  return m;
}

Mat Mat::from_vec(size_t rows, size_t cols, const Vec& v) {
  if (v.size() != rows * cols) throw std::invalid_argument("from_vec: size mismatch");
  Mat m(rows, cols);
  m.data_ = v;
  return m;
}

Mat Mat::adjoint() const {
  Mat m(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) m(j, i) = (*this)(i, j).conj();
  return m;
}

Mat Mat::transpose() const {
  Mat m(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Mat Mat::conj() const {
  Mat m = *this;
  for (auto& v : m.data_)
    if (!v.is_rational()) v = v.conj();
  return m;
}

CycloScalar Mat::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  CycloScalar t;
  for (size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool Mat::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

size_t Mat::nonzeros() const {
  size_t n = 0;
  for (const auto& v : data_) n += !v.is_zero();
  return n;
}

Mat& Mat::operator+=(const Mat& o) {
  check_same_shape(*this, o, "+");
  for (size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  check_same_shape(*this, o, "-");
  for (size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
  return *this;
}

Mat& Mat::operator*=(const CycloScalar& s) {
  for (auto& v : data_)
    if (!v.is_zero()) v *= s;
  return *this;
}

void Mat::add_scaled(const CycloScalar& s, const Mat& o) {
  check_same_shape(*this, o, "add_scaled");
  if (s.is_zero()) return;
  for (size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i].add_product(s, o.data_[i]);
}

Mat operator+(const Mat& a, const Mat& b) {
  Mat r = a;
  r += b;
  return r;
}

Mat operator-(const Mat& a, const Mat& b) {
  Mat r = a;
  r -= b;
  return r;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch in *");
  Mat r(a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i) {
    for (size_t k = 0; k < a.cols_; ++k) {
      const CycloScalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < b.cols_; ++j) {
        const CycloScalar& y = b(k, j);
        if (!y.is_zero()) r(i, j).add_product(x, y);
      }
    }
  }
  return r;
}

Mat operator*(const CycloScalar& s, const Mat& a) {
  Mat r = a;
  r *= s;
  return r;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Mat::str() const {
  std::string out = "[";
  for (size_t i = 0; i < rows_; ++i) {
    out += i ? "; " : "";
    for (size_t j = 0; j < cols_; ++j) out += (j ? " " : "") + (*this)(i, j).str();
  }
  return out + "]";
}

Mat kron(const Mat& a, const Mat& b) {
  Mat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      const CycloScalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  return r;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Mat swap_legs(const Mat& x, size_t m, size_t n) {
  if (x.rows() != m * n || x.cols() != m * n) throw std::invalid_argument("swap_legs: shape");
  Mat r(m * n, m * n);
  for (size_t i = 0; i < m; ++i)
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < m; ++j)
        for (size_t l = 0; l < n; ++l) {
          const CycloScalar& v = x(i * n + k, j * n + l);
          if (!v.is_zero()) r(k * m + i, l * m + j) = v;
        }
  return r;
}

Mat left_slice(const Mat& x, size_t m, size_t n, size_t i, size_t j) {
  if (x.rows() != m * n || x.cols() != m * n) throw std::invalid_argument("left_slice: shape");
  Mat r(n, n);
  for (size_t k = 0; k < n; ++k)
    for (size_t l = 0; l < n; ++l) r(k, l) = x(i * n + k, j * n + l);
  return r;
}

Mat right_slice(const Mat& x, size_t m, size_t n, size_t i, size_t j) {
  if (x.rows() != m * n || x.cols() != m * n) throw std::invalid_argument("right_slice: shape");
  Mat r(m, m);
  for (size_t k = 0; k < m; ++k)
    for (size_t l = 0; l < m; ++l) r(k, l) = x(k * n + i, l * n + j);
  return r;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace qcenter
