#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "swlab/error.hpp"
#include "swlab/ring.hpp"

namespace swlab {

/// Dense row-major matrix. Entries are ring codes (`Elem`) or integers (`Int`);
/// the ring is passed to the algorithms that need one.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) fail(Errc::dimension_mismatch, "ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) fail(Errc::dimension_mismatch, "row length mismatch");
      std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  const std::vector<T>& data() const { return data_; }
  std::vector<T>& data() { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using Vec = std::vector<Elem>;
using IntVec = std::vector<Int>;

inline Matrix<Elem> identity_matrix(std::size_t n) {
  Matrix<Elem> m(n, n, 0);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

inline Matrix<Elem> multiply(const Ring& ring, const Matrix<Elem>& a, const Matrix<Elem>& b) {
  if (a.cols() != b.rows()) fail(Errc::dimension_mismatch, "matrix product");
  Matrix<Elem> c(a.rows(), b.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Elem f = a(i, k);
      if (f == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = ring.add(c(i, j), ring.mul(f, b(k, j)));
    }
  return c;
}

inline Matrix<Int> multiply(const Matrix<Int>& a, const Matrix<Int>& b) {
  if (a.cols() != b.rows()) fail(Errc::dimension_mismatch, "matrix product");
  Matrix<Int> c(a.rows(), b.cols(), Int(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

inline Vec apply(const Ring& ring, const Matrix<Elem>& a, std::span<const Elem> v) {
  if (a.cols() != v.size()) fail(Errc::dimension_mismatch, "matrix-vector product");
  Vec out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Elem s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (v[j] != 0 && a(i, j) != 0) s = ring.add(s, ring.mul(a(i, j), v[j]));
    out[i] = s;
  }
  return out;
}

inline Matrix<Elem> add(const Ring& ring, const Matrix<Elem>& a, const Matrix<Elem>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail(Errc::dimension_mismatch, "matrix sum");
  Matrix<Elem> c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = ring.add(a(i, j), b(i, j));
  return c;
}

inline Matrix<Elem> scale(const Ring& ring, Elem f, const Matrix<Elem>& a) {
  Matrix<Elem> c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = ring.mul(f, a(i, j));
  return c;
}

inline Matrix<Elem> kronecker(const Ring& ring, const Matrix<Elem>& a, const Matrix<Elem>& b) {
  Matrix<Elem> c(a.rows() * b.rows(), a.cols() * b.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c(i * b.rows() + k, j * b.cols() + l) = ring.mul(a(i, j), b(k, l));
    }
  return c;
}

/// Flattens row-major into a single vector.
template <class T>
std::vector<T> flatten(const Matrix<T>& m) {
  return m.data();
}

}  // namespace swlab
