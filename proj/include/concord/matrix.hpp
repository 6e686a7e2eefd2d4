#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "concord/error.hpp"
#include "concord/integer.hpp"

namespace concord {

// Dense square matrix over an arbitrary entry type, row-major, value
// semantics. Dimension 0 (the empty matrix) is allowed.
template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;

  explicit SquareMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  SquareMatrix(std::size_t n, std::vector<T> entries) : n_(n), entries_(std::move(entries)) {
    if (entries_.size() != n_ * n_)
      fail(errc::dimension_mismatch, "entry count does not match dimension");
  }

  static SquareMatrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
    SquareMatrix m(rows.size());
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != m.n_) fail(errc::dimension_mismatch, "row length differs from row count");
      std::size_t j = 0;
      for (const auto& value : row) m(i, j++) = value;
      ++i;
    }
    return m;
  }

  std::size_t dimension() const { return n_; }

  const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  T& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  SquareMatrix transpose() const {
    SquareMatrix m(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.n_ != b.n_) fail(errc::dimension_mismatch, "matrix addition needs equal dimensions");
    SquareMatrix m(a.n_);
    for (std::size_t k = 0; k < m.entries_.size(); ++k) m.entries_[k] = a.entries_[k] + b.entries_[k];
    return m;
  }

  friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.n_ != b.n_) fail(errc::dimension_mismatch, "matrix subtraction needs equal dimensions");
    SquareMatrix m(a.n_);
    for (std::size_t k = 0; k < m.entries_.size(); ++k) m.entries_[k] = a.entries_[k] - b.entries_[k];
    return m;
  }

  static SquareMatrix block_diag(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix m(a.n_ + b.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t j = 0; j < a.n_; ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.n_; ++i)
      for (std::size_t j = 0; j < b.n_; ++j) m(a.n_ + i, a.n_ + j) = b(i, j);
    return m;
  }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const SquareMatrix& a, const SquareMatrix& b) { return !(a == b); }

 private:
  std::size_t n_ = 0;
  std::vector<T> entries_;
};

using IntMatrix = SquareMatrix<Int>;

}  // namespace concord
