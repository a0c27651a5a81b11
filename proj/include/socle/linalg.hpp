#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "socle/error.hpp"

namespace socle {

/// Row-major dense matrix over an exact field.
template <class K>
class DenseMatrix {
 public:
  using value_type = typename K::value_type;

  DenseMatrix(const K& k, std::size_t rows, std::size_t cols)
      : k_(k), rows_(rows), cols_(cols), data_(rows * cols, k.zero()) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const K& field() const { return k_; }

  value_type& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const value_type& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Horizontal concatenation [A | B]; row counts must agree.
  static DenseMatrix hconcat(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows_ != b.rows_) throw StructuralError("hconcat: row count mismatch");
    DenseMatrix out(a.k_, a.rows_, a.cols_ + b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      for (std::size_t c = 0; c < a.cols_; ++c) out.at(r, c) = a.at(r, c);
      for (std::size_t c = 0; c < b.cols_; ++c) out.at(r, a.cols_ + c) = b.at(r, c);
    }
    return out;
  }

  /// Vertical concatenation; column counts must agree.
  static DenseMatrix vconcat(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.cols_) throw StructuralError("vconcat: column count mismatch");
    DenseMatrix out(a.k_, a.rows_ + b.rows_, a.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t c = 0; c < a.cols_; ++c) out.at(r, c) = a.at(r, c);
    for (std::size_t r = 0; r < b.rows_; ++r)
      for (std::size_t c = 0; c < b.cols_; ++c) out.at(a.rows_ + r, c) = b.at(r, c);
    return out;
  }

  DenseMatrix operator*(const DenseMatrix& b) const {
    if (cols_ != b.rows_) throw StructuralError("matrix product: shape mismatch");
    DenseMatrix out(k_, rows_, b.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t l = 0; l < cols_; ++l) {
        const value_type& a = at(i, l);
        if (k_.isZero(a)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          out.at(i, j) = k_.add(out.at(i, j), k_.mul(a, b.at(l, j)));
      }
    return out;
  }

  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols_ && row < rows_; ++c) {
      std::size_t p = row;
      while (p < rows_ && k_.isZero(at(p, c))) ++p;
      if (p == rows_) continue;
      swapRows(p, row);
      value_type inv = k_.inv(at(row, c));
      for (std::size_t j = c; j < cols_; ++j) at(row, j) = k_.mul(at(row, j), inv);
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row || k_.isZero(at(r, c))) continue;
        value_type f = at(r, c);
        for (std::size_t j = c; j < cols_; ++j)
          at(r, j) = k_.sub(at(r, j), k_.mul(f, at(row, j)));
      }
      pivots.push_back(c);
      ++row;
    }
    return pivots;
  }

  std::size_t rank() const {
    DenseMatrix copy = *this;
    return copy.rref().size();
  }

  /// Basis of {v : A v = 0}, as the columns of the returned matrix.
  DenseMatrix nullspace() const {
    DenseMatrix e = *this;
    auto pivots = e.rref();
    std::vector<bool> isPivot(cols_, false);
    for (auto c : pivots) isPivot[c] = true;
    std::vector<std::size_t> freeCols;
    for (std::size_t c = 0; c < cols_; ++c)
      if (!isPivot[c]) freeCols.push_back(c);
    DenseMatrix basis(k_, cols_, freeCols.size());
    for (std::size_t f = 0; f < freeCols.size(); ++f) {
      basis.at(freeCols[f], f) = k_.one();
      for (std::size_t r = 0; r < pivots.size(); ++r)
        basis.at(pivots[r], f) = k_.neg(e.at(r, freeCols[f]));
    }
    return basis;
  }

 private:
  void swapRows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
  }

  K k_;
  std::size_t rows_, cols_;
  std::vector<value_type> data_;
};

}  // namespace socle
