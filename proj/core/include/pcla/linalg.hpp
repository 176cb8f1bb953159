#pragma once

#include <cstddef>
#include <vector>

#include "pcla/scalar.hpp"

namespace pcla {

/// Dense matrix over exact rationals.  Small: everything here runs at desk
/// scale, so clarity beats sparsity.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  /// In-place reduced row echelon form; returns the pivot column of each
  /// surviving row, in order.  Zero rows are dropped.
  std::vector<std::size_t> rref();

  /// Canonical basis of the right kernel {x : Mx = 0}, one solution per row,
  /// already in reduced row echelon form.
  QMatrix kernel() const;

  bool operator==(const QMatrix&) const = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

/// Row echelon accumulator over integer rows, used where many spanning
/// vectors reduce against each other.  Rows are kept fraction-free and
/// stripped to primitive content; the reduced echelon form with unit pivots
/// is extracted at the end.
class IntEchelon {
public:
  explicit IntEchelon(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Reduces `row` against the current basis and inserts the remainder if it
  /// is nonzero.  Returns true when the rank grew.
  bool insert(std::vector<Integer> row);

  /// Reduced row echelon form over the rationals (unit pivots), rows ordered
  /// by pivot column.
  QMatrix reduced() const;

  /// Pivot columns in increasing order.
  std::vector<std::size_t> pivots() const;

private:
  std::size_t cols_;
  // Sorted by pivot column; each row's leading entry is positive.
  std::vector<std::vector<Integer>> rows_;
  std::vector<std::size_t> pivot_cols_;
};

}  // namespace pcla
