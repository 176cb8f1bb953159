#include "pcla/linalg.hpp"

#include <algorithm>

namespace pcla {

std::vector<std::size_t> QMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t sel = row;
    while (sel < rows_ && is_zero(at(sel, col))) ++sel;
    if (sel == rows_) continue;
    if (sel != row)
      for (std::size_t c = 0; c < cols_; ++c) std::swap(at(row, c), at(sel, c));
    const Scalar inv = Scalar(1) / at(row, col);
    for (std::size_t c = col; c < cols_; ++c) at(row, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || is_zero(at(r, col))) continue;
      const Scalar f = at(r, col);
      for (std::size_t c = col; c < cols_; ++c) at(r, c) -= f * at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  // Drop the all-zero tail.
  data_.resize(row * cols_);
  rows_ = row;
  return pivots;
}

QMatrix QMatrix::kernel() const {
  QMatrix m = *this;
  const std::vector<std::size_t> pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  QMatrix k(free_cols.size(), cols_);
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    const std::size_t fc = free_cols[i];
    k.at(i, fc) = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      k.at(i, pivots[r]) = -m.at(r, fc);
  }
  k.rref();
  return k;
}

bool IntEchelon::insert(std::vector<Integer> row) {
  if (row.size() != cols_) throw Error("echelon row length mismatch");
  auto leading = [&](const std::vector<Integer>& r) -> std::size_t {
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn(r[c]) != 0) return c;
    return cols_;
  };

  std::size_t lead = leading(row);
  while (lead < cols_) {
    const auto it =
        std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), lead);
    if (it == pivot_cols_.end() || *it != lead) {
      // New pivot: strip content, keep the leading entry positive.
      Integer g = row[lead];
      for (std::size_t c = lead + 1; c < cols_ && g != 1 && g != -1; ++c)
        if (sgn(row[c]) != 0) g = gcd(g, row[c]);
      if (sgn(g) < 0) g = -g;
      if (sgn(row[lead]) < 0) g = -g;
      for (std::size_t c = lead; c < cols_; ++c) row[c] /= g;
      const std::size_t pos =
          static_cast<std::size_t>(it - pivot_cols_.begin());
      pivot_cols_.insert(it, lead);
      rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos),
                   std::move(row));
      return true;
    }
    // Fraction-free cancellation against the existing pivot row.
    const std::vector<Integer>& base =
        rows_[static_cast<std::size_t>(it - pivot_cols_.begin())];
    const Integer a = base[lead];
    const Integer b = row[lead];
    const Integer g = gcd(a, b);
    const Integer fa = a / g;
    const Integer fb = b / g;
    for (std::size_t c = lead; c < cols_; ++c)
      row[c] = row[c] * fa - base[c] * fb;
    lead = leading(row);
  }
  return false;
}

std::vector<std::size_t> IntEchelon::pivots() const { return pivot_cols_; }

QMatrix IntEchelon::reduced() const {
  QMatrix m(rows_.size(), cols_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Integer& p = rows_[r][pivot_cols_[r]];
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn(rows_[r][c]) != 0) m.at(r, c) = make_scalar(rows_[r][c], p);
  }
  // Back-substitution: eliminate later pivots from earlier rows.
  for (std::size_t r = rows_.size(); r-- > 0;) {
    for (std::size_t later = r + 1; later < rows_.size(); ++later) {
      const std::size_t pc = pivot_cols_[later];
      if (is_zero(m.at(r, pc))) continue;
      const Scalar f = m.at(r, pc);
      for (std::size_t c = pc; c < cols_; ++c)
        m.at(r, c) -= f * m.at(later, c);
    }
  }
  return m;
}

}  // namespace pcla
