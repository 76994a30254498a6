#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "nilo/rational.hpp"

namespace nilo {

/// Reduced row echelon form in place over an exact field scalar.
/// Returns the pivot columns in increasing order.
template <typename Scalar>
std::vector<Eigen::Index> rref_in_place(
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pr = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (m(i, c) != Scalar(0)) { pr = i; break; }
    }
    if (pr < 0) continue;
    if (pr != r) m.row(pr).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == Scalar(0)) continue;
      const Scalar f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <typename Derived>
Eigen::Index rank_of(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> w = m;
  return static_cast<Eigen::Index>(rref_in_place(w).size());
}

/// Columns of the result form a basis of the (right) kernel of m.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> kernel_basis(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Mat w = m;
  const std::vector<Eigen::Index> pivots = rref_in_place(w);
  const Eigen::Index cols = m.cols();
  std::vector<Eigen::Index> free_cols;
  {
    std::size_t k = 0;
    for (Eigen::Index c = 0; c < cols; ++c) {
      if (k < pivots.size() && pivots[k] == c) { ++k; continue; }
      free_cols.push_back(c);
    }
  }
  Mat basis(cols, static_cast<Eigen::Index>(free_cols.size()));
  basis.setZero();
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    const Eigen::Index f = free_cols[j];
    basis(f, static_cast<Eigen::Index>(j)) = Scalar(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      basis(pivots[k], static_cast<Eigen::Index>(j)) =
          -w(static_cast<Eigen::Index>(k), f);
    }
  }
  return basis;
}

/// One solution of A x = b, if the system is consistent.
template <typename DerivedA, typename DerivedB>
std::optional<Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, 1>> solve_any(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Mat w(rows, cols + 1);
  w.leftCols(cols) = a;
  w.col(cols) = b;
  const std::vector<Eigen::Index> pivots = rref_in_place(w);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  Vec x = Vec::Zero(cols);
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    x(pivots[k]) = w(static_cast<Eigen::Index>(k), cols);
  }
  return x;
}

/// Whether v lies in the span of the columns of c.
template <typename DerivedC, typename DerivedV>
bool in_column_span(const Eigen::MatrixBase<DerivedC>& c,
                    const Eigen::MatrixBase<DerivedV>& v) {
  return solve_any(c, v).has_value();
}

/// Incremental row-space accumulator: keeps a reduced echelon basis of the
/// span of all inserted vectors. Insertion and membership are exact.
template <typename Scalar>
class RowSpan {
public:
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  explicit RowSpan(Eigen::Index cols) : cols_(cols) {}

  Eigen::Index cols() const { return cols_; }
  Eigen::Index dim() const { return static_cast<Eigen::Index>(rows_.size()); }
  bool full() const { return dim() == cols_; }

  /// Returns true if v enlarged the span.
  bool insert(Vec v) {
    if (!reduce(v)) return false;
    Eigen::Index p = 0;
    while (v(p) == Scalar(0)) ++p;
    const Scalar inv = Scalar(1) / v(p);
    for (Eigen::Index j = p; j < cols_; ++j) v(j) = v(j) * inv;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Scalar f = rows_[k](p);
      if (f != Scalar(0)) rows_[k] -= f * v;
    }
    rows_.push_back(std::move(v));
    pivot_.push_back(p);
    return true;
  }

  bool contains(Vec v) const { return !reduce(v); }

private:
  /// Reduces v by the stored rows; returns true if a nonzero remainder is left.
  bool reduce(Vec& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Scalar f = v(pivot_[k]);
      if (f != Scalar(0)) v -= f * rows_[k];
    }
    for (Eigen::Index j = 0; j < cols_; ++j) {
      if (v(j) != Scalar(0)) return true;
    }
    return false;
  }

  Eigen::Index cols_;
  std::vector<Vec> rows_;
  std::vector<Eigen::Index> pivot_;
};

using RowSpanQ = RowSpan<Rational>;

}  // namespace nilo
