#pragma once

#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opflow/errors.hpp"
#include "opflow/scalar.hpp"

namespace opflow {

/// Dense row-major matrix over ℚ.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols, std::size_t max_entries = kDefaultMaxEntries)
      : rows_(rows), cols_(cols) {
    if (cols != 0 && rows > max_entries / cols) {
      throw ResourceError("matrix of " + std::to_string(rows) + "x" + std::to_string(cols) +
                          " exceeds the entry budget of " + std::to_string(max_entries));
    }
    data_.resize(rows * cols);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Scalar> multiply(const std::vector<Scalar>& x) const {
    std::vector<Scalar> y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (data_[r * cols_ + c] != 0) y[r] += data_[r * cols_ + c] * x[c];
    return y;
  }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form with its pivot columns (one per nonzero row).
struct Echelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Exact row reduction.
///
/// Each row is first scaled by the lcm of its denominators, then the forward
/// pass runs Bareiss fraction-free elimination on integers. The pivot for a
/// column is the first remaining row with a nonzero entry; columns with no
/// such row are skipped. Back-substitution to reduced form happens over ℚ.
inline Echelon row_reduce(const RationalMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C));
  for (std::size_t r = 0; r < R; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < C; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < C; ++c) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }

  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  mpz_class t;
  std::size_t row = 0;
  for (std::size_t col = 0; col < C && row < R; ++col) {
    std::size_t p = row;
    while (p < R && a[p][col] == 0) ++p;
    if (p == R) continue;
    std::swap(a[p], a[row]);
    const mpz_class& piv = a[row][col];
    for (std::size_t i = row + 1; i < R; ++i) {
      for (std::size_t j = col + 1; j < C; ++j) {
        t = piv * a[i][j] - a[i][col] * a[row][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = piv;
    pivots.push_back(col);
    ++row;
  }

  RationalMatrix out(R, C, R * C + 1);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const mpz_class& piv = a[r][pivots[r]];
    for (std::size_t c = 0; c < C; ++c) {
      if (a[r][c] == 0) continue;
      out(r, c) = Scalar(a[r][c], piv);
      out(r, c).canonicalize();
    }
  }
  for (std::size_t r = pivots.size(); r-- > 0;) {
    const std::size_t pc = pivots[r];
    for (std::size_t above = 0; above < r; ++above) {
      const Scalar factor = out(above, pc);
      if (factor == 0) continue;
      for (std::size_t c = pc; c < C; ++c) {
        if (out(r, c) != 0) out(above, c) -= factor * out(r, c);
      }
    }
  }
  return Echelon{std::move(out), std::move(pivots)};
}

inline std::size_t rank(const RationalMatrix& m) { return row_reduce(m).rank(); }

/// Kernel basis: one vector per free column, in ascending column order, with
/// that free coordinate set to 1.
inline std::vector<std::vector<Scalar>> kernel_basis(const Echelon& e) {
  const std::size_t C = e.reduced.cols();
  std::vector<bool> is_pivot(C, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < C; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(C);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::vector<std::vector<Scalar>> kernel_basis(const RationalMatrix& m) { return kernel_basis(row_reduce(m)); }

/// Some x with m·x = b, free coordinates set to zero; nullopt if inconsistent.
inline std::optional<std::vector<Scalar>> solve(const RationalMatrix& m, const std::vector<Scalar>& b) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side length does not match matrix rows");
  RationalMatrix aug(m.rows(), m.cols() + 1, m.rows() * (m.cols() + 1) + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const Echelon e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  std::vector<Scalar> x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

}  // namespace opflow
