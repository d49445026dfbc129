#pragma once

#include "orbitalg/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace orbitalg {

// Dense row-major matrix of rationals. Degreewise subspaces at desk scale
// stay below a few hundred columns, so no sparse storage.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  // Throws std::invalid_argument if the rows are ragged.
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  // Appends a row; the first row appended to an empty 0x0 matrix fixes cols.
  void append_row(std::span<const Rational> values);

  RationalMatrix transpose() const;

  // Column vector product m * x.
  std::vector<Rational> apply(std::span<const Rational> x) const;

  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Exact rank over Q, computed by fraction-free (Bareiss) elimination.
std::size_t rank(const RationalMatrix& m);

// True iff v is a rational combination of the rows of basis.
// Throws std::invalid_argument if v.size() != basis.cols().
bool in_span(std::span<const Rational> v, const RationalMatrix& basis);

// Some x with a * x = b, or nullopt if the system is inconsistent. Free
// variables are set to zero. Throws std::invalid_argument if b.size() != a.rows().
std::optional<std::vector<Rational>> solve_linear(const RationalMatrix& a,
                                                  std::span<const Rational> b);

// Throws std::invalid_argument for non-square input.
Rational determinant(const RationalMatrix& m);

// Rows form a basis of { x : m * x = 0 }, one row per free column.
RationalMatrix nullspace(const RationalMatrix& m);

// Span that grows one vector at a time. Rows are stored fraction-free as
// primitive integer vectors in echelon order: each stored row has a distinct
// pivot (its first nonzero column) and is zero at the pivots of all earlier
// rows. When columns are sorted from largest to smallest monomial, the pivot
// of a row is its leading monomial.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  // Returns the index of the new row if v was independent, nullopt otherwise.
  std::optional<std::size_t> insert(std::span<const Rational> v);
  bool contains(std::span<const Rational> v) const;

  std::size_t pivot(std::size_t row) const { return pivots_[row]; }
  std::vector<Rational> row(std::size_t index) const;
  RationalMatrix basis() const;

 private:
  std::vector<Integer> reduce(std::span<const Rational> v) const;

  std::size_t cols_;
  std::vector<std::vector<Integer>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace orbitalg
