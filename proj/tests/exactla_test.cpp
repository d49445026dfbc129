#include "orbitalg/matrix.hpp"

#include <gtest/gtest.h>

#include <random>

namespace {

using orbitalg::IncrementalSpan;
using orbitalg::Rational;
using orbitalg::RationalMatrix;

RationalMatrix m(const std::vector<std::vector<Rational>>& rows) {
  return RationalMatrix::from_rows(rows);
}

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  RationalMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      // Sparse small entries so low-rank cases are common.
      const long v = static_cast<long>(rng() % 7) - 3;
      out(r, c) = (rng() % 3 == 0) ? Rational(v, static_cast<long>(rng() % 4) + 1) : Rational(0);
      out(r, c).canonicalize();
    }
  return out;
}

TEST(Rank, ProportionalRows) { EXPECT_EQ(rank(m({{1, 2}, {2, 4}})), 1u); }

TEST(Rank, ZeroMatrix) { EXPECT_EQ(rank(RationalMatrix(3, 3)), 0u); }

TEST(Rank, Identity) { EXPECT_EQ(rank(RationalMatrix::identity(4)), 4u); }

TEST(Rank, EmptyMatrix) { EXPECT_EQ(rank(RationalMatrix()), 0u); }

TEST(Rank, RationalEntries) {
  EXPECT_EQ(rank(m({{Rational(1, 2), Rational(1, 3)}, {Rational(3, 2), 1}})), 1u);
  EXPECT_EQ(rank(m({{Rational(1, 2), Rational(1, 3)}, {Rational(3, 2), 2}})), 2u);
}

TEST(Rank, EqualsRankOfTranspose) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6);
    EXPECT_EQ(rank(a), rank(a.transpose()));
  }
}

TEST(InSpan, Examples) {
  const std::vector<Rational> v01{0, 1}, v24{2, 4}, v111{1, 1, 1};
  EXPECT_FALSE(in_span(v01, m({{1, 0}})));
  EXPECT_TRUE(in_span(v24, m({{1, 2}})));
  EXPECT_TRUE(in_span(v111, RationalMatrix::identity(3)));
}

TEST(InSpan, ZeroVectorAlwaysInSpan) {
  const std::vector<Rational> zero{0, 0};
  EXPECT_TRUE(in_span(zero, RationalMatrix(0, 2)));
}

TEST(InSpan, DimensionMismatchThrows) {
  const std::vector<Rational> v{1, 2, 3};
  EXPECT_THROW(static_cast<void>(in_span(v, m({{1, 0}}))), std::invalid_argument);
}

TEST(InSpan, AgreesWithRankOfAppendedMatrix) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t cols = 1 + rng() % 5;
    const auto basis = random_matrix(rng, rng() % 5, cols);
    const auto probe = random_matrix(rng, 1, cols);
    RationalMatrix extended = basis.rows() ? basis : RationalMatrix();
    extended.append_row(probe.row(0));
    const bool expected = rank(extended) == rank(basis);
    if (basis.rows() == 0) {
      EXPECT_EQ(in_span(probe.row(0), RationalMatrix(0, cols)), expected);
    } else {
      EXPECT_EQ(in_span(probe.row(0), basis), expected);
    }
  }
}

TEST(SolveLinear, Examples) {
  const std::vector<Rational> b1{3, Rational(-1, 2)};
  auto x = solve_linear(RationalMatrix::identity(2), b1);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, b1);

  const std::vector<Rational> b2{0, 1};
  EXPECT_FALSE(solve_linear(m({{1, 1}, {1, 1}}), b2).has_value());

  const std::vector<Rational> b3{1};
  x = solve_linear(m({{2}}), b3);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, std::vector<Rational>{Rational(1, 2)});
}

TEST(SolveLinear, DimensionMismatchThrows) {
  const std::vector<Rational> b{1, 2, 3};
  EXPECT_THROW(static_cast<void>(solve_linear(RationalMatrix::identity(2), b)),
               std::invalid_argument);
}

TEST(SolveLinear, SolutionsAreExact) {
  std::mt19937_64 rng(13);
  int solved = 0;
  for (int t = 0; t < 300; ++t) {
    const auto a = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5);
    const auto bm = random_matrix(rng, 1, a.rows());
    const std::vector<Rational> b(bm.row(0).begin(), bm.row(0).end());
    const auto x = solve_linear(a, b);
    // Consistency is decided by the rank of the augmented matrix.
    RationalMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
      aug(r, a.cols()) = b[r];
    }
    EXPECT_EQ(x.has_value(), rank(aug) == rank(a));
    if (x) {
      ++solved;
      EXPECT_EQ(a.apply(*x), b);
    }
  }
  EXPECT_GT(solved, 0);
}

TEST(Determinant, SmallCases) {
  EXPECT_EQ(determinant(RationalMatrix::identity(3)), 1);
  EXPECT_EQ(determinant(m({{1, 2}, {3, 4}})), -2);
  EXPECT_EQ(determinant(m({{0, 1}, {1, 0}})), -1);
  EXPECT_EQ(determinant(m({{1, 2}, {2, 4}})), 0);
  EXPECT_EQ(determinant(m({{Rational(1, 2), 0}, {0, Rational(2, 3)}})), Rational(1, 3));
  EXPECT_EQ(determinant(m({{2, 0, 0}, {0, 2, 0}, {0, 0, -2}})), -8);
}

TEST(Determinant, NonSquareThrows) {
  EXPECT_THROW(static_cast<void>(determinant(RationalMatrix(2, 3))), std::invalid_argument);
}

TEST(Determinant, NonzeroIffFullRank) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const auto a = random_matrix(rng, n, n);
    EXPECT_EQ(determinant(a) != 0, rank(a) == n);
  }
}

TEST(Nullspace, RankNullity) {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5);
    const auto k = nullspace(a);
    EXPECT_EQ(k.rows() + rank(a), a.cols());
    EXPECT_EQ(rank(k), k.rows());
    for (std::size_t r = 0; r < k.rows(); ++r)
      EXPECT_EQ(a.apply(k.row(r)), std::vector<Rational>(a.rows(), Rational(0)));
  }
}

TEST(IncrementalSpan, TracksRankAndMembership) {
  IncrementalSpan span(3);
  const std::vector<Rational> a{1, 2, 3}, b{2, 4, 6}, c{0, 1, Rational(1, 2)}, d{1, 3, Rational(7, 2)};
  EXPECT_EQ(span.insert(a), std::optional<std::size_t>(0));
  EXPECT_FALSE(span.insert(b).has_value());
  EXPECT_EQ(span.insert(c), std::optional<std::size_t>(1));
  EXPECT_TRUE(span.contains(d));
  EXPECT_FALSE(span.insert(d).has_value());
  EXPECT_EQ(span.rank(), 2u);
  EXPECT_EQ(rank(span.basis()), 2u);
}

TEST(IncrementalSpan, PivotsAreDistinctLeadingColumns) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    const std::size_t cols = 2 + rng() % 5;
    IncrementalSpan span(cols);
    RationalMatrix inserted;
    for (int i = 0; i < 6; ++i) {
      const auto v = random_matrix(rng, 1, cols);
      const bool independent = !span.contains(v.row(0));
      EXPECT_EQ(span.insert(v.row(0)).has_value(), independent);
      inserted.append_row(v.row(0));
    }
    EXPECT_EQ(span.rank(), rank(inserted));
    std::vector<std::size_t> pivots;
    for (std::size_t r = 0; r < span.rank(); ++r) {
      const auto row = span.row(r);
      std::size_t first = 0;
      while (row[first] == 0) ++first;
      EXPECT_EQ(first, span.pivot(r));
      for (std::size_t q : pivots) EXPECT_EQ(row[q], 0);
      pivots.push_back(span.pivot(r));
    }
    // Every stored row lies in the span of the inserted vectors and vice versa.
    const auto basis = span.basis();
    for (std::size_t r = 0; r < inserted.rows(); ++r)
      if (basis.rows()) {
        EXPECT_TRUE(in_span(inserted.row(r), basis));
      }
  }
}

}  // namespace
