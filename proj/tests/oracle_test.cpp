#include "frozen.hpp"
#include "oracle.hpp"

#include "orbitalg/parse.hpp"

#include <gtest/gtest.h>

namespace {

using orbitalg::Monomial;
using orbitalg::Polynomial;
using orbitalg::Rational;

const orbitalg::LieAlgebra kSl2 = orbitalg::builtin_algebra("sl2r");
const orbitalg::LieAlgebra kSo3 = orbitalg::builtin_algebra("so3");
const orbitalg::LieAlgebra kHeis1 = orbitalg::builtin_algebra("heisenberg", 1);

Polynomial identity(const Polynomial& f) { return f; }
Polynomial hyperboloid(const Polynomial& f) { return oracle::hyperboloid_substitute(f, 1); }
Polynomial cone(const Polynomial& f) { return oracle::hyperboloid_substitute(f, 0); }
Polynomial heisenberg(const Polynomial& f) { return oracle::central_substitute(f, 1); }

Polynomial p(std::string_view text) {
  return orbitalg::parse_polynomial(text, kSl2.basis());
}

// Pairs of normal monomials (a, b) with deg a + deg b - 1 <= bound.
std::vector<std::pair<Monomial, Monomial>> pairs_upto(const std::vector<Monomial>& normal,
                                                      std::uint32_t bound) {
  std::vector<std::pair<Monomial, Monomial>> out;
  for (const auto& a : normal)
    for (const auto& b : normal)
      if (a.degree() + b.degree() >= 1 && a.degree() + b.degree() - 1 <= bound) out.emplace_back(a, b);
  return out;
}

std::vector<std::vector<Rational>> bracket_rows(const orbitalg::LieAlgebra& g,
                                                const std::vector<Monomial>& ambient,
                                                const std::vector<std::pair<Monomial, Monomial>>& pairs,
                                                const oracle::Reducer& reduce) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& [a, b] : pairs)
    rows.push_back(oracle::coordinates(
        ambient, reduce(oracle::leibniz_bracket(g, Polynomial::term(a, 1), Polynomial::term(b, 1)))));
  return rows;
}

TEST(Oracle, Sl2InvariantDimensionsByWeightCounting) {
  for (std::uint32_t n = 0; n <= 6; ++n) EXPECT_EQ(oracle::sl2_invariant_dimension(n), frozen::kInvariantDims[n]);
}

TEST(Oracle, LeibnizBracketOnLinearPairs) {
  const auto x = p("x"), y = p("y"), z = p("z");
  EXPECT_EQ(oracle::leibniz_bracket(kSl2, x, y), -z);
  EXPECT_EQ(oracle::leibniz_bracket(kSl2, y, z), x);
  EXPECT_TRUE(oracle::leibniz_bracket(kSl2, p("x^2 + y^2 - z^2"), p("x*y*z + z^3 - 2*y")).is_zero());
}

TEST(Oracle, FreeDerivedDimensions) {
  for (std::uint32_t n = 0; n <= 6; ++n) {
    const auto ambient = oracle::all_monomials(3, n);
    EXPECT_EQ(ambient.size(), frozen::kSymmetricDims[n]);
    for (const auto* g : {&kSl2, &kSo3}) {
      std::vector<std::pair<Monomial, Monomial>> pairs;
      for (std::size_t i = 0; i < 3; ++i)
        for (const auto& m : oracle::all_monomials(3, n)) pairs.emplace_back(Monomial::variable(3, i), m);
      EXPECT_EQ(oracle::bracket_span_rank(*g, ambient, pairs, identity), frozen::kDerivedDims[n]) << n;
    }
  }
}

TEST(Oracle, FreeDerivedDimensionsFromAllPairs) {
  for (std::uint32_t n = 0; n <= 4; ++n) {
    std::vector<std::pair<Monomial, Monomial>> pairs;
    for (std::uint32_t a = 1; a <= n; ++a)
      for (const auto& ma : oracle::all_monomials(3, a))
        for (const auto& mb : oracle::all_monomials(3, n + 1 - a)) pairs.emplace_back(ma, mb);
    if (n == 0) continue;
    EXPECT_EQ(oracle::bracket_span_rank(kSl2, oracle::all_monomials(3, n), pairs, identity),
              frozen::kDerivedDims[n]);
  }
}

TEST(Oracle, HyperboloidDerivedSpan) {
  for (std::uint32_t b = 0; b <= 5; ++b) {
    const auto ambient = oracle::normal_basis(3, b, hyperboloid);
    EXPECT_EQ(ambient.size(), frozen::kHyperboloidNormalDims[b]);
    const auto rows = bracket_rows(kSl2, ambient, pairs_upto(ambient, b), hyperboloid);
    EXPECT_EQ(oracle::gauss_rank(rows), frozen::kHyperboloidDerivedRanks[b]) << b;
    EXPECT_FALSE(oracle::in_row_span(rows, oracle::coordinates(ambient, p("1")))) << b;
  }
}

TEST(Oracle, HyperboloidSquaresAtBoundFive) {
  const auto ambient = oracle::normal_basis(3, 5, hyperboloid);
  const auto rows = bracket_rows(kSl2, ambient, pairs_upto(ambient, 5), hyperboloid);
  EXPECT_FALSE(oracle::in_row_span(rows, oracle::coordinates(ambient, p("x^2"))));
  EXPECT_FALSE(oracle::in_row_span(rows, oracle::coordinates(ambient, p("y^2"))));
  EXPECT_TRUE(oracle::in_row_span(rows, oracle::coordinates(ambient, p("x^2 - 1/3"))));
  EXPECT_TRUE(oracle::in_row_span(rows, oracle::coordinates(ambient, p("x^2 - y^2"))));
  for (const char* f : {"x", "y", "z", "x*y", "x*z", "y*z", "x^3", "x*y*z", "y^2*z"})
    EXPECT_TRUE(oracle::in_row_span(rows, oracle::coordinates(ambient, p(f)))) << f;
}

TEST(Oracle, HeisenbergDerivedSpanContainsOne) {
  const auto ambient = oracle::normal_basis(3, 2, heisenberg);
  ASSERT_EQ(ambient.size(), frozen::kHeisenberg1Bound2Ambient);
  const auto rows = bracket_rows(kHeis1, ambient, pairs_upto(ambient, 2), heisenberg);
  EXPECT_EQ(oracle::gauss_rank(rows), frozen::kHeisenberg1Bound2Rank);
  EXPECT_TRUE(oracle::in_row_span(rows, oracle::coordinates(ambient, Polynomial::constant(3, 1))));
}

TEST(Oracle, NonexactSystemRanks) {
  for (std::uint32_t d = 0; d <= 4; ++d) {
    const auto ambient = oracle::normal_basis(3, d, hyperboloid);
    std::vector<std::pair<Monomial, Monomial>> pairs;
    for (std::size_t i = 0; i < 3; ++i)
      for (const auto& m : ambient) pairs.emplace_back(Monomial::variable(3, i), m);
    const auto rows = bracket_rows(kSl2, ambient, pairs, hyperboloid);
    EXPECT_EQ(oracle::gauss_rank(rows), frozen::kNonexactRanks[d]);
    EXPECT_FALSE(oracle::in_row_span(rows, oracle::coordinates(ambient, p("1"))));
  }
}

TEST(Oracle, Closures) {
  const auto z = oracle::naive_closure(kSl2, cone, {p("z")}, 5);
  EXPECT_EQ(z.rank, frozen::kConeClosureZBound5);
  EXPECT_FALSE(z.contains_one);
  for (const char* gen : {"x", "z", "x + y"}) {
    const auto c = oracle::naive_closure(kSl2, hyperboloid, {p(gen)}, 4);
    EXPECT_EQ(c.rank, frozen::kHyperboloidClosureBound4) << gen;
    EXPECT_TRUE(c.contains_one) << gen;
  }
  const auto q = oracle::naive_closure(kHeis1, heisenberg, {Polynomial::variable(3, 0)}, 3);
  EXPECT_EQ(q.rank, frozen::kHeisenbergClosureQBound3);
  EXPECT_TRUE(q.contains_one);
}

}  // namespace
