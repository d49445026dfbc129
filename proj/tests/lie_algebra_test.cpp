#include "orbitalg/lie_algebra.hpp"

#include <gtest/gtest.h>

namespace {

using orbitalg::AlgebraFormatError;
using orbitalg::LieAlgebra;
using orbitalg::Rational;
using orbitalg::RationalMatrix;
using orbitalg::ValidationIssue;

RationalMatrix diag(std::vector<Rational> d) {
  RationalMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

// Explicit matrix of ad e_i acting on column coordinates.
RationalMatrix ad_matrix(const LieAlgebra& g, std::size_t i) {
  const std::size_t d = g.dimension();
  RationalMatrix m(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) m(b, a) = g.constant(i, a, b);
  return m;
}

Rational trace_of_product(const RationalMatrix& a, const RationalMatrix& b) {
  Rational t = 0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) t += a(r, c) * b(c, r);
  return t;
}

// Brute-force Jacobi over every (i, j, k, l) straight from the constants.
bool jacobi_everywhere(const LieAlgebra& g) {
  const std::size_t d = g.dimension();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
          Rational s = 0;
          for (std::size_t m = 0; m < d; ++m)
            s += g.constant(i, j, m) * g.constant(m, k, l) +
                 g.constant(j, k, m) * g.constant(m, i, l) +
                 g.constant(k, i, m) * g.constant(m, j, l);
          if (s != 0) return false;
        }
  return true;
}

std::vector<LieAlgebra> all_builtins() {
  std::vector<LieAlgebra> out{orbitalg::builtin_algebra("sl2r"), orbitalg::builtin_algebra("so3")};
  for (int n = 1; n <= 3; ++n) out.push_back(orbitalg::builtin_algebra("heisenberg", n));
  return out;
}

TEST(Builtin, Sl2rBasisAndBrackets) {
  const auto g = orbitalg::builtin_algebra("sl2r");
  EXPECT_EQ(g.dimension(), 3u);
  EXPECT_EQ(g.basis(), (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_EQ(g.constant(1, 2, 0), 1);
  EXPECT_EQ(g.constant(2, 0, 1), 1);
  EXPECT_EQ(g.constant(0, 1, 2), -1);
  EXPECT_EQ(g.constant(2, 1, 0), -1);
}

TEST(Builtin, Heisenberg) {
  const auto h1 = orbitalg::builtin_algebra("heisenberg", 1);
  EXPECT_EQ(h1.basis(), (std::vector<std::string>{"q", "p", "z"}));
  EXPECT_EQ(h1.constant(0, 1, 2), 1);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(h1.bracket_polynomial(i, 2).is_zero());
  const auto h2 = orbitalg::builtin_algebra("heisenberg", 2);
  EXPECT_EQ(h2.basis(), (std::vector<std::string>{"q1", "q2", "p1", "p2", "z"}));
  EXPECT_EQ(h2.constant(1, 3, 4), 1);
  EXPECT_EQ(h2.constant(0, 3, 4), 0);
}

TEST(Builtin, So3IsCyclic) {
  const auto g = orbitalg::builtin_algebra("so3");
  EXPECT_EQ(g.constant(0, 1, 2), 1);
  EXPECT_EQ(g.constant(1, 2, 0), 1);
  EXPECT_EQ(g.constant(2, 0, 1), 1);
}

TEST(Builtin, Errors) {
  EXPECT_THROW(orbitalg::builtin_algebra("sl3"), std::invalid_argument);
  EXPECT_THROW(orbitalg::builtin_algebra("heisenberg"), std::invalid_argument);
  EXPECT_THROW(orbitalg::builtin_algebra("heisenberg", 0), std::invalid_argument);
}

TEST(Validate, BuiltinsPass) {
  for (const auto& g : all_builtins()) {
    EXPECT_TRUE(validate(g).ok()) << g.name();
    EXPECT_TRUE(jacobi_everywhere(g)) << g.name();
  }
}

TEST(Validate, ReportsAntisymmetryViolation) {
  const LieAlgebra g("bad", {"a", "b", "c"}, {{{0, 1, 2}, 1}, {{1, 0, 2}, 1}});
  const auto report = validate(g);
  ASSERT_FALSE(report.ok());
  const auto& issue = report.issues.front();
  EXPECT_EQ(issue.kind, ValidationIssue::Kind::Antisymmetry);
  EXPECT_EQ(std::tie(issue.i, issue.j, issue.k), std::make_tuple(0u, 1u, 2u));
  EXPECT_EQ(issue.value, 2);
  EXPECT_NE(issue.describe(g).find("(a, b, c)"), std::string::npos);
  EXPECT_THROW(static_cast<void>(killing_form(g)), orbitalg::InvalidAlgebra);
}

TEST(Validate, ReportsJacobiViolation) {
  // [a,b] = b, [b,c] = a: the cyclic sum over (a,b,c) is a.
  const LieAlgebra g("bad", {"a", "b", "c"},
                     {{{0, 1, 1}, 1}, {{1, 0, 1}, -1}, {{1, 2, 0}, 1}, {{2, 1, 0}, -1}});
  EXPECT_FALSE(jacobi_everywhere(g));
  const auto report = validate(g);
  ASSERT_EQ(report.issues.size(), 1u);
  EXPECT_EQ(report.issues.front().kind, ValidationIssue::Kind::Jacobi);
  EXPECT_EQ(report.issues.front().l, 0u);
  EXPECT_EQ(report.issues.front().value, 1);
}

TEST(Killing, KnownForms) {
  const auto sl2 = killing_form(orbitalg::builtin_algebra("sl2r"));
  EXPECT_EQ(sl2.matrix, diag({2, 2, -2}));
  EXPECT_TRUE(sl2.semisimple);
  EXPECT_EQ(sl2.determinant, -8);
  const auto so3 = killing_form(orbitalg::builtin_algebra("so3"));
  EXPECT_EQ(so3.matrix, diag({-2, -2, -2}));
  EXPECT_TRUE(so3.semisimple);
  const auto h = killing_form(orbitalg::builtin_algebra("heisenberg", 1));
  EXPECT_EQ(h.matrix, RationalMatrix(3, 3));
  EXPECT_FALSE(h.semisimple);
}

TEST(Killing, MatchesExplicitTraceAndIsSymmetric) {
  for (const auto& g : all_builtins()) {
    const auto k = killing_form(g);
    EXPECT_EQ(k.matrix, k.matrix.transpose()) << g.name();
    for (std::size_t i = 0; i < g.dimension(); ++i)
      for (std::size_t j = 0; j < g.dimension(); ++j)
        EXPECT_EQ(k.matrix(i, j), trace_of_product(ad_matrix(g, i), ad_matrix(g, j)));
  }
}

TEST(Killing, SemisimplicityOfBuiltins) {
  EXPECT_TRUE(is_semisimple(orbitalg::builtin_algebra("sl2r")));
  EXPECT_TRUE(is_semisimple(orbitalg::builtin_algebra("so3")));
  for (int n = 1; n <= 3; ++n) EXPECT_FALSE(is_semisimple(orbitalg::builtin_algebra("heisenberg", n)));
}

TEST(Casimir, BuiltinsCarryDistinguishedInvariant) {
  const auto sl2 = orbitalg::builtin_algebra("sl2r");
  ASSERT_TRUE(sl2.casimir().has_value());
  EXPECT_EQ(sl2.casimir()->degree(), 2);
  const auto h = orbitalg::builtin_algebra("heisenberg", 2);
  ASSERT_TRUE(h.casimir().has_value());
  EXPECT_EQ(*h.casimir(), h.generator(4));
}

constexpr const char* kSl2Json = R"({
  "dim": 3,
  "basis": ["x", "y", "z"],
  "brackets": [
    {"i": "y", "j": "z", "terms": [{"k": "x", "coeff": "1"}]},
    {"i": "z", "j": "x", "terms": [{"k": "y", "coeff": 1}]},
    {"i": "x", "j": "y", "terms": [{"k": "z", "coeff": "-1"}]}
  ]
})";

TEST(Json, LoadsWithAntisymmetricCompletion) {
  const auto g = orbitalg::parse_algebra_json(kSl2Json, "file");
  const auto builtin = orbitalg::builtin_algebra("sl2r");
  EXPECT_EQ(g.constants(), builtin.constants());
  EXPECT_TRUE(validate(g).ok());
}

TEST(Json, RepeatedConsistentEntriesAreAccepted) {
  const auto g = orbitalg::parse_algebra_json(R"({"basis": ["a", "b"], "brackets": [
    {"i": "a", "j": "b", "terms": [{"k": "b", "coeff": "1/2"}]},
    {"i": "b", "j": "a", "terms": [{"k": "b", "coeff": "-1/2"}]}]})");
  EXPECT_EQ(g.constant(0, 1, 1), Rational(1, 2));
  EXPECT_EQ(g.constant(1, 0, 1), Rational(-1, 2));
}

TEST(Json, ConflictsAreErrors) {
  EXPECT_THROW(orbitalg::parse_algebra_json(R"({"basis": ["a", "b"], "brackets": [
    {"i": "a", "j": "b", "terms": [{"k": "b", "coeff": "1"}]},
    {"i": "b", "j": "a", "terms": [{"k": "b", "coeff": "1"}]}]})"),
               AlgebraFormatError);
  EXPECT_THROW(orbitalg::parse_algebra_json(R"({"basis": ["a"], "brackets": [
    {"i": "a", "j": "a", "terms": [{"k": "a", "coeff": "1"}]}]})"),
               AlgebraFormatError);
}

TEST(Json, StructuralErrors) {
  EXPECT_THROW(orbitalg::parse_algebra_json(R"({"basis": ["a", "b"], "brackets": [
    {"i": "a", "j": "w", "terms": []}]})"),
               AlgebraFormatError);
  EXPECT_THROW(orbitalg::parse_algebra_json(R"({"dim": 3, "basis": ["a", "b"]})"),
               AlgebraFormatError);
  EXPECT_THROW(orbitalg::parse_algebra_json(R"({"brackets": []})"), AlgebraFormatError);
  EXPECT_THROW(orbitalg::parse_algebra_json(R"({"basis": ["a", "a"]})"), AlgebraFormatError);
  EXPECT_THROW(orbitalg::parse_algebra_json(R"({"basis": ["a", "b"], "brackets": [
    {"i": "a", "j": "b", "terms": [{"k": "b", "coeff": "1/0"}]}]})"),
               AlgebraFormatError);
}

TEST(Json, MalformedTextReportsPosition) {
  try {
    orbitalg::parse_algebra_json("{\"basis\": [\"a\", \"b\"],, }");
    FAIL() << "expected AlgebraFormatError";
  } catch (const AlgebraFormatError& e) {
    ASSERT_TRUE(e.position().has_value());
    EXPECT_EQ(*e.position(), 21u);
  }
}

TEST(Json, MissingFileIsAnError) {
  EXPECT_THROW(orbitalg::load_algebra_file("/nonexistent/algebra.json"), AlgebraFormatError);
}

}  // namespace
