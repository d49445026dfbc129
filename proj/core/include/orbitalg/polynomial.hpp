#pragma once

#include "orbitalg/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace orbitalg {

// Exponent vector x_0^e_0 ... x_{n-1}^e_{n-1}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exponents);

  static Monomial variable(std::size_t num_vars, std::size_t index, std::uint32_t power = 1);

  std::size_t num_vars() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t degree() const noexcept { return degree_; }
  std::span<const std::uint32_t> exponents() const noexcept { return exps_; }

  bool divides(const Monomial& other) const;
  // Precondition: divides(other). Returns other / *this.
  Monomial cofactor_in(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;

  // Lowers exponent i by one; precondition exponent(i) > 0.
  Monomial lowered(std::size_t i) const;

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
  auto operator<=>(const Monomial& other) const { return exps_ <=> other.exps_; }

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

// Graded lexicographic order with an explicit variable priority (first entry
// is the most significant variable once total degrees tie).
class MonomialOrder {
 public:
  // Default: the variable defined last ranks highest.
  static MonomialOrder last_highest(std::size_t num_vars);
  // Throws std::invalid_argument unless priority is a permutation of 0..n-1.
  static MonomialOrder with_priority(std::vector<std::size_t> highest_first);

  std::span<const std::size_t> priority() const noexcept { return priority_; }
  bool less(const Monomial& a, const Monomial& b) const;

  bool operator==(const MonomialOrder&) const = default;

 private:
  std::vector<std::size_t> priority_;
};

// Strict weak order used for the canonical term map: graded lex with the last
// variable highest.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse polynomial over Q. No stored coefficient is zero; terms are kept in
// ascending GradedLexLess order so structural equality is polynomial equality.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GradedLexLess>;

  explicit Polynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const Rational& c);
  static Polynomial variable(std::size_t num_vars, std::size_t index);
  static Polynomial term(const Monomial& m, const Rational& c);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  bool is_homogeneous() const;
  // -1 for the zero polynomial.
  int degree() const;
  // Lowest total degree among the terms; -1 for zero.
  int min_degree() const;

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  // Precondition: nonzero.
  const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
  Monomial leading_monomial(const MonomialOrder& order) const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial derivative(std::size_t var) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  // Throws std::invalid_argument on variable-count mismatch.
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  bool operator==(const Polynomial& other) const {
    return num_vars_ == other.num_vars_ && terms_ == other.terms_;
  }

 private:
  void check_compatible(const Polynomial& other) const;

  std::size_t num_vars_;
  Terms terms_;
};

// Terms of f with total degree exactly n.
Polynomial graded_component(const Polynomial& f, std::uint32_t n);

// Remainder of f on division by a single divisor: f - r lies in (divisor) and
// no monomial of r is divisible by the leading monomial of divisor under
// order. Unique for one divisor. Throws std::invalid_argument if divisor == 0.
Polynomial normal_form(const Polynomial& f, const Polynomial& divisor, const MonomialOrder& order);

// All monomials of total degree n in num_vars variables, largest first.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, std::uint32_t n);

// Pretty-printer: descending graded-lex terms, explicit '^' and '*'.
std::string to_string(const Polynomial& f, std::span<const std::string> names);

}  // namespace orbitalg
