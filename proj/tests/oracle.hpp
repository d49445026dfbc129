#pragma once

// Test-only reference computations that avoid the library's own algorithms:
// brackets by recursive Leibniz expansion, normal forms by substitution,
// rank by plain fraction Gaussian elimination, and invariant dimensions by
// counting sl(2) weights.

#include "orbitalg/lie_algebra.hpp"
#include "orbitalg/polynomial.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using orbitalg::LieAlgebra;
using orbitalg::Monomial;
using orbitalg::Polynomial;
using orbitalg::Rational;

// {m1, m2} via {a b, c} = a {b, c} + b {a, c}, bottoming out at [e_i, e_j].
Polynomial leibniz_bracket(const LieAlgebra& g, const Polynomial& f, const Polynomial& h);

// Normal form modulo x^2 + y^2 - z^2 - c (variables x, y, z): z^2 -> x^2 + y^2 - c.
Polynomial hyperboloid_substitute(const Polynomial& f, const Rational& c);
// Normal form modulo z - c for the Heisenberg basis with z last: z -> c.
Polynomial central_substitute(const Polynomial& f, const Rational& c);

std::size_t gauss_rank(std::vector<std::vector<Rational>> rows);

// dim of sl(2)-invariants in S_n(adjoint): #(weight 0) - #(weight 2) among
// monomials e^a h^b f^c with a + b + c = n and weight 2a - 2c.
std::size_t sl2_invariant_dimension(std::uint32_t n);

// Rank of the span of reduce({m_a, m_b}) over the given monomial pairs,
// written in coordinates over `ambient`.
std::size_t bracket_span_rank(const LieAlgebra& g, const std::vector<Monomial>& ambient,
                              const std::vector<std::pair<Monomial, Monomial>>& pairs,
                              const std::function<Polynomial(const Polynomial&)>& reduce);

std::vector<Monomial> all_monomials(std::size_t vars, std::uint32_t degree);

using Reducer = std::function<Polynomial(const Polynomial&)>;

// Monomials of degree <= bound fixed by reduce, highest degree first.
std::vector<Monomial> normal_basis(std::size_t vars, std::uint32_t bound, const Reducer& reduce);

// Row echelon form by fraction Gaussian elimination; zero rows dropped.
std::vector<std::vector<Rational>> echelon(std::vector<std::vector<Rational>> rows);

std::vector<Rational> coordinates(const std::vector<Monomial>& ambient, const Polynomial& f);

bool in_row_span(const std::vector<std::vector<Rational>>& rows, const std::vector<Rational>& v);

struct Closure {
  std::size_t rank = 0;
  bool contains_one = false;
};

// Least subspace of normal forms of degree <= bound containing gens, closed
// under {e_i, -} and under e_i * (-) on its part of degree <= bound - 1.
// Computed by whole sweeps until the rank stops growing.
Closure naive_closure(const LieAlgebra& g, const Reducer& reduce, const std::vector<Polynomial>& gens,
                      std::uint32_t bound);

}  // namespace oracle
