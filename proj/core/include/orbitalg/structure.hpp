#pragma once

#include "orbitalg/matrix.hpp"
#include "orbitalg/orbit.hpp"
#include "orbitalg/poisson.hpp"
#include "orbitalg/report.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace orbitalg {

// Coordinates with respect to an ordered list of monomials.
class MonomialCoordinates {
 public:
  explicit MonomialCoordinates(std::vector<Monomial> monomials);

  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  bool covers(const Polynomial& f) const;
  // Throws std::out_of_range if f has a monomial outside the list.
  std::vector<Rational> coordinates(const Polynomial& f) const;
  Polynomial polynomial(std::span<const Rational> coords) const;

 private:
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t> index_;
};

// Subspace of polynomials spanned by the rows of basis, written in the
// coordinates of ambient (largest monomial first). Rows are independent.
struct GradedSubspace {
  std::uint32_t degree = 0;
  std::vector<Monomial> ambient;
  RationalMatrix basis;
  std::size_t rank = 0;

  std::vector<Polynomial> elements() const;
};

// C(g) in degree n: the joint kernel of {e_i, -} on S_n(g).
GradedSubspace invariants_basis(const LieAlgebra& algebra, std::uint32_t n);

enum class DerivedSources {
  Auto,         // LinearFirst for S(g), AllPairs for quotients
  LinearFirst,  // brackets {e_i, m}; spans the same space by {fg,h} = {f,gh} + {g,fh}
  AllPairs,     // brackets {m_a, m_b} of all monomial pairs
};

// Degree-n components of reduced brackets {m_a, m_b} with
// deg m_a + deg m_b - 1 <= source_bound (m_a, m_b normal monomials).
// Throws std::invalid_argument if source_bound < n.
GradedSubspace derived_span(const PoissonContext& ctx, std::uint32_t n, std::uint32_t source_bound,
                            DerivedSources sources = DerivedSources::Auto);

// Same source brackets, kept whole: ambient is all normal monomials of degree
// <= source_bound. This is the derived ideal truncated at the bound.
GradedSubspace derived_span_upto(const PoissonContext& ctx, std::uint32_t source_bound,
                                 DerivedSources sources = DerivedSources::Auto);

// Span of reduced brackets {m_a, m_b}, deg m_a = a, deg m_b = b, over the
// normal monomials of degree <= a + b - 1.
GradedSubspace pair_bracket_span(const PoissonContext& ctx, std::uint32_t a, std::uint32_t b);

enum class DerivedVerdict { InSpan, NotInSpanAtBound };

// Throws std::invalid_argument if f is not in normal form.
DerivedVerdict derived_membership(const PoissonContext& ctx, const Polynomial& f,
                                  std::uint32_t source_bound,
                                  DerivedSources sources = DerivedSources::Auto);

// S_n = C_n + D_n with C_n and D_n independent, for n = 0..max_degree.
VerificationReport verify_prop1(const LieAlgebra& algebra, std::uint32_t max_degree,
                                DerivedSources sources = DerivedSources::Auto);

// For each source bound b <= max_bound: 1 is not in the derived span, and
// constants plus the derived span fill every normal form of degree <= b.
VerificationReport verify_thm2(const OrbitDescriptor& orbit, std::uint32_t max_bound);

// For each bound b in 1..bound: every normal monomial of degree <= b - 1,
// the constant 1 in particular, lies in the derived span at bound b.
VerificationReport verify_heisenberg(const OrbitDescriptor& orbit, std::uint32_t bound);

struct ClosureStep {
  enum class Move { Generator, Multiply, Bracket };
  Move move = Move::Generator;
  std::size_t parent = 0;     // index into IdealClosure::steps (unused for Generator)
  std::size_t generator = 0;  // trial generator (Generator) or algebra basis index
  Polynomial raw{0};          // move applied to the parent element, unreduced by the span
  Polynomial element{0};      // stored basis element: a multiple of raw minus earlier elements
};

struct IdealClosure {
  GradedSubspace span;                       // degree = bound; ambient = normal monomials <= bound
  std::vector<ClosureStep> steps;            // one per basis row, in insertion order
  std::vector<std::size_t> filtration_ranks; // dim(closure intersect degree <= d), d = 0..bound
  bool contains_one = false;
  bool proper_at_bound = true;
};

// Least subspace of normal forms of degree <= bound containing gens and
// closed under e_i * (-) while the degree stays <= bound and under {e_i, -}.
// Throws std::invalid_argument for an empty list, a zero or unreduced
// generator, or a generator of degree > bound.
IdealClosure poisson_ideal_closure(const PoissonContext& ctx, const std::vector<Polynomial>& gens,
                                   std::uint32_t bound);

// Semisimple and Other orbits: every trial closure must contain 1.
// Nilpotent orbits: some trial closure must stay proper.
// Throws std::invalid_argument for a constant trial.
VerificationReport simplicity_probe(const OrbitDescriptor& orbit,
                                    const std::vector<Polynomial>& trials, std::uint32_t bound);

// {P_a, P_b} in P_{a+b-1} for a + b - 1 <= bound, and the closure of
// P_(k) = sum_{l >= k} P_l truncated at bound is proper and graded.
// Throws std::invalid_argument if k == 0 or the relation is not homogeneous.
VerificationReport verify_homogeneous_ideals(const OrbitDescriptor& orbit, std::uint32_t k,
                                             std::uint32_t bound);

// Solvability of sum_i {e_i, f_i} = target with f_i normal forms of degree
// <= d, for d = 0..bound. Nonzero target: pass iff infeasible at every d.
// Zero target: pass iff feasible (control).
VerificationReport nonexactness_check(const OrbitDescriptor& orbit, std::uint32_t bound,
                                      const Rational& target = 1);

// Truncations at the bound of I = (gens) and I^2 = (g_i g_j); passes when
// I^2 is inside I and some generator is missing from I^2. When I is a Lie
// ideal at the bound, I^2 is also checked to be one. Throws
// std::invalid_argument for an empty list or a constant or unreduced generator.
VerificationReport ideal_square_check(const PoissonContext& ctx,
                                      const std::vector<Polynomial>& gens, std::uint32_t bound);

}  // namespace orbitalg
