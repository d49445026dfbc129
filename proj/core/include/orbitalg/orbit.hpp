#pragma once

#include "orbitalg/lie_algebra.hpp"
#include "orbitalg/poisson.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orbitalg {

enum class OrbitType { Semisimple, Nilpotent, Other };

std::string_view to_string(OrbitType type);
// Accepts "semisimple", "nilpotent", "other". Throws std::invalid_argument.
OrbitType parse_orbit_type(std::string_view text);

// An orbit presented as the level set of a single invariant, with its
// quotient Poisson algebra P(O) = S(g)/(relation).
class OrbitDescriptor {
 public:
  OrbitDescriptor(PoissonContext context, OrbitType type)
      : context_(std::move(context)), type_(type) {}

  const LieAlgebra& algebra() const noexcept { return context_.algebra(); }
  const OrbitIdeal& ideal() const { return *context_.ideal(); }
  const PoissonContext& context() const noexcept { return context_; }
  OrbitType type() const noexcept { return type_; }
  bool is_homogeneous() const { return ideal().is_homogeneous(); }

 private:
  PoissonContext context_;
  OrbitType type_;
};

// For sl2r and so3 a relation lambda*(Casimir - c) is Semisimple when c != 0
// and Nilpotent when c == 0; everything else is Other unless type_override is
// given. Throws RelationNotClosed if the relation is not bracket-closed.
OrbitDescriptor make_orbit(std::shared_ptr<const LieAlgebra> algebra, Polynomial relation,
                           std::optional<OrbitType> type_override = std::nullopt);

// Relation = casimir - level. Throws std::invalid_argument if the algebra has
// no distinguished Casimir.
OrbitDescriptor casimir_orbit(std::shared_ptr<const LieAlgebra> algebra, const Rational& level,
                              std::optional<OrbitType> type_override = std::nullopt);

// rho_O: the normal form of f modulo the relation.
Polynomial project(const OrbitDescriptor& orbit, const Polynomial& f);

// Monomials of total degree n (exactly) not divisible by the leading
// monomial of the relation, largest first. With no ideal: all monomials.
std::vector<Monomial> normal_monomials(const PoissonContext& ctx, std::uint32_t n);
// Degrees 0..n, largest first.
std::vector<Monomial> normal_monomials_upto(const PoissonContext& ctx, std::uint32_t n);

// Homogeneous relation: normal monomials of degree exactly n. Otherwise:
// normal monomials of degree <= n.
std::size_t quotient_dimension(const OrbitDescriptor& orbit, std::uint32_t n);

}  // namespace orbitalg
