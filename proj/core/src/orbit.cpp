#include "orbitalg/orbit.hpp"

#include <stdexcept>

namespace orbitalg {

std::string_view to_string(OrbitType type) {
  switch (type) {
    case OrbitType::Semisimple:
      return "semisimple";
    case OrbitType::Nilpotent:
      return "nilpotent";
    case OrbitType::Other:
      return "other";
  }
  return "other";
}

OrbitType parse_orbit_type(std::string_view text) {
  if (text == "semisimple") return OrbitType::Semisimple;
  if (text == "nilpotent") return OrbitType::Nilpotent;
  if (text == "other") return OrbitType::Other;
  throw std::invalid_argument("unknown orbit type '" + std::string(text) + "'");
}

namespace {

// If relation = lambda * (casimir - c) for a nonzero lambda, returns c.
std::optional<Rational> casimir_level(const Polynomial& relation, const Polynomial& casimir) {
  const Polynomial shape = relation - Polynomial::constant(relation.num_vars(), relation.constant_term());
  if (shape.is_zero() || casimir.is_zero()) return std::nullopt;
  const Monomial& lead = casimir.leading_monomial();
  const Rational lambda = shape.coefficient(lead) / casimir.coefficient(lead);
  if (lambda == 0 || shape != casimir * lambda) return std::nullopt;
  return -relation.constant_term() / lambda;
}

OrbitType classify(const LieAlgebra& algebra, const Polynomial& relation) {
  const bool semisimple_builtin =
      algebra.family() == AlgebraFamily::Sl2R || algebra.family() == AlgebraFamily::So3;
  if (!semisimple_builtin || !algebra.casimir()) return OrbitType::Other;
  const auto level = casimir_level(relation, *algebra.casimir());
  if (!level) return OrbitType::Other;
  return *level == 0 ? OrbitType::Nilpotent : OrbitType::Semisimple;
}

}  // namespace

OrbitDescriptor make_orbit(std::shared_ptr<const LieAlgebra> algebra, Polynomial relation,
                           std::optional<OrbitType> type_override) {
  if (!algebra) throw std::invalid_argument("null algebra");
  const OrbitType type = type_override ? *type_override : classify(*algebra, relation);
  OrbitIdeal ideal(std::move(relation));
  return OrbitDescriptor(PoissonContext::quotient(std::move(algebra), std::move(ideal)), type);
}

OrbitDescriptor casimir_orbit(std::shared_ptr<const LieAlgebra> algebra, const Rational& level,
                              std::optional<OrbitType> type_override) {
  if (!algebra || !algebra->casimir()) {
    throw std::invalid_argument("algebra has no built-in Casimir; supply an explicit relation");
  }
  Polynomial relation = *algebra->casimir() - Polynomial::constant(algebra->dimension(), level);
  return make_orbit(std::move(algebra), std::move(relation), type_override);
}

Polynomial project(const OrbitDescriptor& orbit, const Polynomial& f) {
  if (f.num_vars() != orbit.algebra().dimension()) {
    throw std::invalid_argument("project: variable-count mismatch");
  }
  return orbit.ideal().reduce(f);
}

std::vector<Monomial> normal_monomials(const PoissonContext& ctx, std::uint32_t n) {
  auto all = monomials_of_degree(ctx.num_vars(), n);
  if (!ctx.is_quotient()) return all;
  const Monomial& lead = ctx.ideal()->leading_monomial();
  std::erase_if(all, [&](const Monomial& m) { return lead.divides(m); });
  return all;
}

std::vector<Monomial> normal_monomials_upto(const PoissonContext& ctx, std::uint32_t n) {
  std::vector<Monomial> out;
  for (std::uint32_t d = n + 1; d-- > 0;) {
    auto block = normal_monomials(ctx, d);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

std::size_t quotient_dimension(const OrbitDescriptor& orbit, std::uint32_t n) {
  if (orbit.is_homogeneous()) return normal_monomials(orbit.context(), n).size();
  return normal_monomials_upto(orbit.context(), n).size();
}

}  // namespace orbitalg
