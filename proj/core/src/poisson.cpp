#include "orbitalg/poisson.hpp"

namespace orbitalg {

OrbitIdeal::OrbitIdeal(Polynomial relation, std::optional<MonomialOrder> order)
    : relation_(std::move(relation)),
      order_(order ? std::move(*order) : MonomialOrder::last_highest(relation_.num_vars())) {
  if (relation_.is_zero()) throw std::invalid_argument("orbit relation is zero");
  if (relation_.is_constant()) throw std::invalid_argument("orbit relation is a nonzero constant");
  if (order_.priority().size() != relation_.num_vars()) {
    throw std::invalid_argument("monomial order has the wrong number of variables");
  }
  leading_ = relation_.leading_monomial(order_);
}

bool OrbitIdeal::is_reduced(const Polynomial& f) const {
  for (const auto& [m, c] : f.terms())
    if (leading_.divides(m)) return false;
  return true;
}

RelationNotClosed::RelationNotClosed(std::string generator, std::string residual)
    : std::runtime_error("relation is not bracket-closed: {relation, " + generator +
                         "} reduces to " + residual + ", not 0"),
      generator_(std::move(generator)),
      residual_(std::move(residual)) {}

Polynomial lie_poisson_bracket(const LieAlgebra& algebra, const Polynomial& f,
                               const Polynomial& g) {
  const std::size_t d = algebra.dimension();
  if (f.num_vars() != d || g.num_vars() != d) {
    throw std::invalid_argument("bracket: polynomial variable count does not match algebra dimension");
  }
  Polynomial out(d);
  if (f.is_zero() || g.is_zero()) return out;
  for (const auto& [mf, cf] : f.terms()) {
    if (mf.degree() == 0) continue;
    for (const auto& [mg, cg] : g.terms()) {
      if (mg.degree() == 0) continue;
      const Rational cfg = cf * cg;
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
          const auto& terms = algebra.bracket_terms(i, j);
          if (terms.empty()) continue;
          // d_i f d_j g - d_j f d_i g, on monomials.
          Rational weight = 0;
          std::optional<Monomial> base;
          if (mf[i] > 0 && mg[j] > 0) {
            base = mf.lowered(i) * mg.lowered(j);
            weight += Rational(mf[i]) * Rational(mg[j]);
          }
          if (mf[j] > 0 && mg[i] > 0) {
            Monomial other = mf.lowered(j) * mg.lowered(i);
            if (!base) base = other;
            // Both products equal mf*mg / (x_i x_j).
            weight -= Rational(mf[j]) * Rational(mg[i]);
          }
          if (!base || weight == 0) continue;
          const Rational scale = cfg * weight;
          for (const auto& [k, c] : terms) {
            out.add_term(*base * Monomial::variable(d, k), scale * c);
          }
        }
      }
    }
  }
  return out;
}

PoissonContext PoissonContext::free(std::shared_ptr<const LieAlgebra> algebra) {
  if (!algebra) throw std::invalid_argument("null algebra");
  return PoissonContext(std::move(algebra), std::nullopt);
}

PoissonContext PoissonContext::quotient(std::shared_ptr<const LieAlgebra> algebra,
                                        OrbitIdeal ideal) {
  if (!algebra) throw std::invalid_argument("null algebra");
  if (ideal.relation().num_vars() != algebra->dimension()) {
    throw std::invalid_argument("relation variable count does not match algebra dimension");
  }
  for (std::size_t i = 0; i < algebra->dimension(); ++i) {
    const Polynomial residual =
        ideal.reduce(lie_poisson_bracket(*algebra, ideal.relation(), algebra->generator(i)));
    if (!residual.is_zero()) {
      throw RelationNotClosed(algebra->basis()[i], to_string(residual, algebra->basis()));
    }
  }
  return PoissonContext(std::move(algebra), std::move(ideal));
}

Polynomial PoissonContext::reduce(const Polynomial& f) const {
  return ideal_ ? ideal_->reduce(f) : f;
}

bool PoissonContext::is_reduced(const Polynomial& f) const {
  return !ideal_ || ideal_->is_reduced(f);
}

Polynomial PoissonContext::multiply(const Polynomial& f, const Polynomial& g) const {
  return reduce(f * g);
}

Polynomial PoissonContext::bracket(const Polynomial& f, const Polynomial& g) const {
  return reduce(lie_poisson_bracket(*algebra_, f, g));
}

Polynomial jacobi_defect(const PoissonContext& ctx, const Polynomial& f, const Polynomial& g,
                         const Polynomial& h) {
  return ctx.bracket(f, ctx.bracket(g, h)) + ctx.bracket(g, ctx.bracket(h, f)) +
         ctx.bracket(h, ctx.bracket(f, g));
}

std::pair<Polynomial, Polynomial> leibniz_defect(const PoissonContext& ctx, const Polynomial& f,
                                                 const Polynomial& g, const Polynomial& h) {
  const Polynomial fg_h = ctx.bracket(ctx.multiply(f, g), h);
  Polynomial leibniz = fg_h - ctx.multiply(f, ctx.bracket(g, h)) - ctx.multiply(g, ctx.bracket(f, h));
  Polynomial shifted = fg_h - ctx.bracket(f, ctx.multiply(g, h)) - ctx.bracket(g, ctx.multiply(f, h));
  return {std::move(leibniz), std::move(shifted)};
}

}  // namespace orbitalg
