#pragma once

#include "orbitalg/lie_algebra.hpp"
#include "orbitalg/polynomial.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace orbitalg {

// Principal ideal (relation) with the order used to reduce modulo it.
class OrbitIdeal {
 public:
  // Throws std::invalid_argument if relation is zero or constant.
  explicit OrbitIdeal(Polynomial relation, std::optional<MonomialOrder> order = std::nullopt);

  const Polynomial& relation() const noexcept { return relation_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const Monomial& leading_monomial() const noexcept { return leading_; }
  bool is_homogeneous() const { return relation_.is_homogeneous(); }

  Polynomial reduce(const Polynomial& f) const { return normal_form(f, relation_, order_); }
  // True iff no monomial of f is divisible by the leading monomial.
  bool is_reduced(const Polynomial& f) const;

 private:
  Polynomial relation_;
  MonomialOrder order_;
  Monomial leading_;
};

// Thrown when a relation does not generate a Lie ideal: its bracket with some
// generator does not reduce to zero.
class RelationNotClosed : public std::runtime_error {
 public:
  RelationNotClosed(std::string generator, std::string residual);
  const std::string& generator() const noexcept { return generator_; }
  const std::string& residual() const noexcept { return residual_; }

 private:
  std::string generator_;
  std::string residual_;
};

// S(g) with the Lie-Poisson bracket, or the quotient S(g)/(relation).
// In quotient mode every result is returned in normal form.
class PoissonContext {
 public:
  static PoissonContext free(std::shared_ptr<const LieAlgebra> algebra);
  // Throws RelationNotClosed unless {relation, e_i} reduces to 0 for every i.
  static PoissonContext quotient(std::shared_ptr<const LieAlgebra> algebra, OrbitIdeal ideal);

  const LieAlgebra& algebra() const noexcept { return *algebra_; }
  const std::shared_ptr<const LieAlgebra>& algebra_ptr() const noexcept { return algebra_; }
  std::size_t num_vars() const noexcept { return algebra_->dimension(); }
  bool is_quotient() const noexcept { return ideal_.has_value(); }
  const std::optional<OrbitIdeal>& ideal() const noexcept { return ideal_; }

  Polynomial reduce(const Polynomial& f) const;
  bool is_reduced(const Polynomial& f) const;
  Polynomial multiply(const Polynomial& f, const Polynomial& g) const;
  Polynomial generator(std::size_t i) const { return algebra_->generator(i); }

  // {f, g} = sum_{i<j} (d_i f d_j g - d_j f d_i g) [e_i, e_j], reduced in
  // quotient mode. Throws std::invalid_argument on variable mismatch.
  Polynomial bracket(const Polynomial& f, const Polynomial& g) const;

  std::string format(const Polynomial& f) const { return to_string(f, algebra_->basis()); }

 private:
  PoissonContext(std::shared_ptr<const LieAlgebra> algebra, std::optional<OrbitIdeal> ideal)
      : algebra_(std::move(algebra)), ideal_(std::move(ideal)) {}

  std::shared_ptr<const LieAlgebra> algebra_;
  std::optional<OrbitIdeal> ideal_;
};

// The unreduced free-mode bracket.
Polynomial lie_poisson_bracket(const LieAlgebra& algebra, const Polynomial& f, const Polynomial& g);

// {f,{g,h}} + {g,{h,f}} + {h,{f,g}}.
Polynomial jacobi_defect(const PoissonContext& ctx, const Polynomial& f, const Polynomial& g,
                         const Polynomial& h);

// ({fg,h} - f{g,h} - g{f,h}, {fg,h} - {f,gh} - {g,fh}).
std::pair<Polynomial, Polynomial> leibniz_defect(const PoissonContext& ctx, const Polynomial& f,
                                                 const Polynomial& g, const Polynomial& h);

}  // namespace orbitalg
