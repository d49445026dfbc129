#include "orbitalg/sampling.hpp"

#include <vector>

namespace orbitalg {

Polynomial PolynomialSampler::sample(std::size_t num_vars, std::uint32_t max_degree,
                                     std::size_t max_terms) {
  Polynomial p(num_vars);
  const std::size_t terms = 1 + uniform(max_terms);
  for (std::size_t t = 0; t < terms; ++t) {
    const auto degree = static_cast<std::uint32_t>(uniform(max_degree + 1));
    std::vector<std::uint32_t> exps(num_vars, 0);
    for (std::uint32_t k = 0; k < degree && num_vars > 0; ++k) ++exps[uniform(num_vars)];
    const long num = static_cast<long>(uniform(11)) - 5;
    const long den = 1 + static_cast<long>(uniform(3));
    Rational c(num, den);
    c.canonicalize();
    p.add_term(Monomial(std::move(exps)), c);
  }
  return p;
}

Polynomial PolynomialSampler::sample_nonconstant(std::size_t num_vars, std::uint32_t max_degree,
                                                 std::size_t max_terms) {
  for (;;) {
    Polynomial p = sample(num_vars, max_degree, max_terms);
    if (!p.is_constant()) return p;
  }
}

}  // namespace orbitalg
