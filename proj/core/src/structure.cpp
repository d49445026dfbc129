#include "orbitalg/structure.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace orbitalg {

MonomialCoordinates::MonomialCoordinates(std::vector<Monomial> monomials)
    : monomials_(std::move(monomials)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

bool MonomialCoordinates::covers(const Polynomial& f) const {
  for (const auto& [m, c] : f.terms())
    if (!index_.contains(m)) return false;
  return true;
}

std::vector<Rational> MonomialCoordinates::coordinates(const Polynomial& f) const {
  std::vector<Rational> v(monomials_.size());
  for (const auto& [m, c] : f.terms()) {
    auto it = index_.find(m);
    if (it == index_.end()) throw std::out_of_range("monomial outside the ambient space");
    v[it->second] = c;
  }
  return v;
}

Polynomial MonomialCoordinates::polynomial(std::span<const Rational> coords) const {
  Polynomial p(monomials_.empty() ? 0 : monomials_.front().num_vars());
  for (std::size_t i = 0; i < coords.size(); ++i) p.add_term(monomials_[i], coords[i]);
  return p;
}

std::vector<Polynomial> GradedSubspace::elements() const {
  MonomialCoordinates coords(ambient);
  std::vector<Polynomial> out;
  for (std::size_t r = 0; r < basis.rows(); ++r) out.push_back(coords.polynomial(basis.row(r)));
  return out;
}

namespace {

GradedSubspace finish(std::uint32_t degree, const MonomialCoordinates& coords,
                      const IncrementalSpan& span) {
  GradedSubspace s;
  s.degree = degree;
  s.ambient = coords.monomials();
  s.basis = span.basis();
  s.rank = span.rank();
  return s;
}

DerivedSources resolve(const PoissonContext& ctx, DerivedSources s) {
  if (s != DerivedSources::Auto) return s;
  return ctx.is_quotient() ? DerivedSources::AllPairs : DerivedSources::LinearFirst;
}

std::string_view to_string(DerivedSources s) {
  switch (s) {
    case DerivedSources::Auto:
      return "auto";
    case DerivedSources::LinearFirst:
      return "linear-first";
    case DerivedSources::AllPairs:
      return "all-pairs";
  }
  return "auto";
}

// Calls emit(bracket) for every source bracket {m_a, m_b} with
// deg m_a + deg m_b - 1 <= bound and accept(deg m_a, deg m_b).
void for_each_source_bracket(const PoissonContext& ctx, std::uint32_t bound, DerivedSources sources,
                             const std::function<bool(std::uint32_t, std::uint32_t)>& accept,
                             const std::function<void(const Polynomial&)>& emit) {
  const std::size_t d = ctx.num_vars();
  if (resolve(ctx, sources) == DerivedSources::LinearFirst) {
    const auto monos = normal_monomials_upto(ctx, bound);
    for (std::size_t i = 0; i < d; ++i) {
      const Polynomial gen = ctx.reduce(ctx.generator(i));
      if (gen.is_constant()) continue;
      for (const auto& m : monos) {
        if (m.degree() == 0 || !accept(1, m.degree())) continue;
        emit(ctx.bracket(gen, Polynomial::term(m, 1)));
      }
    }
    return;
  }
  auto monos = normal_monomials_upto(ctx, bound);
  std::erase_if(monos, [](const Monomial& m) { return m.degree() == 0; });
  for (std::size_t a = 0; a < monos.size(); ++a) {
    for (std::size_t b = a + 1; b < monos.size(); ++b) {
      const std::uint32_t da = monos[a].degree();
      const std::uint32_t db = monos[b].degree();
      if (da + db - 1 > bound || !accept(da, db)) continue;
      emit(ctx.bracket(Polynomial::term(monos[a], 1), Polynomial::term(monos[b], 1)));
    }
  }
}

Polynomial one(const PoissonContext& ctx) { return Polynomial::constant(ctx.num_vars(), 1); }

}  // namespace

GradedSubspace invariants_basis(const LieAlgebra& algebra, std::uint32_t n) {
  const std::size_t d = algebra.dimension();
  const auto monos = monomials_of_degree(d, n);
  MonomialCoordinates coords(monos);
  // Stack ad(e_i) restricted to S_n: rows (i, output monomial), cols input monomial.
  RationalMatrix op(d * monos.size(), monos.size());
  for (std::size_t c = 0; c < monos.size(); ++c) {
    const Polynomial m = Polynomial::term(monos[c], 1);
    for (std::size_t i = 0; i < d; ++i) {
      const auto image = coords.coordinates(lie_poisson_bracket(algebra, algebra.generator(i), m));
      for (std::size_t r = 0; r < monos.size(); ++r) op(i * monos.size() + r, c) = image[r];
    }
  }
  GradedSubspace s;
  s.degree = n;
  s.ambient = monos;
  s.basis = nullspace(op);
  s.rank = s.basis.rows();
  return s;
}

GradedSubspace derived_span(const PoissonContext& ctx, std::uint32_t n, std::uint32_t source_bound,
                            DerivedSources sources) {
  if (source_bound < n) throw std::invalid_argument("derived_span: source_bound must be >= n");
  MonomialCoordinates coords(normal_monomials(ctx, n));
  IncrementalSpan span(coords.size());
  // Free brackets are homogeneous of degree deg a + deg b - 1.
  const bool free = !ctx.is_quotient();
  auto accept = [&](std::uint32_t da, std::uint32_t db) { return !free || da + db - 1 == n; };
  for_each_source_bracket(ctx, source_bound, sources, accept, [&](const Polynomial& br) {
    const Polynomial part = graded_component(br, n);
    if (!part.is_zero()) span.insert(coords.coordinates(part));
  });
  return finish(n, coords, span);
}

GradedSubspace derived_span_upto(const PoissonContext& ctx, std::uint32_t source_bound,
                                 DerivedSources sources) {
  MonomialCoordinates coords(normal_monomials_upto(ctx, source_bound));
  IncrementalSpan span(coords.size());
  for_each_source_bracket(
      ctx, source_bound, sources, [](std::uint32_t, std::uint32_t) { return true; },
      [&](const Polynomial& br) {
        if (!br.is_zero()) span.insert(coords.coordinates(br));
      });
  return finish(source_bound, coords, span);
}

GradedSubspace pair_bracket_span(const PoissonContext& ctx, std::uint32_t a, std::uint32_t b) {
  if (a == 0 || b == 0) throw std::invalid_argument("pair_bracket_span: degrees must be >= 1");
  const std::uint32_t top = a + b - 1;
  MonomialCoordinates coords(normal_monomials_upto(ctx, top));
  IncrementalSpan span(coords.size());
  const auto left = normal_monomials(ctx, a);
  const auto right = normal_monomials(ctx, b);
  for (const auto& ma : left) {
    for (const auto& mb : right) {
      const Polynomial br = ctx.bracket(Polynomial::term(ma, 1), Polynomial::term(mb, 1));
      if (!br.is_zero()) span.insert(coords.coordinates(br));
    }
  }
  return finish(top, coords, span);
}

DerivedVerdict derived_membership(const PoissonContext& ctx, const Polynomial& f,
                                  std::uint32_t source_bound, DerivedSources sources) {
  if (!ctx.is_reduced(f)) throw std::invalid_argument("derived_membership: f is not in normal form");
  if (f.is_zero()) return DerivedVerdict::InSpan;
  if (f.degree() > static_cast<int>(source_bound)) return DerivedVerdict::NotInSpanAtBound;
  const GradedSubspace d = derived_span_upto(ctx, source_bound, sources);
  const MonomialCoordinates coords(d.ambient);
  return in_span(coords.coordinates(f), d.basis) ? DerivedVerdict::InSpan
                                                 : DerivedVerdict::NotInSpanAtBound;
}

VerificationReport verify_prop1(const LieAlgebra& algebra, std::uint32_t max_degree,
                                DerivedSources sources) {
  const KillingForm killing = killing_form(algebra);
  VerificationReport report;
  report.claim = "prop1";
  report.param("algebra", algebra.name())
      .param("max_degree", std::to_string(max_degree))
      .param("sources", std::string(to_string(sources)));
  if (!killing.semisimple) {
    report.warnings.push_back("algebra is not semisimple (Killing form degenerate); the splitting "
                              "is not expected to hold");
  }
  auto shared = std::make_shared<const LieAlgebra>(algebra);
  const PoissonContext ctx = PoissonContext::free(shared);
  for (std::uint32_t n = 0; n <= max_degree; ++n) {
    const GradedSubspace c = invariants_basis(algebra, n);
    const GradedSubspace d = derived_span(ctx, n, n + 1, sources);
    RationalMatrix both = c.basis;
    if (both.rows() == 0) both = RationalMatrix(0, c.ambient.size());
    for (std::size_t r = 0; r < d.basis.rows(); ++r) both.append_row(d.basis.row(r));
    const std::size_t dim = c.ambient.size();
    const std::size_t joint = rank(both);
    ReportRecord rec;
    rec.degree = n;
    rec.dim("S", dim).dim("C", c.rank).dim("D", d.rank).dim("C+D", joint);
    rec.pass = c.rank + d.rank == dim && joint == dim;
    if (!rec.pass) {
      rec.witness = c.rank + d.rank != dim
                        ? "dim C + dim D = " + std::to_string(c.rank + d.rank) + " != dim S = " +
                              std::to_string(dim)
                        : "C and D intersect nontrivially";
    }
    report.records.push_back(std::move(rec));
  }
  return report;
}

namespace {

void orbit_params(VerificationReport& report, const OrbitDescriptor& orbit) {
  report.param("algebra", orbit.algebra().name())
      .param("relation", orbit.context().format(orbit.ideal().relation()))
      .param("orbit_type", std::string(to_string(orbit.type())));
}

}  // namespace

VerificationReport verify_thm2(const OrbitDescriptor& orbit, std::uint32_t max_bound) {
  VerificationReport report;
  report.claim = "thm2";
  orbit_params(report, orbit);
  report.param("max_source_bound", std::to_string(max_bound));
  const PoissonContext& ctx = orbit.context();
  for (std::uint32_t b = 0; b <= max_bound; ++b) {
    const GradedSubspace d = derived_span_upto(ctx, b);
    const MonomialCoordinates coords(d.ambient);
    const auto unit = coords.coordinates(one(ctx));
    const bool one_in = in_span(unit, d.basis);
    RationalMatrix with_constants = d.basis.rows() ? d.basis : RationalMatrix(0, coords.size());
    with_constants.append_row(unit);
    const std::size_t total = rank(with_constants);
    ReportRecord rec;
    rec.degree = b;
    rec.dim("P", coords.size()).dim("derived", d.rank).dim("R+derived", total);
    rec.pass = !one_in && total == coords.size();
    if (one_in) {
      rec.witness = "1 lies in the derived span";
    } else if (total != coords.size()) {
      for (const auto& m : coords.monomials()) {
        with_constants.append_row(coords.coordinates(Polynomial::term(m, 1)));
        if (rank(with_constants) > total) {
          rec.witness = ctx.format(Polynomial::term(m, 1)) + " is outside R + derived span";
          break;
        }
        with_constants = d.basis.rows() ? d.basis : RationalMatrix(0, coords.size());
        with_constants.append_row(unit);
      }
    }
    report.records.push_back(std::move(rec));
  }
  return report;
}

VerificationReport verify_heisenberg(const OrbitDescriptor& orbit, std::uint32_t bound) {
  if (bound == 0) throw std::invalid_argument("verify_heisenberg: bound must be >= 1");
  VerificationReport report;
  report.claim = "heisenberg";
  orbit_params(report, orbit);
  report.param("source_bound", std::to_string(bound));
  const PoissonContext& ctx = orbit.context();
  for (std::uint32_t b = 1; b <= bound; ++b) {
    const GradedSubspace d = derived_span_upto(ctx, b);
    const MonomialCoordinates coords(d.ambient);
    const auto targets = normal_monomials_upto(ctx, b - 1);
    std::size_t inside = 0;
    std::optional<std::string> missing;
    for (const auto& m : targets) {
      const Polynomial p = Polynomial::term(m, 1);
      if (in_span(coords.coordinates(p), d.basis)) {
        ++inside;
      } else if (!missing) {
        missing = ctx.format(p) + " is not in the derived span";
      }
    }
    ReportRecord rec;
    rec.degree = b;
    rec.dim("P", coords.size())
        .dim("derived", d.rank)
        .dim("targets", targets.size())
        .dim("targets_in_span", inside)
        .dim("one_in_span", in_span(coords.coordinates(one(ctx)), d.basis) ? 1 : 0);
    rec.pass = inside == targets.size();
    rec.witness = missing;
    report.records.push_back(std::move(rec));
  }
  return report;
}

IdealClosure poisson_ideal_closure(const PoissonContext& ctx, const std::vector<Polynomial>& gens,
                                   std::uint32_t bound) {
  if (gens.empty()) throw std::invalid_argument("poisson_ideal_closure: empty generator list");
  MonomialCoordinates coords(normal_monomials_upto(ctx, bound));
  IncrementalSpan span(coords.size());
  IdealClosure result;

  auto try_insert = [&](ClosureStep::Move move, std::size_t parent, std::size_t gen,
                        Polynomial raw) {
    if (raw.is_zero()) return;
    if (auto idx = span.insert(coords.coordinates(raw))) {
      Polynomial element = coords.polynomial(span.row(*idx));
      result.steps.push_back({move, parent, gen, std::move(raw), std::move(element)});
    }
  };

  for (std::size_t g = 0; g < gens.size(); ++g) {
    const Polynomial& f = gens[g];
    if (f.is_zero()) throw std::invalid_argument("poisson_ideal_closure: zero generator");
    if (!ctx.is_reduced(f)) throw std::invalid_argument("poisson_ideal_closure: generator not in normal form");
    if (f.degree() > static_cast<int>(bound)) {
      throw std::invalid_argument("poisson_ideal_closure: generator degree exceeds the bound");
    }
    try_insert(ClosureStep::Move::Generator, 0, g, f);
  }

  // Stored rows have distinct leading monomials, so the rows of degree <= D-1
  // span the part of the closure that may still be multiplied.
  for (std::size_t r = 0; r < result.steps.size(); ++r) {
    const Polynomial current = result.steps[r].element;
    const int deg = current.degree();
    for (std::size_t i = 0; i < ctx.num_vars(); ++i) {
      const Polynomial gen = ctx.generator(i);
      if (deg + 1 <= static_cast<int>(bound)) {
        try_insert(ClosureStep::Move::Multiply, r, i, ctx.multiply(gen, current));
      }
      try_insert(ClosureStep::Move::Bracket, r, i, ctx.bracket(gen, current));
    }
  }

  result.span = finish(bound, coords, span);
  result.filtration_ranks.assign(bound + 1, 0);
  for (std::size_t r = 0; r < span.rank(); ++r) {
    const std::uint32_t lead_deg = coords.monomials()[span.pivot(r)].degree();
    for (std::uint32_t d = lead_deg; d <= bound; ++d) ++result.filtration_ranks[d];
  }
  result.contains_one = span.contains(coords.coordinates(one(ctx)));
  result.proper_at_bound = span.rank() < coords.size();
  return result;
}

VerificationReport simplicity_probe(const OrbitDescriptor& orbit,
                                    const std::vector<Polynomial>& trials, std::uint32_t bound) {
  if (trials.empty()) throw std::invalid_argument("simplicity_probe: no trial generators");
  const PoissonContext& ctx = orbit.context();
  VerificationReport report;
  report.claim = "simplicity";
  orbit_params(report, orbit);
  report.param("bound", std::to_string(bound));

  const bool nilpotent = orbit.type() == OrbitType::Nilpotent;
  std::optional<std::string> proper_witness;
  for (const auto& trial : trials) {
    const Polynomial f = project(orbit, trial);
    if (f.is_constant()) {
      throw std::invalid_argument("simplicity_probe: trial generator " + ctx.format(trial) +
                                  " is constant in P(O)");
    }
    const IdealClosure closure = poisson_ideal_closure(ctx, {f}, bound);
    ReportRecord rec;
    rec.degree = bound;
    rec.label = "trial " + ctx.format(f);
    rec.dim("P", closure.span.ambient.size())
        .dim("closure", closure.span.rank)
        .dim("contains_one", closure.contains_one ? 1 : 0);
    if (nilpotent) {
      if (closure.proper_at_bound && !proper_witness) proper_witness = ctx.format(f);
    } else {
      rec.pass = closure.contains_one;
      if (!rec.pass) {
        rec.witness = "closure is proper at this bound (inconclusive, not a refutation)";
      }
    }
    report.records.push_back(std::move(rec));
  }
  if (nilpotent) {
    ReportRecord summary;
    summary.degree = bound;
    summary.label = "proper Poisson ideal";
    summary.pass = proper_witness.has_value();
    summary.witness = proper_witness ? "closure of " + *proper_witness + " is proper"
                                     : std::string("every trial closure contains 1");
    report.records.push_back(std::move(summary));
  }
  return report;
}

VerificationReport verify_homogeneous_ideals(const OrbitDescriptor& orbit, std::uint32_t k,
                                             std::uint32_t bound) {
  if (k == 0) throw std::invalid_argument("verify_homogeneous_ideals: k must be >= 1");
  if (!orbit.is_homogeneous()) {
    throw std::invalid_argument("verify_homogeneous_ideals: orbit relation is not homogeneous");
  }
  if (k > bound) throw std::invalid_argument("verify_homogeneous_ideals: k exceeds the bound");
  const PoissonContext& ctx = orbit.context();
  VerificationReport report;
  report.claim = "nilpotent-ideals";
  orbit_params(report, orbit);
  report.param("k", std::to_string(k)).param("bound", std::to_string(bound));

  for (std::uint32_t a = 1; a <= bound; ++a) {
    for (std::uint32_t b = a; a + b - 1 <= bound; ++b) {
      const auto left = normal_monomials(ctx, a);
      const auto right = normal_monomials(ctx, b);
      std::size_t pairs = 0;
      std::size_t nonzero = 0;
      ReportRecord rec;
      rec.degree = a + b - 1;
      rec.label = "{P_" + std::to_string(a) + ", P_" + std::to_string(b) + "}";
      for (const auto& ma : left) {
        for (const auto& mb : right) {
          ++pairs;
          const Polynomial pa = Polynomial::term(ma, 1);
          const Polynomial pb = Polynomial::term(mb, 1);
          const Polynomial br = ctx.bracket(pa, pb);
          if (br.is_zero()) continue;
          ++nonzero;
          const bool graded =
              br.is_homogeneous() && br.degree() == static_cast<int>(a + b - 1);
          if (!graded && rec.pass) {
            rec.pass = false;
            rec.witness = "{" + ctx.format(pa) + ", " + ctx.format(pb) + "} = " + ctx.format(br);
          }
        }
      }
      rec.dim("pairs", pairs).dim("nonzero", nonzero);
      report.records.push_back(std::move(rec));
    }
  }

  std::vector<Polynomial> gens;
  for (std::uint32_t d = k; d <= bound; ++d)
    for (const auto& m : normal_monomials(ctx, d)) gens.push_back(Polynomial::term(m, 1));
  const IdealClosure closure = poisson_ideal_closure(ctx, gens, bound);
  bool graded = true;
  for (const auto& step : closure.steps)
    if (step.element.min_degree() < static_cast<int>(k)) graded = false;
  ReportRecord rec;
  rec.degree = bound;
  rec.label = "closure of P_(" + std::to_string(k) + ")";
  rec.dim("P", closure.span.ambient.size())
      .dim("P_(k)", gens.size())
      .dim("closure", closure.span.rank)
      .dim("contains_one", closure.contains_one ? 1 : 0);
  rec.pass = !closure.contains_one && closure.span.rank == gens.size() && graded;
  if (!rec.pass) {
    rec.witness = closure.contains_one ? std::string("closure contains 1")
                                       : std::string("closure leaves P_(k)");
  }
  report.records.push_back(std::move(rec));
  return report;
}

VerificationReport nonexactness_check(const OrbitDescriptor& orbit, std::uint32_t bound,
                                      const Rational& target) {
  const PoissonContext& ctx = orbit.context();
  VerificationReport report;
  report.claim = "nonexact";
  orbit_params(report, orbit);
  report.param("bound", std::to_string(bound))
      .param("target", to_string(target))
      .param("expect", target == 0 ? "feasible" : "infeasible");
  const std::size_t dim = ctx.num_vars();
  for (std::uint32_t d = 0; d <= bound; ++d) {
    const auto monos = normal_monomials_upto(ctx, d);
    const MonomialCoordinates coords(monos);
    RationalMatrix system(coords.size(), dim * monos.size());
    for (std::size_t i = 0; i < dim; ++i) {
      const Polynomial gen = ctx.generator(i);
      for (std::size_t c = 0; c < monos.size(); ++c) {
        const auto col = coords.coordinates(ctx.bracket(gen, Polynomial::term(monos[c], 1)));
        for (std::size_t r = 0; r < col.size(); ++r) system(r, i * monos.size() + c) = col[r];
      }
    }
    const auto rhs = coords.coordinates(Polynomial::constant(dim, target));
    const auto solution = solve_linear(system, rhs);
    ReportRecord rec;
    rec.degree = d;
    rec.dim("unknowns", system.cols())
        .dim("equations", system.rows())
        .dim("rank", rank(system))
        .dim("feasible", solution ? 1 : 0);
    rec.pass = target == 0 ? solution.has_value() : !solution.has_value();
    if (solution && target != 0) {
      std::string w;
      for (std::size_t i = 0; i < dim; ++i) {
        Polynomial fi(dim);
        for (std::size_t c = 0; c < monos.size(); ++c) fi.add_term(monos[c], (*solution)[i * monos.size() + c]);
        if (!w.empty()) w += ", ";
        w += "f_" + ctx.algebra().basis()[i] + " = " + ctx.format(fi);
      }
      rec.witness = w;
    }
    report.records.push_back(std::move(rec));
  }
  return report;
}

namespace {

// Span of m * g over normal monomials m with deg m + nominal_deg(g) <= bound.
IncrementalSpan ideal_truncation(const PoissonContext& ctx, const MonomialCoordinates& coords,
                                 const std::vector<std::pair<Polynomial, std::uint32_t>>& gens,
                                 std::uint32_t bound) {
  IncrementalSpan span(coords.size());
  for (const auto& [g, nominal] : gens) {
    if (nominal > bound) continue;
    for (const auto& m : normal_monomials_upto(ctx, bound - nominal)) {
      const Polynomial p = ctx.multiply(Polynomial::term(m, 1), g);
      if (!p.is_zero()) span.insert(coords.coordinates(p));
    }
  }
  return span;
}

bool is_lie_ideal(const PoissonContext& ctx, const MonomialCoordinates& coords,
                  const IncrementalSpan& span) {
  for (std::size_t r = 0; r < span.rank(); ++r) {
    const Polynomial element = coords.polynomial(span.row(r));
    for (std::size_t i = 0; i < ctx.num_vars(); ++i) {
      const Polynomial br = ctx.bracket(ctx.generator(i), element);
      if (!br.is_zero() && !span.contains(coords.coordinates(br))) return false;
    }
  }
  return true;
}

}  // namespace

VerificationReport ideal_square_check(const PoissonContext& ctx,
                                      const std::vector<Polynomial>& gens, std::uint32_t bound) {
  if (gens.empty()) throw std::invalid_argument("ideal_square_check: empty generator list");
  VerificationReport report;
  report.claim = "lemma";
  report.param("algebra", ctx.algebra().name());
  report.param("context", ctx.is_quotient() ? "quotient by " + ctx.format(ctx.ideal()->relation())
                                            : std::string("free"));
  std::string gen_list;
  std::vector<std::pair<Polynomial, std::uint32_t>> first;
  for (const auto& g : gens) {
    if (!ctx.is_reduced(g)) throw std::invalid_argument("ideal_square_check: generator not in normal form");
    if (g.is_constant()) {
      throw std::invalid_argument("ideal_square_check: constant generator does not give a proper ideal");
    }
    first.emplace_back(g, static_cast<std::uint32_t>(g.degree()));
    gen_list += (gen_list.empty() ? "" : ", ") + ctx.format(g);
  }
  report.param("generators", gen_list).param("bound", std::to_string(bound));

  std::vector<std::pair<Polynomial, std::uint32_t>> squares;
  for (std::size_t i = 0; i < first.size(); ++i)
    for (std::size_t j = i; j < first.size(); ++j)
      squares.emplace_back(ctx.multiply(first[i].first, first[j].first),
                           first[i].second + first[j].second);

  const MonomialCoordinates coords(normal_monomials_upto(ctx, bound));
  const IncrementalSpan ideal = ideal_truncation(ctx, coords, first, bound);
  const IncrementalSpan square = ideal_truncation(ctx, coords, squares, bound);

  ReportRecord base;
  base.degree = bound;
  base.label = "I";
  base.dim("P", coords.size()).dim("I", ideal.rank());
  base.pass = !ideal.contains(coords.coordinates(Polynomial::constant(ctx.num_vars(), 1)));
  if (!base.pass) base.witness = "1 lies in the truncation of I; the ideal is not proper";
  report.records.push_back(std::move(base));

  ReportRecord contained;
  contained.degree = bound;
  contained.label = "I^2 in I";
  contained.dim("I^2", square.rank());
  for (std::size_t r = 0; r < square.rank() && contained.pass; ++r) {
    if (!ideal.contains(square.row(r))) {
      contained.pass = false;
      contained.witness = ctx.format(coords.polynomial(square.row(r))) + " is in I^2 but not in I";
    }
  }
  report.records.push_back(std::move(contained));

  ReportRecord strict;
  strict.degree = bound;
  strict.label = "I^2 != I";
  strict.dim("I", ideal.rank()).dim("I^2", square.rank());
  strict.pass = false;
  for (const auto& [g, nominal] : first) {
    if (nominal <= bound && !square.contains(coords.coordinates(g))) {
      strict.pass = true;
      strict.witness = ctx.format(g) + " is in I but not in I^2";
      break;
    }
  }
  if (!strict.pass) strict.witness = "every generator lies in I^2 at this bound";
  report.records.push_back(std::move(strict));

  ReportRecord lie;
  lie.degree = bound;
  if (is_lie_ideal(ctx, coords, ideal)) {
    lie.label = "I^2 Lie ideal";
    lie.pass = is_lie_ideal(ctx, coords, square);
    if (!lie.pass) lie.witness = "{e_i, I^2} leaves I^2";
  } else {
    lie.label = "I^2 Lie ideal (not applicable: I is not a Lie ideal)";
  }
  report.records.push_back(std::move(lie));
  return report;
}

}  // namespace orbitalg
