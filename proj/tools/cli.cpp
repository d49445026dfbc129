#include "cli.hpp"

#include "orbitalg/lie_algebra.hpp"
#include "orbitalg/orbit.hpp"
#include "orbitalg/parse.hpp"
#include "orbitalg/sampling.hpp"
#include "orbitalg/structure.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <memory>
#include <ostream>
#include <sstream>

namespace orbitalg::cli {

namespace {

// Input problems that map to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_common_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--algebra,--orbit", cfg.algebra,
                  "Built-in algebra (sl2r, so3, heisenberg) or path to a JSON definition")
      ->required();
  sub->add_option("--n", cfg.n, "Heisenberg size n (dimension 2n+1)");
  sub->add_option("--casimir", cfg.casimir, "Orbit relation: built-in Casimir minus this level");
  sub->add_option("--relation", cfg.relation, "Orbit relation as a polynomial expression");
  sub->add_option("--orbit-type", cfg.orbit_type, "Override orbit type: semisimple|nilpotent|other");
  sub->add_option("--max-degree", cfg.max_degree, "Degree bound");
  sub->add_option("--gen", cfg.gens, "Generator polynomial (repeatable)");
  sub->add_option("--seed", cfg.seed, "Seed for sampled trial generators");
  sub->add_flag("--json", cfg.json, "Emit the report as JSON");
}

std::shared_ptr<const LieAlgebra> load_algebra(const RunConfig& cfg) {
  if (cfg.algebra == "sl2r" || cfg.algebra == "so3" || cfg.algebra == "heisenberg") {
    try {
      return std::make_shared<const LieAlgebra>(builtin_algebra(cfg.algebra, cfg.n));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (!std::filesystem::exists(cfg.algebra)) {
    throw UsageError("'" + cfg.algebra + "' is neither a built-in algebra nor a readable file");
  }
  try {
    return std::make_shared<const LieAlgebra>(load_algebra_file(cfg.algebra));
  } catch (const AlgebraFormatError& e) {
    throw UsageError(std::string("algebra file: ") + e.what());
  }
}

Polynomial parse_in(const LieAlgebra& algebra, const std::string& text, const char* what) {
  try {
    return parse_polynomial(text, algebra.basis());
  } catch (const ParseError& e) {
    throw UsageError(std::string(what) + " '" + text + "': " + e.what());
  }
}

std::optional<OrbitDescriptor> load_orbit(const RunConfig& cfg,
                                          const std::shared_ptr<const LieAlgebra>& algebra,
                                          std::optional<std::string> default_casimir) {
  std::optional<OrbitType> type;
  if (cfg.orbit_type) {
    try {
      type = parse_orbit_type(*cfg.orbit_type);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (cfg.relation && cfg.casimir) throw UsageError("give either --relation or --casimir, not both");
  try {
    if (cfg.relation) {
      return make_orbit(algebra, parse_in(*algebra, *cfg.relation, "relation"), type);
    }
    const auto level = cfg.casimir ? cfg.casimir : default_casimir;
    if (!level) return std::nullopt;
    Rational c;
    try {
      c = parse_rational(*level);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--casimir: ") + e.what());
    }
    return casimir_orbit(algebra, c, type);
  } catch (const RelationNotClosed& e) {
    throw UsageError(e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

OrbitDescriptor require_orbit(const RunConfig& cfg, const std::shared_ptr<const LieAlgebra>& algebra,
                              std::optional<std::string> default_casimir = std::nullopt) {
  auto orbit = load_orbit(cfg, algebra, std::move(default_casimir));
  if (!orbit) throw UsageError("this command needs an orbit: pass --casimir or --relation");
  return std::move(*orbit);
}

std::vector<Polynomial> parse_gens(const RunConfig& cfg, const LieAlgebra& algebra,
                                   const PoissonContext& ctx) {
  std::vector<Polynomial> gens;
  for (const auto& text : cfg.gens) gens.push_back(ctx.reduce(parse_in(algebra, text, "generator")));
  return gens;
}

VerificationReport validate_report(const RunConfig& cfg,
                                   const std::shared_ptr<const LieAlgebra>& algebra) {
  VerificationReport report;
  report.claim = "validate";
  report.param("algebra", algebra->name()).param("dimension", std::to_string(algebra->dimension()));
  const ValidationReport v = validate(*algebra);
  std::size_t antisym = 0;
  std::size_t jacobi = 0;
  for (const auto& issue : v.issues)
    (issue.kind == ValidationIssue::Kind::Antisymmetry ? antisym : jacobi)++;
  ReportRecord axioms;
  axioms.label = "Lie axioms";
  axioms.dim("antisymmetry_violations", antisym).dim("jacobi_violations", jacobi);
  axioms.pass = v.ok();
  if (!v.ok()) {
    std::string w;
    for (const auto& issue : v.issues) w += (w.empty() ? "" : "; ") + issue.describe(*algebra);
    axioms.witness = w;
  }
  report.records.push_back(std::move(axioms));
  if (v.ok()) {
    const KillingForm kf = killing_form(*algebra);
    ReportRecord killing;
    killing.label = "Killing form";
    killing.dim("rank", rank(kf.matrix)).dim("semisimple", kf.semisimple ? 1 : 0);
    std::string diag;
    for (std::size_t i = 0; i < kf.matrix.rows(); ++i) {
      diag += "[";
      for (std::size_t j = 0; j < kf.matrix.cols(); ++j)
        diag += (j ? " " : "") + to_string(kf.matrix(i, j));
      diag += "]";
    }
    killing.witness = diag;
    report.records.push_back(std::move(killing));
    if (auto orbit = load_orbit(cfg, algebra, std::nullopt)) {
      ReportRecord rel;
      rel.label = "orbit relation " + orbit->context().format(orbit->ideal().relation()) +
                  " (" + std::string(to_string(orbit->type())) + ")";
      rel.dim("bracket_closed", 1);
      report.records.push_back(std::move(rel));
    }
  }
  return report;
}

VerificationReport dispatch(const RunConfig& cfg) {
  const auto algebra = load_algebra(cfg);
  if (cfg.command == "validate") return validate_report(cfg, algebra);

  if (!validate(*algebra).ok()) {
    throw UsageError("algebra '" + algebra->name() + "' violates the Lie axioms; run validate");
  }
  const std::uint32_t bound = cfg.max_degree;
  VerificationReport report;
  if (cfg.claim == "prop1") {
    report = verify_prop1(*algebra, bound,
                          cfg.all_pairs ? DerivedSources::AllPairs : DerivedSources::Auto);
  } else if (cfg.claim == "thm2") {
    report = verify_thm2(require_orbit(cfg, algebra, "1"), bound);
  } else if (cfg.claim == "heisenberg") {
    if (bound == 0) throw UsageError("--max-degree must be >= 1 for heisenberg");
    report = verify_heisenberg(require_orbit(cfg, algebra, "1"), bound);
  } else if (cfg.claim == "nilpotent-ideals") {
    const auto orbit = require_orbit(cfg, algebra, "0");
    if (cfg.k == 0) throw UsageError("--k must be >= 1");
    if (!orbit.is_homogeneous()) throw UsageError("nilpotent-ideals needs a homogeneous relation");
    if (cfg.k > bound) throw UsageError("--k must not exceed --max-degree");
    report = verify_homogeneous_ideals(orbit, cfg.k, bound);
  } else if (cfg.claim == "nonexact") {
    Rational target;
    try {
      target = parse_rational(cfg.target);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--target: ") + e.what());
    }
    report = nonexactness_check(require_orbit(cfg, algebra, "1"), bound, target);
  } else if (cfg.claim == "lemma") {
    const auto orbit = load_orbit(cfg, algebra, std::nullopt);
    const PoissonContext ctx = orbit ? orbit->context() : PoissonContext::free(algebra);
    if (cfg.gens.empty()) throw UsageError("lemma needs at least one --gen");
    const auto gens = parse_gens(cfg, *algebra, ctx);
    for (const auto& g : gens)
      if (g.is_constant()) throw UsageError("lemma generators must be nonconstant in the quotient");
    report = ideal_square_check(ctx, gens, bound);
  } else if (cfg.claim == "simplicity") {
    const auto orbit = require_orbit(cfg, algebra);
    std::vector<Polynomial> trials = parse_gens(cfg, *algebra, orbit.context());
    if (trials.empty()) {
      PolynomialSampler sampler(cfg.seed);
      while (trials.size() < 3) {
        Polynomial f = project(orbit, sampler.sample_nonconstant(algebra->dimension(), 2, 3));
        if (!f.is_constant()) trials.push_back(std::move(f));
      }
    }
    for (const auto& t : trials)
      if (t.is_constant()) throw UsageError("trial generators must be nonconstant in P(O)");
    report = simplicity_probe(orbit, trials, bound);
  } else {
    throw UsageError("unknown claim '" + cfg.claim + "'");
  }
  report.param("seed", std::to_string(cfg.seed));
  return report;
}

}  // namespace

std::variant<RunConfig, int> parse_command_line(int argc, const char* const* argv,
                                                std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Poisson algebras of polynomials on coadjoint orbits: bounded-degree checks",
               "orbitalg"};
  app.require_subcommand(1);

  auto* validate_cmd = app.add_subcommand("validate", "Check the Lie axioms and Killing form");
  add_common_options(validate_cmd, cfg);

  auto* verify = app.add_subcommand("verify", "Verify a structure claim at bounded degree");
  verify->require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> claims = {
      {"prop1", "S(g) = C(g) + S(g)' degreewise"},
      {"thm2", "P(O) = R + P(O)' at each source bound"},
      {"heisenberg", "P(R^2n) = P(R^2n)' on a Heisenberg orbit"},
      {"nilpotent-ideals", "P_(k)(O) is a proper Poisson ideal on a conical orbit"},
      {"nonexact", "1 = sum_i {e_i, f_i} has no polynomial solution"},
      {"lemma", "I^2 != I for a proper finitely generated ideal"},
  };
  for (const auto& [name, desc] : claims) {
    auto* sub = verify->add_subcommand(name, desc);
    add_common_options(sub, cfg);
    if (name == "prop1") sub->add_flag("--all-pairs", cfg.all_pairs, "Use all monomial pairs");
    if (name == "nilpotent-ideals") sub->add_option("--k", cfg.k, "Index k >= 1 of P_(k)");
    if (name == "nonexact") sub->add_option("--target", cfg.target, "Right-hand side constant");
  }

  auto* probe = app.add_subcommand("probe", "Bounded-degree probes");
  probe->require_subcommand(1);
  auto* simplicity = probe->add_subcommand("simplicity", "Poisson-ideal closures of trial generators");
  add_common_options(simplicity, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? static_cast<int>(kPass) : static_cast<int>(kUsageError);
  }

  if (validate_cmd->parsed()) {
    cfg.command = "validate";
  } else if (verify->parsed()) {
    cfg.command = "verify";
    for (auto* sub : verify->get_subcommands()) cfg.claim = sub->get_name();
  } else {
    cfg.command = "probe";
    cfg.claim = "simplicity";
  }
  return cfg;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const VerificationReport report = dispatch(config);
    out << (config.json ? report.to_json() : report.to_text());
    return report.pass() ? kPass : kClaimFailed;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace orbitalg::cli
