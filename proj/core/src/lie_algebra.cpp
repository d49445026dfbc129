#include "orbitalg/lie_algebra.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace orbitalg {

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis,
                       const std::map<Index, Rational>& constants, AlgebraFamily family)
    : name_(std::move(name)), family_(family), basis_(std::move(basis)) {
  const std::size_t d = basis_.size();
  table_.resize(d * d);
  for (const auto& [idx, value] : constants) {
    const auto [i, j, k] = idx;
    if (i >= d || j >= d || k >= d) {
      throw std::invalid_argument("structure constant index out of range");
    }
    if (value == 0) continue;
    constants_.emplace(idx, value);
    table_[i * d + j].emplace_back(k, value);
  }
}

Rational LieAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
  auto it = constants_.find({i, j, k});
  return it == constants_.end() ? Rational(0) : it->second;
}

Polynomial LieAlgebra::bracket_polynomial(std::size_t i, std::size_t j) const {
  Polynomial p(dimension());
  for (const auto& [k, c] : bracket_terms(i, j)) p.add_term(Monomial::variable(dimension(), k), c);
  return p;
}

std::string ValidationIssue::describe(const LieAlgebra& algebra) const {
  const auto& b = algebra.basis();
  if (kind == Kind::Antisymmetry) {
    return "antisymmetry violated at (" + b[i] + ", " + b[j] + ", " + b[k] + "): c(" + b[i] +
           "," + b[j] + "," + b[k] + ") + c(" + b[j] + "," + b[i] + "," + b[k] +
           ") = " + to_string(value);
  }
  return "Jacobi violated for (" + b[i] + ", " + b[j] + ", " + b[k] + "): coefficient of " + b[l] +
         " is " + to_string(value);
}

ValidationReport validate(const LieAlgebra& algebra) {
  ValidationReport report;
  const std::size_t d = algebra.dimension();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        const Rational sum = algebra.constant(i, j, k) + algebra.constant(j, i, k);
        if (sum != 0) {
          report.issues.push_back({ValidationIssue::Kind::Antisymmetry, i, j, k, 0, sum});
        }
      }
    }
  }
  // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0 for i < j < k.
  std::vector<Rational> acc(d);
  auto add_nested = [&](std::size_t a, std::size_t b, std::size_t c) {
    for (const auto& [m, cab] : algebra.bracket_terms(a, b))
      for (const auto& [l, cmc] : algebra.bracket_terms(m, c)) acc[l] += cab * cmc;
  };
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      for (std::size_t k = j + 1; k < d; ++k) {
        std::fill(acc.begin(), acc.end(), Rational(0));
        add_nested(i, j, k);
        add_nested(j, k, i);
        add_nested(k, i, j);
        for (std::size_t l = 0; l < d; ++l) {
          if (acc[l] != 0) {
            report.issues.push_back({ValidationIssue::Kind::Jacobi, i, j, k, l, acc[l]});
          }
        }
      }
    }
  }
  return report;
}

KillingForm killing_form(const LieAlgebra& algebra) {
  const auto report = validate(algebra);
  if (!report.ok()) {
    throw InvalidAlgebra("not a Lie algebra: " + report.issues.front().describe(algebra));
  }
  const std::size_t d = algebra.dimension();
  // (ad e_i)_{b,a} = c(i,a,b), so tr(ad e_i ad e_j) = sum_{a,b} c(i,a,b) c(j,b,a).
  RationalMatrix b(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Rational tr = 0;
      for (std::size_t a = 0; a < d; ++a)
        for (const auto& [bb, cia] : algebra.bracket_terms(i, a)) tr += cia * algebra.constant(j, bb, a);
      b(i, j) = tr;
    }
  }
  Rational det = determinant(b);
  const bool semisimple = det != 0;
  return {std::move(b), std::move(det), semisimple};
}

bool is_semisimple(const LieAlgebra& algebra) { return killing_form(algebra).semisimple; }

namespace {

void set_bracket(std::map<LieAlgebra::Index, Rational>& c, std::size_t i, std::size_t j,
                 std::size_t k, const Rational& v) {
  c[{i, j, k}] = v;
  c[{j, i, k}] = -v;
}

Polynomial quadratic_form(std::size_t d, const std::vector<int>& signs) {
  Polynomial q(d);
  for (std::size_t i = 0; i < d; ++i) q.add_term(Monomial::variable(d, i, 2), signs[i]);
  return q;
}

}  // namespace

LieAlgebra builtin_algebra(std::string_view name, std::optional<int> n) {
  std::map<LieAlgebra::Index, Rational> c;
  if (name == "sl2r") {
    // Read off x d_y^d_z + y d_z^d_x - z d_x^d_y.
    set_bracket(c, 1, 2, 0, 1);
    set_bracket(c, 2, 0, 1, 1);
    set_bracket(c, 0, 1, 2, -1);
    LieAlgebra g("sl2r", {"x", "y", "z"}, c, AlgebraFamily::Sl2R);
    g.set_casimir(quadratic_form(3, {1, 1, -1}));
    return g;
  }
  if (name == "so3") {
    set_bracket(c, 0, 1, 2, 1);
    set_bracket(c, 1, 2, 0, 1);
    set_bracket(c, 2, 0, 1, 1);
    LieAlgebra g("so3", {"x", "y", "z"}, c, AlgebraFamily::So3);
    g.set_casimir(quadratic_form(3, {1, 1, 1}));
    return g;
  }
  if (name == "heisenberg") {
    if (!n || *n < 1) throw std::invalid_argument("heisenberg requires n >= 1");
    const auto size = static_cast<std::size_t>(*n);
    std::vector<std::string> basis;
    for (std::size_t i = 1; i <= size; ++i) basis.push_back(size == 1 ? "q" : "q" + std::to_string(i));
    for (std::size_t i = 1; i <= size; ++i) basis.push_back(size == 1 ? "p" : "p" + std::to_string(i));
    basis.emplace_back("z");
    const std::size_t z = 2 * size;
    for (std::size_t i = 0; i < size; ++i) set_bracket(c, i, size + i, z, 1);
    LieAlgebra g("heisenberg(" + std::to_string(size) + ")", basis, c, AlgebraFamily::Heisenberg);
    g.set_casimir(Polynomial::variable(basis.size(), z));
    return g;
  }
  throw std::invalid_argument("unknown built-in algebra '" + std::string(name) + "'");
}

AlgebraFormatError::AlgebraFormatError(const std::string& message,
                                       std::optional<std::size_t> position)
    : std::runtime_error(position ? message + " at byte " + std::to_string(*position) : message),
      position_(position) {}

namespace {

using json = nlohmann::json;

std::size_t lookup(const std::vector<std::string>& basis, const json& value,
                   const std::string& where) {
  if (!value.is_string()) throw AlgebraFormatError(where + ": expected a basis name");
  const auto name = value.get<std::string>();
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == name) return i;
  throw AlgebraFormatError(where + ": unknown basis element '" + name + "'");
}

Rational read_coeff(const json& value, const std::string& where) {
  try {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_integer()) return Rational(Integer(std::to_string(value.get<long long>())));
  } catch (const std::invalid_argument& e) {
    throw AlgebraFormatError(where + ": " + e.what());
  }
  throw AlgebraFormatError(where + ": coefficient must be an integer or a \"p/q\" string");
}

}  // namespace

LieAlgebra parse_algebra_json(std::string_view text, std::string name) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw AlgebraFormatError(std::string("malformed JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!doc.is_object()) throw AlgebraFormatError("algebra definition must be a JSON object");
  if (!doc.contains("basis") || !doc["basis"].is_array()) {
    throw AlgebraFormatError("missing array field 'basis'");
  }
  std::vector<std::string> basis;
  for (const auto& b : doc["basis"]) {
    if (!b.is_string()) throw AlgebraFormatError("basis entries must be strings");
    const auto s = b.get<std::string>();
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
      throw AlgebraFormatError("basis name '" + s + "' is not an identifier");
    }
    for (const auto& prev : basis)
      if (prev == s) throw AlgebraFormatError("duplicate basis name '" + s + "'");
    basis.push_back(s);
  }
  if (doc.contains("dim")) {
    if (!doc["dim"].is_number_unsigned() || doc["dim"].get<std::size_t>() != basis.size()) {
      throw AlgebraFormatError("'dim' does not match the basis length");
    }
  }

  std::map<LieAlgebra::Index, Rational> c;
  const json brackets = doc.value("brackets", json::array());
  if (!brackets.is_array()) throw AlgebraFormatError("'brackets' must be an array");
  for (std::size_t b = 0; b < brackets.size(); ++b) {
    const std::string where = "brackets[" + std::to_string(b) + "]";
    const json& entry = brackets[b];
    if (!entry.is_object() || !entry.contains("i") || !entry.contains("j")) {
      throw AlgebraFormatError(where + ": expected {\"i\", \"j\", \"terms\"}");
    }
    const std::size_t i = lookup(basis, entry["i"], where + ".i");
    const std::size_t j = lookup(basis, entry["j"], where + ".j");
    const json terms = entry.value("terms", json::array());
    if (!terms.is_array()) throw AlgebraFormatError(where + ".terms: expected an array");
    std::vector<Rational> row(basis.size());
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string tw = where + ".terms[" + std::to_string(t) + "]";
      if (!terms[t].is_object() || !terms[t].contains("k") || !terms[t].contains("coeff")) {
        throw AlgebraFormatError(tw + ": expected {\"k\", \"coeff\"}");
      }
      row[lookup(basis, terms[t]["k"], tw + ".k")] += read_coeff(terms[t]["coeff"], tw + ".coeff");
    }
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (i == j && row[k] != 0) {
        throw AlgebraFormatError(where + ": [" + basis[i] + ", " + basis[i] + "] must vanish");
      }
      // Any earlier entry for (i,j) or (j,i) must agree with the completion.
      auto check = [&](std::size_t a, std::size_t bb, const Rational& v) {
        auto [it, inserted] = c.try_emplace({a, bb, k}, v);
        if (!inserted && it->second != v) {
          throw AlgebraFormatError(where + ": conflicting value for [" + basis[a] + ", " +
                                   basis[bb] + "] along " + basis[k]);
        }
      };
      check(i, j, row[k]);
      check(j, i, -row[k]);
    }
  }
  return LieAlgebra(std::move(name), std::move(basis), c, AlgebraFamily::Custom);
}

LieAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AlgebraFormatError("cannot open algebra file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_algebra_json(buf.str(), path);
}

}  // namespace orbitalg
