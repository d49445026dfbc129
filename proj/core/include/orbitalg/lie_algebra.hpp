#pragma once

#include "orbitalg/matrix.hpp"
#include "orbitalg/polynomial.hpp"
#include "orbitalg/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace orbitalg {

enum class AlgebraFamily { Sl2R, So3, Heisenberg, Custom };

// Finite-dimensional Lie algebra given by structure constants
// [e_i, e_j] = sum_k c(i, j, k) e_k. Only nonzero constants are stored.
// Construction does not enforce the Lie axioms; see validate().
class LieAlgebra {
 public:
  using Index = std::tuple<std::size_t, std::size_t, std::size_t>;

  LieAlgebra(std::string name, std::vector<std::string> basis,
             const std::map<Index, Rational>& constants,
             AlgebraFamily family = AlgebraFamily::Custom);

  const std::string& name() const noexcept { return name_; }
  AlgebraFamily family() const noexcept { return family_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<std::string>& basis() const noexcept { return basis_; }

  Rational constant(std::size_t i, std::size_t j, std::size_t k) const;
  const std::map<Index, Rational>& constants() const noexcept { return constants_; }

  // Nonzero terms (k, c(i,j,k)) of [e_i, e_j].
  const std::vector<std::pair<std::size_t, Rational>>& bracket_terms(std::size_t i,
                                                                     std::size_t j) const {
    return table_[i * basis_.size() + j];
  }

  // [e_i, e_j] as a linear polynomial on g*.
  Polynomial bracket_polynomial(std::size_t i, std::size_t j) const;
  Polynomial generator(std::size_t i) const { return Polynomial::variable(dimension(), i); }

  // Distinguished invariant for the built-ins: the quadratic Casimir of sl2r
  // and so3, the central element of the Heisenberg algebras.
  const std::optional<Polynomial>& casimir() const noexcept { return casimir_; }
  void set_casimir(Polynomial c) { casimir_ = std::move(c); }

 private:
  std::string name_;
  AlgebraFamily family_;
  std::vector<std::string> basis_;
  std::map<Index, Rational> constants_;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> table_;
  std::optional<Polynomial> casimir_;
};

struct ValidationIssue {
  enum class Kind { Antisymmetry, Jacobi };
  Kind kind;
  // Antisymmetry: c(i,j,k) + c(j,i,k) = value != 0.
  // Jacobi: the e_l coefficient of the cyclic sum over (i,j,k) equals value.
  std::size_t i, j, k, l;
  Rational value;

  std::string describe(const LieAlgebra& algebra) const;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const noexcept { return issues.empty(); }
};

ValidationReport validate(const LieAlgebra& algebra);

class InvalidAlgebra : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KillingForm {
  RationalMatrix matrix;  // B(e_i, e_j) = tr(ad e_i ad e_j)
  Rational determinant;
  bool semisimple;        // Cartan's criterion: det B != 0
};

// Throws InvalidAlgebra if validate() reports any issue.
KillingForm killing_form(const LieAlgebra& algebra);
bool is_semisimple(const LieAlgebra& algebra);

// Built-ins: "sl2r" (basis x,y,z; [y,z]=x, [z,x]=y, [x,y]=-z), "so3" (cyclic),
// "heisenberg" with n >= 1 (basis q..., p..., z; [q_i,p_i]=z). Throws
// std::invalid_argument for an unknown name or a bad n.
LieAlgebra builtin_algebra(std::string_view name, std::optional<int> n = std::nullopt);

class AlgebraFormatError : public std::runtime_error {
 public:
  AlgebraFormatError(const std::string& message, std::optional<std::size_t> position = {});
  // Zero-based byte offset into the JSON text, when known.
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  std::optional<std::size_t> position_;
};

// JSON definition:
//   {"dim": d, "basis": [...], "brackets": [{"i": a, "j": b,
//     "terms": [{"k": c, "coeff": "p/q"}]}]}
// Antisymmetric completion is automatic; conflicting entries are errors.
LieAlgebra parse_algebra_json(std::string_view text, std::string name = "custom");
LieAlgebra load_algebra_file(const std::string& path);

}  // namespace orbitalg
