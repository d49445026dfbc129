#include "orbitalg/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace orbitalg {

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, std::uint32_t power) {
  if (index >= num_vars) throw std::out_of_range("variable index out of range");
  Monomial m(num_vars);
  m.exps_[index] = power;
  m.degree_ = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::cofactor_in(const Monomial& other) const {
  Monomial q(other);
  for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] -= exps_[i];
  q.degree_ = other.degree_ - degree_;
  return q;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial p(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) p.exps_[i] += other.exps_[i];
  p.degree_ += other.degree_;
  return p;
}

Monomial Monomial::lowered(std::size_t i) const {
  Monomial m(*this);
  --m.exps_[i];
  --m.degree_;
  return m;
}

MonomialOrder MonomialOrder::last_highest(std::size_t num_vars) {
  MonomialOrder o;
  o.priority_.resize(num_vars);
  for (std::size_t i = 0; i < num_vars; ++i) o.priority_[i] = num_vars - 1 - i;
  return o;
}

MonomialOrder MonomialOrder::with_priority(std::vector<std::size_t> highest_first) {
  std::vector<std::size_t> sorted = highest_first;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw std::invalid_argument("variable priority is not a permutation");
  }
  MonomialOrder o;
  o.priority_ = std::move(highest_first);
  return o;
}

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t v : priority_) {
    if (a[v] != b[v]) return a[v] < b[v];
  }
  return false;
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.num_vars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
  Polynomial p(num_vars);
  p.add_term(Monomial(num_vars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
  Polynomial p(num_vars);
  p.add_term(Monomial::variable(num_vars, index), 1);
  return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p(m.num_vars());
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree());
}

int Polynomial::min_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(num_vars_)); }

Monomial Polynomial::leading_monomial(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::logic_error("leading monomial of zero polynomial");
  // Same total degree block is contiguous at the top of the canonical order.
  const std::uint32_t top = terms_.rbegin()->first.degree();
  const Monomial* best = nullptr;
  for (auto it = terms_.rbegin(); it != terms_.rend() && it->first.degree() == top; ++it) {
    if (best == nullptr || order.less(*best, it->first)) best = &it->first;
  }
  return *best;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.num_vars() != num_vars_) {
    throw std::invalid_argument("monomial has " + std::to_string(m.num_vars()) +
                                " variables, polynomial has " + std::to_string(num_vars_));
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial d(num_vars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    d.terms_.emplace_hint(d.terms_.end(), m.lowered(var), c * m[var]);
  }
  return d;
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (num_vars_ != other.num_vars_) {
    throw std::invalid_argument("variable-count mismatch: " + std::to_string(num_vars_) +
                                " vs " + std::to_string(other.num_vars_));
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial n(*this);
  for (auto& [m, c] : n.terms_) c = -c;
  return n;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial p(a.num_vars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
  return p;
}

Polynomial graded_component(const Polynomial& f, std::uint32_t n) {
  Polynomial out(f.num_vars());
  for (const auto& [m, c] : f.terms())
    if (m.degree() == n) out.add_term(m, c);
  return out;
}

Polynomial normal_form(const Polynomial& f, const Polynomial& divisor, const MonomialOrder& order) {
  if (divisor.is_zero()) throw std::invalid_argument("normal_form: zero divisor polynomial");
  if (f.num_vars() != divisor.num_vars()) {
    throw std::invalid_argument("normal_form: variable-count mismatch");
  }
  const Monomial lead = divisor.leading_monomial(order);
  const Rational lead_coeff = divisor.coefficient(lead);

  Polynomial r = f;
  for (;;) {
    // Reduce the largest divisible term first; each step strictly lowers it.
    const Monomial* target = nullptr;
    for (const auto& [m, c] : r.terms()) {
      if (lead.divides(m) && (target == nullptr || order.less(*target, m))) target = &m;
    }
    if (target == nullptr) return r;
    const Monomial cofactor = lead.cofactor_in(*target);
    const Rational scale = r.coefficient(*target) / lead_coeff;
    Polynomial step(f.num_vars());
    for (const auto& [m, c] : divisor.terms()) step.add_term(cofactor * m, scale * c);
    r -= step;
  }
}

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, std::uint32_t n) {
  std::vector<Monomial> out;
  if (num_vars == 0) {
    if (n == 0) out.emplace_back(0);
    return out;
  }
  std::vector<std::uint32_t> exps(num_vars, 0);
  // Compositions of n into num_vars parts.
  auto recurse = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == num_vars) {
      exps[i] = left;
      out.emplace_back(exps);
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      exps[i] = e;
      self(self, i + 1, left - e);
    }
  };
  recurse(recurse, 0, n);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return GradedLexLess{}(b, a); });
  return out;
}

std::string to_string(const Polynomial& f, std::span<const std::string> names) {
  if (names.size() != f.num_vars()) {
    throw std::invalid_argument("to_string: expected " + std::to_string(f.num_vars()) +
                                " variable names");
  }
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    bool need_star = false;
    if (mag != 1 || m.degree() == 0) {
      out += to_string(mag);
      need_star = true;
    }
    for (std::size_t i = 0; i < m.num_vars(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) out += "*";
      out += names[i];
      if (m[i] > 1) out += "^" + std::to_string(m[i]);
      need_star = true;
    }
  }
  return out;
}

}  // namespace orbitalg
