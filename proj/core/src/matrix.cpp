#include "orbitalg/matrix.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace orbitalg {

namespace {

using IntRow = std::vector<Integer>;

// Multiplies a rational row by the lcm of its denominators.
IntRow clear_denominators(std::span<const Rational> v) {
  Integer scale = 1;
  for (const auto& x : v) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
  }
  IntRow out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    out[j] = scale / v[j].get_den() * v[j].get_num();
  }
  return out;
}

void make_primitive(IntRow& v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0) return;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

std::vector<IntRow> integer_rows(const RationalMatrix& m) {
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(clear_denominators(m.row(r)));
  return rows;
}

struct EchelonResult {
  std::vector<std::size_t> pivots;  // pivot column of rows [0, rank)
  int sign = 1;                     // parity of the row swaps
};

// Bareiss elimination to row echelon form, in place. Every division is exact:
// after step k each entry below the pivot rows is a (k+1)-minor of the input.
EchelonResult bareiss_echelon(std::vector<IntRow>& m, std::size_t cols) {
  EchelonResult result;
  Integer prev = 1;
  Integer t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      result.sign = -result.sign;
    }
    const Integer& piv = m[r][c];
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      IntRow& row = m[i];
      const Integer lead = row[c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = piv * row[j];
        t -= lead * m[r][j];
        mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      row[c] = 0;
    }
    prev = piv;
    result.pivots.push_back(c);
    ++r;
  }
  return result;
}

// Reduced row echelon form over Q of an integer echelon matrix.
std::vector<std::vector<Rational>> reduced_echelon(const std::vector<IntRow>& m,
                                                   const std::vector<std::size_t>& pivots,
                                                   std::size_t cols) {
  const std::size_t rk = pivots.size();
  std::vector<std::vector<Rational>> rref(rk, std::vector<Rational>(cols));
  for (std::size_t r = 0; r < rk; ++r) {
    const Integer& piv = m[r][pivots[r]];
    for (std::size_t j = 0; j < cols; ++j) {
      rref[r][j] = Rational(m[r][j], piv);
      rref[r][j].canonicalize();
    }
  }
  for (std::size_t r = rk; r-- > 0;) {
    const std::size_t pc = pivots[r];
    for (std::size_t above = 0; above < r; ++above) {
      const Rational factor = rref[above][pc];
      if (factor == 0) continue;
      for (std::size_t j = pc; j < cols; ++j) rref[above][j] -= factor * rref[r][j];
    }
  }
  return rref;
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void RationalMatrix::append_row(std::span<const Rational> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) {
    throw std::invalid_argument("row length " + std::to_string(values.size()) +
                                " does not match column count " + std::to_string(cols_));
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<Rational> RationalMatrix::apply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix product");
  std::vector<Rational> y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0) y[r] += (*this)(r, c) * x[c];
  return y;
}

std::size_t rank(const RationalMatrix& m) {
  auto rows = integer_rows(m);
  return bareiss_echelon(rows, m.cols()).pivots.size();
}

bool in_span(std::span<const Rational> v, const RationalMatrix& basis) {
  if (v.size() != basis.cols()) {
    throw std::invalid_argument("in_span: vector length " + std::to_string(v.size()) +
                                " != basis column count " + std::to_string(basis.cols()));
  }
  auto rows = integer_rows(basis);
  const std::size_t before = bareiss_echelon(rows, basis.cols()).pivots.size();
  rows.resize(before);
  rows.push_back(clear_denominators(v));
  return bareiss_echelon(rows, basis.cols()).pivots.size() == before;
}

std::optional<std::vector<Rational>> solve_linear(const RationalMatrix& a,
                                                  std::span<const Rational> b) {
  if (b.size() != a.rows()) {
    throw std::invalid_argument("solve_linear: right-hand side length " +
                                std::to_string(b.size()) + " != row count " +
                                std::to_string(a.rows()));
  }
  const std::size_t n = a.cols();
  std::vector<IntRow> aug;
  aug.reserve(a.rows());
  std::vector<Rational> scratch(n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) scratch[c] = a(r, c);
    scratch[n] = b[r];
    aug.push_back(clear_denominators(scratch));
  }
  const auto ech = bareiss_echelon(aug, n + 1);
  if (!ech.pivots.empty() && ech.pivots.back() == n) return std::nullopt;

  std::vector<Rational> x(n);
  for (std::size_t r = ech.pivots.size(); r-- > 0;) {
    const std::size_t pc = ech.pivots[r];
    Rational acc(aug[r][n]);
    for (std::size_t j = pc + 1; j < n; ++j) {
      if (aug[r][j] != 0 && x[j] != 0) acc -= Rational(aug[r][j]) * x[j];
    }
    x[pc] = acc / Rational(aug[r][pc]);
  }
  return x;
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Row scaling by the lcm of denominators multiplies det by that factor.
  Rational scale = 1;
  std::vector<IntRow> rows;
  rows.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    Integer l = 1;
    for (const auto& x : m.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    scale *= Rational(l);
    rows.push_back(clear_denominators(m.row(r)));
  }
  const auto ech = bareiss_echelon(rows, n);
  if (ech.pivots.size() < n) return 0;
  Rational det(rows[n - 1][n - 1]);
  if (ech.sign < 0) det = -det;
  return det / scale;
}

RationalMatrix nullspace(const RationalMatrix& m) {
  const std::size_t n = m.cols();
  auto rows = integer_rows(m);
  const auto ech = bareiss_echelon(rows, n);
  const auto rref = reduced_echelon(rows, ech.pivots, n);

  std::vector<bool> is_pivot(n, false);
  for (auto p : ech.pivots) is_pivot[p] = true;

  RationalMatrix kernel(0, n);
  std::vector<Rational> v(n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::fill(v.begin(), v.end(), Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -rref[r][f];
    kernel.append_row(v);
  }
  return kernel;
}

std::vector<Integer> IncrementalSpan::reduce(std::span<const Rational> v) const {
  if (v.size() != cols_) {
    throw std::invalid_argument("IncrementalSpan: vector length " + std::to_string(v.size()) +
                                " != " + std::to_string(cols_));
  }
  IntRow w = clear_denominators(v);
  Integer t;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (w[p] == 0) continue;
    const IntRow& row = rows_[k];
    const Integer lead = w[p];
    const Integer& piv = row[p];
    for (std::size_t j = 0; j < cols_; ++j) {
      if (row[j] == 0) {
        if (w[j] != 0) w[j] *= piv;
        continue;
      }
      t = piv * w[j];
      t -= lead * row[j];
      w[j] = t;
    }
    make_primitive(w);
  }
  return w;
}

std::optional<std::size_t> IncrementalSpan::insert(std::span<const Rational> v) {
  IntRow w = reduce(v);
  std::size_t p = 0;
  while (p < cols_ && w[p] == 0) ++p;
  if (p == cols_) return std::nullopt;
  if (w[p] < 0)
    for (auto& x : w) x = -x;
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return rows_.size() - 1;
}

bool IncrementalSpan::contains(std::span<const Rational> v) const {
  const IntRow w = reduce(v);
  for (const auto& x : w)
    if (x != 0) return false;
  return true;
}

std::vector<Rational> IncrementalSpan::row(std::size_t index) const {
  std::vector<Rational> out;
  out.reserve(cols_);
  for (const auto& x : rows_[index]) out.emplace_back(x);
  return out;
}

RationalMatrix IncrementalSpan::basis() const {
  RationalMatrix m(0, cols_);
  for (std::size_t k = 0; k < rows_.size(); ++k) m.append_row(row(k));
  return m;
}

}  // namespace orbitalg
