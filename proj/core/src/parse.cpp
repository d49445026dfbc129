#include "orbitalg/parse.hpp"

#include <cctype>
#include <limits>

namespace orbitalg {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, std::span<const std::string> variables)
      : text_(text), vars_(variables) {}

  Polynomial parse() {
    Polynomial result(vars_.size());
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    for (;;) {
      Polynomial t = parse_term();
      if (negate) t = -t;
      result += t;
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') {
        throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
      }
      negate = peek() == '-';
      ++pos_;
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Polynomial parse_term() {
    Rational coeff = 1;
    Monomial mono(vars_.size());
    for (;;) {
      skip_space();
      if (at_end()) throw ParseError("expected coefficient or variable", pos_);
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= parse_coefficient();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        mono = mono * parse_power();
      } else {
        throw ParseError(std::string("expected coefficient or variable, found '") + c + "'", pos_);
      }
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return Polynomial::term(mono, coeff);
  }

  Integer parse_integer() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Rational parse_coefficient() {
    const Integer num = parse_integer();
    skip_space();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_space();
      const std::size_t den_pos = pos_;
      const Integer den = parse_integer();
      if (den == 0) throw ParseError("zero denominator", den_pos);
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    return Rational(num);
  }

  Monomial parse_power() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    std::size_t index = vars_.size();
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == name) {
        index = i;
        break;
      }
    }
    if (index == vars_.size()) {
      throw ParseError("unknown variable '" + std::string(name) + "'", start);
    }
    std::uint32_t power = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t exp_pos = pos_;
      const Integer e = parse_integer();
      if (e > std::numeric_limits<std::uint16_t>::max()) {
        throw ParseError("exponent too large", exp_pos);
      }
      power = static_cast<std::uint32_t>(e.get_ui());
    }
    return Monomial::variable(vars_.size(), index, power);
  }

  std::string_view text_;
  std::span<const std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> variables) {
  return PolynomialParser(text, variables).parse();
}

}  // namespace orbitalg
