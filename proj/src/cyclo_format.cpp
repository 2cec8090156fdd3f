// Coordinate grammar:
//   expression := [sign] term (('+'|'-') term)*
//   term       := rational | rational '*' monomial | monomial
//   monomial   := 'z' | 'z^' integer
//   rational   := integer | integer '/' positive-integer

#include <cctype>

#include "csg/cyclofield.hpp"
#include "csg/errors.hpp"

namespace csg {

std::string to_string(const CycloElement& a, int as_order) {
  const CycloElement value = as_order > 0 ? a.embed(as_order) : a;
  std::string out;
  const auto& coeffs = value.coeffs();
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const Rational& c = coeffs[j];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational magnitude = abs(c);
    std::string term;
    if (j == 0) {
      term = magnitude.get_str();
    } else {
      const std::string monomial = j == 1 ? "z" : "z^" + std::to_string(j);
      term = magnitude == 1 ? monomial : magnitude.get_str() + "*" + monomial;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += (negative ? "-" : "+") + term;
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, int order, int line, int column)
      : text_(text), order_(order), line_(line), column_(column) {}

  CycloElement parse() {
    std::vector<Rational> coeffs(order_, 0);
    skip_space();
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    parse_term(sign, coeffs);
    while (true) {
      skip_space();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      parse_term(c == '-' ? -1 : 1, coeffs);
    }
    // coefficients of z^0 .. z^(N-1); the constructor reduces modulo Phi_N
    return CycloElement(order_, std::move(coeffs));
  }

 private:
  void parse_term(int sign, std::vector<Rational>& coeffs) {
    skip_space();
    Rational value(sign);
    long exponent = 0;
    if (peek() == 'z') {
      exponent = parse_monomial();
    } else {
      value *= parse_rational();
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
        if (peek() != 'z') fail("expected 'z' after '*'");
        exponent = parse_monomial();
      }
    }
    coeffs[exponent] += value;
  }

  long parse_monomial() {
    const std::size_t start = pos_;
    ++pos_;  // 'z'
    skip_space();
    if (peek() != '^') return check_exponent(1, start);
    ++pos_;
    skip_space();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    const Integer digits = parse_digits("exponent");
    if (!digits.fits_slong_p()) fail("exponent too large", start);
    const long e = digits.get_si();
    return check_exponent(negative ? -e : e, start);
  }

  long check_exponent(long e, std::size_t at) {
    if (e < 0 || e >= order_) {
      fail("coordinate not in stated field: exponent " + std::to_string(e) + " outside [0, " +
               std::to_string(order_) + ")",
           at);
    }
    return e;
  }

  Rational parse_rational() {
    const Integer num = parse_digits("number");
    skip_space();
    if (peek() != '/') return Rational(num);
    ++pos_;
    skip_space();
    const std::size_t at = pos_;
    const Integer den = parse_digits("denominator");
    if (den == 0) fail("zero denominator", at);
    Rational out(num, den);
    out.canonicalize();
    return out;
  }

  Integer parse_digits(const char* what) {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail(std::string("expected ") + what);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& message) { fail(message, pos_); }
  [[noreturn]] void fail(const std::string& message, std::size_t at) {
    throw ParseError(message, line_, column_ + static_cast<int>(at));
  }

  std::string_view text_;
  int order_;
  int line_;
  int column_;
  std::size_t pos_ = 0;
};

}  // namespace

CycloElement parse_cyclo(std::string_view text, int order, int line, int column) {
  if (order < 1) throw PreconditionError("parse_cyclo: order must be positive");
  return ExpressionParser(text, order, line, column).parse();
}

}  // namespace csg
