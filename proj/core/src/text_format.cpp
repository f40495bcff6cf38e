#include "tropicurve/text_format.hpp"

#include <cctype>

#include "tropicurve/errors.hpp"

namespace tropicurve {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  TropicalPolynomial parse() {
    std::vector<Term> terms;
    terms.push_back(term());
    while (skip_space(), peek() == '+') {
      ++pos_;
      terms.push_back(term());
    }
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return TropicalPolynomial(terms);
  }

 private:
  Term term() {
    Term t{{0, 0}, Rational(0)};
    factor(t);
    while (skip_space(), peek() == '*') {
      ++pos_;
      factor(t);
    }
    return t;
  }

  void factor(Term& t) {
    skip_space();
    const char c = peek();
    if (c == 'x' || c == 'y') {
      ++pos_;
      std::int64_t power = 1;
      if (skip_space(), peek() == '^') {
        ++pos_;
        power = integer();
      }
      (c == 'x' ? t.exponent.x : t.exponent.y) += power;
      return;
    }
    if (c == '(') {
      ++pos_;
      t.coefficient += number();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return;
    }
    t.coefficient += number();
  }

  Rational number() {
    skip_space();
    const auto start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      const bool exponent_sign = (c == '-' || c == '+') && pos_ > start &&
                                 (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E');
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '/' || c == 'e' || c == 'E' ||
          exponent_sign) {
        ++pos_;
      } else {
        break;
      }
    }
    if (pos_ == start) fail("expected a coefficient, x or y");
    return parse_rational(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip_space();
    bool paren = false;
    if (peek() == '(') {
      paren = true;
      ++pos_;
      skip_space();
    }
    const auto start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const auto digits = text_.substr(start, pos_ - start);
    if (digits.empty() || digits == "-" || digits == "+") fail("expected an integer exponent");
    const auto value = std::stoll(std::string(digits));
    if (paren) {
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    }
    return value;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kParseError, "polynomial text at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

TropicalPolynomial parse_polynomial_text(std::string_view text) { return Parser(text).parse(); }

std::string to_text(const TropicalPolynomial& f) {
  std::string out;
  for (const auto& [e, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    out += sgn(c) < 0 ? "(" + to_string(c) + ")" : to_string(c);
    if (e.x != 0) out += " * x^" + std::to_string(e.x);
    if (e.y != 0) out += " * y^" + std::to_string(e.y);
  }
  return out;
}

}  // namespace tropicurve
