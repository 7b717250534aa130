#include "arfc/io/poly_io.hpp"

#include <cctype>
#include <limits>

#include "arfc/errors.hpp"

namespace arfc::io {

namespace {

class Parser {
 public:
  Parser(std::string_view src, std::string_view var) : src_(src), var_(var) {}

  Polynomial run() {
    std::vector<Term> terms;
    skip();
    bool negative = false;
    if (peek() == '-') {
      ++pos_;
      negative = true;
    }
    for (;;) {
      Term t = term();
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip();
      if (at_end()) break;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        continue;
      }
      fail("expected '+', '-' or end of expression");
    }
    return Polynomial(std::move(terms));
  }

 private:
  Term term() {
    skip();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Rational c = coeff();
      skip();
      if (peek() == '*') {
        ++pos_;
        return {atom(), c};
      }
      return {0, c};
    }
    return {atom(), 1};
  }

  Rational coeff() {
    mpz_class num(digits());
    skip();
    if (peek() == '/') {
      ++pos_;
      skip();
      const std::size_t at = pos_;
      mpz_class den(digits());
      if (den == 0) fail_at(at, "zero denominator");
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  Exponent atom() {
    skip();
    const std::size_t start = pos_;
    if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) fail("expected a variable");
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    const std::string_view name = src_.substr(start, pos_ - start);
    if (name != var_) {
      auto [line, col] = location(start);
      throw Error(ErrorCode::WrongVariable, "line " + std::to_string(line) + ", column " + std::to_string(col) +
                                                ": found '" + std::string(name) + "', expected '" +
                                                std::string(var_) + "'");
    }
    skip();
    if (peek() != '^') return 1;
    ++pos_;
    skip();
    const std::size_t at = pos_;
    mpz_class e(digits());
    if (e > std::numeric_limits<Exponent>::max() / 4) fail_at(at, "exponent too large");
    return static_cast<Exponent>(e.get_ui());
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(src_.substr(start, pos_ - start));
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }

  std::pair<std::size_t, std::size_t> location(std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    auto [line, col] = location(at);
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
  }

  std::string_view src_;
  std::string_view var_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view src, std::string_view var) { return Parser(src, var).run(); }

std::string serialize_poly(const Polynomial& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool neg = sgn(t.coeff) < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const Rational a = abs(t.coeff);
    if (t.exp == 0) {
      out += a.get_str();
      continue;
    }
    if (a != 1) out += a.get_str() + "*";
    out += var;
    if (t.exp != 1) out += "^" + std::to_string(t.exp);
  }
  return out;
}

std::string serialize_fraction(const SeriesFraction& f, std::string_view var) {
  if (f.is_polynomial()) return serialize_poly(f.num(), var);
  return "(" + serialize_poly(f.num(), var) + ")/(" + serialize_poly(f.den(), var) + ")";
}

}  // namespace arfc::io
