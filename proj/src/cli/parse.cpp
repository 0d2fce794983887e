#include "cl12/cli/parse.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "json.hpp"

#include "cl12/inverse.hpp"

namespace cl12::cli {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0'; }
  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::size_t pos() const { return pos_; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  bool at_number() {
    skip_ws();
    return is_digit(peek()) || (peek() == '.' && is_digit(peek(1)));
  }

  bool at_basis() {
    skip_ws();
    return peek() == 'e' && is_digit(peek(1)) && !is_digit(peek(2)) && !std::isalpha(static_cast<unsigned char>(peek(2)));
  }

  double number() {
    skip_ws();
    const std::size_t start = pos_;
    while (is_digit(peek())) ++pos_;
    if (peek() == '.') {
      ++pos_;
      while (is_digit(peek())) ++pos_;
    }
    const bool signed_exp = peek() == 'e' && (peek(1) == '+' || peek(1) == '-') && is_digit(peek(2));
    const bool upper_exp = peek() == 'E' &&
                           (is_digit(peek(1)) || ((peek(1) == '+' || peek(1) == '-') && is_digit(peek(2))));
    if (signed_exp || upper_exp) {
      pos_ += (is_digit(peek(1)) ? 1 : 2);
      while (is_digit(peek())) ++pos_;
    }
    const std::string token(s_.substr(start, pos_ - start));
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (token.empty() || end != token.c_str() + token.size()) throw ParseError("malformed number", start);
    if (!std::isfinite(v)) throw ParseError("number out of range", start);
    return v;
  }

  Multivector basis(double coeff) {
    skip_ws();
    const std::size_t at = pos_;
    ++pos_;  // 'e'
    const int t = peek() - '0';
    if (t < 0 || t > 7) throw ParseError("basis index must be 0..7", at);
    ++pos_;
    return Multivector::basis(BasisIndex(t), coeff);
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

// coeff | [coeff] e<digit>
Multivector literal_term(Cursor& c) {
  if (c.at_number()) {
    const double v = c.number();
    if (c.at_basis()) return c.basis(v);
    return Multivector::scalar(v);
  }
  if (c.at_basis()) return c.basis(1.0);
  c.fail("expected a number or basis element e0..e7");
}

Multivector parse_json_array(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!j.is_array() || j.size() != 8) throw ParseError("JSON literal must be an array of 8 numbers", 0);
  Multivector::Coeffs c;
  for (std::size_t t = 0; t < 8; ++t) {
    if (!j[t].is_number()) throw ParseError("JSON literal must be an array of 8 numbers", 0);
    c[t] = j[t].get<double>();
  }
  return Multivector(c);
}

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, double tol) : c_(text), tol_(tol) {}

  Multivector parse() {
    Multivector v = sum();
    if (!c_.at_end()) c_.fail("unexpected trailing input");
    return v;
  }

 private:
  Multivector sum() {
    Multivector v = product();
    for (;;) {
      if (c_.accept('+'))
        v = v + product();
      else if (c_.accept('-'))
        v = v - product();
      else
        return v;
    }
  }

  Multivector product() {
    Multivector v = unary();
    while (c_.accept('*')) v = v * unary();
    return v;
  }

  Multivector unary() {
    if (c_.accept('-')) return -unary();
    if (c_.accept('+')) return unary();
    return primary();
  }

  Multivector primary() {
    if (c_.accept('(')) {
      Multivector v = sum();
      c_.expect(')');
      return v;
    }
    if (c_.at_number() || c_.at_basis()) return literal_term(c_);

    const std::size_t at = (c_.skip_ws(), c_.pos());
    const std::string name = c_.identifier();
    if (name.empty()) c_.fail("expected an operand");
    c_.expect('(');
    const Multivector arg = sum();
    c_.expect(')');
    if (name == "conj") return conjugate(arg);
    if (name == "prime") return prime(arg);
    if (name == "cre") return cre(arg);
    if (name == "cim") return cim(arg);
    if (name == "inv") return inverse(arg, tol_);
    if (name == "pinv") return mp_inverse(arg, tol_).pinv;
    throw ParseError("unknown function '" + name + "'", at);
  }

  Cursor c_;
  double tol_;
};

}  // namespace

Multivector parse_literal(std::string_view text) {
  Cursor c(text);
  if (c.at_end()) c.fail("empty literal");
  if (c.peek() == '[') return parse_json_array(text);

  Multivector acc;
  bool negative = false;
  if (c.accept('-'))
    negative = true;
  else
    c.accept('+');
  for (;;) {
    const Multivector term = literal_term(c);
    acc = negative ? acc - term : acc + term;
    if (c.accept('+'))
      negative = false;
    else if (c.accept('-'))
      negative = true;
    else if (c.at_end())
      return acc;
    else
      c.fail("expected '+' or '-'");
  }
}

Multivector evaluate_expression(std::string_view text, double tol) {
  ExpressionParser p(text, tol);
  return p.parse();
}

}  // namespace cl12::cli
