#include "fatpoint/text.hpp"

#include <cctype>

namespace fatpoint {

namespace {

// Recursive-descent parser over the ring k[t]/(t^N)[y1..yn].
// Grammar: expr := term (('+'|'-') term)*
//          term := factor ('*' factor)*
//          factor := atom ('^' uint)?
//          atom := uint ('/' uint)? | 't' | 'y<k>' | 'yp' | '(' expr ')' | '-' factor
struct Parser {
  const std::string& s;
  std::size_t pos = 0;
  FieldSpec field;
  int nvars;
  std::size_t prec;
  bool allow_aux;

  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos && i < s.size(); ++i) {
      if (s[i] == '\n') { ++line; col = 1; } else ++col;
    }
    throw error(errc::parse_error,
                what + " at line " + std::to_string(line) + ", column " + std::to_string(col));
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  long long parse_uint() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected a number");
    long long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > (1ll << 50)) fail("numeric literal too large");
      ++pos;
    }
    return v;
  }

  MultiPoly parse_atom() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      MultiPoly e = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (c == '-') {
      ++pos;
      return -parse_factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long num = parse_uint();
      if (eat('/')) {
        long long den = parse_uint();
        return MultiPoly::from_series(
            TruncatedSeries::constant(field, FieldElement::fraction(field, num, den), prec), nvars);
      }
      return MultiPoly::from_int(field, num, nvars, prec);
    }
    if (c == 't') {
      ++pos;
      return MultiPoly::from_series(TruncatedSeries::t(field, prec), nvars);
    }
    if (c == 'y') {
      ++pos;
      if (pos < s.size() && s[pos] == 'p') {
        ++pos;
        if (!allow_aux) fail("the auxiliary variable yp is not allowed here");
        return MultiPoly::variable(field, nvars - 1, nvars, prec);
      }
      if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
        fail("expected a variable index after 'y'");
      long long k = parse_uint();
      int limit = allow_aux ? nvars - 1 : nvars;
      if (k < 1 || k > limit) fail("variable y" + std::to_string(k) + " out of range");
      return MultiPoly::variable(field, static_cast<int>(k) - 1, nvars, prec);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  MultiPoly parse_factor() {
    MultiPoly a = parse_atom();
    if (eat('^')) {
      long long e = parse_uint();
      MultiPoly r = MultiPoly::from_int(field, 1, nvars, prec);
      for (long long i = 0; i < e; ++i) r = r * a;
      return r;
    }
    return a;
  }

  MultiPoly parse_term() {
    MultiPoly a = parse_factor();
    while (eat('*')) a = a * parse_factor();
    return a;
  }

  MultiPoly parse_expr() {
    MultiPoly a = parse_term();
    for (;;) {
      if (eat('+'))
        a = a + parse_term();
      else if (eat('-'))
        a = a - parse_term();
      else
        return a;
    }
  }

  MultiPoly run() {
    MultiPoly e = parse_expr();
    skip_ws();
    if (pos != s.size()) fail("trailing input");
    return e;
  }
};

} // namespace

TruncatedSeries parse_series(const std::string& text, const FieldSpec& f, std::size_t precision) {
  Parser p{text, 0, f, 0, precision, false};
  MultiPoly e = p.run();
  return e.constant_term();
}

MultiPoly parse_poly(const std::string& text, const FieldSpec& f, int nvars, std::size_t precision,
                     bool allow_aux) {
  Parser p{text, 0, f, nvars, precision, allow_aux};
  return p.run();
}

} // namespace fatpoint
