#include "koszul/parser.hpp"

#include <cctype>

namespace koszul {

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  const std::vector<std::string>& vars;
  PrimeField f;
  std::size_t nvars;
  unsigned bound;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool peek_is(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }
  bool eat(char c) {
    if (!peek_is(c)) return false;
    ++pos;
    return true;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  std::uint64_t integer() {
    skip_ws();
    const std::size_t start = pos;
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      if (v > (1ull << 40)) fail("integer literal too large");
      ++pos;
    }
    if (pos == start) fail("expected integer");
    return v;
  }

  std::size_t variable() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    const std::string name(text.substr(start, pos - start));
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return i;
    pos = start;
    fail("unknown variable '" + name + "'");
  }

  TruncPoly factor() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of expression");
    const char c = text[pos];
    if (c == '(') {
      ++pos;
      TruncPoly e = expression();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t v = integer();
      return TruncPoly::constant(f, nvars, bound, static_cast<std::uint32_t>(v % f.p()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t vi = variable();
      std::uint64_t e = 1;
      if (eat('^')) e = integer();
      Monomial m(nvars);
      if (e > 0xffff) fail("exponent too large");
      m.exps[vi] = static_cast<std::uint16_t>(e);
      return TruncPoly::from_monomial(f, nvars, bound, m, 1);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  TruncPoly term() {
    TruncPoly r = factor();
    while (eat('*')) r = r * factor();
    return r;
  }

  TruncPoly expression() {
    bool negate = eat('-');
    TruncPoly r = term();
    if (negate) r = -r;
    for (;;) {
      if (eat('+'))
        r = r + term();
      else if (eat('-'))
        r = r - term();
      else
        return r;
    }
  }
};

}  // namespace

TruncPoly parse_poly(std::string_view text, const std::vector<std::string>& vars, PrimeField f,
                     unsigned bound) {
  Parser p{text, 0, vars, f, vars.size(), bound};
  TruncPoly r = p.expression();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return r;
}

}  // namespace koszul
