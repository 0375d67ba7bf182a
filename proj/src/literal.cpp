#include "cstar/literal.hpp"

#include <cctype>
#include <optional>

namespace cstar {

std::string ratLit(const Rational& r) {
  std::string s = num(r).str();
  if (den(r) != 1) s += "/" + den(r).str();
  return s;
}

std::string quadLit(const QuadReal& x) {
  if (x.isRational()) return ratLit(x.rationalPart());
  const Rational& q = x.quadPart();
  std::string s = ratLit(x.rationalPart());
  s += (q < 0) ? "-" : "+";
  s += ratLit(q < 0 ? Rational(-q) : q);
  s += "*sqrt(" + std::to_string(x.fieldD()) + ")";
  return s;
}

namespace {

// leading sign of a QuadReal as printed (rational part first)
int leadSign(const QuadReal& x) {
  if (x.rationalPart() != 0) return sgn(x.rationalPart());
  return sgn(x.quadPart());
}

}  // namespace

std::string cplxLit(const QuadComplex& z) {
  if (z.isReal()) return quadLit(z.re);
  bool neg = leadSign(z.im) < 0;
  return quadLit(z.re) + (neg ? "-" : "+") + quadLit(neg ? -z.im : z.im) + "*i";
}

namespace {

struct Lexer {
  std::string s;  // input with whitespace stripped
  std::size_t pos = 0;

  explicit Lexer(std::string_view text) {
    s.reserve(text.size());
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }

  bool done() const { return pos == s.size(); }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  bool eat(std::string_view lit) {
    if (s.compare(pos, lit.size(), lit) != 0) return false;
    pos += lit.size();
    return true;
  }

  std::optional<Int> integer() {
    std::size_t start = pos;
    bool neg = eat('-');
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(s[pos++]);
    if (digits.empty()) {
      pos = start;
      return std::nullopt;
    }
    Int v(digits);
    return neg ? Int(-v) : v;
  }

  std::optional<Rational> rational() {
    std::size_t start = pos;
    auto n = integer();
    if (!n) return std::nullopt;
    if (eat('/')) {
      auto d = integer();
      if (!d || *d <= 0) {
        pos = start;
        return std::nullopt;
      }
      return Rational(*n, *d);
    }
    return Rational(*n);
  }

  std::optional<QuadReal> quad(const FieldContext& ctx) {
    auto p = rational();
    if (!p) return std::nullopt;
    std::size_t afterRat = pos;
    char sep = peek();
    if (sep == '+' || sep == '-') {
      ++pos;
      auto q = rational();
      if (q && eat("*sqrt(")) {
        auto d = integer();
        if (d && *d > 0 && eat(')')) {
          std::uint64_t dv = d->convert_to<std::uint64_t>();
          if (!isSquarefree(dv) || dv < 2)
            fail(Err::NonSquarefreeD, "sqrt(" + d->str() + ") in literal");
          if (ctx.trivial())
            fail(Err::FieldMismatch, "sqrt(" + d->str() + ") literal with no field declared");
          if (dv != ctx.d)
            fail(Err::FieldMismatch,
                 "sqrt(" + d->str() + ") literal in field d=" + std::to_string(ctx.d));
          Rational coef = (sep == '-') ? Rational(-*q) : *q;
          return QuadReal(*p, coef, dv);
        }
      }
      pos = afterRat;  // not a sqrt tail; leave the separator for the caller
    }
    return QuadReal(*p);
  }
};

QuadReal quadFull(std::string_view text, const FieldContext& ctx) {
  Lexer lx(text);
  auto v = lx.quad(ctx);
  if (!v || !lx.done()) fail(Err::ParseError, "bad number literal '" + std::string(text) + "'");
  return *v;
}

bool quadTry(std::string_view text, const FieldContext& ctx, QuadReal& out) {
  Lexer lx(text);
  auto v = lx.quad(ctx);
  if (!v || !lx.done()) return false;
  out = *v;
  return true;
}

}  // namespace

Rational parseRatLit(std::string_view text) {
  Lexer lx(text);
  auto v = lx.rational();
  if (!v || !lx.done()) fail(Err::ParseError, "bad rational literal '" + std::string(text) + "'");
  return *v;
}

QuadReal parseQuadLit(std::string_view text, const FieldContext& ctx) {
  return quadFull(text, ctx);
}

QuadComplex parseCplxLit(std::string_view text, const FieldContext& ctx) {
  Lexer stripped(text);
  const std::string& s = stripped.s;
  // pure real
  {
    QuadReal re;
    if (quadTry(s, ctx, re)) return QuadComplex(re);
  }
  // QUAD ("+"|"-") QUAD "*i" — find the separator between real and imaginary
  // parts; the grammar admits at most one split where both sides parse.
  if (s.size() >= 2 && s.compare(s.size() - 2, 2, "*i") == 0) {
    std::string body = s.substr(0, s.size() - 2);
    for (std::size_t i = 1; i < body.size(); ++i) {
      if (body[i] != '+' && body[i] != '-') continue;
      QuadReal re, im;
      if (!quadTry(body.substr(0, i), ctx, re)) continue;
      if (!quadTry(body.substr(i + 1), ctx, im)) continue;
      return QuadComplex(re, body[i] == '-' ? -im : im);
    }
  }
  fail(Err::ParseError, "bad complex literal '" + std::string(text) + "'");
}

}  // namespace cstar
