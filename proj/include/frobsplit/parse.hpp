#ifndef FROBSPLIT_PARSE_HPP
#define FROBSPLIT_PARSE_HPP

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobsplit/error.hpp"
#include "frobsplit/polynomial.hpp"
#include "frobsplit/ring.hpp"

namespace frobsplit {

namespace detail {

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct PolyLexer {
  const std::string& s;
  size_t i = 0;
  SourcePos pos{1, 1};

  enum class Kind { Int, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };
  struct Token {
    Kind kind;
    std::string text;
    SourcePos pos;
  };

  explicit PolyLexer(const std::string& text) : s(text) { advance_token(); }

  Token cur;

  void bump(char c) {
    ++i;
    if (c == '\n') {
      ++pos.line;
      pos.col = 1;
    } else {
      ++pos.col;
    }
  }

  void advance_token() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) bump(s[i]);
    SourcePos at = pos;
    if (i >= s.size()) {
      cur = Token{Kind::End, "", at};
      return;
    }
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string d;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        d += s[i];
        bump(s[i]);
      }
      cur = Token{Kind::Int, std::move(d), at};
      return;
    }
    if (ident_start(c)) {
      std::string d;
      while (i < s.size() && ident_char(s[i])) {
        d += s[i];
        bump(s[i]);
      }
      cur = Token{Kind::Ident, std::move(d), at};
      return;
    }
    Kind k;
    switch (c) {
      case '+': k = Kind::Plus; break;
      case '-': k = Kind::Minus; break;
      case '*': k = Kind::Star; break;
      case '^': k = Kind::Caret; break;
      case '(': k = Kind::LParen; break;
      case ')': k = Kind::RParen; break;
      default:
        fail_at(Err::ParseError, at, std::string("unexpected character '") + c + "'");
    }
    bump(c);
    cur = Token{k, std::string(1, c), at};
  }
};

struct PolyParser {
  PolyLexer lex;
  Ring ring;
  int depth = 0;
  static constexpr int kMaxDepth = 200;

  PolyParser(const std::string& text, Ring r) : lex(text), ring(std::move(r)) {}

  using Kind = PolyLexer::Kind;

  Polynomial parse() {
    Polynomial f = expr();
    if (lex.cur.kind != Kind::End)
      fail_at(Err::ParseError, lex.cur.pos, "trailing input '" + lex.cur.text + "'");
    return f;
  }

  Polynomial expr() {
    if (++depth > kMaxDepth) fail_at(Err::ParseError, lex.cur.pos, "expression nested too deeply");
    bool neg = false;
    if (lex.cur.kind == Kind::Minus) {
      neg = true;
      lex.advance_token();
    }
    Polynomial acc = term();
    if (neg) acc = poly_neg(acc);
    while (lex.cur.kind == Kind::Plus || lex.cur.kind == Kind::Minus) {
      bool minus = lex.cur.kind == Kind::Minus;
      lex.advance_token();
      Polynomial rhs = term();
      acc = minus ? poly_sub(acc, rhs) : poly_add(acc, rhs);
    }
    --depth;
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (lex.cur.kind == Kind::Star) {
      lex.advance_token();
      acc = poly_mul(acc, factor());
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (lex.cur.kind == Kind::Caret) {
      lex.advance_token();
      if (lex.cur.kind == Kind::Minus) fail_at(Err::BadExponent, lex.cur.pos, "negative exponent");
      if (lex.cur.kind != Kind::Int)
        fail_at(Err::ParseError, lex.cur.pos, "exponent must be a bare integer literal");
      uint64_t k = 0;
      for (char c : lex.cur.text) {
        k = k * 10 + static_cast<uint64_t>(c - '0');
        if (k > INT32_MAX) fail_at(Err::Overflow, lex.cur.pos, "exponent too large");
      }
      lex.advance_token();
      return poly_pow(base, static_cast<int64_t>(k));
    }
    return base;
  }

  Polynomial atom() {
    auto tok = lex.cur;
    switch (tok.kind) {
      case Kind::Int: {
        uint64_t v = 0;
        for (char c : tok.text) v = (v * 10 + static_cast<uint64_t>(c - '0')) % ring->p;
        lex.advance_token();
        return poly_const(ring, static_cast<int64_t>(v));
      }
      case Kind::Ident: {
        int idx = ring->var_index(tok.text);
        if (idx < 0) fail_at(Err::UnknownVar, tok.pos, "'" + tok.text + "'");
        lex.advance_token();
        return poly_var(ring, idx);
      }
      case Kind::LParen: {
        lex.advance_token();
        Polynomial inner = expr();
        if (lex.cur.kind != Kind::RParen) fail_at(Err::ParseError, lex.cur.pos, "expected ')'");
        lex.advance_token();
        return inner;
      }
      default:
        fail_at(Err::ParseError, tok.pos,
                tok.kind == Kind::End ? "unexpected end of input"
                                      : "unexpected token '" + tok.text + "'");
    }
  }
};

inline std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace detail

inline Polynomial parse_poly(const std::string& text, const Ring& ring) {
  detail::PolyParser parser(text, ring);
  return parser.parse();
}

// Three key=value lines in any order: p, vars (whitespace-separated names), order.
inline Ring parse_ring_spec(const std::string& text) {
  bool have_p = false, have_vars = false, have_order = false;
  uint64_t p = 0;
  SourcePos p_pos;
  std::vector<std::string> vars;
  std::vector<SourcePos> var_pos;
  Order order = Order::grevlex;

  int line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t nl = text.find('\n', start);
    std::string line = text.substr(start, nl == std::string::npos ? nl : nl - start);
    ++line_no;
    size_t next = nl == std::string::npos ? text.size() + 1 : nl + 1;

    if (!detail::trim(line).empty()) {
      size_t eq = line.find('=');
      if (eq == std::string::npos)
        fail_at(Err::ParseError, {line_no, 1}, "expected key=value");
      std::string key = detail::trim(line.substr(0, eq));
      std::string val = detail::trim(line.substr(eq + 1));
      int vcol = static_cast<int>(eq) + 2;
      if (key == "p") {
        if (have_p) fail_at(Err::ParseError, {line_no, 1}, "duplicate key 'p'");
        have_p = true;
        p_pos = {line_no, vcol};
        if (val.empty()) fail_at(Err::ParseError, p_pos, "empty value for p");
        for (char c : val) {
          if (!std::isdigit(static_cast<unsigned char>(c)))
            fail_at(Err::ParseError, p_pos, "p must be a positive integer");
          p = p * 10 + static_cast<uint64_t>(c - '0');
          if (p > (1u << 20)) fail_at(Err::NotPrime, p_pos, "p out of range");
        }
      } else if (key == "vars") {
        if (have_vars) fail_at(Err::ParseError, {line_no, 1}, "duplicate key 'vars'");
        have_vars = true;
        size_t i = 0;
        while (i < val.size()) {
          while (i < val.size() && std::isspace(static_cast<unsigned char>(val[i]))) ++i;
          if (i >= val.size()) break;
          SourcePos at{line_no, vcol + static_cast<int>(i)};
          if (!detail::ident_start(val[i]))
            fail_at(Err::ParseError, at, "variable names start with a letter");
          std::string name;
          while (i < val.size() && detail::ident_char(val[i])) name += val[i++];
          for (const auto& prev : vars)
            if (prev == name) fail_at(Err::DuplicateVar, at, "'" + name + "'");
          vars.push_back(std::move(name));
          var_pos.push_back(at);
        }
      } else if (key == "order") {
        if (have_order) fail_at(Err::ParseError, {line_no, 1}, "duplicate key 'order'");
        have_order = true;
        if (val == "lex") {
          order = Order::lex;
        } else if (val == "grlex") {
          order = Order::grlex;
        } else if (val == "grevlex") {
          order = Order::grevlex;
        } else {
          fail_at(Err::BadOrder, {line_no, vcol}, "'" + val + "'");
        }
      } else {
        fail_at(Err::ParseError, {line_no, 1}, "unknown key '" + key + "'");
      }
    }
    start = next;
  }
  if (!have_p) fail_at(Err::ParseError, {line_no, 1}, "missing key 'p'");
  if (!have_vars) fail_at(Err::ParseError, {line_no, 1}, "missing key 'vars'");
  if (!have_order) fail_at(Err::ParseError, {line_no, 1}, "missing key 'order'");
  if (p < 2 || p > 65536 || !is_prime_u32(static_cast<uint32_t>(p)))
    fail_at(Err::NotPrime, p_pos, "p = " + std::to_string(p));
  if (vars.empty() || vars.size() > RingSpec::kMaxVars)
    fail_at(Err::TooManyVars, var_pos.empty() ? SourcePos{line_no, 1} : var_pos[0],
            "need 1.." + std::to_string(RingSpec::kMaxVars) + " variables");
  return make_ring(static_cast<uint32_t>(p), std::move(vars), order);
}

// A ring spec plus optional named expressions (f, eps, c), with # comments.
struct ProblemFile {
  Ring ring;
  std::optional<Polynomial> f;
  std::optional<Polynomial> eps;
  std::optional<Polynomial> c;
};

inline ProblemFile parse_problem_file(const std::string& text) {
  // Strip comments and lift the expression lines out, blanking them so the
  // ring-spec pass still reports positions in the original coordinates.
  struct ExprLine {
    std::string key;
    std::string value;
    SourcePos at;  // position of the value
  };
  std::string ring_text;
  std::vector<ExprLine> exprs;
  int line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t nl = text.find('\n', start);
    std::string line = text.substr(start, nl == std::string::npos ? nl : nl - start);
    ++line_no;
    size_t next = nl == std::string::npos ? text.size() + 1 : nl + 1;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    size_t eq = line.find('=');
    bool lifted = false;
    if (eq != std::string::npos) {
      std::string key = detail::trim(line.substr(0, eq));
      if (key == "f" || key == "eps" || key == "c") {
        std::string value = line.substr(eq + 1);
        exprs.push_back(ExprLine{key, value, {line_no, static_cast<int>(eq) + 2}});
        lifted = true;
      }
    }
    ring_text += lifted ? std::string() : line;
    ring_text += '\n';
    start = next;
  }
  ProblemFile pf;
  pf.ring = parse_ring_spec(ring_text);
  for (const auto& ex : exprs) {
    bool dup = (ex.key == "f" && pf.f) || (ex.key == "eps" && pf.eps) || (ex.key == "c" && pf.c);
    if (dup) fail_at(Err::ParseError, {ex.at.line, 1}, "duplicate key '" + ex.key + "'");
    if (detail::trim(ex.value).empty())
      fail_at(Err::ParseError, ex.at, "empty value for " + ex.key);
    Polynomial poly;
    try {
      poly = parse_poly(ex.value, pf.ring);
    } catch (const AlgebraError& err) {
      SourcePos at = ex.at;
      if (err.has_pos()) at.col = ex.at.col + err.pos().col - 1;
      fail_at(err.code(), at, err.msg());
    }
    if (ex.key == "f")
      pf.f = std::move(poly);
    else if (ex.key == "eps")
      pf.eps = std::move(poly);
    else
      pf.c = std::move(poly);
  }
  return pf;
}

inline std::string ring_spec_to_string(const Ring& r) {
  std::string s = "p=" + std::to_string(r->p) + "\nvars=";
  for (size_t i = 0; i < r->vars.size(); ++i) {
    if (i) s += " ";
    s += r->vars[i];
  }
  s += "\norder=";
  s += order_name(r->order);
  s += "\n";
  return s;
}

}  // namespace frobsplit

#endif
