#include "cyclink/expr.hpp"

#include <cctype>

namespace cyclink {

namespace {

struct Token {
  enum class Kind { Num, Ident, Sym, End } kind = Kind::End;
  std::string text;
  std::size_t pos = 0;
};

[[noreturn]] void fail(std::size_t pos, const std::string& msg) {
  throw Error(ErrorKind::ParseError, "at position " + std::to_string(pos) + ": " + msg);
}

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < s.size()) {
    const unsigned char c = s[k];
    if (std::isspace(c)) {
      ++k;
    } else if (std::isdigit(c)) {
      std::size_t b = k;
      while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
      out.push_back({Token::Kind::Num, s.substr(b, k - b), b});
    } else if (std::isalpha(c) || c == '_') {
      std::size_t b = k;
      while (k < s.size() && (std::isalnum(static_cast<unsigned char>(s[k])) || s[k] == '_')) ++k;
      out.push_back({Token::Kind::Ident, s.substr(b, k - b), b});
    } else if (std::string("+-*/^()").find(static_cast<char>(c)) != std::string::npos) {
      out.push_back({Token::Kind::Sym, std::string(1, static_cast<char>(c)), k});
      ++k;
    } else {
      fail(k, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
  }
  out.push_back({Token::Kind::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ExprPtr parse() {
    ExprPtr e = sum();
    if (peek().kind != Token::Kind::End) fail(peek().pos, "unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  bool is_sym(const char* s) const { return peek().kind == Token::Kind::Sym && peek().text == s; }

  static ExprPtr node(Expr::Op op, std::size_t pos, std::vector<ExprPtr> args) {
    auto e = std::make_shared<Expr>();
    e->op = op;
    e->pos = pos;
    e->args = std::move(args);
    return e;
  }

  // sum := term (('+' | '-') term)*
  ExprPtr sum() {
    ExprPtr lhs = term();
    while (is_sym("+") || is_sym("-")) {
      const Token t = toks_[at_++];
      lhs = node(t.text == "+" ? Expr::Op::Add : Expr::Op::Sub, t.pos, {lhs, term()});
    }
    return lhs;
  }

  // term := unary (('*' | '/' | juxtaposition) unary)*
  ExprPtr term() {
    ExprPtr lhs = unary();
    for (;;) {
      if (is_sym("*") || is_sym("/")) {
        const Token t = toks_[at_++];
        lhs = node(t.text == "*" ? Expr::Op::Mul : Expr::Op::Div, t.pos, {lhs, unary()});
      } else if (peek().kind == Token::Kind::Num || peek().kind == Token::Kind::Ident || is_sym("(")) {
        const std::size_t pos = peek().pos;
        lhs = node(Expr::Op::Mul, pos, {lhs, power()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr unary() {
    if (is_sym("-")) {
      const std::size_t pos = toks_[at_++].pos;
      return node(Expr::Op::Neg, pos, {unary()});
    }
    if (is_sym("+")) {
      ++at_;
      return unary();
    }
    return power();
  }

  // power := atom ('^' ['-'] integer)?
  ExprPtr power() {
    ExprPtr base = atom();
    if (!is_sym("^")) return base;
    const std::size_t pos = toks_[at_++].pos;
    bool neg = false;
    if (is_sym("-")) {
      neg = true;
      ++at_;
    }
    if (peek().kind != Token::Kind::Num) fail(peek().pos, "expected an integer exponent");
    const std::string digits = toks_[at_++].text;
    if (digits.size() > 12) fail(pos, "exponent too large");
    auto e = std::make_shared<Expr>();
    e->op = Expr::Op::Pow;
    e->pos = pos;
    e->exponent = std::stoll(digits) * (neg ? -1 : 1);
    e->args = {base};
    return e;
  }

  ExprPtr atom() {
    const Token t = peek();
    if (t.kind == Token::Kind::Num || t.kind == Token::Kind::Ident) {
      ++at_;
      auto e = std::make_shared<Expr>();
      e->op = t.kind == Token::Kind::Num ? Expr::Op::Num : Expr::Op::Var;
      e->text = t.text;
      e->pos = t.pos;
      return e;
    }
    if (is_sym("(")) {
      ++at_;
      ExprPtr e = sum();
      if (!is_sym(")")) fail(peek().pos, "expected ')'");
      ++at_;
      return e;
    }
    fail(t.pos, t.kind == Token::Kind::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

// integer literal reduced mod p
long long literal(const Expr& e, unsigned p) {
  long long r = 0;
  for (char c : e.text) r = (r * 10 + (c - '0')) % p;
  return r;
}

// Generic evaluation; V supplies num, var, add, sub, mul, div, neg, pow.
template <class V>
auto evaluate(const Expr& e, const V& v) -> decltype(v.num(e)) {
  switch (e.op) {
    case Expr::Op::Num: return v.num(e);
    case Expr::Op::Var: return v.var(e);
    case Expr::Op::Neg: return v.neg(evaluate(*e.args[0], v));
    case Expr::Op::Add: return evaluate(*e.args[0], v) + evaluate(*e.args[1], v);
    case Expr::Op::Sub: return evaluate(*e.args[0], v) - evaluate(*e.args[1], v);
    case Expr::Op::Mul: return v.mul(evaluate(*e.args[0], v), evaluate(*e.args[1], v));
    case Expr::Op::Div: return v.div(evaluate(*e.args[0], v), evaluate(*e.args[1], v), e.pos);
    case Expr::Op::Pow: return v.pow(evaluate(*e.args[0], v), e.exponent, e.pos);
  }
  fail(e.pos, "bad expression");
}

struct FieldValues {
  const FieldTower& F;
  FieldElem num(const Expr& e) const { return F.from_int(literal(e, F.characteristic())); }
  FieldElem var(const Expr& e) const {
    if (!F.has_name(e.text)) fail(e.pos, "unknown generator '" + e.text + "'");
    return F.generator(e.text);
  }
  FieldElem neg(const FieldElem& a) const { return -a; }
  FieldElem mul(const FieldElem& a, const FieldElem& b) const { return a * b; }
  FieldElem div(const FieldElem& a, const FieldElem& b, std::size_t) const { return a / b; }
  FieldElem pow(const FieldElem& a, long long n, std::size_t) const { return a.pow(n); }
};

struct AlgebraValues {
  const SymbolAlgebra& A;
  AlgebraElement num(const Expr& e) const { return A.scalar(A.field().from_int(literal(e, A.p()))); }
  AlgebraElement var(const Expr& e) const {
    if (e.text == "i") return A.i();
    if (e.text == "j") return A.j();
    if (!A.field().has_name(e.text)) fail(e.pos, "unknown generator '" + e.text + "'");
    return A.scalar(A.field().generator(e.text));
  }
  AlgebraElement neg(const AlgebraElement& a) const { return A.zero() - a; }
  AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) const { return a * b; }
  AlgebraElement inv(const AlgebraElement& b, std::size_t pos) const {
    if (auto c = b.central_value()) {
      if (c->is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero at position " + std::to_string(pos));
      return A.scalar(c->inverse());
    }
    auto r = inverse(b);
    if (!r) throw Error(ErrorKind::DivisionByZero, "division by a zero divisor at position " + std::to_string(pos));
    return *r;
  }
  AlgebraElement div(const AlgebraElement& a, const AlgebraElement& b, std::size_t pos) const {
    return a * inv(b, pos);
  }
  AlgebraElement pow(const AlgebraElement& a, long long n, std::size_t pos) const {
    if (n >= 0) return a.pow(static_cast<unsigned long long>(n));
    return inv(a, pos).pow(static_cast<unsigned long long>(-n));
  }
};

struct PolyValue {
  Poly c;
};
PolyValue operator+(const PolyValue& a, const PolyValue& b) { return {poly_add(a.c, b.c)}; }
PolyValue operator-(const PolyValue& a, const PolyValue& b) { return {poly_sub(a.c, b.c)}; }

struct PolyValues {
  const FieldTower& F;
  const std::string& name;
  PolyValue num(const Expr& e) const { return {poly_trim({F.from_int(literal(e, F.characteristic()))})}; }
  PolyValue var(const Expr& e) const {
    if (e.text == name) return {{F.zero(), F.one()}};
    if (!F.has_name(e.text)) fail(e.pos, "unknown generator '" + e.text + "'");
    return {{F.generator(e.text)}};
  }
  PolyValue neg(const PolyValue& a) const { return {poly_sub({}, a.c)}; }
  PolyValue mul(const PolyValue& a, const PolyValue& b) const { return {poly_mul(a.c, b.c)}; }
  PolyValue div(const PolyValue& a, const PolyValue& b, std::size_t pos) const {
    Poly d = poly_trim(b.c);
    if (d.size() != 1) fail(pos, "only division by constants in a polynomial in " + name);
    PolyValue out = a;
    for (auto& x : out.c) x = x / d[0];
    return out;
  }
  PolyValue pow(const PolyValue& a, long long n, std::size_t pos) const {
    if (n < 0) fail(pos, "negative exponent in a polynomial in " + name);
    PolyValue out{{F.one()}};
    for (long long k = 0; k < n; ++k) out.c = poly_mul(out.c, a.c);
    return out;
  }
};

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(tokenize(text)).parse(); }

FieldElem eval_field(const ExprPtr& e, const FieldTower& F) { return evaluate(*e, FieldValues{F}); }

AlgebraElement eval_algebra(const ExprPtr& e, const SymbolAlgebra& A) { return evaluate(*e, AlgebraValues{A}); }

Poly eval_poly(const ExprPtr& e, const FieldTower& F, const std::string& var) {
  return poly_trim(evaluate(*e, PolyValues{F, var}).c);
}

FieldElem parse_field_elem(const std::string& text, const FieldTower& F) { return eval_field(parse_expr(text), F); }

AlgebraElement parse_algebra_elem(const std::string& text, const SymbolAlgebra& A) {
  return eval_algebra(parse_expr(text), A);
}

}  // namespace cyclink
