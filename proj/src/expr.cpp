#include "hypersum/expr.hpp"

#include <cctype>
#include <map>

namespace hypersum {

ExprPtr Expr::num(const Rat& v) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Num;
  e->value = v;
  return e;
}

ExprPtr Expr::variable(char v) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Var;
  e->var = v;
  return e;
}

ExprPtr Expr::binary(Kind k, ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->args = {std::move(a), std::move(b)};
  return e;
}

ExprPtr Expr::neg(ExprPtr a) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Neg;
  e->args = {std::move(a)};
  return e;
}

ExprPtr Expr::pow(ExprPtr a, long p) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Pow;
  e->exponent = p;
  e->args = {std::move(a)};
  return e;
}

ExprPtr Expr::call(std::string name, std::vector<ExprPtr> args) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Call;
  e->name = std::move(name);
  e->args = std::move(args);
  return e;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.args.size() != b.args.size()) return false;
  switch (a.kind) {
    case Expr::Kind::Num: if (!(a.value == b.value)) return false; break;
    case Expr::Kind::Var: if (a.var != b.var) return false; break;
    case Expr::Kind::Pow: if (a.exponent != b.exponent) return false; break;
    case Expr::Kind::Call: if (a.name != b.name) return false; break;
    default: break;
  }
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!(*a.args[i] == *b.args[i])) return false;
  return true;
}

ParseError::ParseError(int line, int col, const std::string& msg)
    : Error(ErrorCode::Parse, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg),
      line_(line),
      col_(col) {}

namespace {

const std::map<std::string, std::size_t>& arities() {
  static const std::map<std::string, std::size_t> a = {
      {"factorial", 1}, {"binomial", 2}, {"pochhammer", 2}, {"gamma_ratio", 2}};
  return a;
}

struct Token {
  enum Type { Number, Ident, Op, End } type = End;
  std::string text;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Token next() {
    skip_space();
    Token t;
    t.line = line_;
    t.col = col_;
    if (i_ >= s_.size()) return t;
    const char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.type = Token::Number;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) t.text += advance();
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.type = Token::Ident;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) t.text += advance();
      return t;
    }
    if (std::string_view("+-*/^(),").find(c) != std::string_view::npos) {
      t.type = Token::Op;
      t.text = std::string(1, advance());
      return t;
    }
    throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
  }

 private:
  char advance() {
    const char c = s_[i_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip_space() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) advance();
  }

  std::string_view s_;
  std::size_t i_ = 0;
  int line_ = 1, col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view s) : lex_(s) { tok_ = lex_.next(); }

  ExprPtr parse() {
    ExprPtr e = expr();
    if (tok_.type != Token::End) fail("unexpected '" + tok_.text + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(tok_.line, tok_.col, msg); }
  bool is_op(char c) const { return tok_.type == Token::Op && tok_.text[0] == c; }
  void expect(char c) {
    if (!is_op(c)) fail(std::string("expected '") + c + "'");
    tok_ = lex_.next();
  }
  ExprPtr at(ExprPtr e, const Token& t) {
    auto m = std::const_pointer_cast<Expr>(e);
    m->line = t.line;
    m->col = t.col;
    return m;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (is_op('+') || is_op('-')) {
      const Token t = tok_;
      auto k = is_op('+') ? Expr::Kind::Add : Expr::Kind::Sub;
      tok_ = lex_.next();
      e = at(Expr::binary(k, e, term()), t);
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = unary();
    while (is_op('*') || is_op('/')) {
      const Token t = tok_;
      auto k = is_op('*') ? Expr::Kind::Mul : Expr::Kind::Div;
      tok_ = lex_.next();
      e = at(Expr::binary(k, e, unary()), t);
    }
    return e;
  }

  ExprPtr unary() {
    if (is_op('-')) {
      const Token t = tok_;
      tok_ = lex_.next();
      return at(Expr::neg(unary()), t);
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (!is_op('^')) return base;
    const Token t = tok_;
    tok_ = lex_.next();
    bool paren = false, minus = false;
    if (is_op('(')) {
      paren = true;
      tok_ = lex_.next();
    }
    if (is_op('-')) {
      minus = true;
      tok_ = lex_.next();
    }
    if (tok_.type != Token::Number) fail("exponent must be an integer");
    if (tok_.text.size() > 9) fail("exponent too large");
    long e = std::stol(tok_.text);
    tok_ = lex_.next();
    if (paren) expect(')');
    return at(Expr::pow(base, minus ? -e : e), t);
  }

  ExprPtr primary() {
    const Token t = tok_;
    if (tok_.type == Token::Number) {
      tok_ = lex_.next();
      return at(Expr::num(Rat(BigInt(t.text))), t);
    }
    if (is_op('(')) {
      tok_ = lex_.next();
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    if (tok_.type == Token::Ident) {
      tok_ = lex_.next();
      if (t.text == "x" || t.text == "y") return at(Expr::variable(t.text[0]), t);
      auto it = arities().find(t.text);
      if (it == arities().end()) throw ParseError(t.line, t.col, "unknown identifier '" + t.text + "'");
      expect('(');
      std::vector<ExprPtr> args{expr()};
      while (is_op(',')) {
        tok_ = lex_.next();
        args.push_back(expr());
      }
      expect(')');
      if (args.size() != it->second) {
        throw ParseError(t.line, t.col, t.text + " expects " + std::to_string(it->second) + " argument(s)");
      }
      return at(Expr::call(t.text, std::move(args)), t);
    }
    if (tok_.type == Token::End) fail("unexpected end of input");
    fail("unexpected '" + tok_.text + "'");
  }

  Lexer lex_;
  Token tok_;
};

int prec(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    case Expr::Kind::Num: return e.value.is_integer() && e.value.sign() >= 0 ? 5 : 2;
    default: return 5;
  }
}

std::string wrap(const Expr& e, bool paren) {
  std::string s = to_string(e);
  return paren ? "(" + s + ")" : s;
}

}  // namespace

ExprPtr parse_term(std::string_view src) { return Parser(src).parse(); }

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Num: return e.value.to_string();
    case Expr::Kind::Var: return std::string(1, e.var);
    case Expr::Kind::Add:
    case Expr::Kind::Sub: {
      const char* op = e.kind == Expr::Kind::Add ? " + " : " - ";
      return wrap(*e.args[0], prec(*e.args[0]) < 1) + op + wrap(*e.args[1], prec(*e.args[1]) <= 1);
    }
    case Expr::Kind::Mul:
    case Expr::Kind::Div: {
      const char* op = e.kind == Expr::Kind::Mul ? "*" : "/";
      return wrap(*e.args[0], prec(*e.args[0]) < 2) + op + wrap(*e.args[1], prec(*e.args[1]) <= 2);
    }
    case Expr::Kind::Neg: return "-" + wrap(*e.args[0], prec(*e.args[0]) < 3);
    case Expr::Kind::Pow: {
      std::string p = e.exponent < 0 ? "(" + std::to_string(e.exponent) + ")" : std::to_string(e.exponent);
      return wrap(*e.args[0], prec(*e.args[0]) < 5) + "^" + p;
    }
    case Expr::Kind::Call: {
      std::string s = e.name + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) s += (i ? ", " : "") + to_string(*e.args[i]);
      return s + ")";
    }
  }
  return "";
}

}  // namespace hypersum
