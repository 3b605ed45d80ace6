#pragma once

// Term expressions: rational constants, x, y, + - * /, integer powers and the
// atoms factorial, binomial, pochhammer, gamma_ratio.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hypersum/errors.hpp"
#include "hypersum/rat.hpp"

namespace hypersum {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Num, Var, Add, Sub, Mul, Div, Neg, Pow, Call };
  Kind kind = Kind::Num;
  Rat value;                  // Num
  char var = 0;               // Var: 'x' or 'y'
  long exponent = 0;          // Pow
  std::string name;           // Call
  std::vector<ExprPtr> args;  // operands / call arguments
  int line = 0, col = 0;      // source position, ignored by ==

  static ExprPtr num(const Rat& v);
  static ExprPtr variable(char v);
  static ExprPtr binary(Kind k, ExprPtr a, ExprPtr b);
  static ExprPtr neg(ExprPtr a);
  static ExprPtr pow(ExprPtr a, long e);
  static ExprPtr call(std::string name, std::vector<ExprPtr> args);
};

bool operator==(const Expr& a, const Expr& b);

class ParseError : public Error {
 public:
  ParseError(int line, int col, const std::string& msg);
  int line() const { return line_; }
  int column() const { return col_; }

 private:
  int line_, col_;
};

/// Throws ParseError (code PARSE) with a 1-based line/column.
ExprPtr parse_term(std::string_view src);

/// Minimal-parenthesis rendering; parse_term(to_string(e)) == e.
std::string to_string(const Expr& e);

}  // namespace hypersum
