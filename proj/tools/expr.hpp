#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cremona/word.hpp"

namespace cremona::cli {

/// A map or word expression. Products apply right to left: "f * g" is f o g.
struct Expr {
  enum class Kind { Name, Triple, Matrix, Jonq, Product, Inverse };
  Kind kind = Kind::Name;
  std::string text;  // canonical literal text or generator name
  std::vector<Expr> kids;

  friend bool operator==(const Expr&, const Expr&) = default;
};

/// Throws ParseError on malformed input; literals are parsed and stored in
/// canonical printed form.
Expr parse_expr(std::string_view text);
std::string print_expr(const Expr& e);

/// Linear letters become A, other de Jonquieres maps become J, and any other
/// literal triple is replaced by its decomposition.
Word to_letters(const Expr& e);
CremonaMap to_map(const Expr& e);

}  // namespace cremona::cli
