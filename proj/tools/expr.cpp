#include "expr.hpp"

#include <cctype>

#include "cremona/decompose.hpp"
#include "cremona/named.hpp"

namespace cremona::cli {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Expr parse() {
    Expr e = product();
    skip();
    if (i_ != s_.size()) error("unexpected '" + std::string(1, s_[i_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::ParseError, what + " at offset " + std::to_string(i_));
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  Expr product() {
    std::vector<Expr> parts{factor()};
    while (eat('*')) parts.push_back(factor());
    if (parts.size() == 1) return std::move(parts[0]);
    return Expr{Expr::Kind::Product, "", std::move(parts)};
  }

  Expr factor() {
    Expr e = primary();
    while (eat('^')) {
      if (!eat('-') || !eat('1')) error("only ^-1 is supported");
      e = Expr{Expr::Kind::Inverse, "", {std::move(e)}};
    }
    return e;
  }

  // Text from the current '[' or '(' to its matching close, inclusive.
  std::string balanced(char open, char close) {
    const std::size_t start = i_;
    int depth = 0;
    for (; i_ < s_.size(); ++i_) {
      if (s_[i_] == open) ++depth;
      if (s_[i_] == close && --depth == 0) return std::string(s_.substr(start, ++i_ - start));
    }
    i_ = start;
    error(std::string("unbalanced '") + open + "'");
  }

  Expr primary() {
    skip();
    if (i_ == s_.size()) error("expression expected");
    const char c = s_[i_];
    if (c == '(') {
      ++i_;
      Expr e = product();
      if (!eat(')')) error("')' expected");
      return e;
    }
    if (c == '[') {
      const std::string lit = balanced('[', ']');
      if (lit.find(':') != std::string::npos) return {Expr::Kind::Triple, CremonaMap::parse(lit).str(), {}};
      return {Expr::Kind::Matrix, ProjLinearMap::parse(lit).str(), {}};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = i_;
      while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
      const std::string name(s_.substr(start, i_ - start));
      if (name == "J") {
        skip();
        if (i_ == s_.size() || s_[i_] != '(') error("'(' expected after J");
        return {Expr::Kind::Jonq, JonqElement::parse("J" + balanced('(', ')')).str(), {}};
      }
      if (named::lookup(name) == nullptr) {
        i_ = start;
        error("unknown generator '" + name + "'");
      }
      return {Expr::Kind::Name, name, {}};
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

Letter named_letter(const std::string& name) {
  if (name == "sigma") return Letter::j(named::sigma_j());
  if (name == "nu1") return Letter::j(named::nu1_j());
  if (name == "nu2") return Letter::j(named::nu2_j());
  if (name == "tau") return Letter::a(named::tau());
  if (name == "rho1") return Letter::a(named::rho1());
  return Letter::a(named::rho2());
}

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Product: {
      std::string out;
      for (const auto& k : e.kids) {
        if (!out.empty()) out += " * ";
        out += k.kind == Expr::Kind::Product ? "(" + print_expr(k) + ")" : print_expr(k);
      }
      return out;
    }
    case Expr::Kind::Inverse: {
      const Expr& k = e.kids[0];
      return (k.kind == Expr::Kind::Product ? "(" + print_expr(k) + ")" : print_expr(k)) + "^-1";
    }
    default:
      return e.text;
  }
}

Word to_letters(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Name:
      return {named_letter(e.text)};
    case Expr::Kind::Matrix:
      return {Letter::a(ProjLinearMap::parse(e.text))};
    case Expr::Kind::Jonq:
      return {Letter::j(JonqElement::parse(e.text))};
    case Expr::Kind::Triple: {
      const CremonaMap f = CremonaMap::parse(e.text);
      if (f.degree() == 1) return {Letter::a(f.to_linear())};
      if (is_in_J(f)) return {Letter::j(cremona_to_jonq(f))};
      return decompose(f).word;
    }
    case Expr::Kind::Product: {
      Word w;
      for (const auto& k : e.kids) {
        Word part = to_letters(k);
        w.insert(w.end(), part.begin(), part.end());
      }
      return w;
    }
    case Expr::Kind::Inverse:
      return invert_word(to_letters(e.kids[0]));
  }
  return {};
}

CremonaMap to_map(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Name:
      return *named::lookup(e.text);
    case Expr::Kind::Triple:
      return CremonaMap::parse(e.text);
    case Expr::Kind::Product: {
      CremonaMap f = CremonaMap::identity();
      for (const auto& k : e.kids) f = f * to_map(k);
      return f;
    }
    default:
      return eval_word(to_letters(e));
  }
}

}  // namespace cremona::cli
