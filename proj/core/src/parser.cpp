#include "lojex/parser.hpp"

#include <algorithm>
#include <cctype>

#include "lojex/errors.hpp"

namespace lojex {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> vars, const ParseOptions& opts)
      : text_(text), vars_(vars), opts_(opts) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        acc = checked(acc * unary());
        continue;
      }
      if (pos_ < text_.size() && (is_ident_start(text_[pos_]) || is_digit(text_[pos_]) ||
                                  text_[pos_] == '(')) {
        fail("implicit multiplication is not allowed; use '*'");
      }
      return acc;
    }
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      if (pos_ >= text_.size() || !is_digit(text_[pos_])) fail("expected integer exponent");
      Integer k = integer();
      if (k > opts_.exponent_cap) {
        pos_ = start;
        fail("exponent exceeds cap " + std::to_string(opts_.exponent_cap));
      }
      unsigned e = static_cast<unsigned>(k.get_ui());
      std::vector<std::uint32_t> maxe(base.nvars(), 0);
      for (const auto& [a, c] : base)
        for (std::size_t i = 0; i < a.size(); ++i) maxe[i] = std::max(maxe[i], a[i]);
      for (auto m : maxe)
        if (std::uint64_t{m} * e > opts_.exponent_cap) {
          pos_ = start;
          fail("exponent exceeds cap " + std::to_string(opts_.exponent_cap));
        }
      return base.pow(e);
    }
    return base;
  }

  Poly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (is_digit(c)) {
      Rational q(integer());
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_ws();
        if (pos_ >= text_.size() || !is_digit(text_[pos_])) fail("expected denominator");
        Integer den = integer();
        if (den == 0) fail("zero denominator");
        q /= Rational(den);
        q.canonicalize();
      }
      return Poly::constant(vars_.size(), q);
    }
    if (is_ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Poly::variable(vars_.size(), static_cast<std::size_t>(it - vars_.begin()));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  Integer integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Poly checked(Poly p) const {
    for (const auto& [a, c] : p)
      for (auto e : a)
        if (e > opts_.exponent_cap) throw ParseError("exponent exceeds cap after expansion", pos_);
    return p;
  }

  std::string_view text_;
  std::span<const std::string> vars_;
  const ParseOptions& opts_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, std::span<const std::string> vars,
                const ParseOptions& options) {
  if (vars.empty()) throw DomainError("at least one variable must be declared");
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j]) throw DomainError("duplicate variable '" + vars[i] + "'");
  return Parser(text, vars, options).parse();
}

std::vector<std::string> parse_variable_list(std::string_view csv) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    if (comma == std::string_view::npos) comma = csv.size();
    std::string_view item = csv.substr(start, comma - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (item.empty() || !is_ident_start(item[0]) ||
        !std::all_of(item.begin(), item.end(), is_ident_char))
      throw ParseError("invalid variable name '" + std::string(item) + "'", start);
    if (std::find(out.begin(), out.end(), item) != out.end())
      throw ParseError("duplicate variable name '" + std::string(item) + "'", start);
    out.emplace_back(item);
    start = comma + 1;
  }
  return out;
}

}  // namespace lojex
