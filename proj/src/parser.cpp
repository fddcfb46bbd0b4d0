#include "lepage/parser.hpp"

#include <cctype>

#include "lepage/errors.hpp"

namespace lepage {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const ChartContext& ctx) : s_(text), ctx_(ctx) {}

  Expr parse() {
    Expr e = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return canonicalize(e);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

  std::string digits() {
    std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  Expr sum() {
    std::vector<Expr> terms{product()};
    for (;;) {
      if (accept('+')) {
        terms.push_back(product());
      } else if (accept('-')) {
        terms.push_back(-product());
      } else {
        return Expr::sum(std::move(terms));
      }
    }
  }

  Expr product() {
    Expr e = unary();
    for (;;) {
      if (accept('*')) {
        e = e * unary();
      } else if (accept('/')) {
        e = e / unary();
      } else {
        return e;
      }
    }
  }

  Expr unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (!accept('^')) return base;
    skip();
    bool paren = accept('(');
    bool negative = accept('-');
    skip();
    if (!at_digit()) fail("expected an integer exponent");
    std::string d = digits();
    if (d.size() > 6) fail("exponent too large");
    if (paren) expect(')');
    int k = std::stoi(d);
    return pow(base, negative ? -k : k);
  }

  Expr number() {
    std::size_t start = pos_;
    std::string whole = digits();
    mpz_class num(whole);
    mpz_class den = 1;
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      std::string frac = digits();
      if (frac.empty()) {
        pos_ = start;
        fail("malformed number");
      }
      for (char c : frac) {
        num = num * 10 + (c - '0');
        den *= 10;
      }
    }
    no_implicit_product();
    mpq_class q(num, den);
    q.canonicalize();
    return Expr(q);
  }

  void no_implicit_product() {
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(' || s_[pos_] == '.')) {
      fail("implicit multiplication is not allowed");
    }
  }

  std::vector<int> index_digits() {
    std::size_t start = pos_;
    std::string d = digits();
    if (d.empty()) fail("expected derivative indices");
    std::vector<int> out;
    for (std::size_t k = 0; k < d.size(); ++k) {
      int i = d[k] - '0';
      if (i == 0) {
        pos_ = start + k;
        fail("derivative index 0");
      }
      out.push_back(i);
    }
    return out;
  }

  Expr identifier() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string word = s_.substr(start, pos_ - start);
    for (auto [name, kind] : {std::pair{"sin", FunctionKind::Sin}, std::pair{"cos", FunctionKind::Cos},
                              std::pair{"exp", FunctionKind::Exp}, std::pair{"ln", FunctionKind::Ln}}) {
      if (word == name) {
        expect('(');
        Expr arg = sum();
        expect(')');
        return Expr::function(kind, arg);
      }
    }
    if (word == "x") {
      if (!at_digit()) fail("expected a base index after x");
      std::size_t at = pos_;
      std::string d = digits();
      if (d.size() > 4 || std::stoi(d) == 0) {
        pos_ = at;
        fail("invalid base index");
      }
      return located(start, JetVariable::base(std::stoi(d)));
    }
    if (word == "y") {
      int sigma = 0;
      if (at_digit()) {
        std::string d = digits();
        sigma = d.size() > 4 ? 0 : std::stoi(d);
        if (sigma == 0) {
          pos_ = start;
          fail("invalid fiber index");
        }
      } else if (ctx_.m == 1) {
        sigma = 1;
      } else {
        pos_ = start;
        fail("fiber index required when m > 1");
      }
      std::vector<int> J;
      if (pos_ < s_.size() && s_[pos_] == '_') {
        ++pos_;
        J = index_digits();
      }
      if (J.size() > static_cast<std::size_t>(MultiIndex::kMaxOrder)) {
        pos_ = start;
        fail("too many derivative indices");
      }
      return located(start, JetVariable::fiber(sigma, MultiIndex(std::span<const int>(J))));
    }
    pos_ = start;
    fail("unknown identifier '" + word + "'");
  }

  Expr located(std::size_t start, JetVariable v) {
    if (v.is_base()) {
      if (v.base_index() > ctx_.n) throw ChartMismatch("x" + std::to_string(v.base_index()) + " at position " +
                                                       std::to_string(start) + " is outside " + ctx_.describe());
    } else {
      if (v.fiber_index() > ctx_.m) throw ChartMismatch("fiber index at position " + std::to_string(start) +
                                                        " is outside " + ctx_.describe());
      for (int i : v.multi_index().entries()) {
        if (i > ctx_.n) throw ChartMismatch("derivative index at position " + std::to_string(start) +
                                            " is outside " + ctx_.describe());
      }
    }
    no_implicit_product();
    return Expr::variable(v);
  }

  Expr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = sum();
      expect(')');
      if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(')) {
        fail("implicit multiplication is not allowed");
      }
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  ChartContext ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expression(const std::string& text, const ChartContext& ctx) { return Parser(text, ctx).parse(); }

Lagrangian parse_lagrangian(const LagrangianSpec& spec) {
  ChartContext ctx(spec.n, spec.m, spec.order);
  Expr L = parse_expression(spec.source, ctx);
  return Lagrangian(ctx, spec.order, L);
}

}  // namespace lepage
