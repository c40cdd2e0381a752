#include "gentaylor/expr.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <optional>
#include <utility>

namespace gt {
namespace detail {

// Taylor coefficients c_j = f^(j)(x)/j! with respect to x, truncated at some
// order; products are plain Cauchy convolutions.
using Series = std::vector<double>;

namespace {

Series series_const(double v, int order) {
  Series s(static_cast<std::size_t>(order) + 1, 0.0);
  s[0] = v;
  return s;
}

void series_axpy(Series& acc, const Series& other, double scale) {
  for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += scale * other[j];
}

Series series_mul(const Series& a, const Series& b) {
  Series out(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0.0) continue;
    for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

struct ExprNode {
  enum class Kind { number, var_x, var_t, sum, product, power, scale, func };

  Kind kind = Kind::number;
  double value = 0.0;  // number payload, or scale factor
  int exponent = 0;
  Expression::Func func = Expression::Func::sin;
  // affine function argument c1*x + c2*t + c0
  double fc1 = 0.0, fc2 = 0.0, fc0 = 0.0;
  std::vector<std::shared_ptr<const ExprNode>> kids;

  bool uses_t() const {
    switch (kind) {
      case Kind::var_t:
        return true;
      case Kind::func:
        return fc2 != 0.0;
      default:
        for (const auto& k : kids) {
          if (k->uses_t()) return true;
        }
        return false;
    }
  }

  Series eval(double x, double t, int order) const {
    switch (kind) {
      case Kind::number:
        return series_const(value, order);
      case Kind::var_x: {
        Series s = series_const(x, order);
        if (order >= 1) s[1] = 1.0;
        return s;
      }
      case Kind::var_t:
        return series_const(t, order);
      case Kind::sum: {
        Series acc = series_const(0.0, order);
        for (const auto& k : kids) series_axpy(acc, k->eval(x, t, order), 1.0);
        return acc;
      }
      case Kind::product: {
        Series acc = kids.front()->eval(x, t, order);
        for (std::size_t i = 1; i < kids.size(); ++i) {
          acc = series_mul(acc, kids[i]->eval(x, t, order));
        }
        return acc;
      }
      case Kind::power: {
        Series base = kids.front()->eval(x, t, order);
        Series acc = series_const(1.0, order);
        for (int i = 0; i < exponent; ++i) acc = series_mul(acc, base);
        return acc;
      }
      case Kind::scale: {
        Series s = kids.front()->eval(x, t, order);
        for (double& c : s) c *= value;
        return s;
      }
      case Kind::func:
        return eval_func(x, t, order);
    }
    throw Error("unreachable expression node kind");
  }

  Series eval_func(double x, double t, int order) const {
    const double u = fc1 * x + fc2 * t + fc0;
    // d^j/dx^j f(c1*x + ...) = c1^j f^(j)(u)
    Series s(static_cast<std::size_t>(order) + 1, 0.0);
    double c1_pow = 1.0;
    double factorial = 1.0;
    for (int j = 0; j <= order; ++j) {
      if (j > 0) {
        c1_pow *= fc1;
        factorial *= j;
      }
      s[static_cast<std::size_t>(j)] = c1_pow * func_derivative(j, u) / factorial;
      if (fc1 == 0.0 && j > 0) break;  // remaining entries stay zero
    }
    return s;
  }

  double func_derivative(int j, double u) const {
    switch (func) {
      case Expression::Func::exp:
        return std::exp(u);
      case Expression::Func::sin:
        switch (j % 4) {
          case 0: return std::sin(u);
          case 1: return std::cos(u);
          case 2: return -std::sin(u);
          default: return -std::cos(u);
        }
      case Expression::Func::cos:
        switch (j % 4) {
          case 0: return std::cos(u);
          case 1: return -std::sin(u);
          case 2: return -std::cos(u);
          default: return std::sin(u);
        }
      case Expression::Func::sinh:
        return j % 2 == 0 ? std::sinh(u) : std::cosh(u);
      case Expression::Func::cosh:
        return j % 2 == 0 ? std::cosh(u) : std::sinh(u);
    }
    throw Error("unreachable function kind");
  }
};

namespace {

using NodePtr = std::shared_ptr<const ExprNode>;

NodePtr make_number(double v) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::number;
  n->value = v;
  return n;
}

NodePtr make_var(bool is_t) {
  auto n = std::make_shared<ExprNode>();
  n->kind = is_t ? ExprNode::Kind::var_t : ExprNode::Kind::var_x;
  return n;
}

NodePtr make_sum(std::vector<NodePtr> kids) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::sum;
  n->kids = std::move(kids);
  return n;
}

NodePtr make_product(std::vector<NodePtr> kids) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::product;
  n->kids = std::move(kids);
  return n;
}

NodePtr make_scale(double c, NodePtr kid) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::scale;
  n->value = c;
  n->kids = {std::move(kid)};
  return n;
}

NodePtr make_power(NodePtr base, int exponent) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::power;
  n->exponent = exponent;
  n->kids = {std::move(base)};
  return n;
}

NodePtr make_func(Expression::Func f, double c1, double c2, double c0) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::func;
  n->func = f;
  n->fc1 = c1;
  n->fc2 = c2;
  n->fc0 = c0;
  return n;
}

struct Affine {
  double c0 = 0.0, cx = 0.0, ct = 0.0;
  bool constant() const { return cx == 0.0 && ct == 0.0; }
};

/// Structural affine extraction; nullopt when the node is not degree <= 1.
std::optional<Affine> affine_of(const ExprNode& node) {
  switch (node.kind) {
    case ExprNode::Kind::number:
      return Affine{node.value, 0.0, 0.0};
    case ExprNode::Kind::var_x:
      return Affine{0.0, 1.0, 0.0};
    case ExprNode::Kind::var_t:
      return Affine{0.0, 0.0, 1.0};
    case ExprNode::Kind::sum: {
      Affine acc;
      for (const auto& k : node.kids) {
        auto a = affine_of(*k);
        if (!a) return std::nullopt;
        acc.c0 += a->c0;
        acc.cx += a->cx;
        acc.ct += a->ct;
      }
      return acc;
    }
    case ExprNode::Kind::product: {
      Affine acc{1.0, 0.0, 0.0};
      bool seen_linear = false;
      for (const auto& k : node.kids) {
        auto a = affine_of(*k);
        if (!a) return std::nullopt;
        if (a->constant()) {
          acc.c0 *= a->c0;
          acc.cx *= a->c0;
          acc.ct *= a->c0;
        } else {
          if (seen_linear || acc.cx != 0.0 || acc.ct != 0.0) return std::nullopt;
          seen_linear = true;
          const double scale = acc.c0;
          acc = Affine{scale * a->c0, scale * a->cx, scale * a->ct};
        }
      }
      return acc;
    }
    case ExprNode::Kind::power: {
      if (node.exponent == 0) return Affine{1.0, 0.0, 0.0};
      auto a = affine_of(*node.kids.front());
      if (!a) return std::nullopt;
      if (node.exponent == 1) return a;
      if (!a->constant()) return std::nullopt;
      return Affine{std::pow(a->c0, node.exponent), 0.0, 0.0};
    }
    case ExprNode::Kind::scale: {
      auto a = affine_of(*node.kids.front());
      if (!a) return std::nullopt;
      return Affine{node.value * a->c0, node.value * a->cx, node.value * a->ct};
    }
    case ExprNode::Kind::func:
      return std::nullopt;
  }
  return std::nullopt;
}

bool is_constant(const ExprNode& node) {
  switch (node.kind) {
    case ExprNode::Kind::number:
      return true;
    case ExprNode::Kind::var_x:
    case ExprNode::Kind::var_t:
      return false;
    case ExprNode::Kind::func:
      return node.fc1 == 0.0 && node.fc2 == 0.0;
    default:
      for (const auto& k : node.kids) {
        if (!is_constant(*k)) return false;
      }
      return true;
  }
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

struct Token {
  enum class Kind { number, ident, symbol, end };
  Kind kind = Kind::end;
  double number = 0.0;
  std::string ident;
  char symbol = 0;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& what, std::size_t pos) const {
    throw InputError("expression error at position " + std::to_string(pos + 1) + ": " + what);
  }

 private:
  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    current_ = Token{};
    current_.pos = i_;
    if (i_ >= text_.size()) {
      current_.kind = Token::Kind::end;
      return;
    }
    const char c = text_[i_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = i_;
      while (i_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[i_])) || text_[i_] == '.')) {
        ++i_;
      }
      // exponent part, e.g. 1.5e-3
      if (i_ < text_.size() && (text_[i_] == 'e' || text_[i_] == 'E')) {
        std::size_t j = i_ + 1;
        if (j < text_.size() && (text_[j] == '+' || text_[j] == '-')) ++j;
        if (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) {
          i_ = j;
          while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
        }
      }
      const std::string num(text_.substr(start, i_ - start));
      char* end = nullptr;
      current_.kind = Token::Kind::number;
      current_.number = std::strtod(num.c_str(), &end);
      if (end == nullptr || *end != '\0') fail("bad numeric literal '" + num + "'", start);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[i_]))) ++i_;
      current_.kind = Token::Kind::ident;
      current_.ident = std::string(text_.substr(start, i_ - start));
      return;
    }
    current_.kind = Token::Kind::symbol;
    current_.symbol = c;
    ++i_;
  }

  std::string_view text_;
  std::size_t i_ = 0;
  Token current_;
};

class Parser {
 public:
  Parser(std::string_view text, bool allow_t) : lexer_(text), allow_t_(allow_t) {}

  NodePtr parse() {
    NodePtr e = parse_sum();
    if (lexer_.peek().kind != Token::Kind::end) {
      lexer_.fail("unexpected trailing input", lexer_.peek().pos);
    }
    return e;
  }

 private:
  bool at_symbol(char c) const {
    return lexer_.peek().kind == Token::Kind::symbol && lexer_.peek().symbol == c;
  }

  void expect_symbol(char c, const std::string& context) {
    if (!at_symbol(c)) lexer_.fail(std::string("expected '") + c + "' " + context, lexer_.peek().pos);
    lexer_.next();
  }

  NodePtr parse_sum() {
    std::vector<NodePtr> terms;
    double sign = 1.0;
    if (at_symbol('+') || at_symbol('-')) {
      sign = at_symbol('-') ? -1.0 : 1.0;
      lexer_.next();
    }
    terms.push_back(signed_node(sign, parse_term()));
    while (at_symbol('+') || at_symbol('-')) {
      const double s = at_symbol('-') ? -1.0 : 1.0;
      lexer_.next();
      terms.push_back(signed_node(s, parse_term()));
    }
    if (terms.size() == 1) return terms.front();
    return make_sum(std::move(terms));
  }

  static NodePtr signed_node(double sign, NodePtr n) {
    return sign < 0 ? make_scale(-1.0, std::move(n)) : n;
  }

  NodePtr parse_term() {
    std::vector<NodePtr> factors{parse_factor()};
    while (at_symbol('*') || at_symbol('/')) {
      const bool divide = at_symbol('/');
      const std::size_t pos = lexer_.peek().pos;
      lexer_.next();
      NodePtr rhs = parse_factor();
      if (divide) {
        if (!is_constant(*rhs)) lexer_.fail("division only by constants", pos);
        const double d = rhs->eval(0.0, 0.0, 0)[0];
        if (d == 0.0) lexer_.fail("division by zero", pos);
        factors.back() = make_scale(1.0 / d, factors.back());
      } else {
        factors.push_back(std::move(rhs));
      }
    }
    if (factors.size() == 1) return factors.front();
    return make_product(std::move(factors));
  }

  NodePtr parse_factor() {
    NodePtr base = parse_base();
    while (at_symbol('^')) {
      const std::size_t pos = lexer_.peek().pos;
      lexer_.next();
      const Token t = lexer_.next();
      if (t.kind != Token::Kind::number || t.number != std::floor(t.number) || t.number < 0.0 ||
          t.number > 64.0) {
        lexer_.fail("exponent must be an integer in 0..64", pos);
      }
      base = make_power(std::move(base), static_cast<int>(t.number));
    }
    return base;
  }

  NodePtr parse_base() {
    const Token t = lexer_.peek();
    switch (t.kind) {
      case Token::Kind::number:
        lexer_.next();
        return make_number(t.number);
      case Token::Kind::ident: {
        lexer_.next();
        if (t.ident == "x") return make_var(false);
        if (t.ident == "t") {
          if (!allow_t_) lexer_.fail("variable 't' is not allowed here", t.pos);
          return make_var(true);
        }
        auto func = func_by_name(t.ident);
        if (!func) lexer_.fail("unknown identifier '" + t.ident + "'", t.pos);
        expect_symbol('(', "after function name");
        NodePtr arg = parse_sum();
        expect_symbol(')', "to close function argument");
        auto affine = affine_of(*arg);
        if (!affine) {
          lexer_.fail("argument of " + t.ident + " must be affine (c1*x + c0)", t.pos);
        }
        return make_func(*func, affine->cx, affine->ct, affine->c0);
      }
      case Token::Kind::symbol:
        if (t.symbol == '(') {
          lexer_.next();
          NodePtr inner = parse_sum();
          expect_symbol(')', "to close parenthesis");
          return inner;
        }
        if (t.symbol == '-' || t.symbol == '+') {
          lexer_.next();
          return signed_node(t.symbol == '-' ? -1.0 : 1.0, parse_factor());
        }
        lexer_.fail(std::string("unexpected symbol '") + t.symbol + "'", t.pos);
      case Token::Kind::end:
        lexer_.fail("unexpected end of input", t.pos);
    }
    throw Error("unreachable");
  }

  static std::optional<Expression::Func> func_by_name(const std::string& name) {
    if (name == "sin") return Expression::Func::sin;
    if (name == "cos") return Expression::Func::cos;
    if (name == "sinh") return Expression::Func::sinh;
    if (name == "cosh") return Expression::Func::cosh;
    if (name == "exp") return Expression::Func::exp;
    return std::nullopt;
  }

  Lexer lexer_;
  bool allow_t_;
};

std::string func_name(Expression::Func f) {
  switch (f) {
    case Expression::Func::sin: return "sin";
    case Expression::Func::cos: return "cos";
    case Expression::Func::sinh: return "sinh";
    case Expression::Func::cosh: return "cosh";
    case Expression::Func::exp: return "exp";
  }
  return "?";
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace
}  // namespace detail

Expression::Expression(std::shared_ptr<const detail::ExprNode> root, std::string text)
    : root_(std::move(root)), text_(std::move(text)) {}

Expression Expression::parse(std::string_view text, bool allow_t) {
  detail::Parser parser(text, allow_t);
  return Expression(parser.parse(), std::string(text));
}

Expression Expression::number(double value) {
  return Expression(detail::make_number(value), detail::format_number(value));
}

Expression Expression::variable_x() { return Expression(detail::make_var(false), "x"); }

Expression Expression::variable_t() { return Expression(detail::make_var(true), "t"); }

Expression Expression::affine(double c1, double c0) {
  return Expression(detail::make_sum({detail::make_scale(c1, detail::make_var(false)),
                                      detail::make_number(c0)}),
                    detail::format_number(c1) + "*x + " + detail::format_number(c0));
}

Expression Expression::apply(Func f, const Expression& arg) {
  auto affine = detail::affine_of(*arg.root_);
  if (!affine) {
    throw InputError("argument of " + detail::func_name(f) + " must be affine");
  }
  return Expression(detail::make_func(f, affine->cx, affine->ct, affine->c0),
                    detail::func_name(f) + "(" + arg.text_ + ")");
}

Expression Expression::operator+(const Expression& rhs) const {
  return Expression(detail::make_sum({root_, rhs.root_}), "(" + text_ + " + " + rhs.text_ + ")");
}

Expression Expression::operator-(const Expression& rhs) const {
  return Expression(detail::make_sum({root_, detail::make_scale(-1.0, rhs.root_)}),
                    "(" + text_ + " - " + rhs.text_ + ")");
}

Expression Expression::operator*(const Expression& rhs) const {
  return Expression(detail::make_product({root_, rhs.root_}), "(" + text_ + ")*(" + rhs.text_ + ")");
}

Expression Expression::operator-() const { return scaled(-1.0); }

Expression Expression::scaled(double c) const {
  return Expression(detail::make_scale(c, root_), detail::format_number(c) + "*(" + text_ + ")");
}

Expression Expression::pow(int exponent) const {
  if (exponent < 0 || exponent > 64) throw InputError("exponent must be in 0..64");
  return Expression(detail::make_power(root_, exponent),
                    "(" + text_ + ")^" + std::to_string(exponent));
}

bool Expression::uses_t() const { return root_->uses_t(); }

double Expression::value(double x, double t) const { return root_->eval(x, t, 0)[0]; }

Jet Expression::jet(double x, int order, double t) const {
  if (order < 0) throw ArgumentError("jet order must be >= 0");
  detail::Series series = root_->eval(x, t, order);
  // convert Taylor coefficients back to derivatives
  std::vector<double> values(series.size());
  double factorial = 1.0;
  for (std::size_t j = 0; j < series.size(); ++j) {
    if (j > 0) factorial *= static_cast<double>(j);
    values[j] = series[j] * factorial;
  }
  return Jet(x, std::move(values));
}

SmoothFunction make_smooth_function(const Expression& expr, std::string label) {
  if (expr.uses_t()) {
    throw InputError("a smooth function must depend on x only");
  }
  if (label.empty()) label = expr.text();
  return SmoothFunction([expr](double x, int order) { return expr.jet(x, order); },
                        std::move(label));
}

CoefficientBundle make_coefficient(const Expression& expr, const Interval& domain) {
  if (expr.uses_t()) {
    throw InputError("a coefficient must depend on x only");
  }
  return CoefficientBundle::exact([expr](double x) { return expr.value(x); },
                                  [expr](double x, int order) { return expr.jet(x, order)[order]; },
                                  domain);
}

}  // namespace gt
