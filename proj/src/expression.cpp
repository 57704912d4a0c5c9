#include "wshift/expression.hpp"

#include <cctype>
#include <utility>

#include "wshift/error.hpp"

namespace wshift {

struct Expression::Node {
  Kind kind = Kind::kNumber;
  Rational value;       // kNumber
  unsigned exponent = 0;  // kPower
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
  RationalFunction function;
  Polynomial guard = Polynomial::constant(1);
};

Expression::Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Expression::Kind Expression::kind() const { return node_->kind; }

Expression Expression::number(const Rational& value) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kNumber;
  node->value = value;
  node->function = RationalFunction::constant(value);
  return Expression(std::move(node));
}

Expression Expression::variable() {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kVariable;
  node->function = RationalFunction::identity();
  return Expression(std::move(node));
}

Expression Expression::negate(Expression operand) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kNegate;
  node->function = -operand.node_->function;
  node->guard = operand.node_->guard;
  node->lhs = std::move(operand.node_);
  return Expression(std::move(node));
}

Expression Expression::binary(Kind kind, Expression lhs, Expression rhs) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  const RationalFunction& a = lhs.node_->function;
  const RationalFunction& b = rhs.node_->function;
  switch (kind) {
    case Kind::kAdd: node->function = a + b; break;
    case Kind::kSubtract: node->function = a - b; break;
    case Kind::kMultiply: node->function = a * b; break;
    case Kind::kDivide: node->function = a / b; break;
    default:
      throw std::invalid_argument("Expression::binary: not a binary operator");
  }
  node->guard = lhs.node_->guard * rhs.node_->guard;
  if (kind == Kind::kDivide) node->guard = node->guard * b.numerator;
  node->lhs = std::move(lhs.node_);
  node->rhs = std::move(rhs.node_);
  return Expression(std::move(node));
}

Expression Expression::power(Expression base, unsigned exponent) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kPower;
  node->exponent = exponent;
  RationalFunction acc = RationalFunction::constant(1);
  for (unsigned i = 0; i < exponent; ++i) acc = acc * base.node_->function;
  node->function = std::move(acc);
  node->guard = base.node_->guard;
  node->lhs = std::move(base.node_);
  return Expression(std::move(node));
}

const RationalFunction& Expression::as_rational_function() const { return node_->function; }

const Polynomial& Expression::singular_guard() const { return node_->guard; }

namespace {

Rational eval_node(const Expression::Node& node, const Rational& n) {
  using Kind = Expression::Kind;
  switch (node.kind) {
    case Kind::kNumber: return node.value;
    case Kind::kVariable: return n;
    case Kind::kNegate: return -eval_node(*node.lhs, n);
    case Kind::kAdd: return eval_node(*node.lhs, n) + eval_node(*node.rhs, n);
    case Kind::kSubtract: return eval_node(*node.lhs, n) - eval_node(*node.rhs, n);
    case Kind::kMultiply: return eval_node(*node.lhs, n) * eval_node(*node.rhs, n);
    case Kind::kDivide: {
      Rational divisor = eval_node(*node.rhs, n);
      if (divisor == 0) {
        throw ShiftError(ErrorKind::kExpressionDomain,
                         "division by zero in tail expression at n = " + n.get_str());
      }
      return eval_node(*node.lhs, n) / divisor;
    }
    case Kind::kPower: {
      const Rational base = eval_node(*node.lhs, n);
      Rational acc = 1;
      for (unsigned i = 0; i < node.exponent; ++i) acc *= base;
      return acc;
    }
  }
  return 0;
}

int precedence(const Expression::Node& node) {
  using Kind = Expression::Kind;
  switch (node.kind) {
    case Kind::kAdd:
    case Kind::kSubtract: return 1;
    case Kind::kMultiply:
    case Kind::kDivide: return 2;
    case Kind::kNegate: return 3;
    case Kind::kPower: return 4;
    case Kind::kNumber: return node.value < 0 ? 3 : 5;
    case Kind::kVariable: return 5;
  }
  return 5;
}

void print_node(const Expression::Node& node, std::string& out);

void print_child(const Expression::Node& child, int min_precedence, std::string& out) {
  if (precedence(child) < min_precedence) {
    out += '(';
    print_node(child, out);
    out += ')';
  } else {
    print_node(child, out);
  }
}

void print_node(const Expression::Node& node, std::string& out) {
  using Kind = Expression::Kind;
  switch (node.kind) {
    case Kind::kNumber: {
      if (auto decimal = to_terminating_decimal(node.value)) {
        out += *decimal;
      } else {
        out += '(' + node.value.get_str() + ')';
      }
      return;
    }
    case Kind::kVariable: out += 'n'; return;
    case Kind::kNegate:
      out += '-';
      print_child(*node.lhs, 3, out);
      return;
    case Kind::kPower:
      print_child(*node.lhs, 5, out);
      out += '^' + std::to_string(node.exponent);
      return;
    default: break;
  }
  const int own = precedence(node);
  const char* op = node.kind == Kind::kAdd        ? " + "
                   : node.kind == Kind::kSubtract ? " - "
                   : node.kind == Kind::kMultiply ? "*"
                                                  : "/";
  print_child(*node.lhs, own, out);
  out += op;
  // Right operands of the same level keep their parentheses so the tree
  // shape survives a reparse.
  print_child(*node.rhs, own + 1, out);
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  Expression parse_all() {
    Expression e = parse_expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ShiftError(ErrorKind::kParse,
                     "expression: " + what + " at position " + std::to_string(offset_ + pos_),
                     offset_ + pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expression parse_expr() {
    Expression acc = parse_term();
    for (;;) {
      if (accept('+')) {
        acc = Expression::binary(Expression::Kind::kAdd, std::move(acc), parse_term());
      } else if (accept('-')) {
        acc = Expression::binary(Expression::Kind::kSubtract, std::move(acc), parse_term());
      } else {
        return acc;
      }
    }
  }

  Expression parse_term() {
    Expression acc = parse_unary();
    for (;;) {
      if (accept('*')) {
        acc = Expression::binary(Expression::Kind::kMultiply, std::move(acc), parse_unary());
      } else if (accept('/')) {
        acc = Expression::binary(Expression::Kind::kDivide, std::move(acc), parse_unary());
      } else {
        return acc;
      }
    }
  }

  Expression parse_unary() {
    if (accept('-')) return Expression::negate(parse_unary());
    return parse_power();
  }

  Expression parse_power() {
    Expression base = parse_primary();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 4) fail("exponent too large");
      return Expression::power(std::move(base), static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Expression parse_primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expression inner = parse_expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'n') {
      ++pos_;
      return Expression::variable();
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
        ++pos_;
      }
      auto value = parse_rational(text_.substr(start, pos_ - start));
      if (!value) {
        pos_ = start;
        fail("malformed number");
      }
      return Expression::number(*value);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression Expression::parse(std::string_view text, std::size_t position_offset) {
  return Parser(text, position_offset).parse_all();
}

Rational Expression::evaluate(const Rational& n) const { return eval_node(*node_, n); }

std::string Expression::to_string() const {
  std::string out;
  print_node(*node_, out);
  return out;
}

}  // namespace wshift
