#include "wshift/dsl.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "wshift/error.hpp"

namespace wshift {
namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  WeightSequence parse() {
    keyword("prefix");
    expect('=');
    expect('[');
    std::vector<Rational> prefix;
    prefix.push_back(rational());
    while (accept(',')) prefix.push_back(rational());
    expect(']');

    Tail tail = NoTail{};
    std::size_t horizon = WeightSequence::kDefaultHorizon;
    bool seen_tail = false;
    bool seen_horizon = false;
    while (accept(';')) {
      skip_space();
      if (!seen_tail && !seen_horizon && peek_word("tail")) {
        keyword("tail");
        expect('=');
        tail = parse_tail();
        seen_tail = true;
      } else if (!seen_horizon && peek_word("horizon")) {
        keyword("horizon");
        expect('=');
        horizon = integer();
        if (horizon == 0) fail("horizon must be positive");
        seen_horizon = true;
      } else {
        fail(seen_horizon ? "nothing may follow the horizon clause"
                          : "expected 'tail' or 'horizon'");
      }
    }
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing text");
    return WeightSequence(std::move(prefix), std::move(tail), horizon);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ShiftError(ErrorKind::kParse, what + " at position " + std::to_string(pos_), pos_);
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

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek_word(std::string_view word) const {
    return text_.substr(pos_, word.size()) == word;
  }

  void keyword(std::string_view word) {
    skip_space();
    if (!peek_word(word)) fail("expected '" + std::string(word) + "'");
    pos_ += word.size();
  }

  std::string_view literal_token() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '.' ||
          ((c == '-' || c == '+') && pos_ == start)) {
        ++pos_;
      } else {
        break;
      }
    }
    return text_.substr(start, pos_ - start);
  }

  Rational rational() {
    const std::size_t start = pos_;
    const std::string_view token = literal_token();
    auto value = parse_rational(token);
    if (!value) {
      pos_ = start;
      skip_space();
      fail("expected a rational number");
    }
    return *value;
  }

  std::size_t integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 9) {
      pos_ = start;
      fail("integer too large");
    }
    return std::stoul(digits);
  }

  Tail parse_tail() {
    skip_space();
    if (peek_word("const")) {
      keyword("const");
      expect('(');
      ConstantTail tail{rational()};
      expect(')');
      return tail;
    }
    if (peek_word("expr")) {
      keyword("expr");
      expect('(');
      const std::size_t start = pos_;
      int depth = 1;
      while (pos_ < text_.size() && depth > 0) {
        if (text_[pos_] == '(') ++depth;
        if (text_[pos_] == ')') --depth;
        if (depth > 0) ++pos_;
      }
      if (depth != 0) fail("unterminated expr(");
      Expression expr = Expression::parse(text_.substr(start, pos_ - start), start);
      ++pos_;  // ')'
      return ExpressionTail{std::move(expr)};
    }
    fail("expected 'const(' or 'expr('");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

WeightSequence parse_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string print_spec(const WeightSequence& w) {
  std::string out = "prefix=[";
  for (std::size_t i = 0; i < w.prefix().size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(w.prefix()[i]);
  }
  out += ']';
  if (const auto* c = std::get_if<ConstantTail>(&w.tail())) {
    out += "; tail=const(" + to_string(c->value) + ')';
  } else if (const auto* e = std::get_if<ExpressionTail>(&w.tail())) {
    out += "; tail=expr(" + e->expr.to_string() + ')';
  }
  if (w.horizon() != WeightSequence::kDefaultHorizon) {
    out += "; horizon=" + std::to_string(w.horizon());
  }
  return out;
}

}  // namespace wshift
