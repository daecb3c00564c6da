#include "interlace/recurrence_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace interlace {

ParseError::ParseError(int line, int column, const std::string& message)
    : ConfigError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      detail_(message) {}

struct Expression::Node {
  enum class Kind { Literal, N, K, Neg, Add, Sub, Mul, Div };
  Kind kind = Kind::Literal;
  Rational value;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Kind = Expression::Node::Kind;

NodePtr make(Kind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto node = std::make_shared<Expression::Node>();
  node->kind = kind;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return node;
}

class Parser {
 public:
  Parser(std::string_view text, int line, int column_offset)
      : text_(text), line_(line), column_offset_(column_offset) {}

  NodePtr parse() {
    NodePtr root = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line_, column_offset_ + static_cast<int>(pos_) + 1, message);
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

  NodePtr expr() {
    NodePtr lhs = term();
    while (true) {
      if (accept('+')) {
        lhs = make(Kind::Add, lhs, term());
      } else if (accept('-')) {
        lhs = make(Kind::Sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    while (true) {
      if (accept('*')) {
        lhs = make(Kind::Mul, lhs, unary());
      } else if (accept('/')) {
        lhs = make(Kind::Div, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Kind::Neg, unary());
    if (accept('+')) return unary();
    return primary();
  }

  NodePtr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected a number, n, k or '('");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'n' || c == 'k') {
      ++pos_;
      if (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        fail("unknown identifier");
      }
      return make(c == 'n' ? Kind::N : Kind::K);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      auto node = std::make_shared<Expression::Node>();
      node->kind = Kind::Literal;
      node->value = Rational(BigInt(std::string(text_.substr(start, pos_ - start)), 10));
      return node;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) fail("unknown identifier (only n and k are allowed)");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  int line_;
  int column_offset_;
  std::size_t pos_ = 0;
};

Rational eval(const Expression::Node& node, long n, long k) {
  switch (node.kind) {
    case Kind::Literal: return node.value;
    case Kind::N: return Rational(n);
    case Kind::K: return Rational(k);
    case Kind::Neg: return -eval(*node.lhs, n, k);
    case Kind::Add: return eval(*node.lhs, n, k) + eval(*node.rhs, n, k);
    case Kind::Sub: return eval(*node.lhs, n, k) - eval(*node.rhs, n, k);
    case Kind::Mul: return eval(*node.lhs, n, k) * eval(*node.rhs, n, k);
    case Kind::Div: {
      const Rational den = eval(*node.rhs, n, k);
      if (den.is_zero()) {
        throw ConfigError("division by zero at n = " + std::to_string(n) + ", k = " + std::to_string(k));
      }
      return eval(*node.lhs, n, k) / den;
    }
  }
  return {};
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Expression Expression::parse(std::string_view text, int line) {
  Expression e;
  e.root_ = Parser(text, line, 0).parse();
  e.source_ = std::string(strip(text));
  return e;
}

Rational Expression::evaluate(long n, long k) const { return eval(*root_, n, k); }

TriangularRecurrence parse_recurrence(std::string_view text, const std::string& default_name) {
  TriangularRecurrence rec;
  rec.name = default_name;
  bool have_f = false;
  bool have_g = false;

  int line_no = 0;
  std::size_t cursor = 0;
  while (cursor <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', cursor), text.size());
    std::string_view line = text.substr(cursor, eol - cursor);
    cursor = eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (strip(line).empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, 1, "expected 'key = value'");
    const std::string_view key = strip(line.substr(0, eq));
    const std::string_view raw_value = line.substr(eq + 1);
    const std::string_view value = strip(raw_value);
    const auto lead = raw_value.find_first_not_of(" \t");
    const int value_column = static_cast<int>(eq + 1 + (lead == std::string_view::npos ? 0 : lead)) + 1;
    if (value.empty()) throw ParseError(line_no, static_cast<int>(eq) + 2, "missing value for '" + std::string(key) + "'");

    auto parse_expr = [&](std::string_view src) {
      try {
        return Expression::parse(src, line_no);
      } catch (const ParseError& e) {
        throw ParseError(line_no, value_column + e.column() - 1, std::string(key) + ": " + e.detail());
      }
    };

    if (key == "name") {
      rec.name = std::string(value);
    } else if (key == "f") {
      rec.f = [expr = parse_expr(value)](long n, long k) { return expr.evaluate(n, k); };
      have_f = true;
    } else if (key == "g") {
      rec.g = [expr = parse_expr(value)](long n, long k) { return expr.evaluate(n, k); };
      have_g = true;
    } else if (key == "support_start") {
      Rational s;
      try {
        s = Rational::parse(value);
      } catch (const DomainError&) {
        throw ParseError(line_no, value_column, "support_start must be a non-negative integer");
      }
      if (!s.is_integer() || s.sign() < 0 || s > Rational(1'000'000)) {
        throw ParseError(line_no, value_column, "support_start must be a non-negative integer");
      }
      rec.support_start = static_cast<int>(s.num().get_si());
    } else if (key == "base") {
      try {
        const Rational b = Rational::parse(value);
        rec.base = CoefficientRow{b};
      } catch (const DomainError&) {
        throw ParseError(line_no, value_column, "base must be a rational literal such as 1 or 3/2");
      }
    } else {
      throw ParseError(line_no, 1, "unknown key '" + std::string(key) + "'");
    }
  }

  if (!have_f) throw ParseError(line_no, 1, "missing 'f = ...'");
  if (!have_g) throw ParseError(line_no, 1, "missing 'g = ...'");
  return rec;
}

TriangularRecurrence load_recurrence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open recurrence file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_recurrence(buffer.str(), path);
}

}  // namespace interlace
