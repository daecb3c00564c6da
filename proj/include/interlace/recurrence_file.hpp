#pragma once

// Declarative recurrence files.
//
//   # comment
//   name  = whitney-like
//   f     = 1 + 2*k
//   g     = 1
//   support_start = 1      # optional, default 0
//   base  = 1              # optional rational, default 1
//
// f and g are rational expressions in n and k built from integer literals,
// + - * /, unary minus and parentheses.

#include <memory>
#include <string>
#include <string_view>

#include "interlace/criterion.hpp"

namespace interlace {

/// Parse failure with 1-based line/column of the offending token.
class ParseError : public ConfigError {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  int line_;
  int column_;
  std::string detail_;
};

/// Compiled expression in n and k. Cheap to copy; evaluation is pure.
class Expression {
 public:
  struct Node;

  /// Throws ParseError; `line` is used only for diagnostics.
  static Expression parse(std::string_view text, int line = 1);

  /// Throws ConfigError on division by zero.
  Rational evaluate(long n, long k) const;

  const std::string& source() const { return source_; }

 private:
  std::shared_ptr<const Node> root_;
  std::string source_;
};

TriangularRecurrence parse_recurrence(std::string_view text, const std::string& default_name = "custom");
TriangularRecurrence load_recurrence_file(const std::string& path);

}  // namespace interlace
