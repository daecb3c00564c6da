#pragma once

// Exact integer and rational arithmetic plus the row/triangle containers
// shared by every other part of the library.
//
// Nothing in here ever rounds. BigInt is GMP's mpz_class; Rational and
// DyadicRational are thin value types on top of it.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace interlace {

using BigInt = mpz_class;

/// Thrown when a container is built with the wrong shape.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a value lies outside an operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown for malformed user configuration (recurrence files, bad f/g).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

/// Exact rational number, always in lowest terms with a positive denominator.
/// Zero is represented uniquely as 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(BigInt value) : num_(std::move(value)), den_(1) {}
  Rational(BigInt num, BigInt den);

  /// Parses "p", "-p" or "p/q" (decimal). Throws DomainError on bad input.
  static Rational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  int sign() const { return sgn(num_); }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(Rational value) {
    value.num_ = -value.num_;
    return value;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  /// Decimal approximation with `digits` significant digits. Display only.
  std::string approx(int digits = 6) const;

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

/// Three-way comparison by cross-multiplication. No floating point.
std::strong_ordering rational_cmp(const Rational& a, const Rational& b);

/// Rebuilds a Rational from raw parts, normalizing. Used by the idempotence
/// property tests; equivalent to the two-argument constructor.
Rational normalize(const Rational& value);

// ---------------------------------------------------------------------------
// DyadicRational
// ---------------------------------------------------------------------------

/// numerator / 2^exp2. Normalized form: either exp2 == 0 or the numerator is
/// odd; zero is 0 / 2^0.
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(BigInt numerator, unsigned long exp2);
  explicit DyadicRational(long value) : DyadicRational(BigInt(value), 0) {}

  /// Throws DomainError if the denominator is not a power of two.
  static DyadicRational from_rational(const Rational& value);

  const BigInt& numerator() const { return num_; }
  unsigned long exp2() const { return exp2_; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return sgn(num_); }

  Rational to_rational() const;

  DyadicRational& operator+=(const DyadicRational& rhs);
  DyadicRational& operator*=(const DyadicRational& rhs);
  DyadicRational& operator*=(const BigInt& factor);

  friend DyadicRational operator+(DyadicRational a, const DyadicRational& b) { return a += b; }
  friend DyadicRational operator*(DyadicRational a, const DyadicRational& b) { return a *= b; }
  friend DyadicRational operator*(DyadicRational a, const BigInt& b) { return a *= b; }

  /// Divides by a positive integer whose odd part must divide the numerator.
  /// Throws DomainError when the quotient would not be dyadic.
  DyadicRational& div_exact(unsigned long divisor);

  friend bool operator==(const DyadicRational& a, const DyadicRational& b) {
    return a.exp2_ == b.exp2_ && a.num_ == b.num_;
  }

 private:
  void normalize();

  BigInt num_{0};
  unsigned long exp2_ = 0;
};

// ---------------------------------------------------------------------------
// Binomials
// ---------------------------------------------------------------------------

/// C(n, k) with C(n, k) = 0 for k < 0 or k > n. Requires n >= 0.
/// Small n is served from a process-wide Pascal cache; the cache is guarded
/// internally, so concurrent callers are safe.
BigInt binomial(long n, long k);

/// Fills the Pascal cache up to row n (clamped to the cache limit) so that
/// later parallel sections only take the shared read path.
void prepare_binomials(long n);

/// Largest n kept in the Pascal cache; larger rows go through mpz_bin_uiui.
inline constexpr long kPascalCacheLimit = 1024;

// ---------------------------------------------------------------------------
// Rows and triangles
// ---------------------------------------------------------------------------

/// Coefficients a_0..a_m of one polynomial of degree m.
class CoefficientRow {
 public:
  /// Degree is entries.size() - 1. Throws StructuralError on empty input.
  explicit CoefficientRow(std::vector<Rational> entries);
  CoefficientRow(std::initializer_list<Rational> entries)
      : CoefficientRow(std::vector<Rational>(entries)) {}

  int degree() const { return static_cast<int>(entries_.size()) - 1; }
  std::size_t size() const { return entries_.size(); }
  std::span<const Rational> entries() const { return entries_; }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }

  /// a_i, or zero for i outside [0, degree].
  const Rational& at_or_zero(long i) const;

  bool all_positive() const;

  /// Replaces one entry. Used for fault-injection experiments.
  void set(std::size_t i, Rational value) { entries_.at(i) = std::move(value); }

  friend bool operator==(const CoefficientRow&, const CoefficientRow&) = default;

 private:
  std::vector<Rational> entries_;
};

/// Validated constructor: entries.size() must equal degree + 1.
CoefficientRow make_row(int degree, std::vector<Rational> entries);

/// Rows 0..max_degree, row m having exactly m + 1 entries.
class CoefficientTriangle {
 public:
  CoefficientTriangle() = default;
  explicit CoefficientTriangle(std::vector<CoefficientRow> rows);

  /// Appends the next row; its degree must equal the current row count.
  void push_back(CoefficientRow row);

  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  int max_degree() const { return static_cast<int>(rows_.size()) - 1; }
  const CoefficientRow& row(std::size_t m) const { return rows_.at(m); }
  std::span<const CoefficientRow> rows() const { return rows_; }

  /// d_i(m) with the zero convention outside [0, m].
  const Rational& entry(long m, long i) const;

  void set(std::size_t m, std::size_t i, Rational value) { rows_.at(m).set(i, std::move(value)); }

  friend bool operator==(const CoefficientTriangle&, const CoefficientTriangle&) = default;

 private:
  std::vector<CoefficientRow> rows_;
};

/// Shared zero used by the out-of-range conventions.
const Rational& rational_zero();

}  // namespace interlace
