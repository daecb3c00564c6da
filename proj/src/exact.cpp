#include "interlace/exact.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <shared_mutex>

namespace interlace {

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw DomainError("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational Rational::parse(std::string_view text) {
  auto is_integer_literal = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  auto to_big = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return BigInt(std::string(s), 10);
  };

  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text)) throw DomainError("not a rational literal: '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(to_big(num_text));

  const auto den_text = text.substr(slash + 1);
  if (!is_integer_literal(den_text)) throw DomainError("not a rational literal: '" + std::string(text) + "'");
  return Rational(to_big(num_text), to_big(den_text));
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ -= rhs.num_;
  } else {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw DomainError("division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering rational_cmp(const Rational& a, const Rational& b) {
  // Denominators are positive, so cross-multiplication preserves order.
  const int c = a.den() == b.den() ? cmp(a.num(), b.num()) : cmp(a.num() * b.den(), b.num() * a.den());
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) { return rational_cmp(a, b); }

Rational normalize(const Rational& value) { return Rational(value.num(), value.den()); }

std::string Rational::str() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

std::string Rational::approx(int digits) const {
  if (num_ == 0) return "0";
  // Enough mantissa bits for the requested digits plus slack.
  const mp_bitcnt_t bits = static_cast<mp_bitcnt_t>(digits) * 4 + 64;
  mpf_class value(num_, bits);
  value /= mpf_class(den_, bits);
  char buf[96];
  gmp_snprintf(buf, sizeof buf, "%.*Fg", digits, value.get_mpf_t());
  return std::string(buf);
}

// ---------------------------------------------------------------------------
// DyadicRational
// ---------------------------------------------------------------------------

DyadicRational::DyadicRational(BigInt numerator, unsigned long exp2) : num_(std::move(numerator)), exp2_(exp2) {
  normalize();
}

void DyadicRational::normalize() {
  if (num_ == 0) {
    exp2_ = 0;
    return;
  }
  const unsigned long trailing = mpz_scan1(num_.get_mpz_t(), 0);
  const unsigned long shift = std::min(trailing, exp2_);
  if (shift > 0) {
    mpz_tdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), shift);
    exp2_ -= shift;
  }
}

DyadicRational DyadicRational::from_rational(const Rational& value) {
  const BigInt& den = value.den();
  const unsigned long twos = mpz_scan1(den.get_mpz_t(), 0);
  if (mpz_sizeinbase(den.get_mpz_t(), 2) != twos + 1) {
    throw DomainError("denominator of " + value.str() + " is not a power of two");
  }
  return DyadicRational(value.num(), twos);
}

Rational DyadicRational::to_rational() const {
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, exp2_);
  return Rational(num_, den);
}

DyadicRational& DyadicRational::operator+=(const DyadicRational& rhs) {
  if (exp2_ >= rhs.exp2_) {
    BigInt scaled;
    mpz_mul_2exp(scaled.get_mpz_t(), rhs.num_.get_mpz_t(), exp2_ - rhs.exp2_);
    num_ += scaled;
  } else {
    mpz_mul_2exp(num_.get_mpz_t(), num_.get_mpz_t(), rhs.exp2_ - exp2_);
    num_ += rhs.num_;
    exp2_ = rhs.exp2_;
  }
  normalize();
  return *this;
}

DyadicRational& DyadicRational::operator*=(const DyadicRational& rhs) {
  num_ *= rhs.num_;
  exp2_ += rhs.exp2_;
  normalize();
  return *this;
}

DyadicRational& DyadicRational::operator*=(const BigInt& factor) {
  num_ *= factor;
  normalize();
  return *this;
}

DyadicRational& DyadicRational::div_exact(unsigned long divisor) {
  if (divisor == 0) throw DomainError("division by zero");
  const unsigned long twos = static_cast<unsigned long>(__builtin_ctzl(divisor));
  const unsigned long odd = divisor >> twos;
  if (odd != 1) {
    if (!mpz_divisible_ui_p(num_.get_mpz_t(), odd)) {
      throw DomainError("quotient by " + std::to_string(divisor) + " is not dyadic");
    }
    mpz_divexact_ui(num_.get_mpz_t(), num_.get_mpz_t(), odd);
  }
  exp2_ += twos;
  normalize();
  return *this;
}

// ---------------------------------------------------------------------------
// Binomials
// ---------------------------------------------------------------------------

namespace {

class PascalCache {
 public:
  bool lookup(long n, long k, BigInt& out) {
    std::shared_lock lock(mutex_);
    if (n >= static_cast<long>(rows_.size())) return false;
    out = rows_[n][k];
    return true;
  }

  void grow_to(long n) {
    std::unique_lock lock(mutex_);
    if (rows_.empty()) rows_.push_back({BigInt(1)});
    while (static_cast<long>(rows_.size()) <= n) {
      const auto& prev = rows_.back();
      std::vector<BigInt> next(prev.size() + 1);
      next.front() = 1;
      next.back() = 1;
      for (std::size_t k = 1; k < prev.size(); ++k) next[k] = prev[k - 1] + prev[k];
      rows_.push_back(std::move(next));
    }
  }

 private:
  std::shared_mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

PascalCache& pascal_cache() {
  static PascalCache cache;
  return cache;
}

}  // namespace

BigInt binomial(long n, long k) {
  if (n < 0) throw DomainError("binomial with negative n = " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  if (n > kPascalCacheLimit) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
  }
  BigInt out;
  auto& cache = pascal_cache();
  if (!cache.lookup(n, k, out)) {
    cache.grow_to(n);
    cache.lookup(n, k, out);
  }
  return out;
}

void prepare_binomials(long n) { pascal_cache().grow_to(std::min(n, kPascalCacheLimit)); }

// ---------------------------------------------------------------------------
// Rows and triangles
// ---------------------------------------------------------------------------

const Rational& rational_zero() {
  static const Rational zero;
  return zero;
}

CoefficientRow::CoefficientRow(std::vector<Rational> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw StructuralError("coefficient row must have at least one entry");
}

const Rational& CoefficientRow::at_or_zero(long i) const {
  if (i < 0 || i > degree()) return rational_zero();
  return entries_[static_cast<std::size_t>(i)];
}

bool CoefficientRow::all_positive() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r.sign() > 0; });
}

CoefficientRow make_row(int degree, std::vector<Rational> entries) {
  if (entries.empty()) throw StructuralError("coefficient row must have at least one entry");
  if (degree < 0 || entries.size() != static_cast<std::size_t>(degree) + 1) {
    throw StructuralError("row of degree " + std::to_string(degree) + " needs " + std::to_string(degree + 1) +
                          " entries, got " + std::to_string(entries.size()));
  }
  return CoefficientRow(std::move(entries));
}

CoefficientTriangle::CoefficientTriangle(std::vector<CoefficientRow> rows) {
  rows_.reserve(rows.size());
  for (auto& row : rows) push_back(std::move(row));
}

void CoefficientTriangle::push_back(CoefficientRow row) {
  if (row.degree() != static_cast<int>(rows_.size())) {
    throw StructuralError("triangle row " + std::to_string(rows_.size()) + " has degree " +
                          std::to_string(row.degree()));
  }
  rows_.push_back(std::move(row));
}

const Rational& CoefficientTriangle::entry(long m, long i) const {
  if (m < 0 || m >= static_cast<long>(rows_.size())) return rational_zero();
  return rows_[static_cast<std::size_t>(m)].at_or_zero(i);
}

}  // namespace interlace
