#include "interlace/sturm.hpp"

#include <utility>

namespace interlace {

namespace {

int degree_of(const RationalPoly& p) { return static_cast<int>(p.size()) - 1; }

RationalPoly make_monic(RationalPoly p) {
  if (p.empty()) return p;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

// Quotient and remainder by schoolbook long division.
std::pair<RationalPoly, RationalPoly> divide(const RationalPoly& a, const RationalPoly& b) {
  if (b.empty()) throw DomainError("polynomial division by zero");
  RationalPoly rem = trim(a);
  if (degree_of(rem) < degree_of(b)) return {RationalPoly{}, rem};
  RationalPoly quot(static_cast<std::size_t>(degree_of(rem) - degree_of(b) + 1));
  const Rational& lead = b.back();
  while (!rem.empty() && degree_of(rem) >= degree_of(b)) {
    const auto shift = static_cast<std::size_t>(degree_of(rem) - degree_of(b));
    const Rational factor = rem.back() / lead;
    quot[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= factor * b[i];
    rem.pop_back();  // leading term cancels exactly
    rem = trim(std::move(rem));
  }
  return {trim(std::move(quot)), rem};
}

int sign_variations(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

RationalPoly trim(RationalPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

RationalPoly derivative(const RationalPoly& p) {
  RationalPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Rational(static_cast<long>(i)));
  return trim(std::move(out));
}

RationalPoly poly_rem(const RationalPoly& a, const RationalPoly& b) { return divide(a, trim(b)).second; }

RationalPoly poly_quot(const RationalPoly& a, const RationalPoly& b) { return divide(a, trim(b)).first; }

RationalPoly poly_gcd(RationalPoly a, RationalPoly b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    RationalPoly r = divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a));
}

RationalPoly square_free_part(const RationalPoly& p) {
  const RationalPoly q = trim(p);
  if (q.empty()) throw DomainError("square-free part of the zero polynomial");
  const RationalPoly g = poly_gcd(q, derivative(q));
  return make_monic(divide(q, g).first);
}

std::vector<RationalPoly> sturm_chain(const RationalPoly& p) {
  std::vector<RationalPoly> chain;
  chain.push_back(trim(p));
  if (chain.front().empty()) throw DomainError("Sturm chain of the zero polynomial");
  RationalPoly d = derivative(chain.front());
  if (d.empty()) return chain;
  chain.push_back(std::move(d));
  while (true) {
    RationalPoly r = divide(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

SturmResult sturm_real_roots(std::span<const Rational> coefficients) {
  const RationalPoly p = trim(RationalPoly(coefficients.begin(), coefficients.end()));
  if (p.empty()) throw DomainError("sturm_real_roots: zero polynomial");

  SturmResult result;
  result.degree = degree_of(p);
  const RationalPoly q = square_free_part(p);
  result.square_free_degree = degree_of(q);

  std::vector<int> at_neg_inf;
  std::vector<int> at_pos_inf;
  for (const auto& s : sturm_chain(q)) {
    const int lead = s.back().sign();
    at_pos_inf.push_back(lead);
    at_neg_inf.push_back(degree_of(s) % 2 == 0 ? lead : -lead);
  }
  result.real_root_count = sign_variations(at_neg_inf) - sign_variations(at_pos_inf);
  result.all_real = result.real_root_count == result.square_free_degree;
  return result;
}

}  // namespace interlace
