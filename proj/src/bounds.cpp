#include "concord/bounds.hpp"

#include <algorithm>

#include "concord/logic.hpp"

namespace concord {

namespace {

void require_unit(const Rational& r, const char* what) {
  if (!in_unit_interval(r)) {
    throw DomainError(std::string(what) + " outside [0,1]: " + format_rational(r));
  }
}

}  // namespace

Interval frechet_two(const Rational& x, const Rational& y) {
  require_unit(x, "x");
  require_unit(y, "y");
  return {std::max(x + y - 1, Rational(0)), std::min(x, y)};
}

Interval frechet_conjunction_n(const std::vector<Rational>& xs) {
  if (xs.empty()) throw DomainError("empty assessment list");
  Rational sum = 0;
  Rational low = 1;
  for (const auto& x : xs) {
    require_unit(x, "x_i");
    sum += x;
    low = std::min(low, x);
  }
  return {std::max(sum - static_cast<int>(xs.size() - 1), Rational(0)), low};
}

Interval frechet_disjunction_n(const std::vector<Rational>& xs) {
  if (xs.empty()) throw DomainError("empty assessment list");
  Rational sum = 0;
  Rational high = 0;
  for (const auto& x : xs) {
    require_unit(x, "x_i");
    sum += x;
    high = std::max(high, x);
  }
  return {high, std::min(sum, Rational(1))};
}

Interval conj_step_bounds(const Rational& mu_n, const Rational& x_next) {
  return frechet_two(mu_n, x_next);
}

bool reverse_region_contains(const Rational& mu_next, const Rational& mu_n,
                             const Rational& x_next) {
  require_unit(mu_next, "mu_{n+1}");
  require_unit(mu_n, "mu_n");
  require_unit(x_next, "x_{n+1}");
  return mu_n >= mu_next && x_next >= mu_next && x_next <= 1 + mu_next - mu_n;
}

LambdaWeights lambda_decomposition(const Rational& mu_n, const Rational& x_next,
                                   const Rational& mu_next) {
  require_unit(mu_n, "mu_n");
  require_unit(x_next, "x_{n+1}");
  require_unit(mu_next, "mu_{n+1}");
  LambdaWeights w;
  w.lambda = {mu_next, mu_n - mu_next, x_next - mu_next, 1 - mu_n - x_next + mu_next};
  for (const auto& l : w.lambda) {
    if (l < 0) throw DomainError("point outside the conjunction tetrahedron");
  }
  return w;
}

namespace {

bool prefix_conditions(const ThreeEventAssessment& a) {
  const Rational zero(0), one(1);
  auto unit = [&](const Rational& r) { return r >= zero && r <= one; };
  if (!unit(a.x1) || !unit(a.x2) || !unit(a.x3)) return false;
  if (!unit(a.x12) || !unit(a.x13) || !unit(a.x23)) return false;
  if (a.x12 < std::max({a.x1 + a.x2 - 1, a.x13 + a.x23 - a.x3, zero}) ||
      a.x12 > std::min(a.x1, a.x2)) {
    return false;
  }
  if (a.x13 < std::max({a.x1 + a.x3 - 1, a.x12 + a.x23 - a.x2, zero}) ||
      a.x13 > std::min(a.x1, a.x3)) {
    return false;
  }
  if (a.x23 < std::max({a.x2 + a.x3 - 1, a.x12 + a.x13 - a.x1, zero}) ||
      a.x23 > std::min(a.x2, a.x3)) {
    return false;
  }
  if (1 - a.x1 - a.x2 - a.x3 + a.x12 + a.x13 + a.x23 < 0) return false;
  return true;
}

Interval triple_bounds(const ThreeEventAssessment& a) {
  Rational lo = std::max({Rational(0), a.x12 + a.x13 - a.x1, a.x12 + a.x23 - a.x2,
                          a.x13 + a.x23 - a.x3});
  Rational hi = std::min({a.x12, a.x13, a.x23, 1 - a.x1 - a.x2 - a.x3 + a.x12 + a.x13 + a.x23});
  return {std::move(lo), std::move(hi)};
}

}  // namespace

bool three_event_region_check(const ThreeEventAssessment& a) {
  if (!a.x123) throw DomainError("x123 missing");
  if (!in_unit_interval(*a.x123)) return false;
  if (!prefix_conditions(a)) return false;
  Interval b = triple_bounds(a);
  return *a.x123 >= b.lo && *a.x123 <= b.hi;
}

Interval three_event_extension_bounds(const ThreeEventAssessment& a) {
  Interval b = triple_bounds(a);
  if (!prefix_conditions(a) || b.lo > b.hi) {
    throw DomainError("incoherent six-component prefix");
  }
  return b;
}

LambdaWeights sigma_prime_solution(const ThreeEventAssessment& a) {
  if (!a.x123) throw DomainError("x123 missing");
  const Rational& t = *a.x123;
  LambdaWeights w;
  w.lambda = {
      t,
      a.x12 - t,
      a.x13 - t,
      a.x1 - a.x12 - a.x13 + t,
      a.x23 - t,
      a.x2 - a.x12 - a.x23 + t,
      a.x3 - a.x13 - a.x23 + t,
      1 - a.x1 - a.x2 - a.x3 + a.x12 + a.x13 + a.x23 - t,
  };
  for (const auto& l : w.lambda) {
    if (l < 0) throw DomainError("assessment outside the coherent region");
  }
  return w;
}

}  // namespace concord
