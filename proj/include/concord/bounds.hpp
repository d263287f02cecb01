#pragma once

#include <optional>
#include <vector>

#include "concord/rational.hpp"

namespace concord {

struct Interval {
  Rational lo, hi;
  bool operator==(const Interval&) const = default;
};

// Conjunction prevision bounds for two conditionals:
// [max{x+y-1,0}, min{x,y}].
Interval frechet_two(const Rational& x, const Rational& y);

// n-ary conjunction: [max{sum - (n-1), 0}, min x_i].
Interval frechet_conjunction_n(const std::vector<Rational>& xs);

// n-ary disjunction: [max x_i, min{sum, 1}].
Interval frechet_disjunction_n(const std::vector<Rational>& xs);

// Coherent range of P(C_{n+1}) given mu_n = P(C_n) and x = P(E_{n+1}|H_{n+1}).
Interval conj_step_bounds(const Rational& mu_n, const Rational& x_next);

// Reverse inference: is (mu_n, x_next) a coherent extension of mu_next?
// Requires mu_n in [mu_next, 1] and x_next in [mu_next, 1 + mu_next - mu_n].
bool reverse_region_contains(const Rational& mu_next, const Rational& mu_n,
                             const Rational& x_next);

struct LambdaWeights {
  std::vector<Rational> lambda;  // nonnegative, sums to 1
};

// Unique convex weights on (1,1,1), (1,0,0), (0,1,0), (0,0,0) reproducing
// (mu_n, x_next, mu_next). Throws DomainError outside the region.
LambdaWeights lambda_decomposition(const Rational& mu_n, const Rational& x_next,
                                   const Rational& mu_next);

struct ThreeEventAssessment {
  Rational x1, x2, x3;
  Rational x12, x13, x23;
  std::optional<Rational> x123;
};

// Full inequality characterization of the coherent seven-component
// assessments; applies verbatim when the three antecedents coincide.
bool three_event_region_check(const ThreeEventAssessment& a);

// Coherent range of x123 given a coherent six-component prefix:
//   lo = max{0, x12+x13-x1, x12+x23-x2, x13+x23-x3}
//   hi = min{x12, x13, x23, 1-x1-x2-x3+x12+x13+x23}.
// Throws DomainError when the prefix itself is incoherent.
Interval three_event_extension_bounds(const ThreeEventAssessment& a);

// Closed-form solution of the reduced eight-point system; unique, all
// nonnegative, sums to 1. Throws DomainError outside the region.
LambdaWeights sigma_prime_solution(const ThreeEventAssessment& a);

}  // namespace concord
