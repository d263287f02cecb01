#include "doctest.h"

#include <random>

#include "concord/simplex.hpp"

using namespace concord;

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

TEST_CASE("feasible system returns an exact vertex") {
  // x1 + x2 = 1, x1 - x2 = 1/3  ->  x = (2/3, 1/3)
  LpSolution r = lp_feasible({{1, 1}, {1, -1}}, {Rational(1), Rational(1, 3)});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.x[0] == Rational(2, 3));
  CHECK(r.x[1] == Rational(1, 3));
}

TEST_CASE("infeasible system yields an exact Farkas witness") {
  // x1 + x2 = 1 and x1 + x2 = 2 cannot both hold.
  std::vector<std::vector<Rational>> a = {{1, 1}, {1, 1}};
  std::vector<Rational> b = {Rational(1), Rational(2)};
  LpSolution r = lp_feasible(a, b);
  REQUIRE(r.status == LpStatus::Infeasible);
  REQUIRE(r.farkas.size() == 2);
  // y.A <= 0 columnwise, y.b > 0.
  for (std::size_t j = 0; j < 2; ++j) {
    Rational col = r.farkas[0] * a[0][j] + r.farkas[1] * a[1][j];
    CHECK(col <= 0);
  }
  CHECK(dot(r.farkas, b) > 0);
}

TEST_CASE("optimization reaches the exact optimum") {
  // min -x1 - 2 x2 st x1 + x2 + s = 1 -> x2 = 1, value -2.
  LpProblem p;
  p.rows = {{1, 1, 1}};
  p.rhs = {Rational(1)};
  p.cost = {Rational(-1), Rational(-2), Rational(0)};
  LpSolution r = lp_solve(p);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == Rational(-2));
  CHECK(r.x[1] == Rational(1));
}

TEST_CASE("degenerate and redundant rows terminate under Bland") {
  // Duplicated constraint leaves a redundant artificial; still solves.
  LpProblem p;
  p.rows = {{1, 1}, {1, 1}, {1, -1}};
  p.rhs = {Rational(1), Rational(1), Rational(0)};
  p.cost = {Rational(1), Rational(0)};
  LpSolution r = lp_solve(p);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.x[0] == Rational(1, 2));
  CHECK(r.x[1] == Rational(1, 2));
  CHECK(r.value == Rational(1, 2));
}

TEST_CASE("unbounded direction is detected") {
  LpProblem p;
  p.rows = {{1, -1}};
  p.rhs = {Rational(0)};
  p.cost = {Rational(-1), Rational(0)};
  LpSolution r = lp_solve(p);
  CHECK(r.status == LpStatus::Unbounded);
}

TEST_CASE("random convex-combination targets are recovered exactly") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coord(-4, 4);
  std::uniform_int_distribution<int> weight(0, 5);
  for (int round = 0; round < 50; ++round) {
    const int m = 6, d = 3;
    std::vector<std::vector<Rational>> pts(m, std::vector<Rational>(d));
    for (auto& p : pts) {
      for (auto& v : p) v = Rational(coord(rng), 4);
    }
    // Random convex combination gives a certainly-feasible target.
    std::vector<Rational> w(m);
    Rational total = 0;
    for (auto& x : w) {
      x = weight(rng);
      total += x;
    }
    if (total == 0) continue;
    for (auto& x : w) x /= total;
    std::vector<std::vector<Rational>> rows(d + 1, std::vector<Rational>(m));
    std::vector<Rational> rhs(d + 1);
    for (int i = 0; i < d; ++i) {
      for (int h = 0; h < m; ++h) rows[i][h] = pts[h][i];
      for (int h = 0; h < m; ++h) rhs[i] += w[h] * pts[h][i];
    }
    for (int h = 0; h < m; ++h) rows[d][h] = 1;
    rhs[d] = 1;
    LpSolution r = lp_feasible(rows, rhs);
    REQUIRE(r.status == LpStatus::Optimal);
    for (int i = 0; i <= d; ++i) CHECK(dot(rows[i], r.x) == rhs[i]);
    for (const auto& x : r.x) CHECK(x >= 0);
  }
}
