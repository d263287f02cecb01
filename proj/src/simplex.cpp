#include "concord/simplex.hpp"

#include <cassert>
#include <stdexcept>

namespace concord {

namespace {

// Dense tableau over the columns of A (artificials included while phase 1
// runs). Row i stores B^{-1}A row plus rhs in the last slot.
class Tableau {
 public:
  Tableau(const LpProblem& p, int artificial_count)
      : m_(static_cast<int>(p.rows.size())),
        n_(static_cast<int>(p.cost.size()) + artificial_count),
        original_(static_cast<int>(p.cost.size())) {
    rows_.assign(m_, std::vector<Rational>(n_ + 1));
    basis_.resize(m_);
    flip_.assign(m_, false);
    for (int i = 0; i < m_; ++i) {
      bool flip = p.rhs[i] < 0;
      flip_[i] = flip;
      for (int j = 0; j < original_; ++j) {
        rows_[i][j] = flip ? -p.rows[i][j] : p.rows[i][j];
      }
      rows_[i][original_ + i] = 1;
      rows_[i][n_] = flip ? -p.rhs[i] : p.rhs[i];
      basis_[i] = original_ + i;
    }
  }

  // Reduced-cost row for cost vector c (artificials costed when phase1).
  void load_objective(const std::vector<Rational>& c, bool phase1) {
    z_.assign(n_ + 1, Rational(0));
    auto cost_of = [&](int j) -> Rational {
      if (phase1) return j >= original_ ? 1 : 0;
      return j < static_cast<int>(c.size()) ? c[j] : 0;
    };
    for (int j = 0; j <= n_; ++j) {
      Rational zj = j < n_ ? cost_of(j) : Rational(0);
      for (int i = 0; i < m_; ++i) zj -= cost_of(basis_[i]) * rows_[i][j];
      z_[j] = zj;
    }
    allow_artificials_ = phase1;
  }

  // One Bland step; false at optimum. Throws on unbounded.
  bool step() {
    int enter = -1;
    for (int j = 0; j < n_; ++j) {
      if (!allow_artificials_ && j >= original_) break;
      if (z_[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return false;

    int leave = -1;
    Rational best;
    for (int i = 0; i < m_; ++i) {
      if (rows_[i][enter] <= 0) continue;
      Rational ratio = rows_[i][n_] / rows_[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) throw std::runtime_error("unbounded LP");
    pivot(leave, enter);
    return true;
  }

  void pivot(int row, int col) {
    auto& pr = rows_[row];
    Rational inv = pr[col];
    for (auto& v : pr) v /= inv;
    for (int i = 0; i < m_; ++i) {
      if (i == row || rows_[i][col] == 0) continue;
      Rational f = rows_[i][col];
      for (int j = 0; j <= n_; ++j) rows_[i][j] -= f * pr[j];
    }
    if (z_[col] != 0) {
      Rational f = z_[col];
      for (int j = 0; j <= n_; ++j) z_[j] -= f * pr[j];
    }
    basis_[row] = col;
  }

  Rational basic_sum_of_artificials() const {
    Rational s = 0;
    for (int i = 0; i < m_; ++i)
      if (basis_[i] >= original_) s += rows_[i][n_];
    return s;
  }

  // After a zero-value phase 1, swap remaining artificials for original
  // columns; rows with no original pivot are redundant and get cleared of
  // their artificial by leaving it basic at zero (harmless: it can never
  // re-enter once phase 2 ignores artificial columns).
  void drive_out_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < original_) continue;
      assert(rows_[i][n_] == 0);
      for (int j = 0; j < original_; ++j) {
        if (rows_[i][j] != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(original_, Rational(0));
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < original_) x[basis_[i]] = rows_[i][n_];
    }
    return x;
  }

  // Dual multipliers for the phase-1 objective, mapped back through row
  // flips: y_i = 1 - (reduced cost of artificial i).
  std::vector<Rational> farkas() const {
    std::vector<Rational> y(m_);
    for (int i = 0; i < m_; ++i) {
      Rational yi = Rational(1) - z_[original_ + i];
      y[i] = flip_[i] ? -yi : yi;
    }
    return y;
  }

 private:
  int m_, n_, original_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> z_;
  std::vector<int> basis_;
  std::vector<bool> flip_;
  bool allow_artificials_ = true;
};

}  // namespace

LpSolution lp_solve(const LpProblem& p) {
  const int m = static_cast<int>(p.rows.size());
  if (static_cast<int>(p.rhs.size()) != m) throw std::invalid_argument("rhs size mismatch");
  for (const auto& row : p.rows) {
    if (row.size() != p.cost.size()) throw std::invalid_argument("row size mismatch");
  }

  Tableau t(p, m);
  std::vector<Rational> none;
  t.load_objective(none, /*phase1=*/true);
  while (t.step()) {
  }

  LpSolution out;
  if (t.basic_sum_of_artificials() != 0) {
    out.status = LpStatus::Infeasible;
    out.farkas = t.farkas();
    return out;
  }
  t.drive_out_artificials();
  t.load_objective(p.cost, /*phase1=*/false);
  try {
    while (t.step()) {
    }
  } catch (const std::runtime_error&) {
    out.status = LpStatus::Unbounded;
    return out;
  }

  out.status = LpStatus::Optimal;
  out.x = t.solution();
  out.value = 0;
  for (std::size_t j = 0; j < p.cost.size(); ++j) out.value += p.cost[j] * out.x[j];
  return out;
}

LpSolution lp_feasible(const std::vector<std::vector<Rational>>& rows,
                       const std::vector<Rational>& rhs) {
  LpProblem p;
  p.rows = rows;
  p.rhs = rhs;
  p.cost.assign(rows.empty() ? 0 : rows.front().size(), Rational(0));
  return lp_solve(p);
}

}  // namespace concord
