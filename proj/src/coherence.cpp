#include "concord/coherence.hpp"

#include <algorithm>
#include <stdexcept>

namespace concord {

PrevisionSymbol quantity_symbol(const Quantity& q) {
  if (q.op == CrqTable::Op::Qc) throw DomainError("quasi conjunctions are events, not quantities");
  return {q.op == CrqTable::Op::Conj ? PrevisionSymbol::Kind::Conj : PrevisionSymbol::Kind::Disj,
          q.members, false};
}

CrqTable quantity_table(SpacePtr space, const Quantity& q) {
  return q.op == CrqTable::Op::Conj ? conjunction_table(std::move(space), q.members)
                                    : disjunction_table(std::move(space), q.members);
}

Rational CoherenceProblem::target_of(int qi) const {
  auto v = assessment.find(quantity_symbol(quantities[qi]));
  if (!v) throw MissingSymbolError("no assessed value for quantity " +
                                   quantity_symbol(quantities[qi]).str());
  return *v;
}

CoherenceProblem conditionals_problem(SpacePtr space, const std::vector<Rational>& probs) {
  if (static_cast<int>(probs.size()) != space->family_size()) {
    throw DomainError("assessment arity mismatch");
  }
  CoherenceProblem p;
  p.space = std::move(space);
  for (std::size_t i = 0; i < probs.size(); ++i) {
    Quantity q{CrqTable::Op::Conj, IndexSet::single(static_cast<int>(i))};
    p.quantities.push_back(q);
    p.assessment.set(quantity_symbol(q), probs[i]);
  }
  return p;
}

SigmaSystem build_sigma(const CoherenceProblem& p, const std::vector<int>& active) {
  if (active.empty()) throw DomainError("no active quantities");
  IndexSet scope;
  std::vector<CrqTable> tables;
  tables.reserve(active.size());
  for (int qi : active) {
    scope = scope | p.quantities[qi].members;
    tables.push_back(instantiate(quantity_table(p.space, p.quantities[qi]), p.assessment));
  }

  SigmaSystem s;
  for (int qi : active) s.target.push_back(p.target_of(qi));
  for (std::size_t h = 0; h < p.space->cells.size(); ++h) {
    if (!p.space->in_h_disjunction(h, scope)) continue;  // the C0 region of the active family
    std::vector<Rational> point;
    std::vector<char> in_h;
    point.reserve(active.size());
    for (std::size_t k = 0; k < active.size(); ++k) {
      point.push_back(tables[k].number_at(h));
      in_h.push_back(p.space->in_h_disjunction(h, p.quantities[active[k]].members) ? 1 : 0);
    }
    s.points.push_back(std::move(point));
    s.in_h.push_back(std::move(in_h));
    s.cell_of_point.push_back(h);
  }
  return s;
}

SigmaSystem build_sigma(const CoherenceProblem& p) {
  std::vector<int> all(p.quantities.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return build_sigma(p, all);
}

namespace {

// Rows of the equality system: one per coordinate plus the normalization.
LpProblem sigma_lp(const SigmaSystem& s) {
  const std::size_t n = s.target.size();
  const std::size_t m = s.points.size();
  LpProblem lp;
  lp.rows.assign(n + 1, std::vector<Rational>(m));
  for (std::size_t h = 0; h < m; ++h) {
    for (std::size_t i = 0; i < n; ++i) lp.rows[i][h] = s.points[h][i];
    lp.rows[n][h] = 1;
  }
  lp.rhs = s.target;
  lp.rhs.push_back(1);
  lp.cost.assign(m, Rational(0));
  return lp;
}

void verify_solution(const SigmaSystem& s, const std::vector<Rational>& lambda) {
  Rational total = 0;
  for (const auto& l : lambda) {
    if (l < 0) throw std::logic_error("negative simplex weight");
    total += l;
  }
  if (total != 1) throw std::logic_error("simplex weights do not sum to 1");
  for (std::size_t i = 0; i < s.target.size(); ++i) {
    Rational acc = 0;
    for (std::size_t h = 0; h < s.points.size(); ++h) acc += lambda[h] * s.points[h][i];
    if (acc != s.target[i]) throw std::logic_error("simplex solution fails an equality");
  }
}

Rational max_mass_with_solution(const SigmaSystem& s, int column, std::vector<Rational>* solution) {
  LpProblem lp = sigma_lp(s);
  for (std::size_t h = 0; h < s.points.size(); ++h) {
    lp.cost[h] = s.in_h[h][column] ? Rational(-1) : Rational(0);
  }
  LpSolution r = lp_solve(lp);
  if (r.status != LpStatus::Optimal) throw DomainError("infeasible system in max_mass");
  if (solution) *solution = r.x;
  return -r.value;
}

}  // namespace

FeasibilityResult solve_feasible(const SigmaSystem& s) {
  LpSolution r = lp_solve(sigma_lp(s));
  FeasibilityResult out;
  if (r.status != LpStatus::Optimal) {
    out.feasible = false;
    out.certificate = r.farkas;
    return out;
  }
  verify_solution(s, r.x);
  out.feasible = true;
  out.lambda = r.x;
  return out;
}

Rational max_mass(const SigmaSystem& s, int column) {
  return max_mass_with_solution(s, column, nullptr);
}

namespace {

std::vector<int> compute_I0_seeded(const SigmaSystem& s, std::vector<std::vector<Rational>> known) {
  const int n = static_cast<int>(s.target.size());
  std::vector<int> i0;
  for (int i = 0; i < n; ++i) {
    auto positive = [&](const std::vector<Rational>& sol) {
      for (std::size_t h = 0; h < s.points.size(); ++h) {
        if (s.in_h[h][i] && sol[h] > 0) return true;
      }
      return false;
    };
    if (std::any_of(known.begin(), known.end(), positive)) continue;
    std::vector<Rational> sol;
    Rational m = max_mass_with_solution(s, i, &sol);
    if (m == 0) {
      i0.push_back(i);
    } else {
      known.push_back(std::move(sol));
    }
  }
  return i0;
}

}  // namespace

std::vector<int> compute_I0(const SigmaSystem& s) {
  return compute_I0_seeded(s, {});
}

CoherenceVerdict check_coherence(const CoherenceProblem& p) {
  CoherenceVerdict verdict;
  std::vector<int> active(p.quantities.size());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = static_cast<int>(i);

  while (true) {
    SigmaSystem s = build_sigma(p, active);
    FeasibilityResult fr = solve_feasible(s);
    CoherenceIteration it;
    it.active = active;
    it.solvable = fr.feasible;
    if (!fr.feasible) {
      verdict.trace.push_back(std::move(it));
      verdict.coherent = false;
      return verdict;
    }
    std::vector<int> i0_local = compute_I0_seeded(s, {fr.lambda});
    it.lambda = std::move(fr.lambda);
    it.cells = std::move(s.cell_of_point);
    for (int j : i0_local) it.i0.push_back(active[j]);
    std::vector<int> next = it.i0;
    verdict.trace.push_back(std::move(it));
    if (next.empty()) {
      verdict.coherent = true;
      return verdict;
    }
    // Some antecedent always carries mass, so the recursion must shrink.
    if (next.size() >= active.size()) throw std::logic_error("I0 failed to shrink the family");
    active = std::move(next);
  }
}

CoherenceVerdict check_coherence_subsets(const CoherenceProblem& p, int guard) {
  const int n = static_cast<int>(p.quantities.size());
  if (n > guard) throw DomainError("family too large for the subset oracle");
  CoherenceVerdict verdict;
  verdict.coherent = true;
  for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) subset.push_back(i);
    }
    SigmaSystem s = build_sigma(p, subset);
    FeasibilityResult fr = solve_feasible(s);
    if (!fr.feasible) {
      CoherenceIteration it;
      it.active = subset;
      it.solvable = false;
      verdict.trace.push_back(std::move(it));
      verdict.coherent = false;
      return verdict;
    }
  }
  return verdict;
}

namespace {

struct RatioLpData {
  std::vector<std::size_t> cells;           // kept cells (H of active+target)
  std::vector<std::vector<Rational>> cols;  // per active quantity, instantiated
  std::vector<char> in_ht;                  // per kept cell
  std::vector<Rational> v;                  // target value where in_ht
};

RatioLpData ratio_data(const CoherenceProblem& base, const Quantity& target,
                       const std::vector<int>& active) {
  RatioLpData d;
  IndexSet scope = target.members;
  std::vector<CrqTable> tables;
  for (int qi : active) {
    scope = scope | base.quantities[qi].members;
    tables.push_back(instantiate(quantity_table(base.space, base.quantities[qi]), base.assessment));
  }
  CrqTable ttable = quantity_table(base.space, target);

  for (std::size_t h = 0; h < base.space->cells.size(); ++h) {
    if (!base.space->in_h_disjunction(h, scope)) continue;
    d.cells.push_back(h);
    bool in_ht = base.space->in_h_disjunction(h, target.members);
    d.in_ht.push_back(in_ht ? 1 : 0);
    if (in_ht) {
      // Determined part of the target column: entries here involve only
      // proper-subset symbols, which the base assessment must cover.
      const CrqValue& e = ttable.entries[h];
      if (e.is_number()) {
        d.v.push_back(e.number);
      } else {
        auto val = base.assessment.find(e.sym);
        if (!val) throw MissingSymbolError("missing value for symbol " + e.sym.str());
        d.v.push_back(e.tag == CrqValue::Tag::OneMinusSym ? Rational(1) - *val : *val);
      }
    } else {
      d.v.push_back(0);  // carries the unknown; handled by the mass equation
    }
  }
  d.cols.resize(active.size());
  for (std::size_t k = 0; k < active.size(); ++k) {
    for (std::size_t c = 0; c < d.cells.size(); ++c) {
      d.cols[k].push_back(tables[k].number_at(d.cells[c]));
    }
  }
  return d;
}

// Optimal value of the target prevision over the solvable extensions at this
// level. The prevision equation reads sum(v*lambda) = z * mass(H_t); when a
// solution can put zero mass on H_t, every z in [0,1] solves the level and
// the bound is the unit-interval endpoint. Otherwise the fractional
// objective sum(v*lambda)/mass(H_t) is linearized by normalizing the H_t
// mass to 1.
Rational ratio_optimum(const CoherenceProblem& base, const Quantity& target,
                       const std::vector<int>& active, bool maximize) {
  RatioLpData d = ratio_data(base, target, active);
  const std::size_t m = d.cells.size();
  const std::size_t n = active.size();

  {
    LpProblem mass;  // min mass(H_t) over the level's solutions
    mass.rows.assign(n + 1, std::vector<Rational>(m, Rational(0)));
    mass.rhs.assign(n + 1, Rational(0));
    for (std::size_t k = 0; k < n; ++k) {
      mass.rows[k] = d.cols[k];
      mass.rhs[k] = base.target_of(active[k]);
    }
    mass.rows[n].assign(m, Rational(1));
    mass.rhs[n] = 1;
    mass.cost.assign(m, Rational(0));
    for (std::size_t c = 0; c < m; ++c) {
      if (d.in_ht[c]) mass.cost[c] = 1;
    }
    LpSolution r = lp_solve(mass);
    if (r.status != LpStatus::Optimal) throw std::logic_error("mass LP infeasible");
    if (r.value == 0) return maximize ? Rational(1) : Rational(0);
  }

  LpProblem lp;  // variables: sigma_0..sigma_{m-1}, tau
  lp.rows.assign(n + 2, std::vector<Rational>(m + 1, Rational(0)));
  lp.rhs.assign(n + 2, Rational(0));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t c = 0; c < m; ++c) lp.rows[k][c] = d.cols[k][c];
    lp.rows[k][m] = -base.target_of(active[k]);
  }
  for (std::size_t c = 0; c < m; ++c) {
    lp.rows[n][c] = 1;
    lp.rows[n + 1][c] = d.in_ht[c] ? 1 : 0;
  }
  lp.rows[n][m] = -1;
  lp.rhs[n + 1] = 1;
  lp.cost.assign(m + 1, Rational(0));
  for (std::size_t c = 0; c < m; ++c) {
    if (d.in_ht[c]) lp.cost[c] = maximize ? -d.v[c] : d.v[c];
  }

  LpSolution r = lp_solve(lp);
  if (r.status != LpStatus::Optimal) throw std::logic_error("ratio LP failed");
  return maximize ? -r.value : r.value;
}

Endpoint refine_endpoint(const CoherenceProblem& base, const Quantity& target, bool maximize) {
  const int target_index = static_cast<int>(base.quantities.size());
  std::vector<int> active(base.quantities.size());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = static_cast<int>(i);

  std::optional<Rational> prev;
  const int cap = static_cast<int>(base.quantities.size()) + 8;
  for (int iter = 0; iter < cap; ++iter) {
    Rational cand = ratio_optimum(base, target, active, maximize);
    if (prev) cand = maximize ? std::min(cand, *prev) : std::max(cand, *prev);

    CoherenceProblem augmented = base;
    augmented.quantities.push_back(target);
    augmented.assessment.set(quantity_symbol(target), cand);
    CoherenceVerdict v = check_coherence(augmented);
    if (v.coherent) return {cand, true};
    if (prev && cand == *prev) return {cand, false};
    prev = cand;

    const CoherenceIteration& failing = v.trace.back();
    active.clear();
    for (int qi : failing.active) {
      if (qi != target_index) active.push_back(qi);
    }
  }
  return {*prev, false};
}

}  // namespace

ExtensionResult extension_interval(const CoherenceProblem& base, const Quantity& target) {
  if (base.assessment.find(quantity_symbol(target))) {
    throw DomainError("extension target is already assessed");
  }
  if (!check_coherence(base).coherent) {
    throw DomainError("incoherent base assessment");
  }
  ExtensionResult out;
  out.lo = refine_endpoint(base, target, /*maximize=*/false);
  out.hi = refine_endpoint(base, target, /*maximize=*/true);
  return out;
}

std::vector<Rational> gain_values(const CoherenceProblem& p, const std::vector<Rational>& stakes) {
  if (stakes.size() != p.quantities.size()) throw DomainError("stake arity mismatch");
  SigmaSystem s = build_sigma(p);
  std::vector<Rational> gains;
  gains.reserve(s.points.size());
  for (std::size_t h = 0; h < s.points.size(); ++h) {
    Rational g = 0;
    for (std::size_t i = 0; i < stakes.size(); ++i) {
      g += stakes[i] * (s.points[h][i] - s.target[i]);
    }
    gains.push_back(std::move(g));
  }
  return gains;
}

}  // namespace concord
