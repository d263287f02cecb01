#pragma once

#include <vector>

#include "concord/crq.hpp"
#include "concord/simplex.hpp"

namespace concord {

// A conditional random quantity over the base family: a single conditional
// is the conjunction over its singleton.
struct Quantity {
  CrqTable::Op op = CrqTable::Op::Conj;
  IndexSet members;

  bool operator==(const Quantity&) const = default;
};

PrevisionSymbol quantity_symbol(const Quantity& q);
CrqTable quantity_table(SpacePtr space, const Quantity& q);

// Checking instance. The assessment must value every quantity's own symbol
// (that value is its prevision target) and every symbol occurring in the
// quantities' tables.
struct CoherenceProblem {
  SpacePtr space;
  std::vector<Quantity> quantities;
  Assessment assessment;

  Rational target_of(int qi) const;
};

// Helper: one singleton conjunction per family member with the given
// probabilities.
CoherenceProblem conditionals_problem(SpacePtr space, const std::vector<Rational>& probs);

// System (Sigma): one point per constituent inside the disjunction of the
// active quantities' conditioning events; coordinates take the assessed
// prevision where the quantity is void.
struct SigmaSystem {
  std::vector<std::vector<Rational>> points;
  std::vector<Rational> target;              // M
  std::vector<std::size_t> cell_of_point;    // back-map into space cells
  std::vector<std::vector<char>> in_h;       // [point][column]: C_h in H_i
};

SigmaSystem build_sigma(const CoherenceProblem& p, const std::vector<int>& active);
SigmaSystem build_sigma(const CoherenceProblem& p);

struct FeasibilityResult {
  bool feasible = false;
  std::vector<Rational> lambda;       // per point, verified exactly
  std::vector<Rational> certificate;  // Farkas witness when infeasible
};

FeasibilityResult solve_feasible(const SigmaSystem& s);

// Exact maximum of the mass on constituents inside H_i over the solution
// polytope. Throws DomainError when the system is infeasible.
Rational max_mass(const SigmaSystem& s, int column);

// I0 = { i : max_mass(s, i) = 0 }.
std::vector<int> compute_I0(const SigmaSystem& s);

struct CoherenceIteration {
  std::vector<int> active;  // quantity indices at this level
  bool solvable = false;
  std::vector<int> i0;
  std::vector<Rational> lambda;
  std::vector<std::size_t> cells;  // constituent of each lambda weight
};

struct CoherenceVerdict {
  bool coherent = false;
  std::vector<CoherenceIteration> trace;
};

// The operative procedure: solve (Sigma); if unsolvable, incoherent; if
// I0 is empty, coherent; otherwise recurse on the I0 subfamily.
CoherenceVerdict check_coherence(const CoherenceProblem& p);

// Independent oracle: solvability of (Sigma_J) for every nonempty subset J.
// Guarded to small families.
CoherenceVerdict check_coherence_subsets(const CoherenceProblem& p, int guard = 6);

struct Endpoint {
  Rational value;
  bool closed = true;
};

struct ExtensionResult {
  Endpoint lo, hi;
};

// Coherent extension interval for one further quantity given a coherent
// base. Candidate endpoints come from exact ratio LPs (the target column
// carries the unknown itself wherever the target is void, so the prevision
// equation reads sum(lambda*v) = z * mass(H_target)); every candidate is
// re-verified by the full coherence procedure, and on rejection the LP is
// re-run over the active family at the failing trace level. Endpoints that
// never verify are reported open.
ExtensionResult extension_interval(const CoherenceProblem& base, const Quantity& target);

// Values of the restricted betting gain sum_i s_i H_i (X_i - mu_i) on the
// constituents inside the disjunction of the conditioning events.
std::vector<Rational> gain_values(const CoherenceProblem& p, const std::vector<Rational>& stakes);

}  // namespace concord
