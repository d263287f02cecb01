// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Everything is exact rational equality; no tolerances anywhere.

#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "concord/bounds.hpp"
#include "concord/coherence.hpp"
#include "concord/entailment.hpp"

using namespace concord;

namespace {

int failures = 0;

void run_criterion(int number, const std::string& what, const std::function<bool()>& body) {
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (exception: ") + e.what() + ")";
  }
  std::printf("criterion %2d: %s - %s%s\n", number, ok ? "PASS" : "FAIL", what.c_str(),
              note.c_str());
  if (!ok) ++failures;
}

ConditionalEvent ce(const char* name, const char* then_text, const char* given_text) {
  return {name, parse_formula(then_text), parse_formula(given_text)};
}

PrevisionSymbol conj_sym(IndexSet s) { return {PrevisionSymbol::Kind::Conj, s, false}; }

IndexSet pair_set(int i, int j) { return IndexSet::single(i) | IndexSet::single(j); }

// Seven conjunction quantities of the three-event family; `shared` collapses
// the antecedents to one atom.
CoherenceProblem three_event_problem(const ThreeEventAssessment& a, bool shared) {
  std::vector<ConditionalEvent> fam;
  Universe u = shared ? Universe({"E1", "E2", "E3", "H"})
                      : Universe({"E1", "H1", "E2", "H2", "E3", "H3"});
  for (int i = 1; i <= 3; ++i) {
    fam.push_back({"c" + std::to_string(i), Formula::atom("E" + std::to_string(i)),
                   Formula::atom(shared ? "H" : "H" + std::to_string(i))});
  }
  CoherenceProblem p;
  p.space = make_space(std::move(u), std::move(fam));
  auto add = [&](IndexSet members, const Rational& value) {
    Quantity q{CrqTable::Op::Conj, members};
    p.quantities.push_back(q);
    p.assessment.set(quantity_symbol(q), value);
  };
  add(IndexSet::single(0), a.x1);
  add(IndexSet::single(1), a.x2);
  add(IndexSet::single(2), a.x3);
  add(pair_set(0, 1), a.x12);
  add(pair_set(0, 2), a.x13);
  add(pair_set(1, 2), a.x23);
  if (a.x123) add(IndexSet::full(3), *a.x123);
  return p;
}

// Six-quantity prefix problem plus the triple as extension target.
CoherenceProblem three_event_prefix_problem(const ThreeEventAssessment& a) {
  ThreeEventAssessment prefix = a;
  prefix.x123.reset();
  return three_event_problem(prefix, /*shared=*/false);
}

Rational random_rational(std::mt19937& rng, int max_den) {
  std::uniform_int_distribution<int> den(1, max_den);
  int d = den(rng);
  std::uniform_int_distribution<int> num(0, d);
  return Rational(num(rng), d);
}

// Uniform pick inside a rational interval (denominator up to 24).
Rational random_in(std::mt19937& rng, const Rational& lo, const Rational& hi) {
  std::uniform_int_distribution<int> num(0, 24);
  return lo + (hi - lo) * Rational(num(rng), 24);
}

ThreeEventAssessment random_tuple(std::mt19937& rng) {
  ThreeEventAssessment a;
  a.x1 = random_rational(rng, 12);
  a.x2 = random_rational(rng, 12);
  a.x3 = random_rational(rng, 12);
  a.x12 = random_rational(rng, 12);
  a.x13 = random_rational(rng, 12);
  a.x23 = random_rational(rng, 12);
  a.x123 = random_rational(rng, 12);
  return a;
}

// Rejection-free coherent prefix: pairwise values inside their two-event
// bounds, then resample until the coupled conditions hold.
ThreeEventAssessment random_coherent_prefix(std::mt19937& rng) {
  while (true) {
    ThreeEventAssessment a;
    a.x1 = random_rational(rng, 12);
    a.x2 = random_rational(rng, 12);
    a.x3 = random_rational(rng, 12);
    Interval b12 = frechet_two(a.x1, a.x2);
    Interval b13 = frechet_two(a.x1, a.x3);
    Interval b23 = frechet_two(a.x2, a.x3);
    a.x12 = random_in(rng, b12.lo, b12.hi);
    a.x13 = random_in(rng, b13.lo, b13.hi);
    a.x23 = random_in(rng, b23.lo, b23.hi);
    try {
      three_event_extension_bounds(a);
      return a;
    } catch (const DomainError&) {
    }
  }
}

bool sigma_prime_nonnegative(const ThreeEventAssessment& a) {
  try {
    sigma_prime_solution(a);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

bool criterion_1() {
  Interval closed = frechet_two(Rational(3, 5), Rational(1, 2));
  if (!(closed.lo == Rational(1, 10) && closed.hi == Rational(1, 2))) return false;

  auto space = make_space(Universe({"A", "H", "B", "K"}),
                          {ce("c1", "A", "H"), ce("c2", "B", "K")});
  CoherenceProblem base = conditionals_problem(space, {Rational(3, 5), Rational(1, 2)});
  ExtensionResult r = extension_interval(base, {CrqTable::Op::Conj, IndexSet::full(2)});
  return r.lo.closed && r.hi.closed && r.lo.value == closed.lo && r.hi.value == closed.hi;
}

bool criterion_2() {
  std::mt19937 rng(101);
  int coherent_seen = 0;
  // 1/8 of the rounds are structured coherent draws (finer denominators);
  // the remaining 504 are plain denominator<=12 tuples.
  for (int round = 0; round < 576; ++round) {
    ThreeEventAssessment a;
    if (round % 8 == 0) {
      // Structured draw so the coherent branch is exercised too.
      a = random_coherent_prefix(rng);
      Interval b = three_event_extension_bounds(a);
      a.x123 = random_in(rng, b.lo, b.hi);
    } else {
      a = random_tuple(rng);
    }
    bool region = three_event_region_check(a);
    bool closed_form = sigma_prime_nonnegative(a);
    bool lp = check_coherence(three_event_problem(a, /*shared=*/false)).coherent;
    if (region != closed_form || region != lp) return false;
    coherent_seen += region;
  }
  return coherent_seen >= 40;
}

bool criterion_3() {
  std::mt19937 rng(103);
  // 206 plain denominator<=12 tuples plus structured coherent draws.
  for (int round = 0; round < 248; ++round) {
    ThreeEventAssessment a;
    if (round % 6 == 0) {
      a = random_coherent_prefix(rng);
      Interval b = three_event_extension_bounds(a);
      a.x123 = random_in(rng, b.lo, b.hi);
    } else {
      a = random_tuple(rng);
    }
    bool independent = check_coherence(three_event_problem(a, false)).coherent;
    bool shared = check_coherence(three_event_problem(a, true)).coherent;
    if (independent != shared) return false;
  }
  return true;
}

bool criterion_4() {
  std::mt19937 rng(107);
  // Fixture: all 1/2 singles, all 1/4 pairs.
  ThreeEventAssessment fixture{Rational(1, 2), Rational(1, 2), Rational(1, 2),
                               Rational(1, 4),  Rational(1, 4), Rational(1, 4), std::nullopt};
  Interval fb = three_event_extension_bounds(fixture);
  if (!(fb.lo == 0 && fb.hi == Rational(1, 4))) return false;

  for (int round = 0; round < 100; ++round) {
    ThreeEventAssessment a = round == 0 ? fixture : random_coherent_prefix(rng);
    Interval closed = three_event_extension_bounds(a);
    CoherenceProblem base = three_event_prefix_problem(a);
    ExtensionResult r = extension_interval(base, {CrqTable::Op::Conj, IndexSet::full(3)});
    if (!(r.lo.closed && r.hi.closed)) return false;
    if (!(r.lo.value == closed.lo && r.hi.value == closed.hi)) return false;
  }
  return true;
}

bool criterion_5() {
  std::mt19937 rng(109);
  std::uniform_int_distribution<int> nsel(1, 4);
  for (int round = 0; round < 60; ++round) {
    int n = nsel(rng);
    std::vector<std::string> atoms;
    std::vector<ConditionalEvent> fam;
    for (int i = 1; i <= n; ++i) {
      atoms.push_back("E" + std::to_string(i));
      atoms.push_back("H" + std::to_string(i));
    }
    for (int i = 0; i < n; ++i) {
      // Mix plain and compound events to vary the constituent structure.
      Formula e = Formula::atom(atoms[2 * i]);
      Formula h = Formula::atom(atoms[2 * i + 1]);
      if (round % 3 == 1 && i + 1 < n) h = h | Formula::atom(atoms[2 * i + 3]);
      if (round % 3 == 2 && i > 0) e = e & ~Formula::atom(atoms[2 * i - 2]);
      fam.push_back({"c" + std::to_string(i), e, h});
    }
    auto space = make_space(Universe(atoms), fam);
    Assessment a;
    for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
      a.set({PrevisionSymbol::Kind::Conj, IndexSet(mask), false}, random_rational(rng, 12));
      a.set({PrevisionSymbol::Kind::Disj, IndexSet(mask), false}, random_rational(rng, 12));
    }
    if (!check_de_morgan(space, a)) return false;
  }
  return true;
}

bool criterion_6() {
  std::mt19937 rng(113);
  // Step pattern: interval for the n+1 conjunction given (mu_n, x_{n+1}).
  Universe u({"E1", "H1", "E2", "H2", "E3", "H3"});
  std::vector<ConditionalEvent> fam = {ce("c1", "E1", "H1"), ce("c2", "E2", "H2"),
                                       ce("c3", "E3", "H3")};
  for (int round = 0; round < 60; ++round) {
    Rational mu = random_rational(rng, 12);
    Rational x = random_rational(rng, 12);
    auto space = make_space(u, fam);
    CoherenceProblem base;
    base.space = space;
    Quantity conj2{CrqTable::Op::Conj, IndexSet::full(2)};
    Quantity single{CrqTable::Op::Conj, IndexSet::single(2)};
    base.quantities = {conj2, single};
    base.assessment.set(quantity_symbol(conj2), mu);
    base.assessment.set(quantity_symbol(single), x);
    base.assessment.set(conj_sym(IndexSet::single(0)), mu);
    base.assessment.set(conj_sym(IndexSet::single(1)), mu);
    Rational corner = std::max(mu + x - 1, Rational(0));
    base.assessment.set(conj_sym(pair_set(0, 2)), corner);
    base.assessment.set(conj_sym(pair_set(1, 2)), corner);

    ExtensionResult r = extension_interval(base, {CrqTable::Op::Conj, IndexSet::full(3)});
    Interval expect = conj_step_bounds(mu, x);
    if (!(r.lo.closed && r.hi.closed)) return false;
    if (!(r.lo.value == expect.lo && r.hi.value == expect.hi)) return false;
  }

  // Fr'echet bounds for the n-event conjunction and disjunction previsions.
  for (int round = 0; round < 40; ++round) {
    ThreeEventAssessment a = random_coherent_prefix(rng);
    Interval ext = three_event_extension_bounds(a);
    Interval conj_bound = frechet_conjunction_n({a.x1, a.x2, a.x3});
    if (ext.lo < conj_bound.lo || ext.hi > conj_bound.hi) return false;

    // Dual disjunction family: y-values from the complemented prefix.
    std::vector<Rational> ys = {1 - a.x1, 1 - a.x2, 1 - a.x3};
    CoherenceProblem base;
    base.space = make_space(Universe({"E1", "H1", "E2", "H2", "E3", "H3"}),
                            {{"c1", ~Formula::atom("E1"), Formula::atom("H1")},
                             {"c2", ~Formula::atom("E2"), Formula::atom("H2")},
                             {"c3", ~Formula::atom("E3"), Formula::atom("H3")}});
    auto add = [&](CrqTable::Op op, IndexSet members, const Rational& v) {
      Quantity q{op, members};
      base.quantities.push_back(q);
      base.assessment.set(quantity_symbol(q), v);
    };
    // P(~Ei|Hi) = 1 - x_i; pair disjunctions by De Morgan from pair conjs.
    add(CrqTable::Op::Disj, IndexSet::single(0), ys[0]);
    add(CrqTable::Op::Disj, IndexSet::single(1), ys[1]);
    add(CrqTable::Op::Disj, IndexSet::single(2), ys[2]);
    add(CrqTable::Op::Disj, pair_set(0, 1), 1 - a.x12);
    add(CrqTable::Op::Disj, pair_set(0, 2), 1 - a.x13);
    add(CrqTable::Op::Disj, pair_set(1, 2), 1 - a.x23);

    ExtensionResult r = extension_interval(base, {CrqTable::Op::Disj, IndexSet::full(3)});
    // De Morgan: the disjunction interval is the reflected conjunction one.
    if (!(r.lo.value == 1 - ext.hi && r.hi.value == 1 - ext.lo)) return false;
    Interval disj_bound = frechet_disjunction_n(ys);
    if (r.lo.value < disj_bound.lo || r.hi.value > disj_bound.hi) return false;
  }
  return true;
}

bool criterion_7() {
  auto rules = builtin_rules();
  if (rules.size() != 13) return false;
  for (const auto& rule : rules) {
    EntailmentVerdict v = p_entails(rule);  // throws if QC and LP routes split
    if (!rule.expected_p_valid || v.p_valid != *rule.expected_p_valid) return false;
    if (!v.p_consistent) return false;
    if (v.p_valid && !v.witness && !v.antecedent_implies_consequent) return false;
    if (v.p_valid != (*v.lp_lower_bound == 1)) return false;
  }
  for (int n = 2; n <= 4; ++n) {
    if (!p_entails(generalized_or_rule(n)).p_valid) return false;
  }
  return true;
}

bool criterion_8() {
  std::mt19937 rng(127);
  auto space = make_space(Universe({"A", "B", "C"}),
                          {ce("c1", "C", "A"), ce("c2", "C", "B"), ce("c3", "C", "A & B")});
  for (int round = 0; round < 24; ++round) {
    Rational x = random_rational(rng, 12);
    Rational y = random_rational(rng, 12);
    CoherenceProblem base;
    base.space = space;
    Quantity q1{CrqTable::Op::Conj, IndexSet::single(0)};
    Quantity q2{CrqTable::Op::Conj, IndexSet::single(1)};
    base.quantities = {q1, q2};
    base.assessment.set(quantity_symbol(q1), x);
    base.assessment.set(quantity_symbol(q2), y);
    ExtensionResult r = extension_interval(base, {CrqTable::Op::Conj, IndexSet::single(2)});
    if (!(r.lo.value == 0 && r.hi.value == 1 && r.lo.closed && r.hi.closed)) return false;
  }
  return true;
}

bool criterion_9() {
  auto space = make_space(Universe({"A", "B", "C"}),
                          {ce("p1", "C", "A | B"), ce("p2", "~C", "A")});
  CoherenceVerdict v = check_coherence(conditionals_problem(space, {1, 1}));
  if (!v.coherent || v.trace.size() != 2) return false;
  if (v.trace[0].i0 != std::vector<int>{1}) return false;           // F0 = {~C|A}
  if (v.trace[1].active != std::vector<int>{1}) return false;
  return v.trace[1].i0.empty();
}

bool criterion_10() {
  std::mt19937 rng(131);
  std::uniform_int_distribution<int> stake_num(-8, 8);
  Universe u({"E1", "H1", "E2", "H2", "E3", "H3"});
  std::vector<ConditionalEvent> fam = {ce("c1", "E1", "H1"), ce("c2", "E2", "H2 | H1"),
                                       ce("c3", "E3 | E1", "H3")};
  auto space = make_space(u, fam);
  int tested = 0;
  while (tested < 100) {
    std::vector<Rational> probs = {random_rational(rng, 12), random_rational(rng, 12),
                                   random_rational(rng, 12)};
    CoherenceProblem p = conditionals_problem(space, probs);
    if (!check_coherence(p).coherent) continue;
    ++tested;
    for (int s = 0; s < 10; ++s) {
      std::vector<Rational> stakes = {Rational(stake_num(rng), 4), Rational(stake_num(rng), 4),
                                      Rational(stake_num(rng), 4)};
      auto gains = gain_values(p, stakes);
      Rational lo = 0, hi = 0;
      for (const auto& g : gains) {
        lo = std::min(lo, g);
        hi = std::max(hi, g);
      }
      if (!(lo <= 0 && 0 <= hi)) return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  run_criterion(1, "two-event conjunction interval, closed form and LP", criterion_1);
  run_criterion(2, "three-event coherence: region, closed-form weights, LP agree (576 tuples)",
                criterion_2);
  run_criterion(3, "shared-antecedent and independent families agree (248 tuples)", criterion_3);
  run_criterion(4, "triple-conjunction extension equals the LP interval (100 prefixes)",
                criterion_4);
  run_criterion(5, "De Morgan holds entrywise for random families up to n=4", criterion_5);
  run_criterion(6, "step bounds and n-event conjunction/disjunction bounds via LP", criterion_6);
  run_criterion(7, "rule catalog: 13/13 expected verdicts with witness/LP agreement",
                criterion_7);
  run_criterion(8, "evidence-combining target is unconstrained: [0,1] (24 bases)", criterion_8);
  run_criterion(9, "zero-layer trace drops exactly the second premise first", criterion_9);
  run_criterion(10, "restricted betting gains straddle zero (100 x 10)", criterion_10);
  if (failures == 0) {
    std::printf("all criteria passed\n");
  } else {
    std::printf("%d criterion(s) failed\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
