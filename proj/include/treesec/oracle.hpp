#pragma once

#include <algorithm>
#include <future>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treesec/errors.hpp"
#include "treesec/model.hpp"
#include "treesec/profile.hpp"
#include "treesec/solver.hpp"
#include "treesec/strategy.hpp"
#include "treesec/taxonomy.hpp"

namespace treesec {

struct OracleOptions {
  SolverLimits limits;
  int max_assign_n = 6;      // assignment enumeration guard
  bool level1_prune = true;  // skip witness candidates whose root edges are not the largest costs
  int jobs = 1;              // parallel envelope computation
};

namespace detail {

// Distinct multiset permutations of costs crossed with distinct multiset
// permutations of prizes, in lexicographic order (costs outer, prizes inner).
template <class Fn>
void for_each_assignment(const Model& model, Fn&& fn) {
  std::vector<Rational> costs = model.cost_multiset;
  do {
    std::vector<Rational> prizes = model.prize_multiset;
    do {
      fn(costs, prizes);
    } while (std::next_permutation(prizes.begin(), prizes.end()));
  } while (std::next_permutation(costs.begin(), costs.end()));
}

inline void check_assignment_guard(const Model& model, const OracleOptions& opts) {
  if (model.tree.size() > opts.max_assign_n)
    throw TooLarge("model has " + std::to_string(model.tree.size()) +
                   " non-root vertices, assignment guard is " + std::to_string(opts.max_assign_n));
}

// Pointwise minimum of two step functions, as a step function.
inline MaxPrizeProfile envelope_min(const MaxPrizeProfile& f, const MaxPrizeProfile& g) {
  std::vector<ProfilePoint> pts;
  for (const Rational& t : merged_thresholds(f, g)) {
    Rational v = std::min(f.value_at(t), g.value_at(t));
    if (!pts.empty() && v <= pts.back().value) continue;
    pts.push_back({t, std::move(v), std::nullopt});
  }
  return MaxPrizeProfile::from_points(std::move(pts));
}

inline MaxPrizeProfile envelope_over_range(const Model& model,
                                           const std::vector<std::vector<Rational>>& cost_perms,
                                           size_t begin, size_t end, const SolverLimits& limits) {
  std::optional<MaxPrizeProfile> env;
  for (size_t i = begin; i < end; ++i) {
    std::vector<Rational> prizes = model.prize_multiset;
    do {
      SecuritySystem ss(model.tree, CostVector(cost_perms[i]), PrizeVector(prizes));
      MaxPrizeProfile prof = maxp_profile(ss, limits);
      env = env ? envelope_min(*env, prof) : std::move(prof);
    } while (std::next_permutation(prizes.begin(), prizes.end()));
  }
  if (!env) return MaxPrizeProfile();
  return *env;
}

}  // namespace detail

// Every distinct assignment of the multisets onto the tree.
inline std::vector<SecuritySystem> enumerate_assignments(const Model& model,
                                                         const OracleOptions& opts = {}) {
  detail::check_assignment_guard(model, opts);
  std::vector<SecuritySystem> out;
  detail::for_each_assignment(model, [&](const std::vector<Rational>& c, const std::vector<Rational>& p) {
    out.emplace_back(model.tree, CostVector(c), PrizeVector(p));
  });
  return out;
}

// Pointwise minimum of every assignment's profile: the best defence value
// achievable at each budget, not necessarily by a single assignment.
inline MaxPrizeProfile lower_envelope(const Model& model, const OracleOptions& opts = {}) {
  detail::check_assignment_guard(model, opts);
  std::vector<std::vector<Rational>> cost_perms;
  std::vector<Rational> costs = model.cost_multiset;
  do {
    cost_perms.push_back(costs);
  } while (std::next_permutation(costs.begin(), costs.end()));

  const int jobs = std::max(1, std::min<int>(opts.jobs, static_cast<int>(cost_perms.size())));
  if (jobs == 1) return detail::envelope_over_range(model, cost_perms, 0, cost_perms.size(), opts.limits);

  std::vector<std::future<MaxPrizeProfile>> parts;
  const size_t chunk = (cost_perms.size() + jobs - 1) / jobs;
  for (int t = 0; t < jobs; ++t) {
    const size_t begin = t * chunk;
    const size_t end = std::min(cost_perms.size(), begin + chunk);
    if (begin >= end) break;
    parts.push_back(std::async(std::launch::async, [&, begin, end] {
      return detail::envelope_over_range(model, cost_perms, begin, end, opts.limits);
    }));
  }
  std::optional<MaxPrizeProfile> env;
  for (auto& part : parts) {
    MaxPrizeProfile p = part.get();
    env = env ? detail::envelope_min(*env, p) : std::move(p);
  }
  return *env;
}

enum class OptimalityStatus { OptimalExists, NoOptimal, InconclusiveGuard };

// Two assignments that beat each other at different budgets: the first is
// strictly lower at first_better_at, the second at second_better_at.
struct CounterPair {
  SecuritySystem first;
  SecuritySystem second;
  Rational first_better_at;
  Rational second_better_at;
};

struct OptimalityVerdict {
  OptimalityStatus status = OptimalityStatus::InconclusiveGuard;
  std::optional<SecuritySystem> witness;   // an assignment matching the envelope everywhere
  std::optional<CounterPair> counter;      // evidence that no assignment can
};

namespace detail {

// First merged threshold where the profile exceeds the envelope, if any.
inline std::optional<Rational> first_excess(const MaxPrizeProfile& prof, const MaxPrizeProfile& env) {
  for (const Rational& t : merged_thresholds(prof, env))
    if (prof.value_at(t) > env.value_at(t)) return t;
  return std::nullopt;
}

}  // namespace detail

// Exhaustive optimality decision. An optimal assignment is one whose profile
// equals the lower envelope everywhere; when none exists the verdict carries
// a counter-pair of assignments that cross.
inline OptimalityVerdict find_optimal_ss(const Model& model, const OracleOptions& opts = {}) {
  if (model.tree.size() > opts.max_assign_n) return {OptimalityStatus::InconclusiveGuard, {}, {}};
  const MaxPrizeProfile env = lower_envelope(model, opts);

  // Witness scan in enumeration order. The necessary-condition prune only
  // skips profiling; a fallback rescan keeps the verdict prune-independent.
  auto scan = [&](bool prune) -> std::optional<SecuritySystem> {
    std::optional<SecuritySystem> found;
    detail::for_each_assignment(model, [&](const std::vector<Rational>& c, const std::vector<Rational>& p) {
      if (found) return;
      SecuritySystem ss(model.tree, CostVector(c), PrizeVector(p));
      if (prune && !check_level1_necessity(ss)) return;
      if (profile_leq(maxp_profile(ss, opts.limits), env).order == ProfileOrder::Equal)
        found = std::move(ss);
    });
    return found;
  };
  std::optional<SecuritySystem> witness = scan(opts.level1_prune);
  if (!witness && opts.level1_prune) witness = scan(false);
  if (witness) return {OptimalityStatus::OptimalExists, std::move(witness), {}};

  // No assignment matches the envelope. Take the assignment that agrees with
  // the envelope the longest (first in order on ties); whoever achieves the
  // envelope at its first excess must itself have exceeded earlier.
  std::optional<Rational> best_excess;
  std::optional<SecuritySystem> first_ss;
  detail::for_each_assignment(model, [&](const std::vector<Rational>& c, const std::vector<Rational>& p) {
    SecuritySystem ss(model.tree, CostVector(c), PrizeVector(p));
    std::optional<Rational> excess = detail::first_excess(maxp_profile(ss, opts.limits), env);
    if (!excess) throw Unreachable("assignment equal to the envelope appeared after the witness scan");
    if (!best_excess || *excess > *best_excess) {
      best_excess = excess;
      first_ss = std::move(ss);
    }
  });
  const Rational t_first = *best_excess;
  std::optional<SecuritySystem> second_ss;
  std::optional<Rational> t_second;
  detail::for_each_assignment(model, [&](const std::vector<Rational>& c, const std::vector<Rational>& p) {
    if (second_ss) return;
    SecuritySystem ss(model.tree, CostVector(c), PrizeVector(p));
    MaxPrizeProfile prof = maxp_profile(ss, opts.limits);
    if (prof.value_at(t_first) != env.value_at(t_first)) return;
    t_second = detail::first_excess(prof, env);
    second_ss = std::move(ss);
  });
  if (!second_ss || !t_second || !(*t_second < t_first))
    throw Unreachable("counter-pair construction failed");
  CounterPair pair{std::move(*first_ss), std::move(*second_ss), *t_second, t_first};
  return {OptimalityStatus::NoOptimal, {}, std::move(pair)};
}

enum class ModelFlavor { P, C };

struct WitnessModel {
  Model model;
  ModelFlavor flavor;
};

namespace detail {

// All nondecreasing vectors of length n over 0..maxv with at least two
// distinct values (constant multisets admit a single assignment).
inline std::vector<std::vector<Rational>> mixed_multisets(int n, int maxv) {
  std::vector<std::vector<Rational>> out;
  std::vector<Rational> cur(n, 0);
  auto rec = [&](auto&& self, int i, int lo) -> void {
    if (i == n) {
      if (cur.front() != cur.back()) out.push_back(cur);
      return;
    }
    for (int v = lo; v <= maxv; ++v) {
      cur[i] = v;
      self(self, i + 1, v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace detail

// A model on the given tree with no optimal assignment, built whenever the
// tree contains one of the two obstruction patterns and absent otherwise.
//
// Candidates are tried in a fixed order — the patterns' bad prize multisets
// padded with zeros, their bad cost multisets padded with blocking costs,
// k-ones prize multisets, then all small prize multisets — and each is
// certified by find_optimal_ss before being returned. Padding alone is not
// sound: a reassignment may hide a prize (or a cheap cost) on the padded
// vertices and become optimal even though the pattern's model was not, so
// certification decides. Trees beyond the assignment guard get the first
// padded candidate uncertified.
inline std::optional<WitnessModel> witness_model(const RootedTree& tree,
                                                 const OracleOptions& opts = {}) {
  const bool has_t2 = contains_rooted_pattern(tree, Pattern::T2).has_value();
  const bool has_t3 = contains_rooted_pattern(tree, Pattern::T3).has_value();
  if (!has_t2 && !has_t3) return std::nullopt;
  const int n = tree.size();

  auto p_candidate = [&](std::vector<Rational> prizes) {
    prizes.resize(n, Rational(0));
    return WitnessModel{Model(tree, std::vector<Rational>(n, 1), std::move(prizes)),
                        ModelFlavor::P};
  };
  auto c_candidate = [&](std::vector<Rational> costs, int blocker) {
    costs.resize(n, Rational(blocker));
    return WitnessModel{Model(tree, std::move(costs), std::vector<Rational>(n, 1)),
                        ModelFlavor::C};
  };

  std::vector<WitnessModel> ladder;
  if (has_t2) ladder.push_back(p_candidate({0, 1, 2, 2, 3}));
  if (has_t3) ladder.push_back(p_candidate({0, 0, 1, 1}));
  if (has_t2) ladder.push_back(c_candidate({0, 1, 1, 2, 3}, 6));
  if (has_t3) ladder.push_back(c_candidate({0, 0, 1, 1}, 5));
  if (n > opts.max_assign_n) return std::move(ladder.front());

  for (int k = 1; k < n; ++k) ladder.push_back(p_candidate(std::vector<Rational>(k, 1)));
  for (std::vector<Rational>& prizes : detail::mixed_multisets(n, 3))
    ladder.push_back(WitnessModel{Model(tree, std::vector<Rational>(n, 1), std::move(prizes)),
                                  ModelFlavor::P});

  for (WitnessModel& cand : ladder)
    if (find_optimal_ss(cand.model, opts).status == OptimalityStatus::NoOptimal)
      return std::move(cand);
  return std::move(ladder.front());  // not reached for any tree tested within the guard
}

}  // namespace treesec
