#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <vector>

#include "helpers.hpp"
#include "treesec/treesec.hpp"

using namespace treesec;

namespace {

// The smallest model without an optimal assignment: a cherry with both value
// sets {1,2,3}.
Model crossing_model() { return th::model_on(th::cherry_tail(), {1, 2, 3}, {1, 2, 3}); }

Rational brute_min_at(const Model& model, const Rational& budget) {
  std::optional<Rational> best;
  for (const SecuritySystem& ss : enumerate_assignments(model)) {
    Rational v = maxp_bruteforce(ss, budget).value;
    if (!best || v < *best) best = v;
  }
  return *best;
}

}  // namespace

TEST_CASE("enumerate_assignments walks distinct pairings in order") {
  auto model = th::model_on(th::cherry_tail(), {1, 1, 2}, {5, 5, 7});
  auto all = enumerate_assignments(model);
  REQUIRE(all.size() == 9);  // 3 cost arrangements x 3 prize arrangements
  REQUIRE(all.front().costs.values() == std::vector<Rational>{1, 1, 2});
  REQUIRE(all.front().prizes.values() == std::vector<Rational>{5, 5, 7});
  REQUIRE(all.back().costs.values() == std::vector<Rational>{2, 1, 1});
  REQUIRE(all.back().prizes.values() == std::vector<Rational>{7, 5, 5});
  // Prizes cycle fastest.
  REQUIRE(all[1].costs.values() == std::vector<Rational>{1, 1, 2});
  REQUIRE(all[1].prizes.values() == std::vector<Rational>{5, 7, 5});

  SECTION("the guard caps the tree size") {
    auto big = th::model_on(make_path(7), th::units(7), th::units(7));
    REQUIRE_THROWS_AS(enumerate_assignments(big), TooLarge);
    OracleOptions loose;
    loose.max_assign_n = 7;
    REQUIRE(enumerate_assignments(big, loose).size() == 1);
  }
}

TEST_CASE("lower_envelope is the pointwise floor over assignments") {
  auto model = crossing_model();
  auto env = lower_envelope(model);

  SECTION("frozen breakpoints") {
    MaxPrizeProfile expected = MaxPrizeProfile::from_points(
        {{0, 0, {}}, {2, 1, {}}, {3, 2, {}}, {4, 3, {}}, {5, 4, {}}, {6, 6, {}}});
    REQUIRE(env == expected);
    for (const auto& pt : env.points()) REQUIRE_FALSE(pt.witness.has_value());
  }

  SECTION("agrees with per-budget brute force") {
    for (Rational b : {Rational(0), Rational(1), Rational(3, 2), Rational(2), Rational(3),
                       Rational(7, 2), Rational(4), Rational(5), Rational(6), Rational(9)})
      REQUIRE(env.value_at(b) == brute_min_at(model, b));
  }

  SECTION("splitting the scan across threads changes nothing") {
    OracleOptions threaded;
    threaded.jobs = 3;
    REQUIRE(lower_envelope(model, threaded) == env);
  }

  SECTION("free edges can make the envelope start above zero") {
    auto loose = th::model_on(make_path(2), {0, 1}, {1, 1});
    REQUIRE(lower_envelope(loose).points().front().value == 0);
    auto free_edges = th::model_on(make_path(2), {0, 0}, {1, 1});
    REQUIRE(lower_envelope(free_edges).points().front().value == 2);
  }
}

TEST_CASE("find_optimal_ss certifies models without an optimum") {
  auto verdict = find_optimal_ss(crossing_model());
  REQUIRE(verdict.status == OptimalityStatus::NoOptimal);
  REQUIRE_FALSE(verdict.witness.has_value());
  REQUIRE(verdict.counter.has_value());

  const CounterPair& pair = *verdict.counter;
  SECTION("frozen counter-pair") {
    REQUIRE(pair.first.costs.values() == std::vector<Rational>{3, 2, 1});
    REQUIRE(pair.first.prizes.values() == std::vector<Rational>{2, 1, 3});
    REQUIRE(pair.second.costs.values() == std::vector<Rational>{2, 1, 3});
    REQUIRE(pair.second.prizes.values() == std::vector<Rational>{1, 2, 3});
    REQUIRE(pair.first_better_at == 1);
    REQUIRE(pair.second_better_at == 4);
  }

  SECTION("the pair beats each other at the stated budgets") {
    REQUIRE(pair.first_better_at < pair.second_better_at);
    REQUIRE(maxp_bruteforce(pair.first, pair.first_better_at).value <
            maxp_bruteforce(pair.second, pair.first_better_at).value);
    REQUIRE(maxp_bruteforce(pair.second, pair.second_better_at).value <
            maxp_bruteforce(pair.first, pair.second_better_at).value);
  }

  SECTION("the prune is only a shortcut") {
    OracleOptions plain;
    plain.level1_prune = false;
    auto slow = find_optimal_ss(crossing_model(), plain);
    REQUIRE(slow.status == OptimalityStatus::NoOptimal);
    REQUIRE(slow.counter->first_better_at == pair.first_better_at);
    REQUIRE(slow.counter->second_better_at == pair.second_better_at);
  }
}

TEST_CASE("find_optimal_ss certifies models with an optimum") {
  SECTION("descending costs up a path") {
    auto model = th::model_on(make_path(3), {1, 2, 3}, {1, 2, 3});
    auto verdict = find_optimal_ss(model);
    REQUIRE(verdict.status == OptimalityStatus::OptimalExists);
    REQUIRE(verdict.witness.has_value());
    REQUIRE_FALSE(verdict.counter.has_value());
    REQUIRE(verdict.witness->costs.values() == std::vector<Rational>{3, 2, 1});
    REQUIRE(verdict.witness->prizes.values() == std::vector<Rational>{1, 2, 3});
    REQUIRE(*verdict.witness == optimal_ss_path(model));
  }

  SECTION("stars always have one") {
    auto model = th::model_on(make_star(3), {1, 1, 2}, {4, 5, 6});
    auto verdict = find_optimal_ss(model);
    REQUIRE(verdict.status == OptimalityStatus::OptimalExists);
    auto env = lower_envelope(model);
    REQUIRE(profile_leq(maxp_profile(*verdict.witness), env).order == ProfileOrder::Equal);
    REQUIRE(profile_leq(maxp_profile(optimal_ss_star(model)), env).order == ProfileOrder::Equal);
  }

  SECTION("a single assignment is trivially optimal") {
    auto model = th::model_on(th::cherry_tail(), th::units(3), th::units(3));
    REQUIRE(find_optimal_ss(model).status == OptimalityStatus::OptimalExists);
  }
}

TEST_CASE("find_optimal_ss declines oversized models") {
  auto big = th::model_on(make_path(7), th::units(7), {1, 2, 3, 4, 5, 6, 7});
  auto verdict = find_optimal_ss(big);
  REQUIRE(verdict.status == OptimalityStatus::InconclusiveGuard);
  REQUIRE_FALSE(verdict.witness.has_value());
  REQUIRE_FALSE(verdict.counter.has_value());

  OracleOptions loose;
  loose.max_assign_n = 7;
  REQUIRE(find_optimal_ss(big, loose).status == OptimalityStatus::OptimalExists);
}

TEST_CASE("witness_model returns a certified crossing model") {
  SECTION("branching obstruction") {
    auto wm = witness_model(th::t2_shape());
    REQUIRE(wm.has_value());
    REQUIRE(wm->flavor == ModelFlavor::P);
    REQUIRE(wm->model.cost_multiset == th::units(5));
    REQUIRE(wm->model.prize_multiset == std::vector<Rational>{0, 1, 2, 2, 3});
    REQUIRE(find_optimal_ss(wm->model).status == OptimalityStatus::NoOptimal);
  }

  SECTION("deep-leg obstruction") {
    auto wm = witness_model(th::t3_shape());
    REQUIRE(wm.has_value());
    REQUIRE(wm->model.prize_multiset == std::vector<Rational>{0, 0, 1, 1});
    REQUIRE(find_optimal_ss(wm->model).status == OptimalityStatus::NoOptimal);
  }

  SECTION("a larger host tree gets zero padding") {
    auto host = RootedTree::from_parents({0, 0, 2, 3, 4});
    auto wm = witness_model(host);
    REQUIRE(wm.has_value());
    REQUIRE(wm->model.prize_multiset == std::vector<Rational>{0, 0, 0, 1, 1});
    REQUIRE(find_optimal_ss(wm->model).status == OptimalityStatus::NoOptimal);
  }

  SECTION("zero padding alone can be beaten; the search moves on") {
    // Twin legs of lengths 2 and 3: padding the deep-leg prizes with a zero
    // admits an optimal assignment (both ones hide at the leg ends), so the
    // certified witness comes from the blocked-cost candidate instead.
    auto host = RootedTree::from_parents({0, 0, 2, 3, 1});
    auto padded = Model(host, th::units(5), {0, 0, 0, 1, 1});
    REQUIRE(find_optimal_ss(padded).status == OptimalityStatus::OptimalExists);
    auto wm = witness_model(host);
    REQUIRE(wm.has_value());
    REQUIRE(wm->flavor == ModelFlavor::C);
    REQUIRE(wm->model.cost_multiset == std::vector<Rational>{0, 0, 1, 1, 5});
    REQUIRE(wm->model.prize_multiset == th::units(5));
    REQUIRE(find_optimal_ss(wm->model).status == OptimalityStatus::NoOptimal);
  }

  SECTION("trees of the four friendly shapes have none") {
    REQUIRE_FALSE(witness_model(make_path(4)).has_value());
    REQUIRE_FALSE(witness_model(make_star(4)).has_value());
    REQUIRE_FALSE(witness_model(th::cherry_tail()).has_value());
    REQUIRE_FALSE(witness_model(th::twin_path(2)).has_value());
  }

  SECTION("every branching unrecognized shape on four edges is certified") {
    th::for_each_tree(4, [](const RootedTree& tree) {
      if (tree.out_degree(0) < 2) return;
      if (classify(tree).recognized()) return;
      auto wm = witness_model(tree);
      REQUIRE(wm.has_value());
      REQUIRE(find_optimal_ss(wm->model).status == OptimalityStatus::NoOptimal);
    });
  }
}
