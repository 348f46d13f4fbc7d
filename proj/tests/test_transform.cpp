#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "treesec/treesec.hpp"

using namespace treesec;

namespace {

// All integer budgets 0..total plus a couple of fractional probes.
std::vector<Rational> probe_budgets(const Rational& total) {
  std::vector<Rational> budgets;
  for (BigInt m = 0; m <= numerator(total); ++m) budgets.emplace_back(m);
  budgets.push_back(Rational(1, 2));
  budgets.push_back(total / 2);
  return budgets;
}

}  // namespace

TEST_CASE("to_pmodel expands integer costs into unit-cost chains") {
  SECTION("single edge of cost 3") {
    auto ss = th::ss_of(make_path(1), {3}, {7});
    auto out = to_pmodel(ss);
    REQUIRE(out.ss.tree.size() == 3);
    REQUIRE(out.ss.unit_costs());
    REQUIRE(out.ss.prizes.values() == std::vector<Rational>{0, 0, 7});
    REQUIRE(out.ss.tree.name(1) == "u1.1");
    REQUIRE(out.ss.tree.name(2) == "u1.2");
    REQUIRE(out.ss.tree.name(3) == "u1");
    REQUIRE(out.vertex_map == std::vector<int>{0, 3});
  }

  SECTION("cherry with costs (3,2,1)") {
    auto ss = th::ss_of(th::cherry_tail(), {3, 2, 1}, {2, 1, 3});
    auto out = to_pmodel(ss);
    const auto& t = out.ss.tree;
    REQUIRE(t.size() == 6);  // one edge per unit of cost
    REQUIRE(t == RootedTree::from_parents(
                     {0, 1, 2, 0, 4, 3},
                     {"r", "u1.1", "u1.2", "u1", "u2.1", "u2", "u3"}));
    REQUIRE(out.ss.unit_costs());
    REQUIRE(out.ss.prizes.values() == std::vector<Rational>{0, 0, 2, 0, 1, 3});
    REQUIRE(out.vertex_map == std::vector<int>{0, 3, 5, 6});
  }

  SECTION("unit-cost input comes back isomorphic") {
    auto ss = th::ss_of(th::cherry_tail(), {1, 1, 1}, {2, 1, 3});
    auto out = to_pmodel(ss);
    REQUIRE(out.ss.tree == ss.tree);
    REQUIRE(out.ss.prizes == ss.prizes);
    REQUIRE(out.vertex_map == std::vector<int>{0, 1, 2, 3});
  }

  SECTION("rejects fractional and zero costs") {
    REQUIRE_THROWS_AS(to_pmodel(th::ss_of(make_path(2), {Rational(7, 2), 1}, {1, 1})),
                      NonIntegerCost);
    REQUIRE_THROWS_AS(to_pmodel(th::ss_of(make_path(2), {0, 1}, {1, 1})), ZeroCost);
  }

  SECTION("interior names that already exist get uniquified") {
    auto tree = validate_tree({{"r", "u1"}, {"u1", "u1.1"}}, "r");
    auto out = to_pmodel(th::ss_of(tree, {2, 1}, {5, 7}));
    REQUIRE(out.ss.tree.name(1) == "u1.1");   // new interior vertex
    REQUIRE(out.ss.tree.name(2) == "u1");
    REQUIRE(out.ss.tree.name(3) == "u1.1_");  // the original vertex, renamed
    REQUIRE(out.ss.prizes[3] == 7);
  }
}

TEST_CASE("to_pmodel preserves max prize at integer budgets") {
  auto check = [](const SecuritySystem& ss) {
    auto out = to_pmodel(ss);
    Rational total = 0;
    for (int i = 1; i <= ss.tree.size(); ++i) total += ss.costs[i];
    REQUIRE(out.ss.tree.size() == numerator(total));
    for (const Rational& b : probe_budgets(total)) {
      const int m = static_cast<int>(floor_to_int(b).convert_to<long long>());
      REQUIRE(maxp_unitcost_dp(out.ss, std::min(m, out.ss.tree.size())).value ==
              maxp_bruteforce(ss, b).value);
    }
  };

  check(th::ss_of(th::cherry_tail(), {3, 2, 1}, {2, 1, 3}));

  std::mt19937 rng(61);
  for (int round = 0; round < 60; ++round) {
    auto tree = th::random_tree(rng, 1 + static_cast<int>(rng() % 6));
    const int n = tree.size();
    check(th::ss_of(tree, th::random_ints(rng, n, 1, 4), th::random_ints(rng, n, 0, 5)));
  }
}

TEST_CASE("to_cmodel expands integer prizes into unit-prize chains") {
  SECTION("single edge of cost 2, prize 3") {
    auto ss = th::ss_of(make_path(1), {2}, {3});
    auto out = to_cmodel(ss);
    REQUIRE(out.ss.tree.size() == 3);
    REQUIRE(out.ss.unit_prizes());
    REQUIRE(out.ss.costs.values() == std::vector<Rational>{2, 0, 0});
    REQUIRE(out.vertex_map == std::vector<int>{0, 3});
    REQUIRE(out.edge_map == std::vector<int>{0, 1});
  }

  SECTION("cherry with prizes (2,1,3)") {
    auto ss = th::ss_of(th::cherry_tail(), {3, 2, 1}, {2, 1, 3});
    auto out = to_cmodel(ss);
    const auto& t = out.ss.tree;
    REQUIRE(t == RootedTree::from_parents(
                     {0, 1, 0, 2, 4, 5},
                     {"r", "u1.1", "u1", "u2", "u3.1", "u3.2", "u3"}));
    REQUIRE(out.ss.unit_prizes());
    REQUIRE(out.ss.costs.values() == std::vector<Rational>{3, 0, 2, 1, 0, 0});
    REQUIRE(out.vertex_map == std::vector<int>{0, 2, 3, 6});
    REQUIRE(out.edge_map == std::vector<int>{0, 1, 3, 4});
    // The mapped edge carries the original cost.
    for (int v = 1; v <= ss.tree.size(); ++v)
      REQUIRE(out.ss.costs[out.edge_map[v]] == ss.costs[v]);
  }

  SECTION("prize-0 vertex keeps a structural vertex") {
    auto ss = th::ss_of(th::cherry_tail(), {3, 2, 1}, {0, 1, 3});
    auto out = to_cmodel(ss);
    REQUIRE(out.ss.tree.name(1) == "u1");
    REQUIRE(out.ss.prizes[1] == 0);
    REQUIRE(out.ss.costs[1] == 3);
    REQUIRE(out.edge_map[1] == out.vertex_map[1]);
    REQUIRE_FALSE(out.ss.unit_prizes());
    // Its child still hangs below it.
    REQUIRE(out.ss.tree.parent(out.edge_map[3]) == out.vertex_map[1]);
  }

  SECTION("rejects fractional prizes") {
    REQUIRE_THROWS_AS(to_cmodel(th::ss_of(make_path(1), {1}, {Rational(1, 2)})),
                      NonIntegerPrize);
  }
}

TEST_CASE("to_cmodel preserves max prize at every budget") {
  auto check = [](const SecuritySystem& ss, std::mt19937& rng) {
    auto out = to_cmodel(ss);
    auto profile = maxp_profile(ss);
    std::vector<Rational> budgets;
    for (const auto& pt : profile.points()) budgets.push_back(pt.threshold);
    for (int i = 0; i < 6; ++i)
      budgets.push_back(Rational(rng() % 13, 1 + rng() % 4));
    for (const Rational& b : budgets)
      REQUIRE(maxp_bruteforce(out.ss, b).value == profile.value_at(b));
  };

  std::mt19937 rng(62);

  // Example with a zero, a repeated value, and mixed costs.
  check(th::ss_of(th::t2_shape(), th::units(5), {0, 1, 3, 2, 2}), rng);

  for (int round = 0; round < 50; ++round) {
    auto tree = th::random_tree(rng, 1 + static_cast<int>(rng() % 5));
    const int n = tree.size();
    check(th::ss_of(tree, th::random_rationals(rng, n, 4, 3), th::random_ints(rng, n, 0, 4)),
          rng);
  }
}

TEST_CASE("padding a unit-cost model with zero prizes") {
  auto model = th::model_on(th::cherry_tail(), th::units(3), {1, 2, 3});
  auto supertree = RootedTree::from_parents({0, 0, 1, 2});

  SECTION("extends the prize multiset with zeros") {
    auto padded = pad_zero_prizes(model, supertree);
    REQUIRE(padded.tree == supertree);
    REQUIRE(padded.cost_multiset == std::vector<Rational>{1, 1, 1, 1});
    REQUIRE(padded.prize_multiset == std::vector<Rational>{0, 1, 2, 3});
  }

  SECTION("padding with the same tree is the identity") {
    auto padded = pad_zero_prizes(model, th::cherry_tail());
    REQUIRE(padded == model);
  }

  SECTION("needs unit costs") {
    auto bad = th::model_on(th::cherry_tail(), {2, 1, 1}, {1, 2, 3});
    REQUIRE_THROWS_AS(pad_zero_prizes(bad, supertree), NotUnitCost);
  }

  SECTION("supertree must contain the tree root-preservingly") {
    // u3's parent is u2 in this supertree, but u1 in the cherry.
    REQUIRE_THROWS_AS(pad_zero_prizes(model, RootedTree::from_parents({0, 0, 2, 2})),
                      NotARootedSubtreeOfSupertree);
    // u3 missing entirely.
    REQUIRE_THROWS_AS(
        pad_zero_prizes(model, RootedTree::from_parents({0, 0, 1}, {"r", "u1", "u2", "ux"})),
        NotARootedSubtreeOfSupertree);
    // Root has a different name.
    REQUIRE_THROWS_AS(
        pad_zero_prizes(model, RootedTree::from_parents({0, 0, 1, 2}, {"x", "u1", "u2", "u3", "u4"})),
        NotARootedSubtreeOfSupertree);
  }

  SECTION("extending an assignment with zeros keeps its profile") {
    auto ss = th::ss_of(th::cherry_tail(), th::units(3), {2, 1, 3});
    auto padded = th::ss_of(supertree, th::units(4), {2, 1, 3, 0});
    for (int m = 0; m <= 4; ++m)
      REQUIRE(maxp_bruteforce(padded, m).value == maxp_bruteforce(ss, std::min(m, 3)).value);
  }

  SECTION("padding may or may not preserve a missing optimum") {
    auto cramped = th::model_on(th::t3_shape(), th::units(4), {0, 0, 1, 1});
    REQUIRE(find_optimal_ss(cramped).status == OptimalityStatus::NoOptimal);

    // Extending the deep leg keeps the dilemma: the zeros still cannot cover
    // both the short-budget and the long-budget attacks.
    auto longer_leg = pad_zero_prizes(cramped, RootedTree::from_parents({0, 0, 2, 3, 4}));
    REQUIRE(find_optimal_ss(longer_leg).status == OptimalityStatus::NoOptimal);

    // A second leg under the bare root child changes the game: hiding the two
    // ones at the two leg ends (0,0,0,1,1 from the root down) matches the
    // envelope everywhere, so the padded model regains an optimum.
    auto twin_legs = pad_zero_prizes(cramped, RootedTree::from_parents({0, 0, 2, 3, 1}));
    auto verdict = find_optimal_ss(twin_legs);
    REQUIRE(verdict.status == OptimalityStatus::OptimalExists);
    REQUIRE(verdict.witness->prizes.values() == std::vector<Rational>{0, 0, 0, 1, 1});
  }
}

TEST_CASE("padding a unit-prize model with blocking costs") {
  auto model = th::model_on(th::t3_shape(), {0, 0, 1, 1}, th::units(4));
  auto supertree = RootedTree::from_parents({0, 0, 2, 3, 1});

  SECTION("new edges cost one more than the original edge count") {
    auto padded = pad_infinite_costs(model, supertree);
    REQUIRE(padded.tree == supertree);
    REQUIRE(padded.cost_multiset == std::vector<Rational>{0, 0, 1, 1, 5});
    REQUIRE(padded.prize_multiset == th::units(5));
  }

  SECTION("padding with the same tree is the identity") {
    REQUIRE(pad_infinite_costs(model, th::t3_shape()) == model);
  }

  SECTION("needs unit prizes") {
    auto bad = th::model_on(th::t3_shape(), {0, 0, 1, 1}, {1, 1, 1, 2});
    REQUIRE_THROWS_AS(pad_infinite_costs(bad, supertree), NotUnitPrize);
  }

  SECTION("extending an assignment with blocking costs keeps its profile") {
    // Any attack that touches a padded edge costs at least 5, so below that
    // the attacker sees the original system.
    auto ss = th::ss_of(th::t3_shape(), {1, 1, 0, 0}, th::units(4));
    auto padded = th::ss_of(supertree, {1, 1, 0, 0, 5}, th::units(5));
    for (Rational b : {Rational(0), Rational(1), Rational(3, 2), Rational(2), Rational(4),
                       Rational(9, 2)})
      REQUIRE(maxp_bruteforce(padded, b).value == maxp_bruteforce(ss, b).value);
  }

  SECTION("padding may or may not preserve a missing optimum") {
    REQUIRE(find_optimal_ss(model).status == OptimalityStatus::NoOptimal);

    // Blocking the twin-legs supertree's extra edge keeps the crossing.
    auto grown = pad_infinite_costs(model, supertree);
    REQUIRE(find_optimal_ss(grown).status == OptimalityStatus::NoOptimal);

    // A twig grafted mid-leg instead lets a reassignment seal the whole deep
    // subtree behind the blocker at its root edge; that model has an optimum.
    auto twig = pad_infinite_costs(model, RootedTree::from_parents({0, 0, 2, 3, 2}));
    auto verdict = find_optimal_ss(twig);
    REQUIRE(verdict.status == OptimalityStatus::OptimalExists);
    REQUIRE(verdict.witness->costs.values() == std::vector<Rational>{1, 5, 1, 0, 0});
  }
}
