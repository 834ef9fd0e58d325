#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "difsets/group_ring.hpp"
#include "oracles.hpp"

using namespace difsets;

namespace {

Subgroup order3_subgroup_of_c15(const Group& g) {
  for (const auto& s : normal_subgroups(g))
    if (s.size() == 3) return s;
  FAIL("no order-3 subgroup");
  return {};
}

}  // namespace

TEST_CASE("difference profile of the (7,3,1) set") {
  auto c7 = cyclic_group(7);
  auto profile = difference_profile(c7, indicator_vector(c7, {1, 2, 4}));
  REQUIRE(profile == std::vector<int>{3, 1, 1, 1, 1, 1, 1});
  REQUIRE(profile == difference_profile_set(c7, {1, 2, 4}));

  // independent pair-by-pair recount
  std::vector<int> brute(7, 0);
  for (int a : {1, 2, 4})
    for (int b : {1, 2, 4}) ++brute[c7.mul(a, c7.inv(b)) - 1];
  REQUIRE(profile == brute);
}

TEST_CASE("difference profile of degenerate vectors") {
  auto g = oracles::dihedral(4);
  REQUIRE(difference_profile(g, std::vector<int>(8, 0)) == std::vector<int>(8, 0));
  REQUIRE(difference_profile(g, std::vector<int>(8, 1)) == std::vector<int>(8, 8));
}

TEST_CASE("profile total equals the square of the coefficient total") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(0, 3);
  for (const Group& g : {cyclic_group(12), oracles::dihedral(5), oracles::symmetric3()}) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<int> a(g.order);
      for (auto& c : a) c = coeff(rng);
      auto p = difference_profile(g, a);
      long long total = std::accumulate(a.begin(), a.end(), 0ll);
      REQUIRE(std::accumulate(p.begin(), p.end(), 0ll) == total * total);
    }
  }
}

TEST_CASE("is_difference_set on the paper's C7 examples") {
  auto c7 = cyclic_group(7);
  auto p = difference_set_parameters(c7, {2, 3, 5});
  REQUIRE(p.has_value());
  REQUIRE(*p == Parameters{7, 3, 1});
  auto single = difference_set_parameters(c7, {2});
  REQUIRE(single.has_value());
  REQUIRE(*single == Parameters{7, 1, 0});
  REQUIRE_FALSE(is_difference_set(c7, {1, 2, 3}));
}

TEST_CASE("every 3-subset verdict in C7 matches a brute-force profile check") {
  auto c7 = cyclic_group(7);
  int count = 0;
  for (const auto& s : oracles::k_subsets(7, 3)) {
    std::vector<int> profile(7, 0);
    for (int a : s)
      for (int b : s) ++profile[c7.mul(a, c7.inv(b)) - 1];
    bool flat = true;
    for (int x = 2; x <= 7; ++x) flat = flat && profile[x - 1] == 1;
    REQUIRE(is_difference_set(c7, s) == flat);
    count += flat;
  }
  REQUIRE(count == 14);  // 14 of the 35 subsets
}

TEST_CASE("translate matches the paper's xD example") {
  auto c7 = cyclic_group(7);
  // x * {x^0, x^1, x^3} = {x^1, x^2, x^4}
  REQUIRE(translate_set(c7, {1, 2, 4}, 2) == std::vector<int>{2, 3, 5});
  REQUIRE(translate_set(c7, {1, 2, 4}, 1) == std::vector<int>{1, 2, 4});
  auto coeffs = translate(c7, indicator_vector(c7, {1, 2, 4}), 2);
  REQUIRE(coeffs == indicator_vector(c7, {2, 3, 5}));
}

TEST_CASE("apply_automorphism: inversion on C7") {
  auto c7 = cyclic_group(7);
  Automorphism inv(7);
  for (int a = 1; a <= 7; ++a) inv[a - 1] = c7.inv(a);
  REQUIRE(apply_automorphism_set({1, 2, 4}, inv) == std::vector<int>{1, 5, 7});
  REQUIRE(apply_automorphism(c7, indicator_vector(c7, {1, 2, 4}), inv) ==
          indicator_vector(c7, {1, 5, 7}));
}

TEST_CASE("complement of a difference set") {
  auto c7 = cyclic_group(7);
  auto comp = complement_set(c7, {1, 2, 4});
  REQUIRE(comp == std::vector<int>{3, 5, 6, 7});
  auto p = difference_set_parameters(c7, comp);
  REQUIRE(p.has_value());
  REQUIRE(*p == Parameters{7, 4, 2});
  REQUIRE(complement_set(c7, comp) == std::vector<int>{1, 2, 4});

  auto single = complement_set(c7, {2});
  REQUIRE(single.size() == 6);
  REQUIRE(*difference_set_parameters(c7, single) == Parameters{7, 6, 5});

  REQUIRE_THROWS_AS(complement_set(c7, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("closure under translation and automorphisms preserves parameters") {
  auto c7 = cyclic_group(7);
  auto aut = automorphism_group(c7);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick_g(1, 7);
  std::uniform_int_distribution<std::size_t> pick_phi(0, aut.size() - 1);
  for (int trial = 0; trial < 30; ++trial) {
    auto moved = translate_set(
        c7, apply_automorphism_set({1, 2, 4}, aut.elements[pick_phi(rng)]), pick_g(rng));
    auto p = difference_set_parameters(c7, moved);
    REQUIRE(p.has_value());
    REQUIRE(*p == Parameters{7, 3, 1});
  }
}

TEST_CASE("is_difference_sum on the paper's C15 example") {
  auto g = cyclic_group(15);
  auto q = quotient(g, order3_subgroup_of_c15(g));
  REQUIRE(is_difference_sum(q, {3, 1, 1, 1, 1}));
  REQUIRE_FALSE(is_difference_sum(q, {3, 1, 1, 1, 0}));
  REQUIRE_FALSE(is_difference_sum(q, {4, 1, 1, 1, 0}));  // entry exceeds |N|
  // identity-coefficient identity: sum of squares = k - lambda + lambda*|N|
  auto profile = difference_profile(q.quotient, {3, 1, 1, 1, 1});
  REQUIRE(profile[0] == 7 - 3 + 3 * 3);
}

TEST_CASE("the whole-group quotient accepts [k] for admissible parameters") {
  auto g = cyclic_group(15);
  auto q = quotient(g, whole_group(g));
  REQUIRE(is_difference_sum(q, {7}));
  REQUIRE_FALSE(is_difference_sum(q, {6}));  // lambda not integral
}

TEST_CASE("induced sums of difference sets are difference sums (Lemma 3.3 shape)") {
  auto g = cyclic_group(15);
  // a (15,7,3) difference set, found by scanning (oracle-style)
  std::vector<int> d;
  for (const auto& s : oracles::k_subsets(15, 7))
    if (is_difference_set(g, s)) {
      d = s;
      break;
    }
  REQUIRE_FALSE(d.empty());
  for (const auto& n : normal_subgroups(g)) {
    auto q = quotient(g, n);
    REQUIRE(is_difference_sum(q, induced_sum(q, d)));
  }
}

TEST_CASE("project_between collapses a fine sum onto a coarse one") {
  auto g = cyclic_group(15);
  auto q_fine = quotient(g, order3_subgroup_of_c15(g));
  auto q_coarse = quotient(g, whole_group(g));
  REQUIRE(project_between(q_fine, q_coarse, {3, 1, 1, 1, 1}) == std::vector<int>{7});
  REQUIRE_THROWS_AS(project_between(q_coarse, q_fine, {7}), std::invalid_argument);
}

TEST_CASE("equivalence of difference sets agrees with orbit enumeration") {
  auto c7 = cyclic_group(7);
  auto aut = automorphism_group(c7);
  REQUIRE(is_equivalent_difference_set(c7, {2, 3, 5}, {3, 4, 6}));
  REQUIRE(is_equivalent_difference_set(c7, aut, {2, 3, 5}, {2, 3, 5}));
  REQUIRE_FALSE(is_equivalent_difference_set(c7, aut, {2, 3, 5}, {1, 2, 3}));

  // the (g, phi) action has 42 moves; the orbit itself is the 14 difference sets
  auto orbit = oracles::set_orbit(c7, oracles::automorphisms_by_scan(c7), {2, 3, 5});
  REQUIRE(orbit.size() == 14);
  for (const auto& s : oracles::k_subsets(7, 3))
    REQUIRE(is_equivalent_difference_set(c7, aut, s, {2, 3, 5}) == (orbit.count(s) == 1));
}

TEST_CASE("equivalence of difference sums over C15") {
  auto g = cyclic_group(15);
  auto aut = automorphism_group(g);
  auto q = quotient(g, order3_subgroup_of_c15(g));
  REQUIRE(is_equivalent_difference_sum(q, aut, {3, 1, 1, 1, 1}, {1, 3, 1, 1, 1}));
  REQUIRE(is_equivalent_difference_sum(q, aut, {3, 1, 1, 1, 1}, {1, 1, 1, 1, 3}));
  REQUIRE(is_equivalent_difference_sum(q, aut, {3, 1, 1, 1, 1}, {3, 1, 1, 1, 1}));
  REQUIRE_FALSE(is_equivalent_difference_sum(q, aut, {3, 1, 1, 1, 1}, {2, 2, 1, 1, 1}));
}
