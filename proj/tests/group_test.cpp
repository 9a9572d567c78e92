#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "psig/families.hpp"
#include "psig/group.hpp"
#include "psig/isomorphism.hpp"

using namespace psig;

namespace {

std::uint64_t factorial(std::uint32_t n) {
  std::uint64_t result = 1;
  for (std::uint32_t i = 2; i <= n; ++i) result *= i;
  return result;
}

PermGroup s3() { return symmetric(3); }

}  // namespace

TEST_CASE("enumeration") {
  PermGroup trivial = PermGroup::generated({Permutation::identity(3)});
  CHECK(trivial.order() == 1);

  CHECK(s3().order() == 6);
  CHECK(cyclic(12).order() == 12);

  CHECK_THROWS_AS(PermGroup::generated(s3().generators(), "", 3), CapExceeded);
}

TEST_CASE("closure invariants over the catalog") {
  for (const CatalogEntry& entry : small_group_catalog(16)) {
    PermGroup g = entry.build();
    CAPTURE(entry.name);
    REQUIRE(g.contains(g.identity()));
    for (const Permutation& gen : g.generators()) REQUIRE(g.contains(gen));
    for (const Permutation& a : g.elements()) {
      REQUIRE(g.contains(a.inverse()));
      for (const Permutation& b : g.elements()) REQUIRE(g.contains(compose(a, b)));
    }
    REQUIRE(factorial(g.degree()) % g.order() == 0);
    // Canonical ordering is sorted-lexicographic.
    REQUIRE(std::is_sorted(g.elements().begin(), g.elements().end()));
  }
}

TEST_CASE("order profiles") {
  OrderProfile s3_profile = order_profile(s3());
  CHECK(s3_profile == OrderProfile{{1, 1}, {2, 3}, {3, 2}});

  CHECK(order_profile(cyclic(4)) == OrderProfile{{1, 1}, {2, 1}, {4, 2}});
  CHECK(order_profile(abelian({2, 2})) == OrderProfile{{1, 1}, {2, 3}});

  for (const CatalogEntry& entry : small_group_catalog(16)) {
    PermGroup g = entry.build();
    OrderProfile profile = order_profile(g);
    std::uint64_t total = 0;
    for (const auto& [order, count] : profile) {
      total += count;
      REQUIRE(g.order() % order == 0);  // Lagrange
    }
    REQUIRE(total == g.order());
    REQUIRE(profile.at(1) == 1);
  }
}

TEST_CASE("cyclicity") {
  CHECK(is_cyclic(cyclic(12)));
  CHECK_FALSE(is_cyclic(abelian({2, 2})));
  CHECK_FALSE(is_cyclic(s3()));
}

TEST_CASE("generated subgroups") {
  PermGroup g = s3();
  CHECK(subgroup_generated(g, {g.identity()}).order() == 1);
  Permutation rotation = Permutation::from_cycles(3, {{0, 1, 2}});
  CHECK(subgroup_generated(g, {rotation}).order() == 3);
  CHECK(subgroup_generated(g, g.generators()).order() == 6);
  PermGroup rot = subgroup_generated(g, {rotation});
  CHECK_THROWS_AS(subgroup_generated(rot, {Permutation::from_cycles(3, {{0, 1}})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(subgroup_generated(cyclic(4), {Permutation::identity(5)}),
                  std::invalid_argument);

  // Lagrange for every cyclic subgroup of every catalog group.
  for (const CatalogEntry& entry : small_group_catalog(12)) {
    PermGroup group = entry.build();
    for (const Permutation& x : group.elements())
      REQUIRE(group.order() % subgroup_generated(group, {x}).order() == 0);
  }
}

TEST_CASE("centralizers and normalizers") {
  PermGroup g = s3();
  PermGroup trivial = subgroup_generated(g, {g.identity()});
  CHECK(centralizer(g, trivial).order() == 6);

  PermGroup klein = abelian({2, 2});
  CHECK(centralizer(klein, klein).order() == 4);

  PermGroup rot3 = subgroup_generated(g, {Permutation::from_cycles(3, {{0, 1, 2}})});
  CHECK(centralizer(g, rot3).order() == 3);
  CHECK(centralizer(g, rot3).contains_all(rot3));

  CHECK(normalizer(g, g).order() == 6);
  CHECK(normalizer(g, rot3).order() == 6);  // index-2 subgroups are normal
  PermGroup refl = subgroup_generated(g, {Permutation::from_cycles(3, {{0, 1}})});
  CHECK(normalizer(g, refl).order() == 2);

  CHECK(is_normal(g, rot3));
  CHECK_FALSE(is_normal(g, refl));
  for (const Permutation& x : klein.elements())
    CHECK(is_normal(klein, subgroup_generated(klein, {x})));

  CHECK_THROWS_AS(centralizer(rot3, g), std::invalid_argument);
}

TEST_CASE("centers") {
  PermGroup klein = abelian({2, 2});
  CHECK(center(klein).order() == 4);
  CHECK(center(s3()).order() == 1);
  CHECK(center(dicyclic(8)).order() == 2);  // quaternion group
  // The center is always normal.
  PermGroup q8 = dicyclic(8);
  CHECK(is_normal(q8, center(q8)));
}

TEST_CASE("derived series and solvability") {
  CHECK(derived_subgroup(abelian({4, 2})).order() == 1);
  CHECK(derived_subgroup(s3()).order() == 3);
  CHECK(derived_subgroup(alternating(5)).order() == 60);  // perfect

  auto orders = [](const std::vector<PermGroup>& series) {
    std::vector<std::uint64_t> result;
    for (const PermGroup& term : series) result.push_back(term.order());
    return result;
  };
  CHECK(orders(derived_series(abelian({3, 3}))) == std::vector<std::uint64_t>{9, 1});
  CHECK(orders(derived_series(s3())) == std::vector<std::uint64_t>{6, 3, 1});
  CHECK(orders(derived_series(alternating(5))) == std::vector<std::uint64_t>{60, 60});

  CHECK(is_solvable(s3()));
  CHECK(is_solvable(dicyclic(16)));
  CHECK_FALSE(is_solvable(alternating(5)));
  CHECK_FALSE(is_solvable(symmetric(5)));

  for (const CatalogEntry& entry : small_group_catalog(16)) {
    PermGroup g = entry.build();
    PermGroup derived = derived_subgroup(g);
    CAPTURE(entry.name);
    REQUIRE(is_normal(g, derived));
    REQUIRE(is_abelian(quotient_group(g, derived)));
    REQUIRE(is_solvable(g));  // every group of order <= 16 is solvable
  }
}

TEST_CASE("sylow subgroups") {
  CHECK(sylow_subgroup(s3(), 3).order() == 3);
  CHECK(sylow_subgroup(cyclic(12), 2).order() == 4);
  CHECK(sylow_subgroup(alternating(5), 5).order() == 5);
  CHECK_THROWS_AS(sylow_subgroup(s3(), 5), std::invalid_argument);

  for (const CatalogEntry& entry : small_group_catalog(16)) {
    PermGroup g = entry.build();
    for (const PrimePower& pp : factorize(g.order()).factors) {
      PermGroup sylow = sylow_subgroup(g, pp.prime);
      CAPTURE(entry.name, pp.prime);
      REQUIRE(sylow.order() == p_part(g.order(), pp.prime));
      REQUIRE(g.contains_all(sylow));
    }
  }
  // Also on a couple of groups with non-normal, non-cyclic Sylow subgroups.
  CHECK(sylow_subgroup(symmetric(4), 2).order() == 8);
  CHECK(sylow_subgroup(symmetric(5), 2).order() == 8);
  CHECK(sylow_subgroup(alternating(6), 3).order() == 9);
}

TEST_CASE("quotient groups") {
  PermGroup c4 = cyclic(4);
  PermGroup half = subgroup_generated(c4, {compose(c4.generators()[0], c4.generators()[0])});
  CHECK(quotient_group(c4, half).order() == 2);

  PermGroup g = s3();
  PermGroup rot3 = subgroup_generated(g, {Permutation::from_cycles(3, {{0, 1, 2}})});
  CHECK(quotient_group(g, rot3).order() == 2);

  PermGroup trivial = subgroup_generated(g, {g.identity()});
  PermGroup regular = quotient_group(g, trivial);
  CHECK(regular.order() == 6);
  CHECK(is_isomorphic(g, regular));

  PermGroup refl = subgroup_generated(g, {Permutation::from_cycles(3, {{0, 1}})});
  CHECK_THROWS_AS(quotient_group(g, refl), NotNormal);

  // Quotients of cyclic groups follow the subgroup lattice.
  PermGroup c12 = cyclic(12);
  for (const Permutation& x : c12.elements()) {
    PermGroup sub = subgroup_generated(c12, {x});
    PermGroup quotient = quotient_group(c12, sub);
    REQUIRE(quotient.order() == 12 / sub.order());
    REQUIRE(is_cyclic(quotient));
  }
}

TEST_CASE("q-nilpotency") {
  CHECK(is_q_nilpotent(cyclic(6), 2));
  CHECK(is_q_nilpotent(s3(), 2));        // complement of order 3
  CHECK_FALSE(is_q_nilpotent(s3(), 3));  // 4 elements of order coprime to 3
  CHECK_FALSE(is_q_nilpotent(alternating(4), 2));
  CHECK(is_q_nilpotent(alternating(4), 3));
  CHECK_THROWS_AS(is_q_nilpotent(s3(), 5), std::invalid_argument);
}

TEST_CASE("cyclic subgroup of index p inside p-groups") {
  CHECK(has_cyclic_subgroup_of_index_p(cyclic(8), 2));
  CHECK(has_cyclic_subgroup_of_index_p(dihedral(8), 2));
  CHECK_FALSE(has_cyclic_subgroup_of_index_p(abelian({2, 2, 2}), 2));
  CHECK_THROWS_AS(has_cyclic_subgroup_of_index_p(cyclic(6), 2), std::invalid_argument);
}

TEST_CASE("isomorphism testing") {
  CHECK_FALSE(is_isomorphic(cyclic(4), abelian({2, 2})));
  CHECK(is_isomorphic(s3(), s3()));
  CHECK(is_isomorphic(s3(), dihedral(6)));
  CHECK_FALSE(is_isomorphic(cyclic(8), abelian({4, 2})));
  // Same order profile, different groups: the abelian flag decides one
  // pair, the backtracking search the other.
  CHECK_FALSE(is_isomorphic(abelian({8, 2}), build_family("semidirect", {8, 2, 5})));
  CHECK_FALSE(is_isomorphic(build_family("c2sq_semi_c4", {}), build_family("c4_central_d8", {})));
  CHECK(is_isomorphic(dicyclic(8), dicyclic(8)));
  CHECK_THROWS_AS(is_isomorphic(cyclic(65), cyclic(65)), OrderCapExceeded);
}

TEST_CASE("from_elements verifies closedness") {
  PermGroup g = s3();
  std::vector<Permutation> not_closed{g.identity(), Permutation::from_cycles(3, {{0, 1}}),
                                      Permutation::from_cycles(3, {{1, 2}})};
  CHECK_THROWS_AS(PermGroup::from_elements(std::move(not_closed)), std::invalid_argument);
  PermGroup rebuilt = PermGroup::from_elements(g.elements());
  CHECK(rebuilt.order() == 6);
}
