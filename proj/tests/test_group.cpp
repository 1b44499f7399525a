#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "p3cay/group.hpp"
#include "oracles.hpp"

using namespace p3cay;

TEST_CASE("parameter validation") {
  CHECK(is_odd_prime(3));
  CHECK(is_odd_prime(7));
  CHECK_FALSE(is_odd_prime(2));
  CHECK_FALSE(is_odd_prime(9));
  CHECK_FALSE(is_odd_prime(1));

  CHECK(smallest_primitive_root(3) == 2);
  CHECK(smallest_primitive_root(5) == 2);
  CHECK(smallest_primitive_root(7) == 3);
  CHECK(is_primitive_root(3, 5));
  CHECK_FALSE(is_primitive_root(4, 5));

  CHECK(make_group_params(5).t == 2);
  CHECK(make_group_params(5, 3).t == 3);
  CHECK_THROWS_AS(make_group_params(4), ConfigError);
  CHECK_THROWS_AS(make_group_params(2), ConfigError);
  CHECK_THROWS_AS(make_group_params(9), ConfigError);
  CHECK_THROWS_AS(make_group_params(5, 4), ConfigError);
  CHECK_THROWS_AS(make_group_params(5, 0), ConfigError);
}

TEST_CASE("index round trip") {
  const GroupParams params = make_group_params(5);
  for (int v = 0; v < 125; ++v) {
    const GroupElement g = from_index(v, params);
    CHECK(to_index(g, params) == v);
    CHECK(g.i >= 0);
    CHECK(g.i < 5);
  }
  CHECK(to_index(GroupElement{1, 2, 3}, params) == 1 * 25 + 2 * 5 + 3);
}

TEST_CASE("multiplication matches word rewriting") {
  for (int p : {3, 5}) {
    const GroupParams params = make_group_params(p);
    const std::vector<GroupElement> elems = all_elements(params);
    if (p == 3) {
      for (const GroupElement& x : elems) {
        for (const GroupElement& y : elems) {
          CHECK(multiply(x, y, params) == oracles::word_multiply(x, y, params));
        }
      }
    } else {
      std::mt19937 rng(7u);
      std::uniform_int_distribution<int> pick(0, static_cast<int>(elems.size()) - 1);
      for (int s = 0; s < 2000; ++s) {
        const GroupElement& x = elems[pick(rng)];
        const GroupElement& y = elems[pick(rng)];
        CHECK(multiply(x, y, params) == oracles::word_multiply(x, y, params));
      }
    }
  }
}

TEST_CASE("group axioms and defining relations") {
  const GroupParams params = make_group_params(3);
  const std::vector<GroupElement> elems = all_elements(params);
  for (const GroupElement& g : elems) {
    CHECK(multiply(g, kIdentity, params) == g);
    CHECK(multiply(kIdentity, g, params) == g);
    CHECK(multiply(g, inverse(g, params), params) == kIdentity);
    CHECK(multiply(inverse(g, params), g, params) == kIdentity);
    CHECK(power(g, 3, params) == kIdentity);  // exponent p
  }
  for (const GroupElement& x : elems) {
    for (const GroupElement& y : elems) {
      for (const GroupElement& z : elems) {
        CHECK(multiply(multiply(x, y, params), z, params) ==
              multiply(x, multiply(y, z, params), params));
      }
    }
  }
  const GroupElement a{1, 0, 0};
  const GroupElement b{0, 1, 0};
  const GroupElement c{0, 0, 1};
  CHECK(commutator(a, b, params) == c);
  for (const GroupElement& g : elems) CHECK(commutator(c, g, params) == kIdentity);
  // ba = ab c^-1 for single letters, the rewriting step itself.
  CHECK(multiply(b, a, params) ==
        multiply(multiply(a, b, params), inverse(c, params), params));
}

TEST_CASE("connection set") {
  for (int p : {3, 5, 7}) {
    const GroupParams params = make_group_params(p);
    const std::vector<GroupElement> s = connection_set(params);
    REQUIRE(s.size() == static_cast<std::size_t>(2 * (p - 1)));
    std::set<GroupElement> expect;
    for (int e = 1; e < p; ++e) {
      expect.insert(GroupElement{e, 0, 0});
      expect.insert(GroupElement{0, e, 0});
    }
    CHECK(std::set<GroupElement>(s.begin(), s.end()) == expect);
    CHECK(std::is_sorted(s.begin(), s.end(), [&](const auto& x, const auto& y) {
      return to_index(x, params) < to_index(y, params);
    }));
    for (const GroupElement& x : s) {
      CHECK(std::find(s.begin(), s.end(), inverse(x, params)) != s.end());
    }
    CHECK(generated_subgroup(s, params).size() == static_cast<std::size_t>(p * p * p));
  }
}

TEST_CASE("generated subgroups against naive closure") {
  const GroupParams params = make_group_params(3);
  const GroupElement a{1, 0, 0};
  const GroupElement b{0, 1, 0};
  const GroupElement c{0, 0, 1};

  const std::vector<GroupElement> za = generated_subgroup({a}, params);
  CHECK(za.size() == 3);
  CHECK(std::find(za.begin(), za.end(), GroupElement{2, 0, 0}) != za.end());

  CHECK(generated_subgroup({c}, params).size() == 3);
  CHECK(generated_subgroup({a, b}, params).size() == 27);
  CHECK(generated_subgroup({}, params).size() == 1);

  const std::vector<GroupElement> elems = all_elements(params);
  std::mt19937 rng(11u);
  std::uniform_int_distribution<int> pick(0, 26);
  for (int trial = 0; trial < 40; ++trial) {
    const std::vector<GroupElement> gens{elems[pick(rng)], elems[pick(rng)]};
    const std::vector<GroupElement> fast = generated_subgroup(gens, params);
    const std::set<GroupElement> slow = oracles::naive_closure(gens, params);
    CHECK(std::set<GroupElement>(fast.begin(), fast.end()) == slow);
  }

  CHECK_THROWS_AS(generated_subgroup({a, b}, params, 10), BoundExceeded);
}

TEST_CASE("automorphism construction and validation") {
  const GroupParams params = make_group_params(3);
  const GroupElement a{1, 0, 0};
  const GroupElement b{0, 1, 0};
  const GroupElement c{0, 0, 1};

  const GroupAutomorphism id = GroupAutomorphism::identity(params);
  CHECK(id.apply(GroupElement{1, 2, 0}, params) == GroupElement{1, 2, 0});

  const GroupAutomorphism swap = GroupAutomorphism::from_images(b, a, params);
  CHECK(swap.image_c() == inverse(c, params));  // [b, a] = c^-1
  CHECK(swap.apply(a, params) == b);

  // Images that cannot generate are rejected: c is central.
  CHECK_THROWS_AS(GroupAutomorphism::from_images(c, b, params), InternalInvariant);
  CHECK_FALSE(GroupAutomorphism::try_from_images(c, b, params).has_value());
  CHECK_FALSE(GroupAutomorphism::try_from_images(a, a, params).has_value());
  CHECK(GroupAutomorphism::try_from_images(multiply(a, b, params), b, params).has_value());

  // Homomorphism property, exhaustively, for a map mixing both generators.
  const GroupAutomorphism phi =
      GroupAutomorphism::from_images(multiply(a, b, params), b, params);
  const std::vector<GroupElement> elems = all_elements(params);
  for (const GroupElement& x : elems) {
    for (const GroupElement& y : elems) {
      CHECK(phi.apply(multiply(x, y, params), params) ==
            multiply(phi.apply(x, params), phi.apply(y, params), params));
    }
  }

  // index_table agrees with apply, and inversion round-trips.
  const std::vector<int> table = phi.index_table(params);
  for (int v = 0; v < 27; ++v) {
    CHECK(table[v] == to_index(phi.apply(from_index(v, params), params), params));
  }
  const GroupAutomorphism phi_inv = inverse(phi, params);
  CHECK(compose(phi, phi_inv, params) == GroupAutomorphism::identity(params));
  CHECK(compose(phi_inv, phi, params) == GroupAutomorphism::identity(params));

  // compose applies left argument first.
  const GroupAutomorphism both = compose(swap, phi, params);
  CHECK(both.apply(a, params) == phi.apply(swap.apply(a, params), params));
}

TEST_CASE("full automorphism count at p = 3") {
  // |Aut| = |GL(2, p)| * p^2; each automorphism is determined by valid
  // images of the two generators.
  const GroupParams params = make_group_params(3);
  const std::vector<GroupElement> elems = all_elements(params);
  int count = 0;
  for (const GroupElement& ia : elems) {
    for (const GroupElement& ib : elems) {
      if (GroupAutomorphism::try_from_images(ia, ib, params)) ++count;
    }
  }
  const int gl2 = (9 - 1) * (9 - 3);
  CHECK(count == gl2 * 9);
}

TEST_CASE("connection set preserving automorphisms") {
  for (int p : {3, 5}) {
    const GroupParams params = make_group_params(p);
    const std::vector<GroupAutomorphism> auts = aut_preserving_connection_set(params);
    CHECK(auts.size() == static_cast<std::size_t>(2 * (p - 1) * (p - 1)));
    const std::vector<GroupElement> s = connection_set(params);
    for (const GroupAutomorphism& phi : auts) CHECK(phi.preserves(s, params));

    const CanonicalAutomorphisms canon = canonical_automorphisms(params);
    CHECK(canon.scale_a.image_a() == GroupElement{params.t, 0, 0});
    CHECK(canon.scale_a.image_b() == GroupElement{0, 1, 0});
    CHECK(canon.scale_b.image_b() == GroupElement{0, params.t, 0});
    CHECK(canon.swap_ab.image_a() == GroupElement{0, 1, 0});
    CHECK(std::find(auts.begin(), auts.end(), canon.scale_a) != auts.end());
    CHECK(std::find(auts.begin(), auts.end(), canon.swap_ab) != auts.end());

    // Spot-check closure under composition.
    CHECK(std::find(auts.begin(), auts.end(),
                    compose(canon.scale_a, canon.swap_ab, params)) != auts.end());

    // A non-preserving automorphism stays out: a -> ab moves a outside S.
    const GroupElement a{1, 0, 0};
    const GroupElement b{0, 1, 0};
    const GroupAutomorphism shear =
        GroupAutomorphism::from_images(multiply(a, b, params), b, params);
    CHECK_FALSE(shear.preserves(s, params));
    CHECK(std::find(auts.begin(), auts.end(), shear) == auts.end());
  }
}

TEST_CASE("order p^2 subgroups") {
  for (int p : {3, 5}) {
    const GroupParams params = make_group_params(p);
    const std::vector<std::vector<GroupElement>> subs = order_p2_subgroups(params);
    REQUIRE(subs.size() == static_cast<std::size_t>(p + 1));
    const GroupElement c{0, 0, 1};
    std::set<std::vector<GroupElement>> distinct;
    for (const std::vector<GroupElement>& sub : subs) {
      CHECK(sub.size() == static_cast<std::size_t>(p * p));
      distinct.insert(sub);
      // Closed, contains the center, and abelian.
      CHECK(std::find(sub.begin(), sub.end(), c) != sub.end());
      const std::set<GroupElement> members(sub.begin(), sub.end());
      for (const GroupElement& x : sub) {
        for (const GroupElement& y : sub) {
          CHECK(members.count(multiply(x, y, params)) == 1);
          CHECK(commutator(x, y, params) == kIdentity);
        }
      }
    }
    CHECK(distinct.size() == subs.size());
  }
}
