#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "nestsep/fixtures.hpp"
#include "nestsep/twisted.hpp"

using namespace nestsep;

namespace {

TwistedPair identity_pair(const GroupRef& g) {
  return make_twisted_pair(identity_endomorphism(g), identity_endomorphism(g));
}

// Oracle: ordinary conjugacy class by direct enumeration.
std::vector<int> conjugacy_class_oracle(const FiniteGroup& g, int x) {
  std::set<int> out;
  for (int h = 0; h < g.order(); ++h) out.insert(g.conj(h, x));
  return {out.begin(), out.end()};
}

}  // namespace

TEST_CASE("twisted classes, basic shapes") {
  auto s3 = symmetric_group(3);
  auto pair = identity_pair(s3);
  int r = *s3->find_label("(0 1 2)");
  auto cls = twisted_class(pair, r);
  CHECK(cls.members == std::vector<int>{r, *s3->find_label("(0 2 1)")});
  CHECK(cls.contains(r));

  SUBCASE("trivial H gives singleton classes") {
    auto triv = trivial_group();
    auto p = make_twisted_pair(trivial_homomorphism(triv, s3), trivial_homomorphism(triv, s3));
    for (int g = 0; g < 6; ++g) CHECK(twisted_class(p, g).members == std::vector<int>{g});
  }

  SUBCASE("C6 with phi = inversion: class of 0 is the even elements") {
    auto c6 = cyclic_group(6);
    auto p = make_twisted_pair(inversion_endomorphism(c6), identity_endomorphism(c6));
    CHECK(twisted_class(p, 0).members == std::vector<int>{0, 2, 4});
  }
}

TEST_CASE("identity pair reduces to ordinary conjugacy (oracle check)") {
  for (const auto& f : fixture_groups_up_to(8)) {
    CAPTURE(f.name);
    auto pair = identity_pair(f.group);
    for (int x = 0; x < f.group->order(); ++x)
      CHECK(twisted_class(pair, x).members == conjugacy_class_oracle(*f.group, x));
  }
}

TEST_CASE("twisted conjugacy witnesses") {
  auto s3 = symmetric_group(3);
  auto pair = identity_pair(s3);

  for (int g = 0; g < 6; ++g) CHECK(are_twisted_conjugate(pair, g, g) == 0);  // h = identity

  CHECK_FALSE(
      are_twisted_conjugate(pair, *s3->find_label("(0 1)"), *s3->find_label("(0 1 2)")));

  auto c6 = cyclic_group(6);
  auto p = make_twisted_pair(inversion_endomorphism(c6), identity_endomorphism(c6));
  auto h = are_twisted_conjugate(p, 0, 2);
  REQUIRE(h.has_value());
  // 0 = h + 2 + h i.e. 2h = -2: verify through the defining equation
  CHECK(c6->mul(c6->mul(p.psi(*h), 2), c6->inv(p.phi(*h))) == 0);
}

TEST_CASE("class partitions") {
  SUBCASE("abelian identity pair: all singletons") {
    auto c6 = cyclic_group(6);
    auto part = class_partition(identity_pair(c6));
    CHECK(part.count() == 6);
  }
  SUBCASE("S3 identity pair: sizes 1, 2, 3") {
    auto part = class_partition(identity_pair(symmetric_group(3)));
    std::vector<std::size_t> sizes;
    for (const auto& c : part.classes) sizes.push_back(c.members.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{1, 2, 3});
  }
  SUBCASE("C6 with inversion: 2 classes") {
    auto c6 = cyclic_group(6);
    auto p = make_twisted_pair(inversion_endomorphism(c6), identity_endomorphism(c6));
    CHECK(class_partition(p).count() == 2);
  }
}

TEST_CASE("the twisted relation is an equivalence (sampled hom pairs)") {
  for (const auto& fh : fixture_groups_up_to(8)) {
    for (const auto& fg : fixture_groups_up_to(8)) {
      if (fh.group->order() > 6 || fg.group->order() > 6) continue;  // keep the sweep quick
      auto homs = homomorphism_policy_set(fh.group, fg.group);
      for (std::size_t i = 0; i < homs.size(); ++i)
        for (std::size_t j = 0; j < homs.size(); ++j) {
          auto pair = make_twisted_pair(homs[i], homs[j]);
          auto part = class_partition(pair);
          // disjoint cover
          std::size_t total = 0;
          for (const auto& c : part.classes) total += c.members.size();
          CHECK(total == static_cast<std::size_t>(fg.group->order()));
          // witness symmetry on one representative pair per class
          for (const auto& c : part.classes)
            for (int m : c.members) {
              auto w = are_twisted_conjugate(pair, c.base, m);
              REQUIRE(w.has_value());
              auto back = are_twisted_conjugate(pair, m, c.base);
              REQUIRE(back.has_value());
            }
        }
    }
  }
}

TEST_CASE("shift to identity") {
  auto s3 = symmetric_group(3);
  auto pair = identity_pair(s3);

  SUBCASE("k = identity leaves everything in place") {
    auto shifted = shift_to_identity(pair, 3, 0);
    CHECK(shifted.element == 3);
    for (int x = 0; x < 6; ++x) CHECK(shifted.pair.phi(x) == pair.phi(x));
  }

  SUBCASE("g = k lands on the identity class") {
    int r = *s3->find_label("(0 1 2)");
    auto shifted = shift_to_identity(pair, r, r);
    CHECK(shifted.element == 0);
    CHECK(twisted_class(shifted.pair, 0).contains(0));
  }

  SUBCASE("biconditional, exhaustively on small fixtures") {
    for (const auto& f : fixture_groups_up_to(6)) {
      CAPTURE(f.name);
      auto homs = homomorphism_policy_set(f.group, f.group);
      for (const auto& phi : homs)
        for (const auto& psi : homs) {
          auto pair = make_twisted_pair(phi, psi);
          auto part = class_partition(pair);
          for (int g = 0; g < f.group->order(); ++g)
            for (int k = 0; k < f.group->order(); ++k) {
              auto shifted = shift_to_identity(pair, g, k);
              bool lhs = part.class_of[g] == part.class_of[k];
              bool rhs = twisted_class(shifted.pair, shifted.element).contains(0);
              CHECK(lhs == rhs);
            }
        }
    }
  }
}

TEST_CASE("finite extension decomposition") {
  auto s3 = symmetric_group(3);
  auto normals = all_normal_subgroups(s3);
  const auto& a3 = normals[1];

  SUBCASE("N = G is the single-term case") {
    auto whole = normals[2];
    auto dec = finite_extension_decomposition(s3, whole, identity_endomorphism(s3),
                                              *s3->find_label("(0 1)"), {0});
    REQUIRE(dec.terms.size() == 1);
    auto pair = identity_pair(s3);
    CHECK(dec.union_members(*s3) == twisted_class(pair, *s3->find_label("(0 1)")).members);
  }

  SUBCASE("transpositions decompose over A3") {
    int t = *s3->find_label("(0 1)");
    auto reps = left_transversal(s3, a3);
    auto dec = finite_extension_decomposition(s3, a3, identity_endomorphism(s3), t, reps);
    REQUIRE(dec.terms.size() == 2);
    std::vector<int> transpositions{*s3->find_label("(0 1)"), *s3->find_label("(0 2)"),
                                    *s3->find_label("(1 2)")};
    std::sort(transpositions.begin(), transpositions.end());
    CHECK(dec.union_members(*s3) == transpositions);
  }

  SUBCASE("C6 with psi = inversion, all N and g") {
    auto c6 = cyclic_group(6);
    auto psi = inversion_endomorphism(c6);
    auto pair = make_twisted_pair(psi, identity_endomorphism(c6));
    for (const auto& n : all_normal_subgroups(c6)) {
      auto reps = left_transversal(c6, n);
      for (int g = 0; g < 6; ++g) {
        auto dec = finite_extension_decomposition(c6, n, psi, g, reps);
        CHECK(dec.union_members(*c6) == twisted_class(pair, g).members);
      }
    }
  }

  SUBCASE("bad transversals and non-invariant subgroups are rejected") {
    int t = *s3->find_label("(0 1)");
    CHECK_THROWS_WITH_AS(
        finite_extension_decomposition(s3, a3, identity_endomorphism(s3), t, {0}),
        doctest::Contains("NotATransversal"), Error);
    CHECK_THROWS_WITH_AS(
        finite_extension_decomposition(s3, a3, identity_endomorphism(s3), t, {0, 0}),
        doctest::Contains("NotATransversal"), Error);

    // an automorphism of D4 that swaps the two Klein four-subgroups
    auto d4 = dihedral_group(4);
    bool found = false;
    for (const auto& psi : all_automorphisms(d4)) {
      for (const auto& n : all_normal_subgroups(d4)) {
        bool invariant = true;
        for (int m : n.members) invariant = invariant && n.contains(psi(m));
        if (!invariant) {
          CHECK_THROWS_WITH_AS(
              finite_extension_decomposition(d4, n, psi, 0, left_transversal(d4, n)),
              doctest::Contains("NotInvariant"), Error);
          found = true;
        }
      }
    }
    CHECK(found);
  }
}

TEST_CASE("coincidence subgroups") {
  auto s3 = symmetric_group(3);
  auto pair = identity_pair(s3);
  CHECK(coincidence_subgroup(pair).size() == 6);

  int t = *s3->find_label("(0 1)");
  auto twisted = make_twisted_pair(identity_endomorphism(s3), inner_automorphism(s3, t));
  auto coin = coincidence_subgroup(twisted);
  CHECK(coin.size() == 2);  // centraliser of a transposition
  CHECK(coin.contains(t));

  auto degenerate =
      make_twisted_pair(trivial_homomorphism(s3, s3), identity_endomorphism(s3));
  CHECK(coincidence_subgroup(degenerate).members == std::vector<int>{0});
}

TEST_CASE("coincidence derivations") {
  auto s3 = symmetric_group(3);
  auto normals = all_normal_subgroups(s3);
  const auto& a3 = normals[1];

  SUBCASE("phi = psi: domain everything, image trivial") {
    auto pair = identity_pair(s3);
    auto der = coincidence_derivation(s3, a3, pair);
    CHECK(der.domain.size() == 6);
    CHECK(der.image == std::vector<int>{0});
  }

  SUBCASE("inner twist against the identity") {
    int t = *s3->find_label("(0 1)");
    auto pair = make_twisted_pair(identity_endomorphism(s3), inner_automorphism(s3, t));
    auto der = coincidence_derivation(s3, a3, pair);
    CHECK(der.domain.size() == 6);  // inner maps fix the cosets of A3
    auto cls = twisted_class(pair, 0);
    std::vector<int> expected;
    for (int m : a3.members)
      if (cls.contains(m)) expected.push_back(m);
    CHECK(der.image == expected);
  }

  SUBCASE("C6, N = {0,3}, phi = inversion") {
    auto c6 = cyclic_group(6);
    auto pair = make_twisted_pair(inversion_endomorphism(c6), identity_endomorphism(c6));
    auto n = subgroup_generated(c6, {3});
    REQUIRE(n.members == std::vector<int>{0, 3});
    auto der = coincidence_derivation(c6, n, pair);
    auto cls = twisted_class(pair, 0);
    std::vector<int> expected;
    for (int m : n.members)
      if (cls.contains(m)) expected.push_back(m);
    CHECK(der.image == expected);
  }

  SUBCASE("non-normal N is rejected") {
    auto c2 = subgroup_generated(s3, {*s3->find_label("(0 1)")});
    CHECK_THROWS_WITH_AS(coincidence_derivation(s3, c2, identity_pair(s3)),
                         doctest::Contains("NotNormal"), Error);
  }
}

TEST_CASE("central class intersections") {
  auto s3 = symmetric_group(3);
  auto triv = subgroup_generated(s3, {});
  CHECK(central_class_intersection(s3, triv, identity_pair(s3)).members ==
        std::vector<int>{0});

  auto c6 = cyclic_group(6);
  auto whole = subgroup_generated(c6, {1});
  auto pair = make_twisted_pair(inversion_endomorphism(c6), identity_endomorphism(c6));
  auto d = central_class_intersection(c6, whole, pair);
  CHECK(d.members == std::vector<int>{0, 2, 4});

  auto a3 = all_normal_subgroups(s3)[1];
  CHECK_THROWS_WITH_AS(central_class_intersection(s3, a3, identity_pair(s3)),
                       doctest::Contains("NotCentral"), Error);
}
