#include <catch2/catch_amalgamated.hpp>

#include "surfaut/classify.hpp"
#include "surfaut/golden.hpp"
#include "surfaut/oracles.hpp"

using namespace surfaut;

TEST_CASE("groups of order 4q") {
  CHECK(groups_of_order_4q(11).size() == 4);
  CHECK(groups_of_order_4q(13).size() == 5);
  auto five = groups_of_order_4q(5);
  REQUIRE(five.size() == 5);
  for (std::size_t i = 0; i < five.size(); ++i) {
    CHECK(five[i].group.order() == 20);
    for (std::size_t j = 0; j < i; ++j) {
      CHECK_FALSE(are_isomorphic(five[i].group, five[j].group));
    }
  }
  CHECK_THROWS_AS(groups_of_order_4q(9), InvalidArgument);
  CHECK_THROWS_AS(groups_of_order_4q(3), InvalidArgument);
}

TEST_CASE("no group of order 4q admits a (1;2) vector") {
  for (std::int64_t q : {5, 7, 11, 13}) {
    for (auto const& [name, G] : groups_of_order_4q(q)) {
      CAPTURE(q, name);
      CHECK(enumerate_vectors(G, Signature::parse("1;2")).empty());
      CHECK(oracle::brute_force_one_point_count(G, 2) == 0);
      CHECK_FALSE(oracle::derived_subgroup_has_involution(G));
    }
  }
}

TEST_CASE("which groups of order 4q carry the family signatures") {
  for (std::int64_t q : {5, 7, 11, 13}) {
    for (auto const& [name, G] : groups_of_order_4q(q)) {
      CAPTURE(q, name);
      bool const dihedral_group = G.description() == "dihedral:" + std::to_string(2 * q);
      bool const meta4 = q % 4 == 1
                         && G.description()
                                == "metacyclic:" + std::to_string(q) + ",4,"
                                       + std::to_string(find_root_of_unity(q, 4));
      CHECK(enumerate_vectors(G, Signature::parse("0;2,2,2,2,2")).empty() != dihedral_group);
      if (q == 5 || q == 13) {
        auto n = oracle::brute_force_vector_count(G, Signature::parse("0;2,2,4,4"));
        CHECK((n > 0) == meta4);
      }
    }
  }
}

TEST_CASE("classification for small genera") {
  for (std::int64_t g : {8, 12}) {
    auto rep = classify_genus(g);
    REQUIRE(rep.strata.size() == 1);
    CHECK(rep.strata[0].group == "dihedral:" + std::to_string(2 * (g - 1)));
    CHECK(rep.strata[0].signature.to_string() == "0;2,2,2,2,2");
    CHECK(rep.strata[0].class_count == 1);
    CHECK(rep.theorem1_consistent);
  }
  auto rep = classify_genus(14);
  REQUIRE(rep.strata.size() == 2);
  CHECK(rep.strata[0].group == "dihedral:26");
  CHECK(rep.strata[1].group == "metacyclic:13,4,5");
  CHECK(rep.strata[1].signature.to_string() == "0;2,2,4,4");
  CHECK(rep.strata[0].class_count == 1);
  CHECK(rep.strata[1].class_count == 1);
  CHECK(rep.theorem1_consistent);

  CHECK_THROWS_AS(classify_genus(11), InvalidArgument);
  CHECK_THROWS_AS(classify_genus(7), InvalidArgument);
}

TEST_CASE("Q8 x C_n counterexamples") {
  auto a5 = counterexample_q8(5);
  CHECK(a5.genus == 11);
  CHECK(a5.vector.group().order() == 40);
  auto a3 = counterexample_q8(3);
  CHECK(a3.genus == 7);
  CHECK(a3.vector.group().order() == 24);
  CHECK_THROWS_AS(counterexample_q8(4), InvalidArgument);
}

TEST_CASE("D_2^n x| C_2 counterexample vectors") {
  auto d3 = counterexample_dihedral2(3);
  REQUIRE(d3.actions.size() == 4);
  for (auto const& a : d3.actions) {
    CHECK(a.vector.group().order() == 32);
    CHECK(a.genus == 9);
    CHECK(a.vector.relation_product() == a.vector.group().identity());
  }
  auto d4 = counterexample_dihedral2(4);
  for (auto const& a : d4.actions) {
    CHECK(a.vector.group().order() == 64);
    CHECK(a.genus == 17);
  }
  // m = 1 and m = 3 differ, as their involution counts show
  CHECK(elements_of_order(dihedral2_semidirect(3, 1), 2).size()
        != elements_of_order(dihedral2_semidirect(3, 3), 2).size());
}

TEST_CASE("boundary vectors") {
  auto b8 = boundary_vectors(17, BoundaryCase::Ord8);
  CHECK(b8.u == 2);
  for (auto const& t : b8.theta) {
    CHECK(vector_satisfies(t));
    CHECK(t.signature().to_string() == "0;2,8,8");
    CHECK(action_genus(t) == 18);
  }
  auto b6 = boundary_vectors(7, BoundaryCase::Ord6);
  CHECK(b6.u == 3);
  for (auto const& t : b6.theta) {
    CHECK(vector_satisfies(t));
    CHECK(t.signature().to_string() == "0;2,6,6");
    CHECK(action_genus(t) == 8);
  }
  CHECK_THROWS_AS(boundary_vectors(11, BoundaryCase::Ord8), InvalidArgument);
}

TEST_CASE("restriction to the family Fuchsian group") {
  auto b8 = boundary_vectors(17, BoundaryCase::Ord8);
  for (auto const& t : b8.theta) {
    auto w = restrict_action(t, kHatWords);
    CHECK(w.induced_signature.to_string() == "0;2,2,4,4");
    CHECK(w.index == 2);
    CHECK(w.subgroup.order() == 68);
    Elem beta4 = b8.group.pow(b8.group.generator("b"), 4);
    CHECK(w.images[0] == beta4);
    CHECK(w.images[1] == beta4);
    CHECK(rh_genus(w.induced_signature, static_cast<std::int64_t>(w.subgroup.order()))
          == rh_genus(t.signature(), static_cast<std::int64_t>(b8.group.order())));
    CHECK(vector_satisfies(w.induced));
  }

  auto b6 = boundary_vectors(7, BoundaryCase::Ord6);
  for (auto const& t : b6.theta) {
    auto w = restrict_action(t, kTildeWords);
    CHECK(w.induced_signature.to_string() == "0;2,2,2,2,2");
    CHECK(w.index == 3);
    CHECK(w.subgroup.order() == 28);
    CHECK(are_isomorphic(w.induced.group(), dihedral(14)));
  }

  // words whose product is not the identity
  std::vector<EllipticWord> bad = {{{1, 1}}, {{2, 1}}, {{3, 2}}, {{3, 6}}};
  CHECK_THROWS_AS(restrict_action(b8.theta[0], bad), InvalidArgument);
}

TEST_CASE("boundary analysis") {
  auto r8 = boundary_analysis(17, BoundaryCase::Ord8);
  CHECK(r8.ok);
  REQUIRE(r8.symbolic.size() == 2);
  for (auto const& s : r8.symbolic) {
    CHECK(s.ok);
  }
  CHECK(r8.symbolic[0].expected == "a^9b^6");
  CHECK(r8.symbolic[1].expected == "a^10b^6");
  REQUIRE(r8.extensions.size() == 1);
  CHECK(r8.extensions[0].outer.to_string() == "0;2,2,2,4");
  CHECK_FALSE(r8.cited_assumption.empty());

  CHECK(boundary_analysis(41, BoundaryCase::Ord8).ok);
  CHECK(boundary_analysis(7, BoundaryCase::Ord6).ok);
  CHECK(boundary_analysis(13, BoundaryCase::Ord6).ok);
}

TEST_CASE("golden values match their oracles") {
  for (auto const& r : check_goldens(SURFAUT_GOLDEN_DIR)) {
    CAPTURE(r.name, r.message);
    CHECK(r.ok);
  }
}
