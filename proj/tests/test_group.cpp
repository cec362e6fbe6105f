#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>

#include "surfaut/group.hpp"

using namespace surfaut;

namespace {

  // Conjugacy classes computed directly from the Cayley table.
  std::size_t brute_force_class_count(FiniteGroup const& G) {
    std::set<std::set<Elem>> classes;
    for (Elem x = 0; x < G.order(); ++x) {
      std::set<Elem> c;
      for (Elem g = 0; g < G.order(); ++g) {
        c.insert(G.mul(G.mul(g, x), G.inv(g)));
      }
      classes.insert(c);
    }
    return classes.size();
  }

  // Automorphisms counted by trying every image pair for a 2-generator group
  // and checking the induced map on all products.
  std::size_t brute_force_automorphism_count(FiniteGroup const& G, Elem g1, Elem g2) {
    std::size_t count = 0;
    for (Elem x = 0; x < G.order(); ++x) {
      for (Elem y = 0; y < G.order(); ++y) {
        std::map<Elem, Elem> img{{G.identity(), G.identity()}};
        std::vector<Elem>    todo{G.identity()};
        bool                 ok = true;
        while (!todo.empty() && ok) {
          Elem w = todo.back();
          todo.pop_back();
          for (auto [gen, im] : {std::pair{g1, x}, std::pair{g2, y}}) {
            Elem nw = G.mul(w, gen), ni = G.mul(img[w], im);
            auto it = img.find(nw);
            if (it == img.end()) {
              img[nw] = ni;
              todo.push_back(nw);
            } else if (it->second != ni) {
              ok = false;
            }
          }
        }
        if (!ok || img.size() != G.order()) {
          continue;
        }
        std::set<Elem> range;
        for (auto const& [k, v] : img) {
          range.insert(v);
        }
        for (Elem a = 0; a < G.order() && ok; ++a) {
          for (Elem b = 0; b < G.order() && ok; ++b) {
            ok = img[G.mul(a, b)] == G.mul(img[a], img[b]);
          }
        }
        count += ok && range.size() == G.order();
      }
    }
    return count;
  }

}  // namespace

TEST_CASE("presentations give the expected orders and relations") {
  auto D = dihedral(22);
  CHECK(D.order() == 44);
  CHECK(D.element_order(D.generator("r")) == 22);

  auto M = metacyclic(13, 4, 5);
  CHECK(M.order() == 52);
  Elem a = M.generator("a"), b = M.generator("b");
  CHECK(M.mul(M.mul(b, a), M.inv(b)) == M.pow(a, 5));

  CHECK(dihedral2_semidirect(3, 3).order() == 32);
  CHECK(q8_times_cyclic(5).order() == 40);
  CHECK_THROWS_AS(metacyclic(13, 4, 3), InvalidArgument);
  CHECK_THROWS_AS(dihedral2_semidirect(3, 2), InvalidArgument);
  CHECK_THROWS_AS(build_group("nonsense:3"), InvalidArgument);
}

TEST_CASE("group spec strings round trip through the parser") {
  for (auto spec : {"cyclic:44", "dihedral:22", "metacyclic:13,4,5", "q8xc:5", "d2semi:3,5",
                    "metacyclic:7,6,3xcyclic:2"}) {
    CHECK(build_group(spec).description() == spec);
  }
  auto P = build_group("metacyclic:7,6,3xcyclic:2");
  CHECK(P.order() == 84);
  CHECK_NOTHROW(P.generator("c"));
}

TEST_CASE("element labels parse back to the same element") {
  for (auto spec : {"dihedral:10", "metacyclic:13,4,5", "q8xc:3", "d2semi:3,3"}) {
    auto G = build_group(spec);
    for (Elem x = 0; x < G.order(); ++x) {
      CHECK(G.parse(G.label(x)) == x);
    }
  }
}

TEST_CASE("element orders") {
  auto D = dihedral(22);
  CHECK(element_order(D, D.generator("r")) == 22);
  CHECK(element_order(D, D.parse("sr")) == 2);
  auto M = metacyclic(13, 4, 5);
  CHECK(element_order(M, M.parse("b^2")) == 2);
}

TEST_CASE("generated subgroups") {
  auto D = dihedral(22);
  CHECK(subgroup_generated(D, {D.parse("s"), D.parse("sr")}).order() == 44);
  CHECK(subgroup_generated(D, {D.parse("r^2")}).order() == 11);
  for (std::int64_t q : {5, 13}) {
    auto M = metacyclic(q, 4, find_root_of_unity(q, 4));
    CHECK(subgroup_generated(M, {M.parse("a"), M.parse("b^2")}).order()
          == static_cast<std::size_t>(2 * q));
  }
}

TEST_CASE("commutator subgroups") {
  auto D  = dihedral(22);
  auto DD = commutator_subgroup(D);
  CHECK(DD.order() == 11);
  CHECK(std::none_of(DD.elements().begin(), DD.elements().end(),
                     [&](Elem x) { return D.element_order(x) == 2; }));

  auto Q  = q8_times_cyclic(5);
  auto QQ = commutator_subgroup(Q);
  CHECK(QQ.order() == 2);
  CHECK(std::any_of(QQ.elements().begin(), QQ.elements().end(),
                    [&](Elem x) { return Q.element_order(x) == 2; }));

  CHECK(commutator_subgroup(cyclic(44)).order() == 1);
}

TEST_CASE("automorphism groups against a brute-force search") {
  CHECK(automorphisms(cyclic(13)).size() == 12);

  auto Q8 = q8_times_cyclic(1);
  CHECK(brute_force_automorphism_count(Q8, Q8.generator("x"), Q8.generator("y")) == 24);
  CHECK(automorphisms(Q8).size() == 24);

  auto D3 = dihedral(3);
  CHECK(brute_force_automorphism_count(D3, D3.generator("r"), D3.generator("s")) == 6);
  CHECK(automorphisms(D3).size() == 6);

  auto M = metacyclic(5, 4, 2);
  CHECK(automorphisms(M).size()
        == brute_force_automorphism_count(M, M.generator("a"), M.generator("b")));
}

TEST_CASE("isomorphism tests") {
  CHECK_FALSE(are_isomorphic(dihedral2_semidirect(3, 1), dihedral2_semidirect(3, 3)));
  CHECK(are_isomorphic(direct_product({cyclic(4), cyclic(11)}), cyclic(44)));
  CHECK(are_isomorphic(metacyclic(13, 4, 5), metacyclic(13, 4, 8)));
  CHECK_FALSE(are_isomorphic(metacyclic(13, 4, 5), metacyclic(13, 4, 12)));

  auto verdict = isomorphism_certificate(metacyclic(13, 4, 5), metacyclic(13, 4, 8));
  REQUIRE(verdict.witness.has_value());
  CHECK(verdict.witness->bijective());
}

TEST_CASE("conjugacy classes agree with direct conjugation") {
  CHECK(conjugacy_classes(cyclic(44)).size() == 44);
  CHECK(conjugacy_classes(q8_times_cyclic(1)).size() == 5);
  CHECK(conjugacy_classes(dihedral(22)).size() == 14);
  for (auto spec : {"q8xc:1", "dihedral:22", "metacyclic:13,4,5", "d2semi:3,3"}) {
    auto G = build_group(spec);
    CHECK(conjugacy_classes(G).size() == brute_force_class_count(G));
  }
}

TEST_CASE("elements of a given order") {
  auto D = dihedral(22);
  CHECK(elements_of_order(D, 2).size() == 23);

  auto M2 = metacyclic(13, 4, 12);
  auto inv = elements_of_order(M2, 2);
  REQUIRE(inv.size() == 1);
  CHECK(M2.label(inv.front()) == "b^2");

  auto M4 = metacyclic(13, 4, 5);
  auto involutions = elements_of_order(M4, 2);
  CHECK(involutions.size() == 13);
  for (Elem x : involutions) {
    CHECK(M4.normal_exponent(x, "b") == 2);
  }
}
