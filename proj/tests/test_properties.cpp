// Randomized invariants of braid moves and automorphisms, and worker-count
// independence of the parallel searches.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "surfaut/genvec.hpp"
#include "surfaut/report.hpp"
#include "surfaut/classify.hpp"

using namespace surfaut;

namespace {

  std::vector<std::size_t> class_multiset(GeneratingVector const& v) {
    std::vector<std::size_t> out;
    for (Elem x : v.elliptic()) {
      out.push_back(v.group().class_of(x));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::size_t> order_multiset(GeneratingVector const& v) {
    std::vector<std::size_t> out;
    for (Elem x : v.elliptic()) {
      out.push_back(v.group().element_order(x));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace

TEST_CASE("random braid walks preserve every orbit invariant") {
  std::mt19937 rng(7211);
  std::vector<std::pair<char const*, char const*>> cases = {
      {"dihedral:22", "0;2,2,2,2,2"}, {"metacyclic:13,4,5", "0;2,2,4,4"},
      {"metacyclic:17,8,2", "0;2,8,8"}, {"d2semi:3,3", "0;2,2,2,2,2"}, {"cyclic:15", "0;3,5,15"}};
  std::size_t applications = 0;
  for (auto [spec, s] : cases) {
    auto G     = build_group(spec);
    auto sig   = Signature::parse(s);
    auto vecs  = enumerate_vectors(G, sig);
    REQUIRE_FALSE(vecs.empty());
    auto autos = automorphisms(G);
    for (int walk = 0; walk < 40; ++walk) {
      auto v       = vecs[rng() % vecs.size()];
      auto classes = class_multiset(v);
      auto orders  = order_multiset(v);
      for (int step = 0; step < 15; ++step) {
        std::size_t i   = 1 + rng() % (sig.length() - 1);
        auto        dir = rng() % 2 ? BraidDirection::forward : BraidDirection::backward;
        auto        w   = braid_move(v, i, dir);
        auto        inv = dir == BraidDirection::forward ? BraidDirection::backward
                                                         : BraidDirection::forward;
        ++applications;
        REQUIRE(braid_move(w, i, inv) == v);
        REQUIRE(vector_satisfies(w));
        REQUIRE(subgroup_generated(G, std::span<Elem const>(w.elliptic())).order() == G.order());
        REQUIRE(class_multiset(w) == classes);
        REQUIRE(order_multiset(w) == orders);
        REQUIRE(action_genus(w) == action_genus(v));
        v = w;
      }
      auto const& omega = autos[rng() % autos.size()];
      auto        u     = apply_automorphism(omega, v);
      REQUIRE(vector_satisfies(u));
      REQUIRE(order_multiset(u) == orders);
    }
  }
  CHECK(applications >= 1000);
}

TEST_CASE("results do not depend on the worker count") {
  for (auto [spec, s] : {std::pair{"dihedral:26", "0;2,2,2,2,2"},
                         std::pair{"metacyclic:13,4,5", "0;2,2,4,4"},
                         std::pair{"cyclic:15", "0;3,5,15"}}) {
    auto G   = build_group(spec);
    auto sig = Signature::parse(s);
    CHECK(enumerate_vectors(G, sig, {1, kDefaultSearchBudget})
          == enumerate_vectors(G, sig, {4, kDefaultSearchBudget}));
    auto c1 = orbit_classes(G, sig, {1, kDefaultSearchBudget});
    auto c4 = orbit_classes(G, sig, {4, kDefaultSearchBudget});
    REQUIRE(c1.size() == c4.size());
    for (std::size_t k = 0; k < c1.size(); ++k) {
      CHECK(c1[k].representative == c4[k].representative);
      CHECK(c1[k].orbit_size == c4[k].orbit_size);
      CHECK(c1[k].member_count == c4[k].member_count);
    }
  }
  auto a = to_json(classify_genus(14, {1, kDefaultSearchBudget})).dump();
  auto b = to_json(classify_genus(14, {4, kDefaultSearchBudget})).dump();
  CHECK(a == b);
}
