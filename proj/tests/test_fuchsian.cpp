#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "surfaut/fuchsian.hpp"
#include "surfaut/oracles.hpp"

using namespace surfaut;

namespace {
  Signature sig(char const* s) {
    return Signature::parse(s);
  }
}  // namespace

TEST_CASE("signature parsing and printing") {
  CHECK(sig("0;2,2,4,4").to_string() == "0;2,2,4,4");
  CHECK(sig("(0; 4,2,4,2)").to_string() == "0;2,2,4,4");
  CHECK(sig("1;2").genus() == 1);
  CHECK(sig("2;").length() == 0);
  for (auto bad : {"", "0", ";2", "0;1", "0;2,", "x;2", "0;2,,2", "-1;2"}) {
    CHECK_THROWS_AS(Signature::parse(bad), InvalidArgument);
  }
}

TEST_CASE("normalized area") {
  CHECK(normalized_area(sig("0;2,2,2,2,2")) == Rational(1, 2));
  CHECK(normalized_area(sig("1;2")) == Rational(1, 2));
  CHECK(normalized_area(sig("0;2,8,8")) == Rational(1, 4));
  CHECK(normalized_area(sig("0;2,2,4,4")) == Rational(1, 2));
}

TEST_CASE("Teichmueller dimension") {
  CHECK(teich_dim(sig("0;2,2,4,4")) == 1);
  CHECK(teich_dim(sig("0;2,2,2,2,2")) == 2);
  CHECK(teich_dim(sig("1;2")) == 1);
  CHECK(teich_dim(sig("0;2,8,8")) == 0);
}

TEST_CASE("Riemann-Hurwitz genus") {
  CHECK(rh_genus(sig("0;2,2,2,2,2"), 44) == 12);
  CHECK(rh_genus(sig("0;2,2,4,4"), 52) == 14);
  CHECK(rh_genus(sig("0;2,8,8"), 136) == 18);
  CHECK_THROWS_AS(rh_genus(sig("0;2,2,2,2,2"), 3), InvalidArgument);
}

TEST_CASE("candidate signatures for order 44 in genus 12") {
  auto all = candidate_signatures({1, 2, 4, 11, 22, 44}, 44, 12);
  CHECK(all == std::vector<Signature>{sig("0;2,2,2,2,2"), sig("0;2,2,4,4"), sig("1;2")});

  auto dihedral_orders = candidate_signatures({1, 2, 11, 22}, 44, 12);
  CHECK(dihedral_orders == std::vector<Signature>{sig("0;2,2,2,2,2"), sig("1;2")});

  auto area_half = candidate_signatures({1, 2, 3, 4, 6, 12}, 12, 4);
  CHECK(std::count(area_half.begin(), area_half.end(), sig("0;2,2,3,6")) == 1);
  CHECK(std::count(area_half.begin(), area_half.end(), sig("0;2,3,3,3")) == 1);
}

TEST_CASE("candidate signatures agree with an integer brute force") {
  std::vector<std::pair<std::set<std::int64_t>, std::int64_t>> cases = {
      {{1, 2, 4, 11, 22, 44}, 44}, {{1, 2, 3, 4, 6, 12}, 12}, {{1, 2, 4, 8, 17, 34, 68, 136}, 136},
      {{1, 2, 3, 6, 7, 14, 21, 42}, 84}, {{1, 2, 4, 13, 26, 52}, 52}};
  for (auto const& [orders, n] : cases) {
    for (std::int64_t g = 2; g <= 40; ++g) {
      CHECK(candidate_signatures(orders, n, g) == oracle::brute_force_signatures(orders, n, g));
    }
  }
}

TEST_CASE("dimension-preserving extensions") {
  auto e = possible_extensions(sig("0;2,2,4,4"));
  REQUIRE(e.size() == 1);
  CHECK(e.front().outer == sig("0;2,2,2,4"));
  CHECK(e.front().index == 2);

  CHECK(possible_extensions(sig("0;2,2,2,2,2")).empty());

  auto one = possible_extensions(sig("1;2"));
  REQUIRE(one.size() == 1);
  CHECK(one.front().outer == sig("0;2,2,2,4"));
  CHECK(one.front().index == 2);
  CHECK(normalized_area(one.front().inner)
        == normalized_area(one.front().outer) * Rational(one.front().index));
}
