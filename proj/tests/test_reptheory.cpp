#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "surfaut/jacobian.hpp"
#include "surfaut/reptheory.hpp"

using namespace surfaut;

namespace {

  using Complex = std::complex<double>;
  using Mat2    = std::array<std::array<Complex, 2>, 2>;

  // Numerical value of an exact cyclotomic integer; only used as a check.
  Complex to_complex(CyclotomicValue const& v) {
    Complex     z   = 0;
    auto const& c   = v.coefficients();
    double const N  = static_cast<double>(v.conductor());
    for (std::size_t k = 0; k < c.size(); ++k) {
      z += static_cast<double>(c[k]) * std::polar(1.0, 2 * std::numbers::pi * k / N);
    }
    return z;
  }

  Mat2 mul(Mat2 const& x, Mat2 const& y) {
    Mat2 z{};
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        z[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
      }
    }
    return z;
  }

  // The degree-2 representation r -> diag(w^j, w^-j), s -> swap, applied to
  // the normal form s^e r^i.
  Mat2 rho(FiniteGroup const& D, std::int64_t j, Elem x) {
    std::int64_t const n = static_cast<std::int64_t>(D.order() / 2);
    Complex const      w = std::polar(1.0, 2 * std::numbers::pi * j / n);
    Mat2 r{{{w, 0}, {0, std::conj(w)}}};
    Mat2 s{{{0, 1}, {1, 0}}};
    Mat2 out{{{1, 0}, {0, 1}}};
    if (D.normal_exponent(x, "s")) {
      out = mul(out, s);
    }
    for (std::int64_t k = 0; k < D.normal_exponent(x, "r"); ++k) {
      out = mul(out, r);
    }
    return out;
  }

  // Trace of the averaging projector over H.
  double projector_rank(FiniteGroup const& D, std::int64_t j, SubgroupHandle const& H) {
    Complex tr = 0;
    for (Elem h : H.elements()) {
      auto m = rho(D, j, h);
      tr += m[0][0] + m[1][1];
    }
    return tr.real() / static_cast<double>(H.order());
  }

  Character const& by_name(std::vector<Character> const& t, std::string const& name) {
    for (auto const& c : t) {
      if (c.name == name) {
        return c;
      }
    }
    throw std::runtime_error("no character " + name);
  }

}  // namespace

TEST_CASE("cyclotomic arithmetic") {
  auto i = CyclotomicValue::root_power(4, 1);
  CHECK(i * i == CyclotomicValue(4, -1));
  for (std::int64_t N : {5, 12, 20, 44, 52}) {
    CyclotomicValue sum(N, 0);
    for (std::int64_t k = 0; k < N; ++k) {
      auto z = CyclotomicValue::root_power(N, k);
      CHECK(z * z.conj() == CyclotomicValue(N, 1));
      CHECK(z.lift(2 * N) == CyclotomicValue::root_power(2 * N, 2 * k));
      sum += z;
    }
    CHECK(sum.is_rational());
    CHECK(sum.rational_value() == 0);
  }
  auto w = CyclotomicValue::root_power(12, 3);
  CHECK_FALSE(w.is_rational());
  CHECK(w.to_string() == "w12^3");
  CHECK(CyclotomicValue(12, 7).to_string() == "7");
  CHECK_THROWS(w.rational_value());
}

TEST_CASE("dihedral character table") {
  auto t = dihedral_characters(11);
  CHECK(t.size() == 14);
  std::int64_t squares = 0;
  for (auto const& c : t) {
    squares += c.degree * c.degree;
    CHECK(c.values.front().conductor() == 22);
  }
  CHECK(squares == 44);

  FiniteGroup const& D  = t.front().group;
  Elem const         r  = D.parse("r");
  Elem const         rq = D.parse("r^11");
  for (std::int64_t j = 1; j <= 10; ++j) {
    CHECK(by_name(t, "V" + std::to_string(j))(rq) == CyclotomicValue(22, j % 2 ? -2 : 2));
  }
  CHECK(by_name(t, "U2+")(r) == CyclotomicValue(22, -1));
  CHECK(by_name(t, "U2-")(r) == CyclotomicValue(22, -1));
  CHECK_THROWS_AS(dihedral_characters(dihedral(20)), InvalidArgument);
}

TEST_CASE("metacyclic character table") {
  auto t = metacyclic4_characters(13, 5);
  CHECK(t.size() == 7);
  std::int64_t squares = 0;
  for (auto const& c : t) {
    squares += c.degree * c.degree;
  }
  CHECK(squares == 52);
  FiniteGroup const& M = t.front().group;
  Elem const         b = M.parse("b");
  for (std::int64_t l = 0; l < 4; ++l) {
    CHECK(by_name(t, "U" + std::to_string(l))(b) == CyclotomicValue::root_power(52, 13 * l));
  }
  for (std::int64_t j = 1; j <= 3; ++j) {
    CHECK(by_name(t, "V" + std::to_string(j))(b) == CyclotomicValue(52, 0));
  }
}

TEST_CASE("orbit representatives and roots of unity") {
  auto p = orbit_reps_k(13, 5);
  CHECK(p.reps == std::vector<std::int64_t>{1, 2, 4});
  CHECK(p.blocks == std::vector<std::vector<std::int64_t>>{{1, 5, 12, 8}, {2, 10, 11, 3},
                                                           {4, 7, 9, 6}});
  CHECK(orbit_reps_k(5, 2).reps == std::vector<std::int64_t>{1});
  CHECK_THROWS_AS(orbit_reps_k(13, 4), InvalidArgument);

  CHECK(find_root_of_unity(13, 4) == 5);
  CHECK(find_root_of_unity(17, 8) == 2);
  CHECK(find_root_of_unity(7, 6) == 3);
  CHECK_THROWS_AS(find_root_of_unity(11, 8), InvalidArgument);
}

TEST_CASE("both orthogonality relations hold, checked numerically") {
  std::vector<std::vector<Character>> tables;
  for (std::int64_t q : {5, 7, 11, 13}) {
    tables.push_back(dihedral_characters(q));
  }
  for (std::int64_t q : {5, 13, 17, 29}) {
    tables.push_back(metacyclic4_characters(q, find_root_of_unity(q, 4)));
  }
  for (auto const& t : tables) {
    FiniteGroup const& G = t.front().group;
    CAPTURE(G.description());
    double const n = static_cast<double>(G.order());
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = 0; j < t.size(); ++j) {
        Complex s = 0;
        for (Elem x = 0; x < G.order(); ++x) {
          s += to_complex(t[i](x)) * std::conj(to_complex(t[j](x)));
        }
        CHECK(std::abs(s / n - (i == j ? 1.0 : 0.0)) < 1e-9);
        CHECK(character_inner_product(t[i], t[j]) == Rational(i == j ? 1 : 0));
      }
    }
    auto const& classes = G.conjugacy_classes();
    REQUIRE(classes.size() == t.size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (std::size_t d = 0; d < classes.size(); ++d) {
        Complex s = 0;
        for (auto const& chi : t) {
          s += to_complex(chi.values[c]) * std::conj(to_complex(chi.values[d]));
        }
        double expected = c == d ? n / static_cast<double>(classes[c].size()) : 0.0;
        CHECK(std::abs(s - expected) < 1e-9);
      }
    }
  }
}

TEST_CASE("fixed dimensions in the dihedral family") {
  for (std::int64_t q : {5, 7, 11, 13}) {
    auto               t = dihedral_characters(q);
    FiniteGroup const& D = t.front().group;
    auto S  = cyclic_subgroup(D, D.parse("s"));
    auto R  = cyclic_subgroup(D, D.parse("r"));
    auto SR = cyclic_subgroup(D, D.parse("sr"));
    auto RQ = cyclic_subgroup(D, D.pow(D.parse("r"), q));

    // rows against <s>, <r>, <sr>
    CHECK(std::vector{fixed_dim(by_name(t, "U1-"), S), fixed_dim(by_name(t, "U1-"), R),
                      fixed_dim(by_name(t, "U1-"), SR)} == std::vector<std::int64_t>{0, 1, 0});
    CHECK(std::vector{fixed_dim(by_name(t, "U2+"), S), fixed_dim(by_name(t, "U2+"), R),
                      fixed_dim(by_name(t, "U2+"), SR)} == std::vector<std::int64_t>{1, 0, 0});
    CHECK(std::vector{fixed_dim(by_name(t, "U2-"), S), fixed_dim(by_name(t, "U2-"), R),
                      fixed_dim(by_name(t, "U2-"), SR)} == std::vector<std::int64_t>{0, 0, 1});
    for (std::int64_t j = 1; j < q; ++j) {
      auto const& V = by_name(t, "V" + std::to_string(j));
      CHECK(fixed_dim(V, S) == 1);
      CHECK(fixed_dim(V, R) == 0);
      CHECK(fixed_dim(V, SR) == 1);
      CHECK(fixed_dim(V, RQ) == (j % 2 == 0 ? 2 : 0));
      for (auto const& H : {S, R, SR, RQ}) {
        CHECK(static_cast<double>(fixed_dim(V, H)) == Catch::Approx(projector_rank(D, j, H)).margin(1e-9));
      }
    }
  }
}

TEST_CASE("fixed dimension invariants") {
  std::vector<std::vector<Character>> tables = {dihedral_characters(11),
                                                metacyclic4_characters(13, 5)};
  for (auto const& t : tables) {
    FiniteGroup const& G = t.front().group;
    auto const trivial   = cyclic_subgroup(G, G.identity());
    for (auto const& chi : t) {
      CHECK(fixed_dim(chi, trivial) == chi.degree);
    }
    REQUIRE(t.front().is_trivial());
    for (Elem x = 0; x < G.order(); ++x) {
      CHECK(fixed_dim(t.front(), cyclic_subgroup(G, x)) == 1);
    }
  }

  auto const&        t  = tables[1];
  FiniteGroup const& M  = t.front().group;
  auto const         Hb = cyclic_subgroup(M, M.parse("b"));
  for (std::int64_t k = 1; k < 13; ++k) {
    auto Hk = cyclic_subgroup(M, M.mul(M.pow(M.parse("a"), k), M.parse("b")));
    for (auto const& chi : t) {
      CHECK(fixed_dim(chi, Hk) == fixed_dim(chi, Hb));
    }
  }
}
