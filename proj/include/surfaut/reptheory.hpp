// surfaut - exact complex characters of the dihedral group of order 4q and
// of C_q x|_4 C_4, and fixed-subspace dimensions.
//
// Character values are cyclotomic integers whose conductor is the group
// exponent.  Each table is built by evaluating a closed formula on every
// element and then collapsing to conjugacy classes; the collapse refuses a
// formula that is not a class function.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "surfaut/arith.hpp"
#include "surfaut/cyclotomic.hpp"
#include "surfaut/error.hpp"
#include "surfaut/fuchsian.hpp"
#include "surfaut/group.hpp"

namespace surfaut {

  struct Character {
    FiniteGroup                  group;
    std::string                  name;
    std::int64_t                 degree = 0;
    std::vector<CyclotomicValue> values;  // indexed by conjugacy class

    CyclotomicValue const& operator()(Elem x) const {
      return values.at(group.class_of(x));
    }
    bool is_trivial() const {
      for (auto const& v : values) {
        if (!(v == CyclotomicValue(v.conductor(), 1))) {
          return false;
        }
      }
      return true;
    }
  };

  namespace detail {

    inline Character character_from_formula(FiniteGroup const& G, std::string name,
                                            std::function<CyclotomicValue(Elem)> const& f) {
      auto const& classes = G.conjugacy_classes();
      Character   chi{G, std::move(name), 0, {}};
      for (auto const& cls : classes) {
        CyclotomicValue v = f(cls.front());
        for (Elem x : cls) {
          if (!(f(x) == v)) {
            fail_invariant("character " + chi.name + " is not constant on the class of "
                           + G.label(cls.front()));
          }
        }
        chi.values.push_back(std::move(v));
      }
      CyclotomicValue const& at_one = chi.values.at(G.class_of(G.identity()));
      chi.degree                    = at_one.rational_value();
      return chi;
    }

    inline void require_family(FiniteGroup const& G, std::string const& family,
                               std::size_t arity) {
      auto const& spec = G.spec();
      if (!spec || spec->factors.size() != 1 || spec->factors[0].family != family
          || spec->factors[0].params.size() != arity) {
        fail_invalid("expected a " + family + " group, got " + G.description());
      }
    }

  }  // namespace detail

  /// Characters of the dihedral group of order 4q (generated by r of order
  /// 2q and a reflection s): four linear characters U1+, U1-, U2+, U2- with
  /// r -> 1, 1, -1, -1 and s -> 1, -1, 1, -1, then V_1..V_{q-1} of degree 2.
  inline std::vector<Character> dihedral_characters(FiniteGroup const& G) {
    detail::require_family(G, "dihedral", 1);
    std::int64_t const n = G.spec()->factors[0].params[0];
    if (n < 6 || n % 2 != 0 || (n / 2) % 2 == 0) {
      detail::fail_invalid("dihedral_characters needs the dihedral group of order 4q with q odd");
    }
    std::int64_t const q = n / 2;
    std::int64_t const N = static_cast<std::int64_t>(G.exponent());  // 2q
    auto sign = [N](bool negative) { return CyclotomicValue(N, negative ? -1 : 1); };

    std::vector<Character> out;
    struct Linear {
      char const* name;
      bool        r_neg, s_neg;
    };
    for (auto [name, r_neg, s_neg] : {Linear{"U1+", false, false}, Linear{"U1-", false, true},
                                      Linear{"U2+", true, false}, Linear{"U2-", true, true}}) {
      out.push_back(detail::character_from_formula(G, name, [&, r_neg, s_neg](Elem x) {
        bool neg = (r_neg && G.normal_exponent(x, "r") % 2 != 0)
                   != (s_neg && G.normal_exponent(x, "s") != 0);
        return sign(neg);
      }));
    }
    for (std::int64_t j = 1; j <= q - 1; ++j) {
      out.push_back(detail::character_from_formula(G, "V" + std::to_string(j), [&, j](Elem x) {
        if (G.normal_exponent(x, "s") != 0) {
          return CyclotomicValue(N, 0);
        }
        std::int64_t k = G.normal_exponent(x, "r");
        return CyclotomicValue::root_power(N, j * k) + CyclotomicValue::root_power(N, -j * k);
      }));
    }
    return out;
  }

  inline std::vector<Character> dihedral_characters(std::int64_t q) {
    if (q < 3 || q % 2 == 0) {
      detail::fail_invalid("dihedral_characters needs an odd q >= 3");
    }
    return dihedral_characters(dihedral(2 * q));
  }

  /// Partition of {1, ..., q-1} into the <u>-orbits {k, uk, u^2 k, u^3 k}.
  struct OrbitPartition {
    std::vector<std::int64_t>              reps;    // least element of each block
    std::vector<std::vector<std::int64_t>> blocks;  // each listed as k, uk, u^2 k, u^3 k
  };

  inline OrbitPartition orbit_reps_k(std::int64_t q, std::int64_t u) {
    if (!is_prime(q)) {
      detail::fail_invalid("orbit_reps_k: " + std::to_string(q) + " is not prime");
    }
    if (multiplicative_order(u, q) != 4) {
      detail::fail_invalid("orbit_reps_k: " + std::to_string(u) + " does not have order 4 mod "
                           + std::to_string(q));
    }
    OrbitPartition    out;
    std::vector<char> covered(static_cast<std::size_t>(q), 0);
    for (std::int64_t k = 1; k < q; ++k) {
      if (covered[k]) {
        continue;
      }
      std::vector<std::int64_t> block;
      std::int64_t              x = k;
      for (int t = 0; t < 4; ++t) {
        if (covered[x]) {
          detail::fail_invariant("orbit_reps_k: overlapping blocks");
        }
        covered[x] = 1;
        block.push_back(x);
        x = mod(x * u, q);
      }
      out.reps.push_back(k);
      out.blocks.push_back(std::move(block));
    }
    if (static_cast<std::int64_t>(out.reps.size()) * 4 != q - 1) {
      detail::fail_invariant("orbit_reps_k: blocks do not cover 1..q-1");
    }
    return out;
  }

  /// Characters of C_q x|_4 C_4 = <a, b : bab^-1 = a^u>: U_0..U_3 with
  /// a -> 1, b -> i^l, then V_1..V_m of degree 4 induced from a -> w_q^{k_j}.
  inline std::vector<Character> metacyclic4_characters(FiniteGroup const& G) {
    detail::require_family(G, "metacyclic", 3);
    auto const&        p = G.spec()->factors[0].params;
    std::int64_t const q = p[0], m = p[1], u = p[2];
    if (m != 4 || !is_prime(q) || q % 4 != 1) {
      detail::fail_invalid("metacyclic4_characters needs C_q x|_4 C_4 with q prime, q = 1 mod 4");
    }
    auto const         part = orbit_reps_k(q, u);
    std::int64_t const N    = static_cast<std::int64_t>(G.exponent());  // 4q

    std::vector<Character> out;
    for (std::int64_t l = 0; l < 4; ++l) {
      out.push_back(detail::character_from_formula(G, "U" + std::to_string(l), [&, l](Elem x) {
        return CyclotomicValue::root_power(N, (N / 4) * l * G.normal_exponent(x, "b"));
      }));
    }
    for (std::size_t j = 0; j < part.reps.size(); ++j) {
      auto const& block = part.blocks[j];
      out.push_back(
          detail::character_from_formula(G, "V" + std::to_string(j + 1), [&, block](Elem x) {
            CyclotomicValue v(N, 0);
            if (G.normal_exponent(x, "b") != 0) {
              return v;
            }
            std::int64_t i = G.normal_exponent(x, "a");
            for (auto k : block) {
              v += CyclotomicValue::root_power(N, (N / q) * i * k);
            }
            return v;
          }));
    }
    return out;
  }

  inline std::vector<Character> metacyclic4_characters(std::int64_t q, std::int64_t u) {
    if (!is_prime(q) || q % 4 != 1) {
      detail::fail_invalid("metacyclic4_characters needs a prime q = 1 mod 4");
    }
    if (multiplicative_order(u, q) != 4) {
      detail::fail_invalid("metacyclic4_characters: " + std::to_string(u)
                           + " is not a primitive 4th root of unity mod " + std::to_string(q));
    }
    return metacyclic4_characters(metacyclic(q, 4, u));
  }

  /// Character table for any group with a closed-form table here.
  inline std::vector<Character> characters_for(FiniteGroup const& G) {
    auto const& spec = G.spec();
    if (spec && spec->factors.size() == 1) {
      auto const& f = spec->factors[0];
      if (f.family == "dihedral") {
        return dihedral_characters(G);
      }
      if (f.family == "metacyclic") {
        return metacyclic4_characters(G);
      }
    }
    detail::fail_invalid("no character table available for " + G.description());
  }

  /// <chi, psi> = (1/|G|) sum_x chi(x) conj(psi(x)).
  inline Rational character_inner_product(Character const& chi, Character const& psi) {
    if (!chi.group.same_as(psi.group)) {
      detail::fail_invalid("characters of different groups");
    }
    auto const&     classes = chi.group.conjugacy_classes();
    CyclotomicValue sum(chi.values.front().conductor(), 0);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      sum += static_cast<std::int64_t>(classes[c].size()) * (chi.values[c] * psi.values[c].conj());
    }
    return Rational(sum.rational_value(), static_cast<std::int64_t>(chi.group.order()));
  }

  /// dim V^H = (1/|H|) sum_{h in H} chi(h).
  inline std::int64_t fixed_dim(Character const& chi, SubgroupHandle const& H) {
    if (!chi.group.same_as(H.parent())) {
      detail::fail_invalid("fixed_dim: subgroup of a different group");
    }
    CyclotomicValue sum(chi.values.front().conductor(), 0);
    for (Elem h : H.elements()) {
      sum += chi(h);
    }
    if (!sum.is_rational()) {
      detail::fail_invariant("fixed_dim: irrational character sum for " + chi.name);
    }
    auto const total = sum.rational_value();
    auto const order = static_cast<std::int64_t>(H.order());
    if (total % order != 0 || total < 0) {
      detail::fail_invariant("fixed_dim: " + std::to_string(total) + "/" + std::to_string(order)
                             + " is not a non-negative integer for " + chi.name);
    }
    return total / order;
  }

}  // namespace surfaut
