// surfaut - isotypic factor dimensions, admissible subgroup collections and
// quotient genera for a group action given by a generating vector.
//
// For an irreducible character chi of degree d, the dimension attached to
// chi by an action with signature (h; m_1..m_l) is
//     d (h - 1) + 1/2 sum_i (d - dim V^<theta(x_i)>),
// and h for the trivial character.  The intermediate quotient S/H has genus
// given by Riemann-Hurwitz on the coset space G/H:
//     2 g_H - 2 = [G:H](2h - 2) + sum_i ([G:H] - #orbits of <theta(x_i)>).

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "surfaut/arith.hpp"
#include "surfaut/error.hpp"
#include "surfaut/fuchsian.hpp"
#include "surfaut/genvec.hpp"
#include "surfaut/group.hpp"
#include "surfaut/reptheory.hpp"

namespace surfaut {

  inline SubgroupHandle cyclic_subgroup(FiniteGroup const& G, Elem x) {
    return subgroup_generated(G, {x});
  }

  inline std::int64_t factor_dimension(Character const& chi, GeneratingVector const& vec) {
    if (!chi.group.same_as(vec.group())) {
      detail::fail_invalid("factor_dimension: character and vector live on different groups");
    }
    std::int64_t const h = vec.signature().genus();
    if (chi.is_trivial()) {
      return h;
    }
    std::int64_t const d     = chi.degree;
    std::int64_t       twice = 2 * d * (h - 1);
    for (Elem x : vec.elliptic()) {
      twice += d - fixed_dim(chi, cyclic_subgroup(vec.group(), x));
    }
    if (twice % 2 != 0 || twice < 0) {
      detail::fail_invariant("factor_dimension of " + chi.name + " is " + std::to_string(twice)
                             + "/2, not a non-negative integer");
    }
    return twice / 2;
  }

  /// The characters with non-zero factor dimension.
  inline std::vector<Character> relevant_reps(GeneratingVector const& vec,
                                              std::vector<Character> const& table) {
    std::vector<Character> out;
    for (auto const& chi : table) {
      if (factor_dimension(chi, vec) != 0) {
        out.push_back(chi);
      }
    }
    return out;
  }

  inline std::vector<Character> relevant_reps(GeneratingVector const& vec) {
    return relevant_reps(vec, characters_for(vec.group()));
  }

  /// sum_i dim V^{H_i} <= d for every relevant character V.
  inline bool is_admissible(std::vector<SubgroupHandle> const& subgroups,
                            GeneratingVector const& vec, std::vector<Character> const& table) {
    for (auto const& H : subgroups) {
      if (!H.parent().same_as(vec.group())) {
        detail::fail_invalid("is_admissible: subgroup of a different group");
      }
    }
    for (auto const& chi : relevant_reps(vec, table)) {
      std::int64_t total = 0;
      for (auto const& H : subgroups) {
        total += fixed_dim(chi, H);
      }
      if (total > chi.degree) {
        return false;
      }
    }
    return true;
  }

  inline bool is_admissible(std::vector<SubgroupHandle> const& subgroups,
                            GeneratingVector const& vec) {
    return is_admissible(subgroups, vec, characters_for(vec.group()));
  }

  namespace detail {

    /// Left coset id of every element: position of the coset gH in order of
    /// first appearance.
    inline std::vector<std::size_t> left_coset_ids(SubgroupHandle const& H) {
      FiniteGroup const&       G = H.parent();
      std::vector<std::size_t> id(G.order(), SIZE_MAX);
      std::size_t              next = 0;
      for (Elem g = 0; g < G.order(); ++g) {
        if (id[g] != SIZE_MAX) {
          continue;
        }
        for (Elem h : H.elements()) {
          id[G.mul(g, h)] = next;
        }
        ++next;
      }
      return id;
    }

    /// Number of cycles of left multiplication by x on G/H.
    inline std::size_t coset_cycles(SubgroupHandle const& H, std::vector<std::size_t> const& id,
                                    Elem x) {
      FiniteGroup const&       G = H.parent();
      std::size_t const        n = H.index();
      std::vector<Elem>        rep(n, 0);
      for (Elem g = G.order(); g-- > 0;) {
        rep[id[g]] = g;
      }
      std::vector<char> seen(n, 0);
      std::size_t       cycles = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (seen[c]) {
          continue;
        }
        ++cycles;
        for (std::size_t k = c; !seen[k]; k = id[G.mul(x, rep[k])]) {
          seen[k] = 1;
        }
      }
      return cycles;
    }

  }  // namespace detail

  /// Genus of S/H for the action given by vec.
  inline std::int64_t quotient_genus(GeneratingVector const& vec, SubgroupHandle const& H) {
    if (!H.parent().same_as(vec.group())) {
      detail::fail_invalid("quotient_genus: subgroup of a different group");
    }
    auto const         id    = detail::left_coset_ids(H);
    std::int64_t const n     = static_cast<std::int64_t>(H.index());
    std::int64_t       twice = n * (2 * vec.signature().genus() - 2);
    for (Elem x : vec.elliptic()) {
      twice += n - static_cast<std::int64_t>(detail::coset_cycles(H, id, x));
    }
    if (twice % 2 != 0 || twice < -2) {
      detail::fail_invariant("quotient_genus: 2g - 2 = " + std::to_string(twice));
    }
    return twice / 2 + 1;
  }

  /// Branching of S/H -> S/G: for each branch point the cycle lengths of
  /// theta(x_i) on G/H that exceed 1.
  inline std::vector<std::vector<std::size_t>> quotient_branching(GeneratingVector const& vec,
                                                                  SubgroupHandle const& H) {
    FiniteGroup const& G  = vec.group();
    auto const         id = detail::left_coset_ids(H);
    std::size_t const  n  = H.index();
    std::vector<Elem>  rep(n, 0);
    for (Elem g = G.order(); g-- > 0;) {
      rep[id[g]] = g;
    }
    std::vector<std::vector<std::size_t>> out;
    for (Elem x : vec.elliptic()) {
      std::vector<char>        seen(n, 0);
      std::vector<std::size_t> lengths;
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t len = 0;
        for (std::size_t k = c; !seen[k]; k = id[G.mul(x, rep[k])]) {
          seen[k] = 1;
          ++len;
        }
        if (len > 1) {
          lengths.push_back(len);
        }
      }
      out.push_back(std::move(lengths));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // The two families
  ////////////////////////////////////////////////////////////////////////

  enum class Family { F1, F2 };

  inline std::string to_string(Family f) {
    return f == Family::F1 ? "F1" : "F2";
  }

  inline Family parse_family(std::string const& text) {
    if (text == "F1" || text == "f1" || text == "1") {
      return Family::F1;
    }
    if (text == "F2" || text == "f2" || text == "2") {
      return Family::F2;
    }
    detail::fail_invalid("unknown family '" + text + "' (expected F1 or F2)");
  }

  inline void check_family_prime(Family f, std::int64_t q) {
    if (q < 3 || q > 127 || !is_prime(q)) {
      detail::fail_invalid("q must be an odd prime at most 127 (got " + std::to_string(q) + ")");
    }
    if (f == Family::F1 && q % 4 != 1) {
      detail::fail_invalid("family F1 needs q = 1 mod 4 (got " + std::to_string(q) + ")");
    }
  }

  /// F2: Dih(2q) with (s, s, sr^{q+1}, sr, r^q) on (0;2,2,2,2,2).
  /// F1: C_q x|_4 C_4 with (b^2, ab^2, ab, b^3) on (0;2,2,4,4).
  inline GeneratingVector family_vector(Family f, std::int64_t q) {
    check_family_prime(f, q);
    GeneratingVector vec;
    if (f == Family::F2) {
      vec = GeneratingVector::from_labels(
          dihedral(2 * q), Signature::parse("0;2,2,2,2,2"),
          {"s", "s", "sr^" + std::to_string(q + 1), "sr", "r^" + std::to_string(q)});
    } else {
      vec = GeneratingVector::from_labels(metacyclic(q, 4, find_root_of_unity(q, 4)),
                                          Signature::parse("0;2,2,4,4"),
                                          {"b^2", "ab^2", "ab", "b^3"});
    }
    auto check = vector_satisfies(vec);
    if (!check) {
      detail::fail_invariant("family vector invalid: " + check.violations.front());
    }
    return vec;
  }

  struct DecompositionFactor {
    std::string  subgroup;
    std::int64_t genus        = 0;
    std::int64_t multiplicity = 1;
  };

  struct DecompositionReport {
    Family                           family = Family::F2;
    std::int64_t                     q      = 0;
    std::int64_t                     genus  = 0;
    std::string                      group;
    std::string                      signature;
    std::vector<std::string>         vector;
    std::vector<std::string>         collection;  // the admissible subgroups, by generator
    std::vector<DecompositionFactor> factors;
    std::int64_t                     residual            = 0;
    bool                             admissible          = false;
    bool                             genus_sum_ok        = false;
    bool                             conjugacy_ok        = true;
    bool                             has_elliptic_factor = false;
    std::vector<std::string>         relevant;  // names of characters with non-zero dimension
  };

  inline DecompositionReport decomposition_report(Family f, std::int64_t q) {
    auto const         vec   = family_vector(f, q);
    FiniteGroup const& G     = vec.group();
    auto const         table = characters_for(G);

    DecompositionReport rep;
    rep.family    = f;
    rep.q         = q;
    rep.genus     = action_genus(vec);
    rep.group     = G.description();
    rep.signature = vec.signature().to_string();
    rep.vector    = vec.elliptic_labels();

    std::vector<Elem> gens;
    if (f == Family::F2) {
      gens = {G.parse("r"), G.parse("s"), G.parse("sr")};
      for (Elem x : gens) {
        auto H = cyclic_subgroup(G, x);
        rep.factors.push_back({"<" + G.label(x) + ">", quotient_genus(vec, H), 1});
      }
    } else {
      Elem const a = G.parse("a"), b = G.parse("b");
      gens         = {a};
      rep.factors.push_back({"<a>", quotient_genus(vec, cyclic_subgroup(G, a)), 1});
      auto const         Hb = cyclic_subgroup(G, b);
      std::int64_t const gb = quotient_genus(vec, Hb);
      for (std::int64_t t = 1; t <= 4; ++t) {
        Elem x = G.mul(G.pow(a, t), b);
        gens.push_back(x);
        auto Hx = cyclic_subgroup(G, x);
        // <a^t b> must be conjugate to <b>, so it yields an isomorphic factor.
        bool conj = false;
        for (Elem g = 0; g < G.order() && !conj; ++g) {
          conj = Hx.contains(G.conj(b, g)) && Hx.order() == Hb.order();
        }
        rep.conjugacy_ok = rep.conjugacy_ok && conj && quotient_genus(vec, Hx) == gb;
      }
      rep.factors.push_back({"<b>", gb, 4});
    }

    std::vector<SubgroupHandle> collection;
    for (Elem x : gens) {
      collection.push_back(cyclic_subgroup(G, x));
      rep.collection.push_back("<" + G.label(x) + ">");
    }
    rep.admissible = is_admissible(collection, vec, table);

    std::int64_t total = 0;
    for (auto const& chi : table) {
      std::int64_t dim = factor_dimension(chi, vec);
      total += chi.degree * dim;
      if (dim != 0) {
        rep.relevant.push_back(chi.name);
      }
    }
    rep.genus_sum_ok = total == rep.genus;

    std::int64_t covered = 0;
    for (auto const& fac : rep.factors) {
      covered += fac.genus * fac.multiplicity;
      rep.has_elliptic_factor = rep.has_elliptic_factor || fac.genus == 1;
    }
    rep.residual = rep.genus - covered;
    return rep;
  }

}  // namespace surfaut
