// surfaut - classification of actions of order 4g - 4 for prime g - 1,
// boundary restrictions of the two families, and the composite-q
// counterexamples.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "surfaut/arith.hpp"
#include "surfaut/error.hpp"
#include "surfaut/fuchsian.hpp"
#include "surfaut/genvec.hpp"
#include "surfaut/group.hpp"

namespace surfaut {

  ////////////////////////////////////////////////////////////////////////
  // Groups of order 4q
  ////////////////////////////////////////////////////////////////////////

  struct NamedGroup {
    std::string name;  // e.g. "C_q x|_4 C_4" with q substituted
    FiniteGroup group;
  };

  /// Every group of order 4q for a prime q >= 5, each verified to have
  /// order 4q and to be isomorphic to none of the others.
  inline std::vector<NamedGroup> groups_of_order_4q(std::int64_t q) {
    if (q < 5 || q > 127 || !is_prime(q)) {
      detail::fail_invalid("groups_of_order_4q needs a prime 5 <= q <= 127 (got "
                           + std::to_string(q)
                           + "); composite q is covered by the counterexample entry points");
    }
    std::string const       Q = std::to_string(q);
    std::vector<NamedGroup> out;
    out.push_back({"C_" + std::to_string(4 * q), cyclic(4 * q)});
    out.push_back({"C_" + Q + " x C_2^2", build_group("cyclic:" + Q + "xcyclic:2xcyclic:2")});
    out.push_back({"D_" + std::to_string(2 * q), dihedral(2 * q)});
    out.push_back({"C_" + Q + " x|_2 C_4", metacyclic(q, 4, q - 1)});
    if (q % 4 == 1) {
      out.push_back({"C_" + Q + " x|_4 C_4", metacyclic(q, 4, find_root_of_unity(q, 4))});
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].group.order() != static_cast<std::size_t>(4 * q)) {
        detail::fail_invariant(out[i].name + " does not have order 4q");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (are_isomorphic(out[i].group, out[j].group)) {
          detail::fail_invariant(out[i].name + " is isomorphic to " + out[j].name);
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Strata for a genus
  ////////////////////////////////////////////////////////////////////////

  struct StratumEntry {
    std::string                           group;       // spec string
    std::string                           paper_name;  // conventional name
    Signature                             signature;
    std::size_t                           vector_count = 0;
    std::size_t                           class_count  = 0;
    std::vector<std::vector<std::string>> representatives;
  };

  struct StrataReport {
    std::int64_t              genus   = 0;
    std::int64_t              q       = 0;
    bool                      q_prime = false;
    std::vector<StratumEntry> strata;    // pairs with at least one vector
    std::vector<StratumEntry> examined;  // every (group, candidate signature) pair
    bool                      theorem1_consistent = false;
  };

  struct ClassifyOptions {
    unsigned      workers = 1;
    std::uint64_t budget  = kDefaultSearchBudget;
  };

  inline std::set<std::int64_t> available_orders(FiniteGroup const& G) {
    std::set<std::int64_t> out;
    for (auto o : element_orders(G)) {
      out.insert(static_cast<std::int64_t>(o));
    }
    return out;
  }

  /// Expected strata: for g = 0 mod 4 only (D_2q, (0;2,2,2,2,2)); for
  /// g = 2 mod 4 also (C_q x|_4 C_4, (0;2,2,4,4)); one class each.
  inline bool matches_theorem1(StrataReport const& rep) {
    std::int64_t const q = rep.q;
    std::vector<std::pair<std::string, std::string>> expected = {
        {"dihedral:" + std::to_string(2 * q), "0;2,2,2,2,2"}};
    if (rep.genus % 4 == 2) {
      expected.emplace_back("metacyclic:" + std::to_string(q) + ",4,"
                                + std::to_string(find_root_of_unity(q, 4)),
                            "0;2,2,4,4");
    }
    std::vector<std::pair<std::string, std::string>> got;
    for (auto const& s : rep.strata) {
      if (s.class_count != 1) {
        return false;
      }
      got.emplace_back(s.group, s.signature.to_string());
    }
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    return got == expected;
  }

  inline StrataReport classify_genus(std::int64_t g, ClassifyOptions const& opts = {}) {
    if (g < 8 || g > 128) {
      detail::fail_invalid("classify_genus needs 8 <= genus <= 128 (got " + std::to_string(g) + ")");
    }
    StrataReport rep;
    rep.genus   = g;
    rep.q       = g - 1;
    rep.q_prime = is_prime(rep.q);
    if (!rep.q_prime) {
      detail::fail_invalid("genus - 1 = " + std::to_string(rep.q)
                           + " is not prime; the group list is only complete for prime "
                             "genus - 1 (see the 'counterexample' command for composite cases)");
    }
    for (auto const& [name, G] : groups_of_order_4q(rep.q)) {
      auto const order = static_cast<std::int64_t>(G.order());
      for (auto const& sig : candidate_signatures(available_orders(G), order, g)) {
        StratumEntry entry{G.description(), name, sig, 0, 0, {}};
        if (sig.genus() == 0) {
          auto classes = orbit_classes(G, sig, {opts.workers, opts.budget});
          entry.class_count = classes.size();
          for (auto const& cls : classes) {
            entry.vector_count = cls.total_vectors;
            entry.representatives.push_back(cls.representative.elliptic_labels());
          }
        } else {
          // Only (1;2) occurs here; any vector at all contradicts the
          // commutator argument and leaves the report inconsistent.
          auto vecs          = enumerate_vectors(G, sig, {opts.workers, opts.budget});
          entry.vector_count = vecs.size();
          entry.class_count  = vecs.empty() ? 0 : SIZE_MAX;
        }
        rep.examined.push_back(entry);
        if (entry.vector_count > 0) {
          rep.strata.push_back(std::move(entry));
        }
      }
    }
    rep.theorem1_consistent = matches_theorem1(rep);
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Composite-q counterexamples
  ////////////////////////////////////////////////////////////////////////

  struct CounterexampleAction {
    std::string      group;
    GeneratingVector vector;
    std::int64_t     genus = 0;
  };

  /// Q_8 x C_n acting with signature (1;2): a_1 -> x, b_1 -> yz, x_1 -> y^2.
  inline CounterexampleAction counterexample_q8(std::int64_t n) {
    if (n < 3 || n % 2 == 0) {
      detail::fail_invalid("counterexample_q8 needs an odd n >= 3 (got " + std::to_string(n) + ")");
    }
    auto G   = q8_times_cyclic(n);
    auto vec = GeneratingVector::from_labels(G, Signature::parse("1;2"), {"y^2"}, {{"x", "yz"}});
    auto chk = vector_satisfies(vec);
    if (!chk) {
      detail::fail_invariant("Q8 x C_n vector invalid: " + chk.violations.front());
    }
    return {G.description(), vec, action_genus(vec)};
  }

  struct DihedralCounterexample {
    std::int64_t                      n = 0;
    std::vector<std::int64_t>         ms;
    std::vector<CounterexampleAction> actions;
    // certificates[i][j] for j < i: the reason group i and group j differ.
    std::vector<std::vector<std::string>> certificates;
    bool                                  pairwise_non_isomorphic = false;
  };

  /// The four groups D_{2^n} x| C_2 (t r t = r^m) for
  /// m in {1, 2^n - 1, 2^(n-1) - 1, 2^(n-1) + 1}, each with the (0;2,2,2,2,2)
  /// vector (sr, sr, s, t, st).
  inline DihedralCounterexample counterexample_dihedral2(std::int64_t n) {
    if (n < 3 || n > 6) {
      detail::fail_invalid("counterexample_dihedral2 needs 3 <= n <= 6 (got " + std::to_string(n)
                           + ")");
    }
    DihedralCounterexample out;
    out.n                = n;
    std::int64_t const N = std::int64_t{1} << n;
    out.ms               = {1, N - 1, N / 2 - 1, N / 2 + 1};
    for (auto m : out.ms) {
      auto G   = dihedral2_semidirect(n, m);
      auto vec = GeneratingVector::from_labels(G, Signature::parse("0;2,2,2,2,2"),
                                               {"sr", "sr", "s", "t", "st"});
      auto chk = vector_satisfies(vec);
      if (!chk) {
        detail::fail_invariant(G.description() + " vector invalid: " + chk.violations.front());
      }
      out.actions.push_back({G.description(), vec, action_genus(vec)});
    }
    out.pairwise_non_isomorphic = true;
    for (std::size_t i = 0; i < out.actions.size(); ++i) {
      out.certificates.emplace_back();
      for (std::size_t j = 0; j < i; ++j) {
        auto verdict = isomorphism_certificate(out.actions[i].vector.group(),
                                               out.actions[j].vector.group());
        out.pairwise_non_isomorphic = out.pairwise_non_isomorphic && !verdict.isomorphic;
        out.certificates.back().push_back(verdict.reason);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Boundary surfaces and restriction to the family's Fuchsian group
  ////////////////////////////////////////////////////////////////////////

  enum class BoundaryCase { Ord8, Ord6 };

  inline std::string to_string(BoundaryCase c) {
    return c == BoundaryCase::Ord8 ? "ord8" : "ord6";
  }

  inline BoundaryCase parse_boundary_case(std::string const& text) {
    if (text == "ord8") {
      return BoundaryCase::Ord8;
    }
    if (text == "ord6") {
      return BoundaryCase::Ord6;
    }
    detail::fail_invalid("unknown boundary case '" + text + "' (expected ord8 or ord6)");
  }

  struct BoundaryVectors {
    BoundaryCase                  kind = BoundaryCase::Ord8;
    std::int64_t                  q    = 0;
    std::int64_t                  u    = 0;
    FiniteGroup                   group;
    std::array<GeneratingVector, 2> theta;
  };

  /// ord8: C_q x|_8 C_8 = <alpha, beta> on (0;2,8,8) with
  ///   Theta_1 = (beta^4, alpha^-u beta, alpha beta^3),
  ///   Theta_2 = (beta^4, alpha^u beta^5, alpha beta^7).
  /// ord6: (C_q x|_6 C_6) x C_2 = <alpha, beta> x <gamma> on (0;2,6,6) with
  ///   Theta_1 = (beta^3, alpha^-u beta gamma, alpha beta^2 gamma),
  ///   Theta_2 = (beta^3 gamma, alpha^-u^2 beta^2 gamma, alpha beta).
  /// In the groups built here alpha, beta, gamma are the generators a, b, c.
  inline BoundaryVectors boundary_vectors(std::int64_t q, BoundaryCase kind) {
    std::int64_t const m = kind == BoundaryCase::Ord8 ? 8 : 6;
    if (!is_prime(q) || q % m != 1) {
      detail::fail_invalid("case " + to_string(kind) + " needs a prime q = 1 mod "
                           + std::to_string(m) + " (got " + std::to_string(q) + ")");
    }
    BoundaryVectors out;
    out.kind = kind;
    out.q    = q;
    out.u    = find_root_of_unity(q, m);
    std::int64_t const u = out.u;
    if (kind == BoundaryCase::Ord8) {
      out.group = metacyclic(q, 8, u);
    } else {
      out.group = direct_product({metacyclic(q, 6, u), cyclic(2)});
    }
    FiniteGroup const& G     = out.group;
    Elem const         alpha = G.generator("a"), beta = G.generator("b");
    auto               ab    = [&](std::int64_t i, std::int64_t j) {
      return G.mul(G.pow(alpha, i), G.pow(beta, j));
    };
    Signature sig;
    std::array<std::vector<Elem>, 2> ell;
    if (kind == BoundaryCase::Ord8) {
      sig    = Signature::parse("0;2,8,8");
      ell[0] = {ab(0, 4), ab(-u, 1), ab(1, 3)};
      ell[1] = {ab(0, 4), ab(u, 5), ab(1, 7)};
    } else {
      Elem const gamma = G.generator("c");
      auto       g     = [&](Elem x) { return G.mul(x, gamma); };
      sig              = Signature::parse("0;2,6,6");
      ell[0]           = {ab(0, 3), g(ab(-u, 1)), g(ab(1, 2))};
      ell[1]           = {g(ab(0, 3)), g(ab(-u * u, 2)), ab(1, 1)};
    }
    for (int i = 0; i < 2; ++i) {
      out.theta[i] = GeneratingVector(G, sig, {}, ell[i]);
      auto chk     = vector_satisfies(out.theta[i]);
      if (!chk) {
        detail::fail_invariant("boundary vector " + std::to_string(i + 1)
                               + " invalid: " + chk.violations.front());
      }
    }
    return out;
  }

  /// A word in the elliptic generators y_1, y_2, ... of the outer group:
  /// (1-based position, exponent) pairs read left to right.
  using EllipticWord = std::vector<std::pair<int, std::int64_t>>;

  /// x^_1 = y1, x^_2 = y1, x^_3 = y3^2, x^_4 = y3^6 inside (0;2,8,8).
  inline std::vector<EllipticWord> const kHatWords = {
      {{1, 1}}, {{1, 1}}, {{3, 2}}, {{3, 6}}};

  /// x~_1 = y3^3, x~_2 = y1, x~_3 = y2 y1 y2^-1, x~_4 = y2^2 y1 y2^-2,
  /// x~_5 = y2^3 inside (0;2,6,6).
  inline std::vector<EllipticWord> const kTildeWords = {
      {{3, 3}}, {{1, 1}}, {{2, 1}, {1, 1}, {2, -1}}, {{2, 2}, {1, 1}, {2, -2}}, {{2, 3}}};

  inline Elem evaluate_word(GeneratingVector const& vec, EllipticWord const& word) {
    FiniteGroup const& G = vec.group();
    Elem               x = G.identity();
    for (auto [pos, e] : word) {
      if (pos < 1 || static_cast<std::size_t>(pos) > vec.elliptic().size()) {
        detail::fail_invalid("word refers to elliptic generator " + std::to_string(pos)
                             + " of a vector with " + std::to_string(vec.elliptic().size()));
      }
      x = G.mul(x, G.pow(vec.elliptic()[static_cast<std::size_t>(pos - 1)], e));
    }
    return x;
  }

  struct RestrictionWitness {
    GeneratingVector          outer;
    std::vector<EllipticWord> words;
    std::vector<Elem>         images;  // in the outer group
    SubgroupHandle            subgroup;
    GeneratingVector          induced;  // over the subgroup as a group of its own
    Signature                 induced_signature;
    std::size_t               index = 0;
  };

  inline RestrictionWitness restrict_action(GeneratingVector const& outer,
                                            std::vector<EllipticWord> const& words) {
    FiniteGroup const& G = outer.group();
    if (outer.signature().genus() != 0) {
      detail::fail_invalid("restrict_action needs an outer vector of orbit genus 0");
    }
    if (words.empty()) {
      detail::fail_invalid("restrict_action needs at least one word");
    }
    std::vector<Elem> images;
    Elem              product = G.identity();
    for (auto const& w : words) {
      images.push_back(evaluate_word(outer, w));
      product = G.mul(product, images.back());
    }
    if (product != G.identity()) {
      detail::fail_invalid("restricted images multiply to " + G.label(product) + ", not 1");
    }
    auto H   = subgroup_generated(G, images);
    auto sub = as_group(H);
    std::vector<Elem>         local;
    std::vector<std::int64_t> periods;
    for (Elem x : images) {
      auto it = std::lower_bound(H.elements().begin(), H.elements().end(), x);
      local.push_back(static_cast<Elem>(it - H.elements().begin()));
      periods.push_back(static_cast<std::int64_t>(G.element_order(x)));
    }
    Signature inner(0, periods);
    if (normalized_area(inner) != normalized_area(outer.signature()) * static_cast<std::int64_t>(H.index())) {
      detail::fail_invariant("subgroup index " + std::to_string(H.index())
                             + " does not match the area ratio of " + inner.to_string() + " and "
                             + outer.signature().to_string());
    }
    GeneratingVector induced(sub, inner, {}, local);
    auto             chk = vector_satisfies(induced);
    if (!chk) {
      detail::fail_invariant("induced vector invalid: " + chk.violations.front());
    }
    if (action_genus(induced) != action_genus(outer)) {
      detail::fail_invariant("induced action has a different genus");
    }
    return {outer, words, images, H, induced, inner, H.index()};
  }

  struct SymbolicCheck {
    std::string expected;
    std::string actual;
    bool        ok = false;
  };

  struct BoundaryReport {
    BoundaryVectors                   vectors;
    std::array<std::int64_t, 2>       genus{};
    std::vector<RestrictionWitness>   witnesses;
    std::vector<std::string>          subgroup_iso;  // certificate against the family group
    std::vector<bool>                 subgroup_iso_ok;
    std::vector<SymbolicCheck>        symbolic;      // ord8 only
    std::vector<ExtensionRule>        extensions;    // of the family signature
    std::string                       cited_assumption;
    bool                              ok = false;
  };

  inline BoundaryReport boundary_analysis(std::int64_t q, BoundaryCase kind) {
    BoundaryReport rep;
    rep.vectors            = boundary_vectors(q, kind);
    FiniteGroup const& G   = rep.vectors.group;
    std::int64_t const u   = rep.vectors.u;
    bool const         ord8 = kind == BoundaryCase::Ord8;
    auto const&        words = ord8 ? kHatWords : kTildeWords;
    // The family group the restriction should land in.
    FiniteGroup family = ord8 ? metacyclic(q, 4, find_root_of_unity(q, 4)) : dihedral(2 * q);
    rep.ok             = true;
    for (int i = 0; i < 2; ++i) {
      rep.genus[i] = action_genus(rep.vectors.theta[i]);
      rep.witnesses.push_back(restrict_action(rep.vectors.theta[i], words));
      auto verdict = isomorphism_certificate(rep.witnesses.back().induced.group(), family);
      rep.subgroup_iso.push_back(verdict.isomorphic ? "isomorphic to " + family.description()
                                                    : verdict.reason);
      rep.subgroup_iso_ok.push_back(verdict.isomorphic);
      rep.ok = rep.ok && verdict.isomorphic;
      if (ord8) {
        // Theta_i(x^_3) = alpha^{1 + (-1)^{i+1} u^3} beta^6 for i = 1, 2.
        std::int64_t sign = i == 0 ? 1 : -1;
        Elem expected = G.mul(G.pow(G.generator("a"), 1 + sign * u * u * u), G.pow(G.generator("b"), 6));
        Elem actual   = rep.witnesses.back().images[2];
        rep.symbolic.push_back({G.label(expected), G.label(actual), expected == actual});
        rep.ok = rep.ok && expected == actual;
      }
    }
    rep.extensions = possible_extensions(rep.witnesses.front().induced_signature);
    rep.cited_assumption
        = ord8 ? "assumed, not recomputed: no surface of genus q+1 >= 14 has a group of order 8q "
                 "acting with signature (0;2,2,2,4)"
               : "";
    return rep;
  }

}  // namespace surfaut
