// surfaut - invariant suite behind the `selftest` command.

#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "surfaut/classify.hpp"
#include "surfaut/golden.hpp"
#include "surfaut/jacobian.hpp"
#include "surfaut/oracles.hpp"
#include "surfaut/reptheory.hpp"

namespace surfaut {

  struct CheckResult {
    std::string name;
    bool        ok = false;
    std::string detail;
    double      seconds = 0;
  };

  namespace detail {

    inline CheckResult run_check(std::string name, std::function<std::string()> const& body) {
      CheckResult r{std::move(name), false, "", 0};
      auto const  t0 = std::chrono::steady_clock::now();
      try {
        r.detail = body();
        r.ok     = r.detail.empty();
        if (r.ok) {
          r.detail = "ok";
        }
      } catch (std::exception const& e) {
        r.detail = std::string("exception: ") + e.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      return r;
    }

    /// Empty string when both orthogonality relations hold exactly.
    inline std::string check_orthogonality(std::vector<Character> const& table) {
      FiniteGroup const& G = table.front().group;
      auto const&        classes = G.conjugacy_classes();
      std::int64_t       sum_sq  = 0;
      for (std::size_t i = 0; i < table.size(); ++i) {
        sum_sq += table[i].degree * table[i].degree;
        for (std::size_t j = 0; j < table.size(); ++j) {
          if (character_inner_product(table[i], table[j]) != Rational(i == j ? 1 : 0)) {
            return "first orthogonality fails for " + table[i].name + ", " + table[j].name;
          }
        }
      }
      if (sum_sq != static_cast<std::int64_t>(G.order())) {
        return "sum of squared degrees is " + std::to_string(sum_sq);
      }
      std::int64_t const N = table.front().values.front().conductor();
      for (std::size_t c = 0; c < classes.size(); ++c) {
        for (std::size_t d = 0; d < classes.size(); ++d) {
          CyclotomicValue s(N, 0);
          for (auto const& chi : table) {
            s += chi.values[c] * chi.values[d].conj();
          }
          std::int64_t expected
              = c == d ? static_cast<std::int64_t>(G.order() / classes[c].size()) : 0;
          if (!(s == CyclotomicValue(N, expected))) {
            return "second orthogonality fails for classes of " + G.label(classes[c].front())
                   + " and " + G.label(classes[d].front());
          }
        }
      }
      return "";
    }

    inline std::vector<SubgroupHandle> cyclic_subgroups(FiniteGroup const& G) {
      std::vector<SubgroupHandle> out;
      for (Elem x = 0; x < G.order(); ++x) {
        auto H = cyclic_subgroup(G, x);
        if (std::find(out.begin(), out.end(), H) == out.end()) {
          out.push_back(std::move(H));
        }
      }
      return out;
    }

  }  // namespace detail

  inline std::vector<CheckResult> run_selftest(std::filesystem::path const& golden_dir,
                                               bool bless = false, unsigned workers = 1) {
    std::vector<CheckResult> out;
    auto add = [&](std::string name, std::function<std::string()> body) {
      out.push_back(detail::run_check(std::move(name), body));
    };

    add("group families build and satisfy their relations", [] {
      std::string bad;
      for (auto [spec, order] : std::vector<std::pair<std::string, std::size_t>>{
               {"cyclic:44", 44}, {"dihedral:22", 44}, {"metacyclic:13,4,5", 52},
               {"metacyclic:13,4,12", 52}, {"q8xc:5", 40}, {"d2semi:3,3", 32},
               {"cyclic:13xcyclic:2xcyclic:2", 52}}) {
        if (build_group(spec).order() != order) {
          bad = spec + " has the wrong order";
        }
      }
      auto G = metacyclic(13, 4, 5);
      Elem a = G.generator("a"), b = G.generator("b");
      for (std::int64_t k = 0; k < 13; ++k) {
        if (G.conj(G.pow(a, k), b) != G.pow(a, 5 * k)) {
          return std::string("b a^k b^-1 != a^{5k}");
        }
      }
      return bad;
    });

    add("classification for genus 8, 12 and 14", [&] {
      for (std::int64_t g : {8, 12, 14}) {
        if (!classify_genus(g, {workers, kDefaultSearchBudget}).theorem1_consistent) {
          return "genus " + std::to_string(g) + " inconsistent";
        }
      }
      return std::string();
    });

    add("no (1;2) actions of groups of order 4q, q in {5,7,11,13}", [&] {
      for (std::int64_t q : {5, 7, 11, 13}) {
        for (auto const& [name, G] : groups_of_order_4q(q)) {
          if (!enumerate_vectors(G, Signature::parse("1;2"), {workers, kDefaultSearchBudget}).empty()) {
            return name + " admits a (1;2) vector";
          }
        }
      }
      return std::string();
    });

    add("(0;2,2,4,4) only for C_q x|_4 C_4 and (0;2,2,2,2,2) only for D_2q", [&] {
      for (std::int64_t q : {5, 7, 11, 13}) {
        for (auto const& [name, G] : groups_of_order_4q(q)) {
          bool meta4 = name.find("x|_4") != std::string::npos;
          bool dih   = name.rfind("D_", 0) == 0;
          auto n2244 = enumerate_vectors(G, Signature::parse("0;2,2,4,4")).size();
          auto n2x5  = enumerate_vectors(G, Signature::parse("0;2,2,2,2,2")).size();
          if ((n2244 > 0) != meta4 || (n2x5 > 0) != dih) {
            return name + " has an unexpected vector count";
          }
        }
      }
      return std::string();
    });

    add("character tables: orthogonality and sum of squares", [] {
      for (std::int64_t q : {5, 7, 11, 13}) {
        if (auto msg = detail::check_orthogonality(dihedral_characters(q)); !msg.empty()) {
          return msg;
        }
      }
      for (std::int64_t q : {5, 13, 17}) {
        auto msg = detail::check_orthogonality(metacyclic4_characters(q, find_root_of_unity(q, 4)));
        if (!msg.empty()) {
          return msg;
        }
      }
      return std::string();
    });

    add("Jacobian decompositions F2 q=11 and F1 q=13", [] {
      auto f2 = decomposition_report(Family::F2, 11);
      auto f1 = decomposition_report(Family::F1, 13);
      std::vector<std::int64_t> g2, g1;
      for (auto const& f : f2.factors) {
        g2.push_back(f.genus);
      }
      for (auto const& f : f1.factors) {
        for (std::int64_t k = 0; k < f.multiplicity; ++k) {
          g1.push_back(f.genus);
        }
      }
      std::sort(g2.begin(), g2.end());
      if (g2 != std::vector<std::int64_t>{1, 5, 6} || f2.residual != 0 || !f2.admissible) {
        return std::string("F2 q=11 decomposition differs");
      }
      if (g1 != std::vector<std::int64_t>{2, 3, 3, 3, 3} || f1.residual != 0 || !f1.admissible
          || !f1.conjugacy_ok) {
        return std::string("F1 q=13 decomposition differs");
      }
      return std::string();
    });

    add("genus-sum identity and quotient genus double computation", [] {
      for (std::int64_t q : {5, 7, 11, 13}) {
        for (auto f : {Family::F1, Family::F2}) {
          if (f == Family::F1 && q % 4 != 1) {
            continue;
          }
          auto vec   = family_vector(f, q);
          auto table = characters_for(vec.group());
          std::int64_t sum = 0;
          for (auto const& chi : table) {
            sum += chi.degree * factor_dimension(chi, vec);
          }
          if (sum != action_genus(vec)) {
            return to_string(f) + " q=" + std::to_string(q) + ": genus sum " + std::to_string(sum);
          }
          for (auto const& H : detail::cyclic_subgroups(vec.group())) {
            if (quotient_genus(vec, H) != oracle::character_sum_quotient_genus(vec, H, table)) {
              return to_string(f) + " q=" + std::to_string(q) + ": quotient genus mismatch";
            }
          }
        }
      }
      return std::string();
    });

    add("boundary restrictions ord8 (q=17) and ord6 (q=7)", [] {
      for (auto [q, kind] : {std::pair{std::int64_t{17}, BoundaryCase::Ord8},
                             std::pair{std::int64_t{7}, BoundaryCase::Ord6}}) {
        if (!boundary_analysis(q, kind).ok) {
          return "boundary case " + to_string(kind) + " failed";
        }
      }
      return std::string();
    });

    add("Q8 x C_n (1;2) actions for n = 3, 5, 7", [] {
      for (std::int64_t n : {3, 5, 7}) {
        auto a = counterexample_q8(n);
        if (a.genus != 2 * n + 1 || static_cast<std::int64_t>(a.vector.group().order()) != 4 * (a.genus - 1)) {
          return "n=" + std::to_string(n) + " has the wrong genus";
        }
      }
      return std::string();
    });

    add("D_2^n x| C_2 (0;2,2,2,2,2) vectors for n = 3", [] {
      auto d = counterexample_dihedral2(3);
      for (auto const& a : d.actions) {
        if (a.genus != 9 || a.vector.group().order() != 32) {
          return a.group + " has the wrong genus or order";
        }
      }
      return std::string();
    });

    add("braid moves: round trip and invariants on random vectors", [] {
      std::mt19937 rng(20261019);
      for (auto spec : {"dihedral:22", "metacyclic:13,4,5"}) {
        auto G    = build_group(spec);
        auto sig  = Signature::parse(spec[0] == 'd' ? "0;2,2,2,2,2" : "0;2,2,4,4");
        auto vecs = enumerate_vectors(G, sig);
        for (int trial = 0; trial < 600; ++trial) {
          auto const& v = vecs[rng() % vecs.size()];
          std::size_t i = 1 + rng() % (sig.length() - 1);
          auto        w = braid_move(v, i, BraidDirection::forward);
          if (!(braid_move(w, i, BraidDirection::backward) == v) || !vector_satisfies(w)
              || w.relation_product() != G.identity()) {
            return std::string("braid move breaks a vector of ") + spec;
          }
        }
      }
      return std::string();
    });

    add("orbit classes do not depend on the worker count", [] {
      auto G  = dihedral(26);
      auto s  = Signature::parse("0;2,2,2,2,2");
      auto c1 = orbit_classes(G, s, {1, kDefaultSearchBudget});
      auto c4 = orbit_classes(G, s, {4, kDefaultSearchBudget});
      if (c1.size() != c4.size()) {
        return std::string("class counts differ");
      }
      for (std::size_t k = 0; k < c1.size(); ++k) {
        if (!(c1[k].representative == c4[k].representative) || c1[k].orbit_size != c4[k].orbit_size) {
          return std::string("representatives differ");
        }
      }
      return std::string();
    });

    for (auto const& g : check_goldens(golden_dir, bless)) {
      CheckResult r;
      r.name   = "golden " + g.name;
      r.ok     = g.ok;
      r.detail = g.message + " (stored " + (g.stored ? std::to_string(*g.stored) : "-")
                 + ", oracle " + std::to_string(g.oracle) + ", library "
                 + std::to_string(g.library) + ")";
      out.push_back(std::move(r));
    }
    return out;
  }

}  // namespace surfaut
