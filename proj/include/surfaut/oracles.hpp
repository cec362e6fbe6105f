// surfaut - slow, independent reference computations.
//
// Nothing here is used by the fast paths.  Each function recomputes a
// quantity the library also produces, by a different and simpler method,
// so tests and golden files can compare the two.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "surfaut/error.hpp"
#include "surfaut/fuchsian.hpp"
#include "surfaut/genvec.hpp"
#include "surfaut/group.hpp"
#include "surfaut/jacobian.hpp"
#include "surfaut/reptheory.hpp"

namespace surfaut::oracle {

  namespace detail {

    inline bool generates(FiniteGroup const& G, std::vector<Elem> const& S) {
      std::vector<char> seen(G.order(), 0);
      std::vector<Elem> todo{G.identity()};
      seen[G.identity()] = 1;
      while (!todo.empty()) {
        Elem x = todo.back();
        todo.pop_back();
        for (Elem s : S) {
          Elem y = G.mul(x, s);
          if (!seen[y]) {
            seen[y] = 1;
            todo.push_back(y);
          }
        }
      }
      return std::count(seen.begin(), seen.end(), 1) == static_cast<long>(G.order());
    }

    // Every tuple with entry k drawn from pools[k], fed to visit in
    // lexicographic index order.
    template <class Visit>
    void scan_tuples(std::vector<std::vector<Elem>> const& pools,
                     Visit&& visit) {
      std::size_t const l = pools.size();
      std::vector<std::size_t> idx(l, 0);
      std::vector<Elem>        t(l);
      if (std::any_of(pools.begin(), pools.end(), [](auto const& p) { return p.empty(); })) {
        return;
      }
      while (true) {
        for (std::size_t k = 0; k < l; ++k) {
          t[k] = pools[k][idx[k]];
        }
        visit(t);
        std::size_t k = l;
        while (k > 0) {
          --k;
          if (++idx[k] < pools[k].size()) {
            break;
          }
          idx[k] = 0;
          if (k == 0) {
            return;
          }
        }
      }
    }

    inline std::vector<Elem> elements_with_order_in(FiniteGroup const& G,
                                                    std::set<std::int64_t> const& orders) {
      std::vector<Elem> out;
      for (Elem x = 0; x < G.order(); ++x) {
        if (orders.count(static_cast<std::int64_t>(G.element_order(x)))) {
          out.push_back(x);
        }
      }
      return out;
    }

    inline bool is_surface_kernel(FiniteGroup const& G, std::vector<Elem> const& t,
                                  std::vector<std::int64_t> sorted_periods, bool any_order) {
      Elem p = G.identity();
      for (Elem x : t) {
        p = G.mul(p, x);
      }
      if (p != G.identity()) {
        return false;
      }
      std::vector<std::int64_t> o;
      for (Elem x : t) {
        o.push_back(static_cast<std::int64_t>(G.element_order(x)));
      }
      if (any_order) {
        std::sort(o.begin(), o.end());
      }
      return o == sorted_periods && generates(G, t);
    }

  }  // namespace detail

  /// Number of surface-kernel vectors (v_1..v_l) with ord(v_i) = m_i in the
  /// signature's sorted order, by scanning every position (orbit genus 0).
  inline std::size_t brute_force_vector_count(FiniteGroup const& G, Signature const& sig) {
    if (sig.genus() != 0) {
      surfaut::detail::fail_invalid("brute_force_vector_count: orbit genus 0 only");
    }
    std::vector<std::vector<Elem>> pools;
    for (auto m : sig.periods()) {
      pools.push_back(detail::elements_with_order_in(G, {m}));
    }
    std::size_t count = 0;
    detail::scan_tuples(pools, [&](std::vector<Elem> const& t) {
      count += detail::is_surface_kernel(G, t, sig.periods(), false);
    });
    return count;
  }

  /// Number of (a, b, x) with [a, b] x = 1, ord(x) = m, generating G: the
  /// (1; m) count over all |G|^2 pairs.
  inline std::size_t brute_force_one_point_count(FiniteGroup const& G, std::int64_t m) {
    std::size_t count = 0;
    for (Elem a = 0; a < G.order(); ++a) {
      for (Elem b = 0; b < G.order(); ++b) {
        Elem c = G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b)));
        Elem x = G.inv(c);
        if (static_cast<std::int64_t>(G.element_order(x)) == m && detail::generates(G, {a, b, x})) {
          ++count;
        }
      }
    }
    return count;
  }

  /// Topological classes of orbit-genus-0 actions: union-find over every
  /// vector in every period order, joined by every automorphism and every
  /// forward braid move.
  inline std::size_t union_find_class_count(FiniteGroup const& G, Signature const& sig) {
    if (sig.genus() != 0) {
      surfaut::detail::fail_invalid("union_find_class_count: orbit genus 0 only");
    }
    std::set<std::int64_t> orders(sig.periods().begin(), sig.periods().end());
    auto const             pool = detail::elements_with_order_in(G, orders);
    std::vector<std::vector<Elem>> pools(sig.length(), pool);
    std::vector<std::vector<Elem>> vecs;
    detail::scan_tuples(pools, [&](std::vector<Elem> const& t) {
      if (detail::is_surface_kernel(G, t, sig.periods(), true)) {
        vecs.push_back(t);
      }
    });
    if (vecs.empty()) {
      return 0;
    }
    std::sort(vecs.begin(), vecs.end());
    auto find_vec = [&](std::vector<Elem> const& t) {
      auto it = std::lower_bound(vecs.begin(), vecs.end(), t);
      if (it == vecs.end() || *it != t) {
        surfaut::detail::fail_invariant("union_find_class_count: image is not a vector");
      }
      return static_cast<std::size_t>(it - vecs.begin());
    };
    std::vector<std::size_t> parent(vecs.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };
    auto unite = [&](std::size_t a, std::size_t b) { parent[root(a)] = root(b); };
    auto autos = automorphisms(G);
    for (std::size_t k = 0; k < vecs.size(); ++k) {
      auto const& t = vecs[k];
      for (auto const& w : autos) {
        std::vector<Elem> u;
        for (Elem x : t) {
          u.push_back(w(x));
        }
        unite(k, find_vec(u));
      }
      for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        std::vector<Elem> u = t;
        u[i]                = t[i + 1];
        u[i + 1]            = G.mul(G.mul(G.inv(t[i + 1]), t[i]), t[i + 1]);
        unite(k, find_vec(u));
      }
    }
    std::size_t classes = 0;
    for (std::size_t k = 0; k < vecs.size(); ++k) {
      classes += root(k) == k;
    }
    return classes;
  }

  /// g_H = sum over irreducible chi of dim V_chi^H times the factor
  /// dimension of chi.
  inline std::int64_t character_sum_quotient_genus(GeneratingVector const& vec,
                                                   SubgroupHandle const& H,
                                                   std::vector<Character> const& table) {
    std::int64_t total = 0;
    for (auto const& chi : table) {
      total += fixed_dim(chi, H) * factor_dimension(chi, vec);
    }
    return total;
  }

  /// Signatures (h; m_1..m_l) with periods in `orders` satisfying
  /// Riemann-Hurwitz 2g - 2 = |G| (2h - 2 + sum (1 - 1/m_i)), by scanning
  /// every non-decreasing period list up to the length bound 4(g - 1)/|G| + 4.
  inline std::vector<Signature> brute_force_signatures(std::set<std::int64_t> const& orders,
                                                       std::int64_t group_order,
                                                       std::int64_t genus) {
    std::vector<std::int64_t> periods;
    for (auto m : orders) {
      if (m >= 2) {
        periods.push_back(m);
      }
    }
    std::int64_t const     max_len = 4 * (genus - 1) / group_order + 4;
    std::int64_t const     max_h   = (genus - 1) / group_order + 1;
    std::vector<Signature> out;
    std::vector<std::int64_t> chosen;
    // 2g - 2 == |G| (2h - 2) + sum |G| (m - 1) / m, checked with integers.
    auto check = [&](std::int64_t h) {
      std::int64_t lhs = 2 * genus - 2 - group_order * (2 * h - 2);
      std::int64_t num = 0, den = 1;
      for (auto m : chosen) {
        num = num * m + (m - 1) * den;
        den *= m;
        std::int64_t gcd = std::gcd(num, den);
        num /= gcd;
        den /= gcd;
      }
      if (num * group_order == lhs * den) {
        out.emplace_back(h, chosen);
      }
    };
    auto rec = [&](auto&& self, std::int64_t h, std::size_t from) -> void {
      check(h);
      if (static_cast<std::int64_t>(chosen.size()) == max_len) {
        return;
      }
      for (std::size_t k = from; k < periods.size(); ++k) {
        chosen.push_back(periods[k]);
        self(self, h, k);
        chosen.pop_back();
      }
    };
    for (std::int64_t h = 0; h <= max_h; ++h) {
      rec(rec, h, 0);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Whether the commutator subgroup of G contains an involution, from the
  /// set of all commutators.
  inline bool derived_subgroup_has_involution(FiniteGroup const& G) {
    std::vector<Elem> comms;
    for (Elem a = 0; a < G.order(); ++a) {
      for (Elem b = 0; b < G.order(); ++b) {
        comms.push_back(G.commutator(a, b));
      }
    }
    auto D = subgroup_generated(G, comms);
    for (Elem x : D.elements()) {
      if (G.element_order(x) == 2) {
        return true;
      }
    }
    return false;
  }

}  // namespace surfaut::oracle
