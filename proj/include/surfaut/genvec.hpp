// surfaut - generating vectors of surface-kernel epimorphisms.
//
// A generating vector for a signature (h; m_1, ..., m_l) is a tuple
// (a_1, b_1, ..., a_h, b_h; v_1, ..., v_l) of group elements with
//
//   prod [a_i, b_i] * prod v_j = 1,   order(v_j) = m_j,   <entries> = G,
//
// i.e. the images of the canonical generators under an epimorphism from the
// Fuchsian group whose kernel is torsion free.  Topological equivalence of
// actions with h = 0 is the orbit relation of Aut(G) x braid group on these
// tuples; orbit_classes computes that partition.
//
// Braid moves use the product-preserving Hurwitz convention
//
//   sigma_i : (..., v_i, v_{i+1}, ...) -> (..., v_{i+1}, v_{i+1}^-1 v_i v_{i+1}, ...)
//
// which maps theta_n to theta_{n+1} in the one-stratum argument for the
// (0; 2, 2, 4, 4) family.  The other common convention
// (v_{i+1}, v_{i+1} v_i v_{i+1}^-1) does not preserve the product of a
// general tuple; both agree on entries of order 2.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "surfaut/error.hpp"
#include "surfaut/fuchsian.hpp"
#include "surfaut/group.hpp"
#include "surfaut/parallel.hpp"

namespace surfaut {

  inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000'000ull;

  class GeneratingVector {
   public:
    GeneratingVector() = default;
    GeneratingVector(FiniteGroup group, Signature sig, std::vector<std::pair<Elem, Elem>> hyperbolic,
                     std::vector<Elem> elliptic)
        : _group(std::move(group)),
          _sig(std::move(sig)),
          _hyperbolic(std::move(hyperbolic)),
          _elliptic(std::move(elliptic)) {
      if (_hyperbolic.size() != static_cast<std::size_t>(_sig.genus())
          || _elliptic.size() != _sig.length()) {
        detail::fail_invalid("generating vector shape does not match signature "
                             + _sig.to_string());
      }
      for (auto e : entries()) {
        if (!_group.is_valid(e)) {
          detail::fail_invalid("generating vector entry out of range");
        }
      }
    }

    /// Elliptic-only vector given by element labels, e.g. {"s", "s", "sr^12"}.
    static GeneratingVector from_labels(FiniteGroup const& G, Signature sig,
                                        std::vector<std::string> const& elliptic,
                                        std::vector<std::pair<std::string, std::string>> const& hyperbolic = {}) {
      std::vector<Elem> ell;
      for (auto const& s : elliptic) {
        ell.push_back(G.parse(s));
      }
      std::vector<std::pair<Elem, Elem>> hyp;
      for (auto const& [a, b] : hyperbolic) {
        hyp.emplace_back(G.parse(a), G.parse(b));
      }
      return GeneratingVector(G, std::move(sig), std::move(hyp), std::move(ell));
    }

    FiniteGroup const& group() const noexcept {
      return _group;
    }
    Signature const& signature() const noexcept {
      return _sig;
    }
    std::vector<std::pair<Elem, Elem>> const& hyperbolic() const noexcept {
      return _hyperbolic;
    }
    std::vector<Elem> const& elliptic() const noexcept {
      return _elliptic;
    }

    /// a_1, b_1, ..., a_h, b_h, v_1, ..., v_l.
    std::vector<Elem> entries() const {
      std::vector<Elem> out;
      for (auto [a, b] : _hyperbolic) {
        out.push_back(a);
        out.push_back(b);
      }
      out.insert(out.end(), _elliptic.begin(), _elliptic.end());
      return out;
    }

    std::vector<std::string> elliptic_labels() const {
      std::vector<std::string> out;
      for (auto e : _elliptic) {
        out.push_back(_group.label(e));
      }
      return out;
    }

    /// The long relation prod [a_i, b_i] * prod v_j.
    Elem relation_product() const {
      Elem p = _group.identity();
      for (auto [a, b] : _hyperbolic) {
        p = _group.mul(p, _group.commutator(a, b));
      }
      for (auto v : _elliptic) {
        p = _group.mul(p, v);
      }
      return p;
    }

    bool operator==(GeneratingVector const& other) const {
      return _group.same_as(other._group) && _sig == other._sig
             && _hyperbolic == other._hyperbolic && _elliptic == other._elliptic;
    }

   private:
    FiniteGroup                        _group;
    Signature                          _sig;
    std::vector<std::pair<Elem, Elem>> _hyperbolic;
    std::vector<Elem>                  _elliptic;
  };

  struct VectorCheck {
    bool                     ok = true;
    std::vector<std::string> violations;

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  /// Checks the three surface-kernel conditions.  Orders are compared as a
  /// multiset, since braid moves permute the periods.
  inline VectorCheck vector_satisfies(GeneratingVector const& vec) {
    VectorCheck        out;
    FiniteGroup const& G = vec.group();
    auto               fail = [&](std::string msg) {
      out.ok = false;
      out.violations.push_back(std::move(msg));
    };
    if (vec.relation_product() != G.identity()) {
      fail("long relation: product is " + G.label(vec.relation_product()) + ", not 1");
    }
    std::vector<std::int64_t> orders;
    for (auto v : vec.elliptic()) {
      orders.push_back(static_cast<std::int64_t>(G.element_order(v)));
    }
    std::sort(orders.begin(), orders.end());
    if (orders != vec.signature().periods()) {
      std::string got;
      for (auto o : orders) {
        got += (got.empty() ? "" : ",") + std::to_string(o);
      }
      fail("elliptic orders {" + got + "} differ from the periods of "
           + vec.signature().to_string());
    }
    auto entries = vec.entries();
    if (entries.empty() || !generates_group(G, entries)) {
      fail("entries generate a proper subgroup");
    }
    return out;
  }

  inline VectorCheck vector_satisfies(FiniteGroup const& G, Signature const& sig,
                                      std::vector<std::pair<Elem, Elem>> const& hyperbolic,
                                      std::vector<Elem> const& elliptic) {
    return vector_satisfies(GeneratingVector(G, sig, hyperbolic, elliptic));
  }

  inline std::int64_t action_genus(GeneratingVector const& vec) {
    if (!vector_satisfies(vec)) {
      detail::fail_invalid("action_genus: not a surface-kernel generating vector");
    }
    return rh_genus(vec.signature(), static_cast<std::int64_t>(vec.group().order()));
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  struct EnumerateOptions {
    unsigned      workers = 1;
    std::uint64_t budget  = kDefaultSearchBudget;
  };

  namespace detail {

    // Work estimate |G|^(number of scanned positions): every position but the
    // last elliptic one is scanned.
    inline std::uint64_t search_cost(std::size_t group_order, std::size_t scanned) {
      long double cost = 1;
      for (std::size_t k = 0; k < scanned; ++k) {
        cost *= static_cast<long double>(group_order);
      }
      return cost > 1.8e19L ? UINT64_MAX : static_cast<std::uint64_t>(cost);
    }

  }  // namespace detail

  /// All generating vectors of G for sig with h <= 1, in lexicographic order
  /// of the entry tuple (a_1, b_1, v_1, ..., v_l).  Elliptic entries appear in
  /// the signature's sorted period order; the last one is solved from the
  /// long relation instead of scanned.
  inline std::vector<GeneratingVector> enumerate_vectors(FiniteGroup const& G, Signature const& sig,
                                                         EnumerateOptions const& opts = {}) {
    if (sig.genus() >= 2) {
      detail::fail_invalid("enumerate_vectors supports orbit genus 0 and 1 only");
    }
    if (sig.genus() == 0 && sig.length() == 0) {
      return {};
    }
    std::size_t const h = static_cast<std::size_t>(sig.genus());
    std::size_t const l = sig.length();

    std::map<std::int64_t, std::vector<Elem>> by_order;
    for (auto m : sig.periods()) {
      if (!by_order.count(m)) {
        by_order[m] = elements_of_order(G, static_cast<std::size_t>(m));
      }
    }
    std::vector<Elem> all(G.order());
    for (Elem x = 0; x < G.order(); ++x) {
      all[x] = x;
    }
    // Pools for the scanned positions: 2h hyperbolic slots then l - 1
    // elliptic slots (or none when l == 0, where b_h... is fully scanned).
    std::vector<std::vector<Elem> const*> pools;
    for (std::size_t k = 0; k < 2 * h; ++k) {
      pools.push_back(&all);
    }
    for (std::size_t k = 0; k + 1 < l; ++k) {
      pools.push_back(&by_order[sig.periods()[k]]);
    }
    std::vector<std::size_t> sizes;
    for (auto* p : pools) {
      sizes.push_back(p->size());
    }
    if (l > 0 && by_order[sig.periods()[l - 1]].empty()) {
      return {};
    }
    std::uint64_t cost = detail::search_cost(G.order(), pools.size());
    if (cost > opts.budget) {
      throw BudgetExceeded("enumerate_vectors(" + G.description() + ", " + sig.to_string()
                           + "): search space " + std::to_string(cost) + " exceeds budget "
                           + std::to_string(opts.budget));
    }
    for (auto s : sizes) {
      if (s == 0) {
        return {};
      }
    }
    std::size_t const last_period = l ? static_cast<std::size_t>(sig.periods()[l - 1]) : 0;

    // Each worker owns a block of the first pool; blocks are concatenated in
    // order, so the result does not depend on the worker count.
    std::size_t const first_size = pools.empty() ? 1 : pools[0]->size();
    std::vector<std::vector<GeneratingVector>> parts(std::max(1u, opts.workers));
    detail::parallel_blocks(first_size, opts.workers, [&](std::size_t block, std::size_t begin,
                                                         std::size_t end) {
      std::vector<Elem>  tuple(pools.size() + (l ? 1 : 0));
      std::vector<Elem>  prefix(pools.size() + 1);  // running long-relation product
      std::vector<char>  seen(G.order());
      std::vector<Elem>  queue;
      auto&              out = parts[block];
      auto generates = [&]() {
        std::fill(seen.begin(), seen.end(), 0);
        queue.assign(1, G.identity());
        seen[G.identity()] = 1;
        for (std::size_t head = 0; head < queue.size() && queue.size() < G.order(); ++head) {
          for (Elem s : tuple) {
            Elem y = G.mul(queue[head], s);
            if (!seen[y]) {
              seen[y] = 1;
              queue.push_back(y);
            }
          }
        }
        return queue.size() == G.order();
      };
      auto emit = [&]() {
        std::vector<std::pair<Elem, Elem>> hyp;
        for (std::size_t k = 0; k < h; ++k) {
          hyp.emplace_back(tuple[2 * k], tuple[2 * k + 1]);
        }
        std::vector<Elem> ell(tuple.begin() + 2 * h, tuple.end());
        out.emplace_back(G, sig, std::move(hyp), std::move(ell));
      };
      prefix[0] = G.identity();
      auto recurse = [&](auto&& self, std::size_t pos) -> void {
        if (pos == pools.size()) {
          Elem p = prefix[pos];
          if (l == 0) {
            if (p != G.identity()) {
              return;
            }
          } else {
            Elem last = G.inv(p);
            if (G.element_order(last) != last_period) {
              return;
            }
            tuple[pos] = last;
          }
          if (generates()) {
            emit();
          }
          return;
        }
        auto const& pool = *pools[pos];
        std::size_t lo = 0, hi = pool.size();
        if (pos == 0) {
          lo = begin;
          hi = end;
        }
        for (std::size_t k = lo; k < hi; ++k) {
          Elem x     = pool[k];
          tuple[pos] = x;
          if (pos < 2 * h) {
            // Commutators enter the product once both a_i and b_i are known.
            if (pos % 2 == 0) {
              prefix[pos + 1] = prefix[pos];
            } else {
              prefix[pos + 1] = G.mul(prefix[pos], G.commutator(tuple[pos - 1], x));
            }
          } else {
            prefix[pos + 1] = G.mul(prefix[pos], x);
          }
          self(self, pos + 1);
        }
      };
      if (pools.empty()) {
        if (block == 0) {
          recurse(recurse, 0);
        }
      } else {
        recurse(recurse, 0);
      }
    });
    std::vector<GeneratingVector> result;
    for (auto& part : parts) {
      for (auto& v : part) {
        result.push_back(std::move(v));
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Moves
  ////////////////////////////////////////////////////////////////////////

  enum class BraidDirection { forward, backward };

  /// Hurwitz move on elliptic positions i, i+1 (1-based).  Forward:
  /// (x, y) -> (y, y^-1 x y); backward: (x, y) -> (x y x^-1, x).
  inline GeneratingVector braid_move(GeneratingVector const& vec, std::size_t i,
                                     BraidDirection dir = BraidDirection::forward) {
    std::size_t l = vec.elliptic().size();
    if (i < 1 || i + 1 > l) {
      detail::fail_invalid("braid_move: index " + std::to_string(i) + " outside [1, "
                           + std::to_string(l == 0 ? 0 : l - 1) + "]");
    }
    FiniteGroup const& G   = vec.group();
    auto               ell = vec.elliptic();
    Elem               x = ell[i - 1], y = ell[i];
    if (dir == BraidDirection::forward) {
      ell[i - 1] = y;
      ell[i]     = G.mul(G.mul(G.inv(y), x), y);
    } else {
      ell[i - 1] = G.mul(G.mul(x, y), G.inv(x));
      ell[i]     = x;
    }
    return GeneratingVector(G, vec.signature(), vec.hyperbolic(), std::move(ell));
  }

  inline GeneratingVector apply_automorphism(GroupMorphism const& omega,
                                             GeneratingVector const& vec) {
    if (!omega.source().same_as(vec.group()) || !omega.target().same_as(vec.group())
        || !omega.bijective()) {
      detail::fail_invalid("apply_automorphism: not an automorphism of the vector's group");
    }
    std::vector<std::pair<Elem, Elem>> hyp;
    for (auto [a, b] : vec.hyperbolic()) {
      hyp.emplace_back(omega(a), omega(b));
    }
    std::vector<Elem> ell;
    for (auto v : vec.elliptic()) {
      ell.push_back(omega(v));
    }
    return GeneratingVector(vec.group(), vec.signature(), std::move(hyp), std::move(ell));
  }

  ////////////////////////////////////////////////////////////////////////
  // Orbits of Aut(G) x braid group (h = 0)
  ////////////////////////////////////////////////////////////////////////

  struct ActionClass {
    GeneratingVector representative;  // least member in sorted period order
    std::size_t      orbit_size   = 0;  // all tuples, any period order
    std::size_t      member_count = 0;  // members in sorted period order
    std::size_t      total_vectors = 0;  // enumerated vectors over all classes
  };

  struct OrbitOptions {
    unsigned      workers = 1;
    std::uint64_t budget  = kDefaultSearchBudget;
  };

  namespace detail {

    inline constexpr std::size_t kMaxOrbitLength = 8;

    struct TupleKey {
      std::array<std::uint16_t, kMaxOrbitLength> e{};

      bool operator==(TupleKey const&) const = default;
      auto operator<=>(TupleKey const&) const = default;
    };

    struct TupleKeyHash {
      std::size_t operator()(TupleKey const& k) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (auto x : k.e) {
          h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
      }
    };

    inline TupleKey make_key(std::vector<Elem> const& v) {
      TupleKey k;
      for (std::size_t i = 0; i < v.size(); ++i) {
        k.e[i] = static_cast<std::uint16_t>(v[i]);
      }
      return k;
    }

    // Neighbours of a tuple under braid moves (both directions) and the given
    // automorphisms.
    inline void orbit_neighbours(FiniteGroup const& G, std::size_t l,
                                 std::vector<GroupMorphism> const& autos, TupleKey const& k,
                                 std::vector<TupleKey>& out) {
      for (std::size_t i = 0; i + 1 < l; ++i) {
        Elem     x = k.e[i], y = k.e[i + 1];
        TupleKey f = k, b = k;
        f.e[i]     = static_cast<std::uint16_t>(y);
        f.e[i + 1] = static_cast<std::uint16_t>(G.mul(G.mul(G.inv(y), x), y));
        b.e[i]     = static_cast<std::uint16_t>(G.mul(G.mul(x, y), G.inv(x)));
        b.e[i + 1] = static_cast<std::uint16_t>(x);
        out.push_back(f);
        out.push_back(b);
      }
      for (auto const& a : autos) {
        TupleKey m = k;
        for (std::size_t i = 0; i < l; ++i) {
          m.e[i] = static_cast<std::uint16_t>(a(k.e[i]));
        }
        out.push_back(m);
      }
    }

    // Closure of `start` under the moves, level by level.  Frontier
    // expansion fans out over workers; insertion into the visited set is
    // serial and in frontier order, so the result is schedule independent.
    inline std::vector<TupleKey> explore_orbit(FiniteGroup const& G, std::size_t l,
                                               std::vector<GroupMorphism> const& autos,
                                               TupleKey const& start, unsigned workers,
                                               std::uint64_t budget) {
      std::unordered_set<TupleKey, TupleKeyHash> visited{start};
      std::vector<TupleKey>                      members{start};
      std::vector<TupleKey>                      frontier{start};
      while (!frontier.empty()) {
        std::vector<std::vector<TupleKey>> produced(std::max(1u, workers));
        parallel_blocks(frontier.size(), workers,
                        [&](std::size_t block, std::size_t begin, std::size_t end) {
                          for (std::size_t k = begin; k < end; ++k) {
                            orbit_neighbours(G, l, autos, frontier[k], produced[block]);
                          }
                        });
        std::vector<TupleKey> next;
        for (auto& part : produced) {
          for (auto const& key : part) {
            if (visited.insert(key).second) {
              members.push_back(key);
              next.push_back(key);
            }
          }
        }
        if (members.size() > budget) {
          throw BudgetExceeded("orbit exploration exceeded " + std::to_string(budget)
                               + " tuples");
        }
        frontier = std::move(next);
      }
      return members;
    }

    inline bool periods_sorted(FiniteGroup const& G, TupleKey const& k, Signature const& sig) {
      for (std::size_t i = 0; i < sig.length(); ++i) {
        if (static_cast<std::int64_t>(G.element_order(k.e[i])) != sig.periods()[i]) {
          return false;
        }
      }
      return true;
    }

  }  // namespace detail

  /// Partition of enumerate_vectors(G, sig) into topological equivalence
  /// classes, sorted by canonical representative.
  inline std::vector<ActionClass> orbit_classes(FiniteGroup const& G, Signature const& sig,
                                                OrbitOptions const& opts = {}) {
    if (sig.genus() != 0) {
      detail::fail_invalid("orbit_classes: only orbit genus 0 is supported (got "
                           + sig.to_string() + ")");
    }
    if (sig.length() > detail::kMaxOrbitLength) {
      detail::fail_invalid("orbit_classes: more than 8 branch points");
    }
    if (G.order() > 65535) {
      detail::fail_invalid("orbit_classes: group too large for packed tuples");
    }
    auto vecs = enumerate_vectors(G, sig, {opts.workers, opts.budget});
    if (vecs.empty()) {
      return {};
    }
    auto autos = generating_automorphisms(automorphisms(G));

    std::unordered_map<detail::TupleKey, std::size_t, detail::TupleKeyHash> index;
    for (std::size_t k = 0; k < vecs.size(); ++k) {
      index.emplace(detail::make_key(vecs[k].elliptic()), k);
    }
    std::vector<std::size_t> class_of(vecs.size(), SIZE_MAX);
    std::vector<ActionClass> out;
    for (std::size_t k = 0; k < vecs.size(); ++k) {
      if (class_of[k] != SIZE_MAX) {
        continue;
      }
      // vecs is lexicographic, so the first unassigned vector is the least
      // sorted-order member of its orbit.
      auto members = detail::explore_orbit(G, sig.length(), autos,
                                           detail::make_key(vecs[k].elliptic()), opts.workers,
                                           opts.budget);
      ActionClass cls{vecs[k], members.size(), 0, vecs.size()};
      for (auto const& key : members) {
        auto it = index.find(key);
        if (it != index.end()) {
          class_of[it->second] = out.size();
          ++cls.member_count;
        } else if (detail::periods_sorted(G, key, sig)) {
          detail::fail_invariant("orbit reached a sorted-order vector missing from enumeration");
        }
      }
      out.push_back(std::move(cls));
    }
    return out;
  }

  /// Least sorted-period-order member of the orbit of vec (h = 0).
  inline GeneratingVector canonical_representative(GeneratingVector const& vec,
                                                   unsigned workers = 1) {
    FiniteGroup const& G   = vec.group();
    Signature const&   sig = vec.signature();
    if (sig.genus() != 0 || sig.length() > detail::kMaxOrbitLength) {
      detail::fail_invalid("canonical_representative: unsupported signature");
    }
    auto autos   = generating_automorphisms(automorphisms(G));
    auto members = detail::explore_orbit(G, sig.length(), autos,
                                         detail::make_key(vec.elliptic()), workers,
                                         kDefaultSearchBudget);
    std::optional<detail::TupleKey> best;
    for (auto const& key : members) {
      if (detail::periods_sorted(G, key, sig) && (!best || key < *best)) {
        best = key;
      }
    }
    if (!best) {
      detail::fail_invariant("orbit has no member in sorted period order");
    }
    std::vector<Elem> ell(best->e.begin(), best->e.begin() + sig.length());
    return GeneratingVector(G, sig, {}, std::move(ell));
  }

}  // namespace surfaut
