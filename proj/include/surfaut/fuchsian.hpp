// surfaut - signatures of co-compact Fuchsian groups.
//
// Exact arithmetic on signatures (h; m_1, ..., m_l): normalised hyperbolic
// area 2h - 2 + sum(1 - 1/m_i), Teichmueller dimension 3h - 3 + l, the
// Riemann-Hurwitz genus of a surface-kernel action, candidate signatures for
// a given group order and genus, and the dimension-preserving inclusions
// Delta < Delta' used to detect extendable actions.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "surfaut/error.hpp"

namespace surfaut {

  using Rational = boost::rational<std::int64_t>;

  inline std::string to_string(Rational const& r) {
    if (r.denominator() == 1) {
      return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
  }

  /// Orbit genus plus branch periods, periods kept non-decreasing.
  class Signature {
   public:
    Signature() = default;
    Signature(std::int64_t h, std::vector<std::int64_t> periods)
        : _h(h), _periods(std::move(periods)) {
      if (_h < 0) {
        detail::fail_invalid("negative orbit genus");
      }
      for (auto m : _periods) {
        if (m < 2) {
          detail::fail_invalid("branch periods must be at least 2");
        }
      }
      std::sort(_periods.begin(), _periods.end());
    }

    std::int64_t genus() const noexcept {
      return _h;
    }
    std::vector<std::int64_t> const& periods() const noexcept {
      return _periods;
    }
    std::size_t length() const noexcept {
      return _periods.size();
    }

    auto operator<=>(Signature const&) const = default;

    /// "h;m1,m2,..."; a signature without periods prints as "h;".
    std::string to_string() const {
      std::string out = std::to_string(_h) + ";";
      for (std::size_t i = 0; i < _periods.size(); ++i) {
        out += (i ? "," : "") + std::to_string(_periods[i]);
      }
      return out;
    }

    static Signature parse(std::string_view text) {
      auto bad = [&](std::string const& why) {
        detail::fail_invalid("bad signature '" + std::string(text) + "': " + why);
      };
      std::string s;
      for (char c : text) {
        if (c != ' ' && c != '(' && c != ')') {
          s += c;
        }
      }
      auto semi = s.find(';');
      if (semi == std::string::npos || semi == 0) {
        bad("expected 'h;m1,m2,...'");
      }
      auto number = [&](std::string const& tok) {
        if (tok.empty() || tok.size() > 9
            || tok.find_first_not_of("0123456789") != std::string::npos) {
          bad("'" + tok + "' is not a non-negative integer");
        }
        return static_cast<std::int64_t>(std::stoll(tok));
      };
      std::int64_t              h = number(s.substr(0, semi));
      std::vector<std::int64_t> periods;
      std::string               rest = s.substr(semi + 1);
      std::size_t               pos  = 0;
      while (pos < rest.size()) {
        auto comma = rest.find(',', pos);
        auto tok   = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        periods.push_back(number(tok));
        if (comma == std::string::npos) {
          break;
        }
        pos = comma + 1;
        if (pos == rest.size()) {
          bad("trailing comma");
        }
      }
      return Signature(h, std::move(periods));
    }

   private:
    std::int64_t              _h = 0;
    std::vector<std::int64_t> _periods;
  };

  /// mu(Delta) / 2pi = 2h - 2 + sum(1 - 1/m_i).
  inline Rational normalized_area(Signature const& sig) {
    Rational area(2 * sig.genus() - 2);
    for (auto m : sig.periods()) {
      area += Rational(m - 1, m);
    }
    return area;
  }

  inline std::int64_t teich_dim(Signature const& sig) {
    std::int64_t d = 3 * sig.genus() - 3 + static_cast<std::int64_t>(sig.length());
    if (d < 0) {
      detail::fail_invalid("signature " + sig.to_string()
                           + " has negative Teichmueller dimension");
    }
    return d;
  }

  /// Genus g of a surface on which a group of the given order acts with the
  /// given signature: 2g - 2 = |G| * area.
  inline std::int64_t rh_genus(Signature const& sig, std::int64_t group_order) {
    Rational twice = normalized_area(sig) * group_order;
    if (twice.denominator() != 1 || twice.numerator() % 2 != 0) {
      detail::fail_invalid("Riemann-Hurwitz: " + std::to_string(group_order) + " * area("
                           + sig.to_string() + ") = " + surfaut::to_string(twice)
                           + " is not an even integer");
    }
    std::int64_t g = 1 + twice.numerator() / 2;
    if (g < 0) {
      detail::fail_invalid("Riemann-Hurwitz: negative genus for " + sig.to_string());
    }
    return g;
  }

  /// Every signature of area 2(genus-1)/group_order whose periods lie in
  /// available_orders.  The orbit genus is bounded by the area and the
  /// number of periods by 2 * (remaining area), so the search terminates.
  inline std::vector<Signature> candidate_signatures(std::set<std::int64_t> const& available_orders,
                                                     std::int64_t group_order,
                                                     std::int64_t genus) {
    if (genus < 2) {
      detail::fail_invalid("candidate_signatures needs genus >= 2");
    }
    if (group_order < 1) {
      detail::fail_invalid("group order must be positive");
    }
    Rational const            target(2 * (genus - 1), group_order);
    std::vector<std::int64_t> periods;
    for (auto m : available_orders) {
      if (m >= 2) {
        periods.push_back(m);
      }
    }
    std::vector<Signature>    out;
    std::vector<std::int64_t> chosen;
    // Non-decreasing choice of periods summing to `left`.
    auto fill = [&](auto&& self, std::int64_t h, std::size_t from, Rational left) -> void {
      if (left.numerator() == 0) {
        out.emplace_back(h, chosen);
        return;
      }
      for (std::size_t k = from; k < periods.size(); ++k) {
        Rational term(periods[k] - 1, periods[k]);
        if (term > left) {
          break;  // terms only grow with the period
        }
        chosen.push_back(periods[k]);
        self(self, h, k, left - term);
        chosen.pop_back();
      }
    };
    for (std::int64_t h = 0; Rational(2 * h - 2) <= target; ++h) {
      fill(fill, h, 0, target - Rational(2 * h - 2));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Dimension-preserving inclusions
  ////////////////////////////////////////////////////////////////////////

  struct ExtensionRule {
    Signature    inner;
    Signature    outer;
    std::int64_t index;

    bool operator==(ExtensionRule const&) const = default;
  };

  /// A period slot in a table row: either a constant or coefficient * t_k.
  struct PeriodTerm {
    std::int64_t constant = 0;
    int          variable = -1;  // -1 for constants
    std::int64_t factor   = 1;

    static PeriodTerm fixed(std::int64_t c) {
      return {c, -1, 1};
    }
    static PeriodTerm var(int k, std::int64_t factor = 1) {
      return {0, k, factor};
    }
  };

  /// One row of the inclusion table: an inner pattern matched positionally
  /// against a sorted period list, and the outer pattern it extends to.
  struct InclusionRow {
    std::int64_t            inner_genus;
    std::vector<PeriodTerm> inner;
    std::int64_t            outer_genus;
    std::vector<PeriodTerm> outer;
    std::int64_t            index;
  };

  /// Dimension-preserving Fuchsian inclusions of Singerman's list that the
  /// boundary analysis needs.  Adding rows here needs no code change.
  inline std::vector<InclusionRow> const& singerman_rows() {
    using T = PeriodTerm;
    static std::vector<InclusionRow> const rows = {
        // (1; t) < (0; 2, 2, 2, 2t)
        {1, {T::var(0)}, 0, {T::fixed(2), T::fixed(2), T::fixed(2), T::var(0, 2)}, 2},
        // (0; t, t, t, t) < (0; 2, 2, 2, t)
        {0, {T::var(0), T::var(0), T::var(0), T::var(0)},
         0, {T::fixed(2), T::fixed(2), T::fixed(2), T::var(0)}, 4},
        // (0; t1, t1, t2, t2) < (0; 2, 2, t1, t2)
        {0, {T::var(0), T::var(0), T::var(1), T::var(1)},
         0, {T::fixed(2), T::fixed(2), T::var(0), T::var(1)}, 2},
        // (2; -) < (0; 2, 2, 2, 2, 2, 2)
        {2, {}, 0, {T::fixed(2), T::fixed(2), T::fixed(2), T::fixed(2), T::fixed(2), T::fixed(2)},
         2},
    };
    return rows;
  }

  inline std::vector<ExtensionRule> possible_extensions(Signature const& sig) {
    std::vector<ExtensionRule> out;
    for (auto const& row : singerman_rows()) {
      if (row.inner_genus != sig.genus() || row.inner.size() != sig.length()) {
        continue;
      }
      std::map<int, std::int64_t> binding;
      bool                        ok = true;
      for (std::size_t i = 0; i < row.inner.size() && ok; ++i) {
        auto const& term = row.inner[i];
        auto        m    = sig.periods()[i];
        if (term.variable < 0) {
          ok = term.constant == m;
        } else {
          auto [it, fresh] = binding.emplace(term.variable, m);
          ok               = fresh || it->second == m;
        }
      }
      if (!ok) {
        continue;
      }
      std::vector<std::int64_t> outer;
      for (auto const& term : row.outer) {
        outer.push_back(term.variable < 0 ? term.constant : term.factor * binding.at(term.variable));
      }
      ExtensionRule rule{sig, Signature(row.outer_genus, outer), row.index};
      if (normalized_area(rule.inner) != normalized_area(rule.outer) * rule.index
          || teich_dim(rule.inner) != teich_dim(rule.outer)) {
        detail::fail_invariant("inclusion table row inconsistent for " + sig.to_string());
      }
      if (std::find(out.begin(), out.end(), rule) == out.end()) {
        out.push_back(rule);
      }
    }
    return out;
  }

}  // namespace surfaut
