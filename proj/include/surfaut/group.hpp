// surfaut - finite groups given by explicit multiplication tables.
//
// Every group used by the library belongs to one of a handful of families
// (cyclic, dihedral, metacyclic, Q8 x C_n, D_{2^n} x| C_2 and direct products
// of these).  Elements are dense indices 0..order-1 into a precomputed Cayley
// table; each index carries a normal-form word such as "sr^12" or "ab^2",
// so nothing outside this header needs to look at raw indices.

#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "surfaut/arith.hpp"
#include "surfaut/error.hpp"

namespace surfaut {

  using Elem = std::uint32_t;

  inline constexpr std::size_t kMaxGroupOrder     = 4096;
  inline constexpr std::size_t kExhaustiveCheckMax = 512;
  inline constexpr std::size_t kAutomorphismMax   = 512;

  ////////////////////////////////////////////////////////////////////////
  // Group specifications
  ////////////////////////////////////////////////////////////////////////

  /// One factor of a group specification, e.g. {"metacyclic", {13, 4, 5}}.
  struct FactorSpec {
    std::string               family;
    std::vector<std::int64_t> params;

    bool operator==(FactorSpec const&) const = default;

    std::string to_string() const {
      std::string out = family + ":";
      for (std::size_t i = 0; i < params.size(); ++i) {
        out += (i ? "," : "") + std::to_string(params[i]);
      }
      return out;
    }
  };

  /// A direct product of family factors.  String form is the factors'
  /// "family:p1,p2" forms joined by "x", e.g. "cyclic:13xcyclic:2xcyclic:2".
  struct GroupSpec {
    std::vector<FactorSpec> factors;

    bool operator==(GroupSpec const&) const = default;

    std::string to_string() const {
      std::string out;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        out += (i ? "x" : "") + factors[i].to_string();
      }
      return out;
    }

    static GroupSpec parse(std::string_view text);
  };

  inline GroupSpec GroupSpec::parse(std::string_view text) {
    // Longest names first: "q8xc" contains the product separator.
    static constexpr std::string_view families[]
        = {"metacyclic", "dihedral", "d2semi", "cyclic", "q8xc"};
    static constexpr std::size_t arity[] = {3, 1, 2, 1, 1};

    GroupSpec   spec;
    std::size_t pos = 0;
    auto        bad = [&](std::string const& why) {
      detail::fail_invalid("bad group spec '" + std::string(text) + "': " + why);
    };
    while (true) {
      std::size_t which = std::size(families);
      for (std::size_t f = 0; f < std::size(families); ++f) {
        if (text.substr(pos, families[f].size()) == families[f]) {
          which = f;
          break;
        }
      }
      if (which == std::size(families)) {
        bad("unknown family at offset " + std::to_string(pos));
      }
      FactorSpec factor{std::string(families[which]), {}};
      pos += families[which].size();
      if (pos >= text.size() || text[pos] != ':') {
        bad("expected ':' after family name");
      }
      ++pos;
      while (true) {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
          ++pos;
        }
        if (start == pos || pos - start > 9) {
          bad("expected a parameter");
        }
        factor.params.push_back(std::stoll(std::string(text.substr(start, pos - start))));
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        break;
      }
      if (factor.params.size() != arity[which]) {
        bad(factor.family + " takes " + std::to_string(arity[which]) + " parameter(s)");
      }
      spec.factors.push_back(std::move(factor));
      if (pos == text.size()) {
        break;
      }
      if (text[pos] != 'x') {
        bad("expected 'x' between factors");
      }
      ++pos;
    }
    return spec;
  }

  ////////////////////////////////////////////////////////////////////////
  // FiniteGroup
  ////////////////////////////////////////////////////////////////////////

  struct Generator {
    std::string name;
    Elem        element;
  };

  /// One letter of a normal-form word: generator position and exponent.
  struct Letter {
    std::size_t  generator;
    std::int64_t exponent;
  };

  using Word = std::vector<Letter>;

  class FiniteGroup;

  namespace detail {

    struct GroupData {
      std::size_t              order = 0;
      std::vector<Elem>        table;  // table[x * order + y] = x * y
      std::vector<Elem>        inverse;
      std::vector<std::size_t> element_order;
      Elem                     identity = 0;
      std::vector<Generator>   generators;
      std::vector<Word>        words;
      std::vector<std::string> labels;
      std::unordered_map<std::string, Elem> label_index;
      std::optional<GroupSpec> spec;
      std::string              description;
      std::vector<std::vector<Elem>> classes;
      std::vector<std::size_t>       class_of;
      // Breadth-first spanning tree of the Cayley graph on the generators,
      // used to extend generator images to morphisms.
      std::vector<Elem>        bfs_order;
      std::vector<Elem>        bfs_parent;
      std::vector<std::size_t> bfs_generator;
    };

    // Raw material for a group: a multiplication rule on indices plus the
    // normal-form word of every index.
    struct GroupBlueprint {
      std::size_t                              order;
      std::function<Elem(Elem, Elem)>          mul;
      std::vector<std::string>                 generator_names;
      std::vector<Elem>                        generator_elements;
      std::vector<Word>                        words;
      std::optional<GroupSpec>                 spec;
      std::string                              description;
      std::vector<std::string>                 labels;  // overrides rendered words
    };

    std::shared_ptr<GroupData const> finish_group(GroupBlueprint bp);

  }  // namespace detail

  /// A finite group realised by its multiplication table.  Copies share the
  /// same immutable data, so passing groups by value is cheap and they are
  /// safe to read from many threads.
  class FiniteGroup {
   public:
    FiniteGroup() = default;
    explicit FiniteGroup(std::shared_ptr<detail::GroupData const> data)
        : _data(std::move(data)) {}

    std::size_t order() const noexcept {
      return _data->order;
    }
    Elem identity() const noexcept {
      return _data->identity;
    }
    Elem mul(Elem x, Elem y) const noexcept {
      return _data->table[static_cast<std::size_t>(x) * _data->order + y];
    }
    Elem inv(Elem x) const noexcept {
      return _data->inverse[x];
    }
    Elem pow(Elem x, std::int64_t e) const {
      if (e < 0) {
        x = inv(x);
        e = -e;
      }
      e %= static_cast<std::int64_t>(element_order(x));
      Elem result = identity();
      for (std::int64_t i = 0; i < e; ++i) {
        result = mul(result, x);
      }
      return result;
    }
    /// g x g^-1
    Elem conj(Elem x, Elem g) const noexcept {
      return mul(mul(g, x), inv(g));
    }
    /// [x, y] = x y x^-1 y^-1
    Elem commutator(Elem x, Elem y) const noexcept {
      return mul(mul(x, y), mul(inv(x), inv(y)));
    }
    std::size_t element_order(Elem x) const noexcept {
      return _data->element_order[x];
    }
    bool is_valid(Elem x) const noexcept {
      return x < _data->order;
    }

    std::span<Generator const> generators() const noexcept {
      return _data->generators;
    }
    Elem generator(std::string_view name) const {
      for (auto const& g : _data->generators) {
        if (g.name == name) {
          return g.element;
        }
      }
      detail::fail_invalid("no generator named '" + std::string(name) + "' in "
                           + description());
    }

    std::string const& label(Elem x) const {
      return _data->labels.at(x);
    }
    Word const& word(Elem x) const {
      return _data->words.at(x);
    }
    /// Exponent of the named generator in the normal form of x (0 if absent).
    std::int64_t normal_exponent(Elem x, std::string_view gen) const {
      for (auto const& letter : word(x)) {
        if (_data->generators[letter.generator].name == gen) {
          return letter.exponent;
        }
      }
      for (auto const& g : _data->generators) {
        if (g.name == gen) {
          return 0;
        }
      }
      detail::fail_invalid("no generator named '" + std::string(gen) + "'");
    }

    /// Evaluates a product of generator powers written like a label:
    /// "sr^12", "a^-3b", "x^2yz", "c1^3c2".  "1" is the identity.
    Elem parse(std::string_view text) const;

    /// Index of an element given by exact normal-form label.
    std::optional<Elem> find_label(std::string const& text) const {
      auto it = _data->label_index.find(text);
      if (it == _data->label_index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    std::optional<GroupSpec> const& spec() const noexcept {
      return _data->spec;
    }
    /// Spec string when the group came from a family constructor, otherwise
    /// a free-form description.
    std::string const& description() const noexcept {
      return _data->description;
    }

    std::vector<std::vector<Elem>> const& conjugacy_classes() const noexcept {
      return _data->classes;
    }
    std::size_t class_of(Elem x) const noexcept {
      return _data->class_of[x];
    }

    /// Least common multiple of the element orders.
    std::size_t exponent() const {
      std::size_t e = 1;
      for (auto o : _data->element_order) {
        e = std::lcm(e, o);
      }
      return e;
    }

    bool same_as(FiniteGroup const& other) const noexcept {
      return _data == other._data;
    }

    detail::GroupData const& data() const noexcept {
      return *_data;
    }

   private:
    std::shared_ptr<detail::GroupData const> _data;
  };

  inline Elem FiniteGroup::parse(std::string_view text) const {
    auto bad = [&](std::string const& why) {
      detail::fail_invalid("cannot parse element '" + std::string(text) + "' of "
                           + description() + ": " + why);
    };
    std::size_t pos    = 0;
    Elem        result = identity();
    bool        any    = false;
    auto        is_digit = [](char c) { return c >= '0' && c <= '9'; };
    while (pos < text.size()) {
      char c = text[pos];
      if (c == ' ' || c == '*' || c == '.') {
        ++pos;
        continue;
      }
      if (c == '1' && !any && text.find_first_not_of(" ", pos + 1) == std::string_view::npos) {
        return identity();
      }
      if (!std::isalpha(static_cast<unsigned char>(c))) {
        bad("expected a generator name at offset " + std::to_string(pos));
      }
      std::size_t start = pos++;
      while (pos < text.size() && is_digit(text[pos])) {
        ++pos;
      }
      Elem         g = generator(text.substr(start, pos - start));
      std::int64_t e = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        std::size_t estart = pos;
        if (pos < text.size() && text[pos] == '-') {
          ++pos;
        }
        while (pos < text.size() && is_digit(text[pos])) {
          ++pos;
        }
        if (pos == estart || (pos == estart + 1 && text[estart] == '-')) {
          bad("missing exponent");
        }
        e = std::stoll(std::string(text.substr(estart, pos - estart)));
      }
      result = mul(result, pow(g, e));
      any    = true;
    }
    if (!any) {
      bad("empty word");
    }
    return result;
  }

  namespace detail {

    inline std::string render_word(Word const& w, std::vector<std::string> const& names) {
      if (w.empty()) {
        return "1";
      }
      std::string out;
      for (auto const& letter : w) {
        out += names[letter.generator];
        if (letter.exponent != 1) {
          out += "^" + std::to_string(letter.exponent);
        }
      }
      return out;
    }

    inline std::shared_ptr<GroupData const> finish_group(GroupBlueprint bp) {
      auto        d = std::make_shared<GroupData>();
      std::size_t n = bp.order;
      if (n == 0 || n > kMaxGroupOrder) {
        fail_invalid("group order " + std::to_string(n) + " outside [1, "
                     + std::to_string(kMaxGroupOrder) + "]");
      }
      d->order = n;
      d->table.resize(n * n);
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          Elem z = bp.mul(x, y);
          if (z >= n) {
            fail_invariant("multiplication leaves the element range");
          }
          d->table[x * n + y] = z;
        }
      }
      auto m = [&](Elem x, Elem y) { return d->table[x * n + y]; };

      // Two-sided identity.
      std::optional<Elem> id;
      for (Elem e = 0; e < n && !id; ++e) {
        bool ok = true;
        for (Elem x = 0; x < n && ok; ++x) {
          ok = m(e, x) == x && m(x, e) == x;
        }
        if (ok) {
          id = e;
        }
      }
      if (!id) {
        fail_invariant("no two-sided identity");
      }
      d->identity = *id;

      // Two-sided inverses.
      d->inverse.assign(n, n);
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          if (m(x, y) == *id) {
            if (m(y, x) != *id) {
              fail_invariant("left and right inverses differ");
            }
            d->inverse[x] = y;
            break;
          }
        }
        if (d->inverse[x] == n) {
          fail_invariant("element without inverse");
        }
      }

      if (n <= kExhaustiveCheckMax) {
        for (Elem x = 0; x < n; ++x) {
          for (Elem y = 0; y < n; ++y) {
            Elem xy = m(x, y);
            for (Elem z = 0; z < n; ++z) {
              if (m(xy, z) != m(x, m(y, z))) {
                fail_invariant("multiplication is not associative");
              }
            }
          }
        }
      }

      d->element_order.resize(n);
      for (Elem x = 0; x < n; ++x) {
        std::size_t k = 1;
        for (Elem y = x; y != *id; y = m(y, x)) {
          ++k;
        }
        d->element_order[x] = k;
      }

      for (std::size_t i = 0; i < bp.generator_names.size(); ++i) {
        d->generators.push_back({bp.generator_names[i], bp.generator_elements[i]});
      }

      // Spanning tree; doubles as the generation check.
      std::vector<char> seen(n, 0);
      d->bfs_parent.assign(n, *id);
      d->bfs_generator.assign(n, 0);
      d->bfs_order.push_back(*id);
      seen[*id] = 1;
      for (std::size_t head = 0; head < d->bfs_order.size(); ++head) {
        Elem x = d->bfs_order[head];
        for (std::size_t j = 0; j < d->generators.size(); ++j) {
          Elem y = m(x, d->generators[j].element);
          if (!seen[y]) {
            seen[y]             = 1;
            d->bfs_parent[y]    = x;
            d->bfs_generator[y] = j;
            d->bfs_order.push_back(y);
          }
        }
      }
      if (d->bfs_order.size() != n) {
        fail_invariant("named generators do not generate the group");
      }

      d->words = std::move(bp.words);
      if (d->words.size() != n) {
        fail_invariant("missing normal-form words");
      }
      d->labels.resize(n);
      for (Elem x = 0; x < n; ++x) {
        d->labels[x] = bp.labels.empty() ? render_word(d->words[x], bp.generator_names)
                                         : bp.labels[x];
        if (!d->label_index.emplace(d->labels[x], x).second) {
          fail_invariant("duplicate normal-form label " + d->labels[x]);
        }
      }

      d->class_of.assign(n, n);
      for (Elem x = 0; x < n; ++x) {
        if (d->class_of[x] != n) {
          continue;
        }
        std::size_t       idx = d->classes.size();
        std::vector<Elem> cls;
        for (Elem g = 0; g < n; ++g) {
          Elem c = m(m(g, x), d->inverse[g]);
          if (d->class_of[c] == n) {
            d->class_of[c] = idx;
            cls.push_back(c);
          }
        }
        std::sort(cls.begin(), cls.end());
        d->classes.push_back(std::move(cls));
      }

      d->spec        = std::move(bp.spec);
      d->description = d->spec ? d->spec->to_string() : bp.description;
      return d;
    }

    inline GroupBlueprint factor_blueprint(FactorSpec const& f) {
      auto const& p = f.params;
      auto        need = [&](bool cond, std::string const& why) {
        if (!cond) {
          fail_invalid(f.to_string() + ": " + why);
        }
      };
      GroupBlueprint bp;
      bp.spec = GroupSpec{{f}};
      if (f.family == "cyclic") {
        std::int64_t n = p[0];
        need(n >= 1 && static_cast<std::size_t>(n) <= kMaxGroupOrder, "order out of range");
        bp.order = n;
        bp.mul   = [n](Elem x, Elem y) { return static_cast<Elem>((x + y) % n); };
        bp.generator_names    = {"c"};
        bp.generator_elements = {static_cast<Elem>(n > 1 ? 1 : 0)};
        for (std::int64_t i = 0; i < n; ++i) {
          bp.words.push_back(i == 0 ? Word{} : Word{{0, i}});
        }
      } else if (f.family == "dihedral") {
        // s^e r^i  <->  e * n + i;  order 2n.
        std::int64_t n = p[0];
        need(n >= 1 && static_cast<std::size_t>(2 * n) <= kMaxGroupOrder, "order out of range");
        bp.order = 2 * n;
        bp.mul   = [n](Elem x, Elem y) {
          std::int64_t e1 = x / n, i1 = x % n, e2 = y / n, i2 = y % n;
          std::int64_t i = mod((e2 ? -i1 : i1) + i2, n);
          return static_cast<Elem>(((e1 + e2) % 2) * n + i);
        };
        bp.generator_names    = {"r", "s"};
        bp.generator_elements = {static_cast<Elem>(n > 1 ? 1 : 0), static_cast<Elem>(n)};
        for (std::int64_t e = 0; e < 2; ++e) {
          for (std::int64_t i = 0; i < n; ++i) {
            Word w;
            if (e) {
              w.push_back({1, 1});
            }
            if (i) {
              w.push_back({0, i});
            }
            bp.words.push_back(w);
          }
        }
      } else if (f.family == "metacyclic") {
        // a^i b^j  <->  i * m + j.
        std::int64_t q = p[0], m = p[1], u = p[2];
        need(q >= 1 && m >= 1, "parameters must be positive");
        need(q * m <= static_cast<std::int64_t>(kMaxGroupOrder), "order out of range");
        need(pow_mod(u, m, q) == mod(1, q),
             std::to_string(u) + "^" + std::to_string(m) + " is not 1 mod "
                 + std::to_string(q));
        std::vector<std::int64_t> upow(m);
        for (std::int64_t j = 0; j < m; ++j) {
          upow[j] = pow_mod(u, j, q);
        }
        bp.order = q * m;
        bp.mul   = [q, m, upow](Elem x, Elem y) {
          std::int64_t i1 = x / m, j1 = x % m, i2 = y / m, j2 = y % m;
          return static_cast<Elem>(mod(i1 + upow[j1] * i2, q) * m + (j1 + j2) % m);
        };
        bp.generator_names    = {"a", "b"};
        bp.generator_elements = {static_cast<Elem>(q > 1 ? m : 0),
                                 static_cast<Elem>(m > 1 ? 1 : 0)};
        for (std::int64_t i = 0; i < q; ++i) {
          for (std::int64_t j = 0; j < m; ++j) {
            Word w;
            if (i) {
              w.push_back({0, i});
            }
            if (j) {
              w.push_back({1, j});
            }
            bp.words.push_back(w);
          }
        }
      } else if (f.family == "q8xc") {
        // x^i y^e z^k  <->  (2i + e) * n + k, with y x y^-1 = x^3, y^2 = x^2.
        std::int64_t n = p[0];
        need(n >= 1 && 8 * n <= static_cast<std::int64_t>(kMaxGroupOrder), "order out of range");
        bp.order = 8 * n;
        bp.mul   = [n](Elem a, Elem b) {
          std::int64_t qa = a / n, ka = a % n, qb = b / n, kb = b % n;
          std::int64_t i1 = qa / 2, e1 = qa % 2, i2 = qb / 2, e2 = qb % 2;
          std::int64_t i  = mod(i1 + (e1 ? -i2 : i2) + (e1 && e2 ? 2 : 0), 4);
          return static_cast<Elem>((2 * i + (e1 ^ e2)) * n + (ka + kb) % n);
        };
        bp.generator_names    = {"x", "y"};
        bp.generator_elements = {static_cast<Elem>(2 * n), static_cast<Elem>(n)};
        if (n > 1) {
          bp.generator_names.push_back("z");
          bp.generator_elements.push_back(1);
        }
        for (std::int64_t i = 0; i < 4; ++i) {
          for (std::int64_t e = 0; e < 2; ++e) {
            for (std::int64_t k = 0; k < n; ++k) {
              Word w;
              if (i) {
                w.push_back({0, i});
              }
              if (e) {
                w.push_back({1, 1});
              }
              if (k) {
                w.push_back({2, k});
              }
              bp.words.push_back(w);
            }
          }
        }
      } else if (f.family == "d2semi") {
        // <r,s,t : r^N = s^2 = (sr)^2 = t^2 = 1, trt = r^m, tst = s>, N = 2^n.
        // s^e r^i t^f  <->  (e * N + i) * 2 + f.
        std::int64_t n = p[0], m = p[1];
        need(n >= 2 && n <= 10, "n must lie in [2, 10]");
        std::int64_t N = std::int64_t{1} << n;
        need(4 * N <= static_cast<std::int64_t>(kMaxGroupOrder), "order out of range");
        need(mod(m * m, N) == 1,
             std::to_string(m) + "^2 is not 1 mod " + std::to_string(N)
                 + " so t^2 = 1 is inconsistent");
        bp.order = 4 * N;
        bp.mul   = [N, m](Elem x, Elem y) {
          std::int64_t f1 = x % 2, i1 = (x / 2) % N, e1 = x / (2 * N);
          std::int64_t f2 = y % 2, i2 = (y / 2) % N, e2 = y / (2 * N);
          std::int64_t i = mod((e2 ? -i1 : i1) + (f1 ? m * i2 : i2), N);
          return static_cast<Elem>((((e1 + e2) % 2) * N + i) * 2 + (f1 + f2) % 2);
        };
        bp.generator_names    = {"r", "s", "t"};
        bp.generator_elements = {2, static_cast<Elem>(2 * N), 1};
        for (std::int64_t e = 0; e < 2; ++e) {
          for (std::int64_t i = 0; i < N; ++i) {
            for (std::int64_t t = 0; t < 2; ++t) {
              Word w;
              if (e) {
                w.push_back({1, 1});
              }
              if (i) {
                w.push_back({0, i});
              }
              if (t) {
                w.push_back({2, 1});
              }
              bp.words.push_back(w);
            }
          }
        }
      } else {
        fail_invalid("unknown group family '" + f.family + "'");
      }
      return bp;
    }

    // Direct product with lexicographic index pairing (x1, x2) <-> x1*n2+x2.
    // Generator names that occur in more than one factor get the 1-based
    // factor number appended.
    inline GroupBlueprint product_blueprint(std::vector<GroupBlueprint> parts) {
      std::map<std::string, int> uses;
      for (auto const& bp : parts) {
        for (auto const& name : bp.generator_names) {
          ++uses[name];
        }
      }
      std::size_t total = 1;
      for (auto const& bp : parts) {
        total *= bp.order;
        if (total > kMaxGroupOrder) {
          fail_invalid("direct product order exceeds " + std::to_string(kMaxGroupOrder));
        }
      }
      std::vector<std::size_t> stride(parts.size(), 1);
      for (std::size_t k = parts.size(); k-- > 1;) {
        stride[k - 1] = stride[k] * parts[k].order;
      }

      GroupBlueprint out;
      out.order = total;
      GroupSpec spec;
      std::vector<std::size_t> gen_offset;
      for (std::size_t k = 0; k < parts.size(); ++k) {
        gen_offset.push_back(out.generator_names.size());
        for (std::size_t j = 0; j < parts[k].generator_names.size(); ++j) {
          std::string name = parts[k].generator_names[j];
          if (uses[name] > 1) {
            name += std::to_string(k + 1);
          }
          out.generator_names.push_back(name);
          out.generator_elements.push_back(
              static_cast<Elem>(parts[k].generator_elements[j] * stride[k]));
        }
        spec.factors.push_back(parts[k].spec->factors.front());
      }
      out.spec = spec;
      out.words.resize(total);
      for (std::size_t x = 0; x < total; ++x) {
        Word w;
        for (std::size_t k = 0; k < parts.size(); ++k) {
          std::size_t xk = (x / stride[k]) % parts[k].order;
          for (auto letter : parts[k].words[xk]) {
            w.push_back({letter.generator + gen_offset[k], letter.exponent});
          }
        }
        out.words[x] = std::move(w);
      }
      std::vector<std::function<Elem(Elem, Elem)>> muls;
      std::vector<std::size_t>                     orders;
      for (auto& bp : parts) {
        muls.push_back(std::move(bp.mul));
        orders.push_back(bp.order);
      }
      out.mul = [muls, orders, stride](Elem x, Elem y) {
        std::size_t z = 0;
        for (std::size_t k = 0; k < muls.size(); ++k) {
          Elem xk = static_cast<Elem>((x / stride[k]) % orders[k]);
          Elem yk = static_cast<Elem>((y / stride[k]) % orders[k]);
          z += muls[k](xk, yk) * stride[k];
        }
        return static_cast<Elem>(z);
      };
      return out;
    }

  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Construction
  ////////////////////////////////////////////////////////////////////////

  inline FiniteGroup build_group(GroupSpec const& spec) {
    if (spec.factors.empty()) {
      detail::fail_invalid("empty group spec");
    }
    std::vector<detail::GroupBlueprint> parts;
    for (auto const& f : spec.factors) {
      parts.push_back(detail::factor_blueprint(f));
    }
    if (parts.size() == 1) {
      return FiniteGroup(detail::finish_group(std::move(parts.front())));
    }
    return FiniteGroup(detail::finish_group(detail::product_blueprint(std::move(parts))));
  }

  inline FiniteGroup build_group(std::string_view spec) {
    return build_group(GroupSpec::parse(spec));
  }

  inline FiniteGroup cyclic(std::int64_t n) {
    return build_group(GroupSpec{{{"cyclic", {n}}}});
  }
  /// Dihedral group of order 2n.
  inline FiniteGroup dihedral(std::int64_t n) {
    return build_group(GroupSpec{{{"dihedral", {n}}}});
  }
  /// <a, b : a^q = b^m = 1, b a b^-1 = a^u>, order q*m.
  inline FiniteGroup metacyclic(std::int64_t q, std::int64_t m, std::int64_t u) {
    return build_group(GroupSpec{{{"metacyclic", {q, m, u}}}});
  }
  inline FiniteGroup q8_times_cyclic(std::int64_t n) {
    return build_group(GroupSpec{{{"q8xc", {n}}}});
  }
  /// D_{2^n} x| C_2 with t r t = r^m, order 2^(n+2).
  inline FiniteGroup dihedral2_semidirect(std::int64_t n, std::int64_t m) {
    return build_group(GroupSpec{{{"d2semi", {n, m}}}});
  }
  inline FiniteGroup direct_product(std::vector<FiniteGroup> const& factors) {
    GroupSpec spec;
    for (auto const& g : factors) {
      if (!g.spec()) {
        detail::fail_invalid("direct_product needs family-built factors");
      }
      for (auto const& f : g.spec()->factors) {
        spec.factors.push_back(f);
      }
    }
    return build_group(spec);
  }

  ////////////////////////////////////////////////////////////////////////
  // Elements and subgroups
  ////////////////////////////////////////////////////////////////////////

  inline std::size_t element_order(FiniteGroup const& G, Elem g) {
    if (!G.is_valid(g)) {
      detail::fail_invalid("element index out of range");
    }
    return G.element_order(g);
  }

  inline std::vector<Elem> elements_of_order(FiniteGroup const& G, std::size_t k) {
    std::vector<Elem> out;
    for (Elem x = 0; x < G.order(); ++x) {
      if (G.element_order(x) == k) {
        out.push_back(x);
      }
    }
    return out;
  }

  /// Sorted list of the distinct element orders occurring in G.
  inline std::vector<std::size_t> element_orders(FiniteGroup const& G) {
    std::vector<std::size_t> out;
    for (Elem x = 0; x < G.order(); ++x) {
      out.push_back(G.element_order(x));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  namespace detail {
    // Elements of <S>, in discovery order.
    inline std::vector<Elem> closure(FiniteGroup const& G, std::span<Elem const> S) {
      std::vector<char> seen(G.order(), 0);
      std::vector<Elem> out{G.identity()};
      seen[G.identity()] = 1;
      for (std::size_t head = 0; head < out.size(); ++head) {
        for (Elem s : S) {
          Elem y = G.mul(out[head], s);
          if (!seen[y]) {
            seen[y] = 1;
            out.push_back(y);
          }
        }
      }
      return out;
    }
  }  // namespace detail

  /// A subgroup of a parent group, stored as a sorted element set.
  class SubgroupHandle {
   public:
    SubgroupHandle(FiniteGroup parent, std::vector<Elem> elements)
        : _parent(std::move(parent)), _elements(std::move(elements)) {
      std::sort(_elements.begin(), _elements.end());
      _elements.erase(std::unique(_elements.begin(), _elements.end()), _elements.end());
      _member.assign(_parent.order(), 0);
      for (Elem x : _elements) {
        if (!_parent.is_valid(x)) {
          detail::fail_invalid("subgroup element out of range");
        }
        _member[x] = 1;
      }
      if (_elements.empty() || !_member[_parent.identity()]) {
        detail::fail_invariant("subgroup lacks the identity");
      }
      for (Elem x : _elements) {
        if (!_member[_parent.inv(x)]) {
          detail::fail_invariant("subgroup not closed under inverses");
        }
        for (Elem y : _elements) {
          if (!_member[_parent.mul(x, y)]) {
            detail::fail_invariant("subgroup not closed under multiplication");
          }
        }
      }
      if (_parent.order() % _elements.size() != 0) {
        detail::fail_invariant("subgroup order does not divide the group order");
      }
    }

    FiniteGroup const& parent() const noexcept {
      return _parent;
    }
    std::vector<Elem> const& elements() const noexcept {
      return _elements;
    }
    std::size_t order() const noexcept {
      return _elements.size();
    }
    std::size_t index() const noexcept {
      return _parent.order() / _elements.size();
    }
    bool contains(Elem x) const noexcept {
      return x < _member.size() && _member[x];
    }
    bool operator==(SubgroupHandle const& other) const {
      return _parent.same_as(other._parent) && _elements == other._elements;
    }

   private:
    FiniteGroup       _parent;
    std::vector<Elem> _elements;
    std::vector<char> _member;
  };

  inline SubgroupHandle subgroup_generated(FiniteGroup const& G, std::span<Elem const> S) {
    if (S.empty()) {
      detail::fail_invalid("subgroup_generated needs a non-empty set");
    }
    for (Elem s : S) {
      if (!G.is_valid(s)) {
        detail::fail_invalid("element index out of range");
      }
    }
    return SubgroupHandle(G, detail::closure(G, S));
  }

  inline SubgroupHandle subgroup_generated(FiniteGroup const& G,
                                           std::initializer_list<Elem> S) {
    return subgroup_generated(G, std::span<Elem const>(S.begin(), S.size()));
  }

  inline bool generates_group(FiniteGroup const& G, std::span<Elem const> S) {
    return detail::closure(G, S).size() == G.order();
  }

  inline SubgroupHandle commutator_subgroup(FiniteGroup const& G) {
    std::vector<char> seen(G.order(), 0);
    std::vector<Elem> comms;
    for (Elem x = 0; x < G.order(); ++x) {
      for (Elem y = 0; y < G.order(); ++y) {
        Elem c = G.commutator(x, y);
        if (!seen[c]) {
          seen[c] = 1;
          comms.push_back(c);
        }
      }
    }
    return subgroup_generated(G, comms);
  }

  inline std::vector<std::vector<Elem>> conjugacy_classes(FiniteGroup const& G) {
    return G.conjugacy_classes();
  }

  /// Re-packages a subgroup as a group in its own right.  Labels are the
  /// parent's normal forms; the generators are a greedily chosen generating
  /// set taken in increasing index order unless one is supplied.
  inline FiniteGroup as_group(SubgroupHandle const& H, std::vector<Elem> gens = {}) {
    FiniteGroup const&       G = H.parent();
    std::vector<Elem> const& E = H.elements();
    std::vector<Elem>        local(G.order(), 0);
    for (Elem k = 0; k < E.size(); ++k) {
      local[E[k]] = k;
    }
    if (gens.empty()) {
      std::vector<Elem> current;
      std::size_t       have = 1;
      for (Elem x : E) {
        current.push_back(x);
        std::size_t size = detail::closure(G, current).size();
        if (size > have) {
          have = size;
        } else {
          current.pop_back();
        }
        if (have == E.size()) {
          break;
        }
      }
      gens = current.empty() ? std::vector<Elem>{G.identity()} : current;
    }
    detail::GroupBlueprint bp;
    bp.order = E.size();
    bp.mul   = [G, E, local](Elem x, Elem y) { return local[G.mul(E[x], E[y])]; };
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (!H.contains(gens[j])) {
        detail::fail_invalid("as_group: generator outside the subgroup");
      }
      bp.generator_names.push_back("g" + std::to_string(j + 1));
      bp.generator_elements.push_back(local[gens[j]]);
    }
    bp.description = "subgroup of order " + std::to_string(E.size()) + " in "
                     + G.description();
    for (Elem x : E) {
      bp.words.push_back(G.word(x));
      bp.labels.push_back(G.label(x));
    }
    return FiniteGroup(detail::finish_group(std::move(bp)));
  }

  ////////////////////////////////////////////////////////////////////////
  // Morphisms
  ////////////////////////////////////////////////////////////////////////

  /// A homomorphism between two table groups, stored as the image of every
  /// source element.
  class GroupMorphism {
   public:
    /// Validates the homomorphism property on all pairs.
    static GroupMorphism make(FiniteGroup source, FiniteGroup target, std::vector<Elem> images) {
      if (images.size() != source.order()) {
        detail::fail_invalid("morphism image table has the wrong length");
      }
      for (Elem y : images) {
        if (!target.is_valid(y)) {
          detail::fail_invalid("morphism image out of range");
        }
      }
      for (Elem x = 0; x < source.order(); ++x) {
        for (Elem y = 0; y < source.order(); ++y) {
          if (images[source.mul(x, y)] != target.mul(images[x], images[y])) {
            detail::fail_invariant("map is not a homomorphism");
          }
        }
      }
      return GroupMorphism(std::move(source), std::move(target), std::move(images));
    }

    FiniteGroup const& source() const noexcept {
      return _source;
    }
    FiniteGroup const& target() const noexcept {
      return _target;
    }
    Elem operator()(Elem x) const noexcept {
      return _images[x];
    }
    std::vector<Elem> const& images() const noexcept {
      return _images;
    }
    bool injective() const noexcept {
      return _injective;
    }
    bool surjective() const noexcept {
      return _surjective;
    }
    bool bijective() const noexcept {
      return _injective && _surjective;
    }

    /// (this o other)(x) = this(other(x)).
    GroupMorphism compose(GroupMorphism const& other) const {
      std::vector<Elem> img(other._source.order());
      for (Elem x = 0; x < img.size(); ++x) {
        img[x] = _images[other._images[x]];
      }
      return GroupMorphism(other._source, _target, std::move(img));
    }

    GroupMorphism inverse() const {
      if (!bijective()) {
        detail::fail_invalid("inverse of a non-bijective morphism");
      }
      std::vector<Elem> img(_images.size());
      for (Elem x = 0; x < img.size(); ++x) {
        img[_images[x]] = x;
      }
      return GroupMorphism(_target, _source, std::move(img));
    }

    bool operator==(GroupMorphism const& other) const {
      return _images == other._images;
    }

    static GroupMorphism identity(FiniteGroup const& G) {
      std::vector<Elem> img(G.order());
      for (Elem x = 0; x < img.size(); ++x) {
        img[x] = x;
      }
      return GroupMorphism(G, G, std::move(img));
    }

    // For callers that have already proven the homomorphism property by
    // another complete argument (generator-edge check).
    static GroupMorphism trusted(FiniteGroup source, FiniteGroup target, std::vector<Elem> images) {
      return GroupMorphism(std::move(source), std::move(target), std::move(images));
    }

   private:
    GroupMorphism(FiniteGroup source, FiniteGroup target, std::vector<Elem> images)
        : _source(std::move(source)), _target(std::move(target)), _images(std::move(images)) {
      std::vector<char> hit(_target.order(), 0);
      std::size_t       distinct = 0;
      for (Elem y : _images) {
        if (!hit[y]) {
          hit[y] = 1;
          ++distinct;
        }
      }
      _injective  = distinct == _source.order();
      _surjective = distinct == _target.order();
    }

    FiniteGroup       _source;
    FiniteGroup       _target;
    std::vector<Elem> _images;
    bool              _injective  = false;
    bool              _surjective = false;
  };

  namespace detail {

    // Extends generator images along the spanning tree of G and checks every
    // Cayley edge x -> x g_j.  Passing every edge proves the map is a
    // homomorphism: phi(x w) = phi(x) phi(w) for every generator word w.
    inline bool extend_generator_images(FiniteGroup const& G, FiniteGroup const& H,
                                        std::span<Elem const> gen_images,
                                        std::vector<Elem>& phi) {
      auto const& d = G.data();
      phi.assign(G.order(), 0);
      phi[G.identity()] = H.identity();
      for (std::size_t k = 1; k < d.bfs_order.size(); ++k) {
        Elem x = d.bfs_order[k];
        phi[x] = H.mul(phi[d.bfs_parent[x]], gen_images[d.bfs_generator[x]]);
      }
      for (Elem x : d.bfs_order) {
        for (std::size_t j = 0; j < d.generators.size(); ++j) {
          if (phi[G.mul(x, d.generators[j].element)] != H.mul(phi[x], gen_images[j])) {
            return false;
          }
        }
      }
      return true;
    }

    inline std::vector<std::size_t> order_profile(FiniteGroup const& G) {
      std::vector<std::size_t> counts(G.order() + 1, 0);
      for (Elem x = 0; x < G.order(); ++x) {
        ++counts[G.element_order(x)];
      }
      return counts;
    }

    // Enumerates bijective morphisms G -> H by backtracking over images of
    // G's generators among elements of H with matching orders.  The visitor
    // returns false to stop early.
    template <typename Visit>
    void search_isomorphisms(FiniteGroup const& G, FiniteGroup const& H, std::string const& what,
                             Visit&& visit) {
      if (G.order() > kAutomorphismMax || H.order() > kAutomorphismMax) {
        throw BudgetExceeded(what + ": group order above " + std::to_string(kAutomorphismMax));
      }
      if (G.order() != H.order()) {
        return;
      }
      auto gens = G.generators();
      std::vector<std::vector<Elem>> candidates;
      for (auto const& g : gens) {
        candidates.push_back(elements_of_order(H, G.element_order(g.element)));
        if (candidates.back().empty()) {
          return;
        }
      }
      std::vector<Elem>        images(gens.size());
      std::vector<Elem>        phi;
      std::vector<std::size_t> cursor(gens.size(), 0);
      std::vector<char>        hit(H.order());
      // Odometer over the candidate lists, lexicographic in generator order.
      while (true) {
        for (std::size_t j = 0; j < gens.size(); ++j) {
          images[j] = candidates[j][cursor[j]];
        }
        if (extend_generator_images(G, H, images, phi)) {
          std::fill(hit.begin(), hit.end(), 0);
          std::size_t distinct = 0;
          for (Elem y : phi) {
            distinct += hit[y] ? 0 : (hit[y] = 1);
          }
          if (distinct == H.order()) {
            if (!visit(std::move(phi))) {
              return;
            }
          }
        }
        std::size_t j = gens.size();
        while (j > 0) {
          --j;
          if (++cursor[j] < candidates[j].size()) {
            break;
          }
          cursor[j] = 0;
          if (j == 0) {
            return;
          }
        }
      }
    }

  }  // namespace detail

  /// All automorphisms of G, ordered lexicographically by the images of the
  /// named generators.  The identity is always first.
  inline std::vector<GroupMorphism> automorphisms(FiniteGroup const& G) {
    std::vector<GroupMorphism> out;
    detail::search_isomorphisms(G, G, "automorphisms", [&](std::vector<Elem> phi) {
      out.push_back(GroupMorphism::trusted(G, G, std::move(phi)));
      return true;
    });
    auto id = std::find(out.begin(), out.end(), GroupMorphism::identity(G));
    if (id == out.end()) {
      detail::fail_invariant("identity automorphism not found");
    }
    std::rotate(out.begin(), id, id + 1);
    return out;
  }

  /// Small generating set of a list of automorphisms forming a group: an
  /// automorphism is kept if it is not in the subgroup generated by the ones
  /// kept before it.
  inline std::vector<GroupMorphism> generating_automorphisms(std::vector<GroupMorphism> const& all) {
    std::vector<GroupMorphism> gens;
    if (all.empty()) {
      return gens;
    }
    struct VecHash {
      std::size_t operator()(std::vector<Elem> const& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (Elem x : v) {
          h = (h ^ x) * 1099511628211ull;
        }
        return h;
      }
    };
    std::unordered_map<std::vector<Elem>, std::size_t, VecHash> reached;
    std::vector<GroupMorphism>                                  members;
    auto add = [&](GroupMorphism const& m) {
      if (reached.emplace(m.images(), members.size()).second) {
        members.push_back(m);
        return true;
      }
      return false;
    };
    add(GroupMorphism::identity(all.front().source()));
    for (auto const& a : all) {
      if (reached.count(a.images())) {
        continue;
      }
      gens.push_back(a);
      // Re-close: every member times every generator.
      for (std::size_t head = 0; head < members.size(); ++head) {
        for (auto const& g : gens) {
          add(g.compose(members[head]));
        }
      }
      if (members.size() == all.size()) {
        break;
      }
    }
    return gens;
  }

  struct IsomorphismVerdict {
    bool                         isomorphic = false;
    std::string                  reason;
    std::optional<GroupMorphism> witness;
  };

  inline IsomorphismVerdict isomorphism_certificate(FiniteGroup const& G, FiniteGroup const& H) {
    if (G.order() != H.order()) {
      return {false, "orders differ", std::nullopt};
    }
    if (G.order() > kAutomorphismMax || H.order() > kAutomorphismMax) {
      throw BudgetExceeded("are_isomorphic: group order above "
                           + std::to_string(kAutomorphismMax));
    }
    auto pg = detail::order_profile(G), ph = detail::order_profile(H);
    if (pg != ph) {
      for (std::size_t k = 1; k < pg.size(); ++k) {
        if (pg[k] != ph[k]) {
          return {false,
                  "element-order profiles differ: " + std::to_string(pg[k]) + " vs "
                      + std::to_string(ph[k]) + " elements of order " + std::to_string(k),
                  std::nullopt};
        }
      }
    }
    IsomorphismVerdict verdict{false, "exhaustive generator-image search found no isomorphism",
                               std::nullopt};
    detail::search_isomorphisms(G, H, "are_isomorphic", [&](std::vector<Elem> phi) {
      verdict.isomorphic = true;
      verdict.reason     = "explicit isomorphism";
      verdict.witness    = GroupMorphism::trusted(G, H, std::move(phi));
      return false;
    });
    return verdict;
  }

  inline bool are_isomorphic(FiniteGroup const& G, FiniteGroup const& H) {
    return isomorphism_certificate(G, H).isomorphic;
  }

}  // namespace surfaut
