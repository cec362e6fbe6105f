// surfaut - JSON and plain-text rendering of reports.
//
// JSON objects use nlohmann::json's default std::map storage, so keys come
// out sorted and identical inputs give byte-identical output.

#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "surfaut/classify.hpp"
#include "surfaut/cyclotomic.hpp"
#include "surfaut/fuchsian.hpp"
#include "surfaut/genvec.hpp"
#include "surfaut/jacobian.hpp"
#include "surfaut/reptheory.hpp"

namespace surfaut {

  using Json = nlohmann::json;

  /// Fixed-width text table; every column is as wide as its widest cell.
  class TextTable {
   public:
    explicit TextTable(std::vector<std::string> header) : _rows{std::move(header)} {}

    void add(std::vector<std::string> row) {
      row.resize(_rows.front().size());
      _rows.push_back(std::move(row));
    }

    std::string render() const {
      std::vector<std::size_t> width(_rows.front().size(), 0);
      for (auto const& row : _rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          width[c] = std::max(width[c], row[c].size());
        }
      }
      std::ostringstream out;
      auto               line = [&](std::vector<std::string> const& row) {
        std::string text;
        for (std::size_t c = 0; c < row.size(); ++c) {
          text += row[c];
          if (c + 1 < row.size()) {
            text += std::string(width[c] - row[c].size() + 2, ' ');
          }
        }
        out << text << '\n';
      };
      line(_rows.front());
      std::vector<std::string> rule;
      for (auto w : width) {
        rule.push_back(std::string(w, '-'));
      }
      line(rule);
      for (std::size_t r = 1; r < _rows.size(); ++r) {
        line(_rows[r]);
      }
      return out.str();
    }

   private:
    std::vector<std::vector<std::string>> _rows;
  };

  inline std::string join(std::vector<std::string> const& parts, std::string const& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      out += (i ? sep : "") + parts[i];
    }
    return out;
  }

  inline std::string yes_no(bool b) {
    return b ? "yes" : "no";
  }

  ////////////////////////////////////////////////////////////////////////
  // Vectors, characters
  ////////////////////////////////////////////////////////////////////////

  inline Json to_json(GeneratingVector const& vec) {
    Json hyp = Json::array();
    for (auto [a, b] : vec.hyperbolic()) {
      hyp.push_back({vec.group().label(a), vec.group().label(b)});
    }
    return {{"group", vec.group().description()},
            {"signature", vec.signature().to_string()},
            {"hyperbolic", hyp},
            {"elliptic", vec.elliptic_labels()}};
  }

  inline std::string describe(GeneratingVector const& vec) {
    std::vector<std::string> parts;
    for (auto [a, b] : vec.hyperbolic()) {
      parts.push_back("[" + vec.group().label(a) + ", " + vec.group().label(b) + "]");
    }
    for (auto const& s : vec.elliptic_labels()) {
      parts.push_back(s);
    }
    return "(" + join(parts, ", ") + ")";
  }

  inline Json to_json(CyclotomicValue const& v) {
    return {{"conductor", v.conductor()}, {"coefficients", v.coefficients()}};
  }

  inline Json character_table_json(std::vector<Character> const& table) {
    Json out = Json::object();
    if (table.empty()) {
      return out;
    }
    FiniteGroup const& G       = table.front().group;
    Json               classes = Json::array();
    for (auto const& cls : G.conjugacy_classes()) {
      classes.push_back({{"representative", G.label(cls.front())}, {"size", cls.size()}});
    }
    Json chars = Json::array();
    for (auto const& chi : table) {
      Json values = Json::array();
      for (auto const& v : chi.values) {
        values.push_back(to_json(v));
      }
      chars.push_back({{"name", chi.name}, {"degree", chi.degree}, {"values", values}});
    }
    out["group"]      = G.description();
    out["classes"]    = classes;
    out["characters"] = chars;
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Strata
  ////////////////////////////////////////////////////////////////////////

  inline Json to_json(StrataReport const& rep) {
    Json strata = Json::array();
    for (auto const& s : rep.strata) {
      strata.push_back({{"group", s.group},
                        {"paper_name", s.paper_name},
                        {"signature", s.signature.to_string()},
                        {"vector_count", s.vector_count},
                        {"class_count", s.class_count},
                        {"representatives", s.representatives}});
    }
    return {{"genus", rep.genus},
            {"q", rep.q},
            {"q_prime", rep.q_prime},
            {"strata", strata},
            {"theorem1_consistent", rep.theorem1_consistent}};
  }

  inline std::string to_table(StrataReport const& rep) {
    std::ostringstream out;
    out << "genus " << rep.genus << ", q = " << rep.q << (rep.q_prime ? " (prime)" : "")
        << ", group order " << 4 * rep.q << "\n\n";
    TextTable t({"group", "name", "signature", "vectors", "classes", "representative"});
    for (auto const& s : rep.examined) {
      std::string cls = s.class_count == SIZE_MAX ? "?" : std::to_string(s.class_count);
      t.add({s.group, s.paper_name, "(" + s.signature.to_string() + ")",
             std::to_string(s.vector_count), cls,
             s.representatives.empty() ? "-" : "(" + join(s.representatives.front(), ", ") + ")"});
    }
    out << t.render() << "\n"
        << "strata with actions: " << rep.strata.size() << "\n"
        << "consistent with the expected classification: " << yes_no(rep.theorem1_consistent)
        << "\n";
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Jacobian
  ////////////////////////////////////////////////////////////////////////

  inline Json to_json(DecompositionReport const& rep) {
    Json factors = Json::array();
    for (auto const& f : rep.factors) {
      factors.push_back(
          {{"subgroup", f.subgroup}, {"genus", f.genus}, {"multiplicity", f.multiplicity}});
    }
    return {{"family", to_string(rep.family)},
            {"q", rep.q},
            {"genus", rep.genus},
            {"group", rep.group},
            {"signature", rep.signature},
            {"vector", rep.vector},
            {"collection", rep.collection},
            {"relevant_characters", rep.relevant},
            {"factors", factors},
            {"residual", rep.residual},
            {"admissible", rep.admissible},
            {"genus_sum_ok", rep.genus_sum_ok},
            {"conjugacy_ok", rep.conjugacy_ok},
            {"has_elliptic_factor", rep.has_elliptic_factor}};
  }

  inline std::string to_table(DecompositionReport const& rep) {
    std::ostringstream out;
    out << "family " << to_string(rep.family) << ", q = " << rep.q << ", genus " << rep.genus
        << "\n"
        << "group " << rep.group << ", signature (" << rep.signature << ")\n"
        << "vector (" << join(rep.vector, ", ") << ")\n"
        << "characters with non-zero factor dimension: " << join(rep.relevant, " ") << "\n"
        << "collection {" << join(rep.collection, ", ") << "} admissible: "
        << yes_no(rep.admissible) << "\n\n";
    TextTable t({"factor", "genus", "multiplicity"});
    for (auto const& f : rep.factors) {
      t.add({"J(S/" + f.subgroup + ")", std::to_string(f.genus), std::to_string(f.multiplicity)});
    }
    t.add({"residual", std::to_string(rep.residual), "1"});
    out << t.render() << "\n"
        << "genus sum identity: " << yes_no(rep.genus_sum_ok) << "\n"
        << "conjugate subgroups give equal factors: " << yes_no(rep.conjugacy_ok) << "\n"
        << "elliptic curve factor: " << yes_no(rep.has_elliptic_factor) << "\n";
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Boundary, counterexamples, extensions
  ////////////////////////////////////////////////////////////////////////

  inline Json to_json(RestrictionWitness const& w) {
    Json words = Json::array();
    for (auto const& word : w.words) {
      Json letters = Json::array();
      for (auto [pos, e] : word) {
        letters.push_back({pos, e});
      }
      words.push_back(letters);
    }
    std::vector<std::string> images;
    for (Elem x : w.images) {
      images.push_back(w.outer.group().label(x));
    }
    return {{"outer", to_json(w.outer)},
            {"words", words},
            {"induced", images},
            {"induced_signature", w.induced_signature.to_string()},
            {"subgroup_order", w.subgroup.order()},
            {"index", w.index},
            {"induced_genus", action_genus(w.induced)}};
  }

  inline Json to_json(BoundaryReport const& rep) {
    Json witnesses = Json::array();
    for (std::size_t i = 0; i < rep.witnesses.size(); ++i) {
      Json w                  = to_json(rep.witnesses[i]);
      w["genus"]              = rep.genus[i];
      w["subgroup_isomorphism"] = rep.subgroup_iso[i];
      w["subgroup_isomorphic"]  = static_cast<bool>(rep.subgroup_iso_ok[i]);
      witnesses.push_back(w);
    }
    Json symbolic = Json::array();
    for (auto const& s : rep.symbolic) {
      symbolic.push_back({{"expected", s.expected}, {"actual", s.actual}, {"ok", s.ok}});
    }
    Json ext = Json::array();
    for (auto const& e : rep.extensions) {
      ext.push_back({{"inner", e.inner.to_string()}, {"outer", e.outer.to_string()}, {"index", e.index}});
    }
    Json out = {{"q", rep.vectors.q},
                {"case", to_string(rep.vectors.kind)},
                {"u", rep.vectors.u},
                {"group", rep.vectors.group.description()},
                {"witnesses", witnesses},
                {"symbolic_checks", symbolic},
                {"extensions_of_restricted_signature", ext},
                {"ok", rep.ok}};
    if (!rep.cited_assumption.empty()) {
      out["cited_assumption"] = rep.cited_assumption;
    }
    return out;
  }

  inline std::string to_table(BoundaryReport const& rep) {
    std::ostringstream out;
    FiniteGroup const& G = rep.vectors.group;
    out << "case " << to_string(rep.vectors.kind) << ", q = " << rep.vectors.q
        << ", u = " << rep.vectors.u << ", group " << G.description() << " (order " << G.order()
        << ")\n"
        << "alpha = a, beta = b" << (rep.vectors.kind == BoundaryCase::Ord6 ? ", gamma = c" : "")
        << "\n\n";
    TextTable t({"vector", "outer", "genus", "restricted", "signature", "|H|", "index", "H"});
    for (std::size_t i = 0; i < rep.witnesses.size(); ++i) {
      auto const&              w = rep.witnesses[i];
      std::vector<std::string> images;
      for (Elem x : w.images) {
        images.push_back(G.label(x));
      }
      t.add({"Theta_" + std::to_string(i + 1), describe(w.outer), std::to_string(rep.genus[i]),
             "(" + join(images, ", ") + ")", "(" + w.induced_signature.to_string() + ")",
             std::to_string(w.subgroup.order()), std::to_string(w.index), rep.subgroup_iso[i]});
    }
    out << t.render();
    for (std::size_t i = 0; i < rep.symbolic.size(); ++i) {
      out << "Theta_" << i + 1 << "(x^_3): expected " << rep.symbolic[i].expected << ", got "
          << rep.symbolic[i].actual << (rep.symbolic[i].ok ? "  ok" : "  MISMATCH") << "\n";
    }
    for (auto const& e : rep.extensions) {
      out << "(" << e.inner.to_string() << ") extends to (" << e.outer.to_string()
          << ") with index " << e.index << "\n";
    }
    if (!rep.cited_assumption.empty()) {
      out << rep.cited_assumption << "\n";
    }
    out << "all checks: " << (rep.ok ? "pass" : "FAIL") << "\n";
    return out.str();
  }

  inline Json to_json(CounterexampleAction const& a) {
    return {{"group", a.group},
            {"group_order", a.vector.group().order()},
            {"genus", a.genus},
            {"vector", to_json(a.vector)}};
  }

  inline Json to_json(DihedralCounterexample const& d) {
    Json actions = Json::array();
    for (std::size_t i = 0; i < d.actions.size(); ++i) {
      Json a = to_json(d.actions[i]);
      a["m"] = d.ms[i];
      actions.push_back(a);
    }
    Json pairs = Json::array();
    for (std::size_t i = 0; i < d.certificates.size(); ++i) {
      for (std::size_t j = 0; j < d.certificates[i].size(); ++j) {
        pairs.push_back({{"m", {d.ms[j], d.ms[i]}}, {"verdict", d.certificates[i][j]}});
      }
    }
    return {{"n", d.n},
            {"actions", actions},
            {"pairs", pairs},
            {"pairwise_non_isomorphic", d.pairwise_non_isomorphic}};
  }

  inline std::string to_table(DihedralCounterexample const& d) {
    std::ostringstream out;
    TextTable          t({"m", "group", "order", "genus", "vector"});
    for (std::size_t i = 0; i < d.actions.size(); ++i) {
      auto const& a = d.actions[i];
      t.add({std::to_string(d.ms[i]), a.group, std::to_string(a.vector.group().order()),
             std::to_string(a.genus), describe(a.vector)});
    }
    out << t.render() << "\n";
    TextTable p({"m", "m'", "comparison"});
    for (std::size_t i = 0; i < d.certificates.size(); ++i) {
      for (std::size_t j = 0; j < d.certificates[i].size(); ++j) {
        p.add({std::to_string(d.ms[j]), std::to_string(d.ms[i]), d.certificates[i][j]});
      }
    }
    out << p.render() << "\n"
        << "pairwise non-isomorphic: " << yes_no(d.pairwise_non_isomorphic) << "\n";
    return out.str();
  }

  inline Json extensions_json(Signature const& sig) {
    Json rules = Json::array();
    for (auto const& e : possible_extensions(sig)) {
      rules.push_back({{"inner", e.inner.to_string()},
                       {"outer", e.outer.to_string()},
                       {"index", e.index},
                       {"area_inner", to_string(normalized_area(e.inner))},
                       {"area_outer", to_string(normalized_area(e.outer))},
                       {"teichmueller_dimension", teich_dim(e.inner)}});
    }
    return {{"signature", sig.to_string()}, {"extensions", rules}};
  }

}  // namespace surfaut
