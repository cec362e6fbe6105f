// surfaut - stored reference counts.
//
// Each golden file holds one integer together with the name of the oracle
// that produced it.  A check recomputes the value twice, once with the
// oracle and once with the library's fast path, and compares both with the
// stored number.  Blessing writes the oracle's value.

#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "surfaut/error.hpp"
#include "surfaut/fuchsian.hpp"
#include "surfaut/genvec.hpp"
#include "surfaut/group.hpp"
#include "surfaut/oracles.hpp"

namespace surfaut {

  struct GoldenEntry {
    std::string                   name;
    std::string                   description;
    std::string                   oracle;
    std::function<std::int64_t()> compute_oracle;
    std::function<std::int64_t()> compute_library;
  };

  inline std::vector<GoldenEntry> const& golden_entries() {
    auto vectors = [](std::string group, std::string sig) {
      return GoldenEntry{
          "", "sorted-order (" + sig + ") vectors of " + group,
          "brute_force_vector_count: scan every position over elements of the period's order",
          [=] {
            return static_cast<std::int64_t>(
                oracle::brute_force_vector_count(build_group(group), Signature::parse(sig)));
          },
          [=] {
            return static_cast<std::int64_t>(
                enumerate_vectors(build_group(group), Signature::parse(sig)).size());
          }};
    };
    auto classes = [](std::string group, std::string sig) {
      return GoldenEntry{
          "", "topological classes of (" + sig + ") actions of " + group,
          "union_find_class_count: union-find over all vectors in every period order, joined by "
          "every automorphism and every forward braid move",
          [=] {
            return static_cast<std::int64_t>(
                oracle::union_find_class_count(build_group(group), Signature::parse(sig)));
          },
          [=] {
            return static_cast<std::int64_t>(
                orbit_classes(build_group(group), Signature::parse(sig)).size());
          }};
    };
    static std::vector<GoldenEntry> const entries = [&] {
      std::vector<std::pair<std::string, GoldenEntry>> named = {
          {"dih10_0_22222_vectors", vectors("dihedral:10", "0;2,2,2,2,2")},
          {"dih14_0_22222_vectors", vectors("dihedral:14", "0;2,2,2,2,2")},
          {"meta13_0_2244_vectors", vectors("metacyclic:13,4,5", "0;2,2,4,4")},
          {"dih18_0_22222_classes", classes("dihedral:18", "0;2,2,2,2,2")},
          {"meta5_0_2244_classes", classes("metacyclic:5,4,2", "0;2,2,4,4")},
      };
      std::vector<GoldenEntry> out;
      for (auto& [name, e] : named) {
        e.name = name;
        out.push_back(std::move(e));
      }
      return out;
    }();
    return entries;
  }

  struct GoldenResult {
    std::string                 name;
    std::optional<std::int64_t> stored;
    std::int64_t                oracle  = 0;
    std::int64_t                library = 0;
    bool                        ok      = false;
    std::string                 message;
  };

  inline std::optional<std::int64_t> read_golden(std::filesystem::path const& dir,
                                                 std::string const& name) {
    std::ifstream in(dir / (name + ".json"));
    if (!in) {
      return std::nullopt;
    }
    auto j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.contains("value") || !j["value"].is_number_integer()) {
      throw InvariantViolation("golden file " + name + ".json is malformed");
    }
    return j["value"].get<std::int64_t>();
  }

  inline void write_golden(std::filesystem::path const& dir, GoldenEntry const& e,
                           std::int64_t value) {
    std::filesystem::create_directories(dir);
    nlohmann::json j = {{"name", e.name},
                        {"description", e.description},
                        {"oracle", e.oracle},
                        {"value", value}};
    std::ofstream out(dir / (e.name + ".json"));
    out << j.dump(2) << "\n";
    if (!out) {
      throw Error("could not write golden file " + e.name + ".json");
    }
  }

  /// Recomputes every golden value; with bless = true, missing or drifted
  /// files are rewritten from the oracle first.
  inline std::vector<GoldenResult> check_goldens(std::filesystem::path const& dir,
                                                 bool bless = false) {
    std::vector<GoldenResult> out;
    for (auto const& e : golden_entries()) {
      GoldenResult r;
      r.name    = e.name;
      r.oracle  = e.compute_oracle();
      r.library = e.compute_library();
      if (bless) {
        write_golden(dir, e, r.oracle);
      }
      r.stored = read_golden(dir, e.name);
      if (!r.stored) {
        r.message = "missing (run with --bless)";
      } else if (*r.stored != r.oracle) {
        r.message = "oracle drifted from stored value";
      } else if (r.library != r.oracle) {
        r.message = "library disagrees with oracle";
      } else {
        r.ok      = true;
        r.message = "ok";
      }
      out.push_back(std::move(r));
    }
    return out;
  }

}  // namespace surfaut
