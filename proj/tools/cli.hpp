// Command-line front end for surfaut.  run_cli is kept separate from main
// so the acceptance binary can drive the exact same code path.

#pragma once

#include <iostream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "surfaut/surfaut.hpp"

#ifndef SURFAUT_GOLDEN_DIR
#define SURFAUT_GOLDEN_DIR "golden"
#endif

namespace surfaut::cli {

  enum ExitCode : int { kOk = 0, kUsage = 1, kBudget = 2, kInvariant = 3 };

  struct RunConfig {
    std::string  command;
    std::int64_t genus = 0;
    std::int64_t q     = 0;
    std::int64_t n     = 0;
    std::string  family;
    std::string  group;
    std::string  signature;
    std::string  boundary_case;
    std::string  kind;
    std::string  format  = "table";
    unsigned     workers = 1;
    std::string  golden_dir = SURFAUT_GOLDEN_DIR;
    bool         bless      = false;
  };

  namespace detail {

    inline int emit(RunConfig const& cfg, std::ostream& out, Json const& json,
                    std::string const& table, bool ok) {
      if (cfg.format == "json") {
        out << json.dump(2) << "\n";
      } else {
        out << table;
      }
      return ok ? kOk : kInvariant;
    }

    inline int cmd_classify(RunConfig const& cfg, std::ostream& out) {
      auto rep = classify_genus(cfg.genus, {cfg.workers, kDefaultSearchBudget});
      return emit(cfg, out, to_json(rep), to_table(rep), rep.theorem1_consistent);
    }

    inline int cmd_strata(RunConfig const& cfg, std::ostream& out) {
      auto G   = build_group(cfg.group);
      auto sig = Signature::parse(cfg.signature);
      Json j   = {{"group", G.description()}, {"signature", sig.to_string()}};
      std::ostringstream text;
      text << "group " << G.description() << " (order " << G.order() << "), signature ("
           << sig.to_string() << ")";
      if (sig.genus() == 0) {
        auto classes      = orbit_classes(G, sig, {cfg.workers, kDefaultSearchBudget});
        Json list         = Json::array();
        TextTable t({"class", "representative", "orbit size", "sorted-order members"});
        std::size_t total = classes.empty() ? 0 : classes.front().total_vectors;
        for (std::size_t k = 0; k < classes.size(); ++k) {
          auto const& c = classes[k];
          list.push_back({{"representative", c.representative.elliptic_labels()},
                          {"orbit_size", c.orbit_size},
                          {"member_count", c.member_count}});
          t.add({std::to_string(k + 1), describe(c.representative), std::to_string(c.orbit_size),
                 std::to_string(c.member_count)});
        }
        j["vector_count"] = total;
        j["class_count"]  = classes.size();
        j["classes"]      = list;
        text << "\nvectors: " << total << ", classes: " << classes.size() << "\n\n";
        if (!classes.empty()) {
          text << t.render();
        }
      } else {
        auto vecs         = enumerate_vectors(G, sig, {cfg.workers, kDefaultSearchBudget});
        j["vector_count"] = vecs.size();
        j["class_count"]  = nullptr;
        text << "\nvectors: " << vecs.size()
             << " (classes are only computed for orbit genus 0)\n";
      }
      return emit(cfg, out, j, text.str(), true);
    }

    inline int cmd_jacobian(RunConfig const& cfg, std::ostream& out) {
      auto rep = decomposition_report(parse_family(cfg.family), cfg.q);
      return emit(cfg, out, to_json(rep), to_table(rep), rep.residual == 0 && rep.admissible);
    }

    inline int cmd_boundary(RunConfig const& cfg, std::ostream& out) {
      auto rep = boundary_analysis(cfg.q, parse_boundary_case(cfg.boundary_case));
      return emit(cfg, out, to_json(rep), to_table(rep), rep.ok);
    }

    inline int cmd_counterexample(RunConfig const& cfg, std::ostream& out) {
      if (cfg.kind == "q8") {
        auto a = counterexample_q8(cfg.n);
        std::ostringstream text;
        text << "group " << a.group << " (order " << a.vector.group().order() << ")\n"
             << "signature (" << a.vector.signature().to_string() << "), vector "
             << describe(a.vector) << "\n"
             << "genus " << a.genus << ", |G| = 4g - 4: "
             << yes_no(static_cast<std::int64_t>(a.vector.group().order()) == 4 * a.genus - 4)
             << "\n";
        return emit(cfg, out, to_json(a), text.str(), true);
      }
      if (cfg.kind == "dihedral2") {
        auto d = counterexample_dihedral2(cfg.n);
        return emit(cfg, out, to_json(d), to_table(d), d.pairwise_non_isomorphic);
      }
      throw InvalidArgument("unknown counterexample kind '" + cfg.kind
                            + "' (expected q8 or dihedral2)");
    }

    inline int cmd_extensions(RunConfig const& cfg, std::ostream& out) {
      auto sig = Signature::parse(cfg.signature);
      auto j   = extensions_json(sig);
      std::ostringstream text;
      text << "signature (" << sig.to_string() << "), area " << to_string(normalized_area(sig))
           << ", Teichmueller dimension " << teich_dim(sig) << "\n";
      auto rules = possible_extensions(sig);
      if (rules.empty()) {
        text << "no dimension-preserving extension in the inclusion table\n";
      }
      for (auto const& e : rules) {
        text << "  (" << e.inner.to_string() << ") < (" << e.outer.to_string() << "), index "
             << e.index << "\n";
      }
      return emit(cfg, out, j, text.str(), true);
    }

    inline int cmd_selftest(RunConfig const& cfg, std::ostream& out) {
      auto results = run_selftest(cfg.golden_dir, cfg.bless, cfg.workers);
      bool ok      = true;
      Json checks  = Json::array();
      TextTable t({"check", "result", "detail"});
      for (auto const& r : results) {
        ok = ok && r.ok;
        checks.push_back({{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
        t.add({r.name, r.ok ? "pass" : "FAIL", r.detail});
      }
      return emit(cfg, out, Json{{"checks", checks}, {"ok", ok}},
                  t.render() + (ok ? "all checks pass\n" : "some checks FAILED\n"), ok);
    }

  }  // namespace detail

  inline int run_cli(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App  app{"Riemann surfaces of genus g with 4g - 4 automorphisms (g - 1 prime)", "surfaut"};
    app.require_subcommand(1);

    auto format = [&](CLI::App* sub) {
      sub->add_option("--format", cfg.format, "output format")
          ->check(CLI::IsMember({"table", "json"}));
    };
    auto workers = [&](CLI::App* sub) {
      sub->add_option("--workers", cfg.workers, "worker threads")->check(CLI::Range(1u, 256u));
    };

    auto* classify = app.add_subcommand("classify", "classify actions of order 4g - 4");
    classify->add_option("--genus", cfg.genus, "genus g, with g - 1 prime")->required();
    format(classify);
    workers(classify);

    auto* strata = app.add_subcommand("strata", "topological classes for one group and signature");
    strata->add_option("--group", cfg.group, "group spec, e.g. dihedral:22")->required();
    strata->add_option("--signature", cfg.signature, "signature, e.g. \"0;2,2,4,4\"")->required();
    format(strata);
    workers(strata);

    auto* jacobian = app.add_subcommand("jacobian", "isogeny decomposition for a family");
    jacobian->add_option("--family", cfg.family, "F1 or F2")->required();
    jacobian->add_option("--q", cfg.q, "the prime g - 1")->required();
    format(jacobian);

    auto* boundary = app.add_subcommand("boundary", "boundary surfaces and restricted actions");
    boundary->add_option("--q", cfg.q, "the prime g - 1")->required();
    boundary->add_option("--case", cfg.boundary_case, "ord8 or ord6")->required();
    format(boundary);

    auto* counter = app.add_subcommand("counterexample", "composite g - 1 constructions");
    counter->add_option("--kind", cfg.kind, "q8 or dihedral2")->required();
    counter->add_option("--n", cfg.n, "family parameter")->required();
    format(counter);

    auto* extensions = app.add_subcommand("extensions", "dimension-preserving inclusions");
    extensions->add_option("--signature", cfg.signature, "signature, e.g. \"0;2,2,4,4\"")
        ->required();
    format(extensions);

    auto* selftest = app.add_subcommand("selftest", "invariant suite and golden values");
    selftest->add_option("--golden-dir", cfg.golden_dir, "golden file directory");
    selftest->add_flag("--bless", cfg.bless, "rewrite golden files from their oracles");
    format(selftest);
    workers(selftest);

    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? kOk : kUsage;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
      if (cfg.command == "classify") {
        return detail::cmd_classify(cfg, out);
      }
      if (cfg.command == "strata") {
        return detail::cmd_strata(cfg, out);
      }
      if (cfg.command == "jacobian") {
        return detail::cmd_jacobian(cfg, out);
      }
      if (cfg.command == "boundary") {
        return detail::cmd_boundary(cfg, out);
      }
      if (cfg.command == "counterexample") {
        return detail::cmd_counterexample(cfg, out);
      }
      if (cfg.command == "extensions") {
        return detail::cmd_extensions(cfg, out);
      }
      return detail::cmd_selftest(cfg, out);
    } catch (InvalidArgument const& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    } catch (BudgetExceeded const& e) {
      err << "computation budget exceeded: " << e.what() << "\n";
      return kBudget;
    } catch (InvariantViolation const& e) {
      err << "invariant violated: " << e.what() << "\n";
      return kInvariant;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    }
  }

}  // namespace surfaut::cli
