#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "cli.hpp"

namespace {

  struct Run {
    int         code = 0;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "surfaut");
    std::vector<char const*> argv;
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = surfaut::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
  }

}  // namespace

TEST_CASE("classify command") {
  auto r = run({"classify", "--genus", "12", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["strata"].size() == 1);
  CHECK(j["strata"][0]["group"] == "dihedral:22");
  CHECK(j["strata"][0]["class_count"] == 1);
  CHECK(j["theorem1_consistent"] == true);

  auto t = run({"classify", "--genus", "14"});
  CHECK(t.code == 0);
  CHECK(t.out.find("metacyclic:13,4,5") != std::string::npos);

  auto bad = run({"classify", "--genus", "11"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("counterexample") != std::string::npos);
}

TEST_CASE("JSON output is byte-identical across runs and worker counts") {
  auto a = run({"classify", "--genus", "14", "--format", "json"});
  auto b = run({"classify", "--genus", "14", "--format", "json", "--workers", "4"});
  auto c = run({"classify", "--genus", "14", "--format", "json"});
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  auto d = run({"jacobian", "--family", "F1", "--q", "13", "--format", "json"});
  auto e = run({"jacobian", "--family", "F1", "--q", "13", "--format", "json"});
  CHECK(d.out == e.out);
}

TEST_CASE("jacobian command") {
  auto r = run({"jacobian", "--family", "F2", "--q", "11", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["residual"] == 0);
  CHECK(j["admissible"] == true);

  CHECK(run({"jacobian", "--family", "F1", "--q", "13"}).code == 0);
  auto bad = run({"jacobian", "--family", "F1", "--q", "11"});
  CHECK(bad.code == 1);
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("boundary, counterexample and extensions commands") {
  auto b = run({"boundary", "--q", "17", "--case", "ord8", "--format", "json"});
  REQUIRE(b.code == 0);
  auto j = nlohmann::json::parse(b.out);
  CHECK(j["witnesses"].size() == 2);
  CHECK(j["witnesses"][0]["index"] == 2);

  CHECK(run({"boundary", "--q", "11", "--case", "ord8"}).code == 1);
  CHECK(run({"boundary", "--q", "17", "--case", "ord7"}).code == 1);

  auto q8 = run({"counterexample", "--kind", "q8", "--n", "5", "--format", "json"});
  REQUIRE(q8.code == 0);
  CHECK(nlohmann::json::parse(q8.out)["genus"] == 11);
  CHECK(run({"counterexample", "--kind", "q8", "--n", "4"}).code == 1);

  auto d2 = run({"counterexample", "--kind", "dihedral2", "--n", "3", "--format", "json"});
  auto dj = nlohmann::json::parse(d2.out);
  CHECK(dj["actions"].size() == 4);
  for (auto const& a : dj["actions"]) {
    CHECK(a["genus"] == 9);
  }

  auto e = run({"extensions", "--signature", "0;2,2,4,4", "--format", "json"});
  REQUIRE(e.code == 0);
  auto ej = nlohmann::json::parse(e.out);
  REQUIRE(ej["extensions"].size() == 1);
  CHECK(ej["extensions"][0]["index"] == 2);
}

TEST_CASE("strata command") {
  auto r = run({"strata", "--group", "dihedral:22", "--signature", "0;2,2,2,2,2", "--format",
                "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["class_count"] == 1);
  CHECK(j["vector_count"] == 52800);
}

TEST_CASE("usage errors and budget exhaustion map to exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"classify"}).code == 1);
  CHECK(run({"classify", "--genus", "12", "--format", "xml"}).code == 1);
  CHECK(run({"strata", "--group", "dihedral:22", "--signature", "0;2,2,"}).code == 1);
  CHECK(run({"--help"}).code == 0);
  auto big = run({"strata", "--group", "dihedral:300", "--signature", "0;2,2,2,2,2,2,2"});
  CHECK(big.code == 2);
}
