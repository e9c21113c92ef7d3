#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"

using cellcrystal::cli::json;
using cellcrystal::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args) {
  const auto r = invoke(std::move(args));
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("hbasis") {
  const auto j = invoke_json({"hbasis", "--type", "G2"});
  CHECK(j["word"] == json({1, 2, 1, 2, 1, 2}));
  CHECK(j["basis"] == json({{1, 3, 2, 3, 1, 0}, {0, 1, 1, 2, 1, 1}}));
  CHECK(invoke_json({"hbasis", "--type", "A2", "--word", "2,1,2"})["basis"] == json({{1, 1, 0}, {0, 1, 1}}));
  CHECK(invoke({"hbasis", "--type", "A2", "--word", "1,2"}).code == 2);
  CHECK(invoke({"hbasis", "--type", "Q7"}).code == 2);
}

TEST_CASE("act traces every step") {
  const auto j = invoke_json({"act", "--type", "A2", "--word", "121", "--ops", "f1 f2^2 f1"});
  CHECK(j["result"]["coords"] == json({1, 2, 1}));
  REQUIRE(j["steps"].size() == 5);
  CHECK(j["steps"][0]["op"].is_null());
  CHECK(j["steps"][1]["op"] == "f1");
  CHECK(j["steps"][4]["coords"] == json({1, 2, 1}));
  // wt = -2α1 - 2α2 = (-2,-2) in Λ-coordinates.
  CHECK(j["steps"][4]["wt"] == json({-2, -2}));
  CHECK(j["steps"][0]["epsilon"] == json({0, 0}));

  const auto e = invoke_json({"act", "--type", "A2", "--element", "0,1,0", "--ops", "e1"});
  CHECK(e["result"]["coords"] == json({-1, 1, 0}));
  CHECK(invoke({"act", "--type", "A2", "--ops", "f7"}).code == 2);
  CHECK(invoke({"act", "--type", "A2", "--ops", "g1"}).code == 2);
}

TEST_CASE("braid and element JSON") {
  const auto j = invoke_json({"braid", "--type", "G2", "--element",
                              R"({"type":"G2","word":[1,2,1,2,1,2],"coords":[1,3,2,3,1,0]})", "--target",
                              "2,1,2,1,2,1"});
  CHECK(j["image"] == json{{"type", "G2"}, {"word", {2, 1, 2, 1, 2, 1}}, {"coords", {0, 1, 3, 2, 3, 1}}});
  CHECK(j["path"].size() == 1);
  CHECK(invoke({"braid", "--type", "A2", "--element", R"({"type":"B2","coords":[0,0,0]})", "--target", "212"}).code ==
        2);
  CHECK(invoke({"braid", "--type", "A2", "--element", "1,2", "--target", "212"}).code == 2);
  CHECK(invoke({"braid", "--type", "A2", "--target", "1,2"}).code == 2);
}

TEST_CASE("binf and decompose") {
  const auto j = invoke_json({"binf", "--type", "A2", "--height", "2"});
  CHECK(j["size"] == 7);
  CHECK(j["layers"][2]["elements"] == json({{0, 0, 2}, {0, 1, 1}, {0, 2, 0}, {1, 1, 0}}));
  std::size_t total = 0;
  for (const auto& m : j["multiplicities"]) total += m["count"].get<std::size_t>();
  CHECK(total == 7);

  const auto d = invoke_json({"decompose", "--type", "A2", "--element", "0,0,-1"});
  CHECK(d["c"] == json({-1, 0}));
  CHECK(d["b"] == json({0, 1, 0}));
  // A tiny starting table is regrown on demand.
  const auto big = invoke_json({"decompose", "--type", "B2", "--element", "1,1,-1,1", "--height", "1"});
  CHECK(big["c"] == json({1, -3}));
  CHECK(invoke({"decompose", "--type", "A2"}).code == 2);
}

TEST_CASE("loc") {
  auto j = invoke_json({"loc", "ominus", "--type", "A2", "--element", "0,0,1"});
  CHECK(j["element"]["coords"] == json({0, 0, -1}));
  CHECK(j["c"] == json({-1, 0}));
  CHECK(j["b"] == json({0, 1, 0}));
  j = invoke_json({"loc", "ominus", "--type", "A2", "--word", "212", "--element", "0,1,0"});
  CHECK(j["c"] == json({0, -1}));
  CHECK(j["b"] == json({0, 0, 1}));
  // h_2 = (1,1,0): ε_i(h_{Λ_2}) = δ_{i,2*} and 2* = 1.
  j = invoke_json({"loc", "eps", "--type", "A2", "--element", "1,1,0"});
  CHECK(j["epsilon"] == json({1, 0}));
  CHECK(j["c"] == json({0, 1}));
  j = invoke_json({"loc", "act", "--type", "A2", "--element", "0,1,0", "--ops", "e1"});
  CHECK(j["element"]["coords"] == json({-1, 1, 0}));
  j = invoke_json({"loc", "oplus", "--type", "A2", "--element", "0,1,0", "--other", "1,0,0"});
  CHECK(j["element"]["coords"] == json({1, 1, 0}));
  CHECK(invoke({"loc", "frobnicate", "--type", "A2", "--element", "0,0,0"}).code == 2);
  CHECK(invoke({"loc", "--type", "A2", "--element", "0,0,0"}).code == 2);
}

TEST_CASE("graph of the first B(∞) layers") {
  const auto r = invoke({"graph", "--type", "A2", "--word", "1,2,1", "--height", "2"});
  REQUIRE(r.code == 0);
  std::size_t nodes = 0, edges = 0;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) {
    if (line.find("->") != std::string::npos) ++edges;
    else if (line.rfind("  \"(", 0) == 0) ++nodes;
  }
  CHECK(nodes == 7);
  CHECK(edges == 6);
  CHECK(r.out.find("color=\"red\"") != std::string::npos);
  CHECK(r.out.find("color=\"blue\"") != std::string::npos);

  const auto box = invoke({"graph", "--type", "A2", "--radius", "1"});
  CHECK(box.code == 0);
  CHECK(box.out.find("\"(-1,-1,-1)\"") != std::string::npos);
}

TEST_CASE("verify") {
  for (const auto& suite : cellcrystal::cli::suite_names()) {
    CAPTURE(suite);
    const auto r = invoke({"verify", "--type", "A2", "--suite", suite, "--samples", "50"});
    CHECK_MESSAGE(r.code == 0, r.err);
    CHECK(json::parse(r.out)["passed"] == true);
  }
  const auto cov = invoke_json({"verify", "--type", "A2", "--suite", "coverage", "--radius", "1"});
  CHECK(cov["cases"] == 27);
  CHECK(cov["decomposed"] == 27);
  CHECK(invoke_json({"verify", "--type", "G2", "--suite", "h-reversal"})["passed"] == true);

  const auto bad = invoke({"verify", "--type", "A2", "--suite", "no-such-suite"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("unknown suite") != std::string::npos);
  CHECK(invoke({"verify", "--type", "A2", "--suite", "axioms", "--samples", "x"}).code == 2);
  CHECK(invoke({}).code == 2);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"verify", "--type", "B2", "--suite", "categorical-e", "--seed", "7"};
  CHECK(invoke(args).out == invoke(args).out);
  const std::vector<std::string> other{"verify", "--type", "B2", "--suite", "categorical-e", "--seed", "8"};
  CHECK(invoke(args).out != invoke(other).out);
  const std::vector<std::string> binf{"binf", "--type", "G2", "--height", "5"};
  CHECK(invoke(binf).out == invoke(binf).out);
}

TEST_CASE("config file and --out") {
  const auto dir = std::filesystem::temp_directory_path() / "cellcrystal_cli_test";
  std::filesystem::create_directories(dir);
  const auto cfg = dir / "job.json";
  const auto out = dir / "out.json";
  {
    std::ofstream f(cfg);
    f << R"({"type": "A2", "word": [2,1,2], "element": [0,-1,0]})";
  }
  const auto r = invoke({"decompose", "--config", cfg.string(), "--out", out.string()});
  REQUIRE_MESSAGE(r.code == 0, r.err);
  CHECK(r.out.empty());
  std::ifstream in(out);
  const json j = json::parse(in);
  CHECK(j["c"] == json({0, -1}));
  CHECK(j["b"] == json({0, 0, 1}));

  // Flags override the file.
  const auto j2 = invoke_json({"decompose", "--config", cfg.string(), "--word", "121", "--element", "0,0,-1"});
  CHECK(j2["c"] == json({-1, 0}));

  {
    std::ofstream f(cfg);
    f << R"({"type": "A2", "colour": "red"})";
  }
  CHECK(invoke({"hbasis", "--config", cfg.string()}).code == 2);
  CHECK(invoke({"hbasis", "--config", (dir / "missing.json").string()}).code == 2);
  std::filesystem::remove_all(dir);
}
