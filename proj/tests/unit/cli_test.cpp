#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = towerkit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Outcome& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, BuildExamples) {
  const auto d2 = invoke({"build", "simplex", "n=2"});
  ASSERT_EQ(d2.code, 0) << d2.err;
  EXPECT_EQ(json_of(d2)["f_vector"], (nlohmann::json{3, 3, 1}));
  EXPECT_TRUE(json_of(d2)["config"]["seedless"].get<bool>());

  const auto yk = invoke({"build", "Yk", "k=1", "p=1"});
  ASSERT_EQ(yk.code, 0) << yk.err;
  EXPECT_EQ(json_of(yk)["f_vector"], (nlohmann::json{4, 4}));

  const auto sq = invoke({"build", "join", "S0", "S0"});
  ASSERT_EQ(sq.code, 0) << sq.err;
  EXPECT_EQ(json_of(sq)["f_vector"], (nlohmann::json{4, 4}));
}

TEST(Cli, HomologyExamples) {
  auto betti = [](const Outcome& r, int degree) {
    const nlohmann::json j = json_of(r);
    for (const auto& g : j["homology"]["groups"])
      if (g["degree"] == degree) return g["betti"].get<int>();
    return -1;
  };
  const auto sk = invoke({"homology", "sk", "k=1", "of", "simplex", "n=3"});
  ASSERT_EQ(sk.code, 0) << sk.err;
  EXPECT_EQ(betti(sk, 1), 3);
  const auto pt = invoke({"homology", "point"});
  const nlohmann::json pj = json_of(pt);
  for (const auto& g : pj["homology"]["groups"]) EXPECT_EQ(g["betti"], 0);
  EXPECT_EQ(betti(invoke({"homology", "Yk", "k=1", "p=1"}), 1), 1);
  EXPECT_EQ(invoke({"--format", "csv", "homology", "Yk", "k=1", "p=1"}).out, "degree,betti,torsion\n-1,0,\n0,0,\n1,1,\n");
}

TEST(Cli, ReportsExitCodes) {
  EXPECT_EQ(invoke({"suite", "figures"}).code, 0);
  const auto cn = invoke({"cofinality", "cn", "n=2"});
  EXPECT_EQ(cn.code, 0) << cn.err;
  const auto tower = invoke({"tower", "F=identity", "X=S0", "k=0", "n=1..2", "bound=1"});
  EXPECT_EQ(tower.code, 0) << tower.err;
  EXPECT_EQ(json_of(tower)["tower"]["stages"].size(), 2u);
}

TEST(Cli, UsageAndParseErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"suite", "nope"}).code, 2);
  EXPECT_EQ(invoke({"--format", "xml", "build", "point"}).code, 2);
  const auto bad = invoke({"build", "simplex", "n=x"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find('^'), std::string::npos);
  EXPECT_EQ(invoke({"build", "torus"}).code, 2);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args{"homology", "join", "S1", "S0"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(Cli, FileInputAndOutputs) {
  const fs::path dir = fs::temp_directory_path() / "towerkit_cli_test";
  fs::create_directories(dir);
  const fs::path in = dir / "tri.json";
  std::ofstream(in) << R"({"vertices":["a","b","c"],"facets":[["a","b"],["b","c"],["a","c"]]})";
  const auto h = invoke({"homology", "@" + in.string()});
  ASSERT_EQ(h.code, 0) << h.err;
  EXPECT_EQ(json_of(h)["homology"]["groups"][2]["betti"], 1);

  const fs::path out = dir / "report";
  const auto t = invoke({"--out", out.string(), "cofinality", "cn", "n=1"});
  ASSERT_EQ(t.code, 0) << t.err;
  EXPECT_TRUE(fs::exists(out.string() + ".json"));
  EXPECT_TRUE(fs::exists(out.string() + ".csv"));
  fs::remove_all(dir);
}
