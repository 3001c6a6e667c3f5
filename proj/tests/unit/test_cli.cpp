#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "fock/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = fock::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, EssposRadialConstantIsPositive) {
  const auto r = run({"esspos", "--symbol", "radial:const:1", "--mode", "radial"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out).at("verdict"), "positive");
}

TEST(Cli, AssembleWeylZeroIsIdentity) {
  const auto r = run({"assemble", "--symbol", "weyl:0+0i", "--dim", "8"});
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j.at("dim"), 8);
  for (int k = 0; k < 64; ++k) {
    const double re = j.at("entries")[k][0], im = j.at("entries")[k][1];
    EXPECT_EQ(re, k % 9 == 0 ? 1.0 : 0.0);
    EXPECT_EQ(im, 0.0);
  }
}

TEST(Cli, CounterexampleSingleRow) {
  const auto r = run({"counterexample", "--t", "2", "--radii", "0"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string header, row, extra;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header, "absz,ess_exact,ess_numeric,berezin_sup,ratio");
  EXPECT_FALSE(std::getline(in, extra));
  EXPECT_NEAR(std::stod(row.substr(row.rfind(',') + 1)), 1.0, 1e-12);
}

TEST(Cli, ExitCodesAndJsonErrors) {
  auto r = run({"esspos", "--symbol", "radial:nope:1"});
  EXPECT_EQ(r.code, 1);
  auto e = json::parse(r.err);
  EXPECT_EQ(e.at("error"), "parse");
  EXPECT_TRUE(e.contains("position"));
  EXPECT_EQ(r.err.find('\n'), r.err.size() - 1);

  r = run({"nonsense"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NO_THROW(json::parse(r.err));

  r = run({"esspos", "--symbol", "radial:const:0", "--strict"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(json::parse(r.err).at("error"), "inconclusive");

  r = run({"esspos", "--symbol", "radial:const:0"});
  EXPECT_EQ(r.code, 0);

  r = run({"esspos", "--symbol", "weyl:1", "--mode", "limitops"});
  EXPECT_EQ(r.code, 1);

  r = run({"eigs", "--in", "/nonexistent.json"});
  EXPECT_EQ(r.code, 1);

  r = run({"berezin", "--symbol", "general:half:0", "--points", "0:1:2", "--method", "heat"});
  EXPECT_EQ(r.code, 2);  // the half-plane jump trips the heat-transform refinement check
  EXPECT_EQ(json::parse(r.err).at("error"), "numerical");
}

TEST(Cli, AssembleEigsPipelineAndManifestReplay) {
  const auto dir = std::filesystem::temp_directory_path() / "fockscope_cli_test";
  std::filesystem::create_directories(dir);
  const std::string mat = (dir / "m.json").string(), eig = (dir / "e.csv").string();

  ASSERT_EQ(run({"assemble", "--symbol", "radial:rat:5,1", "--dim", "12", "--out", mat}).code, 0);
  ASSERT_EQ(run({"eigs", "--in", mat, "--out", eig}).code, 0);
  const std::string csv = slurp(eig);
  EXPECT_EQ(csv.substr(0, 9), "m,lambda\n");

  const auto manifest = json::parse(slurp(eig + ".manifest.json"));
  EXPECT_EQ(manifest.at("command"), "eigs");
  EXPECT_EQ(manifest.at("config").at("quantity"), "eigenvalues");
  EXPECT_EQ(manifest.at("config_hash").get<std::string>().size(), 16u);
  EXPECT_TRUE(manifest.at("versions").contains("fockscope"));

  const std::string replayed = (dir / "e2.csv").string();
  ASSERT_EQ(run({"replay", "--manifest", eig + ".manifest.json", "--out", replayed}).code, 0);
  EXPECT_EQ(slurp(replayed), csv);
  std::filesystem::remove_all(dir);
}

TEST(Cli, SearchManifestRecordsSeedAndReplaysBitExactly) {
  const auto dir = std::filesystem::temp_directory_path() / "fockscope_cli_search";
  std::filesystem::create_directories(dir);
  const std::string a = (dir / "a.json").string(), b = (dir / "b.json").string();
  ASSERT_EQ(run({"search", "--rings", "3", "--iters", "15", "--seed", "9", "--tail", "0.5", "--dim", "64", "--out", a})
                .code,
            0);
  const auto manifest = json::parse(slurp(a + ".manifest.json"));
  EXPECT_EQ(manifest.at("seed"), 9);
  ASSERT_EQ(run({"replay", "--manifest", a + ".manifest.json", "--out", b}).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(json::parse(slurp(a)).at("history").size(), 16u);
  std::filesystem::remove_all(dir);
}

TEST(Cli, BerezinScanFromSymbolAndMatrixAgree) {
  const auto dir = std::filesystem::temp_directory_path() / "fockscope_cli_berezin";
  std::filesystem::create_directories(dir);
  const std::string mat = (dir / "m.json").string();
  ASSERT_EQ(run({"assemble", "--symbol", "radial:rat:5,1", "--dim", "80", "--out", mat}).code, 0);
  const auto s = run({"berezin", "--symbol", "radial:rat:5,1", "--points", "0:2:3"});
  const auto m = run({"berezin", "--in", mat, "--points", "0:2:3"});
  ASSERT_EQ(s.code, 0);
  ASSERT_EQ(m.code, 0);
  std::istringstream si(s.out), mi(m.out);
  std::string ls, lm;
  std::getline(si, ls);
  std::getline(mi, lm);
  EXPECT_EQ(ls, "s,re,im,tail_bound");
  int rows = 0;
  while (std::getline(si, ls) && std::getline(mi, lm)) {
    const double vs = std::stod(ls.substr(ls.find(',') + 1)), vm = std::stod(lm.substr(lm.find(',') + 1));
    EXPECT_NEAR(vs, vm, 1e-10);
    ++rows;
  }
  EXPECT_EQ(rows, 3);
  EXPECT_EQ(run({"berezin", "--points", "0:1:2"}).code, 1);
  std::filesystem::remove_all(dir);
}

TEST(Cli, SelftestPasses) {
  const auto r = run({"selftest"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }
