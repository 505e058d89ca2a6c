#include <gtest/gtest.h>
#include <openssl/evp.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "mcf/cli.hpp"
#include "mcf/constructions.hpp"
#include "mcf/pts_io.hpp"
#include "mcf/tables.hpp"

using namespace mcf;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = mcf::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sha256(const std::string& s) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(s.data(), s.size(), md, &len, EVP_sha256(), nullptr);
  std::string hex;
  char buf[3];
  for (unsigned i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch() {
  auto d = fs::temp_directory_path() / ("mcf_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST(PtsIo, RoundTrip) {
  Space sp(2, make_field(7));
  auto S = constructions::oval(sp).point_set;
  auto text = format_pts(sp, S);
  EXPECT_EQ(text.rfind("PG 2 7\n", 0), 0u);
  EXPECT_EQ(to_point_set(sp, parse_pts(text)), S);
  // non-normalized coordinates and comments are accepted
  auto f = parse_pts("# comment\nPG 2 5\n2,4,0\n 0, 0, 3 \n");
  auto T = to_point_set(Space(2, make_field(5)), f);
  EXPECT_EQ(T.size(), 2u);
}

TEST(PtsIo, Errors) {
  Space sp(2, make_field(5));
  EXPECT_THROW(parse_pts(""), std::invalid_argument);
  EXPECT_THROW(parse_pts("PG 2 5\n1,2\n"), std::invalid_argument);
  EXPECT_THROW(parse_pts("PG 2 5\n1,2,7\n"), std::invalid_argument);
  EXPECT_THROW(parse_pts("PG 2 5\n1,x,1\n"), std::invalid_argument);
  EXPECT_THROW(to_point_set(sp, parse_pts("PG 2 5\n0,0,0\n")), std::invalid_argument);
  EXPECT_THROW(to_point_set(sp, parse_pts("PG 2 5\n1,1,1\n2,2,2\n")), std::invalid_argument);
  EXPECT_THROW(to_point_set(sp, parse_pts("PG 3 5\n1,1,1,1\n")), std::invalid_argument);
  EXPECT_THROW(read_pts_file("/nonexistent/file.pts"), std::invalid_argument);
}

TEST(Cli, VersionAndHelp) {
  auto v = run_cli({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find(mcf::cli::kVersion), std::string::npos);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
  EXPECT_EQ(run_cli({"bounds", "--help"}).code, 0);
}

TEST(Cli, UsageErrorsExitTwo) {
  for (auto args : std::vector<std::vector<std::string>>{{},
                                                         {"frobnicate"},
                                                         {"bounds", "--q", "5"},
                                                         {"classify", "--q", "5", "--mu", "2", "--predicate", "maximal"},
                                                         {"construct", "nonsense", "--q", "5"}}) {
    auto r = run_cli(args);
    EXPECT_EQ(r.code, 2);
    auto j = json::parse(r.err);
    EXPECT_EQ(j["error"], "usage");
  }
  auto bad_q = run_cli({"bounds", "--q", "6", "--mu", "2"});
  EXPECT_EQ(bad_q.code, 2);
  EXPECT_EQ(json::parse(bad_q.err)["error"], "input");
  EXPECT_EQ(run_cli({"verify", "/nonexistent.pts", "--mu", "1"}).code, 2);
}

TEST(Cli, VerifyExitCodes) {
  auto dir = scratch();
  Space sp(2, make_field(5));
  auto path = (dir / "oval5.pts").string();
  write_pts_file(path, sp, constructions::oval(sp).point_set);
  auto ok = run_cli({"--json", "verify", path, "--mu", "2", "--radius"});
  EXPECT_EQ(ok.code, 0);
  auto j = json::parse(ok.out);
  EXPECT_EQ(j["mu"], 2);
  EXPECT_EQ(j["covering_radius"], 2);
  EXPECT_EQ(j["gamma"]["num"], 6);
  EXPECT_EQ(j["gamma"]["den"], 5);
  EXPECT_EQ(run_cli({"verify", path, "--mu", "3"}).code, 1);
  auto text = run_cli({"verify", path, "--mu", "2"});
  EXPECT_NE(text.out.find("gamma 6/5"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Cli, ConstructWritesVerifiedSet) {
  auto dir = scratch();
  auto path = (dir / "tri.pts").string();
  auto r = run_cli({"construct", "triangle", "--q", "4", "--out", path});
  EXPECT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_TRUE(j["verified"].get<bool>());
  EXPECT_EQ(j["report"]["mu"], 9);
  EXPECT_EQ(run_cli({"verify", path, "--mu", "9"}).code, 0);
  EXPECT_EQ(run_cli({"construct", "two_chords_config", "--q", "5"}).code, 1);
  fs::remove_all(dir);
}

TEST(Cli, SingerCheck) {
  auto r = run_cli({"--json", "singer", "--q", "7", "--t", "3", "--m", "1", "--check"});
  EXPECT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["evaluations"][0]["mu"], 18);
  EXPECT_TRUE(j["evaluations"][0]["agree"].get<bool>());
  auto t = run_cli({"singer", "--table", "three-weights", "--q-list", "7,13"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("q=13"), std::string::npos);
  EXPECT_EQ(run_cli({"singer", "--q", "7", "--t", "5"}).code, 2);
}

TEST(Cli, ClassifyOutputsRepresentatives) {
  auto dir = scratch();
  auto r = run_cli({"classify", "--q", "4", "--mu", "2", "--predicate", "minimal", "--out-dir", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["counts"]["6"], 2);
  EXPECT_EQ(j["counts"]["7"], 5);
  int files = 0;
  for (auto& e : fs::directory_iterator(dir)) {
    ++files;
    EXPECT_EQ(run_cli({"verify", e.path().string(), "--mu", "2"}).code, 0);
  }
  EXPECT_EQ(files, 7);
  fs::remove_all(dir);
}

TEST(Cli, ClassifyResume) {
  auto dir = scratch();
  auto ck = (dir / "ck.json").string();
  auto a = run_cli({"classify", "--q", "4", "--mu", "2", "--checkpoint", ck, "--time-budget", "0"});
  EXPECT_EQ(a.code, 0);
  EXPECT_FALSE(json::parse(a.out)["complete"].get<bool>());
  json last;
  for (int i = 0; i < 20; ++i) {
    auto b = run_cli({"classify", "--q", "4", "--mu", "2", "--resume", ck, "--time-budget", "0"});
    last = json::parse(b.out);
    if (last["complete"].get<bool>()) break;
  }
  EXPECT_TRUE(last["complete"].get<bool>());
  EXPECT_EQ(last["counts"]["7"], 5);
  fs::remove_all(dir);
}

TEST(Cli, BoundsJson) {
  auto r = run_cli({"bounds", "--q", "5", "--mu", "3", "--r", "2", "--s", "4"});
  EXPECT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["mu_max"], 60);
  EXPECT_EQ(j["secant_lower"].size(), 1u);
}

TEST(Cli, TablesAndDiff) {
  auto r = run_cli({"tables", "--which", "three-weights", "--q-list", "7,13,19"});
  EXPECT_EQ(r.code, 0) << r.out;
  auto s = run_cli({"tables", "--which", "spectrum12", "--q-list", "3,4"});
  EXPECT_EQ(s.code, 0) << s.out;
  auto d = tables::unified_diff("a\nb\n", "a\nc\n", "x", "y");
  EXPECT_NE(d.find("-b"), std::string::npos);
  EXPECT_NE(d.find("+c"), std::string::npos);
  EXPECT_TRUE(tables::unified_diff("a\n", "a\n", "x", "y").empty());
}

TEST(Cli, ManifestDigests) {
  auto dir = scratch();
  auto man = (dir / "m.json").string();
  auto pts = (dir / "o.pts").string();
  auto r = run_cli({"--manifest", man, "--seed", "9", "construct", "oval", "--q", "7", "--out", pts});
  ASSERT_EQ(r.code, 0);
  auto m = json::parse(slurp(man));
  EXPECT_EQ(m["subcommand"], "construct");
  EXPECT_EQ(m["seed"], 9);
  EXPECT_EQ(m["tool_version"], mcf::cli::kVersion);
  EXPECT_EQ(m["digests"]["stdout"], sha256(r.out));
  EXPECT_EQ(m["digests"]["files"][pts], sha256(slurp(pts)));
  EXPECT_NE(m["field"].get<std::string>().find("GF(7"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Cli, BinaryExitCodes) {
  EXPECT_EQ(std::system((std::string(MCF_CLI_PATH) + " --version > /dev/null").c_str()), 0);
  int rc = std::system((std::string(MCF_CLI_PATH) + " bounds --q 4 2> /dev/null").c_str());
  EXPECT_EQ(WEXITSTATUS(rc), 2);
}
