#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace lamcoord::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const char* kTauN23 = R"({"n":3,"k":2,"alpha":[4,2,2,6],"beta":[2,6,8,4],"gamma":[8],"c":[1,1]})";
const char* kRhoN22 = R"({"n":2,"k":2,"a":[-1],"b":[2,0],"t":[1],"c":[1,0]})";

TEST(Cli, EncodeN23) {
  const Result r = run_cli({"encode"}, kTauN23);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(Json::parse(r.out), Json::parse(R"({"n":3,"k":2,"a":[-1,2],"b":[-2,-1,2],"t":[0],"c":[1,1]})"));
}

TEST(Cli, DecodeN22Verbose) {
  const Result r = run_cli({"decode", "--verbose"}, kRhoN22);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["alpha"], Json::parse("[4,2]"));
  EXPECT_EQ(j["beta"], Json::parse("[6,2,2]"));
  EXPECT_EQ(j["gamma"], Json::parse("[4]"));
  EXPECT_EQ(j["intermediates"]["X"], 6);
  EXPECT_EQ(j["intermediates"]["Y"], 6);
  EXPECT_EQ(j["intermediates"]["R"], 0);
  EXPECT_FALSE(run_cli({"decode"}, kRhoN22).out.find("intermediates") != std::string::npos);
}

TEST(Cli, DecodeRComponentVerbose) {
  const Result r = run_cli({"decode", "--verbose"}, R"({"n":5,"k":1,"a":[0,0,0,0],"b":[0,0,0,0],"t":[],"c":[1]})");
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["intermediates"]["R"], 1);
  EXPECT_TRUE(j["intermediates"]["Y"].is_null());
  EXPECT_EQ(j["intermediates"]["beta_star"].back(), 0);
}

TEST(Cli, PipeFidelity) {
  const Result d = run_cli({"decode"}, kRhoN22);
  ASSERT_EQ(d.code, kExitOk);
  const Result e = run_cli({"encode"}, d.out);
  ASSERT_EQ(e.code, kExitOk);
  EXPECT_EQ(Json::parse(e.out), Json::parse(kRhoN22));
  const Result e1 = run_cli({"encode"}, kTauN23);
  EXPECT_EQ(Json::parse(run_cli({"decode"}, e1.out).out), Json::parse(kTauN23));
}

TEST(Cli, ParseErrors) {
  EXPECT_EQ(run_cli({"encode"}, "{not json").code, kExitParse);
  EXPECT_EQ(run_cli({"encode"}, R"({"n":2,"k":2,"alpha":[4,2],"beta":[6,2,2],"gamma":[4],"c":[1,0],"x":0})").code,
            kExitParse);
  EXPECT_EQ(run_cli({"encode"}, R"({"n":2,"k":2,"alpha":[4,2],"beta":[6,2,2],"gamma":[4]})").code, kExitParse);
  EXPECT_EQ(run_cli({"encode"}, R"({"n":2,"k":2,"alpha":[4,2.5],"beta":[6,2,2],"gamma":[4],"c":[1,0]})").code,
            kExitParse);
  EXPECT_EQ(run_cli({"encode"}, "[1,2]").code, kExitParse);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitParse);
  EXPECT_EQ(run_cli({}).code, kExitParse);
  EXPECT_EQ(run_cli({"encode", "--input", "/nonexistent/file.json"}).code, kExitParse);
}

TEST(Cli, DomainErrors) {
  const Result odd = run_cli({"encode"}, R"({"n":2,"k":2,"alpha":[4,2],"beta":[5,2,2],"gamma":[4],"c":[1,0]})");
  EXPECT_EQ(odd.code, kExitDomain);
  EXPECT_NE(odd.err.find("beta-parity"), std::string::npos);
  EXPECT_EQ(run_cli({"decode"}, R"({"n":2,"k":2,"a":[0],"b":[0,0],"t":[0],"c":[0,0]})").code, kExitDomain);
  EXPECT_EQ(run_cli({"decode"}, R"({"n":2,"k":2,"a":[0,1],"b":[0,0],"t":[0],"c":[0,0]})").code, kExitDomain);
  EXPECT_EQ(run_cli({"decode"}, R"({"n":1,"k":1,"a":[],"b":[],"t":[],"c":[1]})").code, kExitDomain);
  EXPECT_EQ(run_cli({"decode"}, R"({"n":2,"k":2,"a":[0],"b":[0,0],"t":[1],"c":[0,0]})").code, kExitDomain);
  EXPECT_EQ(run_cli({"decode"}, R"({"n":2,"k":2,"a":[0],"b":[0,0],"t":[0],"c":[281474976710657,0]})").code,
            kExitDomain);
  EXPECT_EQ(run_cli({"decode"}, R"({"n":2,"k":2,"a":[0],"b":[0,0],"t":[0],"c":[100000000000000000000000,0]})").code,
            kExitDomain);
}

TEST(Cli, Validate) {
  const Result ok = run_cli({"validate", "--format", "json"}, kTauN23);
  EXPECT_EQ(ok.code, kExitOk);
  EXPECT_TRUE(Json::parse(ok.out)["valid"].get<bool>());
  const Result bad =
      run_cli({"validate", "--format", "json"}, R"({"n":2,"k":2,"alpha":[4,2],"beta":[5,2,2],"gamma":[4],"c":[1,0]})");
  EXPECT_EQ(bad.code, kExitDomain);
  EXPECT_EQ(Json::parse(bad.out)["violations"][0]["code"], "beta-parity");
}

TEST(Cli, TraceN22) {
  const Result tau = run_cli({"decode"}, kRhoN22);
  const Result r = run_cli({"trace", "--format", "json"}, tau.out);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["count"].get<std::size_t>(), j["components"].size());
  EXPECT_GE(j["count"].get<int>(), 1);
  const Result text = run_cli({"trace"}, tau.out);
  EXPECT_NE(text.out.find("component"), std::string::npos);
}

TEST(Cli, RenderToFileIsDeterministic) {
  const std::string path = ::testing::TempDir() + "lamcoord_cli_render.svg";
  ASSERT_EQ(run_cli({"render", "--out", path}, kTauN23).code, kExitOk);
  std::ifstream f(path);
  const std::string first((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  EXPECT_NE(first.find("<svg"), std::string::npos);
  const Result again = run_cli({"render"}, kTauN23);
  EXPECT_EQ(again.out, first);
  std::remove(path.c_str());
}

TEST(Cli, Selftest) {
  const Result r = run_cli({"selftest", "--n", "2", "--k", "2", "--radius", "2", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["box_tuples"], 15624);
  EXPECT_EQ(j["failures"], 0);
  EXPECT_EQ(run_cli({"selftest", "--n", "1", "--k", "1"}).code, kExitDomain);
}

} // namespace
} // namespace lamcoord::cli
