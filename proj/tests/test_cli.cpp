#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "symcubic/cli.hpp"
#include "symcubic/io.hpp"

using namespace symcubic;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json result_of(const std::vector<std::string>& args) {
  const Outcome o = call(args);
  EXPECT_EQ(o.code, 0) << o.err;
  return Json::parse(o.out).at("result");
}

std::string data(const std::string& name) { return std::string(SYMCUBIC_TEST_DATA) + "/" + name; }

}  // namespace

TEST(Cli, AnalyzeOrderTwo) {
  const Outcome o = call({"analyze", "--order", "2", "--weights", "0,0,0,0,0,1", "--lambda", "0", "--seed", "42", "--json"});
  ASSERT_EQ(o.code, 0) << o.err;
  const Json report = Json::parse(o.out);
  EXPECT_EQ(report.at("schema"), kReportSchema);
  EXPECT_EQ(report.at("config").at("seed"), 42);
  const Json& r = report.at("result");
  EXPECT_EQ(r.at("n"), 14);
  EXPECT_EQ(r.at("zeta"), "-1");
  EXPECT_EQ(r.at("domain"), "TypeIV(14)");
  EXPECT_EQ(r.at("bb"), true);
  for (const auto& t : r.at("member").at("terms")) EXPECT_NE(t.at("coef").get<std::string>().find('/'), std::string::npos);
}

TEST(Cli, AnalyzeOrderEleven) {
  const Json r = result_of({"analyze", "--order", "11", "--weights", "0,1,3,4,5,9", "--lambda", "0", "--json"});
  EXPECT_EQ(r.at("n"), 0);
  EXPECT_EQ(r.at("domain"), "Point");
}

TEST(Cli, ByteStableReports) {
  const std::vector<std::string> args = {"analyze", "--order", "3", "--weights", "0,0,0,1,1,2", "--seed", "9", "--json"};
  EXPECT_EQ(call(args).out, call(args).out);
}

TEST(Cli, InvalidInputExitsTwo) {
  EXPECT_EQ(call({"analyze", "--order", "2", "--weights", "0,0,1"}).code, kExitInvalid);
  EXPECT_EQ(call({"analyze", "--order", "2", "--weights", "a,b,c,d,e,f"}).code, kExitInvalid);
  EXPECT_EQ(call({"analyze", "--order", "0", "--weights", "0,0,0,0,0,1"}).code, kExitInvalid);
  EXPECT_EQ(call({"analyze", "--order", "2", "--weights", "0,0,0,0,0,1", "--modulus", "10"}).code, kExitInvalid);
  EXPECT_EQ(call({"smooth", "--poly", data("missing.json")}).code, kExitInvalid);
  EXPECT_EQ(call({"frobnicate"}).code, kExitInvalid);
  EXPECT_EQ(call({}).code, kExitInvalid);
  EXPECT_EQ(call({"chi", "--a", "1/0"}).code, kExitInvalid);
  EXPECT_EQ(call({"bb", "--order", "4", "--weights", "0,0,0,0,1,2"}).code, kExitInvalid);
  EXPECT_EQ(call({"--help"}).code, kExitOk);
}

TEST(Cli, MalformedFilesExitTwo) {
  const std::string path = ::testing::TempDir() + "/bad_poly.json";
  for (const std::string body : {"{not json", R"({"vars":6,"degree":3,"terms":[{"coef":1.5,"exps":[3,0,0,0,0,0]}]})",
                                 R"({"vars":6,"degree":3,"terms":[{"coef":"1","exps":[2,0,0,0,0,0]}]})"}) {
    std::ofstream(path) << body;
    EXPECT_EQ(call({"smooth", "--poly", path}).code, kExitInvalid) << body;
  }
  std::ofstream(path) << R"({"gram":[[0,1],[2,0]]})";
  EXPECT_EQ(call({"lattice", "isotropic", "--lattice", path}).code, kExitInvalid);
  std::remove(path.c_str());
}

TEST(Cli, NoSmoothMemberExitsOne) {
  EXPECT_EQ(call({"analyze", "--order", "3", "--weights", "0,0,0,0,0,1", "--lambda", "1"}).code, kExitVerification);
}

TEST(Cli, Smooth) {
  EXPECT_EQ(result_of({"smooth", "--poly", data("fermat.json"), "--json"}).at("verdict"), "smooth");
  const Json cone = result_of({"smooth", "--poly", data("cone.json"), "--exact", "--json"});
  EXPECT_EQ(cone.at("verdict"), "singular");
  EXPECT_EQ(result_of({"smooth", "--poly", data("order11.json"), "--json"}).at("hilbert"),
            Json({1, 6, 15, 20, 15, 6, 1, 0}));
}

TEST(Cli, Hodge) {
  const Json r = result_of({"hodge", "--poly", data("order11.json"), "--order", "11", "--weights", "0,1,3,4,5,9", "--json"});
  EXPECT_EQ(r.at("n_prime"), 0);
  EXPECT_EQ(r.at("zeta"), "1");
  EXPECT_EQ(call({"hodge", "--poly", data("fermat.json"), "--order", "3", "--weights", "0,0,0,0,0,1", "--lambda", "1"}).code,
            kExitInvalid);
}

TEST(Cli, BailyBorel) {
  const Json r = result_of({"bb", "--order", "2", "--weights", "0,0,0,0,1,1", "--json"});
  EXPECT_EQ(r.at("is_bb"), false);
  EXPECT_FALSE(r.at("witnesses").empty());
  EXPECT_EQ(result_of({"bb", "--order", "11", "--weights", "0,1,3,4,5,9", "--json"}).at("is_bb"), true);
}

TEST(Cli, Chi) {
  EXPECT_EQ(result_of({"chi", "--verify-veronese", "--json"}).at("ok"), true);
  EXPECT_EQ(result_of({"chi", "--a", "0", "--b", "1", "--json"}).at("text"),
            "x0*x2*x4 - x0*x3^2 - x1^2*x4 + 2*x1*x2*x3 - x2^3 + x5^3");
  EXPECT_EQ(call({"chi", "--a", "0", "--b", "1", "--verify-veronese"}).code, kExitVerification);
}

TEST(Cli, Lattice) {
  const Json eigen = result_of({"lattice", "eigen", "--lattice", data("u.json"), "--sign", "+1", "--json"});
  EXPECT_EQ(eigen.at("gram"), Json::parse("[[2]]"));
  EXPECT_EQ(result_of({"lattice", "eigen", "--lattice", data("u.json"), "--sign", "-1", "--json"}).at("gram"),
            Json::parse("[[-2]]"));
  EXPECT_EQ(result_of({"lattice", "isometry", "--lattice", data("u.json"), "--json"}).at("order"), 2);
  const Json cyc = result_of({"lattice", "cyclotomic", "--lattice", data("a2.json"), "--prime", "3", "--json"});
  EXPECT_EQ(cyc.at("kernel").at("rank"), 2);
  EXPECT_EQ(cyc.at("isotropic"), true);
  EXPECT_EQ(result_of({"lattice", "isotropic", "--lattice", data("u.json"), "--height", "3", "--json"}).at("vectors"),
            Json::parse("[[0,1],[1,0]]"));
  const Json vs = result_of({"lattice", "boundary-vsigma", "--lattice", data("u2_plane.json"), "--json"});
  EXPECT_EQ(vs.at("result").at("dim"), 2);
  EXPECT_EQ(vs.at("in_orthogonal"), true);
  EXPECT_EQ(result_of({"lattice", "boundary-j", "--lattice", data("u_line.json"), "--json"}).at("in_orthogonal"), true);
  EXPECT_EQ(result_of({"lattice", "cm", "--lattice", data("uu_cm.json"), "--d", "3", "--json"}).at("isotropic_plane"), true);
  EXPECT_EQ(call({"lattice", "cyclotomic", "--lattice", data("u.json"), "--prime", "3"}).code, kExitInvalid);
  EXPECT_EQ(call({"lattice", "eigen", "--lattice", data("u.json"), "--sign", "3"}).code, kExitInvalid);
}

TEST(Cli, ClassifyGoldenAndOut) {
  const std::string golden = std::string(SYMCUBIC_GOLDEN) + "/classification_p2.json";
  const std::string out = ::testing::TempDir() + "/classify_out.json";
  const Outcome o = call({"classify", "--primes", "2", "--seed", "3", "--golden", golden, "--out", out});
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("3 rows"), std::string::npos);
  const Json written = read_json_file(out);
  EXPECT_EQ(written.at("result").at("rows").size(), 3u);
  EXPECT_EQ(call({"classify", "--primes", "3", "--golden", golden}).code, kExitVerification);
  std::remove(out.c_str());
}
