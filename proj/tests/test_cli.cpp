#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "mnet/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = {}) {
  args.insert(args.begin(), "mnet");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  std::istringstream in(stdin_text);
  const int code = mnet::cli::run(static_cast<int>(argv.size()), argv.data(), out, err, in);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(MNET_SAMPLE_DIR) + "/" + name; }

}  // namespace

TEST(Cli, AnalyzeHumanAndMachine) {
  const auto h = run({"analyze", sample("b3.arr")});
  EXPECT_EQ(h.code, 0) << h.err;
  EXPECT_NE(h.out.find("(3,4)-multinet"), std::string::npos);
  const auto m = run({"--format", "machine", "analyze", sample("b3.arr")});
  EXPECT_EQ(m.code, 0);
  const auto rep = mnet::from_machine(m.out);
  ASSERT_EQ(rep.multinets.size(), 1u);
  EXPECT_EQ(rep.multinets[0].rh.lhs, 10);
  // Options after the subcommand work too.
  EXPECT_EQ(run({"analyze", "--format", "machine", sample("b3.arr")}).out, m.out);
}

TEST(Cli, Discover) {
  const auto r = run({"discover", sample("ceva3.arr")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("multinet 3:"), std::string::npos);
  EXPECT_EQ(r.out.find("multinet 4:"), std::string::npos);
  const auto j = mnet::Json::parse(run({"--format", "machine", "discover", "corpus:hessian"}).out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["k"], 4);
  EXPECT_EQ(j[0]["d"], 3);
  EXPECT_EQ(run({"discover", "corpus:jd:3"}).out, "no global multinets\n");
}

TEST(Cli, VerifyWithMultiplicities) {
  const auto ok = run({"verify", sample("b3.arr"), "--classes", "x^2,yz,yZ;y^2,zx,zX;z^2,xy,xY"});
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_NE(ok.out.find("multinet: yes"), std::string::npos);
  const auto bad = run({"verify", sample("b3.arr"), "--classes", "x^3,yz,yZ;y^2,zx,zX;z^2,xy,xY"});
  EXPECT_EQ(bad.code, 0);
  EXPECT_NE(bad.out.find("FAIL degree"), std::string::npos);
  EXPECT_NE(bad.out.find("multinet: no"), std::string::npos);
  EXPECT_EQ(run({"verify", sample("b3.arr"), "--classes", "q,yz"}).code, 4);
}

TEST(Cli, VerifyWeakRefines) {
  const auto r = run({"--format", "machine", "verify", "corpus:concurrent:5", "--weak", "--classes",
                      "y,x;x-y,x-2*y;x-3*y^2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = mnet::Json::parse(r.out);
  EXPECT_FALSE(j["report"]["ok"].get<bool>());
  EXPECT_TRUE(j["report"]["weak_ok"].get<bool>());
  EXPECT_EQ(j["refinement"]["k"], 5);
  EXPECT_EQ(j["refinement"]["d"], 1);
}

TEST(Cli, ResonancePencilRhLocal) {
  const auto res = run({"resonance", "corpus:ceva:3"});
  EXPECT_NE(res.out.find("isotropic: yes"), std::string::npos);
  const auto pen = run({"pencil", "corpus:monomial:2"});
  EXPECT_NE(pen.out.find("Ceva pencil realized"), std::string::npos);
  EXPECT_NE(pen.out.find("C3 = "), std::string::npos);
  const auto rh = mnet::Json::parse(run({"--format", "machine", "rh", "corpus:pappus-special"}).out);
  EXPECT_EQ(rh["lhs"], 12);
  EXPECT_EQ(rh["rhs"], 10);
  EXPECT_EQ(rh["deficit"], 2);
  const auto lt = run({"localtest", "corpus:os:2"});
  EXPECT_NE(lt.out.find("[1:0:0]  n_p=2  2 != 1  FAIL"), std::string::npos);
  EXPECT_EQ(run({"pencil", "corpus:ceva:3", "--multinet-index", "9"}).code, 4);
  EXPECT_EQ(run({"pencil", sample("unit.arr")}).code, 4);
}

TEST(Cli, Transverse) {
  const auto ok = run({"transverse", "corpus:monomial:2", "--line", "1,1,1"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("verdict: transverse"), std::string::npos);
  const auto no = run({"transverse", "corpus:monomial:2", "--line", "3,5,7"});
  EXPECT_NE(no.out.find("verdict: not transverse"), std::string::npos);
  // Incomplete multinet and a line already present are input errors.
  EXPECT_EQ(run({"transverse", "corpus:pappus-special", "--line", "0,0,1"}).code, 4);
  EXPECT_EQ(run({"transverse", "corpus:monomial:2", "--line", "1,0,0"}).code, 4);
  EXPECT_EQ(run({"transverse", "corpus:monomial:2", "--line", "1,0"}).code, 4);
}

TEST(Cli, Cartan) {
  const auto j = mnet::Json::parse(run({"--format", "machine", "cartan", "corpus:monomial:2"}).out);
  ASSERT_EQ(j["blocks"].size(), 3u);
  for (const auto& b : j["blocks"]) EXPECT_EQ(b["type"], "affine");
  const auto one = run({"cartan", "corpus:ceva:3", "--base", "0"});
  EXPECT_EQ(one.code, 0) << one.err;
  EXPECT_EQ(run({"cartan", "corpus:ceva:3", "--base", "zz"}).code, 4);
}

TEST(Cli, CorpusListEmit) {
  const auto list = run({"corpus", "list"});
  EXPECT_EQ(list.code, 0);
  EXPECT_NE(list.out.find("hessian"), std::string::npos);
  const auto emit = run({"corpus", "emit", "ceva:3"});
  EXPECT_EQ(emit.code, 0);
  // The emitted text reads back through stdin.
  const auto back = run({"discover", "-"}, emit.out);
  EXPECT_EQ(back.code, 0);
  EXPECT_EQ(back.out, run({"discover", "corpus:ceva:3"}).out);
  EXPECT_EQ(run({"corpus", "emit", "nope"}).code, 4);
}

TEST(Cli, Render) {
  const auto svg = run({"render", "corpus:hessian"});
  EXPECT_EQ(svg.code, 0);
  EXPECT_EQ(svg.out.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.err.find("8 non-real lines omitted"), std::string::npos);
  const std::string path = testing::TempDir() + "mnet_render.svg";
  const auto file = run({"render", "corpus:monomial:2", "--classes-from-multinet", "-o", path});
  EXPECT_EQ(file.code, 0) << file.err;
  std::ifstream f(path);
  std::string content((std::istreambuf_iterator<char>(f)), {});
  EXPECT_NE(content.find("</svg>"), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, ExitCodes) {
  const auto parse = run({"analyze", sample("malformed.arr")});
  EXPECT_EQ(parse.code, 2);
  EXPECT_NE(parse.err.find("line 3, column 5"), std::string::npos);
  EXPECT_EQ(run({"--cap", "10", "discover", "corpus:ceva:3"}).code, 3);
  EXPECT_EQ(run({"analyze", "/nonexistent/file.arr"}).code, 4);
  EXPECT_EQ(run({"bogus"}).code, 4);
  EXPECT_EQ(run({}).code, 4);
  EXPECT_EQ(run({"--format", "xml", "analyze", "corpus:triangle"}).code, 4);
  EXPECT_EQ(run({"--help"}).code, 0);
}
