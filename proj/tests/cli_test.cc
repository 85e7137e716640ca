// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cimat/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cimat/matroid.h"
#include "cimat/text_format.h"

namespace cimat {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("cimat_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) {
    fs::path p = dir_ / name;
    std::ofstream(p) << content;
    return p.string();
  }

  std::string read(const std::string& path) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "cimat");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
  }

  fs::path dir_;
};

TEST_F(CliTest, CheckExcludedMinorReportsMci) {
  std::string g4 = file("g4.ci", write_ci(g_family(4)));
  Result r = run({"check", g4, "--axioms", "sg,mci"});
  EXPECT_EQ(r.code, kExitViolations);
  EXPECT_NE(r.out.find("SG: pass"), std::string::npos);
  EXPECT_NE(r.out.find("(13|24)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("! MCI 1 2 3 | ; 4\n"), std::string::npos) << r.out;
}

TEST_F(CliTest, CheckFullStructurePasses) {
  std::string all = file("a3.ci", write_ci(CIStructure::full(3)));
  Result r = run({"check", all, "--axioms", "sg"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out.find("!"), std::string::npos);
}

TEST_F(CliTest, CheckOciSignFlip) {
  std::string s = file("flip.oci", "oci n=3\n+ 1 2 |\n- 1 2 | 3\n");
  Result r = run({"check", s, "--axioms", "oci"});
  EXPECT_EQ(r.code, kExitViolations);
  EXPECT_NE(r.out.find("! OCI3"), std::string::npos) << r.out;
}

TEST_F(CliTest, CheckErrors) {
  EXPECT_EQ(run({"check", file("bad.ci", "ci n=3\n1 1 |\n")}).code, kExitError);
  EXPECT_EQ(run({"check", (dir_ / "missing.ci").string()}).code, kExitError);
  EXPECT_EQ(run({"check", file("ok.ci", "ci n=2\n"), "--axioms", "foo"}).code, kExitError);
  Result r = run({"check", file("m.ci", "ci n=3\n1 2 |\n1 1 |\n")});
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
  EXPECT_EQ(run({}).code, kExitError);
  EXPECT_EQ(run({"frobnicate"}).code, kExitError);
}

TEST_F(CliTest, ConvertMatroidToCi) {
  std::string m = file("u23.matroid", "matroid n=3\nbases\n1 2\n1 3\n2 3\n");
  Result r = run({"convert", m, "--to", "ci"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out, "ci n=3\n1 2 |\n1 3 |\n2 3 |\n");
}

TEST_F(CliTest, ConvertOciToSignedCircuitsWithVerify) {
  std::string s = file("t.oci", "oci n=3\n+ 1 2 | 3\n- 1 3 | 2\n- 2 3 | 1\n");
  std::string out = (dir_ / "t.sc").string();
  Result r = run({"convert", s, "--to", "signed-circuits", "--verify", "-o", out});
  EXPECT_EQ(r.code, kExitPass) << r.out << r.err;
  EXPECT_EQ(read(out), "signed-circuits n=3\n+ 1 2 - 3\n");
  EXPECT_NE(r.out.find("round trip confirmed"), std::string::npos);
}

TEST_F(CliTest, ConvertMatrixToCi) {
  std::string m = file("s.matrix", "matrix n=2\n1 1/10\n1/10 1\n");
  Result r = run({"convert", m, "--to", "ci"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out, "ci n=2\n");
  EXPECT_EQ(run({"convert", file("np.matrix", "matrix n=2\n1 2\n2 1\n"), "--to", "ci"}).code,
            kExitError);
}

TEST_F(CliTest, ConvertEveryPairRoundTrips) {
  std::string ci = file("u23.ci", "ci n=3\n1 2 |\n1 3 |\n2 3 |\n");
  Result to_matroid = run({"convert", ci, "--to", "matroid", "--verify"});
  EXPECT_EQ(to_matroid.code, kExitPass);
  std::string sc = file("t.sc", "signed-circuits n=3\n+ 1 2 - 3\n");
  EXPECT_EQ(run({"convert", sc, "--to", "oci", "--verify"}).code, kExitPass);
  std::string chi = file("t.chi", "chirotope n=3 r=2\n1 2 +\n1 3 +\n2 3 -\n");
  Result via_chi = run({"convert", chi, "--to", "oci", "--verify"});
  EXPECT_EQ(via_chi.code, kExitPass);
  EXPECT_EQ(via_chi.out.substr(0, via_chi.out.find('#')), "oci n=3\n+ 1 2 | 3\n- 1 3 | 2\n- 2 3 | 1\n");
  std::string h = file("h.setfn", "setfn n=2\n: 0\n1 : 1\n2 : 1\n1 2 : 1\n");
  Result semi = run({"convert", h, "--to", "ci", "--verify"});
  EXPECT_EQ(semi.code, kExitPass);
  EXPECT_EQ(semi.out.substr(0, semi.out.find('#')), "ci n=2\n");
  std::string v = file("t.vec", "vectors d=2 n=3\n1 0 1\n0 1 1\n");
  EXPECT_EQ(run({"convert", v, "--to", "chirotope", "--verify"}).code, kExitPass);
  Result sc_out = run({"convert", v, "--to", "signed-circuits"});
  EXPECT_EQ(sc_out.out, "signed-circuits n=3\n+ 1 2 - 3\n");
  EXPECT_EQ(run({"convert", ci, "--to", "chirotope"}).code, kExitError);
}

TEST_F(CliTest, ConvertReportsAxiomFailures) {
  std::string g4 = file("g4.ci", write_ci(g_family(4)));
  Result r = run({"convert", g4, "--to", "matroid"});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("MCI"), std::string::npos) << r.err;
  std::string bad = file("bad.sc", "signed-circuits n=3\n+ 1 2\n+ 1 3\n+ 2 3\n");
  Result s = run({"convert", bad, "--to", "oci"});
  EXPECT_EQ(s.code, kExitError);
  EXPECT_NE(s.out.find("! OC3"), std::string::npos) << s.out;
}

TEST_F(CliTest, OpDeleteContractDualSum) {
  std::string u23 = file("u23.ci", "ci n=3\n1 2 |\n1 3 |\n2 3 |\n");
  Result del = run({"op", "delete", u23, "--set", "3"});
  EXPECT_EQ(del.code, kExitPass);
  EXPECT_EQ(del.out, "# original labels: 1 2\nci n=2\n1 2 |\n");
  Result con = run({"op", "contract", u23, "--set", "1"});
  EXPECT_EQ(con.out, "# original labels: 2 3\nci n=2\n");
  Result du = run({"op", "dual", u23});
  EXPECT_EQ(du.out, "ci n=3\n1 2 | 3\n1 3 | 2\n2 3 | 1\n");
  std::string one = file("one.ci", "ci n=1\n");
  EXPECT_EQ(run({"op", "direct-sum", one, one}).out, "ci n=2\n1 2 |\n");
  std::string m = file("u12.matroid", "matroid n=2\nbases\n1\n2\n");
  Result md = run({"op", "dual", m});
  EXPECT_EQ(md.code, kExitPass);
  EXPECT_EQ(parse_matroid(md.out), uniform(1, 2));
  EXPECT_EQ(run({"op", "delete", u23, "--set", "4"}).code, kExitError);
  EXPECT_EQ(run({"op", "direct-sum", u23}).code, kExitError);
}

TEST_F(CliTest, OpIsomorphicAndMinors) {
  std::string a = file("a.ci", "ci n=3\n1 2 |\n");
  std::string b = file("b.ci", "ci n=3\n1 3 |\n");
  Result iso = run({"op", "isomorphic", a, b});
  EXPECT_EQ(iso.code, kExitPass);
  EXPECT_NE(iso.out.find("! 1->1 2->3 3->2"), std::string::npos) << iso.out;
  std::string c = file("c.ci", "ci n=3\n1 2 |\n1 3 |\n");
  EXPECT_EQ(run({"op", "isomorphic", a, c}).code, kExitViolations);
  Result ms = run({"op", "minors", a});
  EXPECT_EQ(ms.code, kExitPass);
  std::size_t count = 0;
  for (std::size_t p = ms.out.find("# delete"); p != std::string::npos; p = ms.out.find("# delete", p + 1)) {
    ++count;
  }
  EXPECT_EQ(count, 27u);
}

TEST_F(CliTest, Enumerate) {
  Result two = run({"enumerate", "--kind", "matroids", "--n", "2"});
  EXPECT_EQ(two.code, kExitPass);
  EXPECT_NE(two.out.find("matroids n=2: 2\n"), std::string::npos) << two.out;
  Result ci3 = run({"enumerate", "--kind", "matroid-ci", "--n", "3"});
  EXPECT_EQ(ci3.code, kExitPass);
  EXPECT_NE(ci3.out.find("matroid-ci n=3: 6\n"), std::string::npos) << ci3.out;
  EXPECT_NE(ci3.out.find("independent route): 6"), std::string::npos);
  std::string emitted = (dir_ / "g.txt").string();
  Result g3 = run({"enumerate", "--kind", "gaussoid-matroids", "--n", "3", "--emit", "-o", emitted});
  EXPECT_EQ(g3.code, kExitPass);
  EXPECT_NE(g3.out.find("gaussoid-matroids n=3: 4\n"), std::string::npos) << g3.out;
  // U(1,1)^3 and the three labelings of U(1,2) ⊕ U(1,1).
  std::string text = read(emitted);
  EXPECT_NE(text.find("bases\n1 2 3\n"), std::string::npos) << text;
  EXPECT_EQ(run({"enumerate", "--kind", "matroid-ci", "--n", "5"}).code, kExitError);
  EXPECT_EQ(run({"enumerate", "--kind", "matroids", "--n", "6"}).code, kExitError);
  EXPECT_EQ(run({"enumerate", "--kind", "gaussoid-matroids", "--n", "5"}).code, kExitError);
}

TEST_F(CliTest, DemoExcludedMinors) {
  std::string out = (dir_ / "g4.ci").string();
  Result r = run({"demo", "gm", "--m", "4", "-o", out});
  EXPECT_EQ(r.code, kExitPass) << r.out;
  EXPECT_NE(r.out.find("not a matroid: MCI witness (1,2 | ∅) vs (1,3 | 2 4)"), std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("8 of 8 single-element minors"), std::string::npos);
  EXPECT_EQ(parse_ci(read(out)), g_family(4));
  Result five = run({"demo", "gm", "--m", "5"});
  EXPECT_EQ(five.code, kExitPass);
  EXPECT_NE(five.out.find("(1,3 | 2 4 5)"), std::string::npos);
  EXPECT_EQ(run({"demo", "gm", "--m", "3"}).code, kExitError);
  EXPECT_EQ(run({"demo", "gm", "--m", "7"}).code, kExitError);
}

TEST_F(CliTest, Realize) {
  std::string v = file("t.vec", "vectors d=2 n=3\n1 0 1\n0 1 1\n");
  Result r = run({"realize", v});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("chirotope n=3 r=2\n1 2 +\n1 3 +\n2 3 -\n"), std::string::npos);
  EXPECT_NE(r.out.find("signed-circuits n=3\n+ 1 2 - 3\n"), std::string::npos);
  EXPECT_NE(r.out.find("routes agree"), std::string::npos);
  EXPECT_EQ(run({"realize", file("z.vec", "vectors d=1 n=2\n0 0\n")}).code, kExitError);
}

TEST_F(CliTest, Help) {
  Result r = run({"--help"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("enumerate"), std::string::npos);
}

}  // namespace
}  // namespace cimat
