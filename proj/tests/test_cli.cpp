#include <algorithm>
#include <sstream>

#include <gtest/gtest.h>

#include "evenchi/cli.hpp"

using namespace evenchi;

#ifndef EVENCHI_FIXTURE_DIR
#error "EVENCHI_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(EVENCHI_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST(Cli, VerifySphereExitsZero) {
  auto r = run_cli({"verify", "--input", fixture("sphere4.facets")});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("verdict: PASS"), std::string::npos);

  auto g = run_cli({"verify", "--family", "simplex-boundary", "--dim", "4"});
  EXPECT_EQ(g.code, 0);
  EXPECT_EQ(g.out, r.out);
}

TEST(Cli, VerifyBowtieExitsOne) {
  auto r = run_cli({"verify", "--input", fixture("bowtie.facets")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("chi(link {0}): expected 1, actual 2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("closed-manifold formula on this complex gives 4 against classical 1"), std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("verdict: FAIL"), std::string::npos);
}

TEST(Cli, VerifyMalformedExitsTwoWithLineNumber) {
  auto r = run_cli({"verify", "--input", fixture("malformed.facets")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
}

TEST(Cli, VerifyDiskUsesBoundaryPath) {
  auto r = run_cli({"verify", "--json", "--input", fixture("disk.facets")});
  EXPECT_EQ(r.code, 0) << r.out;
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["mode"], "with-boundary");
  EXPECT_EQ(doc["euler"]["boundary_formula"], "1");
  EXPECT_TRUE(doc["euler"]["even_formula"].is_null());
  bool saw_double = false;
  for (const auto& c : doc["checks"]) saw_double = saw_double || c["name"] == "double";
  EXPECT_TRUE(saw_double);
}

TEST(Cli, VerifyTriangleSkipsDouble) {
  auto r = run_cli({"verify", "--family", "simplex", "--dim", "2"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("double skipped"), std::string::npos);
}

TEST(Cli, VerifyOddDimensionSkipsEvenFormula) {
  auto r = run_cli({"verify", "--family", "simplex-boundary", "--dim", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("odd dimension 3"), std::string::npos);
  EXPECT_EQ(r.out.find("even-face-formula"), std::string::npos);
}

TEST(Cli, EulerOnTorus) {
  auto r = run_cli({"euler", "--input", fixture("torus7.facets")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "classical: 0\neven-face formula: 0\nagree: yes\n");
}

TEST(Cli, EulerDisagreementExitsOne) {
  auto r = run_cli({"euler", "--input", fixture("nonpure.facets")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "classical: 1\neven-face formula: 7/2\nagree: no\n");
}

TEST(Cli, EulerOnBowtieTakesBoundaryPath) {
  auto r = run_cli({"euler", "--json", "--family", "bowtie"});
  EXPECT_EQ(r.code, 1);
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["boundary_formula"], "3/2");
  EXPECT_TRUE(doc["even_formula"].is_null());
}

TEST(Cli, FVectorAndHVector) {
  auto f = run_cli({"fvector", "--input", fixture("torus7.facets")});
  EXPECT_EQ(f.out, "f = (7, 21, 14)\n");
  auto h = run_cli({"hvector", "--input", fixture("torus7.facets")});
  EXPECT_EQ(h.out, "h = (1, 4, 10, -1)\n");
  auto hj = run_cli({"hvector", "--json", "--family", "simplex-boundary", "--dim", "2"});
  EXPECT_EQ(Json::parse(hj.out)["h"], Json({"1", "1", "1", "1"}));
}

TEST(Cli, Checks) {
  EXPECT_EQ(run_cli({"check-ds", "--input", fixture("torus7.facets")}).code, 0);
  EXPECT_EQ(run_cli({"check-lemma1", "--input", fixture("torus7.facets")}).code, 0);
  EXPECT_EQ(run_cli({"check-semi-eulerian", "--family", "rp2-6"}).code, 0);
  EXPECT_EQ(run_cli({"check-ds", "--family", "bowtie"}).code, 1);
  EXPECT_EQ(run_cli({"check-lemma1", "--family", "bowtie"}).code, 1);
  EXPECT_EQ(run_cli({"check-semi-eulerian", "--family", "bowtie"}).code, 1);
}

TEST(Cli, LinkBoundaryDouble) {
  auto l = run_cli({"link", "--family", "simplex-boundary", "--dim", "2", "--face", "0 1"});
  EXPECT_EQ(l.code, 0);
  EXPECT_EQ(l.out, "2\n3\n");
  auto facet_link = run_cli({"link", "--family", "simplex", "--dim", "2", "--face", "0 1 2"});
  EXPECT_EQ(facet_link.out, "# empty complex\n");
  EXPECT_EQ(run_cli({"link", "--family", "simplex", "--dim", "2", "--face", "0 9"}).code, 2);
  EXPECT_EQ(run_cli({"link", "--family", "simplex", "--dim", "2"}).code, 2);

  auto b = run_cli({"boundary", "--input", fixture("disk.facets")});
  EXPECT_EQ(b.out, "0 1\n0 2\n1 2\n");
  auto d = run_cli({"double", "--json", "--input", fixture("disk.facets")});
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(Json::parse(d.out)["facets"].size(), 6U);
  EXPECT_EQ(run_cli({"double", "--family", "simplex", "--dim", "2"}).code, 2);
  EXPECT_EQ(run_cli({"double", "--input", fixture("torus7.facets")}).code, 2);
}

TEST(Cli, Generate) {
  auto g = run_cli({"generate", "--family", "simplex-boundary", "--dim", "1"});
  EXPECT_EQ(g.out, "0 1\n0 2\n1 2\n");
  EXPECT_EQ(run_cli({"generate", "--family", "klein-bottle"}).code, 2);
  EXPECT_EQ(run_cli({"generate", "--family", "cross-polytope"}).code, 2);
  EXPECT_EQ(run_cli({"generate"}).code, 2);
  auto t = run_cli({"generate", "--family", "torus7"});
  auto f = run_cli({"fvector", "--family", "torus7"});
  EXPECT_EQ(f.out, "f = (7, 21, 14)\n");
  EXPECT_EQ(std::count(t.out.begin(), t.out.end(), '\n'), 14);
}

TEST(Cli, BetaTable) {
  EXPECT_EQ(run_cli({"beta-table", "--max-n", "2"}).out, "-1: -2\n0: 1\n1: 0\n2: -1/2\n");
  const auto six = run_cli({"beta-table", "--max-n", "6"}).out;
  EXPECT_NE(six.find("4: 1\n"), std::string::npos);
  EXPECT_NE(six.find("6: -17/4\n"), std::string::npos);
  EXPECT_EQ(run_cli({"beta-table", "--max-n", "-1"}).out, "-1: -2\n");
  EXPECT_EQ(run_cli({"beta-table", "--max-n", "-2"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"fvector"}).code, 2);
  EXPECT_EQ(run_cli({"fvector", "--input", fixture("does-not-exist.facets")}).code, 2);
  EXPECT_EQ(run_cli({"fvector", "--input", fixture("torus7.facets"), "--family", "torus7"}).code, 2);
  EXPECT_EQ(run_cli({"euler", "--family", "simplex-boundary", "--dim", "x"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, JsonReportsRoundTrip) {
  const std::vector<std::vector<std::string>> invocations = {
      {"verify", "--json", "--input", fixture("sphere4.facets")},
      {"verify", "--json", "--input", fixture("bowtie.facets")},
      {"verify", "--json", "--input", fixture("disk.facets")},
      {"check-ds", "--json", "--input", fixture("torus7.facets")},
      {"check-lemma1", "--json", "--family", "bowtie"},
      {"euler", "--json", "--family", "rp2-6"},
      {"beta-table", "--json", "--max-n", "10"},
      {"fvector", "--json", "--family", "cross-polytope", "--dim", "4"},
  };
  for (const auto& args : invocations) {
    const auto r = run_cli(args);
    const Json doc = Json::parse(r.out);
    EXPECT_EQ(doc.dump(2) + "\n", r.out) << args[0];
  }
}

TEST(Cli, CheckReportJsonParsesBack) {
  const auto r = run_cli({"check-ds", "--json", "--input", fixture("torus7.facets")});
  const CheckReport report = check_report_from_json(Json::parse(r.out));
  EXPECT_EQ(report.name, "dehn-sommerville");
  EXPECT_TRUE(report.passed);
  ASSERT_EQ(report.items.size(), 4U);
  EXPECT_EQ(report.items[0].expected, Rational(-2));
  EXPECT_EQ(to_json(report).dump(2) + "\n", r.out);
}
