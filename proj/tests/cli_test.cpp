#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "tamari/tamari.hpp"

using namespace tamari;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Cli, EnumerateTamariTable) {
  const auto r = run_cli({"enumerate", "--lattice", "tamari", "--n", "3", "--format", "table"});
  EXPECT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows.front(), "1,2,3\t0\t(((ab)c)d)");
  EXPECT_EQ(rows.back(), "3,3,3\t3\t(a(b(cd)))");
}

TEST(Cli, EnumerateJsonReparsesLosslessly) {
  const auto r = run_cli({"enumerate", "--lattice", "tamari", "--n", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const json all = json::parse(r.out);
  std::vector<BracketingFn> parsed;
  for (const auto& j : all) parsed.push_back(bracketing_fn_from_json(j));
  EXPECT_EQ(parsed, enumerate_tamari(4));

  const auto p = run_cli({"enumerate", "--lattice", "perm", "--n", "3", "--format", "json"});
  ASSERT_EQ(p.code, 0);
  std::vector<Permutation> perms;
  for (const auto& j : json::parse(p.out)) perms.push_back(permutation_from_json(j));
  EXPECT_EQ(perms, all_permutations(3));
}

TEST(Cli, EnumeratePermTable) {
  const auto r = run_cli({"enumerate", "--lattice", "perm", "--n", "3"});
  ASSERT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows.back(), "3,2,1\t3\t{(3,2),(3,1),(2,1)}");
}

TEST(Cli, EnumerateDot) {
  const auto r = run_cli({"enumerate", "--lattice", "tamari", "--n", "3", "--format", "dot"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("digraph T3 {", 0), 0u);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '>'), 5);
}

TEST(Cli, OpJoinTamari) {
  const auto r = run_cli({"op", "join", "--lattice", "tamari", "2,2,3", "1,3,3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3,3,3\n");
  EXPECT_EQ(run_cli({"op", "meet", "--lattice", "tamari", "2,2,3", "1,3,3"}).out, "1,2,3\n");
}

TEST(Cli, OpPerm) {
  // <2,1,3> v <1,3,2> = <3,2,1>
  EXPECT_EQ(run_cli({"op", "join", "--lattice", "perm", "2,1,3", "1,3,2"}).out, "3,2,1\n");
  EXPECT_EQ(run_cli({"op", "meet", "--lattice", "perm", "3,1,2", "2,3,1"}).out, "1,2,3\n");
  const auto j = run_cli({"op", "meet", "--lattice", "perm", "--as", "invset",
                          R"({"n":3,"pairs":[[3,1],[3,2]]})", R"({"n":3,"pairs":[[3,1],[2,1]]})"});
  EXPECT_EQ(j.code, 0);
  EXPECT_EQ(j.out, "{\"n\":3,\"pairs\":[]}\n");
}

TEST(Cli, OpErrors) {
  EXPECT_EQ(run_cli({"op", "join", "--lattice", "tamari", "2,3,3", "1,2,3"}).code, 2);
  EXPECT_EQ(run_cli({"op", "join", "--lattice", "tamari", "1,2", "1,2,3"}).code, 2);
  EXPECT_EQ(run_cli({"op", "join", "--lattice", "perm", R"({"n":3,"pairs":[[3,1]]})", "1,2,3"}).code, 2);
  EXPECT_EQ(run_cli({"op", "cross", "--lattice", "perm", "1,2", "1,2"}).code, 2);
}

TEST(Cli, ConvertWordToFn) {
  const auto r = run_cli({"convert", "--from", "word", "--to", "fn", "((a((bc)d))e)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3,2,3,4\n");
}

TEST(Cli, ConvertOtherDirections) {
  EXPECT_EQ(run_cli({"convert", "--from", "fn", "--to", "word", "3,2,3,4"}).out, "((a((bc)d))e)\n");
  EXPECT_EQ(run_cli({"convert", "--from", "fn", "--to", "invset", "3,2,3,4"}).out,
            "{\"n\":4,\"pairs\":[[3,1],[2,1]]}\n");
  EXPECT_EQ(run_cli({"convert", "--from", "fn", "--to", "perm", "3,2,3,4"}).out, "2,3,1,4\n");
  EXPECT_EQ(run_cli({"convert", "--from", "perm", "--to", "fn", "2,3,1,4"}).out, "3,2,3,4\n");
  EXPECT_EQ(run_cli({"convert", "--from", "word", "--to", "tree", "(a(bc))"}).out,
            "node(leaf 0, node(leaf 1, leaf 2))\n");
  EXPECT_EQ(run_cli({"convert", "--from", "invset", "--to", "perm", R"({"n":3,"pairs":[[3,2],[3,1]]})"}).out,
            "3,1,2\n");
}

TEST(Cli, ConvertErrors) {
  const auto unbalanced = run_cli({"convert", "--from", "word", "--to", "fn", "(a(bc)"});
  EXPECT_EQ(unbalanced.code, 2);
  EXPECT_NE(unbalanced.err.find("unbalanced"), std::string::npos);
  // <3,1,2> lies outside the image of the embedding.
  EXPECT_EQ(run_cli({"convert", "--from", "perm", "--to", "fn", "3,1,2"}).code, 2);
  EXPECT_EQ(run_cli({"convert", "--from", "invset", "--to", "perm", "{not json"}).code, 2);
  EXPECT_EQ(run_cli({"convert", "--from", "word", "--to", "nothing", "(ab)"}).code, 2);
}

TEST(Cli, Hasse) {
  const auto r = run_cli({"hasse", "--lattice", "perm", "--n", "3", "--mark-image"});
  ASSERT_EQ(r.code, 0);
  // Five of the six permutations lie in the image; <3,1,2> does not.
  std::size_t filled = 0;
  for (const auto& line : lines(r.out)) filled += line.find("filled") != std::string::npos;
  EXPECT_EQ(filled, 5u);
  EXPECT_NE(r.out.find("label=\"3,1,2\"]"), std::string::npos);
  EXPECT_EQ(run_cli({"hasse", "--lattice", "tamari", "--n", "3", "--mark-image"}).code, 2);
  EXPECT_EQ(run_cli({"hasse", "--lattice", "perm", "--n", "9"}).code, 2);
}

TEST(Cli, VerifyEmbeddingExitCodeReflectsVerdict) {
  const auto r = run_cli({"verify", "embedding", "--n", "5"});
  EXPECT_EQ(r.code, 0);
  const json report = json::parse(r.out);
  EXPECT_EQ(report.at("elements"), 42);
  EXPECT_EQ(report.at("pairs_checked"), 1764);
  EXPECT_TRUE(report.at("witness").is_null());

  const auto sampled = run_cli({"verify", "embedding", "--n", "6", "--seed", "9", "--samples", "500"});
  EXPECT_EQ(sampled.code, 0);
  EXPECT_EQ(json::parse(sampled.out).at("pairs_checked"), 500);
}

TEST(Cli, VerifyOtherKinds) {
  for (const char* kind : {"height", "semidistributive", "bounded", "roundtrip"}) {
    const auto r = run_cli({"verify", kind, "--n", "4"});
    EXPECT_EQ(r.code, 0) << kind << ": " << r.err;
    EXPECT_TRUE(json::parse(r.out).at("witness").is_null());
  }
  EXPECT_EQ(run_cli({"verify", "height", "--n", "9"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "nothing", "--n", "3"}).code, 2);
}

TEST(Cli, Stats) {
  const auto r = run_cli({"stats", "--n", "4"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "n: 4\n|S_n|: 24\n|T_n|: 14\nheight(top S_n): 6\nheight(top T_n): 6\n"
            "atoms(S_n): 3\natoms(T_n): 3\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"enumerate", "--n", "3"}).code, 2);
  EXPECT_EQ(run_cli({"enumerate", "--lattice", "tamari", "--n", "0"}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}
