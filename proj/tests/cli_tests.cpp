#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "sgqft/canonical.hpp"
#include "sgqft/json_io.hpp"

using namespace sgqft;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("sgqft_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

const char* theta_json = R"({"vertices":[0,0],"edges":[[[0,0],[1,0]],[[0,1],[1,1]],[[0,2],[1,2]]],"legs":[]})";

}  // namespace

TEST_CASE("cli realize") {
  Run r = run({"realize", "--genus", "1", "--legs", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "F[1,1] + 1/2*kappa*F[0,3]\n");
  Run j = run({"realize", "--genus", "1", "--legs", "1", "--format", "json"});
  CHECK(poly_from_json(Json::parse(j.out)) == Poly::parse(r.out));
}

TEST_CASE("cli enumerate emits parseable graphs") {
  Run r = run({"enumerate", "--genus", "2", "--legs", "0", "--format", "json"});
  REQUIRE(r.code == 0);
  Json arr = Json::parse(r.out);
  CHECK(arr.size() == 7);
  for (const Json& rec : arr) {
    StableGraph g = graph_from_json(rec["graph"]);
    CHECK(base64_encode(canonical_key(g)) == rec["key"]);
    CHECK(automorphism_count(g) == rec["aut_order"].get<std::uint64_t>());
  }
  Run t = run({"enumerate", "--genus", "2", "--legs", "0"});
  std::istringstream lines(t.out);
  std::string line;
  std::size_t k = 0;
  while (std::getline(lines, line)) {
    CHECK(line == std::to_string(arr[k]["aut_order"].get<std::uint64_t>()) + " " +
                      arr[k]["key"].get<std::string>() + " " + arr[k]["graph"].dump());
    ++k;
  }
  CHECK(k == 7);
}

TEST_CASE("cli graph commands") {
  std::string path = temp_file("theta.json", theta_json);
  Run aut = run({"aut", "--graph", path});
  CHECK(aut.code == 0);
  CHECK(aut.out.rfind("12 ", 0) == 0);
  Run dual = run({"dualize", "--graph", path, "--format", "json"});
  CHECK(dual.code == 0);
  Json sum = Json::parse(dual.out);
  REQUIRE(sum.size() == 1);
  CHECK(sum[0]["coefficient"] == "-1/1");
  Run k = run({"op", "K", "--graph", path, "--format", "json"});
  CHECK(Json::parse(k.out)[0]["coefficient"] == "3/1");
  Run tr = run({"transform", "--epsilon", "e1+e2", "--graph", path});
  CHECK(tr.code == 0);
  Run again = run({"dualize", "--graph", temp_file("sum.json", dual.out)});
  CHECK(again.code == 0);
  CHECK(again.out.rfind("1 ", 0) == 0);
}

TEST_CASE("cli theory commands") {
  Run s = run({"s-transform", "--bound", "2", "--kappa", "k1+k2", "--format", "json"});
  REQUIRE(s.code == 0);
  Theory t = theory_from_json(Json::parse(s.out));
  CHECK(t.at({0, {4}}) == Poly::parse("F[0,4] + 3*(k1+k2)*F[0,3]^2"));
  std::string seed = temp_file("seed.json", s.out);
  Run back = run({"s-transform", "--bound", "2", "--kappa=-k1-k2", "--seed-file", seed, "--format", "json"});
  CHECK(theory_from_json(Json::parse(back.out)) == symbolic_theory(2));
  Run w = run({"wick", "--bound", "2", "--labels", "2", "--kappa", "a,b;b,c"});
  Run st = run({"s-transform", "--bound", "2", "--labels", "2", "--kappa", "a,b;b,c"});
  CHECK(w.code == 0);
  CHECK(w.out == st.out);
  CHECK(run({"dual-realize", "--genus", "1", "--legs", "1,1", "--labels", "2"}).out == "F[1;1,1]\n");
  CHECK(run({"hae", "--genus", "0", "--npoints", "4"}).out == "D^1:F03\n");
}

TEST_CASE("cli validation errors exit 1") {
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"realize", "--genus", "0", "--legs", "2"}).code == 1);
  CHECK(run({"realize", "--genus", "1", "--legs", "1,1"}).code == 1);
  CHECK(run({"s-transform", "--labels", "2", "--kappa", "a,b;c,d"}).code == 1);
  CHECK(run({"aut", "--graph", temp_file("bad.json", R"({"vertices":[0],"edges":[],"legs":[]})")}).code == 1);
  CHECK(run({"aut", "--graph", temp_file("junk.json", "{")}).code == 1);
  CHECK(run({"verify", "--suite", "nope"}).code == 1);
  Run cap = run({"hae", "--genus", "5"});
  CHECK(cap.code == 1);
  CHECK(cap.err.find("SGQFT_GENUS_CAP") != std::string::npos);
  Run bogus = run({"bogus"});
  CHECK(bogus.err.find("Usage") != std::string::npos);
}

TEST_CASE("cli verify") {
  Run v = run({"verify", "--suite", "duality", "--bound", "3"});
  CHECK(v.code == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);
}
