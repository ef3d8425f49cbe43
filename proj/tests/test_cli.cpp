#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "factorcenter/cli.hpp"
#include "factorcenter/json_io.hpp"

using namespace fc;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "factorcenter");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string example(const std::string& name) { return std::string(FACTORCENTER_SOURCE_DIR) + "/docs/examples/" + name; }

const std::string kKlein4 = R"j({"degree": 4, "generators": ["(0 1)(2 3)", "(0 2)(1 3)"]})j";

}  // namespace

TEST_CASE("neg-curves on the cubic surface") {
  Run r = invoke({"lattice", "neg-curves", "--r", "6"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out).at("count") == 27);
  CHECK(Json::parse(invoke({"lattice", "neg-curves", "--kind", "quadric:1"}).out).at("count") == 3);
}

TEST_CASE("lattice enumerate") {
  Run r = invoke({"lattice", "enumerate", "--kind", "quadric", "--j", "2"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out).at("count") == 2);
  CHECK(invoke({"lattice", "enumerate", "--kind", "quadric", "--j", "3"}).code == 2);
}

TEST_CASE("Klein four search finds one pair") {
  Run r = invoke({"gassmann", "search", kKlein4, "--max-degree", "6"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  REQUIRE(j.at("count") == 1);
  std::vector<std::vector<int>> sizes = {j["pairs"][0]["a"]["orbit_sizes"].get<std::vector<int>>(),
                                         j["pairs"][0]["b"]["orbit_sizes"].get<std::vector<int>>()};
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes[0] == std::vector<int>{2, 2, 2});
  CHECK(sizes[1] == std::vector<int>{4, 1, 1});
}

TEST_CASE("gassmann check exit codes") {
  Run yes = invoke({"gassmann", "check", example("klein4_222.json"), example("klein4_411.json")});
  CHECK(yes.code == 0);
  CHECK(Json::parse(yes.out).at("isomorphic") == false);
  const std::string g = R"j("group": )j" + kKlein4;
  Run no = invoke({"gassmann", "check", "{" + g + R"j(, "cosets": [[]]})j", "{" + g + R"j(, "size": 4, "generators": [[0,1,2,3],[0,1,2,3]]})j"});
  CHECK(no.code == 1);
  CHECK(Json::parse(no.out).at("gassmann") == false);
}

TEST_CASE("validation and usage errors exit 2 with a JSON body") {
  Run unknown = invoke({"gassmann", "search", R"j({"degree": 4, "generators": [], "colour": 1})j"});
  CHECK(unknown.code == 2);
  CHECK(Json::parse(unknown.err).at("error").at("kind") == "validation");
  Run bad_flag = invoke({"lattice", "neg-curves", "--bogus"});
  CHECK(bad_flag.code == 2);
  CHECK(Json::parse(bad_flag.err).at("error").at("kind") == "usage");
  CHECK(invoke({"links", "c", "{not json"}).code == 2);
  CHECK(invoke({"surface", "ns-char", "/nonexistent/model.json"}).code == 2);
  CHECK(invoke({}).code == 2);
}

TEST_CASE("resource cap exits 3") {
  Run r = invoke({"gassmann", "search", kKlein4, "--max-degree", "40"});
  CHECK(r.code == 3);
  CHECK(Json::parse(r.err).at("error").at("kind") == "resource");
}

TEST_CASE("help exits 0") { CHECK(invoke({"--help"}).code == 0); }

TEST_CASE("dp5 chain certificate") {
  Run r = invoke({"examples", "dp5-chain"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("zero") == true);
  CHECK(j.at("certificate") == "c = [Z2] + [Z5] + [pt] - [pt'] - [Z2'] - [Z5'] = 0");
}

TEST_CASE("word round trip") {
  const Json word = Json::parse(invoke({"examples", "dp5-chain"}).out).at("word");
  Run r = invoke({"links", "c", word.dump()});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out).at("zero") == true);
  Run rc = invoke({"links", "rationality-center", example("dp5_chain_word.json")});
  CHECK(rc.code == 0);
  CHECK(Json::parse(rc.out).at("rationality_center").at("total_degree") == 1);
}

TEST_CASE("illegal move is reported") {
  Json word = Json::parse(invoke({"examples", "dp5-chain"}).out).at("word");
  word["moves"].erase(0);
  Run r = invoke({"links", "c", word.dump()});
  CHECK(r.code == 2);
  CHECK(Json::parse(r.err).at("error").at("message").get<std::string>().find("move 1") != std::string::npos);
}

TEST_CASE("models from files") {
  CHECK(invoke({"surface", "mj", example("dp5_f20.json"), "--j", "2"}).code == 0);
  CHECK(invoke({"surface", "ns-char", example("dp6_s3.json")}).code == 0);
  Run loops = invoke({"links", "loops", example("dp6_s3.json"), "--trials", "50", "--seed", "9"});
  CHECK(loops.code == 0);
  CHECK(Json::parse(loops.out).at("zero") == 50);
}

TEST_CASE("identical inputs give identical output") {
  const auto a = invoke({"links", "verify-table", "--samples", "3", "--seed", "5"});
  const auto b = invoke({"links", "verify-table", "--samples", "3", "--seed", "5"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("cubic example") {
  Run r = invoke({"examples", "cubic"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("gassmann") == true);
  CHECK(j.at("isomorphic") == false);
}
