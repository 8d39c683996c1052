#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cmfock/cli.hpp"
#include "cmfock/json_io.hpp"

using namespace cmfock;
using cmfock::io::Json;

namespace {

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("fock apply: divided word equals its expanded form") {
  auto a = run({"fock", "apply", "--charge", "1,0", "--word", "[[1,1],[0,2]]"});
  auto b = run({"fock", "apply", "--charge", "1,0", "--word",
                "[[0,1],[1,1],[0,1]]"});
  REQUIRE(a.status == 0);
  REQUIRE(b.status == 0);
  CHECK(a.out == b.out);
  // round trip: the output re-parses to an equal in-memory vector
  FockVector v = io::fock_from_json(Json::parse(a.out));
  CHECK(io::fock_to_json(v).dump() + "\n" == a.out);
  CHECK_FALSE(v.is_zero());
}

TEST_CASE("canon rank 0 is the vacuum") {
  auto r = run({"canon", "--charge", "1,0", "--rank", "0"});
  REQUIRE(r.status == 0);
  Json j = Json::parse(r.out);
  REQUIRE(j.at("vectors").size() == 1);
  FockVector g = io::fock_from_json(j.at("vectors")[0].at("vector"));
  CHECK(g == FockVector::vacuum(Charge({1, 0})));
}

TEST_CASE("identical invocations are byte-identical") {
  auto a = run({"canon", "--charge", "2,0", "--rank", "3"});
  auto b = run({"canon", "--charge", "2,0", "--rank", "3"});
  CHECK(a.out == b.out);
  auto c = run({"chars", "jm", "--charge", "1,0", "--rank", "3"});
  auto d = run({"chars", "jm", "--charge", "1,0", "--rank", "3"});
  CHECK(c.out == d.out);
}

TEST_CASE("canon cache hits are byte-identical to recomputation") {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "cmfock_cache_test";
  std::filesystem::remove_all(dir);
  auto fresh = run({"canon", "--charge", "1,0", "--rank", "3"});
  auto write = run({"canon", "--charge", "1,0", "--rank", "3", "--cache", dir.string()});
  auto hit = run({"canon", "--charge", "1,0", "--rank", "3", "--cache", dir.string()});
  CHECK(fresh.out == write.out);
  CHECK(write.out == hit.out);
  REQUIRE(std::filesystem::exists(dir));

  SUBCASE("corrupted cache entries are recomputed") {
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      std::ifstream in(entry.path());
      Json j = Json::parse(in);
      in.close();
      j["checksum"] = "0";
      std::ofstream outf(entry.path());
      outf << j.dump();
    }
    auto again = run({"canon", "--charge", "1,0", "--rank", "3", "--cache", dir.string()});
    CHECK(again.out == fresh.out);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("expand-simple round trip") {
  std::string symbol =
      R"({"charge":[5,3,2,2],"m":1,"rows":[[0,1,2,4,5,7],[0,2,3,5],[1,2,4],[1,2,4]]})";
  auto r = run({"expand-simple", "--symbol", symbol});
  REQUIRE(r.status == 0);
  FockVector v = io::fock_from_json(Json::parse(r.out));
  CHECK(v.terms().size() == 18);
  auto text = run({"--format", "text", "expand-simple", "--symbol", symbol});
  CHECK(text.status == 0);
  CHECK(text.out.find("[ 0, 1, 2, 4, 5, 7 ]") != std::string::npos);
}

TEST_CASE("family commands") {
  auto r = run({"family", "min-b", "--charge", "5,5,3", "--multiset",
                "0,0,0,1,1,2,2,5,7,8,9,11,12"});
  REQUIRE(r.status == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("z") == Json::parse("[0,0,1,1,0,2,2,5,7,8,9,11,12]"));

  auto e = run({"family", "enum", "--charge", "3,2", "--multiset", "0,1,2,0,1"});
  REQUIRE(e.status == 0);
  CHECK(Json::parse(e.out).is_array());
}

TEST_CASE("chars subcommands emit sorted JSON arrays") {
  auto jm = run({"chars", "jm", "--charge", "1,0", "--rank", "2"});
  REQUIRE(jm.status == 0);
  CHECK(Json::parse(jm.out).is_array());
  auto con = run({"chars", "constructible", "--charge", "1,0", "--rank", "2"});
  REQUIRE(con.status == 0);
  CHECK(Json::parse(con.out).is_array());
}

TEST_CASE("exit codes") {
  SUBCASE("usage errors exit 2") {
    CHECK(run({"canon", "--rank", "1"}).status == 2);  // missing --charge
    CHECK(run({"nonsense"}).status == 2);
  }
  SUBCASE("computational failures exit 3 with a JSON diagnostic") {
    auto r = run({"family", "min-b", "--charge", "2", "--multiset", "3,3"});
    CHECK(r.status == 3);
    Json diag = Json::parse(r.err);
    CHECK(diag.at("error") == "InfeasibleKey");
  }
  SUBCASE("failing checks exit nonzero") {
    auto r = run({"check", "conj", "--which", "nope"});
    CHECK(r.status == 3);
  }
}

TEST_CASE("check subcommands run at smoke scale") {
  auto serre = run({"check", "serre", "--level-max", "2", "--n-max", "1"});
  CHECK(serre.status == 0);
  auto oracle = run({"check", "oracle", "--rank-max", "1"});
  CHECK(oracle.status == 0);
  auto conj = run({"check", "conj", "--which", "min_b", "--charge", "1,0",
                   "--n-max", "2"});
  CHECK(conj.status == 0);
  // one JSON object per checked key
  std::istringstream lines(conj.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    Json j = Json::parse(line);
    CHECK(j.at("pass") == true);
    ++count;
  }
  CHECK(count > 0);
}
