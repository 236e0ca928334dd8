#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "metacode/cli.hpp"
#include "metacode/error.hpp"

using namespace metacode;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  auto r = run(args);
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return nlohmann::json::parse(r.out);
}

std::string temp_file(const std::string& name, const std::string& body) {
  std::string path = (std::filesystem::temp_directory_path() / name).string();
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("group info: dihedral of order 14") {
    auto j = run_json({"group", "info", "--named", "D:14"});
    CHECK(j["order"] == 14);
    CHECK(j["center"]["order"] == 1);
    CHECK(j["conjugacy_classes"] == 5);
    CHECK(j["abelian"] == false);
  }

  TEST_CASE("group info from a spec file") {
    // generalized quaternion of order 16
    auto path = temp_file("cli_q16.json", R"({"N":8,"M":2,"r":7,"s":4,"name":"Q16"})");
    auto j = run_json({"group", "info", "--spec", path});
    CHECK(j["order"] == 16);
    CHECK(j["center"]["order"] == 2);
    CHECK(j["conjugacy_classes"] == 7);

    auto prod = temp_file("cli_prod.json", R"({"product":[{"named":"C:3"},{"named":"D:8"}],"coprime":true})");
    auto p = run_json({"group", "info", "--spec", prod});
    CHECK(p["order"] == 24);
    CHECK(p["center"]["order"] == 6);
  }

  TEST_CASE("bad specs exit 1") {
    // b^-1 a b = a^2 is not an automorphism of C4
    auto bad = temp_file("cli_bad.json", R"({"N":4,"M":2,"r":2,"s":0})");
    auto r = run({"group", "info", "--spec", bad});
    CHECK(r.code == kExitInvalid);
    CHECK(r.err.find("InconsistentPresentation") != std::string::npos);

    auto missing = temp_file("cli_missing.json", R"({"N":4,"r":3})");
    r = run({"group", "info", "--spec", missing});
    CHECK(r.code == kExitInvalid);
    CHECK(r.err.find("SchemaError") != std::string::npos);

    auto extra = temp_file("cli_extra.json", R"({"N":4,"M":2,"r":3,"t":1})");
    CHECK(run({"group", "info", "--spec", extra}).code == kExitInvalid);
    auto garbage = temp_file("cli_garbage.json", "{N: 4");
    CHECK(run({"group", "info", "--spec", garbage}).code == kExitInvalid);

    CHECK_THROWS_AS(group_from_json_text(R"({"N":-4,"M":2,"r":3})"), Error);
  }

  TEST_CASE("usage errors exit 1, help exits 0") {
    auto bogus = run({"bogus"});
    CHECK(bogus.code == kExitInvalid);
    CHECK(bogus.err.find("'bogus'") != std::string::npos);
    auto flag = run({"group", "info", "--named", "D:14", "--wat"});
    CHECK(flag.code == kExitInvalid);
    CHECK(flag.err.find("--wat") != std::string::npos);
    CHECK(run({}).code == kExitInvalid);
    CHECK(run({"group", "info"}).code == kExitInvalid);
    CHECK(run({"pci", "list", "--named", "D:14"}).code == kExitInvalid);  // --q missing
    CHECK(run({"pci", "list", "--named", "D:14", "--q", "6"}).code == kExitInvalid);
    CHECK(run({"pci", "list", "--named", "D:14", "--q", "7"}).code == kExitInvalid);  // not semisimple
    CHECK(run({"code", "build", "--example", "f2-g39", "--budget", "10"}).code == kExitInvalid);
    CHECK(run({"code", "build", "--example", "nope"}).code == kExitInvalid);
    auto h = run({"--help"});
    CHECK(h.code == kExitOk);
    CHECK(h.out.find("verify") != std::string::npos);
    CHECK(run({"unit", "--help"}).code == kExitOk);
  }

  TEST_CASE("field") {
    auto j = run_json({"field", "--p", "2", "--e", "4"});
    CHECK(j["q"] == 16);
    CHECK(j["modulus"].size() == 5);
    CHECK(j["modulus"].back() == 1);
    CHECK(run({"field", "--p", "4"}).code == kExitInvalid);
  }

  TEST_CASE("pci list over F_5 D12") {
    auto j = run_json({"pci", "list", "--named", "D:12", "--q", "5", "--elements"});
    // four linear characters and two of degree 2
    CHECK(j.size() == 6);
    u64 dim = 0;
    for (auto& e : j) {
      u64 m = e["matrix_size"], f = e["field_degree"];
      dim += m * m * f;
      CHECK(e["terms"].size() == e["support"]);
    }
    CHECK(dim == 12);
    auto text = run({"pci", "list", "--named", "D:12", "--q", "5", "--elements"});
    CHECK(text.code == 0);
    // "i j c" lines: the trivial pci has all twelve coefficients 1/12 = 3 in F_5
    CHECK(text.out.find("\n0 0 3\n") != std::string::npos);
  }

  TEST_CASE("ssp list with verification") {
    auto j = run_json({"ssp", "list", "--named", "G39", "--verify"});
    REQUIRE(j.size() == 3);
    for (auto& p : j) CHECK(p["verified"] == true);
  }

  TEST_CASE("algebra wedderburn and isocheck") {
    auto w = run_json({"algebra", "wedderburn", "--named", "D:16", "--q", "7"});
    CHECK(w["total_dimension"] == 16);
    auto same = run_json({"algebra", "isocheck", "--named1", "D:16", "--named2", "SD:16", "--q", "5"});
    CHECK(same["isomorphic"] == true);
    auto diff = run_json({"algebra", "isocheck", "--named1", "D:16", "--named2", "SD:16", "--q", "7"});
    CHECK(diff["isomorphic"] == false);
  }

  TEST_CASE("unit") {
    auto j = run_json({"unit", "--named", "D:14", "--q", "3", "--kind", "bicyclic", "--g", "b", "--h", "a"});
    CHECK(j["verified"] == true);
    auto r = run({"unit", "--named", "G39", "--q", "2", "--kind", "alt", "--g", "a", "--k", "2"});
    CHECK(r.code == kExitInvalid);
    auto c = run_json({"unit", "--named", "D:14", "--q", "3", "--kind", "constructed", "--pci", "2", "--s", "1", "--k", "1"});
    CHECK(c["verified"] == true);
  }

  TEST_CASE("code build and genmat") {
    auto j = run_json({"code", "build", "--example", "f2-g39"});
    CHECK(j["n"] == 39);
    CHECK(j["k"] == 12);
    CHECK(j["d_lo"] == 12);
    CHECK(j["d_hi"] == 12);
    CHECK(j["exact"] == true);

    auto whole = run_json({"code", "build", "--named", "D:12", "--q", "5", "--pci", "5"});
    CHECK(whole["k"] == 4);

    auto g = run({"code", "genmat", "--named", "D:12", "--q", "5", "--pci", "5"});
    REQUIRE(g.code == 0);
    CHECK(g.out.rfind("5 12 4\n", 0) == 0);

    // left ideal of e <b>^, the same through --beta and --left
    auto b1 = run_json({"code", "build", "--named", "D:12", "--q", "5", "--pci", "5", "--beta", "1"});
    auto b2 = run_json({"code", "build", "--named", "D:12", "--q", "5", "--pci", "5", "--left", "b"});
    CHECK(b1["k"] == 2);
    CHECK(b1["k"] == b2["k"]);
    CHECK(b1["d_hi"] == b2["d_hi"]);
  }

  TEST_CASE("distance output does not depend on the thread count") {
    auto a = run_json({"code", "build", "--example", "f3-d14-beta", "--threads", "1"});
    auto b = run_json({"code", "build", "--example", "f3-d14-beta", "--threads", "3"});
    CHECK(a == b);
    auto c = run_json({"code", "build", "--example", "f2-g39-central", "--force-interval", "--threads", "1"});
    auto d = run_json({"code", "build", "--example", "f2-g39-central", "--force-interval", "--threads", "2"});
    CHECK(c == d);
    CHECK(c["d_lo"] <= 2);
    CHECK(c["d_hi"] >= 2);
  }

  TEST_CASE("verify examples") {
    auto r = run({"verify", "examples", "--only", "f2-g39"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("PASS") == 0);
    CHECK(r.out.find("[39,12,12]") != std::string::npos);
    auto j = run_json({"verify", "examples", "--only", "f2-g27,f5-d12"});
    CHECK(j["results"].size() == 2);
    CHECK(j["failed"] == 0);
    CHECK(run({"verify", "examples", "--only", "no-such-id"}).code == kExitInvalid);
  }

  TEST_CASE("json errors go to stderr as an object") {
    auto r = run({"--json", "pci", "list", "--named", "D:14", "--q", "7"});
    CHECK(r.code == kExitInvalid);
    auto j = nlohmann::json::parse(r.err);
    CHECK(j["error"] == "NotCoprime");
  }
}
