#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gbt/claims.hpp"
#include "gbt_tools/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run gbt_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = gbt::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return (std::filesystem::path(GBT_FIXTURE_DIR) / name).string(); }

}  // namespace

TEST_CASE("classify reports the axiom profile") {
  const Run r = gbt_run({"classify", fixture("e36.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("T1_2  true") != std::string::npos);
  CHECK(r.out.find("T1    false") != std::string::npos);
  const Run j = gbt_run({"classify", fixture("e36.json"), "--format", "json"});
  CHECK(j.out.find("\"T1_2\": true") != std::string::npos);
}

TEST_CASE("check evaluates a named predicate") {
  const Run r = gbt_run({"check", fixture("e11.json"), "g-closed-wrt", "--side", "1", "--set", "a"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
  CHECK(gbt_run({"check", fixture("e13.json"), "closure", "--side", "1", "--set", "{b}"}).out == "{b,c}\n");
  CHECK(gbt_run({"check", fixture("e11.json"), "closure", "--set", "a"}).code == 1);
  CHECK(gbt_run({"check", fixture("e11.json"), "nonsense"}).code == 1);
}

TEST_CASE("validate rejects union escapes unless completion is requested") {
  const auto path = std::filesystem::temp_directory_path() / "gbt_cli_escape.json";
  {
    std::ofstream out(path);
    out << R"({"points":["a","b"],"mu1":[["a"],["b"]],"mu2":[]})";
  }
  const Run bad = gbt_run({"validate", path.string()});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("union") != std::string::npos);
  const Run ok = gbt_run({"validate", "--complete-unions", path.string()});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("completed mu1 with {a,b}") != std::string::npos);
  std::filesystem::remove(path);
  CHECK(gbt_run({"validate", "/nonexistent.json"}).code == 1);
}

TEST_CASE("mine finds a T0 space that is not T1/4") {
  const Run r = gbt_run({"mine", "--require", "T0", "--forbid", "T1_4", "--n", "3", "--workers", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("re-verified") != std::string::npos);
  CHECK(r.out.find("status: found") != std::string::npos);
  const Run none = gbt_run({"mine", "--require", "T1_4", "--forbid", "T3_8", "--n", "3"});
  CHECK(none.out.find("status: exhausted") != std::string::npos);
}

TEST_CASE("census, claims and lattice outputs are byte-identical across runs") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"census", "--n", "3", "--symmetry", "perm"},
        std::vector<std::string>{"census", "--n", "2", "--format", "json"},
        std::vector<std::string>{"classify", fixture("e35.json")},
        std::vector<std::string>{"claims", "--format", "json"},
        std::vector<std::string>{"lattice", "--n", "3"}}) {
    const Run a = gbt_run(args);
    const Run b = gbt_run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("claims exits zero when statuses match the committed expectations") {
  const Run r = gbt_run({"claims"});
  CHECK(r.code == 0);
  CHECK(r.out.find("EX-14") != std::string::npos);
  CHECK(gbt_run({"claims", "--explain", "THM-12"}).out.find(gbt::find_claim("THM-12").quote) != std::string::npos);
  CHECK(gbt_run({"claims", "--explain", "THM-0"}).code == 1);
}

TEST_CASE("lattice contains the verified chain and refuted reverse edges") {
  const Run r = gbt_run({"lattice", "--n", "3"});
  for (const char* edge : {"\"T1_2\" -> \"T5_8\";", "\"T5_8\" -> \"T3_8\";", "\"T3_8\" -> \"T1_4\";",
                           "\"T1_4\" -> \"T0\";"})
    CHECK_MESSAGE(r.out.find(edge) != std::string::npos, edge);
  CHECK(r.out.find("\"T0\" -> \"T1_4\" [style=dashed") != std::string::npos);
  CHECK(r.out.find("\"T5_8\" -> \"T1_2\" [style=dashed") != std::string::npos);
}

TEST_CASE("usage errors exit with code one") {
  CHECK(gbt_run({}).code == 1);
  CHECK(gbt_run({"frobnicate"}).code == 1);
  CHECK(gbt_run({"census", "--n", "9"}).code == 1);
  CHECK(gbt_run({"classify", fixture("e11.json"), "--format", "xml"}).code == 1);
  CHECK(gbt_run({"--help"}).code == 0);
}
