#include <doctest.h>
#include <json.hpp>

#include <cli.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "mgdual");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = mgdual::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return std::string(MGDUAL_FIXTURE_DIR) + "/" + name; }

std::string temp_problem(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("mgdual_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

void check_envelope(const json& doc) {
  REQUIRE(doc.is_object());
  CHECK(doc.contains("grading"));
  CHECK(doc["grading"].contains("vars"));
  CHECK(doc["grading"].contains("A"));
  CHECK(doc["grading"].contains("B"));
  REQUIRE(doc.contains("values"));
  CHECK(doc["values"].is_array());
  for (const auto& v : doc["values"]) {
    CHECK(v["degree"].is_array());
    CHECK(v["dim"].is_number_unsigned());
  }
  CHECK(doc["meta"].is_object());
}

}  // namespace

TEST_CASE("hilbert table for the GO ideal") {
  Outcome o = run({"hilbert", fixture("go.prob"), "--ideal", "I", "--max-degree", "4"});
  CHECK(o.code == 0);
  CHECK(o.out ==
        "H_I\n"
        "m | 0 1 2 3 4\n"
        "--+-----------\n"
        "H | 1 1 1 0 0\n");
  Outcome quiet = run({"--quiet", "hilbert", fixture("go.prob"), "--ideal", "I", "--max-degree", "4"});
  CHECK(quiet.out.rfind("m | 0", 0) == 0);
}

TEST_CASE("global flags may follow the subcommand") {
  Outcome o = run({"hilbert", fixture("go.prob"), "--ideal", "I", "--max-degree", "2", "--format", "csv"});
  CHECK(o.code == 0);
  CHECK(o.out == "m1,dim\n0,1\n1,1\n2,1\n");
}

TEST_CASE("dual-basis prints canonical functionals") {
  Outcome o = run({"dual-basis", fixture("hirzebruch.prob"), "--ideal", "F", "--degree", "(1,0)"});
  CHECK(o.code == 0);
  CHECK(o.out ==
        "D_0^(1,0)(F): dim 3\n"
        "  1 * d[1,2,0,0] + 1 * d[0,0,1,0]\n"
        "  1 * d[1,1,0,1]\n"
        "  1 * d[1,0,0,2]\n");
}

TEST_CASE("member reports a witness") {
  Outcome o = run({"member", fixture("go.prob"), "--ideal", "J", "--poly", "x2"});
  CHECK(o.code == 0);
  CHECK(o.out ==
        "x2 is not a member of J\n"
        "witness: 1 * d[2,0] + 1 * d[0,1] (value 1)\n");
  Outcome yes = run({"member", fixture("go.prob"), "--ideal", "I", "--poly", "x2 - x1^2", "--verify"});
  CHECK(yes.code == 0);
  CHECK(yes.out == "-x1^2 + x2 is a member of I\n");
}

TEST_CASE("every subcommand emits the JSON envelope") {
  const std::string go = fixture("go.prob");
  const std::vector<std::vector<std::string>> cmds = {
      {"validate", go},
      {"hilbert", go, "--ideal", "I", "--max-degree", "4"},
      {"dual-basis", go, "--ideal", "I", "--degree", "2"},
      {"member", go, "--ideal", "J", "--poly", "x2"},
      {"quotient", go, "--ideal", "J", "--by", "I", "--max-degree", "4"},
      {"quotient", go, "--ideal", "J", "--by", "x1", "--max-degree", "3"},
      {"saturate", go, "--ideal", "J", "--by", "I", "--window", "4"},
      {"multiplicity", go, "--ideal", "I", "--bound", "4"},
  };
  for (auto cmd : cmds) {
    CAPTURE(cmd[0]);
    cmd.insert(cmd.begin(), {"--format", "json"});
    Outcome o = run(cmd);
    CHECK(o.code == 0);
    json doc = json::parse(o.out);
    check_envelope(doc);
  }
  Outcome sat = run({"--format", "json", "saturate", go, "--ideal", "J", "--by", "I", "--window", "4"});
  json doc = json::parse(sat.out);
  CHECK(doc["meta"]["stabilized_at"].is_number_unsigned());
  CHECK(doc["meta"]["window_stabilized"] == true);
  CHECK(doc["meta"]["chain"].is_array());

  Outcome mult = run({"--format", "json", "multiplicity", go, "--ideal", "I", "--bound", "4"});
  json m = json::parse(mult.out);
  CHECK(m["meta"]["multiplicity"] == 3);
  CHECK(m["meta"]["complete"] == true);

  Outcome hz = run({"--format", "json", "hilbert", fixture("hirzebruch.prob"), "--ideal", "F", "--max-degree", "(1,1)"});
  json h = json::parse(hz.out);
  CHECK(h["values"][0]["degree"] == json::array({0, 0}));
}

TEST_CASE("two-dimensional table with dashes") {
  Outcome o = run({"--quiet", "hilbert", fixture("hirzebruch.prob"), "--ideal", "F", "--max-degree", "(1,1)"});
  CHECK(o.code == 0);
  CHECK(o.out ==
        "j\\i | 0 1\n"
        "----+-----\n"
        "  3 | 4 -\n"
        "  2 | 3 -\n"
        "  1 | 2 4\n"
        "  0 | 1 3\n"
        " -1 | - 2\n"
        " -2 | - 1\n");
}

TEST_CASE("verify agrees with the oracle") {
  for (const char* sub : {"hilbert", "quotient"}) {
    CAPTURE(sub);
    std::vector<std::string> cmd = {"--verify", sub, fixture("go.prob"), "--ideal", "J", "--max-degree", "5"};
    if (std::string(sub) == "quotient") cmd.insert(cmd.end(), {"--by", "I"});
    Outcome o = run(cmd);
    CHECK(o.code == 0);
    CHECK(o.err.find("agree with the oracle") != std::string::npos);
  }
  Outcome limited =
      run({"--verify", "--verify-limit", "1", "hilbert", fixture("go.prob"), "--ideal", "I", "--max-degree", "4"});
  CHECK(limited.code == 0);
  CHECK(limited.err.find("skipped") != std::string::npos);
}

TEST_CASE("run executes the queries in the file") {
  Outcome o = run({"run", fixture("go.prob")});
  CHECK(o.code == 0);
  CHECK(o.out.find("> hilbert I 4") != std::string::npos);
  CHECK(o.out.find("multiplicity 3 (complete)") != std::string::npos);
  CHECK(o.out.find("x2 is not a member of J") != std::string::npos);
}

TEST_CASE("errors exit with 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"hilbert", fixture("go.prob"), "--ideal", "I"}).code == 1);
  CHECK(run({"--format", "xml", "validate", fixture("go.prob")}).code == 1);
  CHECK(run({"validate", "/nonexistent/file.prob"}).code == 1);

  Outcome unknown = run({"hilbert", fixture("go.prob"), "--ideal", "K", "--max-degree", "2"});
  CHECK(unknown.code == 1);
  CHECK(unknown.err.rfind("error: ", 0) == 0);

  Outcome bad_degree = run({"hilbert", fixture("go.prob"), "--ideal", "I", "--max-degree", "(1,2)"});
  CHECK(bad_degree.code == 1);

  Outcome nonhom = run({"member", fixture("go.prob"), "--ideal", "I", "--poly", "x1 + x2"});
  CHECK(nonhom.code == 1);

  const std::string bad = temp_problem("bad.prob", "vars: x1 x2\ngrading:\n1 2\nideal I:\nx1 + x2\n");
  Outcome v = run({"validate", bad});
  CHECK(v.code == 1);
  CHECK(v.err.find("line 5") != std::string::npos);
  CHECK(v.err.find("not homogeneous") != std::string::npos);
  std::filesystem::remove(bad);
}

TEST_CASE("validate summarizes the file") {
  Outcome o = run({"validate", fixture("hirzebruch.prob")});
  CHECK(o.code == 0);
  CHECK(o.out.find("grading: 4 variables, rank 2") != std::string::npos);
  CHECK(o.out.find("ok\n") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}
