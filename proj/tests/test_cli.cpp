#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "galg/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = galg::cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json structured(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("structured");
  const Run r = run(args);
  return nlohmann::json::parse(r.out);
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("solve") {
  const Run r = run({"solve", "--group", "cyclic(2)", "--vars", "1", "--eq", "x1^2"});
  CHECK(r.code == 0);
  const auto j = structured({"solve", "--group", "cyclic(2)", "--vars", "1", "--eq", "x1^2"});
  CHECK(j["schema"] == "galg.report/1");
  CHECK(j["solutions"]["size"] == 2);
}

TEST_CASE("commutator equations are not split into lists") {
  const auto j = structured({"solve", "--group", "symmetric(3)", "--vars", "2", "--eq", "[x1,x2]"});
  CHECK(j["solutions"]["size"] == 18);
}

TEST_CASE("analyze the non-decomposable system") {
  const std::string path = temp_file("galg_comm_sq_cube.eqs", "vars 2\neq [x1,x2]\neq x1^2\neq x2^3\n");
  const Run r = run({"analyze", "--group", "symmetric(3)", "--vars", "2", "--system", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("not fully characteristic") != std::string::npos);
  const auto j = structured({"analyze", "--group", "symmetric(3)", "--system", path});
  CHECK(j["consistent"] == true);
  CHECK(j["decomposition"]["outcome"] == "no");
  CHECK(j["exact"]["outcome"] == "no");
  CHECK(j["decomposition"]["witness"]["point"].size() == 2);
}

TEST_CASE("decompose lists the family") {
  const auto j = structured({"decompose", "--group", "symmetric(3)", "--vars", "2", "--eq", "[x1,x2]"});
  CHECK(j["decomposition"]["verdict"] == "fully characteristic");
  CHECK(j["decomposition"]["family"].size() == 4);
}

TEST_CASE("closure of raw points warns and closes") {
  const Run r = run({"decompose", "--group", "symmetric(3)", "--tuple", "()", "--tuple", "(1,2)"});
  CHECK(r.code == 0);
  CHECK(r.err.find("warning") != std::string::npos);
  const auto j = structured({"closure", "--group", "symmetric(3)", "--tuple", "()", "--tuple", "(1,2)"});
  CHECK(j["is_algebraic"] == false);
  CHECK(j["closure"]["size"] == 4);
}

TEST_CASE("identities and gcheck") {
  const Run a = run({"identities", "--group", "symmetric(3)", "--vars", "2", "--eq", "[x1,x2]", "--maxlen", "4"});
  CHECK(a.code == 0);
  const auto g = structured({"gcheck", "--group", "symmetric(3)", "--coefficients", "--eq", "x1 g2 = g2 x1"});
  CHECK(g["consistent"] == true);
  CHECK(g["over_group"]["g_verbal"] == false);
  const auto k = structured({"gcheck", "--group", "symmetric(3)", "--coefficients", "--eq", "x1^6", "--target-power",
                             "2", "--maxlen", "2", "--samples", "20"});
  CHECK(k["consistent"] == true);
  CHECK(k["over_target"]["marked_iso"] == true);
}

TEST_CASE("scan") {
  const auto j = structured({"scan", "--group", "cyclic(2)", "--vars", "1"});
  REQUIRE(j["groups"].size() == 1);
  const auto& row = j["groups"][0];
  CHECK(row["algebraic_sets"] == row["fully_characteristic"]);
  CHECK(row["oracle_agreement"] == row["algebraic_sets"]);

  const auto s = structured({"scan", "--group", "symmetric(3)", "--vars", "2", "--samples", "0"});
  CHECK(s["groups"][0]["oracle_agreement"] == s["groups"][0]["algebraic_sets"]);

  const Run empty = run({"scan"});
  CHECK(empty.code == 0);
  CHECK(structured({"scan"})["groups"].empty());
}

TEST_CASE("scan output does not depend on jobs") {
  const std::vector<std::string> base = {"scan", "--group", "dihedral(4)", "--group", "symmetric(3)",
                                         "--vars", "2", "--seed", "9", "--format", "structured"};
  auto with_jobs = [&](const char* jobs) {
    auto args = base;
    args.push_back("--jobs");
    args.push_back(jobs);
    return run(args).out;
  };
  CHECK(with_jobs("1") == with_jobs("3"));
}

TEST_CASE("exit codes and error context") {
  CHECK(run({"solve", "--group", "cyclic(2", "--eq", "x1"}).code == 1);
  const Run bad_eq = run({"solve", "--group", "cyclic(2)", "--eq", "x1^"});
  CHECK(bad_eq.code == 1);
  CHECK(bad_eq.err.find("position") != std::string::npos);
  const std::string path = temp_file("galg_bad.eqs", "vars 1\neq x2\n");
  const Run bad_file = run({"solve", "--group", "cyclic(2)", "--system", path});
  CHECK(bad_file.code == 1);
  CHECK(bad_file.err.find("line 2") != std::string::npos);
  CHECK(bad_file.err.find(path) != std::string::npos);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"solve", "--group", "cyclic(2)", "--vars", "0", "--eq", "x1"}).code == 1);
  CHECK(run({"solve", "--group", "symmetric(5)", "--vars", "4", "--eq", "x1", "--budget", "1000"}).code == 3);
  CHECK(run({"analyze", "--group", "symmetric(3)", "--vars", "2", "--eq", "[x1,x2]", "--budget", "10"}).code == 3);
  CHECK(run({"gcheck", "--group", "symmetric(3)", "--eq", "x1"}).code == 1);

  const std::string table = temp_file("galg_bad.table", "order 2\n0 1\n1 1\n");
  const Run bad_table = run({"solve", "--table", table, "--eq", "x1"});
  CHECK(bad_table.code == 1);
  CHECK(bad_table.err.find(table) != std::string::npos);
}

TEST_CASE("explicit tables") {
  const std::string table = temp_file("galg_c3.table", "order 3\n0 1 2\n1 2 0\n2 0 1\nnames e a b\n");
  const auto j = structured({"solve", "--table", table, "--eq", "x1^3"});
  CHECK(j["solutions"]["size"] == 3);
  CHECK(j["solutions"]["tuples"][1][0] == "a");
}
