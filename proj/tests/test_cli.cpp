#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "doctest.h"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

const std::string kCli = RAMIKIT_CLI;
const std::string kData = RAMIKIT_DATA;
const std::string kTestData = RAMIKIT_TEST_DATA;

Run run(const std::string &args, const std::string &env = "") {
  Run r;
  FILE *p = popen((env + " " + kCli + " " + args + " 2>/dev/null").c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
    r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::filesystem::path &p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string trefoil() { return kData + "/trefoil.knot"; }
std::string fig8() { return kData + "/fig8.knot"; }

} // namespace

TEST_CASE("info") {
  auto r = run("info " + trefoil());
  CHECK(r.code == 0);
  CHECK(r.out.find("abelianization: Z\n") != std::string::npos);
  CHECK(r.out.find("meridian: a, generates") != std::string::npos);

  r = run("info " + fig8() + " --json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["invariants"]["free_rank"] == 1);
  CHECK(j["invariants"]["torsion"].empty());
  CHECK(j["valid"] == true);

  CHECK(run("info " + kTestData + "/bad_syntax.knot").code == 2);
  CHECK(run("info " + kTestData + "/not_a_knot.knot").code == 2);
  CHECK(run("info /nonexistent/file.knot").code == 2);
}

TEST_CASE("ramify") {
  auto r = run("ramify " + trefoil() + " --cyclic 2 -p 3 --format json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["cover"]["inertia"].size() == 1);
  CHECK(j["cover"]["inertia"][0]["ramification_index"] == 2);
  CHECK(j["cover"]["h1_quotient"]["group"] == "Z/3");
  CHECK(j["cohomology"][0] == nlohmann::json{{"p", 3},
                                             {"dim_h1_U", 2},
                                             {"dim_unramified", 1},
                                             {"dim_h1_quotient", 1},
                                             {"inflation_bijective", true}});
  CHECK(j["cover"]["coset_table"]["action"]["a"] == nlohmann::json{2, 1});

  r = run("ramify " + trefoil() + " --cyclic 1 --format json");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["cover"]["h1_quotient"]["group"] == "0");

  r = run("ramify " + trefoil() + " --perm \"a=(1 2);b=(2 3)\" --format json");
  CHECK(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["cover"]["ramification_indices"] == nlohmann::json{1, 2});

  CHECK(run("ramify " + trefoil() + " --gens \"aa,bA\" --format json").code == 0);
}

TEST_CASE("ramify error codes") {
  CHECK(run("ramify " + trefoil() + " --perm \"a=(1 2);b=(1 3 2)\"").code == 4);
  CHECK(run("ramify " + trefoil() + " --perm \"a=(1 2\"").code == 4);
  CHECK(run("ramify " + trefoil() + " --gens \"aq\"").code == 4);
  CHECK(run("ramify " + trefoil()).code == 4);
  CHECK(run("ramify " + trefoil() + " --cyclic 5 --max-cosets 3").code == 3);
  CHECK(run("ramify " + trefoil() + " --cyclic 2 -p 4").code == 2);
  CHECK(run("ramify " + trefoil() + " --cyclic 2 --perm \"a=(1 2)\"").code == 2);
}

TEST_CASE("coset limit from the environment") {
  CHECK(run("ramify " + trefoil() + " --cyclic 5").code == 0);
  CHECK(run("ramify " + trefoil() + " --cyclic 5", "RAMIKIT_MAX_COSETS=3").code == 3);
  // an explicit flag wins over the environment
  CHECK(run("ramify " + trefoil() + " --cyclic 5 --max-cosets 10", "RAMIKIT_MAX_COSETS=3").code == 0);
}

TEST_CASE("verify") {
  auto r = run("verify " + trefoil() + " --max-index 3 --max-sym 4 -p 2,3,5 --seed 7");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["knot"] == "trefoil");
  CHECK(j["suites"].size() == 10);
  for (const auto &s : j["suites"])
    CHECK(s["status"] == "pass");

  CHECK(run("verify " + trefoil() + " --max-index 1").code == 0);
  CHECK(run("verify " + kTestData + "/bad_syntax.knot").code == 2);
  CHECK(run("verify " + trefoil() + " --max-sym 9").code == 2);
}

TEST_CASE("verify output is byte-identical across runs") {
  const auto dir = std::filesystem::temp_directory_path() / "ramikit_cli_test";
  std::filesystem::create_directories(dir);
  const auto a = dir / "a.json", b = dir / "b.json";
  const std::string args = "verify " + fig8() + " --max-index 3 --max-sym 4 -p 2,5 --seed 3 --out ";
  REQUIRE(run(args + a.string()).code == 0);
  REQUIRE(run(args + b.string()).code == 0);
  CHECK(!slurp(a).empty());
  CHECK(slurp(a) == slurp(b));
  std::filesystem::remove_all(dir);
}

TEST_CASE("census") {
  auto r = run("census " + trefoil() + " --max-index 3 -p 2,3");
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string header, line;
  std::getline(lines, header);
  CHECK(header == "label,index,ramification_indices,h1_U,h1_U_torsion_order,h1_quotient,"
                  "h1_quotient_order,boundary_tori,unramified_h1_p2,unramified_h1_p3");
  std::map<std::string, std::string> rows;
  while (std::getline(lines, line))
    rows[line.substr(0, line.find(','))] = line;
  CHECK(rows.at("cyclic:1") == "cyclic:1,1,1,Z,1,0,1,1,0,0");
  CHECK(rows.at("cyclic:2") == "cyclic:2,2,2,Z + Z/3,3,Z/3,3,1,0,1");
  CHECK(rows.at("cyclic:3") == "cyclic:3,3,3,Z + Z/2 + Z/2,4,Z/2 + Z/2,4,1,2,0");

  r = run("census " + trefoil() + " --max-index 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("low-index:1.1,1,1,Z,1,0,1,1,") != std::string::npos);

  // no longitude: empty boundary column
  r = run("census " + fig8() + " --max-index 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("cyclic:1,1,1,Z,1,0,1,,0,0") != std::string::npos);

  r = run("census " + trefoil() + " --max-index 2 --format json");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["covers"].size() >= 2);
}

TEST_CASE("wirtinger") {
  auto r = run("wirtinger --pd \"[[1,4,2,5],[3,6,4,1],[5,2,6,3]]\" --label tre");
  CHECK(r.code == 0);
  CHECK(r.out.find("gens: x1 x2 x3") != std::string::npos);
  CHECK(r.out.find("meridian: x1") != std::string::npos);
  CHECK(run("wirtinger --pd \"[[1,2,3]]\"").code == 2);
  CHECK(run("wirtinger --pd \"[[1,3,2,4],[3,1,4,2]]\"").code == 2);
}
