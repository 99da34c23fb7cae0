#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "gp/io.hpp"
#include "gp/report.hpp"

#include "nlohmann/json.hpp"

namespace fs = std::filesystem;

namespace {

// The binaries under test are handed over by ctest through the environment.
const char* cli_path() { return std::getenv("GP_CLI"); }
const char* diff_path() { return std::getenv("GP_DIFF"); }

int run(const std::string& command) {
  int rc = std::system(command.c_str());
  return rc < 0 ? rc : WEXITSTATUS(rc);
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("gp-cli-test-" + std::to_string(static_cast<long>(::getpid())));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

nlohmann::json report_at(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  nlohmann::json j;
  in >> j;
  return j;
}

}  // namespace

TEST_CASE("generate, validate, and solve round trip through files") {
  if (!cli_path()) return;  // built without the tools; ctest supplies GP_CLI
  std::string gp = cli_path();
  TempDir dir;

  CHECK(run(gp + " generate --family path --param 4 --out " + dir.file("p4.graph")) == 0);
  CHECK(run(gp + " validate --graph " + dir.file("p4.graph") + " --out " +
            dir.file("v.json")) == 0);
  CHECK(report_at(dir.file("v.json"))["pass"] == true);

  {
    std::ofstream f(dir.file("interior"));
    f << "1\n2\n";
    std::ofstream src(dir.file("f"));
    src << "1\t1\n2\t1\n";
  }
  CHECK(run(gp + " solve --graph " + dir.file("p4.graph") + " --q zero --f " +
            dir.file("f") + " --interior " + dir.file("interior") + " --out " +
            dir.file("u") + " > " + dir.file("solve.json")) == 0);
  gp::GraphFunction u = gp::load_function(dir.file("u"));
  CHECK(u.at(1) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(u.at(2) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(u.at(0) == 0.0);
  nlohmann::json solve = report_at(dir.file("solve.json"));
  CHECK(solve["pass"] == true);
  CHECK(solve["command"] == std::string("solve --graph ") + dir.file("p4.graph") +
                                " --q zero --f " + dir.file("f") + " --interior " +
                                dir.file("interior"));
}

TEST_CASE("lambda1 reproduces the closed form through the cli") {
  if (!cli_path()) return;
  TempDir dir;
  std::string out = dir.file("l.json");
  CHECK(run(std::string(cli_path()) +
            " lambda1 --generator path --param 5 --q zero --out " + out) == 0);
  nlohmann::json j = report_at(out);
  double lambda = std::stod(j["notes"]["lambda"].get<std::string>());
  CHECK(lambda == doctest::Approx(0.2928932188134524).epsilon(1e-12));
  CHECK(j["notes"]["method"] == "dense");
  CHECK(j["schema"] == "gp-report/1");
}

TEST_CASE("exit codes separate violations, bad input, and caps") {
  if (!cli_path()) return;
  std::string gp = cli_path();
  TempDir dir;
  {
    std::ofstream f(dir.file("disc.graph"));
    f << "0\t1\t1\n2\t3\t1\n";
  }
  std::string null = " > /dev/null 2>&1";
  CHECK(run(gp + " validate --graph " + dir.file("disc.graph") + null) == 1);
  CHECK(run(gp + " validate --graph " + dir.file("missing.graph") + null) == 2);
  CHECK(run(gp + " lambda1 --generator nosuch --param 2" + null) == 2);
  CHECK(run(gp + " lambda1 --generator path --param 5 --graph x.g" + null) == 2);
  CHECK(run("GP_MAX_VERTICES=10 " + gp + " lambda1 --generator lattice2 --param 4" + null) ==
        3);
  CHECK(run(gp + " --help" + null) == 0);
}

TEST_CASE("check-all is reproducible and the diff tool notices tampering") {
  if (!cli_path() || !diff_path()) return;
  std::string gp = cli_path();
  TempDir dir;
  std::string a = dir.file("a.json"), b = dir.file("b.json");
  std::string fast = " check-all --seed 7 --out ";
  CHECK(run(gp + fast + a) == 0);
  CHECK(run(gp + fast + b) == 0);
  CHECK(run(std::string(diff_path()) + " " + a + " " + b + " > /dev/null") == 0);

  nlohmann::json tampered = report_at(b);
  tampered["checks"][0]["value"] = 123.0;
  std::ofstream(b) << tampered.dump(2) << "\n";
  CHECK(run(std::string(diff_path()) + " " + a + " " + b + " > /dev/null") == 1);

  std::ofstream(b) << "{\"schema\": \"other/9\"}\n";
  CHECK(run(std::string(diff_path()) + " " + a + " " + b + " > /dev/null 2>&1") == 2);
}
