// End-to-end checks against the installed binary, driven through the shell.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifndef PMFP_CLI_PATH
#error "PMFP_CLI_PATH must point at the pmfp executable"
#endif

namespace {

namespace fs = std::filesystem;

int run(const std::string& args) {
  const std::string cmd = std::string(PMFP_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

}  // namespace

TEST_SUITE("cli_binary") {

TEST_CASE("usage problems exit 64") {
  CHECK(run("") == 64);
  CHECK(run("frobnicate") == 64);
  CHECK(run("solve") == 64);  // --config is required
}

TEST_CASE("help exits 0") {
  CHECK(run("--help") == 0);
}

TEST_CASE("solve exits by certificate status") {
  const fs::path dir = fresh_dir("pmfp_bin_solve");
  write(dir / "ok.cfg",
        "space.kind = max\nmap.expr = (x + y) / 6\nstart = 1 2\n"
        "spec.mode = mixed_arg\nspec.k = 0.16666666666666666\nspec.l = 0.16666666666666666\n");
  CHECK(run("solve --config " + (dir / "ok.cfg").string() + " --out " + (dir / "out").string()) ==
        0);
  CHECK(fs::exists(dir / "out" / "certificate.json"));
  CHECK(fs::exists(dir / "out" / "trace.json"));

  write(dir / "stationary.cfg", "space.kind = max\nmap.expr = (x + y) / 2\nstart = 1 1\n");
  CHECK(run("solve --config " + (dir / "stationary.cfg").string() + " --out " +
            (dir / "out2").string()) == 3);

  write(dir / "bad.cfg", "space.kind = euclid\n");
  CHECK(run("solve --config " + (dir / "bad.cfg").string()) == 64);
}

TEST_CASE("demo is byte-deterministic for a fixed seed") {
  const fs::path dir = fresh_dir("pmfp_bin_demo");
  REQUIRE(run("demo --seed 42 --out " + (dir / "a").string()) == 0);
  REQUIRE(run("demo --seed 42 --out " + (dir / "b").string()) == 0);
  const char* files[] = {"demo_example_certificate.json", "demo_example_trace.json",
                         "demo_boundary_probe.json"};
  for (const char* name : files) {
    CAPTURE(name);
    CHECK(slurp(dir / "a" / name) == slurp(dir / "b" / name));
  }
}

TEST_CASE("check-axioms propagates violations to the exit code") {
  const fs::path dir = fresh_dir("pmfp_bin_axioms");
  write(dir / "m.txt", "2\n2 1\n1 1\n");
  write(dir / "bad.cfg",
        "space.kind = tabulated\nspace.matrix = " + (dir / "m.txt").string() + "\n");
  CHECK(run("check-axioms --config " + (dir / "bad.cfg").string() + " --out " +
            (dir / "out").string()) == 2);
  write(dir / "ok.cfg", "space.kind = max\n");
  CHECK(run("check-axioms --config " + (dir / "ok.cfg").string() + " --out " +
            (dir / "out2").string()) == 0);
}

}  // TEST_SUITE
