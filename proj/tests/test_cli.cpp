#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "matchstick/cli.hpp"

using matchstick::run_cli;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh_dir(const char* name) {
  fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("enumerate prints one graph per line") {
  CliResult r = run({"enumerate", "--n", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "2:0-1\n");

  r = run({"enumerate", "--n", "3", "--workers", "2"});
  CHECK(r.code == 0);
  std::size_t count = 0;
  std::stringstream ss(r.out);
  std::string line;
  while (std::getline(ss, line)) ++count;
  CHECK(count == 3);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"enumerate"}).code == 2);           // missing --n
  CHECK(run({"enumerate", "--n", "0"}).code == 2);
  CHECK(run({"enumerate", "--n", "99"}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"census", "--n-max", "2"}).code == 2);  // missing --out
}

TEST_CASE("help exits with 0") {
  CliResult r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("enumerate") != std::string::npos);
  CHECK(r.out.find("census") != std::string::npos);
}

TEST_CASE("census, verify, render and plots work end to end") {
  fs::path dir = fresh_dir("matchstick_cli_test");
  std::string out_dir = (dir / "run").string();

  CliResult r = run({"census", "--n-max", "3", "--out", out_dir, "--restarts",
                     "64", "--workers", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("n=3 q=3 p=3") != std::string::npos);
  for (const char* artifact :
       {"catalog.json", "table1.csv", "table2.csv", "plots.csv",
        "unresolved.txt", "discrepancies.txt"}) {
    CHECK(fs::exists(fs::path(out_dir) / artifact));
  }
  CHECK(fs::exists(fs::path(out_dir) / "svg" / "3-3-1.svg"));
  CHECK(fs::exists(fs::path(out_dir) / "embeddings" / "3-3-1.xy"));

  std::string catalog = (fs::path(out_dir) / "catalog.json").string();
  CHECK(run({"verify", "--catalog", catalog}).code == 0);

  std::string render_dir = (dir / "render").string();
  CHECK(run({"render", "--catalog", catalog, "--out", render_dir}).code == 0);
  CHECK(fs::exists(fs::path(render_dir) / "3-3-1.svg"));

  std::string plots_dir = (dir / "plots").string();
  CHECK(run({"plots", "--catalog", catalog, "--out", plots_dir}).code == 0);
  CHECK(fs::exists(fs::path(plots_dir) / "plots.csv"));

  // Tampering with a graph makes verify fail with exit 1.
  std::string text;
  {
    std::ifstream in(catalog, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  std::string needle = "\"3:0-1,0-2,1-2\"";
  auto pos = text.find(needle);
  REQUIRE(pos != std::string::npos);
  text.replace(pos, needle.size(), "\"3:0-1,1-2\"");
  std::string tampered = (dir / "tampered.json").string();
  {
    std::ofstream outf(tampered, std::ios::binary);
    outf << text;
  }
  CHECK(run({"verify", "--catalog", tampered}).code == 1);

  // A missing file is a runtime failure, not a usage error.
  CHECK(run({"verify", "--catalog", (dir / "nope.json").string()}).code == 1);
}
