// Exercises the command-line contract: exit codes, manifests, the ball
// cache, and the preset / fixture correspondence.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "nuphase/io.hpp"
#include "nuphase/presets.hpp"

namespace fs = std::filesystem;
using namespace nuphase;

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
    std::cout << (ok ? "[ok] " : "[FAIL] ") << what << std::endl;
    if (!ok) ++failures;
}

std::string cli_path() {
#ifdef NUPHASE_CLI_PATH
    return NUPHASE_CLI_PATH;
#else
    return "nuphase";
#endif
}

int run_cli(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

int main() {
    const fs::path tmp =
        fs::temp_directory_path() / ("nuphase_cli_" + std::to_string(::getpid()));
    fs::create_directories(tmp);
    const auto file = [&](const std::string& name) { return (tmp / name).string(); };

    check(run_cli("table --out " + file("t.csv")) == 0, "table exits 0");
    check(fs::exists(file("t.csv")) && fs::exists(file("t.csv") + ".manifest.json"),
          "outputs are paired with manifests");

    check(run_cli("certify --k 12 --family rac --out " + file("c.json")) == 0,
          "certify exits 0 on a verdict");
    check(run_cli("certify --k 3 --family basic") == 2, "k too small exits 2");
    check(run_cli("frobnicate") == 2, "unknown command exits 2");
    check(run_cli("certify --k 12 --family rac --bogus-flag 1") == 2, "bad flag exits 2");
    check(run_cli("ball --preset dodecahedron --radius 4 --budget 50 --out " + file("b.bin")) == 3,
          "vertex budget exits 3");

    check(run_cli("ball --preset pentagon --radius 3 --out " + file("p.ball") + " --cache " +
                  file("cache")) == 0,
          "ball build populates the cache");
    check(run_cli("ball --preset pentagon --radius 3 --no-build --out " + file("p2.ball") +
                  " --cache " + file("cache")) == 0,
          "cache hit under --no-build");
    check(run_cli("ball --preset pentagon --radius 4 --no-build --out " + file("p3.ball") +
                  " --cache " + file("cache")) == 2,
          "cache miss under --no-build exits 2");
    check(run_cli("cycles --graph " + file("p.ball") + " --N 8 --out " + file("cy.csv")) == 0,
          "cycles consumes the cached ball");

    // built-in presets match the hand-written nerve fixtures exactly
    const fs::path fixtures = fs::path(NUPHASE_FIXTURE_DIR);
    check(nerve_json(preset_system("dodecahedron")) ==
              Json::parse(read_file((fixtures / "dodecahedron.json").string())),
          "dodecahedron preset matches its fixture");
    check(nerve_json(preset_system("pentagon")) ==
              Json::parse(read_file((fixtures / "pentagon.json").string())),
          "pentagon preset matches its fixture");
    check(nerve_json(preset_system("free-product-4")) ==
              Json::parse(read_file((fixtures / "free-product-4.json").string())),
          "free-product preset matches its fixture");

    // a fixture file also works as --nerve input
    check(run_cli("growth --nerve " + (fixtures / "dodecahedron.json").string() + " --out " +
                  file("g.json")) == 0,
          "growth accepts fixture nerve files");
    const Json g = Json::parse(read_file(file("g.json")));
    check(g["root"] == "0.127016653793", "fixture growth root");

    fs::remove_all(tmp);
    if (failures == 0) std::cout << "cli contract ok" << std::endl;
    return failures;
}
