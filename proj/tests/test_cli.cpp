#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "kawa/certificate.hpp"

namespace fs = std::filesystem;

namespace
{

int run(const std::string& args)
{
    const std::string cmd = std::string(KAWA_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

const fs::path& work()
{
    static const fs::path p = [] {
        fs::path d = fs::temp_directory_path() / "kawa_test_cli";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return p;
}

std::string cfg() { return std::string("--config ") + KAWA_CONFIG_PATH; }

} // namespace

TEST_CASE("usage and configuration errors")
{
    CHECK(run("") == 2);
    CHECK(run("--bogus approx") == 2);
    const fs::path bad = work() / "bad.json";
    std::ofstream(bad) << R"({"N": 500, "N0": 300})";
    CHECK(run("approx --config " + bad.string()) == 2);
    CHECK(run("approx --config " + (work() / "none.json").string()) == 2);
}

TEST_CASE("stages without their inputs")
{
    const std::string out = "--out " + (work() / "empty").string();
    CHECK(run("stability " + cfg() + " " + out) == 3);
    CHECK(run("prove " + cfg() + " " + out) == 3);
    CHECK(run("export-plot " + cfg() + " " + out) == 3);
}

TEST_CASE("approx, prove and export-plot on the shipped configuration")
{
    const fs::path out = work() / "run";
    const std::string o = "--out " + out.string();
    REQUIRE(run("approx " + cfg() + " " + o) == 0);
    CHECK(fs::exists(out / "stages" / "approx.json"));
    REQUIRE(run("prove " + cfg() + " " + o + " --jobs 1") == 0);
    const auto j = kawa::io::json::parse(kawa::io::read_file((out / "stages" / "prove.json").string()));
    CHECK(j["certificate"]["status"] == "Proven");
    CHECK(j["certificate"]["periodic"]["status"] == "Proven");

    REQUIRE(run("export-plot " + cfg() + " " + o) == 0);
    std::ifstream csv(out / "u0.csv");
    std::string line;
    std::getline(csv, line);
    CHECK(line == "x,u0");
    int rows = 0;
    while (std::getline(csv, line))
        ++rows;
    CHECK(rows == 2048);
    CHECK(fs::exists(out / "zu_vs_d.csv"));
    fs::remove_all(work());
}
