#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "doctest.h"
#include "tilepump/certify.hpp"
#include "tilepump/io/instance.hpp"
#include "tilepump/io/serialize.hpp"
#include "tptest/fixtures.hpp"

namespace fs = std::filesystem;
using tilepump::io::Json;

namespace {

const fs::path kFixtures = TILEPUMP_FIXTURE_DIR;

struct ScratchDir {
    fs::path dir = fs::temp_directory_path() / ("tilepump-cli-" + std::to_string(::getpid()));
    ScratchDir() { fs::create_directories(dir); }
    ~ScratchDir()
    {
        std::error_code ec;
        fs::remove_all(dir, ec);
    }
};

fs::path scratch()
{
    static const ScratchDir d;
    return d.dir;
}

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = {})
{
    const fs::path out = scratch() / "stdout.txt";
    const std::string cmd = env + (env.empty() ? "" : " ") + "\"" + TILEPUMP_CLI + "\" " + args + " > \"" +
                            out.string() + "\" 2> \"" + (scratch() / "stderr.txt").string() + "\"";
    const int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out);
    std::ostringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

std::string fixture_arg(const char* name)
{
    return "\"" + (kFixtures / (std::string(name) + ".json")).string() + "\"";
}

std::string write_file(const std::string& name, const std::string& text)
{
    const fs::path p = scratch() / name;
    std::ofstream(p) << text;
    return "\"" + p.string() + "\"";
}

}  // namespace

TEST_CASE("exit code 0 on success")
{
    auto a = run("analyze " + fixture_arg("col-n-tall"));
    CHECK(a.code == 0);
    auto j = Json::parse(a.out);
    CHECK(j["outcome"] == "Pumpable");
    CHECK(run("analyze " + fixture_arg("col-n-tall")).out == a.out);

    CHECK(run("bounds --tiles 2 --seed-size 1").code == 0);
    CHECK(run("pump " + fixture_arg("col-n") + " --i 1 --j 2").code == 0);
    CHECK(run("visibility " + fixture_arg("col-n") + " --side west").code == 0);
    CHECK(run("uturn " + fixture_arg("nshape")).code == 0);
    CHECK(run("--help").code == 0);

    const auto svg = scratch() / "out.svg";
    CHECK(run("render " + fixture_arg("col-n") + " -o \"" + svg.string() + "\" --overlay visibility:east").code == 0);
    CHECK(fs::file_size(svg) > 0);
}

TEST_CASE("verify round trip through files")
{
    auto a = run("analyze " + fixture_arg("fork"));
    REQUIRE(a.code == 0);
    const auto cert = write_file("cert.json", Json::parse(a.out)["certificate"].dump());
    auto v = run("verify " + fixture_arg("fork") + " " + cert);
    CHECK(v.code == 0);
    CHECK(Json::parse(v.out)["accepted"] == true);

    auto mangled = Json::parse(a.out)["certificate"];
    mangled["conflict"] = Json{{"x", 40}, {"y", 40}};
    auto bad = run("verify " + fixture_arg("fork") + " " + write_file("bad.json", mangled.dump()));
    CHECK(bad.code == 0);
    CHECK(Json::parse(bad.out)["accepted"] == false);
}

TEST_CASE("exit code 1 on usage errors")
{
    CHECK(run("").code == 1);
    CHECK(run("frobnicate").code == 1);
    CHECK(run("analyze").code == 1);
    CHECK(run("visibility " + fixture_arg("col-n") + " --side up").code == 1);
    CHECK(run("bounds --tiles 0 --seed-size 1").code == 1);
    CHECK(run("analyze " + fixture_arg("col-n") + " --limits bogus").code == 1);
    CHECK(run("analyze " + fixture_arg("col-n"), "TILEPUMP_BUDGET_MS=soon").code == 1);
}

TEST_CASE("exit code 2 on invalid instances")
{
    CHECK(run("analyze " + write_file("broken.json", "{\"tileset\": [")).code == 2);
    auto doc = Json::parse(tptest::fixture_text("line-e"));
    doc["path"][2]["tile"] = "zz";
    CHECK(run("analyze " + write_file("unknown.json", doc.dump())).code == 2);
    CHECK(run("analyze \"" + (scratch() / "missing.json").string() + "\"").code == 2);
    CHECK(run("analyze " + fixture_arg("col-n") + " --limits colour=3").code == 2);
}

TEST_CASE("exit code 3 when the budget runs out")
{
    auto doc = Json::parse(tptest::fixture_text("col-n"));
    Json path = Json::array();
    for (int y = 1; y <= 200000; ++y)
        path.push_back(Json{{"x", 0}, {"y", y}, {"tile", "t"}});
    doc["path"] = path;
    const auto file = write_file("long.json", doc.dump());
    CHECK(run("analyze " + file, "TILEPUMP_BUDGET_MS=1").code == 3);
}
