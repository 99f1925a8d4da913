#include <catch2/catch_amalgamated.hpp>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "ratiospace/serialize.hpp"

using ratiospace::Json;
namespace cli = ratiospace::cli;

namespace {

struct Result
{
    int code;
    std::string out;
    Json json() const { return Json::parse(out); }
};

Result invoke(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str()};
}

const std::string n2 = R"({"dim": 2, "generators": [[1, 0], [0, 1]]})";
const std::string n3 = R"({"dim": 3, "generators": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]})";

}   // namespace

TEST_CASE("faces on N^3 lists 8 faces", "[cli]")
{
    const Result r = invoke({"faces", "--input", n3});
    REQUIRE(r.code == cli::Success);
    const Json j = r.json();
    REQUIRE(j["schema"] == "ratiospace/v1");
    REQUIRE(j["verb"] == "faces");
    REQUIRE(j["lattice"]["count"] == 8);
    REQUIRE(j["lattice"]["faces"].size() == 8);
}

TEST_CASE("certificate on N^2 passes", "[cli]")
{
    const Result r = invoke({"certificate", "--input", n2});
    REQUIRE(r.code == cli::Success);
    REQUIRE(r.json()["verdict"] == "PASS");
    REQUIRE(r.json()["certificate"]["nerve_full_simplex"] == true);
}

TEST_CASE("blowup of N^2 by (1,0), (0,1) has interval fiber", "[cli]")
{
    const Result r = invoke({"blowup", "--input", R"({"monoid": )" + n2 + R"(, "f": [1, 0], "g": [0, 1]})"});
    REQUIRE(r.code == cli::Success);
    REQUIRE(r.json()["kind"] == "Interval");
}

TEST_CASE("reports are deterministic for a fixed seed", "[cli]")
{
    for (const std::string seed : {"0", "5"})
    {
        const auto a = invoke({"homotopy-verify", "--input", n2, "--seed", seed, "--samples", "2"});
        const auto b = invoke({"homotopy-verify", "--input", n2, "--seed", seed, "--samples", "2"});
        REQUIRE(a.code == cli::Success);
        REQUIRE(a.out == b.out);
    }
    const auto s0 = invoke({"nerve", "--input", n3, "--seed", "0"});
    const auto s1 = invoke({"nerve", "--input", n3, "--seed", "1"});
    REQUIRE(s0.json()["nerve"]["full_simplex"] == true);
    REQUIRE(s0.out != s1.out);
}

TEST_CASE("options after the verb and report file", "[cli]")
{
    const auto path = std::filesystem::temp_directory_path() / "ratiospace_cli_test.json";
    std::filesystem::remove(path);
    const auto r = invoke({"chains", "--input", n2, "--output", path.string()});
    REQUIRE(r.code == cli::Success);
    REQUIRE(r.out.empty());
    std::ifstream in(path);
    const Json j = Json::parse(in);
    REQUIRE(j["count"] == 3);
    std::filesystem::remove(path);
}

TEST_CASE("dot output", "[cli]")
{
    const auto r = invoke({"faces", "--input", n2, "--dot", "-"});
    REQUIRE(r.code == cli::Success);
    REQUIRE(r.out.find("digraph") != std::string::npos);
}

TEST_CASE("validation failure exits 1", "[cli]")
{
    const auto r = invoke({"ratio-validate", "--input",
                           R"({"monoid": )" + n2 + R"(, "point": {"chain": [[0, 1], [0], []], "maps": [[1, 1], [1, 0]]}})"});
    REQUIRE(r.code == cli::Failure);
    REQUIRE(r.json()["verdict"] == "FAIL");
    REQUIRE(r.json()["validation"]["violations"][0]["condition"] == "Normalization");
}

TEST_CASE("input errors exit 2 with an error object", "[cli]")
{
    struct Case
    {
        std::vector<std::string> args;
        std::string code;
    };
    const std::vector<Case> cases{
        {{"faces", "--input", "{"}, "InvalidInput"},
        {{"faces", "--input", R"({"dim": 2, "generators": [[1, 0], [-1, 0], [0, 1]]})"}, "NotSalient"},
        {{"faces", "--input", R"({"dim": 2, "generators": [[1, 0], [0, 0]]})"}, "ZeroGenerator"},
        {{"faces", "--input", R"({"dim": "two", "generators": []})"}, "InvalidInput"},
        {{"section", "--input", R"({"monoid": )" + n2 + R"(, "face": [5]})"}, "NotAFace"},
        {{"pi", "--input", R"({"monoid": )" + n2 + R"(, "chain": [[0, 1], []], "functional": [1, 0]})"}, "NotInteriorHom"},
        {{"blowup", "--input", R"({"monoid": )" + n2 + R"(, "f": [1, 0]})"}, "InvalidInput"},
        {{"fiber", "--input", R"({"monoid": )" + n3 + R"(, "rays": []})"}, "DimensionUnsupported"},
        {{"faces"}, "InvalidInput"},
        {{"explode", "--input", n2}, "InvalidArguments"},
        {{"faces", "--input", n2, "--samples", "0"}, "InvalidArguments"},
    };
    for (const auto& c : cases)
    {
        INFO(c.args.front() << " " << (c.args.size() > 2 ? c.args[2] : ""));
        const auto r = invoke(c.args);
        REQUIRE(r.code == cli::InputError);
        const Json j = r.json();
        REQUIRE(j["schema"] == "ratiospace/v1");
        REQUIRE(j["error"]["code"] == c.code);
        REQUIRE(j["error"]["message"].is_string());
    }
}

TEST_CASE("help exits 0", "[cli]")
{
    const auto r = invoke({"--help"});
    REQUIRE(r.code == cli::Success);
    REQUIRE(r.out.find("certificate") != std::string::npos);
}
