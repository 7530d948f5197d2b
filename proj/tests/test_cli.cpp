#include "test_helpers.hpp"
#include "weakdual/case_json.hpp"
#include "weakdual/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

using namespace weakdual;

namespace {

struct Run {
    int status;
    std::string out, err;
};

Run cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "weakdual");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

std::filesystem::path tmp_dir()
{
    const char* env = std::getenv("WEAKDUAL_TEST_TMP");
    return env ? std::filesystem::path(env) : std::filesystem::temp_directory_path();
}

}  // namespace

TEST_CASE("match reports per-degree verdicts")
{
    const auto r = cli({"match", "--pair", "ginzburg", "--trunc", "5", "--samples", "3"});
    REQUIRE(r.status == kExitOk);
    const Json j = Json::parse(r.out);
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["all_equal"] == true);
    CHECK(j["points"].size() == 3);
    CHECK(j["points"][0]["degrees"].size() == 6);
    CHECK(j.contains("seed"));
}

TEST_CASE("output is byte-identical for identical seeds and free of floats")
{
    const auto a = cli({"match", "--pair", "garrett", "--trunc", "4", "--samples", "4", "--seed", "99"});
    const auto b = cli({"match", "--pair", "garrett", "--trunc", "4", "--samples", "4", "--seed", "99"});
    const auto c = cli({"match", "--pair", "garrett", "--trunc", "4", "--samples", "4", "--seed", "100"});
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
    CHECK_FALSE(std::regex_search(a.out, std::regex(R"([0-9]\.[0-9]|[0-9]e[-+]?[0-9])")));
}

TEST_CASE("weights degree zero stratum is the origin")
{
    const auto r = cli({"weights", "--case", "garrett_dual", "--max-degree", "6"});
    REQUIRE(r.status == kExitOk);
    const Json j = Json::parse(r.out);
    CHECK(j["by_degree"]["0"].size() == 1);
    CHECK(j["by_degree"]["0"][0] == Json::array({"0", "0", "0", "0"}));
    CHECK(j["by_degree"]["1"].size() == 4);
}

TEST_CASE("hilbert as csv")
{
    const auto r = cli({"--format", "csv", "hilbert", "--space", "garrett_dual", "--trunc", "2"});
    REQUIRE(r.status == kExitOk);
    CHECK(r.out == "degree,coefficient\n0,1\n1,14\n2,84\n");
    const auto s = cli({"hilbert", "--space", "garrett_dual", "--trunc", "2", "--format", "csv"});
    CHECK(s.out == r.out);
}

TEST_CASE("usage errors exit with status 2")
{
    CHECK(cli({}).status == kExitUsage);
    CHECK(cli({"frobnicate"}).status == kExitUsage);
    CHECK(cli({"weights"}).status == kExitUsage);
    CHECK(cli({"weights", "--case", "nonexistent"}).status == kExitUsage);
    CHECK(cli({"hilbert", "--space", "A2", "--trunc", "-1"}).status == kExitUsage);
    CHECK(cli({"match", "--samples", "0"}).status == kExitUsage);
    CHECK(cli({"lfactor", "--space", "A2", "--satake", "1,x"}).status == kExitUsage);
    CHECK(cli({"identity", "--places", "/nonexistent/places.json"}).status == kExitUsage);
    CHECK(cli({"--help"}).status == kExitOk);
}

TEST_CASE("identity with a places file")
{
    const auto path = tmp_dir() / "places_cli_test.json";
    {
        std::ofstream f(path);
        f << R"([{"q": 3, "satake": {"semisimple": ["2", "-1/3"], "gm": "5"}},
                 {"q": 4, "satake": {"semisimple": ["1", "1"], "gm": "1"}}])";
    }
    const auto r = cli({"identity", "--pair", "ginzburg", "--genus", "2", "--places", path.string(), "--trunc", "5"});
    REQUIRE(r.status == kExitOk);
    const Json j = Json::parse(r.out);
    CHECK(j["all_places_match"] == true);
    CHECK(j["ledger"]["delta_quarter_units"] == "3");
    CHECK(j["ledger"]["q_power"] == "3/2");
    CHECK(j["places"].size() == 2);

    {
        std::ofstream f(path);
        f << R"([{"q": 6, "satake": {"semisimple": ["1", "1"], "gm": "1"}}])";
    }
    CHECK(cli({"identity", "--pair", "ginzburg", "--places", path.string()}).status == kExitUsage);
    {
        std::ofstream f(path);
        f << R"({"q": 3})";
    }
    CHECK(cli({"identity", "--pair", "ginzburg", "--places", path.string()}).status == kExitUsage);
    std::filesystem::remove(path);
}

TEST_CASE("integrality subcommands")
{
    auto r = cli({"integrality", "check", "--case", "ginzburg_auto", "--chi", "0,0,0", "--vt", "-1"});
    REQUIRE(r.status == kExitOk);
    CHECK(Json::parse(r.out)["integral"] == false);
    r = cli({"integrality", "verify", "--case", "ginzburg", "--bound", "2", "--vt-lo", "-2", "--vt-hi", "2"});
    REQUIRE(r.status == kExitOk);
    CHECK(Json::parse(r.out)["disagreements"].empty());
    CHECK(cli({"integrality", "check", "--case", "ginzburg_auto", "--chi", "0,0"}).status == kExitUsage);
}

TEST_CASE("classical checks")
{
    CHECK(cli({"classical", "--check", "tate", "--chi-value", "-3/7"}).status == kExitOk);
    CHECK(cli({"classical", "--check", "hecke", "--alpha", "2", "--beta", "5/3", "--m", "2"}).status == kExitOk);
    const auto w = cli({"classical", "--check", "whittaker", "--case", "sl3", "--genus", "3"});
    CHECK(Json::parse(w.out)["beta_whitt"] == "-10");
    const auto cs = cli({"classical", "--check", "cs", "--case", "gl2", "--chi", "2,0", "--satake", "2,3"});
    REQUIRE(cs.status == kExitOk);
    CHECK(Json::parse(cs.out)["value"] == "19");
    CHECK(Json::parse(cs.out)["u_exponent"] == -2);
    CHECK(cli({"classical", "--check", "nope"}).status == kExitUsage);
}

TEST_CASE("lfactor compares linear spaces with their determinant expansion")
{
    const auto r = cli({"lfactor", "--space", "A2xA2", "--satake", "2,1/3,-1,5", "--trunc", "4"});
    REQUIRE(r.status == kExitOk);
    CHECK(Json::parse(r.out)["equal"] == true);
}

TEST_CASE("groups lists cases and dumps descriptions")
{
    auto r = cli({"groups"});
    REQUIRE(r.status == kExitOk);
    CHECK(Json::parse(r.out)["cases"].size() >= 11);
    r = cli({"groups", "--case", "garrett_auto"});
    const Json j = Json::parse(r.out);
    CHECK(j["cases"][0]["constants"]["discrepancy"] == "3");
    CHECK(j["cases"][0]["definition"]["schema_version"] == kSchemaVersion);
}

TEST_CASE("user case files are registered")
{
    const auto path = tmp_dir() / "case_cli_test.json";
    Json def = case_spec_to_json(load_case("sl3").spec);
    def["name"] = "sl3_from_file";
    {
        std::ofstream f(path);
        f << def.dump();
    }
    const auto r = cli({"--case-file", path.string(), "groups", "--case", "sl3_from_file"});
    CHECK(r.status == kExitOk);
    std::filesystem::remove(path);
}

TEST_CASE("acceptance subset")
{
    const auto r = cli({"acceptance", "--only", "3,10"});
    REQUIRE(r.status == kExitOk);
    const Json j = Json::parse(r.out);
    CHECK(j["criteria"].size() == 2);
    CHECK(cli({"acceptance", "--only", "13"}).status == kExitUsage);
}
