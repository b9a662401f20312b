#include "polyspace/cli.hpp"
#include "polyspace/serialize.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace polyspace;

namespace {

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("JSON round trips")
{
    const auto l = LengthVector::parse("3/10,0.7,2");
    const Json j = to_json(l);
    CHECK(j.dump() == R"(["3/10","7/10","2"])");
    CHECK(length_vector_from_json(j) == l);
    CHECK(length_vector_from_json(Json::parse(R"(["0.25", 1, "1/2"])")) == LengthVector::parse("1/4,1,1/2"));
    CHECK_THROWS(length_vector_from_json(Json::parse(R"({"a":1})")));

    const auto profile = planar_profile(LengthVector::parse("1,1,1,1,1"));
    const Json pj = to_json(profile);
    CHECK(pj.dump() == R"({"space":"planar","n":5,"betti":[1,8,1]})");
    CHECK(betti_profile_from_json(pj) == profile);
}

TEST_CASE("CLI examples")
{
    auto r = run({"betti", "--space", "planar", "--lengths", "1,1,1,1,1"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out == "1,8,1\n");

    r = run({"volume", "r0", "--p", "2", "--q", "3"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.rfind("5/16", 0) == 0);

    r = run({"chambers", "enumerate", "--n", "5"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.rfind("7 orbits\n", 0) == 0);

    r = run({"chambers", "code", "--lengths", "1,2,3,3.5"});
    CHECK(r.out == "{{1,4}}\n");

    r = run({"betti", "--space", "spatial", "--lengths", "1,1,1,1,1", "--tc"});
    CHECK(r.out == "1,0,5,0,1\ntc 5\n");
}

TEST_CASE("CLI exit codes")
{
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"frobnicate"}).code == cli::kExitUsage);
    auto r = run({"betti", "--lengths", "1,1,1", "--bogus"});
    CHECK(r.code == cli::kExitUsage);
    CHECK(r.err.find("Usage") != std::string::npos);
    CHECK(run({"betti", "--lengths", "1,-1,1"}).code == cli::kExitDomain);
    CHECK(run({"betti", "--space", "spatial", "--lengths", "1,1,1,1"}).code == cli::kExitDomain);
    CHECK(run({"betti", "--lengths", "6,2,2", "--tc"}).code == cli::kExitDomain);
    CHECK(run({"chambers", "enumerate", "--n", "12"}).code == cli::kExitDomain);
    CHECK(run({"volume", "vj", "--n", "4", "--p", "4"}).code == cli::kExitDomain);
    CHECK(run({"experiment", "replay", "--manifest", "/nonexistent/manifest.json"}).code == cli::kExitDomain);
    CHECK(run({"--help"}).code == cli::kExitOk);
    r = run({"--version"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out == software_version() + "\n");
}

TEST_CASE("every subcommand honors --format json")
{
    const std::vector<std::vector<std::string>> commands{
        {"betti", "--lengths", "1,1,1,1,1", "--total"},
        {"chambers", "enumerate", "--n", "4"},
        {"chambers", "code", "--lengths", "1,1,1,1,1"},
        {"volume", "frustum", "--x", "1/3", "--p", "2", "--q", "3"},
        {"volume", "r0", "--p", "2", "--q", "3"},
        {"volume", "vj", "--n", "8", "--p", "2"},
        {"volume", "gamma", "--n", "8", "--p", "2"},
        {"volume", "lambda", "--n", "20", "--p", "1"},
        {"sample", "--n", "4", "--count", "3"},
        {"experiment", "run", "--n", "8", "--p", "1", "--samples", "500"},
        {"experiment", "scan", "--n-from", "6", "--n-to", "7", "--samples", "300"},
        {"experiment", "kn", "--n", "3", "--samples", "2000"},
        {"report", "--n-from", "6", "--n-to", "7", "--samples", "300"},
    };
    for (auto args : commands) {
        for (const char* format : {"json", "csv", "text"}) {
            auto with_format = args;
            with_format.push_back("--format");
            with_format.push_back(format);
            const auto r = run(with_format);
            INFO(args[0] << " " << format << ": " << r.err);
            CHECK(r.code == cli::kExitOk);
            CHECK_FALSE(r.out.empty());
            if (std::string(format) == "json") CHECK(Json::accept(r.out));
        }
    }
    const auto gamma = Json::parse(run({"volume", "gamma", "--n", "8", "--p", "2", "--format", "json"}).out);
    CHECK(gamma["union"]["exact"] == "0");
    const auto r0 = Json::parse(run({"volume", "r0", "--p", "2", "--q", "3", "--format", "json"}).out);
    CHECK(r0["value"]["exact"] == "5/16");
    CHECK(r0["value"]["decimal"] == "0.312500000000");
}

TEST_CASE("identical arguments give identical output")
{
    const std::vector<std::string> args{"experiment", "run", "--n", "9", "--p", "1", "--samples", "3000", "--seed", "5", "--format", "json"};
    const auto a = run(args);
    auto threaded = args;
    threaded.insert(threaded.end(), {"--threads", "3", "--shards", "5"});
    const auto b = run(threaded);
    CHECK(a.code == 0);
    CHECK(a.out == run(args).out);
    CHECK(a.out == b.out);
    const std::vector<std::string> csv{"experiment", "scan", "--n-from", "6", "--n-to", "8", "--samples", "500", "--format", "csv"};
    const auto scan = run(csv);
    CHECK(scan.out == run(csv).out);
    CHECK(scan.out.rfind("n,estimate,stderr,theory,abs_dev\n", 0) == 0);
}

TEST_CASE("manifest written by the CLI replays")
{
    const auto dir = std::filesystem::temp_directory_path();
    const auto path = (dir / "polyspace_cli_manifest.json").string();
    auto r = run({"experiment", "run", "--n", "9", "--invariant", "bettiN", "--p", "2", "--samples", "2000", "--seed", "8", "--out", path});
    REQUIRE(r.code == 0);
    const Json manifest = read_json_file(path);
    CHECK(manifest["config"]["seed"] == 8);
    CHECK(manifest["rng"]["algorithm"] == std::string(RngStream::kAlgorithm));
    CHECK(manifest.contains("run_info"));
    r = run({"experiment", "replay", "--manifest", path});
    CHECK(r.code == 0);

    Json tampered = manifest;
    tampered["results"]["exact_mean"] = "1/3";
    write_json_file(tampered, path);
    r = run({"experiment", "replay", "--manifest", path});
    CHECK(r.code == cli::kExitDomain);
    CHECK(r.err.find("mismatch") != std::string::npos);
    std::filesystem::remove(path);

    const auto codes = (dir / "polyspace_codes.json").string();
    REQUIRE(run({"chambers", "enumerate", "--n", "6", "--out", codes}).code == 0);
    const Json j = read_json_file(codes);
    CHECK(j["count"] == 21);
    CHECK(j["orbits"].size() == 21);
    std::filesystem::remove(codes);
}

TEST_CASE("kn warns about a large relative standard error")
{
    const auto r = run({"experiment", "kn", "--n", "12", "--samples", "200"});
    CHECK(r.code == 0);
    CHECK(r.err.find("warning") != std::string::npos);
}
