#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include "json.hpp"

#include "obound/cli.hpp"

using namespace obound;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

TEST_CASE("table as csv")
{
    const auto r = run({"table", "--q", "2", "--m", "4", "--rows", "3", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "i,lambda,nu,delta\n0,0,1,2\n1,8,2,2\n2,10,2,2\n");

    const auto naturals = run({"table", "--q", "2", "--m", "1", "--rows", "2", "--format", "csv"});
    CHECK(naturals.code == 0);
    CHECK(naturals.out == "i,lambda,nu,delta\n0,0,1,2\n1,1,2,3\n");
}

TEST_CASE("table matches the golden file from either source")
{
    const auto golden = read_file(std::filesystem::path(OBOUND_GOLDEN_DIR) / "table_q2_m4_r16.csv");
    REQUIRE_FALSE(golden.empty());
    for (const char* source : {"closed", "oracle"}) {
        const auto r = run({"table", "--q", "2", "--m", "4", "--rows", "16", "--format", "csv", "--source", source});
        CHECK(r.code == 0);
        CHECK(r.out == golden);
    }
}

TEST_CASE("closed and oracle tables are byte-identical")
{
    for (const char* format : {"csv", "tsv", "json"}) {
        for (const auto& [q, m] : std::vector<std::pair<int, int>>{{2, 5}, {3, 4}, {6, 3}, {4, 1}}) {
            std::vector<std::string> args = {"table",  "--q",    std::to_string(q), "--m", std::to_string(m),
                                             "--rows", "60",     "--format",        format};
            const auto closed = run(args);
            args.insert(args.end(), {"--source", "oracle"});
            const auto oracle = run(args);
            CHECK(closed.code == 0);
            CHECK(closed.out == oracle.out);
        }
    }
}

TEST_CASE("table formats and column selection")
{
    const auto tsv = run({"table", "--q", "2", "--m", "4", "--rows", "2", "--format", "tsv"});
    CHECK(tsv.out == "i\tlambda\tnu\tdelta\n0\t0\t1\t2\n1\t8\t2\t2\n");

    const auto cols = run({"table", "--q", "2", "--m", "4", "--rows", "3", "--columns", "lambda,delta"});
    CHECK(cols.out == "lambda,delta\n0,2\n8,2\n10,2\n");

    const auto json = run({"table", "--q", "2", "--m", "4", "--rows", "2", "--format", "json"});
    REQUIRE(json.code == 0);
    const auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["q"] == 2);
    CHECK(doc["rows"].size() == 2);
    CHECK(doc["rows"][1]["lambda"] == 8);
    CHECK(doc["rows"][1]["nu"] == 2);
}

TEST_CASE("table errors")
{
    const auto overflow = run({"table", "--q", "2", "--m", "99"});
    CHECK(overflow.code == cli::kExitResource);
    CHECK(overflow.out.empty());
    CHECK(overflow.err.find("Overflow") != std::string::npos);

    CHECK(run({"table", "--q", "1", "--m", "3"}).code == cli::kExitUsage);
    CHECK(run({"table", "--q", "2", "--m", "4", "--rows", "0"}).code == cli::kExitUsage);
    CHECK(run({"table", "--q", "2", "--m", "4", "--format", "xml"}).code == cli::kExitUsage);
    CHECK(run({"table", "--q", "2", "--m", "4", "--columns", "i,mu"}).code == cli::kExitUsage);
    CHECK(run({"table", "--m", "4"}).code == cli::kExitUsage);
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"frobnicate"}).code == cli::kExitUsage);

    // oracle side refuses to materialize past the member budget
    CHECK(run({"table", "--q", "2", "--m", "40", "--rows", "2", "--source", "oracle"}).code == cli::kExitResource);
    CHECK(run({"table", "--q", "2", "--m", "40", "--rows", "2"}).code == 0);
}

TEST_CASE("bounds")
{
    CHECK(run({"bounds", "--q", "2", "--m", "4", "--i", "6"}).out == "delta=2\n");
    CHECK(run({"bounds", "--q", "2", "--m", "4", "--i", "14"}).out == "delta=7\n");
    CHECK(run({"bounds", "--q", "2", "--m", "4", "--i", "0"}).out == "delta=2\n");
    CHECK(run({"bounds", "--q", "2", "--m", "4", "--i", "-1"}).code == cli::kExitUsage);
    CHECK(run({"bounds", "--q", "2", "--m", "99", "--i", "0"}).code == cli::kExitResource);
}

TEST_CASE("verify")
{
    const auto ok = run({"verify", "--q", "2,3", "--m-max", "6"});
    CHECK(ok.code == 0);
    const auto doc = nlohmann::json::parse(ok.out);
    CHECK(doc["status"] == "pass");
    CHECK(doc["grid"].size() == 12);

    CHECK(run({"verify", "--q", "2", "--m-max", "0"}).code == cli::kExitUsage);
    CHECK(run({"verify", "--q", "1", "--m-max", "3"}).code == cli::kExitUsage);
    CHECK(run({"verify", "--q", "2", "--m-max", "3", "--margin", "-1"}).code == cli::kExitUsage);
}

TEST_CASE("verify writes a report file")
{
    const auto path = std::filesystem::temp_directory_path() / "obound_verify_report.json";
    std::filesystem::remove(path);
    const auto r = run({"verify", "--q", "2", "--m-max", "4", "--report", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "pass: 4 grid points\n");
    const auto doc = nlohmann::json::parse(read_file(path));
    REQUIRE(doc["checks"].size() == 4);
    for (const auto& entry : doc["checks"]) CHECK(entry["results"].size() == 9);
    std::filesystem::remove(path);
}

TEST_CASE("verify skips levels past the budget")
{
    ::setenv("SEMIGROUP_BUDGET", "1000", 1);
    const auto r = run({"verify", "--q", "2", "--m-max", "12", "--margin", "0"});
    ::unsetenv("SEMIGROUP_BUDGET");
    CHECK(r.code == 0);
    CHECK(r.err.find("skipping (q=2, m=11)") != std::string::npos);
    CHECK(nlohmann::json::parse(r.out)["grid"].size() == 10);

    ::setenv("SEMIGROUP_BUDGET", "lots", 1);
    CHECK(run({"verify", "--q", "2", "--m-max", "2"}).code == cli::kExitUsage);
    ::unsetenv("SEMIGROUP_BUDGET");
}
