#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "separating_table.hpp"
#include "shadowsum/cli.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const std::string kFixtures = SHADOWSUM_FIXTURES;

struct Run {
    int code = 0;
    std::string out;
    std::vector<json> records() const {
        std::vector<json> rs;
        std::istringstream in(out);
        for (std::string line; std::getline(in, line);)
            if (!line.empty()) rs.push_back(json::parse(line));
        return rs;
    }
};

Run in_process(std::vector<std::string> args) {
    args.insert(args.begin(), "shadowsum");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    Run r;
    r.code = shadowsum::cli::main(static_cast<int>(argv.size()), argv.data(), out);
    r.out = out.str();
    return r;
}

Run subprocess(const std::string& args, const std::string& env = "") {
    Run r;
    std::string cmd = env + std::string(SHADOWSUM_CLI) + " " + args;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    char buf[4096];
    for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) r.out.append(buf, n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

}  // namespace

TEST_CASE("eval of a separating curve at t = -1") {
    Run r = in_process({"eval", "--t", "minus-one", fixture("separating_g2.json")});
    REQUIRE(r.code == 0);
    auto rs = r.records();
    REQUIRE(rs.size() == 1);
    CHECK(rs[0]["record"] == "eval");
    CHECK(rs[0]["status"] == "Exact");
    CHECK(rs[0]["value"] == json::array({"-2", "0"}));
    CHECK(rs[0]["closed_form"] == "-2");
    CHECK(rs[0]["tail_bound"] == "0");
}

TEST_CASE("shadow refuses the gleam (4, -4) example") {
    for (const char* t : {"0.9,0", "1.1,0"}) {
        Run r = in_process({"shadow", "--t", t, fixture("gleam4m4.json")});
        CHECK(r.code == shadowsum::cli::kDivergence);
        auto rs = r.records();
        REQUIRE(rs.size() == 1);
        CHECK(rs[0]["record"] == "error");
        CHECK(rs[0]["kind"] == "divergence");
        CHECK(rs[0]["status"] == "DivergenceDetected");
    }
    Run ok = in_process({"shadow", "--t", "0.9,0", fixture("positive_gleam.json")});
    CHECK(ok.code == 0);
    CHECK(ok.records().at(0)["status"] == "Truncated");
}

TEST_CASE("table lists the fifteen separating integrals") {
    Run r = in_process({"table", "--epsilon", "1e-10"});
    REQUIRE(r.code == 0);
    auto rs = r.records();
    const auto& published = shadowsum::test::published_table();
    REQUIRE(rs.size() == published.size());
    for (std::size_t i = 0; i < rs.size(); ++i) {
        CHECK(rs[i]["G"] == published[i].genus);
        CHECK(rs[i]["G1"] == published[i].g1);
        CHECK(rs[i]["G2"] == published[i].g2);
        CHECK(rs[i]["expression"].get<std::string>().rfind(published[i].constant, 0) == 0);
        const double a = std::stod(rs[i]["numeric"].get<std::string>());
        const double b = std::stod(rs[i]["series"].get<std::string>());
        CHECK(std::abs(a - b) < 1e-9);
    }
    CHECK(rs[1]["expression"] == "-4 + 1/3*pi^2");
}

TEST_CASE("roots of unity and finite sums") {
    Run a = in_process({"eval", "--t", "0.9,0", fixture("annulus.json")});
    REQUIRE(a.code == 0);
    CHECK(a.records()[0]["value"] == json::array({"2", "0"}));
    CHECK(a.records()[0]["status"] == "Exact");
    Run b = in_process({"eval", "--t", "root:3", fixture("annulus.json")});
    REQUIRE(b.code == 0);
    CHECK(b.records()[0]["value"] == json::array({"1", "0"}));
}

TEST_CASE("limit scan approaches twice the t = -1 value") {
    Run r = in_process({"limit", fixture("empty_g2.json"), "--r", "11,21,31,41,51"});
    REQUIRE(r.code == 0);
    auto rs = r.records();
    REQUIRE(rs.size() == 6);
    CHECK(rs[0]["record"] == "limit_reference");
    double prev = 1e9;
    for (std::size_t i = 1; i < rs.size(); ++i) {
        double d = rs[i]["difference"];
        CHECK(d < prev);
        prev = d;
    }
    CHECK(prev < 0.02);
}

TEST_CASE("check subcommand reports per suite") {
    Run r = in_process({"check", "--suite", "oracle", "--suite", "tet_symmetry"});
    CHECK(r.code == 0);
    auto rs = r.records();
    REQUIRE(rs.size() >= 2);
    CHECK(rs.back()["record"] == "check_summary");
    CHECK(rs.back()["passed"] == true);
    CHECK(in_process({"check", "--suite", "nope"}).code == shadowsum::cli::kUsage);
}

TEST_CASE("every malformed input yields one structured error") {
    int seen = 0;
    for (const auto& entry : fs::directory_iterator(fixture("malformed"))) {
        CAPTURE(entry.path().string());
        Run r = in_process({"eval", entry.path().string()});
        CHECK(r.code == shadowsum::cli::kInput);
        auto rs = r.records();
        REQUIRE(rs.size() == 1);
        CHECK(rs[0]["record"] == "error");
        CHECK(rs[0]["kind"] == "input");
        CHECK_FALSE(rs[0]["message"].get<std::string>().empty());
        ++seen;
    }
    CHECK(seen >= 8);
    Run missing = in_process({"eval", fixture("no_such_file.json")});
    CHECK(missing.code == shadowsum::cli::kInput);
}

TEST_CASE("usage errors") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {},
             {"eval"},
             {"eval", "--t", "banana", fixture("annulus.json")},
             {"eval", "--t", "root:4", fixture("annulus.json")},
             {"eval", "--epsilon", "-1", fixture("annulus.json")},
             {"table", "--workers", "-2"},
             {"frobnicate"}}) {
        Run r = in_process(args);
        CHECK(r.code == shadowsum::cli::kUsage);
        auto rs = r.records();
        REQUIRE(rs.size() == 1);
        CHECK(rs[0]["kind"] == "usage");
    }
}

TEST_CASE("scalar parsing") {
    using shadowsum::cli::parse_scalar;
    CHECK(parse_scalar("minus-one", 128).mode == shadowsum::ScalarMode::ExactMinusOne);
    CHECK(parse_scalar("root:7", 128).r == 7);
    auto g = parse_scalar("0.6,-0.5", 96);
    CHECK(g.mode == shadowsum::ScalarMode::GenericComplex);
    CHECK(g.precision_bits == 96);
    CHECK(g.t.im.to_double() == doctest::Approx(-0.5));
    CHECK_THROWS_AS(parse_scalar("0,0", 128), shadowsum::cli::UsageError);
    CHECK_THROWS_AS(parse_scalar("1.0", 128), shadowsum::cli::UsageError);
}

TEST_CASE("binary output is byte-identical across runs and worker counts") {
    const std::string sep = fixture("separating_g2.json");
    Run a = subprocess("eval --t 0.9,0 --workers 1 " + sep);
    Run b = subprocess("eval --t 0.9,0 --workers 4 " + sep);
    Run c = subprocess("eval --t 0.9,0 " + sep);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    Run t1 = subprocess("table"), t2 = subprocess("table");
    CHECK(t1.out == t2.out);
    Run div = subprocess("shadow --t 0.9,0 " + fixture("gleam4m4.json"));
    CHECK(div.code == 4);
    CHECK(subprocess("eval " + fixture("malformed/truncated.json")).code == 3);
    CHECK(subprocess("nonsense").code == 2);
}

TEST_CASE("output file and human rendering") {
    const fs::path out = fs::temp_directory_path() / "shadowsum_cli_test.jsonl";
    Run r = in_process({"eval", fixture("separating_g2.json"), "--output", out.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(out);
    std::string line;
    std::getline(in, line);
    CHECK(json::parse(line)["value"] == json::array({"-2", "0"}));
    fs::remove(out);
    Run h = in_process({"eval", fixture("separating_g2.json"), "--human"});
    CHECK(h.out.find("value: -2 + 0i") != std::string::npos);
}

TEST_CASE("precision flag and environment") {
    Run lo = in_process({"eval", "--t", "0.9,0", "--precision-bits", "64", fixture("separating_g2.json")});
    Run hi = in_process({"eval", "--t", "0.9,0", "--precision-bits", "256", fixture("separating_g2.json")});
    REQUIRE(lo.code == 0);
    REQUIRE(hi.code == 0);
    const std::string vlo = lo.records()[0]["value"][0], vhi = hi.records()[0]["value"][0];
    CHECK(vlo.size() < vhi.size());
    CHECK(std::abs(std::stod(vlo) - std::stod(vhi)) < 1e-9);
    const std::string args = "eval --t 0.9,0 " + fixture("separating_g2.json");
    Run env64 = subprocess(args, "SHADOWSUM_PRECISION_BITS=64 ");
    REQUIRE(env64.code == 0);
    CHECK(json::parse(env64.out)["value"][0] == vlo);
    Run flag = subprocess(args + " --precision-bits 256", "SHADOWSUM_PRECISION_BITS=64 ");
    CHECK(json::parse(flag.out)["value"][0] == vhi);
}
