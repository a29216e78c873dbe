#include "hcara/cli.hpp"
#include "hcara/json_io.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hcara;
namespace fs = std::filesystem;

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::dispatch(args, out, err, true);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("hcara_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }

    std::string cube3() {
        return write("cube3.json", R"({"dim": 3, "normals": [["1","0","0"],["-1","0","0"],["0","1","0"],
                                      ["0","-1","0"],["0","0","1"],["0","0","-1"]]})");
    }
    std::string square() {
        return write("square.json", R"({"dim": 2, "normals": [[1,0],[-1,0],[0,1],[0,-1]]})");
    }

    fs::path dir_;
};

}  // namespace

TEST_F(CliTest, CaraJson) {
    const Invocation r = run({"cara", cube3(), "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = json_io::Json::parse(r.out);
    EXPECT_EQ(doc["helly"], 2);
    EXPECT_EQ(doc["cone"], 3);
    EXPECT_EQ(doc["caratheodory"], 3);
    EXPECT_TRUE(r.err.empty());
    const auto report = json_io::invariant_report_from_json(doc);
    EXPECT_EQ(json_io::to_json(report), doc);
    EXPECT_EQ(run({"cara", cube3(), "--json"}).out, r.out);
}

TEST_F(CliTest, HellyAndConeSummaries) {
    const Invocation h = run({"helly", cube3()});
    ASSERT_EQ(h.code, 0) << h.err;
    EXPECT_NE(h.out.find('2'), std::string::npos);
    const Invocation c = run({"cone", cube3(), "--json"});
    ASSERT_EQ(c.code, 0) << c.err;
    EXPECT_FALSE(c.out.empty());
}

TEST_F(CliTest, HMemberNegativeCoordinates) {
    const std::string axis = write("axis.json", R"({"dim": 3, "normals": [["1","0","0"]]})");
    const std::string single = write("single.json", R"({"dim": 3, "points": [["0","0","0"]]})");
    const Invocation r = run({"h-member", axis, single, "--point", "-5,7,2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "true\n");
    const Invocation outside = run({"h-member", axis, single, "--point", "1/2,0,0", "--json"});
    ASSERT_EQ(outside.code, 0) << outside.err;
    EXPECT_EQ(json_io::Json::parse(outside.out)["member"], false);
}

TEST_F(CliTest, StrongMember) {
    const std::string body = write("square.json", R"({"dim": 2, "normals": [[1,0],[-1,0],[0,1],[0,-1]],
                                                      "offsets": ["1","0","1","0"]})");
    const std::string diag = write("diag.json", R"({"dim": 2, "points": [["0","0"],["1","1"]]})");
    EXPECT_EQ(run({"strong-member", body, diag, "--point", "1,0"}).out, "true\n");
    EXPECT_EQ(run({"strong-member", body, diag, "--point", "3/2,1/2"}).out, "false\n");
    const std::string wide = write("wide.json", R"({"dim": 2, "points": [["0","0"],["2","0"]]})");
    const Invocation r = run({"strong-member", body, wide, "--point", "1,0"});
    EXPECT_EQ(r.code, cli::kPreconditionError);
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
}

TEST_F(CliTest, WitnessAndValidate) {
    const Invocation w = run({"witness", "--kind", "cone", square(), "--json"});
    ASSERT_EQ(w.code, 0) << w.err;
    const auto report = json_io::witness_report_from_json(json_io::Json::parse(w.out));
    EXPECT_TRUE(report.valid());
    EXPECT_EQ(report.points.size(), 2u);

    const Invocation h = run({"witness", "--kind", "helly", square(), "--json"});
    ASSERT_EQ(h.code, 0) << h.err;
    EXPECT_EQ(json_io::Json::parse(h.out)["points"]["points"].size(), 2u);

    const std::string x = write("x.json", R"({"dim": 2, "points": [["0","-1"],["-1","0"],["1","1"]]})");
    const Invocation v = run({"validate", square(), x, "--json"});
    ASSERT_EQ(v.code, 0) << v.err;
    const auto doc = json_io::Json::parse(v.out);
    EXPECT_EQ(doc["covering_ok"], true);
    EXPECT_EQ(doc["drop_one_ok"], false);

    EXPECT_EQ(run({"witness", "--kind", "simplex", square()}).code, cli::kInputError);
}

TEST_F(CliTest, InputErrors) {
    const Invocation missing = run({"cara", (dir_ / "missing.json").string()});
    EXPECT_EQ(missing.code, cli::kInputError);
    EXPECT_TRUE(missing.out.empty());
    EXPECT_FALSE(missing.err.empty());

    const std::string floats = write("floats.json", R"({"dim": 2, "normals": [[0.5, 1]]})");
    EXPECT_EQ(run({"cara", floats}).code, cli::kInputError);
    const std::string broken = write("broken.json", "{\"dim\": 2, ");
    EXPECT_EQ(run({"cara", broken}).code, cli::kInputError);

    const std::string single = write("single.json", R"({"dim": 2, "points": [["0","0"]]})");
    EXPECT_EQ(run({"h-member", square(), single, "--point", "0.5,1"}).code, cli::kInputError);
    EXPECT_EQ(run({"h-member", square(), single, "--point", ""}).code, cli::kInputError);
    EXPECT_EQ(run({"h-member", square(), single, "--point", "1,2,3"}).code, cli::kInputError);
    EXPECT_EQ(run({"cara", cube3(), "--bogus"}).code, cli::kInputError);
    EXPECT_EQ(run({}).code, cli::kInputError);
}

TEST_F(CliTest, ExperimentDeterministic) {
    const std::string cfg = write("cfg.json", R"({"seed": 3, "trials": 6, "dim": 2})");
    const Invocation a = run({"experiment", "--config", cfg, "--json"});
    ASSERT_EQ(a.code, 0) << a.err;
    const Invocation b = run({"experiment", "--config", cfg, "--json"});
    EXPECT_EQ(a.out, b.out);
    const auto doc = json_io::Json::parse(a.out);
    EXPECT_EQ(doc["config"]["seed"], 3);
    EXPECT_EQ(doc["trials"].size(), 6u);

    const Invocation overridden = run({"experiment", "--config", cfg, "--seed", "4", "--trials", "3", "--json"});
    ASSERT_EQ(overridden.code, 0) << overridden.err;
    const auto other = json_io::Json::parse(overridden.out);
    EXPECT_EQ(other["config"]["seed"], 4);
    EXPECT_EQ(other["trials"].size(), 3u);

    const std::string out_path = (dir_ / "report.json").string();
    ASSERT_EQ(run({"experiment", "--config", cfg, "--out", out_path}).code, 0);
    EXPECT_EQ(json_io::load_file(out_path), doc);
}

#ifdef HCARA_CLI_PATH
TEST_F(CliTest, BinaryExitCodesAndStreams) {
    const std::string errfile = (dir_ / "stderr.txt").string();
    const std::string cmd = std::string(HCARA_CLI_PATH) + " cara " + (dir_ / "missing.json").string() + " 2>" + errfile;
    FILE* pipe = popen(cmd.c_str(), "r");
    ASSERT_NE(pipe, nullptr);
    std::string out;
    char buf[256];
    while (std::fgets(buf, sizeof buf, pipe)) out += buf;
    const int status = pclose(pipe);
    EXPECT_EQ(WEXITSTATUS(status), cli::kInputError);
    EXPECT_TRUE(out.empty());
    std::ifstream err(errfile);
    std::string diagnostics((std::istreambuf_iterator<char>(err)), std::istreambuf_iterator<char>());
    EXPECT_NE(diagnostics.find("missing.json"), std::string::npos);
}
#endif
