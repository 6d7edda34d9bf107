#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "ramtower/json_io.hpp"

using namespace ramtower;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "ramtower");
    std::vector<const char*> argv;
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

RunReport report(const CliRun& r) { return run_report_from_json(Json::parse(r.out)); }

} // namespace

TEST(Cli, TowerSchedule) {
    const CliRun r = run({"tower", "schedule", "--p", "2", "--q", "2", "--g", "1", "--d", "1", "--N", "0", "--c", "1", "--n", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    const RunReport rep = report(r);
    EXPECT_EQ(rep.status, RunStatus::Ok);
    EXPECT_EQ(rep.schema_version, kSchemaVersion);
    const BreakSchedule s = schedule_from_json(rep.payload);
    EXPECT_EQ(s.upper, (std::vector<Rat>{Rat(3), Rat(9), Rat(21)}));
}

TEST(Cli, ScheduleLintBecomesDiagnostic) {
    const CliRun r = run({"tower", "schedule", "--p", "3", "--q", "3", "--g", "1", "--N", "0", "--c", "1", "--n", "2"});
    ASSERT_EQ(r.code, 0);
    const RunReport rep = report(r);
    ASSERT_FALSE(rep.diagnostics.empty());
    EXPECT_EQ(rep.diagnostics[0].code, "non-integral-galois-break");
}

TEST(Cli, Polygon) {
    const std::string path = ::testing::TempDir() + "ramtower_cli_polygon.svg";
    const CliRun r = run({"polygon", "--points", "1:1,2:1,4:0", "--svg", path});
    ASSERT_EQ(r.code, 0) << r.err;
    const NewtonPolygon np = polygon_from_json(report(r).payload["polygon"]);
    ASSERT_EQ(np.sides().size(), 1U);
    EXPECT_EQ(np.sides()[0].slope, make_rat(-1, 3));
    std::ifstream svg(path);
    std::stringstream body;
    body << svg.rdbuf();
    EXPECT_NE(body.str().find(">-1/3</text>"), std::string::npos);
    std::remove(path.c_str());
}

TEST(Cli, Herbrand) {
    const CliRun r = run({"herbrand", "--breaks", "3:2,15:2", "--at", "15"});
    ASSERT_EQ(r.code, 0) << r.err;
    const RunReport rep = report(r);
    EXPECT_EQ(rep.payload["upper_breaks"], Json::parse(R"(["3","9"])"));
    EXPECT_EQ(rep.payload["values"][0]["phi"], "9");
    const CliRun t = run({"herbrand", "--layer", "3:2", "--layer", "15:2", "--at", "63"});
    EXPECT_EQ(report(t).payload["values"][0]["phi"], "21");
}

TEST(Cli, TateBreaks) {
    const CliRun r = run({"tate-breaks", "--p", "3", "--field-ext", "1", "--poly", "t; t^2; 0; 1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const RunReport rep = report(r);
    EXPECT_EQ(rep.payload["breaks"], Json::parse(R"(["2"])"));
    EXPECT_TRUE(rep.payload["hypothesis"]["holds"].get<bool>());
    const TateResult back = tate_result_from_json(rep.payload);
    EXPECT_EQ(back.breaks, (std::vector<Rat>{Rat(2)}));
}

TEST(Cli, HypothesisFailureIsDomainExit) {
    const CliRun r = run({"tate", "--p", "3", "--poly", "t; t^2; t; 1"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(report(r).status, RunStatus::Fail);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"tate", "--p", "2", "--poly", "t^2; t; 1"}).code, 1);
    EXPECT_EQ(run({"tower", "over-k", "--W", "1", "--e", "2", "--u", "1", "--l", "1"}).code, 1);
    const CliRun prec = run({"tate", "--p", "2", "--poly", "O(t^1); t; 1"});
    EXPECT_EQ(prec.code, 2);
    EXPECT_EQ(report(prec).status, RunStatus::PrecisionError);
    const CliRun usage = run({"tower", "schedule", "--p", "2"});
    EXPECT_EQ(usage.code, 64);
    EXPECT_TRUE(usage.out.empty());
    EXPECT_EQ(run({"polygon", "--points", "1:1", "--frobnicate"}).code, 64);
    EXPECT_EQ(run({}).code, 64);
    EXPECT_EQ(run({"polygon", "--points", "a:1"}).code, 64);
}

TEST(Cli, TorsionAndCharacter) {
    const CliRun r = run({"tower", "torsion", "--vals", "1,1", "--q", "2", "--g", "1", "--nmax", "10"});
    ASSERT_EQ(r.code, 0) << r.err;
    const TorsionTrace t = torsion_from_json(report(r).payload);
    EXPECT_EQ(t.valuations[0], make_rat(1, 3));
    EXPECT_EQ(t.valuations.size(), 11U);
    const CliRun c = run({"tower", "character", "--p", "2", "--g", "1", "--N", "0", "--c", "1", "--n", "2"});
    EXPECT_EQ(report(c).payload["character"]["upper"], "9");
    EXPECT_EQ(run({"tower", "character", "--p", "3", "--q", "9", "--g", "1", "--N", "0", "--c", "1", "--n", "2"}).code, 1);
}

TEST(Cli, Formal) {
    const CliRun r = run({"formal", "--p", "2", "--q", "4", "--honda", "1", "--prec", "8", "--reduce"});
    ASSERT_EQ(r.code, 0) << r.err;
    const RunReport rep = report(r);
    EXPECT_EQ(rep.payload["height"], 1);
    EXPECT_TRUE(rep.payload["group_law"]["ok"].get<bool>());
    const CliRun q = run({"formal", "--p", "2", "--q", "2", "--spec", "1:3", "--prec", "6"});
    const FormalModule<RationalRing> M = formal_module_from_json(report(q).payload["module"]);
    EXPECT_EQ(M.degree(), 6U);
    EXPECT_EQ(run({"formal", "--p", "2", "--q", "2", "--spec", "1:1/2"}).code, 1);
}
