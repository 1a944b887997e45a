#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include <gtest/gtest.h>

#include <coeffsharp/cli.hpp>

namespace cs = coeffsharp;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "coeffsharp");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = cs::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

// Runs the installed binary through the shell and returns its exit status.
Run run_binary(const std::string& args)
{
    const std::string cmd = std::string(COEFFSHARP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) {
        out.append(buf, n);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, {}};
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class TempDir : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() / ("coeffsharp_cli_" + std::to_string(::getpid()) + "_" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
        std::ofstream(dir_ / "quick.cfg") << "# small grid\ngrid_tau1 = 21\ngrid_r = 6\ngrid_theta = 16\n"
                                             "refinement_rounds = 6\ntolerance_attain = 1e-4\n";
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

} // namespace

TEST(CliSeries, GoldenOutputs)
{
    EXPECT_EQ(run({"series", "f1", "--order", "4"}).out, "0, 1, 1, 3/4, 5/12\n");
    EXPECT_EQ(run({"series", "phi0", "--order", "4"}).out, "1, 1, 1/2, 0, 1/24\n");
    EXPECT_EQ(run({"series", "f2", "--order", "2"}).out, "0, 1, 0\n");
    EXPECT_EQ(run({"series", "f3", "--order", "7"}).out, "0, 1, 0, 0, 1/3, 0, 0, 5/36\n");
    EXPECT_EQ(run({"series", "f2", "--order", "3", "--format", "dec"}).out, "0, 1, 0, 0.5\n");
}

TEST(CliSeries, CustomOmega)
{
    EXPECT_EQ(run({"series", "custom-omega", "--omega", "0", "1", "--order", "4"}).out, "0, 1, 1, 3/4, 5/12\n");
    EXPECT_EQ(run({"series", "custom-omega", "--omega", "0", "0", "1", "--order", "5"}).out,
              "0, 1, 0, 1/2, 0, 1/4\n");
    EXPECT_EQ(run({"series", "custom-omega", "--omega", "1", "1", "--order", "3"}).code, cs::cli::kExitUsage);
    EXPECT_EQ(run({"series", "custom-omega", "--order", "3"}).code, cs::cli::kExitUsage);
}

TEST(CliSeries, BadArguments)
{
    EXPECT_EQ(run({"series", "f1", "--format", "hex"}).code, cs::cli::kExitUsage);
    EXPECT_EQ(run({"series", "f1", "--order", "-1"}).code, cs::cli::kExitUsage);
    EXPECT_EQ(run({"series", "f1", "--order", "abc"}).code, cs::cli::kExitUsage);
    EXPECT_EQ(run({"series", "f9"}).code, cs::cli::kExitUsage);
    EXPECT_EQ(run({}).code, cs::cli::kExitUsage);
}

TEST(CliEval, Examples)
{
    auto r = run({"eval", "H21_log", "--tau", "0", "1", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = cs::Json::parse(r.out);
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["functional"], "H21_log");
    EXPECT_DOUBLE_EQ(j["value"]["re"].get<double>(), -0.0625);
    EXPECT_DOUBLE_EQ(j["magnitude"].get<double>(), 0.0625);

    r = run({"eval", "gamma1", "--c", "2", "0", "0"});
    j = cs::Json::parse(r.out);
    EXPECT_DOUBLE_EQ(j["magnitude"].get<double>(), 0.5);
    EXPECT_EQ(j["exact"]["num"], 1);
    EXPECT_EQ(j["exact"]["den"], 2);

    r = run({"eval", "H21_inverse", "--tau", "1", "0", "0"});
    EXPECT_DOUBLE_EQ(cs::Json::parse(r.out)["magnitude"].get<double>(), 0.046875);

    r = run({"eval", "H21_inverse", "--c", "2*sqrt(2/11)", "2", "2*sqrt(2/11)"});
    j = cs::Json::parse(r.out);
    EXPECT_NEAR(j["magnitude"].get<double>(), 3.0 / 44.0, 1e-12);
    EXPECT_FALSE(j.contains("exact"));

    r = run({"eval", "diff_gamma", "--tau", "0", "1", "0"});
    EXPECT_DOUBLE_EQ(cs::Json::parse(r.out)["value"].get<double>(), 0.25);

    r = run({"eval", "gamma2", "--c", "0", "2i", "0"});
    EXPECT_DOUBLE_EQ(cs::Json::parse(r.out)["value"]["im"].get<double>(), 0.25);
}

TEST(CliEval, UsageErrors)
{
    EXPECT_EQ(run({"eval", "gamma1", "--c", "2", "0", "0", "--tau", "1", "0", "0"}).code, cs::cli::kExitUsage);
    EXPECT_EQ(run({"eval", "gamma1"}).code, cs::cli::kExitUsage);
    EXPECT_EQ(run({"eval", "gamma9", "--c", "0", "0", "0"}).code, cs::cli::kExitUsage);
    EXPECT_EQ(run({"eval", "gamma1", "--c", "3", "0", "0"}).code, cs::cli::kExitUsage);
    EXPECT_EQ(run({"eval", "gamma1", "--tau", "0.5", "2", "0"}).code, cs::cli::kExitUsage);
    EXPECT_EQ(run({"eval", "gamma1", "--tau", "0.5", "(1", "0"}).code, cs::cli::kExitUsage);
}

TEST(CliLemma, Examples)
{
    auto r = run({"lemma", "Y", "--", "-0.2", "0.5", "0.3", "--oracle"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = cs::Json::parse(r.out);
    EXPECT_LE(j["discrepancy"].get<double>(), 1e-4);

    r = run({"lemma", "L23", "0.25"});
    EXPECT_DOUBLE_EQ(cs::Json::parse(r.out)["value"].get<double>(), 2.0);

    r = run({"lemma", "L41", "plus", "0.25", "-0.03125", "0.125"});
    EXPECT_DOUBLE_EQ(cs::Json::parse(r.out)["value"].get<double>(), 0.25);

    r = run({"lemma", "L41", "minus", "0.25", "-1/32", "1/8", "--oracle"});
    j = cs::Json::parse(r.out);
    EXPECT_NEAR(j["value"].get<double>(), 1.0 / std::sqrt(6.0), 1e-15);
    EXPECT_LE(j["discrepancy"].get<double>(), 1e-3);

    r = run({"lemma", "L24", "0.25", "0", "--oracle"});
    EXPECT_TRUE(cs::Json::parse(r.out)["within_bound"].get<bool>());
}

TEST(CliLemma, HypothesisAndUsageErrors)
{
    EXPECT_EQ(run({"lemma", "L24", "1.5", "0"}).code, cs::cli::kExitUsage);
    EXPECT_EQ(run({"lemma", "L24", "0.8", "0.1"}).code, cs::cli::kExitUsage);
    EXPECT_EQ(run({"lemma", "L41", "sideways", "1", "0", "0"}).code, cs::cli::kExitUsage);
    EXPECT_EQ(run({"lemma", "Y", "1", "2"}).code, cs::cli::kExitUsage);
    EXPECT_EQ(run({"lemma", "Z", "1"}).code, cs::cli::kExitUsage);
}

TEST_F(TempDir, VerifyWritesRoundTrippableReport)
{
    const auto out = path("report.json");
    const auto r = run({"verify", "H21_inverse", "--config", path("quick.cfg"), "--json", out});
    ASSERT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("1/1 passed"), std::string::npos);

    const std::string text = slurp(out);
    const auto doc = cs::Json::parse(text);
    EXPECT_EQ(cs::dump(doc), text);
    EXPECT_EQ(doc["schema"], 1);
    EXPECT_EQ(doc["config"]["grid_tau1"], 21);
    EXPECT_EQ(cs::config_from_json(doc["config"]), cs::load_config_file(path("quick.cfg")));

    // typed round trip as well
    const auto reports = cs::reports_from_json(doc["results"]);
    ASSERT_EQ(reports.size(), 1u);
    EXPECT_LE(reports[0].gap, 1e-4);
    EXPECT_EQ(cs::reports_to_json(reports), doc["results"]);
    EXPECT_EQ(cs::reports_to_json(reports).dump(2), doc["results"].dump(2));
    EXPECT_EQ(reports[0].theoretical_bound.exact, cs::Rational(3, 44));
}

TEST_F(TempDir, VerifyIsDeterministic)
{
    const auto a = path("a.json");
    const auto b = path("b.json");
    ASSERT_EQ(run({"verify", "all", "--config", path("quick.cfg"), "--json", a}).code, 0);
    ASSERT_EQ(run({"verify", "all", "--config", path("quick.cfg"), "--json", b}).code, 0);
    const auto ja = cs::Json::parse(slurp(a));
    const auto jb = cs::Json::parse(slurp(b));
    EXPECT_EQ(ja["results"].dump(2), jb["results"].dump(2));
    EXPECT_EQ(ja["config"], jb["config"]);
}

TEST_F(TempDir, VerifyFailureExitsOneAndPrintsReport)
{
    std::ofstream(path("tiny.cfg")) << "grid_tau1 = 2\ngrid_r = 2\ngrid_theta = 3\nrefinement_rounds = 0\n"
                                       "tolerance_attain = 1e-9\n";
    const auto r = run({"verify", "H21_inverse", "--config", path("tiny.cfg")});
    EXPECT_EQ(r.code, cs::cli::kExitFailed);
    EXPECT_NE(r.out.find("FAILED"), std::string::npos);
    EXPECT_NE(r.out.find("\"theorem_id\": \"H21_inverse\""), std::string::npos);
}

TEST_F(TempDir, SeriesAndEvalManifests)
{
    ASSERT_EQ(run({"series", "f1", "--order", "5", "--json", path("s.json")}).code, 0);
    const std::string text = slurp(path("s.json"));
    const auto doc = cs::Json::parse(text);
    EXPECT_EQ(cs::dump(doc), text);
    EXPECT_EQ(doc["results"]["coefficients"][4]["num"], 5);
    EXPECT_EQ(doc["results"]["coefficients"][4]["den"], 12);
    EXPECT_TRUE(doc.contains("config"));

    ASSERT_EQ(run({"eval", "gamma3", "--c", "0", "0", "2", "--json", path("e.json")}).code, 0);
    const std::string etext = slurp(path("e.json"));
    EXPECT_EQ(cs::dump(cs::Json::parse(etext)), etext);
}

TEST(ConfigFile, Parsing)
{
    const auto cfg = cs::parse_config_text("grid_tau1 = 11\n  shrink_factor=0.5 # comment\n\n# only a comment\n");
    EXPECT_EQ(cfg.grid_tau1, 11);
    EXPECT_DOUBLE_EQ(cfg.shrink_factor, 0.5);
    EXPECT_EQ(cfg.grid_r, cs::SearchConfig{}.grid_r);

    EXPECT_THROW(cs::parse_config_text("grid_tau1 11\n"), cs::format_error);
    EXPECT_THROW(cs::parse_config_text("grid_tau1 = eleven\n"), cs::format_error);
    EXPECT_THROW(cs::parse_config_text("grid_tau1 = 11x\n"), cs::format_error);
    EXPECT_THROW(cs::parse_config_text("colour = blue\n"), cs::format_error);
    EXPECT_THROW(cs::parse_config_text("shrink_factor = 2\n"), cs::format_error);
    EXPECT_THROW(cs::load_config_file("/nonexistent/coeffsharp.cfg"), cs::format_error);
}

TEST(JsonSurface, ScalarEncodings)
{
    EXPECT_EQ(cs::to_json(cs::Rational(-3, 44)).dump(), R"({"num":-3,"den":44})");
    const cs::Rational big = cs::Rational(1, 3) + cs::Rational(boost::multiprecision::pow(cs::Rational::value_type(10), 30));
    const auto j = cs::to_json(big);
    EXPECT_TRUE(j["num"].is_string());
    EXPECT_EQ(cs::rational_from_json(j), big);
    const auto b = cs::target_spec(cs::TheoremId::diff_gamma_lower).bound;
    EXPECT_EQ(cs::to_json(b)["expr"], "-1/sqrt(6)");
    EXPECT_EQ(cs::bound_from_json(cs::to_json(b)), b);
}

TEST(Binary, ExitCodes)
{
    EXPECT_EQ(run_binary("series f1 --order 4").out, "0, 1, 1, 3/4, 5/12\n");
    EXPECT_EQ(run_binary("series f1 --order 4").code, 0);
    EXPECT_EQ(run_binary("verify bogus").code, 2);
    EXPECT_EQ(run_binary("series f1 --format hex").code, 2);
    EXPECT_EQ(run_binary("lemma L24 2 0").code, 2);
    EXPECT_EQ(run_binary("lemma Y -- -0.2 0.5 0.3 --oracle").code, 0);
    EXPECT_EQ(run_binary("--help").code, 0);
}
