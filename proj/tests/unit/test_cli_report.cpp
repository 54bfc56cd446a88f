#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>

#include "generators.hpp"

using namespace syslat;

namespace {

struct ProcessResult {
    int exit_code = -1;
    std::string out;
};

ProcessResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + std::string(SYSLAT_CLI_PATH) + " " + args + " 2>/dev/null";
    ProcessResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

RunConfig quick_config() {
    RunConfig c;
    c.suites = {"pell", "primes", "systole"};
    return c;
}

const Claim* find_claim(const VerificationReport& r, const std::string& id) {
    for (const auto& c : r.claims)
        if (c.id == id) return &c;
    return nullptr;
}

} // namespace

TEST(Report, QuickSuitesPass) {
    const auto r = run_suite(quick_config());
    EXPECT_TRUE(r.all_required_pass());
    ASSERT_NE(find_claim(r, "pell.identity"), nullptr);
    EXPECT_EQ(find_claim(r, "pell.identity")->status, ClaimStatus::Pass);
    const Claim* sel = find_claim(r, "primes.selected");
    ASSERT_NE(sel, nullptr);
    EXPECT_EQ(sel->status, ClaimStatus::Recorded);
    EXPECT_NE(sel->details.find("2:7 3:13 4:97 5:181"), std::string::npos) << sel->details;
    ASSERT_EQ(r.table.size(), 4U);
    EXPECT_EQ(r.table[2].p, "97");
    ASSERT_EQ(r.skipped.size(), 1U);
    EXPECT_EQ(r.skipped.front().n, 1U);
}

TEST(Report, JsonRoundTrip) {
    auto cfg = quick_config();
    cfg.d = 5;
    const auto r = run_suite(cfg);
    const auto j = to_json(r);
    EXPECT_EQ(j.at("schema"), kReportSchema);
    const auto back = report_from_json(j);
    EXPECT_EQ(back.claims, r.claims);
    EXPECT_EQ(back.table.size(), r.table.size());
    for (std::size_t i = 0; i < r.table.size(); ++i) {
        EXPECT_EQ(back.table[i].p, r.table[i].p);
        EXPECT_EQ(format_bound(back.table[i].bound), format_bound(r.table[i].bound));
    }
    EXPECT_EQ(to_json(back).dump(), j.dump());
    nlohmann::json bad = j;
    bad["schema"] = "other/1";
    EXPECT_THROW(report_from_json(bad), Error);
}

TEST(Report, CsvAndMarkdownShapes) {
    const auto r = run_suite(quick_config());
    const std::string csv = emit_report(r, ReportFormat::Csv);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,t_n,y_n,p_n,primitive_set,diagram_ok,kernel_ok,systole_bound");
    EXPECT_NE(csv.find("4,97,56,97,97,false,false,1.096127203212"), std::string::npos) << csv;
    const std::string md = emit_report(r, ReportFormat::Markdown);
    EXPECT_NE(md.find("| 4 | 97 + 56 sqrt(3) | 97 | 97 |"), std::string::npos) << md;
    EXPECT_NE(md.find("Skipped n = 1"), std::string::npos);
}

TEST(Report, TimingIsOptIn) {
    auto cfg = quick_config();
    EXPECT_FALSE(to_json(run_suite(cfg)).contains("timing_seconds"));
    cfg.timing = true;
    EXPECT_TRUE(to_json(run_suite(cfg)).contains("timing_seconds"));
}

TEST(Report, ConfigValidation) {
    RunConfig c;
    c.d = 4;
    EXPECT_THROW(c.validate(), Error);
    c.d = 3;
    c.suites = {"nonsense"};
    EXPECT_THROW(c.validate(), Error);
    EXPECT_EQ(parse_report_format("md"), ReportFormat::Markdown);
    EXPECT_THROW(parse_report_format("xml"), Error);
}

TEST(Cli, PellSubcommand) {
    const auto r = run_cli("pell --d 5 --depth 3");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "n,t_n,y_n\n1,9,4\n2,161,72\n3,2889,1292\n");
}

TEST(Cli, PrimesSubcommand) {
    const auto r = run_cli("primes --d 3 --depth 3");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("1,4,2^2,2,-"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("3,52,2^2*13,13,13"), std::string::npos) << r.out;
}

TEST(Cli, SystoleSubcommand) {
    const auto r = run_cli("systole --d 3 --depth 5");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("4,97,97,1.096127203212"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run_cli("pell --d 4").exit_code, 2);
    EXPECT_EQ(run_cli("primes --rule biggest").exit_code, 2);
    EXPECT_EQ(run_cli("").exit_code, 2);
    EXPECT_EQ(run_cli("verify --suites nonsense").exit_code, 2);
    EXPECT_EQ(run_cli("pell --depth notanumber").exit_code, 2);
}

TEST(Cli, VerifyWritesRelativeOutputUnderOutputDir) {
    const auto dir = std::filesystem::temp_directory_path() / "syslat_cli_test";
    std::filesystem::remove_all(dir);
    const auto r = run_cli("verify --suites pell,primes,systole --out sub/report.json",
                           "SYSLAT_OUTPUT_DIR=" + dir.string());
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(dir / "sub" / "report.json");
    const std::string text{std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
    const auto back = report_from_json(nlohmann::json::parse(text));
    EXPECT_TRUE(back.all_required_pass());
    EXPECT_EQ(back.config.d, 3);
    std::filesystem::remove_all(dir);
}

TEST(Cli, ReportDefaultsToMarkdown) {
    const auto r = run_cli("report --suites pell");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out.rfind("# Verification report", 0), 0U);
}
