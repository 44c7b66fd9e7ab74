// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion, plus CLI surface checks.
// Usage: setcalc_acceptance <path-to-cli> <golden-dir>

#include "setcalc/audit.hpp"
#include "setcalc/cardinality.hpp"
#include "setcalc/errors.hpp"
#include "setcalc/parser.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace setcalc;

namespace {

int g_failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS " : "FAIL ") << name;
    if (!detail.empty())
        std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok)
        ++g_failures;
}

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& cli, const std::string& args) {
    const std::string cmd = cli + " " + args;
    CliResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return result;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.out.append(buf.data(), n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double run_criterion_checks(const std::vector<std::string>& names,
                            const AuditConfig& config, std::string& detail,
                            bool& ok) {
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t tested = 0;
    std::uint64_t failed = 0;
    for (const std::string& name : names) {
        const AuditReport r = run_check(name, config);
        tested += r.tested;
        failed += r.failures.size();
        if (!r.failures.empty())
            detail += " " + name + ":" + r.failures.front();
    }
    const auto stop = std::chrono::steady_clock::now();
    const double secs =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
            .count() /
        1000.0;
    ok = failed == 0;
    detail = std::to_string(tested) + " instances, " +
             std::to_string(failed) + " failures, " + std::to_string(secs) +
             "s" + detail;
    return secs;
}

void criterion_1_proposition_suite() {
    const std::vector<std::string> props = {
        "equiv",          "subsetequals0", "subsetequals", "zermelo-prop",
        "suppesinverse",  "suppes",        "inversesuppecor", "suppescor",
        "inverse",        "inverse2",      "uniqueness",   "transitivity"};
    std::string detail;
    bool ok = false;
    const double secs = run_criterion_checks(props, AuditConfig{}, detail, ok);
    report("criterion-1 section-3 proposition suite over V3", ok && secs < 60.0,
           detail);
}

void criterion_2_powered_oracle() {
    std::string detail;
    bool ok = false;
    run_criterion_checks({"powered-oracle"}, AuditConfig{}, detail, ok);
    report("criterion-2 powered-set oracle agreement", ok, detail);
}

void criterion_3_ch_machinery() {
    AuditConfig config;
    config.samples = 1000;
    std::string detail;
    bool ok = false;
    run_criterion_checks({"ch-minimality", "ch-bernstein", "ch-transitivity"},
                         config, detail, ok);
    report("criterion-3 CH machinery", ok, detail);
}

void criterion_4_neg_ch_theorem() {
    std::string detail;
    bool ok = false;
    run_criterion_checks({"neg-ch-theorem"}, AuditConfig{}, detail, ok);
    report("criterion-4 neg-CH theorem instances", ok, detail);
}

void criterion_5_neg_chs_laws() {
    std::string detail;
    bool ok = false;
    run_criterion_checks({"neg-chs-laws"}, AuditConfig{}, detail, ok);
    report("criterion-5 neg-CHS order laws", ok, detail);
}

void criterion_6_density() {
    AuditConfig config;
    config.samples = 500;
    std::string detail;
    bool ok = false;
    const double secs =
        run_criterion_checks({"density"}, config, detail, ok);
    report("criterion-6 density witnesses 500/500", ok && secs < 30.0, detail);
}

void criterion_7_parser(const std::string& cli, const std::string& golden) {
    AuditConfig config;
    config.samples = 10000;
    std::string detail;
    bool ok = false;
    run_criterion_checks({"parser-roundtrip"}, config, detail, ok);

    // three worked examples, frozen
    bool worked = true;
    // P({a,b}) with a,b = 0,1
    worked = worked && print_normal_form(normalize(parse_term("P({0,1})"))) ==
                           "{{},{{}},{{{}}},{{},{{}}}}";
    // P^-1(P({a,b,c})) with a,b,c = 0,1,2
    worked = worked &&
             print_normal_form(normalize(parse_term("P^-1(P({0,1,2}))"))) ==
                 "{{},{{}},{{},{{}}}}";
    // P^-1({1,2,3,4,5}) has CH-cardinality beth:0
    worked = worked &&
             ch_card(parse_term("P^-1({1,2,3,4,5})")).str() == "beth:0";

    // the same three through the CLI against golden JSON
    const std::vector<std::pair<std::string, std::string>> goldens = {
        {"eval \"P({0,1})\" --format json", "eval_pow01.json"},
        {"eval \"P^-1(P({0,1,2}))\" --format json", "eval_invpow012.json"},
        {"eval \"P^-1({1,2,3,4,5})\" --format json", "eval_inv12345.json"},
    };
    bool golden_ok = true;
    for (const auto& [args, file] : goldens) {
        const CliResult r = run_cli(cli, args);
        const std::string want = read_file(golden + "/" + file);
        golden_ok = golden_ok && r.exit_code == 0 && !want.empty() &&
                    r.out == want;
    }
    report("criterion-7 parser round-trip and worked examples",
           ok && worked && golden_ok, detail);
}

void criterion_8_determinism(const std::string& cli, const std::string& golden) {
    const std::string args = "audit --rank 3 --seed 42 --format json";
    const CliResult a = run_cli(cli, args);
    const CliResult b = run_cli(cli, args);
    const bool ok = a.exit_code == 0 && b.exit_code == 0 && !a.out.empty() &&
                    a.out == b.out;
    report("criterion-8 audit output determinism", ok,
           "two runs, " + std::to_string(a.out.size()) + " bytes");

    // audit report schema against the recorded golden
    const CliResult single = run_cli(cli, "audit --check inverse --format json");
    const std::string want = read_file(golden + "/audit_inverse.json");
    report("cli-surface audit json schema",
           single.exit_code == 0 && !want.empty() && single.out == want);
}

void cli_surface(const std::string& cli) {
    struct Expectation {
        const char* args;
        int exit_code;
        const char* stdout_line; // nullptr: don't check
    };
    const std::vector<Expectation> cases = {
        {"cmp --order=negch \"{0,1,2}\" \"{0,1,2} u P^-1({1})\"", 0, "lt"},
        {"cmp --order=negch \"{0,1,2} u P^-1({1})\" \"{0,1,2}\"", 0, "gt"},
        {"cmp --order=negchs \"3 u P^-1({1})\" \"3 u P^-1(3)\"", 0, "lt"},
        {"cmp --order=ch \"P^-1(3)\" \"N\"", 0, "eq"},
        {"cmp --order=negch \"3 u P^-1({1})\" \"3 u P^-2(3)\"", 0,
         "incomparable"},
        {"between \"3\" \"3 u P^-1({1})\"", 0,
         "{{},{{}},{{},{{}}}} u P^-2({{{}}})"},
        {"between \"3\" \"3\" 2>/dev/null", 1, nullptr},
        {"between \"{}\" \"1\" 2>/dev/null", 1, nullptr},
        {"eval \"P^-2(1)\" 2>/dev/null", 1, nullptr},
        {"cmp --order=ch \"P^-2({0,1,2})\" \"3\" 2>/dev/null", 1, nullptr},
        {"normalize \"P^-1(P({0,1,2}))\"", 0, "{{},{{}},{{},{{}}}}"},
        {"audit --check no-such 2>/dev/null", 1, nullptr},
        {"audit --check inverse --format json", 0, nullptr},
    };
    bool ok = true;
    std::string detail;
    for (const Expectation& c : cases) {
        const CliResult r = run_cli(cli, c.args);
        bool case_ok = r.exit_code == c.exit_code;
        if (c.stdout_line) {
            std::string line = r.out;
            if (!line.empty() && line.back() == '\n')
                line.pop_back();
            case_ok = case_ok && line == c.stdout_line;
        }
        if (!case_ok) {
            ok = false;
            detail += std::string(" [") + c.args + " -> exit " +
                      std::to_string(r.exit_code) + "]";
        }
    }
    report("cli-surface exit codes and verdicts", ok, detail);
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: setcalc_acceptance <cli-path> <golden-dir>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::string golden = argv[2];

    criterion_1_proposition_suite();
    criterion_2_powered_oracle();
    criterion_3_ch_machinery();
    criterion_4_neg_ch_theorem();
    criterion_5_neg_chs_laws();
    criterion_6_density();
    criterion_7_parser(cli, golden);
    criterion_8_determinism(cli, golden);
    cli_surface(cli);

    if (g_failures != 0) {
        std::cout << g_failures << " acceptance failure(s)\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
