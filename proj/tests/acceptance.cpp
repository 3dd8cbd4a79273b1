// Acceptance suite: every criterion prints one PASS/FAIL line; the binary
// exits nonzero if any fails. Criteria 1-4 drive the CLI surface, 5-8 the
// seeded property suites.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "conic/approximation.hpp"
#include "conic/checks.hpp"
#include "conic/cli.hpp"
#include "conic/errors.hpp"
#include "conic/group.hpp"

using namespace conic;

namespace {

constexpr std::uint64_t kSeed = 0x5EEDC0DE;

struct Outcome {
    bool pass = true;
    std::string detail;
    double seconds = 0;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

cli::CommandRequest parse(std::initializer_list<const char*> args) {
    std::vector<std::string> v(args.begin(), args.end());
    std::string help;
    auto req = cli::parse_args(v, &help);
    if (!req) throw error(errc::invalid_argument, "unexpected help request");
    return *req;
}

void expect(Outcome& o, bool cond, const std::string& what) {
    if (!cond && o.pass) {
        o.pass = false;
        o.detail = what;
    }
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
    Outcome o;
    auto res = cli::run(parse({"power", "--h", "-13/4", "--d", "2", "--x", "4", "--y", "1",
                               "-n", "5"}));
    expect(o, res.exit_code == 0, "exit code " + std::to_string(res.exit_code));

    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> limit_fields;
    for (const std::string& line : split(res.out, '\n')) {
        if (line.empty()) continue;
        auto fields = split(line, '\t');
        if (fields[0] == "ratio_limit") limit_fields = fields;
        else if (fields[0] != "n") rows.push_back(fields);
    }
    expect(o, rows.size() == 6, "expected 6 rows");
    if (!o.pass) return o;

    const char* expected_xy[4][2] = {{"18", "19/4"},
                                     {"163/2", "345/16"},
                                     {"2953/8", "6251/64"},
                                     {"53499/32", "113249/256"}};
    for (int n = 2; n <= 5; ++n) {
        expect(o, rows[n][1] == expected_xy[n - 2][0] && rows[n][2] == expected_xy[n - 2][1],
               "power row " + std::to_string(n) + " mismatch: " + rows[n][1] + ", " + rows[n][2]);
    }

    const char* expected_ratio[5] = {"0.25", "0.26388", "0.26457", "0.26460", "0.26460"};
    for (int n = 1; n <= 5; ++n) {
        Rat ratio = parse_rat(rows[n][2]) / parse_rat(rows[n][1]);
        expect(o, trunc_sig(ratio, 5) == parse_rat(expected_ratio[n - 1]),
               "ratio at n = " + std::to_string(n) + " is not " + expected_ratio[n - 1]);
    }

    expect(o, !limit_fields.empty(), "missing ratio_limit line");
    if (!o.pass) return o;
    expect(o, limit_fields[1] == "8/(13 + 3*sqrt(33))",
           "closed form printed as " + limit_fields[1]);
    Rat dec = parse_rat(limit_fields[3]);
    expect(o, rat_abs(dec - parse_rat("0.264605")) < Rat(5, pow10(7)),
           "limit decimal " + limit_fields[3] + " not within 5e-7 of 0.264605");
    return o;
}

Outcome criterion2() {
    Outcome o;
    FieldSpec spec = FieldSpec::reals(60);
    unsigned prec = spec.working_precision();
    RealNumber pi = parse_real_target("pi", prec);
    AuxiliaryRoots roots = solve_auxiliary(Rat(0), Rat(-1), pi, prec);
    CFExpansion e = cf_expand(roots.plus.value, 10, spec);

    long expected_digits[10] = {1, 2, 1, 2, 1, 1, 3, 1, 1, 5};
    long expected_p[10] = {1, 3, 4, 11, 15, 26, 93, 119, 212, 1179};
    long expected_q[10] = {1, 2, 3, 8, 11, 19, 68, 87, 155, 862};

    expect(o, e.digits.size() == 10, "expected 10 digits, got " + std::to_string(e.digits.size()));
    expect(o, e.reliable_count == 10, "digits not certified at real:60");
    if (!o.pass) return o;
    for (int i = 0; i < 10; ++i) {
        expect(o, e.digits[i] == expected_digits[i], "digit " + std::to_string(i) + " mismatch");
        expect(o, e.convergents[i].first == expected_p[i] && e.convergents[i].second == expected_q[i],
               "convergent " + std::to_string(i) + " mismatch");
    }
    return o;
}

Outcome criterion3() {
    Outcome o;
    auto res = cli::run(parse({"approximate", "--field", "real:60", "--h", "0", "--d", "-1",
                               "--beta", "pi", "-n", "9"}));
    expect(o, res.exit_code == 0, "exit code " + std::to_string(res.exit_code));

    const char* expected_ratio[9] = {"12/5",       "24/7",        "176/57",
                                     "165/52",     "988/315",     "12648/4025",
                                     "10353/3296", "65720/20919", "2032596/646997"};
    // truncated decimals as printed in the reference list
    const char* expected_dec[9] = {"2.4",    "3.4285", "3.0877", "3.1730", "3.1365",
                                   "3.1423", "3.1410", "3.1416", "3.1415"};

    std::vector<std::string> ratios, decs;
    std::string last_err;
    for (const std::string& line : split(res.out, '\n')) {
        if (line.empty()) continue;
        auto fields = split(line, '\t');
        if (fields[0] == "n" || fields.size() < 9) continue;
        if (fields[5].empty()) continue;  // flagged pole step
        ratios.push_back(fields[5]);
        decs.push_back(fields[6]);
        last_err = fields[7];
    }
    expect(o, ratios.size() == 9, "expected 9 ratios, got " + std::to_string(ratios.size()));
    if (!o.pass) return o;
    for (int i = 0; i < 9; ++i) {
        expect(o, ratios[i] == expected_ratio[i],
               "ratio " + std::to_string(i) + " is " + ratios[i] + ", wanted " + expected_ratio[i]);
        std::string want = expected_dec[i];
        expect(o, decs[i].substr(0, want.size()) == want,
               "decimal " + std::to_string(i) + " is " + decs[i] + ", wanted prefix " + want);
    }
    // |ratio_9 - pi| < 1e-5
    expect(o, parse_rat(last_err) < Rat(1, pow10(5)), "|ratio_9 - pi| = " + last_err);
    return o;
}

Outcome criterion4() {
    Outcome o;
    auto res = cli::run(parse({"pythagorean", "--field", "real:60", "--beta", "pi", "-n", "5"}));
    expect(o, res.exit_code == 0, "exit code " + std::to_string(res.exit_code));

    long expected[5][3] = {
        {5, 12, 13}, {7, 24, 25}, {57, 176, 185}, {52, 165, 173}, {315, 988, 1037}};
    std::vector<std::vector<std::string>> rows;
    bool halving_documented = false;
    for (const std::string& line : split(res.out, '\n')) {
        if (line.empty()) continue;
        auto fields = split(line, '\t');
        if (fields[0] == "n" || fields.size() < 10) continue;
        if (fields[3].empty()) continue;  // flagged p = q step
        rows.push_back(fields);
        if (fields[9].find("common factor 2 removed") != std::string::npos)
            halving_documented = true;
    }
    expect(o, rows.size() == 5, "expected 5 triples, got " + std::to_string(rows.size()));
    if (!o.pass) return o;
    for (int i = 0; i < 5; ++i) {
        Int a(rows[i][3]), b(rows[i][4]), c(rows[i][5]);
        expect(o, a == expected[i][0] && b == expected[i][1] && c == expected[i][2],
               "triple " + std::to_string(i) + " is (" + rows[i][3] + ", " + rows[i][4] + ", " +
                   rows[i][5] + ")");
        expect(o, a * a + b * b == c * c, "triple " + std::to_string(i) + " fails A^2+B^2=C^2");
    }
    // the (52,165,173) entry replaces the erroneous (52,165,346); the output
    // note must document the removed factor behind the discrepancy
    expect(o, halving_documented, "halving note missing");
    return o;
}

Outcome from_suite(const SuiteReport& report) {
    Outcome o;
    for (const PropertyResult& r : report.results) {
        expect(o, r.passed(),
               report.suite + "." + r.name + " failed " + std::to_string(r.failures) + "/" +
                   std::to_string(r.samples) + ": " + r.detail);
    }
    return o;
}

Outcome criterion5() { return from_suite(run_group_suite(kSeed, 500)); }
Outcome criterion6() { return from_suite(run_redei_suite(kSeed, 200)); }
Outcome criterion7() { return from_suite(run_power_suite(kSeed, 200)); }
Outcome criterion8() { return from_suite(run_approx_suite(kSeed, 100)); }

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* name;
        Outcome (*fn)();
        double budget_seconds;  // 0 = no requirement
    };
    const Entry entries[] = {
        {1, "power table of the (4,1) point with ratio limit", criterion1, 1.0},
        {2, "continued fraction of the pi auxiliary at real:60", criterion2, 1.0},
        {3, "nine exact pi approximations over the circle", criterion3, 0.0},
        {4, "primitive Pythagorean triples with documented halving", criterion4, 0.0},
        {5, "group/isomorphism/quotient/norm property suites (500 samples)", criterion5, 60.0},
        {6, "Redei strategy and law equivalences (200 contexts, n <= 256)", criterion6, 0.0},
        {7, "point-power identities and halving (200 points)", criterion7, 0.0},
        {8, "limit lemma numerics (100 specs, 50 points, rejections)", criterion8, 0.0},
    };

    int failures = 0;
    for (const Entry& entry : entries) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = entry.fn();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (entry.budget_seconds > 0 && o.seconds >= entry.budget_seconds) {
            o.pass = false;
            o.detail = "runtime " + std::to_string(o.seconds) + "s over budget " +
                       std::to_string(entry.budget_seconds) + "s";
        }
        std::ostringstream line;
        line << (o.pass ? "PASS" : "FAIL") << " criterion " << entry.id << ": " << entry.name
             << " [" << o.seconds << "s]";
        if (!o.pass) line << " -- " << o.detail;
        std::cout << line.str() << "\n";
        if (!o.pass) ++failures;
    }
    if (failures == 0) {
        std::cout << "all 8 criteria passed\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}
