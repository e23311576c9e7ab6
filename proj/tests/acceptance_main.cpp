// Acceptance suite: one line per criterion, [PASS]/[FAIL], nonzero exit on
// any failure. CLI-facing criteria run the installed binary (--cli PATH).

#include "json.hpp"

#include "mirrorlab/classify.hpp"
#include "mirrorlab/dwork.hpp"
#include "mirrorlab/errors.hpp"
#include "mirrorlab/hypergeom.hpp"
#include "mirrorlab/modular_type.hpp"

#include "corpus.hpp"
#include "properties.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using namespace mirrorlab;
using nlohmann::json;

namespace {

std::string cli_path;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args)
{
    std::string cmd = cli_path + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    RunResult res;
    if (!pipe) return res;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

// 1. quintic instanton numbers through the CLI
bool criterion_instantons(std::string& detail)
{
    auto r = run_cli("yukawa --a 1/5,2/5,3/5,4/5 --n0 5 --N 3125 --order 12 --dmax 3");
    if (r.exit_code != 0) {
        detail = "exit code " + std::to_string(r.exit_code);
        return false;
    }
    auto j = json::parse(r.out, nullptr, false);
    if (j.is_discarded()) {
        detail = "unparseable output";
        return false;
    }
    json want = json::array({"2875", "609250", "317206375"});
    detail = "n_1..n_3 = " + j["instantons"].dump();
    return j["instantons"] == want;
}

// 2. generating function through the CLI
bool criterion_genfun(std::string& detail)
{
    auto r = run_cli("genfun --terms 7 --format plain");
    detail = r.out;
    if (!detail.empty() && detail.back() == '\n') detail.pop_back();
    return r.exit_code == 0 && r.out == "1,28,4,14,14,40,40\n";
}

// 3. classification table blocks through the CLI
bool criterion_table(std::string& detail)
{
    const std::pair<unsigned, std::size_t> blocks[] = {{4, 14}, {2, 28}, {6, 40}};
    for (auto [n, expected] : blocks) {
        auto r = run_cli("table1 " + std::to_string(n));
        if (r.exit_code != 0) {
            detail = "block " + std::to_string(n) + " exited " + std::to_string(r.exit_code);
            return false;
        }
        auto j = json::parse(r.out, nullptr, false);
        if (j.is_discarded() || j["match"] != true || j["entries"].size() != expected ||
            !j["diff"]["missing"].empty() || !j["diff"]["extra"].empty()) {
            detail = "block " + std::to_string(n) + " mismatched";
            return false;
        }
    }
    detail = "blocks 4/2/6 exact (14/28/40 rows)";
    return true;
}

// 4. fast-congruence counterexample with a p-integral truncation
bool criterion_remark(std::string& detail)
{
    HGParams a = HGParams::parse("169/330,139/330");
    auto fc = fast_congruence(a, 101, 120);
    if (fc.first_failure != std::optional<std::size_t>{2}) {
        detail = "fast congruence failure index mismatch";
        return false;
    }
    Series q = mirror_q(a, 120);
    auto fail = series_p_integral(truncate(q, 101), 101);
    if (fail) {
        detail = "mirror map lost 101-integrality at index " + std::to_string(*fail);
        return false;
    }
    detail = "congruence fails at 2; q 101-integral below index 101";
    return true;
}

// 5. the unconditional congruence across the corpus
bool criterion_theorem_suite(std::string& detail)
{
    int cells = 0;
    for (const auto& a : testutil::corpus20()) {
        for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL}) {
            if (!a.is_good_prime(p)) continue;
            ++cells;
            if (auto bad = dwork_theorem_check(a, p, 3 * p)) {
                detail = a.str() + " p=" + std::to_string(p) + " fails at " + std::to_string(*bad);
                return false;
            }
        }
    }
    detail = std::to_string(cells) + " cells clean";
    return true;
}

// 6. condition holds and q stays integral to order 200 on the 14 cases;
// cases run in parallel, results are aggregated in case order
bool criterion_soundness(std::string& detail)
{
    auto cases = testutil::cy_cases();
    std::vector<std::string> failures(cases.size());
    std::vector<int> cells(cases.size(), 0);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(cases.size()); ++i) {
        const auto& a = cases[i];
        Series q = mirror_q(a, 200);
        for (unsigned long p : primes_up_to(31)) {
            if (!a.is_good_prime(p)) continue;
            ++cells[i];
            if (!condition_check(a, p)) {
                failures[i] = a.str() + ": condition fails at p=" + std::to_string(p);
                break;
            }
            if (auto bad = series_p_integral(q, p)) {
                failures[i] = a.str() + ": non-" + std::to_string(p) + "-integral at " +
                              std::to_string(*bad);
                break;
            }
        }
    }
    int total = 0;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        if (!failures[i].empty()) {
            detail = failures[i];
            return false;
        }
        total += cells[i];
    }
    detail = std::to_string(total) + " (case, prime) cells integral to order 200";
    return true;
}

// 7. a tuple outside the classification shows non-integrality
bool criterion_negative_control(std::string& detail)
{
    HGParams a = HGParams::parse("1/7,2/7,3/7,3/7");
    Series q = mirror_q(a, 200);
    for (unsigned long p : primes_up_to(50)) {
        if (!a.is_good_prime(p)) continue;
        if (condition_check(a, p)) continue;
        if (auto bad = series_p_integral(q, p)) {
            detail = "p=" + std::to_string(p) + ", first non-integral index " +
                     std::to_string(*bad);
            return true;
        }
    }
    detail = "no witness prime <= 50";
    return false;
}

// 8. rescaling constants and integral rescaled mirror maps
bool criterion_n_constant(std::string& detail)
{
    HGParams quintic = HGParams::parse("1/5,2/5,3/5,4/5");
    if (n_constant(quintic) != 3125) {
        detail = "quintic N != 3125";
        return false;
    }
    if (!all_integer(rescale(series_F(quintic, 30), Rational(3125)))) {
        detail = "F(3125 z) not integral to order 30";
        return false;
    }
    for (const auto& a : testutil::cy_cases()) {
        Integer N = n_constant(a);
        Series q = rescaled_mirror_q(a, N, 20);
        if (auto bad = first_non_integer(q)) {
            detail = a.str() + ": rescaled q non-integer at " + std::to_string(*bad);
            return false;
        }
    }
    detail = "quintic N = 3125; all 14 rescaled mirror maps integral to order 20";
    return true;
}

// 9. randomized property suites, fixed seeds
bool criterion_properties(std::string& detail)
{
    struct Suite {
        const char* name;
        std::function<bool()> run;
    };
    const Suite suites[] = {
        {"ring-axioms", [] { return testutil::prop_ring_axioms(101, 200); }},
        {"exp-log", [] { return testutil::prop_exp_log(102, 200); }},
        {"theta-leibniz", [] { return testutil::prop_theta_leibniz(103, 200); }},
        {"reversion", [] { return testutil::prop_reversion_roundtrip(104, 200); }},
        {"pow-additivity", [] { return testutil::prop_pow_additivity(105, 200); }},
        {"dwork-identities", [] { return testutil::prop_dwork_identities(106, 200); }},
        {"euler-identity", [] { return testutil::prop_euler_identity(107, 200, 20); }},
        {"lambert-roundtrip", [] { return testutil::prop_lambert_roundtrip(108, 200); }},
    };
    for (const auto& s : suites) {
        if (!s.run()) {
            detail = std::string(s.name) + " failed";
            return false;
        }
    }
    detail = "8 suites x 200 instances";
    return true;
}

} // namespace

int main(int argc, char** argv)
{
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--cli" && i + 1 < argc) cli_path = argv[++i];
        else if (arg == "--criterion" && i + 1 < argc) only = std::atoi(argv[++i]);
    }
    if (cli_path.empty()) cli_path = "./build/tools/mirrorlab";

    struct Criterion {
        int id;
        const char* name;
        bool (*fn)(std::string&);
    };
    const Criterion criteria[] = {
        {1, "quintic instanton numbers", criterion_instantons},
        {2, "generating function", criterion_genfun},
        {3, "classification table blocks", criterion_table},
        {4, "fast-congruence counterexample", criterion_remark},
        {5, "unconditional congruence suite", criterion_theorem_suite},
        {6, "condition soundness to order 200", criterion_soundness},
        {7, "negative control", criterion_negative_control},
        {8, "rescaling constants", criterion_n_constant},
        {9, "randomized property suites", criterion_properties},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        if (only && c.id != only) continue;
        std::string detail;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] criterion %d: %s (%.1fs) %s\n", ok ? "PASS" : "FAIL", c.id, c.name,
                    secs, detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
