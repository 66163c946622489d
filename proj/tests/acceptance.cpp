// Acceptance suite: runs every release criterion at its stated bound and
// prints one pass/fail line per criterion. All arithmetic is exact, so every
// comparison is equality; the only tolerances are the stated time budgets.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "skeinlab/verify.hpp"

using namespace skeinlab;

namespace {

int failures = 0;

long long now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

void report(int number, const std::string& label, bool pass, long long elapsed) {
    std::printf("[%s] criterion %2d: %s (%lld ms)\n", pass ? "PASS" : "FAIL", number,
                label.c_str(), elapsed);
    if (!pass) ++failures;
}

bool run_checks(const std::vector<CheckResult>& checks) {
    bool all = true;
    for (const auto& check : checks) {
        all = all && check.pass;
        if (!check.pass) {
            std::printf("       failed check '%s': %s\n", check.name.c_str(),
                        check.detail.dump().c_str());
        }
    }
    return all;
}

}  // namespace

int main() {
    {
        long long start = now_ms();
        bool pass = run_checks({check_identities(64)});
        long long elapsed = now_ms() - start;
        report(1, "identity suite, all tags, n, m <= 64, under 60 s",
               pass && elapsed < 60000, elapsed);
    }
    {
        long long start = now_ms();
        bool pass = run_checks({check_example_small_differences()});
        report(2, "byte-exact S_2 - S_1 and S_3 - S_2", pass, now_ms() - start);
    }
    {
        long long start = now_ms();
        bool pass = run_checks({check_dominance_chain(32)});
        report(3, "dominance chain at N = 32 with negative control", pass, now_ms() - start);
    }
    {
        long long start = now_ms();
        bool pass = run_checks({check_products(64), check_odd_odd(31)});
        report(4, "structure constants vs oracle to 64, odd-odd display to 31", pass,
               now_ms() - start);
    }
    {
        long long start = now_ms();
        bool pass = run_checks({check_annulus(32)});
        report(5, "annulus closed forms equal recurrences, n <= 32", pass, now_ms() - start);
    }
    {
        long long start = now_ms();
        bool pass = run_checks({check_disk(32)});
        report(6, "disk closed = rewrite to 32, printed outputs, symmetry, positivity", pass,
               now_ms() - start);
    }
    {
        long long start = now_ms();
        bool pass = run_checks({check_rule_forcing()});
        report(7, "C-rule coefficients forced to (q^2, q^-2, 1)", pass, now_ms() - start);
    }
    {
        long long start = now_ms();
        bool pass = run_checks({check_transparency()});
        long long elapsed = now_ms() - start;
        report(8, "transparency for 1 <= N <= 12 with negative control, under 10 s",
               pass && elapsed < 10000, elapsed);
    }
    {
        long long start = now_ms();
        bool pass = run_checks({check_audit(32, 100)});
        report(9, "positivity audit: lower bounds at 32 and d closed form", pass,
               now_ms() - start);
    }
    {
        long long start = now_ms();
        std::vector<CheckResult> first = verify_all(32);
        bool pass = run_checks(first);
        long long elapsed = now_ms() - start;

        // byte-level determinism of the merged result document
        Json doc_first = Json::array();
        for (const auto& check : first) {
            doc_first.push_back(Json{{"name", check.name}, {"pass", check.pass},
                                     {"detail", check.detail}});
        }
        Json doc_second = Json::array();
        for (const auto& check : verify_all(32)) {
            doc_second.push_back(Json{{"name", check.name}, {"pass", check.pass},
                                      {"detail", check.detail}});
        }
        bool deterministic = doc_first.dump() == doc_second.dump();
        report(10, "full suite at max 32 under 5 minutes, deterministic output",
               pass && deterministic && elapsed < 300000, elapsed);
    }

    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "OK" : "NOT OK", failures);
    return failures == 0 ? 0 : 1;
}
