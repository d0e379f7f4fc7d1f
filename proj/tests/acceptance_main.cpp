// Acceptance suite: runs every registered claim at its default bounds and
// prints one PASS/FAIL line per criterion. Exit code is the number of
// failing criteria.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "repfact/claims.hpp"

namespace {

struct Criterion {
    int number;
    const char* label;
    std::vector<std::string> claim_ids;
};

const std::vector<Criterion> criteria = {
    {1, "worked example aaaababa", {"intro-example"}},
    {2, "exhaustive oracle equivalence (binary words up to 12)",
     {"dp-oracle-exhaustive"}},
    {3, "fibonacci widths (factors <= 3, prefixes <= 2, both attained)",
     {"fib-factor-bound", "fib-prefix-bound"}},
    {4, "thue-morse width bound 7 with sample factors 1..7", {"tm-width-bound"}},
    {5, "thue-morse factorization uniqueness", {"tm-uniqueness"}},
    {6, "thue-morse width DFAO has 28 states", {"tm-dfao-28"}},
    {7, "regular paperfolding width bound 10, attained", {"rp-width-bound"}},
    {8, "all paperfolding words: width <= 10, factorizable length <= 45",
     {"pf-width-bound", "pf-length-bound"}},
    {9, "paperfolding dichotomy (<= 7 or = 10)", {"pf-dichotomy"}},
    {10, "rudin-shapiro rsrf: 23 states, induction, unbounded widths",
     {"rs-23-states"}},
    {11, "zeckendorf round trip and bijectivity", {"zeckendorf-roundtrip"}},
    {12, "automata algebra (minimize, equivalence, combine = min width)",
     {"automata-algebra"}},
};

} // namespace

int main() {
    int failures = 0;
    double total_seconds = 0.0;

    for (const auto& criterion : criteria) {
        bool pass = true;
        double seconds = 0.0;
        std::string failed_claim;
        std::string first_counterexample;
        for (const auto& id : criterion.claim_ids) {
            auto report = repfact::claims::run_claim(id);
            seconds += report.runtime_seconds;
            if (!report.pass) {
                pass = false;
                failed_claim = id;
                if (!report.witnesses.empty()) {
                    const auto& w = report.witnesses.front();
                    first_counterexample = w.sequence + " (i=" + std::to_string(w.i) +
                                           ", n=" + std::to_string(w.n) + "): " +
                                           w.detail;
                }
            }
        }
        total_seconds += seconds;
        if (pass) {
            std::printf("PASS  criterion %2d  %-62s [%7.2f s]\n", criterion.number,
                        criterion.label, seconds);
        } else {
            ++failures;
            std::printf("FAIL  criterion %2d  %-62s [%7.2f s]\n", criterion.number,
                        criterion.label, seconds);
            std::printf("      claim %s: %s\n", failed_claim.c_str(),
                        first_counterexample.c_str());
        }
        std::fflush(stdout);
    }

    std::printf("%d/%zu criteria passed in %.1f s\n",
                static_cast<int>(criteria.size()) - failures, criteria.size(),
                total_seconds);
    return failures;
}
