// Acceptance gate: one line per criterion, exit code counts the failures.
// Criteria 1 through 4 compare the embedding criteria against randomized
// sampling over their exhaustive universes, criterion 5 folds the rank
// formulas over the same universes, 6 covers block profiles, 7 the
// construction/extraction round trip, 8 the order axioms.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "kron/verify.hpp"

using namespace kron;

namespace {

struct Timed {
    SuiteResult result;
    double seconds = 0;
};

Timed timed_suite(const char* name, const VerifyOptions& options = {}) {
    const auto start = std::chrono::steady_clock::now();
    Timed t;
    t.result = run_suite(name, options);
    t.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    return t;
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f s", s);
    return buf;
}

int line(int criterion, bool pass, const std::string& detail) {
    std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL")
              << " (" << detail << ")" << std::endl;
    return pass ? 0 : 1;
}

void dump_failures(const SuiteResult& r) {
    for (const std::string& f : r.failures) {
        std::cerr << "  " << r.suite << ": " << f << "\n";
    }
}

std::string embed_detail(const Timed& t) {
    return std::to_string(t.result.instances) + " pairs, " +
           std::to_string(t.result.embed_disagreements) + " disagreements, " +
           fmt_seconds(t.seconds);
}

}  // namespace

int main() {
    int failures = 0;
    const double budget = 300.0;

    const Timed pp = timed_suite("pp");
    failures += line(1, pp.result.embed_disagreements == 0 &&
                            pp.seconds < budget,
                     embed_detail(pp));

    const Timed ii = timed_suite("ii");
    failures += line(2, ii.result.embed_disagreements == 0 &&
                            ii.seconds < budget,
                     embed_detail(ii));

    const Timed rr = timed_suite("rr");
    failures += line(3, rr.result.embed_disagreements == 0 &&
                            rr.seconds < budget,
                     embed_detail(rr));

    const Timed pi = timed_suite("pi");
    failures += line(4, pi.result.embed_disagreements == 0, embed_detail(pi));

    const long long rank_checks = pp.result.rank_checks +
                                  ii.result.rank_checks +
                                  rr.result.rank_checks;
    const long long rank_bad = pp.result.rank_disagreements +
                               ii.result.rank_disagreements +
                               rr.result.rank_disagreements;
    failures += line(5, rank_bad == 0,
                     std::to_string(rank_checks) + " rank comparisons, " +
                         std::to_string(rank_bad) + " disagreements");

    const Timed blocktri = timed_suite("blocktri");
    failures += line(6, blocktri.result.rank_disagreements == 0,
                     std::to_string(blocktri.result.instances) +
                         " profiles, " +
                         std::to_string(blocktri.result.rank_disagreements) +
                         " disagreements, " + fmt_seconds(blocktri.seconds));

    const Timed roundtrip = timed_suite("roundtrip");
    failures += line(7, roundtrip.result.embed_disagreements == 0 &&
                            roundtrip.seconds < budget,
                     std::to_string(roundtrip.result.instances) +
                         " invariant sets, " +
                         std::to_string(roundtrip.result.embed_checks) +
                         " extractions, " +
                         std::to_string(roundtrip.result.embed_disagreements) +
                         " mismatches, " + fmt_seconds(roundtrip.seconds));

    const Timed order = timed_suite("order");
    failures += line(8, order.result.embed_disagreements == 0,
                     std::to_string(order.result.instances) + " instances, " +
                         std::to_string(order.result.embed_disagreements) +
                         " violations, " + fmt_seconds(order.seconds));

    for (const Timed* t : {&pp, &ii, &rr, &pi, &blocktri, &roundtrip, &order}) {
        dump_failures(t->result);
    }
    return failures;
}
