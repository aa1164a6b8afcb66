#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kron/rank.hpp"

namespace kron {

struct VerifyOptions {
    // 0 picks the suite default. For pp/ii/pi this bounds the partition
    // sums; for rr the exhaustive total regular dimension; for blocktri the
    // block size; for roundtrip the total dimension; for order the
    // partition sums of sampled operands.
    int max_dim = 0;
    // Number of randomized instances for suites with a random half;
    // 0 picks the suite default.
    long long count = 0;
    int trials = kDefaultTrials;
    std::uint64_t prime = kDefaultPrime;
    std::uint64_t seed = kDefaultSeed;
};

struct SuiteResult {
    std::string suite;
    int max_dim = 0;
    long long instances = 0;
    // Boolean agreement checks: embedding verdicts, extraction equalities
    // in roundtrip, order properties in order.
    long long embed_checks = 0;
    long long embed_disagreements = 0;
    // Numeric comparisons of rank formulas against sampled ranks.
    long long rank_checks = 0;
    long long rank_disagreements = 0;
    // Human-readable descriptions of the first few failures.
    std::vector<std::string> failures;
    int trials = 0;
    std::uint64_t prime = 0;
    std::uint64_t seed = 0;

    bool ok() const {
        return embed_disagreements == 0 && rank_disagreements == 0;
    }
};

// Suite names: pp, ii, rr, pi, blocktri, roundtrip, order. Throws Error on
// an unknown name.
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name,
                      const VerifyOptions& options = {});

}  // namespace kron
