#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "kron/errors.hpp"
#include "kron/verify.hpp"

using namespace kron;

namespace {

VerifyOptions small(int max_dim, long long count = 0) {
    VerifyOptions o;
    o.max_dim = max_dim;
    o.count = count;
    o.trials = 2;
    return o;
}

}  // namespace

TEST_CASE("suite names are exposed and unknown names are rejected") {
    const auto names = suite_names();
    CHECK(names.size() == 7);
    CHECK(std::find(names.begin(), names.end(), "pp") != names.end());
    CHECK(std::find(names.begin(), names.end(), "roundtrip") != names.end());
    CHECK_THROWS_AS(run_suite("nope"), Error);
    VerifyOptions bad;
    bad.trials = 0;
    CHECK_THROWS_AS(run_suite("pp", bad), Error);
    bad.trials = 1;
    bad.prime = 10;
    CHECK_THROWS_AS(run_suite("pp", bad), BadPrime);
}

TEST_CASE("outer family suites agree at small sizes") {
    for (const char* name : {"pp", "ii"}) {
        const SuiteResult r = run_suite(name, small(5));
        CHECK(r.ok());
        CHECK(r.suite == name);
        CHECK(r.max_dim == 5);
        // 19 partitions of sums <= 5, all ordered pairs.
        CHECK(r.instances == 19 * 19);
        CHECK(r.embed_checks == r.instances);
        CHECK(r.rank_checks == 2 * r.instances);
        CHECK(r.failures.empty());
        CHECK(r.trials == 2);
        CHECK(r.prime == kDefaultPrime);
    }
}

TEST_CASE("regular suite runs its exhaustive and random halves") {
    const SuiteResult r = run_suite("rr", small(2, 40));
    CHECK(r.ok());
    // 13 regular parts over three points with total size <= 2.
    CHECK(r.instances == 13 * 13 + 40);
    CHECK(r.embed_checks == r.instances);
    CHECK(r.rank_checks == 2 * r.instances);
}

TEST_CASE("mixed pair suite agrees at small sizes") {
    const SuiteResult r = run_suite("pi", small(4));
    CHECK(r.ok());
    CHECK(r.instances == 12 * 12);
    CHECK(r.rank_checks == 0);
}

TEST_CASE("block triangular suite covers every profile") {
    const SuiteResult r = run_suite("blocktri", small(2));
    CHECK(r.ok());
    // Sum over q <= 4 of 3^(2q) profiles.
    CHECK(r.instances == 1 + 9 + 81 + 729 + 6561);
    CHECK(r.rank_checks == r.instances);
    CHECK(r.embed_checks == 0);
}

TEST_CASE("roundtrip suite extracts what it builds") {
    const SuiteResult r = run_suite("roundtrip", small(8, 15));
    CHECK(r.ok());
    CHECK(r.instances == 15);
    // One direct check plus twenty conjugates per instance.
    CHECK(r.embed_checks == 15 * 21);
}

TEST_CASE("order suite checks reflexivity and transitivity") {
    const SuiteResult r = run_suite("order", small(5, 60));
    CHECK(r.ok());
    // 19 partition lists, 194 regular parts of total size <= 5, 60 triples.
    CHECK(r.instances == 19 + 194 + 60);
    CHECK(r.embed_checks == 19 * 2 + 194 + 60 * 4);
}

TEST_CASE("suite runs are reproducible for a fixed seed") {
    VerifyOptions o = small(6, 25);
    o.seed = 99;
    const SuiteResult a = run_suite("roundtrip", o);
    const SuiteResult b = run_suite("roundtrip", o);
    CHECK(a.instances == b.instances);
    CHECK(a.embed_checks == b.embed_checks);
    CHECK(a.embed_disagreements == b.embed_disagreements);
    CHECK(a.seed == 99);
}
