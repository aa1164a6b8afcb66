#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kron/invariants.hpp"

#include "kron/errors.hpp"

using namespace kron;

namespace {

const ProjectivePoint kInf = ProjectivePoint::infinity();
const ProjectivePoint kZero = ProjectivePoint::finite(Rational(0));
const ProjectivePoint kOne = ProjectivePoint::finite(Rational(1));

}  // namespace

TEST_CASE("projective point ordering and text form") {
    CHECK(kInf < kZero);
    CHECK(kZero < kOne);
    CHECK_FALSE(kZero < kInf);
    CHECK(ProjectivePoint::finite(Rational(-1, 2)) < kZero);
    CHECK(kInf == ProjectivePoint::infinity());
    CHECK(kInf != kZero);

    CHECK(kInf.to_string() == "inf");
    CHECK(ProjectivePoint::finite(Rational(-1, 2)).to_string() == "-1/2");
    CHECK(ProjectivePoint::parse("inf").is_infinity());
    CHECK(ProjectivePoint::parse("-1/2") ==
          ProjectivePoint::finite(Rational(-1, 2)));
    CHECK_THROWS_AS(ProjectivePoint::parse("infinity"), ParseError);
    CHECK_THROWS_AS(kInf.value(), InternalInconsistency);
}

TEST_CASE("normalization sorts and merges") {
    RawInvariants raw;
    raw.preprojective = {1, 3};
    raw.preinjective = {2};
    raw.regular.emplace_back(kZero, std::vector<int>{1});
    raw.regular.emplace_back(kInf, std::vector<int>{2});
    raw.regular.emplace_back(kZero, std::vector<int>{3});

    const KroneckerInvariants inv = normalize(raw);
    CHECK(inv.preprojective == std::vector<int>{3, 1});
    CHECK(inv.preinjective == std::vector<int>{2});
    REQUIRE(inv.regular.size() == 2);
    CHECK(inv.regular.at(kZero) == std::vector<int>{3, 1});
    CHECK(inv.regular.at(kInf) == std::vector<int>{2});
    CHECK(inv.regular.begin()->first == kInf);

    SUBCASE("idempotent") { CHECK(normalize(inv) == inv); }

    SUBCASE("empty partitions are dropped") {
        RawInvariants with_empty;
        with_empty.regular.emplace_back(kOne, std::vector<int>{});
        CHECK(is_empty(normalize(with_empty)));
    }

    SUBCASE("parts below one are rejected") {
        RawInvariants bad;
        bad.preprojective = {0};
        CHECK_THROWS_AS(normalize(bad), InvalidPart);
        RawInvariants bad_reg;
        bad_reg.regular.emplace_back(kOne, std::vector<int>{2, -1});
        CHECK_THROWS_AS(normalize(bad_reg), InvalidPart);
    }
}

TEST_CASE("validate rejects unnormalized data") {
    KroneckerInvariants inv;
    inv.preprojective = {1, 3};
    CHECK_THROWS_AS(validate(inv), NotSorted);

    KroneckerInvariants bad_part;
    bad_part.preinjective = {0};
    CHECK_THROWS_AS(validate(bad_part), InvalidPart);

    KroneckerInvariants empty_partition;
    empty_partition.regular[kOne] = {};
    CHECK_THROWS_AS(validate(empty_partition), InvalidPart);

    KroneckerInvariants good;
    good.preprojective = {3, 1};
    good.regular[kInf] = {2, 2};
    CHECK_NOTHROW(validate(good));
}

TEST_CASE("dimension vectors") {
    KroneckerInvariants inv;
    inv.preprojective = {3, 1};
    inv.regular[kInf] = {2};
    inv.regular[ProjectivePoint::finite(Rational(-1, 2))] = {1, 1};
    inv.preinjective = {2};

    // Preprojective a contributes (a-1, a), regular b gives (b, b),
    // preinjective c gives (c, c-1).
    const DimensionVector d = dimension_vector(inv);
    CHECK(d.dim1 == 2 + 0 + 2 + 1 + 1 + 2);
    CHECK(d.dim2 == 3 + 1 + 2 + 1 + 1 + 1);
    CHECK(total_dimension(inv) == d.dim1 + d.dim2);

    CHECK(dimension_vector(KroneckerInvariants{}) == DimensionVector{0, 0});
}

TEST_CASE("dualize swaps the outer families") {
    KroneckerInvariants inv;
    inv.preprojective = {2};
    inv.regular[kZero] = {3, 1};
    inv.preinjective = {4, 4};

    const KroneckerInvariants dual = dualize(inv);
    CHECK(dual.preprojective == std::vector<int>{4, 4});
    CHECK(dual.preinjective == std::vector<int>{2});
    CHECK(dual.regular == inv.regular);
    CHECK(dualize(dual) == inv);

    const DimensionVector d = dimension_vector(inv);
    const DimensionVector dd = dimension_vector(dual);
    CHECK(dd.dim1 == d.dim2);
    CHECK(dd.dim2 == d.dim1);
}

TEST_CASE("block list follows the canonical order") {
    KroneckerInvariants inv;
    inv.preprojective = {2, 1};
    inv.regular[kOne] = {2};
    inv.regular[kInf] = {1};
    inv.preinjective = {3};

    const auto blocks = block_list(inv);
    REQUIRE(blocks.size() == 5);
    CHECK(blocks[0].family == BlockRef::Family::Preprojective);
    CHECK(blocks[0].size == 2);
    CHECK(blocks[1].size == 1);
    CHECK(blocks[2].family == BlockRef::Family::Regular);
    CHECK(blocks[2].point == kInf);
    CHECK(blocks[3].point == kOne);
    CHECK(blocks[4].family == BlockRef::Family::Preinjective);

    CHECK(blocks[0].dim1() == 1);
    CHECK(blocks[0].dim2() == 2);
    CHECK(blocks[4].dim1() == 3);
    CHECK(blocks[4].dim2() == 2);
}
