#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "kron/criteria.hpp"
#include "kron/errors.hpp"
#include "kron/invariants.hpp"
#include "kron/pencil.hpp"

using namespace kron;

namespace {

KroneckerInvariants make_inv(std::vector<int> pre,
                             RegularPart reg = {},
                             std::vector<int> pri = {}) {
    KroneckerInvariants inv;
    inv.preprojective = std::move(pre);
    inv.regular = std::move(reg);
    inv.preinjective = std::move(pri);
    return inv;
}

const ProjectivePoint kZero = ProjectivePoint::finite(0);
const ProjectivePoint kOne = ProjectivePoint::finite(1);
const ProjectivePoint kInf = ProjectivePoint::infinity();

// All weakly decreasing positive lists with sum <= max_sum, empty included.
std::vector<std::vector<int>> partitions_up_to(int max_sum) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int budget, int max_part) -> void {
        out.push_back(current);
        for (int part = std::min(budget, max_part); part >= 1; --part) {
            current.push_back(part);
            self(self, budget - part, part);
            current.pop_back();
        }
    };
    rec(rec, max_sum, max_sum);
    return out;
}

}  // namespace

TEST_CASE("preprojective list criterion on known pairs") {
    CHECK(embeds_preprojective({}, {}));
    CHECK(embeds_preprojective({}, {3}));
    CHECK_FALSE(embeds_preprojective({2}, {}));
    CHECK(embeds_preprojective({1}, {2}));
    CHECK_FALSE(embeds_preprojective({2}, {1}));
    CHECK(embeds_preprojective({2}, {3}));
    CHECK_FALSE(embeds_preprojective({2, 2}, {3}));
    CHECK_FALSE(embeds_preprojective({3}, {2, 2}));
    CHECK(embeds_preprojective({1, 1, 1}, {3}));
    CHECK(embeds_preprojective({2, 1}, {3, 1}));
    CHECK_FALSE(embeds_preprojective({2, 2}, {3, 1}));
    CHECK(embeds_preprojective({3, 3}, {3, 3}));
}

TEST_CASE("preinjective list criterion on known pairs") {
    CHECK(embeds_preinjective({}, {}));
    CHECK(embeds_preinjective({}, {2}));
    CHECK_FALSE(embeds_preinjective({1}, {}));
    // Smaller blocks never embed into one larger block: the only intertwiner
    // lands in a proper quotient, so the column rank falls short.
    CHECK_FALSE(embeds_preinjective({1}, {2}));
    CHECK_FALSE(embeds_preinjective({2}, {3}));
    CHECK_FALSE(embeds_preinjective({2}, {1, 1}));
    CHECK(embeds_preinjective({2}, {2}));
    CHECK(embeds_preinjective({1}, {1, 1}));
    CHECK_FALSE(embeds_preinjective({1, 1}, {2, 1}));
    CHECK(embeds_preinjective({2, 1}, {2, 1}));
    CHECK(embeds_preinjective({2}, {2, 1}));
}

TEST_CASE("regular criterion is pointwise partition domination") {
    CHECK(embeds_regular({}, {}));
    CHECK(embeds_regular({}, {{kZero, {2}}}));
    CHECK(embeds_regular({{kZero, {1}}}, {{kZero, {2}}}));
    CHECK_FALSE(embeds_regular({{kZero, {1, 1}}}, {{kZero, {1}}}));
    CHECK_FALSE(embeds_regular({{kOne, {1}}}, {{kZero, {2}}}));
    CHECK(embeds_regular({{kZero, {2}}}, {{kZero, {2}}}));
    CHECK(embeds_regular({{kZero, {3, 1}}}, {{kZero, {3, 2}}}));
    CHECK_FALSE(embeds_regular({{kZero, {2, 2}}}, {{kZero, {3, 1}}}));
    CHECK(embeds_regular({{kZero, {1}}, {kInf, {2}}},
                         {{kZero, {1}}, {kOne, {1}}, {kInf, {2}}}));
    CHECK_FALSE(embeds_regular({{kZero, {1}}, {kInf, {2}}}, {{kZero, {1}}}));
}

TEST_CASE("preprojective into preinjective needs enough slack") {
    CHECK(embeds_pre_into_pri({}, {}));
    CHECK(embeds_pre_into_pri({}, {2}));
    CHECK(embeds_pre_into_pri({1}, {2}));
    CHECK_FALSE(embeds_pre_into_pri({1}, {1}));
    CHECK_FALSE(embeds_pre_into_pri({2}, {2}));
    CHECK(embeds_pre_into_pri({1, 1}, {3}));
    CHECK(embeds_pre_into_pri({2}, {2, 2}));
    CHECK_FALSE(embeds_pre_into_pri({3, 1}, {2, 2, 2}));
}

TEST_CASE("randomized verdict on frozen pairs") {
    const ProjectivePoint kHalf = ProjectivePoint::finite(Rational(1, 2));

    const auto self = make_inv({2}, {{kZero, {1}}}, {1});
    const EmbedReport same =
        embeds_generic(canonical_pencil(self), canonical_pencil(self));
    CHECK(same.embeds);
    CHECK(same.needed1 == 3);
    CHECK(same.needed2 == 3);
    CHECK(same.component1.sampled_rank == 3);
    CHECK(same.component2.sampled_rank == 3);

    const EmbedReport zero_hom = embeds_generic(
        canonical_pencil(make_inv({}, {{kZero, {1}}})),
        canonical_pencil(make_inv({2})));
    CHECK_FALSE(zero_hom.embeds);
    CHECK(zero_hom.component1.sampled_rank == 0);
    CHECK(zero_hom.component2.sampled_rank == 0);

    const EmbedReport into_regular = embeds_generic(
        canonical_pencil(make_inv({2})),
        canonical_pencil(make_inv({}, {{kZero, {1}}, {kOne, {1}}})));
    CHECK(into_regular.embeds);

    CHECK_FALSE(embeds_generic(canonical_pencil(make_inv({}, {{kZero, {1}}})),
                               canonical_pencil(make_inv({}, {{kHalf, {1}}})))
                    .embeds);

    // One component can reach full rank while the other is pinned at zero.
    const EmbedReport partial = embeds_generic(
        canonical_pencil(make_inv({1}, {}, {1})),
        canonical_pencil(make_inv({}, {{kZero, {1}}})));
    CHECK_FALSE(partial.embeds);
    CHECK(partial.component1.sampled_rank == 0);
    CHECK(partial.component2.sampled_rank == 1);

    CHECK(embeds_generic(canonical_pencil(make_inv({})),
                         canonical_pencil(make_inv({3}, {{kInf, {2}}})))
              .embeds);

    const Pencil p = canonical_pencil(self);
    CHECK_THROWS_AS(embeds_generic(p, p, 0), Error);
    CHECK_THROWS_AS(embeds_generic(p, p, 3, 4), BadPrime);
}

TEST_CASE("randomized verdict echoes its parameters and is reproducible") {
    const Pencil sub = canonical_pencil(make_inv({2}));
    const Pencil super = canonical_pencil(make_inv({3, 1}));
    const EmbedReport a = embeds_generic(sub, super, 5, 1009, 42);
    const EmbedReport b = embeds_generic(sub, super, 5, 1009, 42);
    CHECK(a.embeds);
    CHECK(a.seed == 42);
    CHECK(a.component1.prime == 1009);
    CHECK(a.component2.prime == 1009);
    CHECK(a.component1.trials == 5);
    CHECK(b.embeds == a.embeds);
    CHECK(b.component1.sampled_rank == a.component1.sampled_rank);
    CHECK(b.component2.sampled_rank == a.component2.sampled_rank);
}

TEST_CASE("decide modes and dispatch") {
    const auto pre2 = make_inv({2});
    const auto pre3 = make_inv({3});
    const auto pri2 = make_inv({}, {}, {2});
    const auto reg = make_inv({}, {{kZero, {2}}});
    const auto mixed = make_inv({2}, {{kZero, {1}}});

    const Verdict t = decide(pre2, pre3, DecideMode::Theorem);
    CHECK(t.embeds);
    CHECK(t.mode == DecideMode::Theorem);
    CHECK(t.theorem_verdict.has_value());
    CHECK_FALSE(t.report.has_value());

    const Verdict g = decide(pre2, pre3, DecideMode::Generic);
    CHECK(g.embeds);
    CHECK_FALSE(g.theorem_verdict.has_value());
    CHECK(g.report.has_value());

    const Verdict both = decide(pre2, pre3, DecideMode::Both);
    CHECK(both.embeds);
    CHECK(both.theorem_verdict.has_value());
    CHECK(both.report.has_value());

    CHECK(decide(make_inv({1}), pri2, DecideMode::Theorem).embeds);
    CHECK_FALSE(decide(pre2, pri2, DecideMode::Theorem).embeds);
    CHECK_FALSE(decide(make_inv({2}), make_inv({}, {}, {1, 1}),
                       DecideMode::Theorem)
                    .embeds);

    CHECK_THROWS_AS(decide(mixed, pre3, DecideMode::Theorem),
                    CriterionUnavailable);
    CHECK_THROWS_AS(decide(reg, pre3, DecideMode::Theorem),
                    CriterionUnavailable);
    CHECK_THROWS_AS(decide(pri2, pre3, DecideMode::Theorem),
                    CriterionUnavailable);

    const Verdict m = decide(mixed, make_inv({3}, {{kZero, {2}}}),
                             DecideMode::Both);
    CHECK(m.embeds);
    CHECK_FALSE(m.theorem_verdict.has_value());
    CHECK(m.report.has_value());

    const Verdict gen_mixed = decide(mixed, pre3, DecideMode::Generic);
    CHECK_FALSE(gen_mixed.embeds);

    // The empty triple counts as pure of any type.
    CHECK(decide(make_inv({}), reg, DecideMode::Theorem).embeds);
    CHECK(decide(make_inv({}), pre3, DecideMode::Theorem).embeds);
    CHECK_FALSE(decide(pri2, make_inv({}), DecideMode::Theorem).embeds);

    const Verdict tuned = decide(pre2, pre3, DecideMode::Generic, 5, 1009, 7);
    CHECK(tuned.report->component1.prime == 1009);
    CHECK(tuned.report->component1.trials == 5);

    CHECK_THROWS_AS(decide(make_inv({1, 2}), pre3, DecideMode::Both),
                    NotSorted);
}

TEST_CASE("closed forms and sampling agree on small pure pairs") {
    const auto lists = partitions_up_to(4);

    for (const auto& d : lists) {
        for (const auto& a : lists) {
            const Verdict v = decide(make_inv(d), make_inv(a), DecideMode::Both);
            REQUIRE(v.theorem_verdict.has_value());
            CHECK(v.embeds == *v.theorem_verdict);
        }
    }
    for (const auto& f : lists) {
        for (const auto& c : lists) {
            decide(make_inv({}, {}, f), make_inv({}, {}, c), DecideMode::Both);
        }
    }
    for (const auto& d : lists) {
        for (const auto& c : lists) {
            decide(make_inv(d), make_inv({}, {}, c), DecideMode::Both);
        }
    }

    const auto small = partitions_up_to(2);
    for (const auto& e0 : small) {
        for (const auto& e1 : small) {
            RegularPart sub_reg;
            if (!e0.empty()) sub_reg[kZero] = e0;
            if (!e1.empty()) sub_reg[kInf] = e1;
            for (const auto& b0 : small) {
                for (const auto& b1 : small) {
                    RegularPart super_reg;
                    if (!b0.empty()) super_reg[kZero] = b0;
                    if (!b1.empty()) super_reg[kInf] = b1;
                    decide(make_inv({}, sub_reg), make_inv({}, super_reg),
                           DecideMode::Both);
                }
            }
        }
    }
}

TEST_CASE("factor questions run on the transposed representations") {
    const auto q1 = make_inv({1});
    const auto q2 = make_inv({2});
    const auto q3 = make_inv({3});
    const auto j1 = make_inv({}, {}, {1});

    // Quotients of a preprojective block shed a full column each. The
    // one-smaller preprojective block is not among them.
    CHECK_FALSE(is_factor(q1, q2, DecideMode::Both).embeds);
    CHECK_FALSE(is_factor(q2, q3, DecideMode::Both).embeds);
    CHECK(is_factor(j1, q2, DecideMode::Both).embeds);
    CHECK(is_factor(q2, q2, DecideMode::Both).embeds);

    CHECK(is_factor(make_inv({}, {{kZero, {1}}}),
                    make_inv({}, {{kZero, {2}}}), DecideMode::Both)
              .embeds);
    CHECK_FALSE(is_factor(make_inv({}, {{kZero, {2}}}),
                          make_inv({}, {{kZero, {1}}}), DecideMode::Both)
                    .embeds);

    CHECK_THROWS_AS(
        is_factor(make_inv({1}, {{kZero, {1}}}), q3, DecideMode::Theorem),
        CriterionUnavailable);

    CHECK_FALSE(factor_generic(canonical_pencil(q1), canonical_pencil(q2))
                    .embeds);
    CHECK(factor_generic(canonical_pencil(j1), canonical_pencil(q2)).embeds);

    // The two dual routes use different but equivalent pencils and must agree.
    const std::vector<KroneckerInvariants> pool = {
        make_inv({}),
        q1,
        q2,
        j1,
        make_inv({}, {}, {2}),
        make_inv({}, {{kZero, {1}}}),
        make_inv({}, {{kInf, {2}}}),
        make_inv({1}, {{kZero, {1}}}, {1}),
        make_inv({2, 1}, {}, {2}),
    };
    for (const auto& n : pool) {
        for (const auto& m : pool) {
            const bool via_invariants = is_factor(n, m, DecideMode::Generic).embeds;
            const bool via_pencils =
                factor_generic(canonical_pencil(n), canonical_pencil(m)).embeds;
            CHECK(via_invariants == via_pencils);
        }
    }
}

TEST_CASE("subfactor search finds witnesses and respects its bound") {
    const auto r01 = make_inv({}, {{kZero, {1}}});
    const auto r02 = make_inv({}, {{kZero, {2}}});

    const SubfactorResult direct = subfactor_search(r01, r02, 6);
    CHECK(direct.found);
    REQUIRE(direct.witness.has_value());
    CHECK(embeds_generic(canonical_pencil(*direct.witness),
                         canonical_pencil(r02))
              .embeds);
    CHECK(factor_generic(canonical_pencil(r01),
                         canonical_pencil(*direct.witness))
              .embeds);

    // A factor that is not a subrepresentation still has M itself as witness.
    const auto j1 = make_inv({}, {}, {1});
    const auto q2 = make_inv({2});
    CHECK_FALSE(decide(j1, q2, DecideMode::Generic).embeds);
    const SubfactorResult via_factor = subfactor_search(j1, q2, 6);
    CHECK(via_factor.found);
    REQUIRE(via_factor.witness.has_value());
    CHECK(*via_factor.witness == q2);

    // Dimension pruning rules out every candidate here.
    const SubfactorResult hopeless =
        subfactor_search(make_inv({1}), make_inv({}, {}, {1}), 4);
    CHECK_FALSE(hopeless.found);
    CHECK(hopeless.candidates_checked == 0);

    const auto zero_pencil_pair = make_inv({1}, {}, {1});
    const SubfactorResult blocked = subfactor_search(r01, zero_pencil_pair, 4);
    CHECK_FALSE(blocked.found);
    CHECK(blocked.candidates_checked >= 1);

    const SubfactorResult too_small = subfactor_search(r01, r02, 1);
    CHECK_FALSE(too_small.found);
}

TEST_CASE("embedding order is reflexive and transitive on samples") {
    const std::vector<KroneckerInvariants> pool = {
        make_inv({}),
        make_inv({2}),
        make_inv({2, 1}),
        make_inv({}, {{kZero, {2, 1}}}),
        make_inv({}, {{kInf, {1}}}),
        make_inv({}, {}, {2}),
        make_inv({}, {}, {2, 2}),
    };
    for (const auto& x : pool) {
        CHECK(decide(x, x, DecideMode::Generic).embeds);
    }

    CHECK(decide(make_inv({1}), make_inv({2}), DecideMode::Both).embeds);
    CHECK(decide(make_inv({2}), make_inv({3}), DecideMode::Both).embeds);
    CHECK(decide(make_inv({1}), make_inv({3}), DecideMode::Both).embeds);

    // Embedding forces the dimension vector to grow componentwise.
    const auto lists = partitions_up_to(4);
    for (const auto& d : lists) {
        for (const auto& a : lists) {
            if (!embeds_preprojective(d, a)) continue;
            const auto nd = dimension_vector(make_inv(d));
            const auto na = dimension_vector(make_inv(a));
            CHECK(nd.dim1 <= na.dim1);
            CHECK(nd.dim2 <= na.dim2);
        }
    }
}
