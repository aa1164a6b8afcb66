#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "doctest.h"
#include "kron/errors.hpp"
#include "kron/hom.hpp"
#include "kron/pencil.hpp"
#include "kron/prime_field.hpp"

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

bool intertwines(const Pencil& sub, const Pencil& super,
                 const Matrix<Rational>& phi1, const Matrix<Rational>& phi2) {
    return phi2 * sub.E == super.E * phi1 && phi2 * sub.H == super.H * phi1;
}

bool intertwines_mod_p(const Pencil& sub, const Pencil& super,
                       const Matrix<Fp>& phi1, const Matrix<Fp>& phi2,
                       std::uint64_t p) {
    const Matrix<Fp> e_sub = reduce_mod_p(sub.E, p);
    const Matrix<Fp> h_sub = reduce_mod_p(sub.H, p);
    const Matrix<Fp> e_super = reduce_mod_p(super.E, p);
    const Matrix<Fp> h_super = reduce_mod_p(super.H, p);
    return phi2 * e_sub == e_super * phi1 && phi2 * h_sub == h_super * phi1;
}

// Every basis element must satisfy the intertwining equations; the count is
// checked against an expected dimension where one is known.
void check_basis(const Pencil& sub, const Pencil& super, std::size_t expected) {
    const HomBasis basis = hom_basis(sub, super);
    CHECK(basis.dimension() == expected);
    for (const auto& [phi1, phi2] : basis.elements) {
        CHECK(intertwines(sub, super, phi1, phi2));
    }
}

}  // namespace

TEST_CASE("solver dimensions between indecomposables") {
    check_basis(preprojective_pencil(1), preprojective_pencil(2), 2);
    check_basis(preprojective_pencil(2), preprojective_pencil(1), 0);
    check_basis(preprojective_pencil(2), preprojective_pencil(2), 1);
    check_basis(preinjective_pencil(1), preinjective_pencil(2), 0);
    check_basis(preinjective_pencil(2), preinjective_pencil(1), 2);
    check_basis(preinjective_pencil(3), preinjective_pencil(3), 1);

    const ProjectivePoint zero = ProjectivePoint::finite(0);
    const ProjectivePoint one = ProjectivePoint::finite(1);
    check_basis(regular_pencil(zero, 1), regular_pencil(one, 1), 0);
    check_basis(regular_pencil(zero, 1), regular_pencil(zero, 1), 1);
    check_basis(regular_pencil(zero, 2), regular_pencil(zero, 1), 1);
    check_basis(regular_pencil(ProjectivePoint::infinity(), 2),
                regular_pencil(ProjectivePoint::infinity(), 2), 2);

    check_basis(regular_pencil(zero, 1), preprojective_pencil(2), 0);
    check_basis(preinjective_pencil(2), regular_pencil(zero, 1), 0);
    check_basis(preinjective_pencil(2), preprojective_pencil(2), 0);
}

TEST_CASE("solver dimension on a decomposable target") {
    const Pencil sub = preinjective_pencil(2);
    const Pencil super = direct_sum(preinjective_pencil(1), preinjective_pencil(1));
    check_basis(sub, super, 4);
}

TEST_CASE("basis elements are integer matrices with positive lead") {
    const HomBasis basis =
        hom_basis(preprojective_pencil(2), preprojective_pencil(4));
    REQUIRE(basis.dimension() == 3);
    for (const auto& [phi1, phi2] : basis.elements) {
        bool seen_nonzero = false;
        for (const Matrix<Rational>* m : {&phi1, &phi2}) {
            for (std::size_t r = 0; r < m->rows(); ++r) {
                for (std::size_t c = 0; c < m->cols(); ++c) {
                    const Rational& x = (*m)(r, c);
                    CHECK(x.get_den() == 1);
                    if (!seen_nonzero && sgn(x) != 0) {
                        CHECK(sgn(x) > 0);
                        seen_nonzero = true;
                    }
                }
            }
        }
        CHECK(seen_nonzero);
    }
}

TEST_CASE("combine rejects wrong coefficient counts") {
    const HomBasis basis =
        hom_basis(preprojective_pencil(1), preprojective_pencil(2));
    CHECK_THROWS_AS(combine(basis, {Rational(1)}), ArityMismatch);
    CHECK_THROWS_AS(combine_mod_p(basis, {1, 2, 3}, kDefaultPrime), ArityMismatch);

    const auto [phi1, phi2] = combine(basis, {Rational(1), Rational(0)});
    CHECK(phi1 == basis.elements[0].first);
    CHECK(phi2 == basis.elements[0].second);

    const auto [f1, f2] = combine_mod_p(basis, {1, 1}, 101);
    CHECK(intertwines_mod_p(preprojective_pencil(1), preprojective_pencil(2),
                            f1, f2, 101));
}

TEST_CASE("structured hom shapes for same-family cells") {
    const GenericHom pp = structured_generic_hom(make_inv({2}), make_inv({4}));
    REQUIRE(pp.component2.size() == 1);
    CHECK(pp.fully_structured);
    CHECK(pp.component2[0][0].form == BlockShape::Form::LowerBand);
    CHECK(pp.component2[0][0].params == 3);
    CHECK(pp.component2[0][0].rows == 4);
    CHECK(pp.component2[0][0].cols == 2);
    CHECK(pp.component1[0][0].rows == 3);
    CHECK(pp.component1[0][0].cols == 1);
    CHECK(param_count(pp) == 3);

    const GenericHom zero = structured_generic_hom(make_inv({4}), make_inv({2}));
    CHECK(zero.component2[0][0].form == BlockShape::Form::Zero);
    CHECK(param_count(zero) == 0);

    const GenericHom ii = structured_generic_hom(make_inv({}, {}, {3}),
                                                 make_inv({}, {}, {2}));
    CHECK(ii.component1[0][0].form == BlockShape::Form::UpperBand);
    CHECK(ii.component1[0][0].params == 2);

    const RegularPart at_zero{{ProjectivePoint::finite(0), {2}}};
    const RegularPart at_zero_small{{ProjectivePoint::finite(0), {1}}};
    const GenericHom rr =
        structured_generic_hom(make_inv({}, at_zero_small), make_inv({}, at_zero));
    CHECK(rr.component1[0][0].form == BlockShape::Form::CornerBand);
    CHECK(rr.component1[0][0].params == 1);
}

TEST_CASE("cells against the family order are zero or unstructured") {
    const RegularPart at_zero{{ProjectivePoint::finite(0), {1}}};

    const GenericHom down = structured_generic_hom(make_inv({}, at_zero),
                                                   make_inv({2}));
    CHECK(down.component1[0][0].form == BlockShape::Form::Zero);
    CHECK(param_count(down) == 0);

    const GenericHom up = structured_generic_hom(make_inv({2}),
                                                 make_inv({}, at_zero));
    CHECK(up.component1[0][0].form == BlockShape::Form::Unstructured);
    CHECK_FALSE(up.fully_structured);
    CHECK_THROWS_AS(param_count(up), CriterionUnavailable);
    // Unstructured cells specialize to zero, which still intertwines.
    const auto [phi1, phi2] = specialize(up, {});
    CHECK(intertwines(canonical_pencil(make_inv({2})),
                      canonical_pencil(make_inv({}, at_zero)), phi1, phi2));
}

TEST_CASE("vacuous unstructured cells keep the closed form usable") {
    // Both components of the (regular over Q(1)) cell would be unstructured,
    // but one of each pair here is empty in every direction that matters.
    const GenericHom g = structured_generic_hom(
        make_inv({1}), make_inv({}, {}, {1}));
    CHECK(g.fully_structured);
    CHECK(param_count(g) == 0);
}

TEST_CASE("structured parameter count matches the solver dimension") {
    const ProjectivePoint zero = ProjectivePoint::finite(0);
    const ProjectivePoint inf = ProjectivePoint::infinity();
    std::vector<KroneckerInvariants> shapes = {
        make_inv({3}),
        make_inv({2, 1}),
        make_inv({4, 2, 2}),
        make_inv({}, {{zero, {2, 1}}}),
        make_inv({}, {{zero, {1}}, {inf, {2}}}),
        make_inv({}, {}, {3, 1}),
        make_inv({}, {}, {2, 2, 1}),
        make_inv({2}, {{zero, {1}}}, {}),
        make_inv({1, 1}, {{inf, {2}}}, {}),
        make_inv({}, {{zero, {2}}}, {2}),
        make_inv({}, {{inf, {1, 1}}}, {3}),
    };
    for (const auto& sub : shapes) {
        for (const auto& super : shapes) {
            const GenericHom g = structured_generic_hom(sub, super);
            if (!g.fully_structured) continue;
            const HomBasis basis =
                hom_basis(canonical_pencil(sub), canonical_pencil(super));
            CAPTURE(g.total_params);
            CHECK(param_count(g) == basis.dimension());
        }
    }
}

TEST_CASE("specializations intertwine exactly") {
    const ProjectivePoint zero = ProjectivePoint::finite(0);
    const ProjectivePoint half = ProjectivePoint::finite(Rational(-1, 2));
    std::vector<std::pair<KroneckerInvariants, KroneckerInvariants>> pairs = {
        {make_inv({2, 1}), make_inv({4, 3})},
        {make_inv({}, {}, {3, 2}), make_inv({}, {}, {5, 1})},
        {make_inv({}, {{zero, {2}}, {half, {1}}}),
         make_inv({}, {{zero, {3, 1}}, {half, {2}}})},
        {make_inv({1}, {{zero, {2}}}, {2}), make_inv({2}, {{zero, {2, 2}}}, {3})},
        {make_inv({2}, {{half, {1}}}, {}), make_inv({}, {{half, {3}}}, {2})},
    };
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> small(-5, 5);
    for (const auto& [sub_inv, super_inv] : pairs) {
        const GenericHom g = structured_generic_hom(sub_inv, super_inv);
        const Pencil sub = canonical_pencil(sub_inv);
        const Pencil super = canonical_pencil(super_inv);

        std::vector<Rational> values(g.total_params);
        std::vector<std::uint64_t> residues(g.total_params);
        for (std::size_t i = 0; i < g.total_params; ++i) {
            const int v = small(rng);
            values[i] = Rational(v);
            residues[i] = static_cast<std::uint64_t>(v + 5);
        }
        const auto [phi1, phi2] = specialize(g, values);
        CHECK(intertwines(sub, super, phi1, phi2));

        const auto [f1, f2] = specialize_mod_p(g, residues, 1009);
        CHECK(intertwines_mod_p(sub, super, f1, f2, 1009));
    }
}

TEST_CASE("specialize checks the value count") {
    const GenericHom g = structured_generic_hom(make_inv({1}), make_inv({2}));
    REQUIRE(g.total_params == 2);
    CHECK_THROWS_AS(specialize(g, {Rational(1)}), ArityMismatch);
}

TEST_CASE("structured cells span the full hom space") {
    // For band sizes up to 5 the structured parameter space and the solver
    // kernel must be the same space: dimensions agree and every structured
    // specialization lies in the kernel, which check_basis already enforces
    // elementwise; here the claim is dimension equality per family.
    for (int sub_size = 1; sub_size <= 5; ++sub_size) {
        for (int super_size = 1; super_size <= 5; ++super_size) {
            const GenericHom pp = structured_generic_hom(
                make_inv({sub_size}), make_inv({super_size}));
            CHECK(param_count(pp) ==
                  hom_basis(preprojective_pencil(sub_size),
                            preprojective_pencil(super_size)).dimension());

            const GenericHom ii = structured_generic_hom(
                make_inv({}, {}, {sub_size}), make_inv({}, {}, {super_size}));
            CHECK(param_count(ii) ==
                  hom_basis(preinjective_pencil(sub_size),
                            preinjective_pencil(super_size)).dimension());

            const ProjectivePoint p = ProjectivePoint::finite(Rational(2, 3));
            const GenericHom rr = structured_generic_hom(
                make_inv({}, {{p, {sub_size}}}), make_inv({}, {{p, {super_size}}}));
            CHECK(param_count(rr) ==
                  hom_basis(regular_pencil(p, sub_size),
                            regular_pencil(p, super_size)).dimension());
        }
    }
}
