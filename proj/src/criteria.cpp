#include "kron/criteria.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <string>

#include "kron/errors.hpp"
#include "kron/matrix.hpp"
#include "kron/prime_field.hpp"

namespace kron {

namespace {

long long prefix_sum(const std::vector<int>& parts, int count) {
    long long sum = 0;
    for (int j = 0; j < count; ++j) sum += parts[j];
    return sum;
}

}  // namespace

bool embeds_preprojective(const std::vector<int>& d, const std::vector<int>& a) {
    const StepProfile profile = step_profile(a, d);
    if (profile.r.front() != 0) return false;
    for (int i = 1; i <= profile.t() - 1; ++i) {
        const int s_i = profile.s[i - 1];
        const int r_next = profile.r[i];
        const long long lhs = prefix_sum(a, s_i);
        const long long rhs = prefix_sum(d, r_next);
        if (lhs < rhs) return false;
        if (lhs - s_i < rhs - r_next) return false;
    }
    return true;
}

bool embeds_preinjective(const std::vector<int>& f, const std::vector<int>& c) {
    const StepProfile profile = step_profile(f, c);
    const int w = profile.t();
    const int v_last = w >= 2 ? profile.s[w - 2] : 0;
    if (v_last != static_cast<int>(f.size())) return false;
    const int c_count = static_cast<int>(c.size());
    for (int i = 0; i <= w - 2; ++i) {
        const int v_i = i == 0 ? 0 : profile.s[i - 1];
        const int u_next = profile.r[i];
        const long long lhs = prefix_sum(f, v_last) - prefix_sum(f, v_i);
        const long long rhs = prefix_sum(c, c_count) - prefix_sum(c, u_next);
        if (lhs > rhs) return false;
        if (lhs - (v_last - v_i) > rhs - (c_count - u_next)) return false;
    }
    return true;
}

bool embeds_regular(const RegularPart& n_regular, const RegularPart& m_regular) {
    for (const auto& [point, e] : n_regular) {
        if (e.empty()) continue;
        auto it = m_regular.find(point);
        if (it == m_regular.end()) return false;
        const std::vector<int>& b = it->second;
        if (b.size() < e.size()) return false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (b[i] < e[i]) return false;
        }
    }
    return true;
}

bool embeds_pre_into_pri(const std::vector<int>& d, const std::vector<int>& c) {
    long long room = 0;
    for (int part : c) room += part - 1;
    long long need = 0;
    for (int part : d) need += part;
    return room >= need;
}

EmbedReport embeds_generic(const HomBasis& basis, int trials,
                           std::uint64_t prime, std::uint64_t seed) {
    if (trials < 1) throw Error("trials must be positive");
    require_prime(prime);

    EmbedReport rep;
    rep.seed = seed;
    rep.needed1 = static_cast<long long>(basis.sub_dim1);
    rep.needed2 = static_cast<long long>(basis.sub_dim2);
    rep.component1.trials = rep.component2.trials = trials;
    rep.component1.prime = rep.component2.prime = prime;

    std::vector<std::pair<Matrix<Fp>, Matrix<Fp>>> reduced;
    reduced.reserve(basis.elements.size());
    for (const auto& [phi1, phi2] : basis.elements) {
        reduced.emplace_back(reduce_mod_p(phi1, prime), reduce_mod_p(phi2, prime));
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> coeff(0, prime - 1);
    long long best1 = 0, best2 = 0;
    for (int trial = 0; trial < trials && !rep.embeds; ++trial) {
        Matrix<Fp> phi1 = Matrix<Fp>::zero(basis.super_dim1, basis.sub_dim1);
        Matrix<Fp> phi2 = Matrix<Fp>::zero(basis.super_dim2, basis.sub_dim2);
        for (const auto& [e1, e2] : reduced) {
            const Fp t(coeff(rng), prime);
            phi1 = phi1 + t * e1;
            phi2 = phi2 + t * e2;
        }
        const long long r1 = static_cast<long long>(matrix_rank(phi1));
        const long long r2 = static_cast<long long>(matrix_rank(phi2));
        best1 = std::max(best1, r1);
        best2 = std::max(best2, r2);
        rep.embeds = r1 == rep.needed1 && r2 == rep.needed2;
    }
    rep.component1.sampled_rank = best1;
    rep.component2.sampled_rank = best2;
    rep.component1.agreement = true;
    rep.component2.agreement = true;
    return rep;
}

EmbedReport embeds_generic(const Pencil& sub, const Pencil& super, int trials,
                           std::uint64_t prime, std::uint64_t seed) {
    return embeds_generic(hom_basis(sub, super), trials, prime, seed);
}

namespace {

enum class PureType { Empty, Pre, Reg, Pri, Mixed };

PureType classify(const KroneckerInvariants& inv) {
    const bool has_pre = !inv.preprojective.empty();
    const bool has_reg = !inv.regular.empty();
    const bool has_pri = !inv.preinjective.empty();
    const int kinds = int(has_pre) + int(has_reg) + int(has_pri);
    if (kinds == 0) return PureType::Empty;
    if (kinds > 1) return PureType::Mixed;
    if (has_pre) return PureType::Pre;
    if (has_reg) return PureType::Reg;
    return PureType::Pri;
}

bool acts_as(PureType t, PureType wanted) {
    return t == PureType::Empty || t == wanted;
}

// Closed-form verdict for the covered pure-type pairs, absent otherwise.
std::optional<bool> theorem_answer(const KroneckerInvariants& sub,
                                   const KroneckerInvariants& super) {
    const PureType tn = classify(sub), tm = classify(super);
    if (tn == PureType::Mixed || tm == PureType::Mixed) return std::nullopt;
    if (acts_as(tn, PureType::Pre) && acts_as(tm, PureType::Pre)) {
        return embeds_preprojective(sub.preprojective, super.preprojective);
    }
    if (acts_as(tn, PureType::Pri) && acts_as(tm, PureType::Pri)) {
        return embeds_preinjective(sub.preinjective, super.preinjective);
    }
    if (acts_as(tn, PureType::Reg) && acts_as(tm, PureType::Reg)) {
        return embeds_regular(sub.regular, super.regular);
    }
    if (acts_as(tn, PureType::Pre) && acts_as(tm, PureType::Pri)) {
        return embeds_pre_into_pri(sub.preprojective, super.preinjective);
    }
    return std::nullopt;
}

}  // namespace

Verdict decide(const KroneckerInvariants& sub, const KroneckerInvariants& super,
               DecideMode mode, int trials, std::uint64_t prime,
               std::uint64_t seed) {
    validate(sub);
    validate(super);
    Verdict v;
    v.mode = mode;

    if (mode != DecideMode::Generic) {
        v.theorem_verdict = theorem_answer(sub, super);
        if (mode == DecideMode::Theorem) {
            if (!v.theorem_verdict) {
                throw CriterionUnavailable(
                    "no closed-form criterion covers this type mix");
            }
            v.embeds = *v.theorem_verdict;
            return v;
        }
    }

    v.report = embeds_generic(canonical_pencil(sub), canonical_pencil(super),
                              trials, prime, seed);
    v.embeds = v.report->embeds;
    if (mode == DecideMode::Both && v.theorem_verdict &&
        *v.theorem_verdict != v.embeds) {
        throw DecisionMismatch(
            std::string("closed form says ") +
            (*v.theorem_verdict ? "yes" : "no") + ", sampling says " +
            (v.embeds ? "yes" : "no"));
    }
    return v;
}

Verdict is_factor(const KroneckerInvariants& quotient,
                  const KroneckerInvariants& whole, DecideMode mode, int trials,
                  std::uint64_t prime, std::uint64_t seed) {
    return decide(dualize(quotient), dualize(whole), mode, trials, prime, seed);
}

EmbedReport factor_generic(const Pencil& quotient, const Pencil& whole,
                           int trials, std::uint64_t prime,
                           std::uint64_t seed) {
    return embeds_generic(transpose_dual(quotient), transpose_dual(whole),
                          trials, prime, seed);
}

namespace {

// Descending part lists whose total weight stays within budget; weight is
// 2*part - 1 for the outer families and 2*part for the regular one.
void part_lists_within(int budget, int weight_offset, int max_part,
                       std::vector<int>& current,
                       const std::function<void()>& emit) {
    emit();
    for (int part = std::min(max_part, (budget + weight_offset) / 2); part >= 1;
         --part) {
        const int weight = 2 * part - weight_offset;
        if (weight > budget) continue;
        current.push_back(part);
        part_lists_within(budget - weight, weight_offset, part, current, emit);
        current.pop_back();
    }
}

void enumerate_regular(int budget, const std::vector<ProjectivePoint>& points,
                       std::size_t index, KroneckerInvariants& current,
                       const std::function<void(int)>& emit) {
    if (index == points.size()) {
        emit(budget);
        return;
    }
    std::vector<int> parts;
    const ProjectivePoint point = points[index];
    part_lists_within(budget, 0, budget / 2 + 1, parts, [&] {
        int used = 0;
        for (int part : parts) used += 2 * part;
        if (!parts.empty()) current.regular[point] = parts;
        enumerate_regular(budget - used, points, index + 1, current, emit);
        current.regular.erase(point);
    });
}

bool dims_between(const DimensionVector& low, const DimensionVector& mid,
                  const DimensionVector& high) {
    return low.dim1 <= mid.dim1 && mid.dim1 <= high.dim1 &&
           low.dim2 <= mid.dim2 && mid.dim2 <= high.dim2;
}

}  // namespace

SubfactorResult subfactor_search(const KroneckerInvariants& n,
                                 const KroneckerInvariants& m,
                                 int max_total_dim, int trials,
                                 std::uint64_t prime, std::uint64_t seed) {
    validate(n);
    validate(m);
    SubfactorResult result;
    std::vector<ProjectivePoint> points;
    for (const auto& [point, parts] : n.regular) points.push_back(point);
    for (const auto& [point, parts] : m.regular) {
        if (!n.regular.count(point)) points.push_back(point);
    }

    const DimensionVector n_dim = dimension_vector(n);
    const DimensionVector m_dim = dimension_vector(m);
    const Pencil m_pencil = canonical_pencil(m);
    const Pencil n_dual = transpose_dual(canonical_pencil(n));

    KroneckerInvariants candidate;
    std::vector<int> pre, pri;
    bool done = false;
    part_lists_within(max_total_dim, 1, max_total_dim, pre, [&] {
        if (done) return;
        int pre_weight = 0;
        for (int part : pre) pre_weight += 2 * part - 1;
        candidate.preprojective = pre;
        enumerate_regular(
            max_total_dim - pre_weight, points, 0, candidate, [&](int left) {
                if (done) return;
                part_lists_within(left, 1, left, pri, [&] {
                    if (done) return;
                    candidate.preinjective = pri;
                    if (!dims_between(n_dim, dimension_vector(candidate), m_dim))
                        return;
                    ++result.candidates_checked;
                    const Pencil l_pencil = canonical_pencil(candidate);
                    if (!embeds_generic(l_pencil, m_pencil, trials, prime, seed)
                             .embeds)
                        return;
                    if (!embeds_generic(n_dual, transpose_dual(l_pencil), trials,
                                        prime, seed)
                             .embeds)
                        return;
                    result.found = true;
                    result.witness = candidate;
                    done = true;
                });
            });
    });
    return result;
}

}  // namespace kron
