#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kron/hom.hpp"
#include "kron/invariants.hpp"

namespace kron {

inline constexpr int kDefaultTrials = 3;
inline constexpr std::uint64_t kDefaultSeed = 0x6b726f6eULL;

// Staircase profile of two descending part lists. r holds r_1..r_t with
// r_t = d.size() and s holds s_1..s_{t-1}; entries are 1-based counts into
// the lists, strictly increasing, with out-of-range reads treated as 0.
struct StepProfile {
    std::vector<int> r;
    std::vector<int> s;

    int t() const { return static_cast<int>(r.size()); }
};

// r_1 = #{j : d_j > a_1}, s_l = #{i : a_i >= d_{r_l + 1}},
// r_{l+1} = #{j : d_j > a_{s_l + 1}}, stopping once r_t = d.size().
StepProfile step_profile(const std::vector<int>& a, const std::vector<int>& d);

// Generic rank of a block upper triangular matrix with given block row and
// column sizes: min over 0 <= i <= q of sum(rows[1..i]) + sum(cols[i+1..q]).
long long rank_block_triangular(const std::vector<long long>& row_sizes,
                                const std::vector<long long>& col_sizes);

// Generic rank of the structured hom between preprojective part lists,
// a for the target and d for the source. Component 2 sums whole parts,
// component 1 the parts shrunk by one; both use the same profile.
long long rank_pp(const std::vector<int>& a, const std::vector<int>& d, int component);

// Preinjective counterpart, c for the target and f for the source. The
// profile is built from (f, c); component 1 sums whole parts, component 2
// the parts shrunk by one.
long long rank_ii(const std::vector<int>& c, const std::vector<int>& f, int component);

// Generic rank of the structured hom between regular parts; both components
// have the same rank. Points missing on either side contribute nothing.
long long rank_rr(const RegularPart& m_regular, const RegularPart& n_regular);

// Comparison record between a closed-form rank and a randomized sample.
struct RankReport {
    std::optional<long long> formula_rank;
    long long sampled_rank = 0;
    int trials = 0;
    std::uint64_t prime = 0;
    bool agreement = false;
};

// Maximum over trials of the rank of a random linear combination of the
// basis elements, taken in the chosen component over F_prime. Each trial
// misses the generic rank with probability at most min(rows, cols)/prime.
long long sampled_generic_rank(const HomBasis& basis, int component, int trials,
                               std::uint64_t prime, std::uint64_t seed = kDefaultSeed);

}  // namespace kron
