#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kron/hom.hpp"
#include "kron/invariants.hpp"
#include "kron/pencil.hpp"
#include "kron/rank.hpp"

namespace kron {

// Closed-form subrepresentation criteria. The first argument is always the
// candidate subrepresentation, the second the ambient one.

// Preprojective lists: d embeds into a iff the step profile of (a, d) has
// r_1 = 0 and both prefix-sum families dominate.
bool embeds_preprojective(const std::vector<int>& d, const std::vector<int>& a);

// Preinjective lists: f embeds into c iff the profile of (f, c) covers all
// of f one step early and both suffix-sum families are dominated.
bool embeds_preinjective(const std::vector<int>& f, const std::vector<int>& c);

// Regular parts: pointwise part-count and entrywise domination.
bool embeds_regular(const RegularPart& n_regular, const RegularPart& m_regular);

// Preprojective d embeds into preinjective c iff sum(c_i - 1) >= sum(d_i).
bool embeds_pre_into_pri(const std::vector<int>& d, const std::vector<int>& c);

// Randomized verdict: true iff some trial's specialization has both
// components of full column rank simultaneously. Per-component evidence is
// reported; formula_rank stays unset here and may be filled by callers that
// know a closed form.
struct EmbedReport {
    bool embeds = false;
    long long needed1 = 0, needed2 = 0;
    RankReport component1, component2;
    std::uint64_t seed = 0;
};

EmbedReport embeds_generic(const HomBasis& basis, int trials = kDefaultTrials,
                           std::uint64_t prime = kDefaultPrime,
                           std::uint64_t seed = kDefaultSeed);
EmbedReport embeds_generic(const Pencil& sub, const Pencil& super,
                           int trials = kDefaultTrials,
                           std::uint64_t prime = kDefaultPrime,
                           std::uint64_t seed = kDefaultSeed);

enum class DecideMode { Theorem, Generic, Both };

struct Verdict {
    bool embeds = false;
    DecideMode mode = DecideMode::Generic;
    // Set when a closed-form criterion applied (theorem and both modes).
    std::optional<bool> theorem_verdict;
    // Set when sampling ran (generic and both modes).
    std::optional<EmbedReport> report;
};

// Dispatcher. Theorem mode covers pure-type pairs of the four criteria above
// (the empty triple counts as pure of any type) and throws
// CriterionUnavailable on any other mix. Generic mode always answers. Both
// mode runs the oracle, cross-checks the theorem where it applies, and
// throws DecisionMismatch on disagreement instead of picking a side.
Verdict decide(const KroneckerInvariants& sub, const KroneckerInvariants& super,
               DecideMode mode, int trials = kDefaultTrials,
               std::uint64_t prime = kDefaultPrime,
               std::uint64_t seed = kDefaultSeed);

// N is a factor representation of M iff the transpose dual of N embeds into
// the transpose dual of M.
Verdict is_factor(const KroneckerInvariants& quotient,
                  const KroneckerInvariants& whole, DecideMode mode,
                  int trials = kDefaultTrials,
                  std::uint64_t prime = kDefaultPrime,
                  std::uint64_t seed = kDefaultSeed);
EmbedReport factor_generic(const Pencil& quotient, const Pencil& whole,
                           int trials = kDefaultTrials,
                           std::uint64_t prime = kDefaultPrime,
                           std::uint64_t seed = kDefaultSeed);

// Bounded search for an intermediate L with L a subrepresentation of M and
// N a factor of L, which makes N a subfactor of M. Heuristic and incomplete:
// candidates are capped at max_total_dim and their regular points are
// restricted to the points appearing in N or M, which is conjectured but not
// known to be lossless. A negative answer only means no witness was found
// within the bound.
struct SubfactorResult {
    bool found = false;
    std::optional<KroneckerInvariants> witness;
    long long candidates_checked = 0;
};

SubfactorResult subfactor_search(const KroneckerInvariants& n,
                                 const KroneckerInvariants& m,
                                 int max_total_dim,
                                 int trials = kDefaultTrials,
                                 std::uint64_t prime = kDefaultPrime,
                                 std::uint64_t seed = kDefaultSeed);

}  // namespace kron
