#pragma once

#include <vector>

#include "kron/invariants.hpp"
#include "kron/matrix.hpp"
#include "kron/pencil.hpp"

namespace kron {

// Block matrix whose kernel is the space of polynomial column vectors of
// degree at most k annihilated by the pencil: H sits on the block diagonal,
// E one block row below.
struct ToeplitzStack {
    int k = 0;
    Matrix<Rational> matrix;
};

ToeplitzStack toeplitz_stack(const Pencil& p, int k);

// Rank of x*E + H over the rational function field.
long long normal_rank(const Pencil& p);

// Minimal index multisets as weakly decreasing lists. The column count is
// cols - normal_rank, the row count is rows - normal_rank.
std::vector<int> column_minimal_indices(const Pencil& p);
std::vector<int> row_minimal_indices(const Pencil& p);

// Exponent partitions of the elementary divisors, keyed by eigenvalue.
// Throws NonSplitSpectrum when the finite spectrum does not split over the
// rationals.
RegularPart elementary_divisors(const Pencil& p);

// Complete invariant extraction, the inverse of canonical_pencil. The
// dimension vector of the result is checked against the pencil shape;
// a mismatch throws InternalInconsistency.
KroneckerInvariants extract_invariants(const Pencil& p);

// True iff both pencils extract to the same invariants.
bool strictly_equivalent(const Pencil& a, const Pencil& b);

}  // namespace kron
