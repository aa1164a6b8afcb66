#include "kron/extract.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "kron/errors.hpp"
#include "kron/poly.hpp"
#include "kron/poly_matrix.hpp"

namespace kron {

ToeplitzStack toeplitz_stack(const Pencil& p, int k) {
    if (k < 0) throw Error("degree bound must be nonnegative");
    const std::size_t rows = p.rows(), cols = p.cols();
    const std::size_t blocks = static_cast<std::size_t>(k) + 1;
    Matrix<Rational> m((blocks + 1) * rows, blocks * cols);
    for (std::size_t j = 0; j < blocks; ++j) {
        m.set_block(j * rows, j * cols, p.H);
        m.set_block((j + 1) * rows, j * cols, p.E);
    }
    return {k, std::move(m)};
}

long long normal_rank(const Pencil& p) {
    // A rank-r pencil has a nonzero r x r minor, a polynomial of degree at
    // most min(rows, cols); it cannot vanish at min+1 distinct points.
    const long long bound =
        static_cast<long long>(std::min(p.rows(), p.cols()));
    std::size_t best = 0;
    for (long t = 0; t <= bound; ++t) {
        best = std::max(best, rank_certified(evaluate_at(p, Rational(t))));
        if (static_cast<long long>(best) == bound) break;
    }
    return static_cast<long long>(best);
}

std::vector<int> column_minimal_indices(const Pencil& p) {
    const long long cols = static_cast<long long>(p.cols());
    const long long total = cols - normal_rank(p);
    std::vector<int> indices;
    long long kappa_prev = 0, kappa_prev2 = 0;
    for (int k = 0; static_cast<long long>(indices.size()) < total; ++k) {
        if (k > cols) {
            throw InternalInconsistency(
                "minimal index recovery ran past the column count");
        }
        const ToeplitzStack stack = toeplitz_stack(p, k);
        const long long kappa =
            static_cast<long long>(stack.matrix.cols()) -
            static_cast<long long>(rank_certified(stack.matrix));
        const long long fresh = kappa - 2 * kappa_prev + kappa_prev2;
        for (long long i = 0; i < fresh; ++i) indices.push_back(k);
        kappa_prev2 = kappa_prev;
        kappa_prev = kappa;
    }
    std::sort(indices.begin(), indices.end(), std::greater<int>());
    return indices;
}

std::vector<int> row_minimal_indices(const Pencil& p) {
    return column_minimal_indices(transpose_dual(p));
}

namespace {

// Entries are degree <= 1: constant from one matrix, slope from the other.
PolyMatrix pencil_matrix(const Matrix<Rational>& slope,
                         const Matrix<Rational>& constant) {
    PolyMatrix m(slope.rows(), slope.cols());
    for (std::size_t i = 0; i < slope.rows(); ++i) {
        for (std::size_t j = 0; j < slope.cols(); ++j) {
            m(i, j) = Poly({constant(i, j), slope(i, j)});
        }
    }
    return m;
}

}  // namespace

RegularPart elementary_divisors(const Pencil& p) {
    RegularPart out;

    // x*E + H: a root q of an invariant factor means x = q makes the pencil
    // drop rank, and the canonical block with that behavior carries the
    // eigenvalue -q.
    for (const Poly& factor : smith_normal_form(pencil_matrix(p.E, p.H))) {
        if (factor.degree() <= 0) continue;
        const RationalRoots roots = rational_roots(factor);
        if (roots.residual.degree() > 0) {
            throw NonSplitSpectrum("invariant factor " + factor.to_string() +
                                   " has irreducible part " +
                                   roots.residual.to_string());
        }
        for (const auto& [root, multiplicity] : roots.roots) {
            out[ProjectivePoint::finite(-root)].push_back(multiplicity);
        }
    }

    // x*H + E: powers of x here are the eigenvalue-at-infinity exponents.
    for (const Poly& factor : smith_normal_form(pencil_matrix(p.H, p.E))) {
        if (factor.is_zero() || factor.coeff(0) != 0) continue;
        out[ProjectivePoint::infinity()].push_back(
            static_cast<int>(factor.valuation()));
    }

    for (auto& [point, parts] : out) {
        std::sort(parts.begin(), parts.end(), std::greater<int>());
    }
    return out;
}

KroneckerInvariants extract_invariants(const Pencil& p) {
    KroneckerInvariants inv;
    for (int eta : row_minimal_indices(p)) {
        inv.preprojective.push_back(eta + 1);
    }
    inv.regular = elementary_divisors(p);
    for (int eps : column_minimal_indices(p)) {
        inv.preinjective.push_back(eps + 1);
    }

    const DimensionVector dims = dimension_vector(inv);
    if (dims.dim1 != static_cast<long long>(p.cols()) ||
        dims.dim2 != static_cast<long long>(p.rows())) {
        throw InternalInconsistency(
            "extracted invariants do not account for the pencil shape");
    }
    validate(inv);
    return inv;
}

bool strictly_equivalent(const Pencil& a, const Pencil& b) {
    return extract_invariants(a) == extract_invariants(b);
}

}  // namespace kron
