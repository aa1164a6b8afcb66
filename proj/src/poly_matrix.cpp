#include "kron/poly_matrix.hpp"

#include <cstddef>
#include <utility>

#include "kron/rational.hpp"

namespace kron {

namespace {

void swap_rows(PolyMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(PolyMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

}  // namespace

std::vector<Poly> smith_normal_form(PolyMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<Poly> factors;
    std::size_t k = 0;
    while (k < rows && k < cols) {
        // Lowest-degree nonzero entry of the trailing submatrix as pivot.
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = k; i < rows; ++i) {
            for (std::size_t j = k; j < cols; ++j) {
                if (m(i, j).is_zero()) continue;
                if (pi == rows || m(i, j).degree() < m(pi, pj).degree()) {
                    pi = i;
                    pj = j;
                }
            }
        }
        if (pi == rows) break;
        if (pi != k) swap_rows(m, k, pi);
        if (pj != k) swap_cols(m, k, pj);

        // A monic pivot keeps the division chain and coefficients tame.
        if (m(k, k).leading() != 1) {
            const Rational inv_lead = Rational(1) / m(k, k).leading();
            for (std::size_t j = k; j < cols; ++j) {
                m(k, j) = inv_lead * m(k, j);
            }
        }

        // Row operations clear the pivot column. A nonzero remainder leaves
        // an entry of strictly smaller degree, so reselect the pivot.
        bool dirty = false;
        for (std::size_t i = k + 1; i < rows; ++i) {
            if (m(i, k).is_zero()) continue;
            const Poly q = m(i, k).divmod(m(k, k)).first;
            for (std::size_t j = k; j < cols; ++j) {
                m(i, j) = m(i, j) - q * m(k, j);
            }
            if (!m(i, k).is_zero()) dirty = true;
        }
        if (dirty) continue;

        // Column operations clear the pivot row; rows below keep their
        // zeros in column k because those entries multiply the quotient.
        for (std::size_t j = k + 1; j < cols; ++j) {
            if (m(k, j).is_zero()) continue;
            const Poly q = m(k, j).divmod(m(k, k)).first;
            for (std::size_t i = k; i < rows; ++i) {
                m(i, j) = m(i, j) - q * m(i, k);
            }
            if (!m(k, j).is_zero()) dirty = true;
        }
        if (dirty) continue;

        // Divisibility repair: fold a row holding a non-multiple into the
        // pivot row, which strictly drops the reachable minimal degree.
        bool repaired = false;
        for (std::size_t i = k + 1; i < rows && !repaired; ++i) {
            for (std::size_t j = k + 1; j < cols && !repaired; ++j) {
                if (m(i, j).is_zero()) continue;
                if (!m(i, j).divmod(m(k, k)).second.is_zero()) {
                    for (std::size_t j2 = k; j2 < cols; ++j2) {
                        m(k, j2) = m(k, j2) + m(i, j2);
                    }
                    repaired = true;
                }
            }
        }
        if (repaired) continue;

        factors.push_back(m(k, k).monic());
        ++k;
    }
    return factors;
}

}  // namespace kron
