#include "kron/matrix.hpp"

#include <array>

namespace kron {

Matrix<Rational> identity_matrix(std::size_t n) {
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::vector<std::vector<Rational>> nullspace(const Matrix<Rational>& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Matrix<Rational> w = m;
    // Reduced row echelon form with recorded pivot columns.
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t i = rank; i < rows; ++i) {
            if (scalar_is_zero(w(i, col))) continue;
            if (pivot == rows ||
                pivot_quality(w(i, col)) < pivot_quality(w(pivot, col))) {
                pivot = i;
            }
            if (pivot_quality(w(pivot, col)) == 0) break;
        }
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t j = col; j < cols; ++j) {
                std::swap(w(rank, j), w(pivot, j));
            }
        }
        const Rational inv_pivot = 1 / w(rank, col);
        w(rank, col) = 1;
        for (std::size_t j = col + 1; j < cols; ++j) w(rank, j) *= inv_pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || scalar_is_zero(w(i, col))) continue;
            const Rational f = w(i, col);
            w(i, col) = 0;
            for (std::size_t j = col + 1; j < cols; ++j) {
                if (scalar_is_zero(w(rank, j))) continue;
                w(i, j) -= f * w(rank, j);
            }
        }
        pivot_col.push_back(col);
        ++rank;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) {
            v[pivot_col[r]] = -w(r, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix<Fp> reduce_mod_p(const Matrix<Rational>& m, std::uint64_t p) {
    require_prime(p);
    Matrix<Fp> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& q = m(i, j);
            const std::uint64_t den =
                mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
            if (den == 0) {
                throw BadPrime("denominator of " + format_rational(q) +
                               " vanishes mod " + std::to_string(p));
            }
            const std::uint64_t num =
                mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
            out(i, j) = Fp(mulmod(num, powmod(den, p - 2, p), p), p);
        }
    }
    return out;
}

namespace {

// 61-bit primes for rank certification. Their running product dominates the
// Hadamard bound after a few entries for the matrices this library builds.
constexpr std::array<std::uint64_t, 25> kCertPrimes = {
    2305843009213693951ull, 2305843009213693967ull, 2305843009213693973ull,
    2305843009213694009ull, 2305843009213694017ull, 2305843009213694087ull,
    2305843009213694149ull, 2305843009213694173ull, 2305843009213694207ull,
    2305843009213694257ull, 2305843009213694317ull, 2305843009213694323ull,
    2305843009213694381ull, 2305843009213694411ull, 2305843009213694429ull,
    2305843009213694443ull, 2305843009213694491ull, 2305843009213694497ull,
    2305843009213694569ull, 2305843009213694597ull, 2305843009213694683ull,
    2305843009213694791ull, 2305843009213694837ull, 2305843009213694851ull,
    2305843009213694887ull};

std::size_t rank_mod_p(std::size_t rows, std::size_t cols,
                       std::vector<std::uint64_t> a, std::uint64_t p) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t i = rank; i < rows; ++i) {
            if (a[i * cols + col] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t j = col; j < cols; ++j) {
                std::swap(a[rank * cols + j], a[pivot * cols + j]);
            }
        }
        const std::uint64_t inv = powmod(a[rank * cols + col], p - 2, p);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const std::uint64_t lead = a[i * cols + col];
            if (lead == 0) continue;
            const std::uint64_t f = mulmod(lead, inv, p);
            a[i * cols + col] = 0;
            for (std::size_t j = col + 1; j < cols; ++j) {
                const std::uint64_t rj = a[rank * cols + j];
                if (rj == 0) continue;
                const std::uint64_t sub = mulmod(f, rj, p);
                std::uint64_t& x = a[i * cols + j];
                x = x + p - sub;
                if (x >= p) x -= p;
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t rank_certified(const Matrix<Rational>& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;

    // Per-row denominator clearing keeps the rank and yields integers.
    std::vector<mpz_class> z(rows * cols);
    mpz_class hadamard(1);
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class scale(1);
        for (std::size_t j = 0; j < cols; ++j) {
            mpz_class den = m(i, j).get_den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
            scale *= den / g;
        }
        mpz_class norm_sq(0);
        for (std::size_t j = 0; j < cols; ++j) {
            mpz_class v = m(i, j).get_num() * (scale / m(i, j).get_den());
            norm_sq += v * v;
            z[i * cols + j] = std::move(v);
        }
        if (norm_sq != 0) {
            mpz_class root;
            mpz_sqrt(root.get_mpz_t(), norm_sq.get_mpz_t());
            if (root * root < norm_sq) root += 1;
            hadamard *= root;
        }
    }

    const std::size_t max_rank = rows < cols ? rows : cols;
    std::size_t best = 0;
    mpz_class prime_product(1);
    std::vector<std::uint64_t> reduced(rows * cols);
    for (std::uint64_t p : kCertPrimes) {
        for (std::size_t k = 0; k < z.size(); ++k) {
            reduced[k] = mpz_fdiv_ui(z[k].get_mpz_t(), p);
        }
        const std::size_t r = rank_mod_p(rows, cols, reduced, p);
        if (r > best) best = r;
        if (best == max_rank) return best;
        prime_product *= static_cast<unsigned long>(p);
        // Any nonzero minor is bounded by the Hadamard product; once the
        // prime product exceeds it, a minor vanishing mod every used prime
        // must be zero, so the maximum modular rank is the true rank.
        if (prime_product > hadamard) return best;
    }
    throw InternalInconsistency("prime supply exhausted in rank_certified");
}

}  // namespace kron
