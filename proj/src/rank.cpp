#include "kron/rank.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <random>

#include "kron/errors.hpp"
#include "kron/matrix.hpp"
#include "kron/prime_field.hpp"

namespace kron {

namespace {

void require_descending(const std::vector<int>& parts, const char* name) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw InvalidPart(std::string(name) + ": parts must be positive");
        if (i > 0 && parts[i - 1] < parts[i])
            throw NotSorted(std::string(name) + ": parts must be descending");
    }
}

// Number of entries strictly greater than x; the list is descending.
int count_greater(const std::vector<int>& parts, int x) {
    auto it = std::lower_bound(parts.begin(), parts.end(), x, std::greater<int>());
    return static_cast<int>(it - parts.begin());
}

// Number of entries at least x; the list is descending.
int count_at_least(const std::vector<int>& parts, int x) {
    auto it = std::upper_bound(parts.begin(), parts.end(), x, std::greater<int>());
    return static_cast<int>(it - parts.begin());
}

void require_component(int component) {
    if (component != 1 && component != 2) throw Error("component must be 1 or 2");
}

// min over 0 <= i <= t-1 of sum_{j <= s_i} (primary_j - offset)
// + sum_{j > r_{i+1}} (secondary_j - offset), with s_0 = 0.
long long staircase_min(const std::vector<int>& primary, const std::vector<int>& secondary,
                        const StepProfile& profile, int offset) {
    std::vector<long long> primary_prefix(primary.size() + 1, 0);
    for (std::size_t j = 0; j < primary.size(); ++j)
        primary_prefix[j + 1] = primary_prefix[j] + primary[j] - offset;
    std::vector<long long> secondary_suffix(secondary.size() + 1, 0);
    for (std::size_t j = secondary.size(); j > 0; --j)
        secondary_suffix[j - 1] = secondary_suffix[j] + secondary[j - 1] - offset;

    long long best = std::numeric_limits<long long>::max();
    for (int i = 0; i < profile.t(); ++i) {
        const int s_i = i == 0 ? 0 : profile.s[i - 1];
        const int r_next = profile.r[i];
        best = std::min(best, primary_prefix[s_i] + secondary_suffix[r_next]);
    }
    return best;
}

}  // namespace

StepProfile step_profile(const std::vector<int>& a, const std::vector<int>& d) {
    require_descending(a, "a");
    require_descending(d, "d");
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(d.size());

    StepProfile profile;
    int r = count_greater(d, m > 0 ? a[0] : 0);
    profile.r.push_back(r);
    while (r < n) {
        const int s = count_at_least(a, d[r]);
        profile.s.push_back(s);
        r = count_greater(d, s < m ? a[s] : 0);
        profile.r.push_back(r);
    }
    return profile;
}

long long rank_block_triangular(const std::vector<long long>& row_sizes,
                                const std::vector<long long>& col_sizes) {
    if (row_sizes.size() != col_sizes.size())
        throw LengthMismatch("block triangular profile needs equal block counts");
    for (long long size : row_sizes)
        if (size < 0) throw InvalidPart("block sizes must be nonnegative");
    for (long long size : col_sizes)
        if (size < 0) throw InvalidPart("block sizes must be nonnegative");

    const std::size_t q = row_sizes.size();
    long long col_total = 0;
    for (long long size : col_sizes) col_total += size;

    long long rows_before = 0, cols_before = 0;
    long long best = col_total;
    for (std::size_t i = 0; i < q; ++i) {
        rows_before += row_sizes[i];
        cols_before += col_sizes[i];
        best = std::min(best, rows_before + col_total - cols_before);
    }
    return best;
}

long long rank_pp(const std::vector<int>& a, const std::vector<int>& d, int component) {
    require_component(component);
    const StepProfile profile = step_profile(a, d);
    return staircase_min(a, d, profile, component == 2 ? 0 : 1);
}

long long rank_ii(const std::vector<int>& c, const std::vector<int>& f, int component) {
    require_component(component);
    const StepProfile profile = step_profile(f, c);
    return staircase_min(f, c, profile, component == 1 ? 0 : 1);
}

long long rank_rr(const RegularPart& m_regular, const RegularPart& n_regular) {
    long long total = 0;
    for (const auto& [point, b] : m_regular) {
        auto it = n_regular.find(point);
        if (it == n_regular.end()) continue;
        const std::vector<int>& e = it->second;
        const std::size_t shared = std::min(b.size(), e.size());
        for (std::size_t i = 0; i < shared; ++i) total += std::min(b[i], e[i]);
    }
    return total;
}

long long sampled_generic_rank(const HomBasis& basis, int component, int trials,
                               std::uint64_t prime, std::uint64_t seed) {
    require_component(component);
    if (trials < 1) throw Error("trials must be positive");
    require_prime(prime);

    const std::size_t rows = component == 1 ? basis.super_dim1 : basis.super_dim2;
    const std::size_t cols = component == 1 ? basis.sub_dim1 : basis.sub_dim2;
    if (basis.elements.empty() || rows == 0 || cols == 0) return 0;

    std::vector<Matrix<Fp>> reduced;
    reduced.reserve(basis.elements.size());
    for (const auto& element : basis.elements)
        reduced.push_back(reduce_mod_p(component == 1 ? element.first : element.second, prime));

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> coeff(0, prime - 1);
    const long long full = static_cast<long long>(std::min(rows, cols));

    long long best = 0;
    for (int trial = 0; trial < trials; ++trial) {
        Matrix<Fp> sum = Matrix<Fp>::zero(rows, cols);
        for (const Matrix<Fp>& element : reduced) sum = sum + Fp(coeff(rng), prime) * element;
        best = std::max(best, static_cast<long long>(matrix_rank(sum)));
        if (best == full) break;
    }
    return best;
}

}  // namespace kron
