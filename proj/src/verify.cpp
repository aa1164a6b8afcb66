#include "kron/verify.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kron/criteria.hpp"
#include "kron/errors.hpp"
#include "kron/extract.hpp"
#include "kron/hom.hpp"
#include "kron/invariants.hpp"
#include "kron/pencil.hpp"
#include "kron/prime_field.hpp"

namespace kron {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Per-instance seed so instances stay reproducible independently of
// enumeration order changes elsewhere.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t instance) {
    return splitmix64(seed ^ splitmix64(instance + 1));
}

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

std::string list_str(const std::vector<int>& parts) {
    std::string s = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + "]";
}

std::string reg_str(const RegularPart& reg) {
    std::string s = "{";
    bool first = true;
    for (const auto& [point, parts] : reg) {
        if (!first) s += ", ";
        s += point.to_string() + ":" + list_str(parts);
        first = false;
    }
    return s + "}";
}

std::string inv_str(const KroneckerInvariants& inv) {
    return "pre=" + list_str(inv.preprojective) +
           " reg=" + reg_str(inv.regular) +
           " pri=" + list_str(inv.preinjective);
}

void note_failure(SuiteResult& r, const std::string& message) {
    if (r.failures.size() < 12) r.failures.push_back(message);
}

SuiteResult make_result(const std::string& suite, int max_dim,
                        const VerifyOptions& o) {
    SuiteResult r;
    r.suite = suite;
    r.max_dim = max_dim;
    r.trials = o.trials;
    r.prime = o.prime;
    r.seed = o.seed;
    return r;
}

void check_embed(SuiteResult& r, bool closed, bool oracle,
                 const std::string& what) {
    ++r.embed_checks;
    if (closed != oracle) {
        ++r.embed_disagreements;
        note_failure(r, what + ": closed form " + (closed ? "yes" : "no") +
                            ", sampling " + (oracle ? "yes" : "no"));
    }
}

void check_rank(SuiteResult& r, long long formula, long long sampled,
                const std::string& what) {
    ++r.rank_checks;
    if (formula != sampled) {
        ++r.rank_disagreements;
        note_failure(r, what + ": formula " + std::to_string(formula) +
                            ", sampled " + std::to_string(sampled));
    }
}

// Shared body of the pp and ii suites: one outer family, criterion against
// sampling, both rank formulas against sampled ranks on the same basis.
SuiteResult run_outer_family(const VerifyOptions& o, bool preprojective) {
    const int max_dim = o.max_dim > 0 ? o.max_dim : 8;
    SuiteResult r = make_result(preprojective ? "pp" : "ii", max_dim, o);

    const auto lists = partitions_up_to(max_dim);
    std::vector<Pencil> pencils;
    pencils.reserve(lists.size());
    for (const auto& list : lists) {
        KroneckerInvariants inv;
        (preprojective ? inv.preprojective : inv.preinjective) = list;
        pencils.push_back(canonical_pencil(inv));
    }

    std::uint64_t instance = 0;
    for (std::size_t si = 0; si < lists.size(); ++si) {
        for (std::size_t ti = 0; ti < lists.size(); ++ti) {
            const std::vector<int>& sub = lists[si];
            const std::vector<int>& super = lists[ti];
            const std::uint64_t seed = mix_seed(o.seed, instance++);
            ++r.instances;

            const HomBasis basis = hom_basis(pencils[si], pencils[ti]);
            const bool closed = preprojective
                                    ? embeds_preprojective(sub, super)
                                    : embeds_preinjective(sub, super);
            const bool oracle =
                embeds_generic(basis, o.trials, o.prime, seed).embeds;
            const std::string what = r.suite + " sub=" + list_str(sub) +
                                     " super=" + list_str(super);
            check_embed(r, closed, oracle, what);

            for (int comp : {1, 2}) {
                const long long formula =
                    preprojective ? rank_pp(super, sub, comp)
                                  : rank_ii(super, sub, comp);
                const long long sampled = sampled_generic_rank(
                    basis, comp, o.trials, o.prime, seed);
                check_rank(r, formula, sampled,
                           what + " comp" + std::to_string(comp));
            }
        }
    }
    return r;
}

// All regular parts over the given points with total size <= budget.
void enumerate_regulars(const std::vector<ProjectivePoint>& points,
                        std::size_t index, int budget, RegularPart& current,
                        std::vector<RegularPart>& out) {
    if (index == points.size()) {
        out.push_back(current);
        return;
    }
    const auto parts_lists = partitions_up_to(budget);
    for (const auto& parts : parts_lists) {
        int used = 0;
        for (int p : parts) used += p;
        if (!parts.empty()) current[points[index]] = parts;
        enumerate_regulars(points, index + 1, budget - used, current, out);
        current.erase(points[index]);
    }
}

std::vector<int> random_partition(std::mt19937_64& rng, int max_sum) {
    if (max_sum <= 0) return {};
    std::uniform_int_distribution<int> total(0, max_sum);
    int budget = total(rng);
    int cap = budget;
    std::vector<int> parts;
    while (budget > 0) {
        std::uniform_int_distribution<int> pick(1, std::min(cap, budget));
        const int part = pick(rng);
        parts.push_back(part);
        budget -= part;
        cap = part;
    }
    return parts;
}

RegularPart random_regular(std::mt19937_64& rng,
                           const std::vector<ProjectivePoint>& points,
                           int per_point, int total) {
    RegularPart reg;
    int left = total;
    for (const ProjectivePoint& point : points) {
        const auto parts = random_partition(rng, std::min(per_point, left));
        for (int p : parts) left -= p;
        if (!parts.empty()) reg[point] = parts;
    }
    return reg;
}

void check_regular_pair(SuiteResult& r, const RegularPart& sub,
                        const RegularPart& super, const VerifyOptions& o,
                        std::uint64_t seed) {
    KroneckerInvariants sub_inv, super_inv;
    sub_inv.regular = sub;
    super_inv.regular = super;
    const HomBasis basis = hom_basis(canonical_pencil(sub_inv),
                                     canonical_pencil(super_inv));
    const bool closed = embeds_regular(sub, super);
    const bool oracle = embeds_generic(basis, o.trials, o.prime, seed).embeds;
    const std::string what =
        "rr sub=" + reg_str(sub) + " super=" + reg_str(super);
    check_embed(r, closed, oracle, what);

    const long long formula = rank_rr(super, sub);
    for (int comp : {1, 2}) {
        const long long sampled =
            sampled_generic_rank(basis, comp, o.trials, o.prime, seed);
        check_rank(r, formula, sampled,
                   what + " comp" + std::to_string(comp));
    }
}

// Exhaustive over small totals, then seeded random pairs with the larger
// per-point budget; the full per-point-5 universe is out of reach.
SuiteResult run_rr(const VerifyOptions& o) {
    const int max_dim = o.max_dim > 0 ? o.max_dim : 5;
    const long long count = o.count > 0 ? o.count : 1000;
    SuiteResult r = make_result("rr", max_dim, o);

    const std::vector<ProjectivePoint> points = {
        ProjectivePoint::infinity(), ProjectivePoint::finite(0),
        ProjectivePoint::finite(1)};

    std::vector<RegularPart> universe;
    RegularPart scratch;
    enumerate_regulars(points, 0, max_dim, scratch, universe);

    std::uint64_t instance = 0;
    for (const RegularPart& sub : universe) {
        for (const RegularPart& super : universe) {
            ++r.instances;
            check_regular_pair(r, sub, super, o, mix_seed(o.seed, instance++));
        }
    }

    for (long long i = 0; i < count; ++i) {
        const std::uint64_t seed = mix_seed(o.seed, instance++);
        std::mt19937_64 rng(seed);
        const RegularPart sub = random_regular(rng, points, 5, 10);
        const RegularPart super = random_regular(rng, points, 5, 10);
        ++r.instances;
        check_regular_pair(r, sub, super, o, seed);
    }
    return r;
}

SuiteResult run_pi(const VerifyOptions& o) {
    const int max_dim = o.max_dim > 0 ? o.max_dim : 8;
    SuiteResult r = make_result("pi", max_dim, o);

    const auto lists = partitions_up_to(max_dim);
    std::vector<Pencil> subs, supers;
    for (const auto& list : lists) {
        KroneckerInvariants inv;
        inv.preprojective = list;
        subs.push_back(canonical_pencil(inv));
        KroneckerInvariants pri;
        pri.preinjective = list;
        supers.push_back(canonical_pencil(pri));
    }

    std::uint64_t instance = 0;
    for (std::size_t di = 0; di < lists.size(); ++di) {
        for (std::size_t ci = 0; ci < lists.size(); ++ci) {
            const std::uint64_t seed = mix_seed(o.seed, instance++);
            ++r.instances;
            const bool closed = embeds_pre_into_pri(lists[di], lists[ci]);
            const bool oracle =
                embeds_generic(hom_basis(subs[di], supers[ci]), o.trials,
                               o.prime, seed)
                    .embeds;
            check_embed(r, closed, oracle,
                        "pi d=" + list_str(lists[di]) +
                            " c=" + list_str(lists[ci]));
        }
    }
    return r;
}

// Blocks strictly below the block diagonal stay zero, every other block is
// filled with uniform residues.
long long sampled_block_triangular(const std::vector<long long>& row_sizes,
                                   const std::vector<long long>& col_sizes,
                                   int trials, std::uint64_t prime,
                                   std::uint64_t seed) {
    std::size_t total_rows = 0, total_cols = 0;
    std::vector<std::size_t> row_offset, col_offset;
    for (long long s : row_sizes) {
        row_offset.push_back(total_rows);
        total_rows += static_cast<std::size_t>(s);
    }
    for (long long s : col_sizes) {
        col_offset.push_back(total_cols);
        total_cols += static_cast<std::size_t>(s);
    }
    if (total_rows == 0 || total_cols == 0) return 0;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> coeff(0, prime - 1);
    long long best = 0;
    for (int t = 0; t < trials; ++t) {
        Matrix<Fp> m(total_rows, total_cols);
        for (std::size_t bi = 0; bi < row_sizes.size(); ++bi) {
            for (std::size_t bj = bi; bj < col_sizes.size(); ++bj) {
                for (long long i = 0; i < row_sizes[bi]; ++i) {
                    for (long long j = 0; j < col_sizes[bj]; ++j) {
                        m(row_offset[bi] + static_cast<std::size_t>(i),
                          col_offset[bj] + static_cast<std::size_t>(j)) =
                            Fp(coeff(rng), prime);
                    }
                }
            }
        }
        best = std::max(best, static_cast<long long>(matrix_rank(m)));
    }
    return best;
}

std::string sizes_str(const std::vector<long long>& sizes) {
    std::string s = "[";
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(sizes[i]);
    }
    return s + "]";
}

// Every block profile with up to four blocks per side and the given size
// bound, formula against the sampled rank of the assembled generic matrix.
SuiteResult run_blocktri(const VerifyOptions& o) {
    const int max_size = o.max_dim > 0 ? o.max_dim : 3;
    SuiteResult r = make_result("blocktri", max_size, o);

    std::uint64_t instance = 0;
    for (int q = 0; q <= 4; ++q) {
        std::vector<long long> rows(q), cols(q);
        auto loop = [&](auto&& self, int pos) -> void {
            if (pos == 2 * q) {
                const std::uint64_t seed = mix_seed(o.seed, instance++);
                ++r.instances;
                check_rank(r, rank_block_triangular(rows, cols),
                           sampled_block_triangular(rows, cols, o.trials,
                                                    o.prime, seed),
                           "blocktri rows=" + sizes_str(rows) +
                               " cols=" + sizes_str(cols));
                return;
            }
            for (int v = 0; v <= max_size; ++v) {
                (pos < q ? rows[pos] : cols[pos - q]) = v;
                self(self, pos + 1);
            }
        };
        loop(loop, 0);
    }
    return r;
}

Matrix<Rational> random_invertible(std::size_t n, std::mt19937_64& rng) {
    Matrix<Rational> m = identity_matrix(n);
    if (n < 2) return m;
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t step = 0; step < 2 * n; ++step) {
        const std::size_t i = pick(rng);
        std::size_t j = pick(rng);
        while (j == i) j = pick(rng);
        const Rational c(coeff(rng));
        for (std::size_t col = 0; col < n; ++col) {
            m(i, col) += c * m(j, col);
        }
    }
    return m;
}

KroneckerInvariants random_invariants(std::mt19937_64& rng, int budget) {
    const std::vector<ProjectivePoint> pool = {
        ProjectivePoint::finite(0), ProjectivePoint::finite(1),
        ProjectivePoint::finite(-1), ProjectivePoint::finite(Rational(1, 2)),
        ProjectivePoint::infinity()};
    RawInvariants raw;
    std::uniform_int_distribution<int> family(0, 2);
    std::uniform_int_distribution<std::size_t> point(0, pool.size() - 1);
    int left = budget;
    // Outer blocks weigh 2*size - 1 total dimensions, regular ones 2*size.
    while (left >= 1) {
        const int f = family(rng);
        const int max_size = f == 1 ? left / 2 : (left + 1) / 2;
        if (max_size < 1) break;
        std::uniform_int_distribution<int> size(1, max_size);
        const int s = size(rng);
        if (f == 0) {
            raw.preprojective.push_back(s);
            left -= 2 * s - 1;
        } else if (f == 1) {
            raw.regular.emplace_back(pool[point(rng)], std::vector<int>{s});
            left -= 2 * s;
        } else {
            raw.preinjective.push_back(s);
            left -= 2 * s - 1;
        }
    }
    return normalize(raw);
}

// Extraction must invert the canonical construction and must not move
// under invertible row and column changes.
SuiteResult run_roundtrip(const VerifyOptions& o) {
    const int max_dim = o.max_dim > 0 ? o.max_dim : 12;
    const long long count = o.count > 0 ? o.count : 200;
    const int conjugates = 20;
    SuiteResult r = make_result("roundtrip", max_dim, o);

    for (long long i = 0; i < count; ++i) {
        std::mt19937_64 rng(mix_seed(o.seed, static_cast<std::uint64_t>(i)));
        const KroneckerInvariants inv = random_invariants(rng, max_dim);
        const Pencil pencil = canonical_pencil(inv);
        ++r.instances;

        const auto check_same = [&](const Pencil& p, const char* what) {
            ++r.embed_checks;
            try {
                const KroneckerInvariants back = extract_invariants(p);
                if (back != inv) {
                    ++r.embed_disagreements;
                    note_failure(r, std::string(what) + " changed " +
                                        inv_str(inv) + " into " +
                                        inv_str(back));
                }
            } catch (const Error& e) {
                ++r.embed_disagreements;
                note_failure(r, std::string(what) + " threw on " +
                                    inv_str(inv) + ": " + e.what());
            }
        };

        check_same(pencil, "round-trip");
        for (int c = 0; c < conjugates; ++c) {
            const Matrix<Rational> left = random_invertible(pencil.rows(), rng);
            const Matrix<Rational> right =
                random_invertible(pencil.cols(), rng);
            check_same(Pencil(left * pencil.E * right,
                              left * pencil.H * right),
                       "conjugation");
        }
    }
    return r;
}

// Reflexivity over the exhaustive partition universe, transitivity and
// dimension necessity over random same-type triples.
SuiteResult run_order(const VerifyOptions& o) {
    const int max_dim = o.max_dim > 0 ? o.max_dim : 8;
    const long long count = o.count > 0 ? o.count : 1000;
    SuiteResult r = make_result("order", max_dim, o);

    const auto lists = partitions_up_to(max_dim);
    for (const auto& list : lists) {
        ++r.instances;
        check_embed(r, true, embeds_preprojective(list, list),
                    "pp reflexivity at " + list_str(list));
        check_embed(r, true, embeds_preinjective(list, list),
                    "ii reflexivity at " + list_str(list));
    }

    const std::vector<ProjectivePoint> points = {
        ProjectivePoint::infinity(), ProjectivePoint::finite(0),
        ProjectivePoint::finite(1)};

    std::vector<RegularPart> regs;
    RegularPart scratch;
    enumerate_regulars(points, 0, std::min(max_dim, 5), scratch, regs);
    for (const RegularPart& reg : regs) {
        ++r.instances;
        check_embed(r, true, embeds_regular(reg, reg),
                    "rr reflexivity at " + reg_str(reg));
    }

    for (long long i = 0; i < count; ++i) {
        std::mt19937_64 rng(mix_seed(o.seed, 1000003 + i));
        std::uniform_int_distribution<int> type(0, 2);
        std::uniform_int_distribution<std::size_t> pick(0, lists.size() - 1);
        ++r.instances;

        const int t = type(rng);
        bool xy, yz, xz;
        std::string label;
        DimensionVector dx, dy, dz;
        if (t == 2) {
            const RegularPart x = random_regular(rng, points, max_dim, max_dim);
            const RegularPart y = random_regular(rng, points, max_dim, max_dim);
            const RegularPart z = random_regular(rng, points, max_dim, max_dim);
            xy = embeds_regular(x, y);
            yz = embeds_regular(y, z);
            xz = embeds_regular(x, z);
            label = "rr " + reg_str(x) + " -> " + reg_str(y) + " -> " +
                    reg_str(z);
            KroneckerInvariants ix, iy, iz;
            ix.regular = x;
            iy.regular = y;
            iz.regular = z;
            dx = dimension_vector(ix);
            dy = dimension_vector(iy);
            dz = dimension_vector(iz);
        } else {
            const std::vector<int>& x = lists[pick(rng)];
            const std::vector<int>& y = lists[pick(rng)];
            const std::vector<int>& z = lists[pick(rng)];
            if (t == 0) {
                xy = embeds_preprojective(x, y);
                yz = embeds_preprojective(y, z);
                xz = embeds_preprojective(x, z);
            } else {
                xy = embeds_preinjective(x, y);
                yz = embeds_preinjective(y, z);
                xz = embeds_preinjective(x, z);
            }
            label = (t == 0 ? "pp " : "ii ") + list_str(x) + " -> " +
                    list_str(y) + " -> " + list_str(z);
            KroneckerInvariants ix, iy, iz;
            (t == 0 ? ix.preprojective : ix.preinjective) = x;
            (t == 0 ? iy.preprojective : iy.preinjective) = y;
            (t == 0 ? iz.preprojective : iz.preinjective) = z;
            dx = dimension_vector(ix);
            dy = dimension_vector(iy);
            dz = dimension_vector(iz);
        }

        check_embed(r, true, !(xy && yz) || xz, "transitivity " + label);

        const auto dominated = [](const DimensionVector& lo,
                                  const DimensionVector& hi) {
            return lo.dim1 <= hi.dim1 && lo.dim2 <= hi.dim2;
        };
        check_embed(r, true, !xy || dominated(dx, dy),
                    "dimension necessity " + label);
        check_embed(r, true, !yz || dominated(dy, dz),
                    "dimension necessity " + label);
        check_embed(r, true, !xz || dominated(dx, dz),
                    "dimension necessity " + label);
    }
    return r;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"pp", "ii", "rr", "pi", "blocktri", "roundtrip", "order"};
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& options) {
    if (options.trials < 1) throw Error("trials must be positive");
    require_prime(options.prime);
    if (name == "pp") return run_outer_family(options, true);
    if (name == "ii") return run_outer_family(options, false);
    if (name == "rr") return run_rr(options);
    if (name == "pi") return run_pi(options);
    if (name == "blocktri") return run_blocktri(options);
    if (name == "roundtrip") return run_roundtrip(options);
    if (name == "order") return run_order(options);
    throw Error("unknown suite '" + name + "'");
}

}  // namespace kron
