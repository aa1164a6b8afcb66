#include "kron/hom.hpp"

#include "kron/errors.hpp"

namespace kron {

namespace {

// Column layout of the intertwining system: vec(phi1) row-major, then
// vec(phi2) row-major.
struct SystemLayout {
    std::size_t n1, n2, m1, m2;
    std::size_t phi1_col(std::size_t l, std::size_t j) const {
        return l * n1 + j;
    }
    std::size_t phi2_col(std::size_t i, std::size_t k) const {
        return m1 * n1 + i * n2 + k;
    }
    std::size_t cols() const { return m1 * n1 + m2 * n2; }
};

// Adds the equations of phi2 * X_sub - X_super * phi1 == 0 to the system.
void add_equations(Matrix<Rational>& sys, std::size_t row0,
                   const SystemLayout& lay, const Matrix<Rational>& x_sub,
                   const Matrix<Rational>& x_super) {
    for (std::size_t i = 0; i < lay.m2; ++i) {
        for (std::size_t j = 0; j < lay.n1; ++j) {
            const std::size_t row = row0 + i * lay.n1 + j;
            for (std::size_t k = 0; k < lay.n2; ++k) {
                if (scalar_is_zero(x_sub(k, j))) continue;
                sys(row, lay.phi2_col(i, k)) += x_sub(k, j);
            }
            for (std::size_t l = 0; l < lay.m1; ++l) {
                if (scalar_is_zero(x_super(i, l))) continue;
                sys(row, lay.phi1_col(l, j)) -= x_super(i, l);
            }
        }
    }
}

// Integer entries, content 1, first nonzero entry positive.
void normalize_vector(std::vector<Rational>& v) {
    mpz_class den_lcm(1);
    for (const Rational& x : v) {
        mpz_class den = x.get_den(), g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
        den_lcm *= den / g;
    }
    mpz_class content(0);
    for (const Rational& x : v) {
        mpz_class num = x.get_num() * (den_lcm / x.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    }
    if (content == 0) {
        throw InternalInconsistency("zero vector in a kernel basis");
    }
    const Rational scale(den_lcm, content);
    int lead_sign = 0;
    for (Rational& x : v) {
        x *= scale;
        if (lead_sign == 0) lead_sign = sgn(x);
    }
    if (lead_sign < 0) {
        for (Rational& x : v) x = -x;
    }
}

}  // namespace

HomBasis hom_basis(const Pencil& sub, const Pencil& super) {
    HomBasis out;
    out.sub_dim1 = sub.cols();
    out.sub_dim2 = sub.rows();
    out.super_dim1 = super.cols();
    out.super_dim2 = super.rows();

    const SystemLayout lay{out.sub_dim1, out.sub_dim2, out.super_dim1,
                           out.super_dim2};
    const std::size_t eqs_per_matrix = lay.m2 * lay.n1;
    Matrix<Rational> sys(2 * eqs_per_matrix, lay.cols());
    add_equations(sys, 0, lay, sub.E, super.E);
    add_equations(sys, eqs_per_matrix, lay, sub.H, super.H);

    for (std::vector<Rational>& v : nullspace(sys)) {
        normalize_vector(v);
        Matrix<Rational> phi1(lay.m1, lay.n1), phi2(lay.m2, lay.n2);
        for (std::size_t l = 0; l < lay.m1; ++l) {
            for (std::size_t j = 0; j < lay.n1; ++j) {
                phi1(l, j) = v[lay.phi1_col(l, j)];
            }
        }
        for (std::size_t i = 0; i < lay.m2; ++i) {
            for (std::size_t k = 0; k < lay.n2; ++k) {
                phi2(i, k) = v[lay.phi2_col(i, k)];
            }
        }
        out.elements.emplace_back(std::move(phi1), std::move(phi2));
    }
    return out;
}

std::pair<Matrix<Rational>, Matrix<Rational>> combine(
    const HomBasis& basis, const std::vector<Rational>& coeffs) {
    if (coeffs.size() != basis.dimension()) {
        throw ArityMismatch("expected " + std::to_string(basis.dimension()) +
                            " coefficients, got " +
                            std::to_string(coeffs.size()));
    }
    Matrix<Rational> phi1(basis.super_dim1, basis.sub_dim1);
    Matrix<Rational> phi2(basis.super_dim2, basis.sub_dim2);
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
        if (scalar_is_zero(coeffs[t])) continue;
        phi1 = phi1 + coeffs[t] * basis.elements[t].first;
        phi2 = phi2 + coeffs[t] * basis.elements[t].second;
    }
    return {std::move(phi1), std::move(phi2)};
}

std::pair<Matrix<Fp>, Matrix<Fp>> combine_mod_p(
    const HomBasis& basis, const std::vector<std::uint64_t>& coeffs,
    std::uint64_t p) {
    if (coeffs.size() != basis.dimension()) {
        throw ArityMismatch("expected " + std::to_string(basis.dimension()) +
                            " coefficients, got " +
                            std::to_string(coeffs.size()));
    }
    require_prime(p);
    Matrix<Fp> phi1(basis.super_dim1, basis.sub_dim1);
    Matrix<Fp> phi2(basis.super_dim2, basis.sub_dim2);
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
        if (coeffs[t] % p == 0) continue;
        const Fp c(coeffs[t], p);
        phi1 = phi1 + c * reduce_mod_p(basis.elements[t].first, p);
        phi2 = phi2 + c * reduce_mod_p(basis.elements[t].second, p);
    }
    return {std::move(phi1), std::move(phi2)};
}

namespace {

using Family = BlockRef::Family;

// Rank of a family on the structural triangle: a cell is Unstructured
// exactly when the target family sits strictly later.
int family_rank(Family f) {
    switch (f) {
        case Family::Preprojective: return 0;
        case Family::Regular: return 1;
        case Family::Preinjective: return 2;
    }
    throw InternalInconsistency("unknown block family");
}

struct CellPlan {
    BlockShape::Form form = BlockShape::Form::Zero;
    std::size_t params = 0;
};

CellPlan plan_cell(const BlockRef& super_b, const BlockRef& sub_b) {
    const Family mf = super_b.family, nf = sub_b.family;
    if (mf == nf) {
        switch (mf) {
            case Family::Preprojective: {
                const int a = super_b.size, d = sub_b.size;
                if (a < d) return {BlockShape::Form::Zero, 0};
                return {BlockShape::Form::LowerBand,
                        static_cast<std::size_t>(a - d + 1)};
            }
            case Family::Regular: {
                if (super_b.point != sub_b.point) {
                    return {BlockShape::Form::Zero, 0};
                }
                const int b = super_b.size, e = sub_b.size;
                return {BlockShape::Form::CornerBand,
                        static_cast<std::size_t>(b < e ? b : e)};
            }
            case Family::Preinjective: {
                const int c = super_b.size, f = sub_b.size;
                if (c > f) return {BlockShape::Form::Zero, 0};
                return {BlockShape::Form::UpperBand,
                        static_cast<std::size_t>(f - c + 1)};
            }
        }
        throw InternalInconsistency("unknown block family");
    }
    return family_rank(mf) > family_rank(nf)
               ? CellPlan{BlockShape::Form::Unstructured, 0}
               : CellPlan{BlockShape::Form::Zero, 0};
}

template <class T>
void fill_cell(Matrix<T>& m, std::size_t r0, std::size_t c0,
               const BlockShape& s, const std::vector<T>& vals) {
    switch (s.form) {
        case BlockShape::Form::Zero:
        case BlockShape::Form::Unstructured:
            return;
        case BlockShape::Form::LowerBand: {
            const std::ptrdiff_t depth = static_cast<std::ptrdiff_t>(s.rows) -
                                         static_cast<std::ptrdiff_t>(s.cols);
            for (std::ptrdiff_t o = 0; o <= depth; ++o) {
                for (std::size_t c = 0; c + o < s.rows && c < s.cols; ++c) {
                    m(r0 + c + o, c0 + c) = vals[s.first_param + o];
                }
            }
            return;
        }
        case BlockShape::Form::UpperBand: {
            const std::ptrdiff_t width = static_cast<std::ptrdiff_t>(s.cols) -
                                         static_cast<std::ptrdiff_t>(s.rows);
            for (std::ptrdiff_t o = 0; o <= width; ++o) {
                for (std::size_t r = 0; r + o < s.cols && r < s.rows; ++r) {
                    m(r0 + r, c0 + r + o) = vals[s.first_param + o];
                }
            }
            return;
        }
        case BlockShape::Form::CornerBand: {
            if (s.cols == 0 || s.rows == 0) return;
            const std::ptrdiff_t lo =
                s.cols > s.rows
                    ? static_cast<std::ptrdiff_t>(s.cols - s.rows)
                    : 0;
            const std::ptrdiff_t hi = s.cols - 1;
            for (std::ptrdiff_t o = lo; o <= hi; ++o) {
                for (std::size_t r = 0; r < s.rows && r + o < s.cols; ++r) {
                    m(r0 + r, c0 + r + o) = vals[s.first_param + (hi - o)];
                }
            }
            return;
        }
    }
    throw InternalInconsistency("unknown cell form");
}

template <class T>
std::pair<Matrix<T>, Matrix<T>> specialize_impl(const GenericHom& g,
                                                const std::vector<T>& vals) {
    if (vals.size() != g.total_params) {
        throw ArityMismatch("expected " + std::to_string(g.total_params) +
                            " parameter values, got " +
                            std::to_string(vals.size()));
    }
    Matrix<T> phi1(g.super_dim.dim1, g.sub_dim.dim1);
    Matrix<T> phi2(g.super_dim.dim2, g.sub_dim.dim2);
    std::size_t r1 = 0, r2 = 0;
    for (std::size_t i = 0; i < g.super_blocks.size(); ++i) {
        std::size_t c1 = 0, c2 = 0;
        for (std::size_t j = 0; j < g.sub_blocks.size(); ++j) {
            fill_cell(phi1, r1, c1, g.component1[i][j], vals);
            fill_cell(phi2, r2, c2, g.component2[i][j], vals);
            c1 += g.sub_blocks[j].dim1();
            c2 += g.sub_blocks[j].dim2();
        }
        r1 += g.super_blocks[i].dim1();
        r2 += g.super_blocks[i].dim2();
    }
    return {std::move(phi1), std::move(phi2)};
}

}  // namespace

GenericHom structured_generic_hom(const KroneckerInvariants& sub,
                                  const KroneckerInvariants& super) {
    validate(sub);
    validate(super);
    GenericHom g;
    g.sub_blocks = block_list(sub);
    g.super_blocks = block_list(super);
    g.sub_dim = dimension_vector(sub);
    g.super_dim = dimension_vector(super);

    g.component1.resize(g.super_blocks.size());
    g.component2.resize(g.super_blocks.size());
    for (std::size_t i = 0; i < g.super_blocks.size(); ++i) {
        g.component1[i].resize(g.sub_blocks.size());
        g.component2[i].resize(g.sub_blocks.size());
        for (std::size_t j = 0; j < g.sub_blocks.size(); ++j) {
            const CellPlan plan = plan_cell(g.super_blocks[i], g.sub_blocks[j]);
            BlockShape& s1 = g.component1[i][j];
            BlockShape& s2 = g.component2[i][j];
            s1.form = s2.form = plan.form;
            s1.params = s2.params = plan.params;
            s1.first_param = s2.first_param = g.total_params;
            s1.rows = g.super_blocks[i].dim1();
            s1.cols = g.sub_blocks[j].dim1();
            s2.rows = g.super_blocks[i].dim2();
            s2.cols = g.sub_blocks[j].dim2();
            g.total_params += plan.params;
            if (plan.form == BlockShape::Form::Unstructured &&
                (s1.rows * s1.cols > 0 || s2.rows * s2.cols > 0)) {
                g.fully_structured = false;
            }
        }
    }
    return g;
}

std::size_t param_count(const GenericHom& g) {
    if (!g.fully_structured) {
        throw CriterionUnavailable(
            "no closed form for a cell below the family diagonal");
    }
    return g.total_params;
}

std::pair<Matrix<Rational>, Matrix<Rational>> specialize(
    const GenericHom& g, const std::vector<Rational>& values) {
    return specialize_impl(g, values);
}

std::pair<Matrix<Fp>, Matrix<Fp>> specialize_mod_p(
    const GenericHom& g, const std::vector<std::uint64_t>& values,
    std::uint64_t p) {
    require_prime(p);
    std::vector<Fp> vals;
    vals.reserve(values.size());
    for (std::uint64_t v : values) vals.emplace_back(v, p);
    return specialize_impl(g, vals);
}

}  // namespace kron
