#include "kron/pencil.hpp"

#include "kron/errors.hpp"

namespace kron {

Pencil::Pencil(Matrix<Rational> e, Matrix<Rational> h)
    : E(std::move(e)), H(std::move(h)) {
    if (E.rows() != H.rows() || E.cols() != H.cols()) {
        throw LengthMismatch("pencil matrices differ in shape");
    }
}

namespace {

void check_size(int size) {
    if (size < 1) {
        throw InvalidPart("block size " + std::to_string(size) +
                          " is smaller than 1");
    }
}

// Nilpotent single block with ones on the superdiagonal.
Matrix<Rational> jordan_zero(int n) {
    Matrix<Rational> j(n, n);
    for (int i = 0; i + 1 < n; ++i) j(i, i + 1) = 1;
    return j;
}

}  // namespace

Pencil preprojective_pencil(int size) {
    check_size(size);
    const std::size_t a = size;
    Matrix<Rational> e(a, a - 1), h(a, a - 1);
    for (std::size_t i = 0; i + 1 < a; ++i) {
        e(i, i) = 1;
        h(i + 1, i) = 1;
    }
    return Pencil(std::move(e), std::move(h));
}

Pencil regular_pencil(const ProjectivePoint& point, int size) {
    check_size(size);
    const std::size_t b = size;
    if (point.is_infinity()) {
        return Pencil(jordan_zero(b), identity_matrix(b));
    }
    Matrix<Rational> h = jordan_zero(b);
    for (std::size_t i = 0; i < b; ++i) h(i, i) = point.value();
    return Pencil(identity_matrix(b), std::move(h));
}

Pencil preinjective_pencil(int size) {
    check_size(size);
    const std::size_t c = size;
    Matrix<Rational> e(c - 1, c), h(c - 1, c);
    for (std::size_t i = 0; i + 1 < c; ++i) {
        e(i, i) = 1;
        h(i, i + 1) = 1;
    }
    return Pencil(std::move(e), std::move(h));
}

Pencil indecomposable_pencil(const BlockRef& block) {
    switch (block.family) {
        case BlockRef::Family::Preprojective:
            return preprojective_pencil(block.size);
        case BlockRef::Family::Regular:
            return regular_pencil(block.point, block.size);
        case BlockRef::Family::Preinjective:
            return preinjective_pencil(block.size);
    }
    throw InternalInconsistency("unknown block family");
}

Pencil canonical_pencil(const KroneckerInvariants& inv) {
    validate(inv);
    Pencil sum(Matrix<Rational>(0, 0), Matrix<Rational>(0, 0));
    for (const BlockRef& block : block_list(inv)) {
        sum = direct_sum(sum, indecomposable_pencil(block));
    }
    return sum;
}

Pencil direct_sum(const Pencil& a, const Pencil& b) {
    Matrix<Rational> e(a.rows() + b.rows(), a.cols() + b.cols());
    Matrix<Rational> h(a.rows() + b.rows(), a.cols() + b.cols());
    e.set_block(0, 0, a.E);
    e.set_block(a.rows(), a.cols(), b.E);
    h.set_block(0, 0, a.H);
    h.set_block(a.rows(), a.cols(), b.H);
    return Pencil(std::move(e), std::move(h));
}

Pencil transpose_dual(const Pencil& p) {
    return Pencil(p.E.transposed(), p.H.transposed());
}

Matrix<Rational> evaluate_at(const Pencil& p, const Rational& t) {
    Matrix<Rational> out = p.H;
    for (std::size_t i = 0; i < p.rows(); ++i) {
        for (std::size_t j = 0; j < p.cols(); ++j) {
            if (scalar_is_zero(p.E(i, j))) continue;
            out(i, j) += t * p.E(i, j);
        }
    }
    return out;
}

}  // namespace kron
