#pragma once

#include "kron/invariants.hpp"
#include "kron/matrix.hpp"

namespace kron {

// Pair of equally shaped rational matrices, read as the one-parameter family
// t*E + H. Rows are the target vertex, columns the source vertex.
struct Pencil {
    Matrix<Rational> E, H;

    Pencil() = default;
    Pencil(Matrix<Rational> e, Matrix<Rational> h);

    std::size_t rows() const { return E.rows(); }
    std::size_t cols() const { return E.cols(); }

    friend bool operator==(const Pencil&, const Pencil&) = default;
};

// Building blocks. Sizes must be >= 1 (InvalidPart otherwise).
// The preprojective block of size a is a x (a-1), the regular blocks are
// size x size with a single eigenvalue, the preinjective block of size c is
// (c-1) x c.
Pencil preprojective_pencil(int size);
Pencil regular_pencil(const ProjectivePoint& point, int size);
Pencil preinjective_pencil(int size);

Pencil indecomposable_pencil(const BlockRef& block);

// Block diagonal direct sum of the canonical blocks in canonical order.
Pencil canonical_pencil(const KroneckerInvariants& inv);

Pencil direct_sum(const Pencil& a, const Pencil& b);

// Transposes both matrices; on invariants this swaps the preprojective and
// preinjective lists.
Pencil transpose_dual(const Pencil& p);

// The matrix t*E + H.
Matrix<Rational> evaluate_at(const Pencil& p, const Rational& t);

}  // namespace kron
