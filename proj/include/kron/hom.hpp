#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kron/invariants.hpp"
#include "kron/matrix.hpp"
#include "kron/pencil.hpp"

namespace kron {

// Basis of the space of homomorphisms from `sub` to `super`. Each element
// is a pair (phi1, phi2) of component matrices, phi1 on the column-side
// vertex and phi2 on the row-side vertex, satisfying
//   phi2 * E_sub == E_super * phi1   and   phi2 * H_sub == H_super * phi1.
struct HomBasis {
    std::size_t sub_dim1 = 0, sub_dim2 = 0;
    std::size_t super_dim1 = 0, super_dim2 = 0;
    std::vector<std::pair<Matrix<Rational>, Matrix<Rational>>> elements;

    std::size_t dimension() const { return elements.size(); }
};

// Solves the intertwining equations exactly over the rationals. Basis
// elements are scaled to integer entries with content 1 and first nonzero
// entry positive; their order follows the solver's free columns, so the
// result is deterministic.
HomBasis hom_basis(const Pencil& sub, const Pencil& super);

// sum_i coeffs[i] * element[i]. Throws ArityMismatch when the coefficient
// count is not the basis dimension.
std::pair<Matrix<Rational>, Matrix<Rational>> combine(
    const HomBasis& basis, const std::vector<Rational>& coeffs);

// The same combination carried out mod p.
std::pair<Matrix<Fp>, Matrix<Fp>> combine_mod_p(
    const HomBasis& basis, const std::vector<std::uint64_t>& coeffs,
    std::uint64_t p);

// Closed form of one cell of the generic homomorphism. Parameters are
// constant along diagonals; with o = column - row the fills are
//   LowerBand:  x[-o] on 0 <= -o <= rows - cols (whole band, rows >= cols)
//   UpperBand:  x[o] on 0 <= o <= cols - rows (cols >= rows)
//   CornerBand: x[(cols-1) - o] on max(0, cols - rows) <= o <= cols - 1,
//               anchored at the top-right corner, min(rows, cols) parameters
// Unstructured marks cells that have no closed form here (they sit strictly
// below the family diagonal); specialization fills them with zeros.
struct BlockShape {
    enum class Form { Zero, LowerBand, UpperBand, CornerBand, Unstructured };
    Form form = Form::Zero;
    std::size_t rows = 0, cols = 0;
    std::size_t params = 0;
    std::size_t first_param = 0;
};

// Generic homomorphism between the canonical forms of two invariant triples,
// cell by cell in canonical block order. The two component grids of a cell
// share parameter indices because the intertwining equations identify their
// diagonals.
struct GenericHom {
    std::vector<BlockRef> sub_blocks, super_blocks;
    // Indexed [super_block][sub_block]; shapes follow each component's
    // vertex dimensions.
    std::vector<std::vector<BlockShape>> component1, component2;
    std::size_t total_params = 0;
    bool fully_structured = true;
    DimensionVector sub_dim, super_dim;
};

GenericHom structured_generic_hom(const KroneckerInvariants& sub,
                                  const KroneckerInvariants& super);

// Number of free parameters. Only meaningful when the hom is fully
// structured, where it equals the dimension of the hom space; throws
// CriterionUnavailable otherwise.
std::size_t param_count(const GenericHom& g);

// Component matrices at the given parameter values (size total_params,
// ArityMismatch otherwise). The result satisfies the intertwining equations
// exactly over the respective field.
std::pair<Matrix<Rational>, Matrix<Rational>> specialize(
    const GenericHom& g, const std::vector<Rational>& values);
std::pair<Matrix<Fp>, Matrix<Fp>> specialize_mod_p(
    const GenericHom& g, const std::vector<std::uint64_t>& values,
    std::uint64_t p);

}  // namespace kron
