#pragma once

#include <cstddef>
#include <vector>

#include "kron/poly.hpp"

namespace kron {

// Dense matrix of rational polynomials. Zero rows or columns are allowed.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Poly& operator()(std::size_t i, std::size_t j) {
        return e_[i * cols_ + j];
    }
    const Poly& operator()(std::size_t i, std::size_t j) const {
        return e_[i * cols_ + j];
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Poly> e_;
};

// Monic invariant factors d_1 | d_2 | ... | d_r where r is the rank over the
// rational function field.
std::vector<Poly> smith_normal_form(PolyMatrix m);

}  // namespace kron
