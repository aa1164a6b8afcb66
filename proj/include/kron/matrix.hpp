#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "kron/errors.hpp"
#include "kron/prime_field.hpp"
#include "kron/rational.hpp"

namespace kron {

inline bool scalar_is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool scalar_is_zero(const Fp& x) { return x.is_zero(); }

// Pivots with quality 0 keep elimination cheap; anything nonzero works.
inline int pivot_quality(const Rational& x) {
    return (x.get_den() == 1 && (x.get_num() == 1 || x.get_num() == -1)) ? 0
                                                                         : 1;
}
inline int pivot_quality(const Fp&) { return 0; }

// Dense matrix over an exact scalar (Rational or Fp). Zero rows or columns
// are allowed; such matrices have no entries but keep their shape.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static Matrix zero(std::size_t rows, std::size_t cols) {
        return Matrix(rows, cols);
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const {
        return e_[i * cols_ + j];
    }

    // Copies `b` into this matrix with its top-left corner at (r0, c0).
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
        if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) {
            throw InternalInconsistency("block placement out of range");
        }
        for (std::size_t i = 0; i < b.rows(); ++i) {
            for (std::size_t j = 0; j < b.cols(); ++j) {
                (*this)(r0 + i, c0 + j) = b(i, j);
            }
        }
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        }
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) {
        return !(a == b);
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) {
            throw LengthMismatch("matrix product shape mismatch");
        }
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (scalar_is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (scalar_is_zero(b(k, j))) continue;
                    c(i, j) += aik * b(k, j);
                }
            }
        }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
            throw LengthMismatch("matrix sum shape mismatch");
        }
        Matrix c = a;
        for (std::size_t k = 0; k < c.e_.size(); ++k) c.e_[k] += b.e_[k];
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
            throw LengthMismatch("matrix difference shape mismatch");
        }
        Matrix c = a;
        for (std::size_t k = 0; k < c.e_.size(); ++k) c.e_[k] -= b.e_[k];
        return c;
    }

    friend Matrix operator*(const T& s, const Matrix& a) {
        Matrix c = a;
        for (auto& x : c.e_) x = s * x;
        return c;
    }

    bool is_zero() const {
        for (const auto& x : e_) {
            if (!scalar_is_zero(x)) return false;
        }
        return true;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> e_;
};

Matrix<Rational> identity_matrix(std::size_t n);

// In-place forward elimination to row echelon form; returns the rank.
template <class T>
std::size_t eliminate(Matrix<T>& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t i = rank; i < rows; ++i) {
            if (scalar_is_zero(m(i, col))) continue;
            if (pivot == rows || pivot_quality(m(i, col)) <
                                     pivot_quality(m(pivot, col))) {
                pivot = i;
            }
            if (pivot_quality(m(pivot, col)) == 0) break;
        }
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t j = col; j < cols; ++j) {
                std::swap(m(rank, j), m(pivot, j));
            }
        }
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (scalar_is_zero(m(i, col))) continue;
            const T f = m(i, col) / m(rank, col);
            m(i, col) = T();
            for (std::size_t j = col + 1; j < cols; ++j) {
                if (scalar_is_zero(m(rank, j))) continue;
                m(i, j) -= f * m(rank, j);
            }
        }
        ++rank;
    }
    return rank;
}

// Rank by exact elimination over the scalar's field.
template <class T>
std::size_t matrix_rank(const Matrix<T>& m) {
    Matrix<T> work = m;
    return eliminate(work);
}

// Basis of the right kernel, one vector per free column, ordered by free
// column index. The basis vector for free column j has entry 1 at j.
std::vector<std::vector<Rational>> nullspace(const Matrix<Rational>& m);

// Entrywise reduction mod p. Throws BadPrime if p is not prime or some
// denominator is divisible by p.
Matrix<Fp> reduce_mod_p(const Matrix<Rational>& m, std::uint64_t p);

// Rank of a rational matrix via modular elimination over enough fixed 61-bit
// primes to pass the Hadamard determinant bound. Equal to matrix_rank but
// far cheaper on large matrices.
std::size_t rank_certified(const Matrix<Rational>& m);

}  // namespace kron
