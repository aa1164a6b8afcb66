#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kron/rational.hpp"

namespace kron {

// Univariate polynomial over the rationals. Coefficients are stored in
// ascending order with no trailing zeros, so the representation is unique.
class Poly {
public:
    Poly() = default;
    explicit Poly(Rational constant);
    explicit Poly(std::vector<Rational> coeffs);

    // The monomial x.
    static Poly variable();

    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    // Coefficient of x^k, 0 beyond the degree.
    Rational coeff(std::size_t k) const;
    const Rational& leading() const;

    // Index of the lowest nonzero coefficient; requires a nonzero input.
    std::size_t valuation() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    friend Poly operator*(const Rational& s, const Poly& p);

    // Quotient and remainder with deg(rem) < deg(divisor). The divisor must
    // be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;

    Poly monic() const;
    Poly derivative() const;
    Rational eval(const Rational& x) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Rendering like "x^2 - 1/2*x + 3", for error messages and logs.
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Monic greatest common divisor; zero when both inputs are zero.
Poly poly_gcd(Poly a, Poly b);

struct RationalRoots {
    // Distinct roots in increasing order with multiplicities in the input.
    std::vector<std::pair<Rational, int>> roots;
    // Monic cofactor with no rational roots; constant 1 iff the input splits
    // into rational linear factors.
    Poly residual;
};

// All rational roots of a nonzero polynomial, by Sturm-sequence isolation
// and exact candidate checks.
RationalRoots rational_roots(const Poly& p);

}  // namespace kron
