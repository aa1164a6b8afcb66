#pragma once

#include <cstdint>

#include "kron/errors.hpp"

namespace kron {

// Default modulus for randomized checks: the Mersenne prime 2^61 - 1.
inline constexpr std::uint64_t kDefaultPrime = 2305843009213693951ull;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Throws BadPrime unless p is a prime that fits the modular kernels
// (2 <= p < 2^62).
void require_prime(std::uint64_t p);

// Residue carrying its modulus. A default-constructed element is the neutral
// zero: modulus 0, acting as 0 of whatever field the other operand lives in.
// This lets Matrix<Fp> value-initialize entries before a modulus is chosen.
// Arithmetic between two elements with distinct nonzero moduli throws
// BadPrime.
struct Fp {
    std::uint64_t value = 0;
    std::uint64_t mod = 0;

    Fp() = default;
    Fp(std::uint64_t v, std::uint64_t p) : value(p ? v % p : v), mod(p) {
        if (p == 0) throw BadPrime("zero modulus");
    }

    bool is_zero() const { return value == 0; }

    Fp inverse() const;

    friend Fp operator+(const Fp& a, const Fp& b);
    friend Fp operator-(const Fp& a, const Fp& b);
    friend Fp operator*(const Fp& a, const Fp& b);
    friend Fp operator/(const Fp& a, const Fp& b);
    Fp operator-() const;

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    friend bool operator==(const Fp& a, const Fp& b) {
        return a.value == b.value;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
};

}  // namespace kron
