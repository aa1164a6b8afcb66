#include "kron/prime_field.hpp"

namespace kron {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) acc = mulmod(acc, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return acc;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses decide primality for every n < 3.3 * 10^24.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i + 1 < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

void require_prime(std::uint64_t p) {
    if (p >= (1ull << 62)) {
        throw BadPrime("modulus too large: " + std::to_string(p));
    }
    if (!is_prime_u64(p)) {
        throw BadPrime("not a prime: " + std::to_string(p));
    }
}

namespace {

// Resolves the shared modulus of two operands, where modulus 0 is the
// neutral zero.
std::uint64_t joint_mod(const Fp& a, const Fp& b) {
    if (a.mod != 0 && b.mod != 0 && a.mod != b.mod) {
        throw BadPrime("mixed moduli: " + std::to_string(a.mod) + " vs " +
                       std::to_string(b.mod));
    }
    return a.mod != 0 ? a.mod : b.mod;
}

}  // namespace

Fp Fp::inverse() const {
    if (value == 0 || mod == 0) {
        throw InternalInconsistency("inverse of zero residue");
    }
    return Fp(powmod(value, mod - 2, mod), mod);
}

Fp operator+(const Fp& a, const Fp& b) {
    const std::uint64_t p = joint_mod(a, b);
    if (p == 0) return Fp();
    std::uint64_t s = a.value + b.value;  // both < p < 2^62, no overflow
    if (s >= p) s -= p;
    return Fp(s, p);
}

Fp operator-(const Fp& a, const Fp& b) {
    const std::uint64_t p = joint_mod(a, b);
    if (p == 0) return Fp();
    const std::uint64_t s = a.value >= b.value ? a.value - b.value
                                               : a.value + p - b.value;
    return Fp(s, p);
}

Fp operator*(const Fp& a, const Fp& b) {
    const std::uint64_t p = joint_mod(a, b);
    if (p == 0) return Fp();
    return Fp(mulmod(a.value, b.value, p), p);
}

Fp operator/(const Fp& a, const Fp& b) {
    const std::uint64_t p = joint_mod(a, b);
    if (p == 0 || b.value == 0) {
        throw InternalInconsistency("division by zero residue");
    }
    return Fp(mulmod(a.value, powmod(b.value, p - 2, p), p), p);
}

Fp Fp::operator-() const {
    if (mod == 0) return Fp();
    if (value == 0) return *this;
    return Fp(mod - value, mod);
}

}  // namespace kron
