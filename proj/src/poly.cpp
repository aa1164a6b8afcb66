#include "kron/poly.hpp"

#include <algorithm>

#include "kron/errors.hpp"

namespace kron {

Poly::Poly(Rational constant) {
    if (sgn(constant) != 0) c_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::variable() {
    return Poly(std::vector<Rational>{Rational(0), Rational(1)});
}

void Poly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational Poly::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : Rational(0);
}

const Rational& Poly::leading() const {
    if (c_.empty()) throw InternalInconsistency("leading of zero polynomial");
    return c_.back();
}

std::size_t Poly::valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (sgn(c_[k]) != 0) return k;
    }
    throw InternalInconsistency("valuation of zero polynomial");
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t k = 0; k < c_.size(); ++k) out[k] += c_[k];
    for (std::size_t k = 0; k < o.c_.size(); ++k) out[k] += o.c_[k];
    return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t k = 0; k < c_.size(); ++k) out[k] += c_[k];
    for (std::size_t k = 0; k < o.c_.size(); ++k) out[k] -= o.c_[k];
    return Poly(std::move(out));
}

Poly Poly::operator*(const Poly& o) const {
    if (c_.empty() || o.c_.empty()) return Poly();
    std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            out[i + j] += c_[i] * o.c_[j];
        }
    }
    return Poly(std::move(out));
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

Poly operator*(const Rational& s, const Poly& p) {
    if (sgn(s) == 0) return Poly();
    Poly out = p;
    for (auto& c : out.c_) c *= s;
    return out;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) {
        throw InternalInconsistency("polynomial division by zero");
    }
    Poly rem = *this;
    const int dd = divisor.degree();
    if (degree() < dd) return {Poly(), rem};
    std::vector<Rational> quot(degree() - dd + 1, Rational(0));
    const Rational& lead = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= dd) {
        const std::size_t shift = rem.degree() - dd;
        const Rational f = rem.leading() / lead;
        quot[shift] = f;
        // rem -= f * x^shift * divisor, with the leading term cancelling.
        for (int k = 0; k <= dd; ++k) {
            rem.c_[shift + k] -= f * divisor.c_[k];
        }
        rem.trim();
    }
    return {Poly(std::move(quot)), rem};
}

Poly Poly::monic() const {
    if (is_zero()) throw InternalInconsistency("monic of zero polynomial");
    return (1 / leading()) * *this;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> out(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) {
        out[k - 1] = Rational(static_cast<long>(k)) * c_[k];
    }
    return Poly(std::move(out));
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (sgn(c_[k]) == 0) continue;
        Rational a = c_[k];
        if (out.empty()) {
            if (sgn(a) < 0) out += "-";
        } else {
            out += sgn(a) < 0 ? " - " : " + ";
        }
        a = abs(a);
        const bool unit = a == 1;
        if (k == 0) {
            out += format_rational(a);
        } else {
            if (!unit) out += format_rational(a) + "*";
            out += k == 1 ? "x" : "x^" + std::to_string(k);
        }
    }
    return out;
}

Poly poly_gcd(Poly a, Poly b) {
    // Monic remainders keep coefficient growth in check.
    if (!a.is_zero()) a = a.monic();
    if (!b.is_zero()) b = b.monic();
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = r.is_zero() ? Poly() : r.monic();
    }
    return a;
}

namespace {

int sign_of(const Rational& x) { return sgn(x); }

// Sturm chain of a squarefree polynomial.
std::vector<Poly> sturm_chain(const Poly& u) {
    std::vector<Poly> chain;
    chain.push_back(u);
    chain.push_back(u.derivative());
    while (!chain.back().is_zero()) {
        const Poly& s0 = chain[chain.size() - 2];
        const Poly& s1 = chain.back();
        chain.push_back(-(s0.divmod(s1).second));
    }
    chain.pop_back();
    return chain;
}

int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
    int variations = 0, prev = 0;
    for (const Poly& s : chain) {
        const int sg = sign_of(s.eval(x));
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++variations;
        prev = sg;
    }
    return variations;
}

// Count of distinct real roots in (lo, hi]; endpoints must not be roots of
// the chain's first polynomial.
int roots_between(const std::vector<Poly>& chain, const Rational& lo,
                  const Rational& hi) {
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

// Smallest-denominator rational in the closed interval [lo, hi], by walking
// the continued fraction expansions.
Rational simplest_between(const Rational& lo, const Rational& hi) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num().get_mpz_t(),
               lo.get_den().get_mpz_t());
    const Rational floor_lo(fl);
    if (floor_lo == lo) return lo;
    if (floor_lo + 1 <= hi) return floor_lo + 1;
    // Both bounds lie strictly between consecutive integers; recurse on the
    // reciprocal of the fractional parts.
    return floor_lo +
           1 / simplest_between(1 / (hi - floor_lo), 1 / (lo - floor_lo));
}

// Multiplicity of (x - root) in p, removing those factors from p.
int strip_root(Poly& p, const Rational& root) {
    const Poly linear(std::vector<Rational>{-root, Rational(1)});
    int count = 0;
    while (true) {
        auto [q, r] = p.divmod(linear);
        if (!r.is_zero()) break;
        p = std::move(q);
        ++count;
    }
    return count;
}

}  // namespace

RationalRoots rational_roots(const Poly& input) {
    if (input.is_zero()) {
        throw InternalInconsistency("roots of the zero polynomial");
    }
    RationalRoots result;
    Poly p = input;

    const std::size_t val = p.is_zero() ? 0 : p.valuation();
    if (val > 0) {
        std::vector<Rational> shifted(p.degree() + 1 - val);
        for (std::size_t k = 0; k < shifted.size(); ++k) {
            shifted[k] = p.coeff(k + val);
        }
        p = Poly(std::move(shifted));
        result.roots.emplace_back(Rational(0), static_cast<int>(val));
    }

    if (p.degree() > 0) {
        // Squarefree part; rational roots of p and u coincide.
        Poly u = p.divmod(poly_gcd(p, p.derivative())).first.monic();

        // Denominator bound from the rational root theorem applied to the
        // primitive integer form of u.
        mpz_class den_lcm(1);
        for (int k = 0; k <= u.degree(); ++k) {
            mpz_class den = u.coeff(k).get_den(), g;
            mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
            den_lcm *= den / g;
        }
        mpz_class content(0);
        for (int k = 0; k <= u.degree(); ++k) {
            mpz_class c = u.coeff(k).get_num() * (den_lcm / u.coeff(k).get_den());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
        }
        const mpz_class lead_bound =
            abs(u.leading().get_num() * (den_lcm / u.leading().get_den())) /
            content;
        // Distinct rationals with denominators <= L are at least 1/L^2
        // apart, so an isolating interval narrower than that pins down at
        // most one candidate.
        const mpz_class gap_den = lead_bound * lead_bound + 1;
        const Rational min_gap = Rational(1) / Rational(gap_den);

        while (true) {
            const std::vector<Poly> chain = sturm_chain(u);
            // Cauchy bound: all real roots lie strictly inside (-B, B).
            Rational bound(1);
            for (int k = 0; k < u.degree(); ++k) {
                const Rational r = 1 + abs(u.coeff(k) / u.leading());
                if (r > bound) bound = r;
            }
            struct Interval {
                Rational lo, hi;
                int count;
            };
            std::vector<Interval> queue;
            const int total = roots_between(chain, -bound, bound);
            if (total > 0) queue.push_back({-bound, bound, total});
            bool restarted = false;
            std::vector<Rational> found;
            while (!queue.empty() && !restarted) {
                Interval iv = queue.back();
                queue.pop_back();
                if (iv.count == 1 && iv.hi - iv.lo < min_gap) {
                    const Rational cand = simplest_between(iv.lo, iv.hi);
                    if (sgn(u.eval(cand)) == 0) found.push_back(cand);
                    // Otherwise the isolated root is irrational; it stays in
                    // the residual.
                    continue;
                }
                const Rational mid = (iv.lo + iv.hi) / 2;
                if (sgn(u.eval(mid)) == 0) {
                    // Exact hit. Deflate and redo the isolation, so interval
                    // endpoints stay clear of roots.
                    found.push_back(mid);
                    restarted = true;
                    break;
                }
                const int left = roots_between(chain, iv.lo, mid);
                if (left > 0) queue.push_back({iv.lo, mid, left});
                if (iv.count - left > 0) queue.push_back({mid, iv.hi, iv.count - left});
            }
            for (const Rational& root : found) {
                const int mult = strip_root(p, root);
                if (mult <= 0) {
                    throw InternalInconsistency("isolated root does not divide");
                }
                result.roots.emplace_back(root, mult);
                strip_root(u, root);
            }
            if (!restarted) break;
        }
    }

    std::sort(result.roots.begin(), result.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    result.residual = p.degree() > 0 ? p.monic() : Poly(Rational(1));
    return result;
}

}  // namespace kron
