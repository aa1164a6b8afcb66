#include "kron/rational.hpp"

#include <cctype>

#include "kron/errors.hpp"

namespace kron {

namespace {

// Digits with an optional leading '-' when allow_sign is set.
bool is_integer_literal(const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < s.size() && s[i] == '-') ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto fail = [&text]() {
        throw ParseError("not a rational literal: '" + text + "'");
    };
    const std::size_t slash = text.find('/');
    const std::string num = text.substr(0, slash);
    if (!is_integer_literal(num, true)) fail();
    mpz_class n(num, 10);
    mpz_class d(1);
    if (slash != std::string::npos) {
        const std::string den = text.substr(slash + 1);
        if (!is_integer_literal(den, false)) fail();
        d = mpz_class(den, 10);
        if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    }
    Rational value(n, d);
    value.canonicalize();
    return value;
}

std::string format_rational(const Rational& value) {
    return value.get_str();
}

}  // namespace kron
