#include "kron/invariants.hpp"

#include <algorithm>
#include <functional>

#include "kron/errors.hpp"

namespace kron {

ProjectivePoint ProjectivePoint::parse(const std::string& text) {
    if (text == "inf") return infinity();
    return finite(parse_rational(text));
}

std::string ProjectivePoint::to_string() const {
    return infinite_ ? "inf" : format_rational(v_);
}

const Rational& ProjectivePoint::value() const {
    if (infinite_) {
        throw InternalInconsistency("finite value of the infinite point");
    }
    return v_;
}

namespace {

void check_parts(const std::vector<int>& parts, const char* what) {
    for (int p : parts) {
        if (p < 1) {
            throw InvalidPart(std::string(what) + " part " +
                              std::to_string(p) + " is smaller than 1");
        }
    }
}

void check_sorted(const std::vector<int>& parts, const char* what) {
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<int>())) {
        throw NotSorted(std::string(what) +
                        " parts are not weakly decreasing");
    }
}

std::vector<int> sorted_desc(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return parts;
}

}  // namespace

KroneckerInvariants normalize(const RawInvariants& raw) {
    check_parts(raw.preprojective, "preprojective");
    check_parts(raw.preinjective, "preinjective");
    KroneckerInvariants inv;
    inv.preprojective = sorted_desc(raw.preprojective);
    inv.preinjective = sorted_desc(raw.preinjective);
    for (const auto& [point, sizes] : raw.regular) {
        check_parts(sizes, "regular");
        if (sizes.empty()) continue;
        auto& acc = inv.regular[point];
        acc.insert(acc.end(), sizes.begin(), sizes.end());
    }
    for (auto& [point, sizes] : inv.regular) sizes = sorted_desc(sizes);
    return inv;
}

KroneckerInvariants normalize(const KroneckerInvariants& inv) {
    RawInvariants raw;
    raw.preprojective = inv.preprojective;
    raw.preinjective = inv.preinjective;
    raw.regular.assign(inv.regular.begin(), inv.regular.end());
    return normalize(raw);
}

void validate(const KroneckerInvariants& inv) {
    check_parts(inv.preprojective, "preprojective");
    check_sorted(inv.preprojective, "preprojective");
    check_parts(inv.preinjective, "preinjective");
    check_sorted(inv.preinjective, "preinjective");
    for (const auto& [point, sizes] : inv.regular) {
        if (sizes.empty()) {
            throw InvalidPart("regular point " + point.to_string() +
                              " has an empty partition");
        }
        check_parts(sizes, "regular");
        check_sorted(sizes, "regular");
    }
}

long long BlockRef::dim1() const {
    switch (family) {
        case Family::Preprojective: return size - 1;
        case Family::Regular: return size;
        case Family::Preinjective: return size;
    }
    throw InternalInconsistency("unknown block family");
}

long long BlockRef::dim2() const {
    switch (family) {
        case Family::Preprojective: return size;
        case Family::Regular: return size;
        case Family::Preinjective: return size - 1;
    }
    throw InternalInconsistency("unknown block family");
}

std::vector<BlockRef> block_list(const KroneckerInvariants& inv) {
    std::vector<BlockRef> blocks;
    for (int a : inv.preprojective) {
        blocks.push_back({BlockRef::Family::Preprojective, a,
                          ProjectivePoint::infinity()});
    }
    for (const auto& [point, sizes] : inv.regular) {
        for (int b : sizes) {
            blocks.push_back({BlockRef::Family::Regular, b, point});
        }
    }
    for (int c : inv.preinjective) {
        blocks.push_back({BlockRef::Family::Preinjective, c,
                          ProjectivePoint::infinity()});
    }
    return blocks;
}

DimensionVector dimension_vector(const KroneckerInvariants& inv) {
    validate(inv);
    DimensionVector d;
    for (const BlockRef& b : block_list(inv)) {
        d.dim1 += b.dim1();
        d.dim2 += b.dim2();
    }
    return d;
}

long long total_dimension(const KroneckerInvariants& inv) {
    const DimensionVector d = dimension_vector(inv);
    return d.dim1 + d.dim2;
}

KroneckerInvariants dualize(const KroneckerInvariants& inv) {
    validate(inv);
    KroneckerInvariants out;
    out.preprojective = inv.preinjective;
    out.preinjective = inv.preprojective;
    out.regular = inv.regular;
    return out;
}

}  // namespace kron
