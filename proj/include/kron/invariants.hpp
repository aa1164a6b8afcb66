#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kron/rational.hpp"

namespace kron {

// Point of the projective line over the rationals. Ordered with infinity
// first, then finite points by value, so canonical block layouts are stable.
class ProjectivePoint {
public:
    static ProjectivePoint infinity() { return ProjectivePoint(true, 0); }
    static ProjectivePoint finite(Rational v) {
        return ProjectivePoint(false, std::move(v));
    }

    // "inf" or a rational literal.
    static ProjectivePoint parse(const std::string& text);
    std::string to_string() const;

    bool is_infinity() const { return infinite_; }
    const Rational& value() const;

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
        return a.infinite_ == b.infinite_ && a.v_ == b.v_;
    }
    friend bool operator!=(const ProjectivePoint& a, const ProjectivePoint& b) {
        return !(a == b);
    }
    friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
        if (a.infinite_ != b.infinite_) return a.infinite_;
        return !a.infinite_ && a.v_ < b.v_;
    }

private:
    ProjectivePoint(bool infinite, Rational v)
        : infinite_(infinite), v_(std::move(v)) {}
    bool infinite_;
    Rational v_;
};

// Partition sizes per eigenvalue, each weakly decreasing with parts >= 1.
using RegularPart = std::map<ProjectivePoint, std::vector<int>>;

struct DimensionVector {
    long long dim1 = 0;  // source vertex, the column side of a pencil
    long long dim2 = 0;  // target vertex, the row side

    friend bool operator==(const DimensionVector&,
                           const DimensionVector&) = default;
};

// Complete isomorphism invariant of a representation: block sizes of the
// preprojective, regular, and preinjective summands. Lists are weakly
// decreasing; regular partitions are keyed by eigenvalue.
struct KroneckerInvariants {
    std::vector<int> preprojective;
    RegularPart regular;
    std::vector<int> preinjective;

    friend bool operator==(const KroneckerInvariants&,
                           const KroneckerInvariants&) = default;
};

// Same data before sorting and point deduplication.
struct RawInvariants {
    std::vector<int> preprojective;
    std::vector<std::pair<ProjectivePoint, std::vector<int>>> regular;
    std::vector<int> preinjective;
};

// Sorts block lists weakly decreasing, merges repeated points, drops points
// with empty partitions. Throws InvalidPart on any part < 1.
KroneckerInvariants normalize(const RawInvariants& raw);
KroneckerInvariants normalize(const KroneckerInvariants& inv);

// Throws InvalidPart or NotSorted when the data is not in normalized form.
void validate(const KroneckerInvariants& inv);

DimensionVector dimension_vector(const KroneckerInvariants& inv);

long long total_dimension(const KroneckerInvariants& inv);

// Invariants of the transposed representation: preprojective and
// preinjective swap, each eigenvalue keeps its partition.
KroneckerInvariants dualize(const KroneckerInvariants& inv);

inline bool is_empty(const KroneckerInvariants& inv) {
    return inv.preprojective.empty() && inv.regular.empty() &&
           inv.preinjective.empty();
}

// One indecomposable summand. The canonical block order is preprojective
// blocks (sizes weakly decreasing), regular blocks grouped by eigenvalue
// (partition order within each), preinjective blocks last.
struct BlockRef {
    enum class Family { Preprojective, Regular, Preinjective };
    Family family;
    int size;
    ProjectivePoint point = ProjectivePoint::infinity();  // Regular only

    long long dim1() const;
    long long dim2() const;
};

std::vector<BlockRef> block_list(const KroneckerInvariants& inv);

}  // namespace kron
