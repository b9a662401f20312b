#pragma once

#include "polyspace/betti.hpp"
#include "polyspace/length_vector.hpp"
#include "polyspace/lp.hpp"
#include "polyspace/subset.hpp"

#include <compare>
#include <vector>

namespace polyspace {

inline constexpr int kChamberCodeCap = 16;

/// For subsets of {1..n} indexing an ascending-sorted vector: `lower` is
/// dominated by `upper` when it is no larger and, matching elements from the
/// top down, each element of `lower` is at most the paired element of
/// `upper`. Dominated sets are never longer than their dominators.
bool dominated_by(std::uint64_t lower, std::uint64_t upper);

/// Canonical label of a Σ_n-orbit of chambers: the dominance-maximal short
/// subsets containing n of the ascending-sorted vector, sorted by (size, bits).
struct ChamberCode
{
    int n = 0;
    std::vector<SubsetMask> maximal_shorts;

    /// Whether J (which must contain n) is short under this code.
    bool is_short(std::uint64_t subset_with_top) const;
    /// "{{1,4},{2,3,4}}"; "{}" when even {n} is long.
    std::string str() const;

    friend bool operator==(const ChamberCode&, const ChamberCode&) = default;
    friend std::strong_ordering operator<=>(const ChamberCode& a, const ChamberCode& b);
};

/// Throws GenericityError on a wall and CapacityError for n > 16.
ChamberCode chamber_code(const LengthVector& lengths);

/// Both vectors must be generic with the same n.
bool same_chamber_orbit(const LengthVector& a, const LengthVector& b);

struct ChamberOrbit
{
    ChamberCode code;
    /// Generic, ascending-sorted, normalized point of the chamber.
    LengthVector witness;
    BettiProfile planar;
    BettiProfile spatial;
};

struct EnumerationStats
{
    std::int64_t nodes = 0;
    std::int64_t lp_calls = 0;
    std::int64_t forced = 0;
};

/// Every Σ_n-orbit of chambers for 3 <= n <= 9, sorted by code.
/// Throws CapacityError outside that range. n = 9 is very slow.
std::vector<ChamberOrbit> enumerate_chamber_orbits(int n, EnumerationStats* stats = nullptr);

} // namespace polyspace
