#pragma once

#include "polyspace/core.hpp"
#include "polyspace/length_vector.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace polyspace {

enum class Space { Planar, Spatial };

std::string_view to_string(Space s) noexcept;
Space parse_space(std::string_view text);

/// Betti numbers of one polygon space, indexed by degree.
/// Planar profiles cover degrees 0..n-3; spatial ones 0..2(n-3), with
/// zeros in every odd degree.
struct BettiProfile
{
    Space space = Space::Planar;
    int n = 0;
    std::vector<std::int64_t> values;

    std::int64_t total() const;
    friend bool operator==(const BettiProfile&, const BettiProfile&) = default;
};

/// Number of J ⊆ {1..n-1} with |J| = j such that J ∪ {n} is short.
std::int64_t alpha(const LengthVector& lengths, int j);

/// Short (p+1)-subsets containing the index of the longest bar
/// (smallest such index on ties).
std::int64_t a_short(const LengthVector& lengths, int p);
/// Median (p+1)-subsets containing that same index.
std::int64_t a_median(const LengthVector& lengths, int p);

/// b_{2p} of the spatial polygon space, sum_{j<=p} [alpha_j - alpha_{n-j-2}].
/// Throws GenericityError off the chambers and DomainError for p outside 0..n-3.
std::int64_t betti_n(const LengthVector& lengths, int p);

/// b_p of the planar polygon space, a_p + ã_p + a_{n-3-p}. Accepts
/// non-generic vectors; the median term accounts for them.
std::int64_t betti_m(const LengthVector& lengths, int p);

/// Sum of all planar Betti numbers. Requires a generic vector.
std::int64_t total_betti_m(const LengthVector& lengths);

/// 2^(n-1) - C(n-1, floor((n-1)/2)), an upper bound for total_betti_m.
std::int64_t total_betti_m_bound(int n);

/// Topological complexity of a nonempty spatial polygon space, 2n - 5.
/// Throws EmptinessError when the space is empty or degenerate.
int tc_n(const LengthVector& lengths);

BettiProfile planar_profile(const LengthVector& lengths);
BettiProfile spatial_profile(const LengthVector& lengths);

namespace detail {

// Same formulas without the wall check, for callers that have already
// established genericity (the Monte Carlo loop).
std::int64_t betti_n_generic(const LengthVector& lengths, int p);
std::int64_t total_betti_m_generic(const LengthVector& lengths);

} // namespace detail

} // namespace polyspace
