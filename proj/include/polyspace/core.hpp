#pragma once

#include "polyspace/length_vector.hpp"
#include "polyspace/subset.hpp"

#include <optional>
#include <string_view>

namespace polyspace {

enum class SubsetClass { Short, Long, Median };

enum class Emptiness { Nonempty, Empty, Degenerate };

std::string_view to_string(SubsetClass c) noexcept;
std::string_view to_string(Emptiness e) noexcept;

/// Default limit on n for operations that scan exponentially many subsets.
inline constexpr int kDefaultEnumerationCap = 30;

/// Scales the vector so its coordinates sum to exactly 1.
LengthVector normalize(const LengthVector& lengths);

/// Short iff the length of J is less than the length of its complement,
/// Median on equality, Long otherwise. Throws DomainError if J's ambient
/// size differs from n.
SubsetClass classify_subset(const LengthVector& lengths, const SubsetMask& subset);

/// True iff no subset is median. Throws CapacityError above `cap`.
bool is_generic(const LengthVector& lengths, int cap = kDefaultEnumerationCap);

/// Some median subset, if one exists. Same capacity rule as is_generic.
std::optional<SubsetMask> find_median_subset(const LengthVector& lengths, int cap = kDefaultEnumerationCap);

/// Every p-subset is short: the p largest coordinates sum to less than half.
bool in_gamma(const LengthVector& lengths, int p);

/// Largest coordinate is at least 1/(2p) of the total. Throws DomainError for p < 1.
bool in_lambda(const LengthVector& lengths, int p);

/// Empty when a single bar is long, Degenerate when a single bar is median.
Emptiness n_nonempty(const LengthVector& lengths);

/// True iff all long 3-subsets share a common index (vacuously true when
/// there are none). Requires n >= 3.
bool is_normal(const LengthVector& lengths);

} // namespace polyspace
