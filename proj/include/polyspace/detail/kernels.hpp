#pragma once

// Integer-weight kernels shared by the predicate, Betti and chamber code.
// Every routine works on a WeightView, so one template covers both the
// machine-word and the arbitrary-precision representation.

#include "polyspace/length_vector.hpp"
#include "polyspace/subset.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace polyspace::detail {

template <class T>
T subset_weight(const WeightView<T>& v, std::uint64_t mask)
{
    T s = 0;
    for (std::uint64_t b = mask; b; b &= b - 1) s += v.w[static_cast<std::size_t>(std::countr_zero(b))];
    return s;
}

/// -1 short, 0 median, +1 long.
template <class T>
int compare_to_half(const WeightView<T>& v, const T& subset_sum)
{
    const T twice = subset_sum * 2;
    if (twice < v.total) return -1;
    if (twice > v.total) return 1;
    return 0;
}

struct ClassCounts
{
    std::uint64_t short_count = 0;
    std::uint64_t median_count = 0;
    std::uint64_t long_count = 0;
};

/// Classifies every subset J with fixed ⊆ J, J ⊆ fixed ∪ free, and
/// |J \ fixed| = k. When k exceeds half of the free set the walk runs over
/// the complements inside `free` instead, so the cost is C(|free|, min(k, |free|-k)).
template <class T>
ClassCounts count_classes(const WeightView<T>& v, std::uint64_t fixed, std::uint64_t free, int k)
{
    ClassCounts counts;
    const int width = std::popcount(free);
    if (k < 0 || k > width) return counts;
    const T fixed_sum = subset_weight(v, fixed);
    T free_sum = subset_weight(v, free);

    if (2 * k <= width) {
        for_each_combination(width, k, [&](std::uint64_t compact) {
            const T s = fixed_sum + subset_weight(v, deposit_bits(compact, free));
            switch (compare_to_half(v, s)) {
            case -1: ++counts.short_count; break;
            case 0: ++counts.median_count; break;
            default: ++counts.long_count; break;
            }
        });
    } else {
        const T base = fixed_sum + free_sum;
        for_each_combination(width, width - k, [&](std::uint64_t compact) {
            const T s = base - subset_weight(v, deposit_bits(compact, free));
            switch (compare_to_half(v, s)) {
            case -1: ++counts.short_count; break;
            case 0: ++counts.median_count; break;
            default: ++counts.long_count; break;
            }
        });
    }
    return counts;
}

template <class T>
std::vector<std::pair<T, std::uint64_t>> sorted_subset_sums(const WeightView<T>& v, std::uint64_t positions)
{
    std::vector<std::pair<T, std::uint64_t>> sums{{T(0), 0}};
    std::vector<std::pair<T, std::uint64_t>> shifted;
    std::vector<std::pair<T, std::uint64_t>> merged;
    for (std::uint64_t b = positions; b; b &= b - 1) {
        const int i = std::countr_zero(b);
        const std::uint64_t bit = std::uint64_t{1} << i;
        shifted.clear();
        for (const auto& [s, m] : sums) shifted.emplace_back(s + v.w[static_cast<std::size_t>(i)], m | bit);
        merged.clear();
        merged.reserve(sums.size() * 2);
        std::merge(sums.begin(), sums.end(), shifted.begin(), shifted.end(), std::back_inserter(merged),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
        sums.swap(merged);
    }
    return sums;
}

/// Meet in the middle: some subset with 2 * sum == total, if any.
/// Costs O(2^(n/2)) instead of the O(2^n) of a direct scan.
template <class T>
std::optional<std::uint64_t> find_half_sum(const WeightView<T>& v)
{
    if (v.total % 2 != 0) return std::nullopt;
    const T target = v.total / 2;
    const int n = static_cast<int>(v.w.size());
    const int h = n / 2;
    const auto left = sorted_subset_sums(v, low_bits(h));
    const auto right = sorted_subset_sums(v, low_bits(n) & ~low_bits(h));

    // Two pointers: left ascending, right descending.
    std::size_t i = 0;
    std::size_t j = right.size();
    while (i < left.size() && j > 0) {
        const T s = left[i].first + right[j - 1].first;
        if (s == target) return left[i].second | right[j - 1].second;
        if (s < target)
            ++i;
        else
            --j;
    }
    return std::nullopt;
}

} // namespace polyspace::detail
