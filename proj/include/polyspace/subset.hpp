#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace polyspace {

inline constexpr int kMaxLinks = 63;

/// A subset of {1, ..., n}. Index i is stored in bit i-1.
class SubsetMask
{
public:
    SubsetMask() = default;

    /// Throws DomainError if n is out of range or bits name indices above n.
    SubsetMask(std::uint64_t bits, int n);

    static SubsetMask from_indices(const std::vector<int>& one_based, int n);
    static SubsetMask full(int n);

    std::uint64_t bits() const noexcept { return bits_; }
    int n() const noexcept { return n_; }
    int size() const noexcept { return std::popcount(bits_); }
    bool contains(int index) const noexcept { return index >= 1 && index <= n_ && ((bits_ >> (index - 1)) & 1u); }

    SubsetMask complement() const noexcept;

    /// Ascending one-based indices.
    std::vector<int> indices() const;

    /// "{1,2,5}"
    std::string str() const;

    friend bool operator==(const SubsetMask&, const SubsetMask&) = default;
    friend auto operator<=>(const SubsetMask&, const SubsetMask&) = default;

private:
    std::uint64_t bits_ = 0;
    int n_ = 0;
};

inline std::uint64_t low_bits(int count) noexcept
{
    return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

/// Gosper's hack: the next larger integer with the same popcount.
inline std::uint64_t next_combination(std::uint64_t x) noexcept
{
    const std::uint64_t smallest = x & (~x + 1);
    const std::uint64_t ripple = x + smallest;
    const std::uint64_t ones = ((x ^ ripple) >> 2) / smallest;
    return ripple | ones;
}

/// Calls fn(mask) for every k-element subset of the low `width` bits, in
/// increasing numeric order. `width` must be below 64.
template <class Fn>
void for_each_combination(int width, int k, Fn&& fn)
{
    if (k < 0 || k > width) return;
    if (k == 0) {
        fn(std::uint64_t{0});
        return;
    }
    const std::uint64_t limit = std::uint64_t{1} << width;
    for (std::uint64_t x = low_bits(k); x < limit; x = next_combination(x)) fn(x);
}

/// Spreads the low bits of `compact` onto the set bits of `positions`
/// (a software PDEP). Used to walk subsets of an arbitrary index set.
inline std::uint64_t deposit_bits(std::uint64_t compact, std::uint64_t positions) noexcept
{
    std::uint64_t out = 0;
    while (positions) {
        const std::uint64_t lowest = positions & (~positions + 1);
        if (compact & 1u) out |= lowest;
        compact >>= 1;
        positions ^= lowest;
    }
    return out;
}

} // namespace polyspace
