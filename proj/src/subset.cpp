#include "polyspace/subset.hpp"

#include "polyspace/errors.hpp"

namespace polyspace {

SubsetMask::SubsetMask(std::uint64_t bits, int n) : bits_(bits), n_(n)
{
    if (n < 0 || n > kMaxLinks) throw DomainError("subset ambient size must lie in 0..63, got " + std::to_string(n));
    if (bits & ~low_bits(n)) throw DomainError("subset mask names an index above n = " + std::to_string(n));
}

SubsetMask SubsetMask::from_indices(const std::vector<int>& one_based, int n)
{
    std::uint64_t bits = 0;
    for (int i : one_based) {
        if (i < 1 || i > n) throw DomainError("subset index " + std::to_string(i) + " outside 1.." + std::to_string(n));
        bits |= std::uint64_t{1} << (i - 1);
    }
    return SubsetMask(bits, n);
}

SubsetMask SubsetMask::full(int n)
{
    return SubsetMask(low_bits(n), n);
}

SubsetMask SubsetMask::complement() const noexcept
{
    SubsetMask c;
    c.bits_ = ~bits_ & low_bits(n_);
    c.n_ = n_;
    return c;
}

std::vector<int> SubsetMask::indices() const
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
}

std::string SubsetMask::str() const
{
    std::string s = "{";
    bool first = true;
    for (int i : indices()) {
        if (!first) s += ",";
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

} // namespace polyspace
