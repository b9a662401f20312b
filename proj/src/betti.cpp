#include "polyspace/betti.hpp"

#include "polyspace/detail/kernels.hpp"
#include "polyspace/errors.hpp"

#include <stdexcept>
#include <numeric>

namespace polyspace {

namespace {

void require_links(const LengthVector& lengths)
{
    if (lengths.n() < 3) throw DomainError("polygon spaces need n >= 3, got n = " + std::to_string(lengths.n()));
    if (lengths.n() > kDefaultEnumerationCap)
        throw CapacityError("Betti numbers are enumerated for n <= " + std::to_string(kDefaultEnumerationCap));
}

void require_degree(const LengthVector& lengths, int p)
{
    if (p < 0 || p > lengths.n() - 3)
        throw DomainError("degree index p must lie in 0.." + std::to_string(lengths.n() - 3) + ", got " + std::to_string(p));
}

void require_generic(const LengthVector& lengths)
{
    if (auto median = find_median_subset(lengths))
        throw GenericityError("length vector lies on the wall of " + median->str());
}

detail::ClassCounts classes_with_top(const LengthVector& lengths, int p)
{
    const int n = lengths.n();
    const std::uint64_t top = std::uint64_t{1} << lengths.argmax();
    const std::uint64_t others = low_bits(n) & ~top;
    return lengths.visit_weights([&](const auto& v) { return detail::count_classes(v, top, others, p); });
}

} // namespace

std::string_view to_string(Space s) noexcept
{
    return s == Space::Planar ? "planar" : "spatial";
}

Space parse_space(std::string_view text)
{
    if (text == "planar") return Space::Planar;
    if (text == "spatial") return Space::Spatial;
    throw DomainError("unknown space '" + std::string(text) + "' (expected planar or spatial)");
}

std::int64_t BettiProfile::total() const
{
    return std::accumulate(values.begin(), values.end(), std::int64_t{0});
}

std::int64_t alpha(const LengthVector& lengths, int j)
{
    require_links(lengths);
    const int n = lengths.n();
    if (j < 0 || j > n - 1) throw DomainError("alpha index must lie in 0.." + std::to_string(n - 1));
    const std::uint64_t last = std::uint64_t{1} << (n - 1);
    auto counts = lengths.visit_weights([&](const auto& v) { return detail::count_classes(v, last, low_bits(n - 1), j); });
    return static_cast<std::int64_t>(counts.short_count);
}

std::int64_t a_short(const LengthVector& lengths, int p)
{
    require_links(lengths);
    if (p < 0 || p > lengths.n() - 1) return 0;
    return static_cast<std::int64_t>(classes_with_top(lengths, p).short_count);
}

std::int64_t a_median(const LengthVector& lengths, int p)
{
    require_links(lengths);
    if (p < 0 || p > lengths.n() - 1) return 0;
    return static_cast<std::int64_t>(classes_with_top(lengths, p).median_count);
}

std::int64_t betti_n(const LengthVector& lengths, int p)
{
    require_links(lengths);
    require_degree(lengths, p);
    require_generic(lengths);
    return detail::betti_n_generic(lengths, p);
}

std::int64_t detail::betti_n_generic(const LengthVector& lengths, int p)
{
    require_links(lengths);
    require_degree(lengths, p);
    const int n = lengths.n();
    std::int64_t b = 0;
    for (int j = 0; j <= p; ++j) b += alpha(lengths, j) - alpha(lengths, n - j - 2);
    if (b < 0) throw std::logic_error("negative spatial Betti number on a generic vector");
    return b;
}

std::int64_t betti_m(const LengthVector& lengths, int p)
{
    require_links(lengths);
    require_degree(lengths, p);
    const int n = lengths.n();
    const auto low = classes_with_top(lengths, p);
    const auto high = classes_with_top(lengths, n - 3 - p);
    return static_cast<std::int64_t>(low.short_count + low.median_count + high.short_count);
}

std::int64_t total_betti_m(const LengthVector& lengths)
{
    require_links(lengths);
    require_generic(lengths);
    return detail::total_betti_m_generic(lengths);
}

std::int64_t detail::total_betti_m_generic(const LengthVector& lengths)
{
    require_links(lengths);
    // On a generic vector b_p = a_p + a_{n-3-p}, so the total is twice the
    // short subsets through the top index with at most n-2 elements.
    std::int64_t total = 0;
    for (int p = 0; p <= lengths.n() - 3; ++p) total += 2 * a_short(lengths, p);
    return total;
}

std::int64_t total_betti_m_bound(int n)
{
    if (n < 3 || n > kMaxLinks) throw DomainError("bound defined for 3 <= n <= 63");
    const BigInt b = (BigInt(1) << (n - 1)) - binomial(n - 1, (n - 1) / 2);
    return b.convert_to<std::int64_t>();
}

int tc_n(const LengthVector& lengths)
{
    if (lengths.n() < 3) throw DomainError("polygon spaces need n >= 3");
    const auto state = n_nonempty(lengths);
    if (state != Emptiness::Nonempty)
        throw EmptinessError(std::string("spatial polygon space is ") + std::string(to_string(state)));
    return 2 * lengths.n() - 5;
}

BettiProfile planar_profile(const LengthVector& lengths)
{
    require_links(lengths);
    BettiProfile profile{Space::Planar, lengths.n(), {}};
    for (int p = 0; p <= lengths.n() - 3; ++p) profile.values.push_back(betti_m(lengths, p));
    return profile;
}

BettiProfile spatial_profile(const LengthVector& lengths)
{
    require_links(lengths);
    require_generic(lengths);
    const int n = lengths.n();
    BettiProfile profile{Space::Spatial, n, std::vector<std::int64_t>(static_cast<std::size_t>(2 * (n - 3) + 1), 0)};
    // Running sum over j avoids recomputing the prefix for every degree.
    std::int64_t b = 0;
    for (int p = 0; p <= n - 3; ++p) {
        b += alpha(lengths, p) - alpha(lengths, n - p - 2);
        if (b < 0) throw std::logic_error("negative spatial Betti number on a generic vector");
        profile.values[static_cast<std::size_t>(2 * p)] = b;
    }
    return profile;
}

} // namespace polyspace
