#include "polyspace/core.hpp"

#include "polyspace/detail/kernels.hpp"
#include "polyspace/errors.hpp"

#include <algorithm>

namespace polyspace {

std::string_view to_string(SubsetClass c) noexcept
{
    switch (c) {
    case SubsetClass::Short: return "short";
    case SubsetClass::Long: return "long";
    case SubsetClass::Median: return "median";
    }
    return "?";
}

std::string_view to_string(Emptiness e) noexcept
{
    switch (e) {
    case Emptiness::Nonempty: return "nonempty";
    case Emptiness::Empty: return "empty";
    case Emptiness::Degenerate: return "degenerate";
    }
    return "?";
}

LengthVector normalize(const LengthVector& lengths)
{
    if (lengths.normalized()) return lengths;
    const Rational s = lengths.sum();
    std::vector<Rational> coords;
    coords.reserve(lengths.coords().size());
    for (const auto& c : lengths.coords()) coords.push_back(c / s);
    return LengthVector(std::move(coords));
}

SubsetClass classify_subset(const LengthVector& lengths, const SubsetMask& subset)
{
    if (subset.n() != lengths.n())
        throw DomainError("subset over " + std::to_string(subset.n()) + " indices used with n = " + std::to_string(lengths.n()));
    const int cmp = lengths.visit_weights([&](const auto& v) { return detail::compare_to_half(v, detail::subset_weight(v, subset.bits())); });
    if (cmp < 0) return SubsetClass::Short;
    if (cmp > 0) return SubsetClass::Long;
    return SubsetClass::Median;
}

std::optional<SubsetMask> find_median_subset(const LengthVector& lengths, int cap)
{
    if (lengths.n() > cap)
        throw CapacityError("genericity scan limited to n <= " + std::to_string(cap) + ", got n = " + std::to_string(lengths.n()));
    auto hit = lengths.visit_weights([](const auto& v) { return detail::find_half_sum(v); });
    if (!hit) return std::nullopt;
    return SubsetMask(*hit, lengths.n());
}

bool is_generic(const LengthVector& lengths, int cap)
{
    return !find_median_subset(lengths, cap).has_value();
}

bool in_gamma(const LengthVector& lengths, int p)
{
    if (p < 0 || p > lengths.n()) throw DomainError("p must lie in 0..n, got " + std::to_string(p));
    if (p == 0) return true; // the empty set is always short
    return lengths.visit_weights([p](const auto& v) {
        using T = typename std::decay_t<decltype(v.w)>::value_type;
        std::vector<T> w(v.w.begin(), v.w.end());
        std::partial_sort(w.begin(), w.begin() + p, w.end(), std::greater<>());
        T top = 0;
        for (int i = 0; i < p; ++i) top += w[static_cast<std::size_t>(i)];
        return top * 2 < v.total;
    });
}

bool in_lambda(const LengthVector& lengths, int p)
{
    if (p < 1) throw DomainError("Lambda_p needs p >= 1, got " + std::to_string(p));
    // max / total >= 1 / (2p)  <=>  2p * max >= total
    return lengths.visit_weights([p](const auto& v) {
        auto top = *std::max_element(v.w.begin(), v.w.end());
        return top * (2 * p) >= v.total;
    });
}

Emptiness n_nonempty(const LengthVector& lengths)
{
    // Only the largest bar can be long or median.
    const int cmp = lengths.visit_weights([&](const auto& v) { return detail::compare_to_half(v, v.w[static_cast<std::size_t>(lengths.argmax())]); });
    if (cmp > 0) return Emptiness::Empty;
    if (cmp == 0) return Emptiness::Degenerate;
    return Emptiness::Nonempty;
}

bool is_normal(const LengthVector& lengths)
{
    const int n = lengths.n();
    if (n < 3) throw DomainError("normality needs n >= 3");
    return lengths.visit_weights([n](const auto& v) {
        std::uint64_t common = low_bits(n);
        for_each_combination(n, 3, [&](std::uint64_t mask) {
            if (detail::compare_to_half(v, detail::subset_weight(v, mask)) > 0) common &= mask;
        });
        return common != 0;
    });
}

} // namespace polyspace
