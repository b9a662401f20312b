#include "polyspace/chambers.hpp"

#include "polyspace/core.hpp"
#include "polyspace/detail/kernels.hpp"
#include "polyspace/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace polyspace {

namespace {

int top_index(std::uint64_t x)
{
    return 63 - std::countl_zero(x);
}

/// Sets reachable from J by one step up the dominance order, keeping the
/// top element n in place: add a missing index, or raise an index by one
/// into a free slot.
template <class Fn>
void for_each_up_move(std::uint64_t subset, int n, Fn&& fn)
{
    for (int e = 0; e < n; ++e) {
        const std::uint64_t bit = std::uint64_t{1} << e;
        if (!(subset & bit)) {
            fn(subset | bit);
        } else if (e + 1 < n && !(subset & (bit << 1))) {
            fn((subset & ~bit) | (bit << 1));
        }
    }
}

/// Inverse moves: drop an index other than n, or lower one into a free slot.
template <class Fn>
void for_each_down_move(std::uint64_t subset, int n, Fn&& fn)
{
    for (int e = 0; e < n - 1; ++e) {
        const std::uint64_t bit = std::uint64_t{1} << e;
        if (!(subset & bit)) continue;
        fn(subset & ~bit);
        if (e > 0 && !(subset & (bit >> 1))) fn((subset & ~bit) | (bit >> 1));
    }
}

void sort_masks(std::vector<SubsetMask>& masks)
{
    std::sort(masks.begin(), masks.end(), [](const SubsetMask& a, const SubsetMask& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.bits() < b.bits();
    });
}

ChamberCode code_from_shorts(int n, const std::vector<std::uint64_t>& shorts_with_top, const std::vector<bool>& is_short_by_mask)
{
    ChamberCode code;
    code.n = n;
    const std::uint64_t top = std::uint64_t{1} << (n - 1);
    for (auto j : shorts_with_top) {
        bool maximal = true;
        for_each_up_move(j, n, [&](std::uint64_t up) {
            if ((up & top) && is_short_by_mask[static_cast<std::size_t>(up)]) maximal = false;
        });
        if (maximal) code.maximal_shorts.emplace_back(j, n);
    }
    sort_masks(code.maximal_shorts);
    return code;
}

std::vector<Rational> wall_row(std::uint64_t subset, int n, bool short_side)
{
    std::vector<Rational> row(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const bool in = (subset >> i) & 1u;
        row[static_cast<std::size_t>(i)] = (in == short_side) ? 1 : -1;
    }
    return row;
}

int side_at(const std::vector<Rational>& point, std::uint64_t subset)
{
    Rational s = 0;
    for (std::size_t i = 0; i < point.size(); ++i) {
        if ((subset >> i) & 1u)
            s += point[i];
        else
            s -= point[i];
    }
    return s < 0 ? -1 : (s > 0 ? 1 : 0);
}

enum class Mark : unsigned char { Unassigned, Short, Long };

class Enumerator
{
public:
    explicit Enumerator(int n) : n_(n), top_(std::uint64_t{1} << (n - 1))
    {
        for (std::uint64_t rest = 0; rest < (std::uint64_t{1} << (n - 1)); ++rest) order_.push_back(rest | top_);
        // Size first, then index sum: a linear extension of dominance.
        auto index_sum = [](std::uint64_t m) {
            int s = 0;
            for (; m; m &= m - 1) s += std::countr_zero(m);
            return s;
        };
        std::sort(order_.begin(), order_.end(), [&](std::uint64_t a, std::uint64_t b) {
            const int pa = std::popcount(a), pb = std::popcount(b);
            if (pa != pb) return pa < pb;
            const int sa = index_sum(a), sb = index_sum(b);
            if (sa != sb) return sa < sb;
            return a < b;
        });
        marks_.assign(std::size_t{1} << n, Mark::Unassigned);
        for (int i = 0; i + 1 < n; ++i) {
            std::vector<Rational> row(static_cast<std::size_t>(n), Rational(0));
            row[static_cast<std::size_t>(i)] = 1;
            row[static_cast<std::size_t>(i + 1)] = -1;
            ordering_.push_back(std::move(row));
        }
    }

    std::vector<ChamberOrbit> run(EnumerationStats* stats)
    {
        // The barycenter lies in the closed sorted cone and on no strict row yet.
        std::vector<Rational> start(static_cast<std::size_t>(n_), Rational(1, n_));
        descend(0, start);
        std::sort(results_.begin(), results_.end(), [](const ChamberOrbit& a, const ChamberOrbit& b) { return a.code < b.code; });
        if (stats) *stats = stats_;
        return std::move(results_);
    }

private:
    void descend(std::size_t depth, const std::vector<Rational>& witness)
    {
        ++stats_.nodes;
        if (depth == order_.size()) {
            record(witness);
            return;
        }
        const std::uint64_t j = order_[depth];

        bool forced_long = false;
        for_each_down_move(j, n_, [&](std::uint64_t down) {
            if (marks_[static_cast<std::size_t>(down)] == Mark::Long) forced_long = true;
        });
        if (forced_long) {
            ++stats_.forced;
            assign(j, Mark::Long);
            descend(depth + 1, witness);
            assign(j, Mark::Unassigned);
            return;
        }

        const int side = side_at(witness, j);
        for (Mark choice : {Mark::Short, Mark::Long}) {
            const bool witness_agrees = (choice == Mark::Short && side < 0) || (choice == Mark::Long && side > 0);
            assign(j, choice);
            if (witness_agrees) {
                descend(depth + 1, witness);
            } else if (auto next = feasible_point()) {
                descend(depth + 1, *next);
            }
            assign(j, Mark::Unassigned);
        }
    }

    void assign(std::uint64_t j, Mark m) { marks_[static_cast<std::size_t>(j)] = m; }

    /// LP over the current frontier: assigned shorts with no assigned short
    /// directly above them, assigned longs with no assigned long directly
    /// below. Ordering rows make the rest redundant.
    std::optional<std::vector<Rational>> feasible_point()
    {
        ++stats_.lp_calls;
        LinearConstraintSystem system;
        system.n = n_;
        for (const auto& row : ordering_) system.add_non_strict(row);
        for (auto j : order_) {
            const Mark m = marks_[static_cast<std::size_t>(j)];
            if (m == Mark::Unassigned) continue;
            bool implied = false;
            if (m == Mark::Short) {
                for_each_up_move(j, n_, [&](std::uint64_t up) {
                    if ((up & top_) && marks_[static_cast<std::size_t>(up)] == Mark::Short) implied = true;
                });
            } else {
                for_each_down_move(j, n_, [&](std::uint64_t down) {
                    if (marks_[static_cast<std::size_t>(down)] == Mark::Long) implied = true;
                });
            }
            if (!implied) system.add_strict(wall_row(j, n_, m == Mark::Short));
        }
        auto result = solve_strict_feasibility(system);
        if (!result.feasible) return std::nullopt;
        return std::move(result.witness);
    }

    void record(const std::vector<Rational>& witness)
    {
        std::vector<std::uint64_t> shorts;
        std::vector<bool> is_short(std::size_t{1} << n_, false);
        for (auto j : order_)
            if (marks_[static_cast<std::size_t>(j)] == Mark::Short) {
                shorts.push_back(j);
                is_short[static_cast<std::size_t>(j)] = true;
            }
        ChamberOrbit orbit{code_from_shorts(n_, shorts, is_short), LengthVector(witness), {}, {}};
        orbit.planar = planar_profile(orbit.witness);
        orbit.spatial = spatial_profile(orbit.witness);
        results_.push_back(std::move(orbit));
    }

    int n_;
    std::uint64_t top_;
    std::vector<std::uint64_t> order_;
    std::vector<Mark> marks_;
    std::vector<std::vector<Rational>> ordering_;
    std::vector<ChamberOrbit> results_;
    EnumerationStats stats_;
};

} // namespace

bool dominated_by(std::uint64_t lower, std::uint64_t upper)
{
    if (std::popcount(lower) > std::popcount(upper)) return false;
    while (lower) {
        const int a = top_index(lower);
        const int b = top_index(upper);
        if (a > b) return false;
        lower &= ~(std::uint64_t{1} << a);
        upper &= ~(std::uint64_t{1} << b);
    }
    return true;
}

bool ChamberCode::is_short(std::uint64_t subset_with_top) const
{
    return std::any_of(maximal_shorts.begin(), maximal_shorts.end(),
                       [&](const SubsetMask& m) { return dominated_by(subset_with_top, m.bits()); });
}

std::string ChamberCode::str() const
{
    std::string s = "{";
    for (std::size_t i = 0; i < maximal_shorts.size(); ++i) {
        if (i) s += ",";
        s += maximal_shorts[i].str();
    }
    return s + "}";
}

std::strong_ordering operator<=>(const ChamberCode& a, const ChamberCode& b)
{
    if (auto c = a.n <=> b.n; c != 0) return c;
    const std::size_t common = std::min(a.maximal_shorts.size(), b.maximal_shorts.size());
    for (std::size_t i = 0; i < common; ++i) {
        const auto& x = a.maximal_shorts[i];
        const auto& y = b.maximal_shorts[i];
        if (auto c = x.size() <=> y.size(); c != 0) return c;
        if (auto c = x.bits() <=> y.bits(); c != 0) return c;
    }
    return a.maximal_shorts.size() <=> b.maximal_shorts.size();
}

ChamberCode chamber_code(const LengthVector& lengths)
{
    const int n = lengths.n();
    if (n < 3) throw DomainError("chamber codes need n >= 3");
    if (n > kChamberCodeCap) throw CapacityError("chamber codes are limited to n <= " + std::to_string(kChamberCodeCap));
    if (auto median = find_median_subset(lengths)) throw GenericityError("length vector lies on the wall of " + median->str());

    const LengthVector sorted = lengths.sorted_ascending();
    const std::uint64_t top = std::uint64_t{1} << (n - 1);
    std::vector<std::uint64_t> shorts;
    std::vector<bool> is_short(std::size_t{1} << n, false);
    sorted.visit_weights([&](const auto& v) {
        for (std::uint64_t rest = 0; rest < top; ++rest) {
            const std::uint64_t j = rest | top;
            if (detail::compare_to_half(v, detail::subset_weight(v, j)) < 0) {
                shorts.push_back(j);
                is_short[static_cast<std::size_t>(j)] = true;
            }
        }
    });
    return code_from_shorts(n, shorts, is_short);
}

bool same_chamber_orbit(const LengthVector& a, const LengthVector& b)
{
    if (a.n() != b.n()) throw DomainError("chamber comparison needs equal n");
    return chamber_code(a) == chamber_code(b);
}

std::vector<ChamberOrbit> enumerate_chamber_orbits(int n, EnumerationStats* stats)
{
    if (n < 3 || n > 9) throw CapacityError("chamber enumeration supports 3 <= n <= 9, got " + std::to_string(n));
    return Enumerator(n).run(stats);
}

} // namespace polyspace
