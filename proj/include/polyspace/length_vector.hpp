#pragma once

#include "polyspace/rational.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace polyspace {

/// Integer weights proportional to the coordinates of a length vector.
/// Subset comparisons reduce to 2 * sum(J) versus `total`.
template <class T>
struct WeightView
{
    std::span<const T> w;
    T total;
};

/// Bar lengths l_1, ..., l_n of a closed linkage, all strictly positive.
///
/// Coordinates are exact rationals. Every predicate in the library is
/// scale invariant and works on a common-denominator integer copy of the
/// coordinates; when the integer total fits in 62 bits that copy is held in
/// machine words, which is the common case for sampled vectors.
class LengthVector
{
public:
    /// Throws DomainError on an empty list, more than 63 entries, or a
    /// non-positive coordinate.
    explicit LengthVector(std::vector<Rational> coords);

    /// Normalized vector with coordinates w_i / sum(w). Weights must be positive.
    static LengthVector from_weights(std::span<const std::int64_t> weights);

    /// Comma-separated list of rationals or decimals, e.g. "1,2,3/2,0.25".
    static LengthVector parse(std::string_view csv);

    int n() const noexcept { return static_cast<int>(coords_.size()); }
    const std::vector<Rational>& coords() const noexcept { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }

    /// True iff the coordinates sum to exactly 1.
    bool normalized() const noexcept { return normalized_; }
    Rational sum() const;

    /// |l|, the largest coordinate.
    const Rational& max_coord() const;
    /// Smallest zero-based index attaining the maximum.
    int argmax() const noexcept { return argmax_; }

    /// Coordinates divided by their sum, rounded to double.
    std::vector<double> to_doubles() const;

    /// result[i] = this[perm[i]], perm zero-based.
    LengthVector permuted(std::span<const int> perm) const;

    /// Ascending order; ties keep their original relative order.
    LengthVector sorted_ascending() const;

    bool has_small_weights() const noexcept { return std::holds_alternative<Small>(weights_); }

    /// Calls fn(WeightView<std::int64_t>) or fn(WeightView<BigInt>).
    template <class Fn>
    decltype(auto) visit_weights(Fn&& fn) const
    {
        if (const auto* s = std::get_if<Small>(&weights_))
            return fn(WeightView<std::int64_t>{s->w, s->total});
        const auto& b = std::get<Big>(weights_);
        return fn(WeightView<BigInt>{b.w, b.total});
    }

    friend bool operator==(const LengthVector& a, const LengthVector& b) { return a.coords_ == b.coords_; }

private:
    struct Small
    {
        std::vector<std::int64_t> w;
        std::int64_t total;
    };
    struct Big
    {
        std::vector<BigInt> w;
        BigInt total;
    };

    LengthVector() = default;
    void finish();

    std::vector<Rational> coords_;
    bool normalized_ = false;
    int argmax_ = 0;
    std::variant<Small, Big> weights_;
};

/// Strings of exact rationals, as used in JSON files.
std::vector<std::string> to_strings(const LengthVector& lengths);
std::string to_csv(const LengthVector& lengths);

} // namespace polyspace
