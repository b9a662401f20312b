#pragma once

#include "polyspace/rational.hpp"

#include <cstdint>
#include <optional>

namespace polyspace {

/// Monte Carlo summary. `std_error` is sqrt(variance / count).
struct Estimate
{
    double mean = 0.0;
    double variance = 0.0;
    double std_error = 0.0;
    std::int64_t count = 0;
    /// Draws discarded and redrawn (wall hits, zero coordinates).
    std::int64_t rejected = 0;
    std::optional<double> theory;
};

/// Exact running sums for integer-valued samples. Merging is plain integer
/// addition, so pooled results do not depend on merge order.
class IntegerMoments
{
public:
    void add(const BigInt& value)
    {
        ++count_;
        sum_ += value;
        sum_sq_ += value * value;
    }
    void add(std::int64_t value) { add(BigInt(value)); }

    void merge(const IntegerMoments& other)
    {
        count_ += other.count_;
        sum_ += other.sum_;
        sum_sq_ += other.sum_sq_;
    }

    std::int64_t count() const noexcept { return count_; }
    const BigInt& sum() const noexcept { return sum_; }
    const BigInt& sum_sq() const noexcept { return sum_sq_; }

    Rational exact_mean() const;
    /// Unbiased sample variance, 0 when count < 2.
    Rational exact_variance() const;

    Estimate estimate() const;

private:
    std::int64_t count_ = 0;
    BigInt sum_ = 0;
    BigInt sum_sq_ = 0;
};

/// (count, mean, M2) triple with Welford updates and Chan's pairwise merge.
/// Results are reproducible when merges happen in a fixed order.
class FloatMoments
{
public:
    void add(double x);
    void merge(const FloatMoments& other);

    std::int64_t count() const noexcept { return count_; }
    double mean() const noexcept { return mean_; }
    double variance() const noexcept { return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0; }

    Estimate estimate() const;

private:
    std::int64_t count_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

} // namespace polyspace
