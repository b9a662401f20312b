#include "polyspace/stats.hpp"

#include <cmath>

namespace polyspace {

Rational IntegerMoments::exact_mean() const
{
    if (count_ == 0) return 0;
    return Rational(sum_, BigInt(count_));
}

Rational IntegerMoments::exact_variance() const
{
    if (count_ < 2) return 0;
    const BigInt c(count_);
    return Rational(c * sum_sq_ - sum_ * sum_, c * (c - 1));
}

Estimate IntegerMoments::estimate() const
{
    Estimate e;
    e.count = count_;
    e.mean = to_double(exact_mean());
    e.variance = to_double(exact_variance());
    e.std_error = count_ > 0 ? std::sqrt(e.variance / static_cast<double>(count_)) : 0.0;
    return e;
}

void FloatMoments::add(double x)
{
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
}

void FloatMoments::merge(const FloatMoments& other)
{
    if (other.count_ == 0) return;
    if (count_ == 0) {
        *this = other;
        return;
    }
    const double na = static_cast<double>(count_);
    const double nb = static_cast<double>(other.count_);
    const double total = na + nb;
    const double delta = other.mean_ - mean_;
    mean_ += delta * nb / total;
    m2_ += other.m2_ + delta * delta * na * nb / total;
    count_ += other.count_;
}

Estimate FloatMoments::estimate() const
{
    Estimate e;
    e.count = count_;
    e.mean = mean_;
    e.variance = variance();
    e.std_error = count_ > 0 ? std::sqrt(e.variance / static_cast<double>(count_)) : 0.0;
    return e;
}

} // namespace polyspace
