#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace polyspace {

/// Deterministic random substream keyed by (seed, stream).
///
/// The engine is std::mt19937_64 seeded through std::seed_seq; both are
/// fully specified by the standard, so a given key yields the same bits on
/// every conforming platform. Doubles are built from the top 53 bits by
/// hand instead of through std::*_distribution, whose output is not portable.
class RngStream
{
public:
    static constexpr std::string_view kAlgorithm = "mt19937_64+seed_seq(seed_lo,seed_hi,stream_lo,stream_hi,0x706f6c79)";

    RngStream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream() const noexcept { return stream_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Integer in [1, 2^53].
    std::uint64_t next_dyadic53() { return (engine_() >> 11) + 1; }

    /// Uniform on (0, 1], a multiple of 2^-53.
    double uniform_open_closed() { return static_cast<double>(next_dyadic53()) * 0x1.0p-53; }

    /// Unit-rate exponential variate, -log(U) with U on (0, 1].
    double exponential();

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
};

} // namespace polyspace
