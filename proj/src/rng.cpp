#include "polyspace/rng.hpp"

#include <cmath>

namespace polyspace {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream)
{
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed),
        static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(stream),
        static_cast<std::uint32_t>(stream >> 32),
        std::uint32_t{0x706f6c79},
    };
    return std::mt19937_64(seq);
}

} // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(make_engine(seed, stream))
{
}

double RngStream::exponential()
{
    return -std::log(uniform_open_closed());
}

} // namespace polyspace
