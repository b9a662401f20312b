#include "polyspace/measures.hpp"

#include "polyspace/errors.hpp"
#include "polyspace/subset.hpp"

#include <cmath>
#include <vector>

namespace polyspace {

std::string_view to_string(MeasureKind kind) noexcept
{
    return kind == MeasureKind::UniformSimplex ? "uniform" : "cube";
}

MeasureKind parse_measure(std::string_view text)
{
    if (text == "uniform") return MeasureKind::UniformSimplex;
    if (text == "cube") return MeasureKind::CubeNormalized;
    throw DomainError("unknown measure '" + std::string(text) + "' (expected uniform or cube)");
}

Draw sample(const MeasureSpec& spec, RngStream& rng)
{
    if (spec.n < 1 || spec.n > kMaxLinks) throw DomainError("sampling needs 1 <= n <= 63");
    const auto n = static_cast<std::size_t>(spec.n);
    std::vector<std::int64_t> weights(n);
    std::uint32_t resamples = 0;

    if (spec.kind == MeasureKind::CubeNormalized) {
        for (auto& w : weights) w = static_cast<std::int64_t>(rng.next_dyadic53());
        return {LengthVector::from_weights(weights), resamples};
    }

    std::vector<double> e(n);
    for (;;) {
        double total = 0.0;
        for (auto& x : e) {
            x = rng.exponential();
            total += x;
        }
        bool degenerate = false;
        for (std::size_t i = 0; i < n; ++i) {
            weights[i] = std::llround(e[i] / total * 0x1.0p53);
            degenerate |= weights[i] <= 0;
        }
        if (!degenerate) break;
        ++resamples;
    }
    return {LengthVector::from_weights(weights), resamples};
}

double density_cube(const LengthVector& lengths, double k_n)
{
    const double top = to_double(lengths.max_coord() / lengths.sum());
    return k_n * std::pow(top, -static_cast<double>(lengths.n()));
}

Estimate estimate_kn(int n, const ShardLayout& layout, std::uint64_t seed)
{
    if (n < 1) throw DomainError("estimate_kn needs n >= 1");
    if (layout.samples < 1) throw DomainError("estimate_kn needs at least one sample");
    const MeasureSpec spec{MeasureKind::UniformSimplex, n};

    struct Partial
    {
        FloatMoments moments;
        std::int64_t rejected = 0;
    };
    auto partials = run_blocks<Partial>(layout, [&](std::int64_t block, std::int64_t, std::int64_t count) {
        RngStream rng(seed, static_cast<std::uint64_t>(block));
        Partial part;
        for (std::int64_t s = 0; s < count; ++s) {
            auto draw = sample(spec, rng);
            part.rejected += draw.degenerate_resamples;
            const double top = to_double(draw.lengths.max_coord() / draw.lengths.sum());
            part.moments.add(std::pow(top, -static_cast<double>(n)));
        }
        return part;
    });

    FloatMoments pooled;
    std::int64_t rejected = 0;
    for (const auto& p : partials) {
        pooled.merge(p.moments);
        rejected += p.rejected;
    }

    const Estimate inverse = pooled.estimate();
    Estimate e;
    e.count = inverse.count;
    e.rejected = rejected;
    e.mean = 1.0 / inverse.mean;
    const double scale = 1.0 / (inverse.mean * inverse.mean);
    e.std_error = inverse.std_error * scale;
    e.variance = inverse.variance * scale * scale;
    return e;
}

} // namespace polyspace
