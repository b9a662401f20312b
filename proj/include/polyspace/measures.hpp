#pragma once

#include "polyspace/length_vector.hpp"
#include "polyspace/parallel.hpp"
#include "polyspace/rng.hpp"
#include "polyspace/stats.hpp"

#include <cstdint>
#include <string_view>

namespace polyspace {

enum class MeasureKind {
    /// Normalized Lebesgue measure on the open simplex.
    UniformSimplex,
    /// Push-forward of the uniform measure on the unit cube under l -> l / sum(l).
    CubeNormalized,
};

std::string_view to_string(MeasureKind kind) noexcept;
/// Accepts "uniform" and "cube".
MeasureKind parse_measure(std::string_view text);

struct MeasureSpec
{
    MeasureKind kind = MeasureKind::UniformSimplex;
    int n = 3;
};

struct Draw
{
    LengthVector lengths;
    /// Draws thrown away because a coordinate snapped to zero.
    std::uint32_t degenerate_resamples = 0;
};

/// One normalized length vector.
///
/// UniformSimplex normalizes n unit exponentials and snaps each coordinate to
/// the nearest multiple of 2^-53; the snapped integers become the exact
/// weights, renormalized in rational arithmetic. CubeNormalized draws n
/// integers in [1, 2^53], i.e. uniforms on (0, 1] at 53-bit resolution, and
/// normalizes them exactly.
Draw sample(const MeasureSpec& spec, RngStream& rng);

/// k_n |l|^-n, the cube-measure density with respect to Lebesgue measure.
double density_cube(const LengthVector& lengths, double k_n);

/// Monte Carlo estimate of k_n = 1 / E_uniform[|l|^-n]. The standard error
/// comes from the delta method. Exactly 1 for n = 1.
Estimate estimate_kn(int n, const ShardLayout& layout, std::uint64_t seed);

} // namespace polyspace
