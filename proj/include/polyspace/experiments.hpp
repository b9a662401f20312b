#pragma once

#include "polyspace/measures.hpp"
#include "polyspace/parallel.hpp"
#include "polyspace/stats.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polyspace {

enum class InvariantKind {
    BettiM,          ///< b_p of the planar space
    BettiN,          ///< b_{2p} of the spatial space
    BettiMPow,       ///< b_p(M)^k
    BettiNPow,       ///< b_{2p}(N)^k
    TotalBettiM,     ///< sum of planar Betti numbers
    GammaIndicator,  ///< 1 if every p-subset is short
    NormalIndicator, ///< 1 if the long 3-subsets share an index
    LambdaIndicator, ///< 1 if the longest bar is at least 1/(2p)
};

std::string_view to_string(InvariantKind kind) noexcept;
/// bettiM, bettiN, bettiM_pow, bettiN_pow, totalBettiM, gamma, normal, lambda
InvariantKind parse_invariant(std::string_view text);

struct InvariantSelector
{
    InvariantKind kind = InvariantKind::BettiM;
    int p = 0;
    int k = 1;
};

struct ExperimentConfig
{
    MeasureKind measure = MeasureKind::UniformSimplex;
    InvariantSelector invariant;
    int n = 3;
    std::int64_t samples = 100000;
    std::uint64_t seed = 42;
    int shards = 1;
    int threads = 1;
    std::int64_t block_size = ShardLayout::kDefaultBlockSize;

    ShardLayout layout() const { return {samples, block_size, shards, threads}; }
};

/// A bound that accompanies an estimate, e.g. the Gamma_p volume lower bound.
struct NamedBound
{
    std::string name;
    Rational value;
};

struct ExperimentResult
{
    ExperimentConfig config;
    Estimate estimate;
    /// Exact sample mean; every per-sample value is an integer.
    Rational exact_mean;
    std::vector<NamedBound> bounds;
    /// Per-sample value counts; filled for TotalBettiM only.
    std::map<std::int64_t, std::int64_t> histogram;
};

/// Throws DomainError when the selector is undefined for n, CapacityError
/// beyond the enumeration budget.
void validate(const ExperimentConfig& config);

/// Limiting value of the average, if the selector has one: sum_{i<=p} C(n-1,i)
/// for BettiN, C(n-1,p) for BettiM, and k-th powers of those for the moments.
std::optional<Rational> theory_value(const InvariantSelector& selector, int n);

/// The integer value a selector assigns to one generic length vector.
BigInt evaluate_invariant(const InvariantSelector& selector, const LengthVector& lengths);

/// Monte Carlo estimate of the selector's average under the configured
/// measure. Draws on a wall are redrawn from the same stream and counted in
/// `rejected`. The result depends only on (seed, samples, block_size), not
/// on the shard or thread count.
ExperimentResult run_expectation(const ExperimentConfig& config);

struct ScanRow
{
    int n = 0;
    Estimate estimate;
    std::optional<double> theory;
    /// |estimate - theory|, or NaN without a theory value.
    double abs_dev = 0.0;
};

/// run_expectation for each n in [n_from, n_to], otherwise using `config`.
std::vector<ScanRow> convergence_scan(const ExperimentConfig& config, int n_from, int n_to);

/// 3-point moving averages of `values` never increase by more than `slack`.
bool smoothed_nonincreasing(std::span<const double> values, double slack = 0.0);

/// Average total planar Betti number with its upper bound and a histogram.
/// Capacity-limited to n <= 24.
ExperimentResult total_betti_avg(int n, MeasureKind measure, std::int64_t samples, std::uint64_t seed, int shards = 1, int threads = 1);

inline constexpr int kTotalBettiCap = 24;

} // namespace polyspace
