#include "polyspace/experiments.hpp"

#include "polyspace/betti.hpp"
#include "polyspace/core.hpp"
#include "polyspace/errors.hpp"
#include "polyspace/volume.hpp"

#include <cmath>
#include <limits>

namespace polyspace {

namespace {

bool needs_degree(InvariantKind kind)
{
    switch (kind) {
    case InvariantKind::BettiM:
    case InvariantKind::BettiN:
    case InvariantKind::BettiMPow:
    case InvariantKind::BettiNPow: return true;
    default: return false;
    }
}

bool needs_power(InvariantKind kind)
{
    return kind == InvariantKind::BettiMPow || kind == InvariantKind::BettiNPow;
}

std::vector<NamedBound> reference_bounds(const InvariantSelector& selector, int n)
{
    switch (selector.kind) {
    case InvariantKind::TotalBettiM: return {{"upper_bound", Rational(total_betti_m_bound(n))}};
    case InvariantKind::GammaIndicator: {
        if (selector.p < 1) return {};
        auto b = gamma_lower_bound(n, selector.p);
        return {{"lower_bound", b.headline}, {"union_lower_bound", b.union_bound}};
    }
    case InvariantKind::NormalIndicator: {
        // The non-normal set is contained in the complement of Gamma_3.
        Rational r = 1 - Rational(24) * pow(Rational(n), 6) * pow2(-n);
        return {{"lower_bound", r < 0 ? Rational(0) : r}, {"gamma3_lower_bound", gamma_lower_bound(n, 3).headline}};
    }
    case InvariantKind::LambdaIndicator: return {{"upper_bound", lambda_bound(n, selector.p)}};
    default: return {};
    }
}

} // namespace

std::string_view to_string(InvariantKind kind) noexcept
{
    switch (kind) {
    case InvariantKind::BettiM: return "bettiM";
    case InvariantKind::BettiN: return "bettiN";
    case InvariantKind::BettiMPow: return "bettiM_pow";
    case InvariantKind::BettiNPow: return "bettiN_pow";
    case InvariantKind::TotalBettiM: return "totalBettiM";
    case InvariantKind::GammaIndicator: return "gamma";
    case InvariantKind::NormalIndicator: return "normal";
    case InvariantKind::LambdaIndicator: return "lambda";
    }
    return "?";
}

InvariantKind parse_invariant(std::string_view text)
{
    for (auto kind : {InvariantKind::BettiM, InvariantKind::BettiN, InvariantKind::BettiMPow, InvariantKind::BettiNPow,
                      InvariantKind::TotalBettiM, InvariantKind::GammaIndicator, InvariantKind::NormalIndicator,
                      InvariantKind::LambdaIndicator})
        if (text == to_string(kind)) return kind;
    throw DomainError("unknown invariant '" + std::string(text) + "'");
}

void validate(const ExperimentConfig& config)
{
    const int n = config.n;
    const auto& inv = config.invariant;
    if (n < 3) throw DomainError("experiments need n >= 3, got " + std::to_string(n));
    if (n > kDefaultEnumerationCap) throw CapacityError("experiments are limited to n <= " + std::to_string(kDefaultEnumerationCap));
    if (config.samples < 1) throw DomainError("samples must be >= 1");
    if (config.shards < 1) throw DomainError("shards must be >= 1");
    if (config.block_size < 1) throw DomainError("block size must be >= 1");
    if (needs_degree(inv.kind) && (inv.p < 0 || inv.p > n - 3))
        throw DomainError(std::string(to_string(inv.kind)) + " needs 0 <= p <= n-3 = " + std::to_string(n - 3) + ", got p = " + std::to_string(inv.p));
    if (needs_power(inv.kind) && inv.k < 1) throw DomainError("moment order k must be >= 1");
    if (inv.kind == InvariantKind::GammaIndicator && (inv.p < 0 || inv.p > n)) throw DomainError("gamma needs 0 <= p <= n");
    if (inv.kind == InvariantKind::LambdaIndicator && inv.p < 1) throw DomainError("lambda needs p >= 1");
    if (inv.kind == InvariantKind::TotalBettiM && n > kTotalBettiCap)
        throw CapacityError("total Betti averages are limited to n <= " + std::to_string(kTotalBettiCap));
}

std::optional<Rational> theory_value(const InvariantSelector& selector, int n)
{
    BigInt base;
    switch (selector.kind) {
    case InvariantKind::BettiM:
    case InvariantKind::BettiMPow: base = binomial(n - 1, selector.p); break;
    case InvariantKind::BettiN:
    case InvariantKind::BettiNPow:
        base = 0;
        for (int i = 0; i <= selector.p; ++i) base += binomial(n - 1, i);
        break;
    default: return std::nullopt;
    }
    const auto k = needs_power(selector.kind) ? static_cast<std::uint32_t>(selector.k) : 1u;
    return pow(Rational(base), k);
}

BigInt evaluate_invariant(const InvariantSelector& selector, const LengthVector& lengths)
{
    switch (selector.kind) {
    case InvariantKind::BettiM: return betti_m(lengths, selector.p);
    case InvariantKind::BettiN: return detail::betti_n_generic(lengths, selector.p);
    case InvariantKind::BettiMPow: return boost::multiprecision::pow(BigInt(betti_m(lengths, selector.p)), static_cast<unsigned>(selector.k));
    case InvariantKind::BettiNPow:
        return boost::multiprecision::pow(BigInt(detail::betti_n_generic(lengths, selector.p)), static_cast<unsigned>(selector.k));
    case InvariantKind::TotalBettiM: return detail::total_betti_m_generic(lengths);
    case InvariantKind::GammaIndicator: return in_gamma(lengths, selector.p) ? 1 : 0;
    case InvariantKind::NormalIndicator: return is_normal(lengths) ? 1 : 0;
    case InvariantKind::LambdaIndicator: return in_lambda(lengths, selector.p) ? 1 : 0;
    }
    throw std::logic_error("unhandled invariant");
}

ExperimentResult run_expectation(const ExperimentConfig& config)
{
    validate(config);
    const MeasureSpec spec{config.measure, config.n};
    const bool keep_histogram = config.invariant.kind == InvariantKind::TotalBettiM;

    struct Partial
    {
        IntegerMoments moments;
        std::int64_t rejected = 0;
        std::map<std::int64_t, std::int64_t> histogram;
    };

    auto partials = run_blocks<Partial>(config.layout(), [&](std::int64_t block, std::int64_t, std::int64_t count) {
        RngStream rng(config.seed, static_cast<std::uint64_t>(block));
        Partial part;
        for (std::int64_t s = 0; s < count; ++s) {
            Draw draw = sample(spec, rng);
            part.rejected += draw.degenerate_resamples;
            while (!is_generic(draw.lengths)) {
                ++part.rejected;
                draw = sample(spec, rng);
                part.rejected += draw.degenerate_resamples;
            }
            const BigInt value = evaluate_invariant(config.invariant, draw.lengths);
            part.moments.add(value);
            if (keep_histogram) ++part.histogram[value.convert_to<std::int64_t>()];
        }
        return part;
    });

    ExperimentResult result;
    result.config = config;
    IntegerMoments pooled;
    std::int64_t rejected = 0;
    for (const auto& p : partials) {
        pooled.merge(p.moments);
        rejected += p.rejected;
        for (const auto& [v, c] : p.histogram) result.histogram[v] += c;
    }
    result.estimate = pooled.estimate();
    result.estimate.rejected = rejected;
    result.exact_mean = pooled.exact_mean();
    if (auto t = theory_value(config.invariant, config.n)) result.estimate.theory = to_double(*t);
    result.bounds = reference_bounds(config.invariant, config.n);
    return result;
}

std::vector<ScanRow> convergence_scan(const ExperimentConfig& config, int n_from, int n_to)
{
    if (n_from > n_to) throw DomainError("scan range is empty");
    std::vector<ScanRow> rows;
    for (int n = n_from; n <= n_to; ++n) {
        ExperimentConfig c = config;
        c.n = n;
        const auto r = run_expectation(c);
        ScanRow row;
        row.n = n;
        row.estimate = r.estimate;
        row.theory = r.estimate.theory;
        row.abs_dev = row.theory ? std::abs(r.estimate.mean - *row.theory) : std::numeric_limits<double>::quiet_NaN();
        rows.push_back(row);
    }
    return rows;
}

bool smoothed_nonincreasing(std::span<const double> values, double slack)
{
    if (values.size() < 4) return true;
    std::vector<double> smooth;
    for (std::size_t i = 0; i + 2 < values.size(); ++i) smooth.push_back((values[i] + values[i + 1] + values[i + 2]) / 3.0);
    for (std::size_t i = 1; i < smooth.size(); ++i)
        if (smooth[i] > smooth[i - 1] + slack) return false;
    return true;
}

ExperimentResult total_betti_avg(int n, MeasureKind measure, std::int64_t samples, std::uint64_t seed, int shards, int threads)
{
    if (n > kTotalBettiCap) throw CapacityError("total Betti averages are limited to n <= " + std::to_string(kTotalBettiCap));
    ExperimentConfig config;
    config.measure = measure;
    config.invariant = {InvariantKind::TotalBettiM, 0, 1};
    config.n = n;
    config.samples = samples;
    config.seed = seed;
    config.shards = shards;
    config.threads = threads;
    return run_expectation(config);
}

} // namespace polyspace
