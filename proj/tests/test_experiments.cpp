#include "oracles.hpp"

#include "polyspace/errors.hpp"
#include "polyspace/experiments.hpp"
#include "polyspace/serialize.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>

using namespace polyspace;

namespace {

ExperimentConfig config(InvariantKind kind, int n, int p, std::int64_t samples, std::uint64_t seed = 42)
{
    ExperimentConfig c;
    c.invariant = {kind, p, 1};
    c.n = n;
    c.samples = samples;
    c.seed = seed;
    return c;
}

double combined(double a, double b)
{
    return std::hypot(a, b);
}

} // namespace

TEST_CASE("selector names round-trip")
{
    for (const char* name : {"bettiM", "bettiN", "bettiM_pow", "bettiN_pow", "totalBettiM", "gamma", "normal", "lambda"})
        CHECK(to_string(parse_invariant(name)) == name);
    CHECK_THROWS_AS(parse_invariant("euler"), DomainError);
}

TEST_CASE("theory values")
{
    CHECK(*theory_value({InvariantKind::BettiM, 1, 1}, 15) == 14);
    CHECK(*theory_value({InvariantKind::BettiN, 1, 1}, 15) == 15);
    CHECK(*theory_value({InvariantKind::BettiN, 0, 1}, 15) == 1);
    CHECK(*theory_value({InvariantKind::BettiMPow, 1, 2}, 15) == 196);
    CHECK(*theory_value({InvariantKind::BettiNPow, 2, 3}, 10) == Rational(1 + 9 + 36) * 46 * 46);
    CHECK_FALSE(theory_value({InvariantKind::GammaIndicator, 2, 1}, 15).has_value());
}

TEST_CASE("validation")
{
    CHECK_THROWS_AS(run_expectation(config(InvariantKind::BettiM, 15, 13, 10)), DomainError);
    CHECK_THROWS_AS(run_expectation(config(InvariantKind::BettiM, 2, 0, 10)), DomainError);
    CHECK_THROWS_AS(run_expectation(config(InvariantKind::BettiM, 31, 1, 10)), CapacityError);
    CHECK_THROWS_AS(run_expectation(config(InvariantKind::BettiM, 15, 1, 0)), DomainError);
    CHECK_THROWS_AS(run_expectation(config(InvariantKind::LambdaIndicator, 15, 0, 10)), DomainError);
    CHECK_THROWS_AS(total_betti_avg(25, MeasureKind::UniformSimplex, 10, 1), CapacityError);
    auto pow0 = config(InvariantKind::BettiMPow, 10, 1, 10);
    pow0.invariant.k = 0;
    CHECK_THROWS_AS(run_expectation(pow0), DomainError);
}

TEST_CASE("evaluate_invariant matches the Betti module")
{
    const auto eq5 = oracle::equilateral(5);
    CHECK(evaluate_invariant({InvariantKind::BettiM, 1, 1}, eq5) == 8);
    CHECK(evaluate_invariant({InvariantKind::BettiMPow, 1, 3}, eq5) == 512);
    CHECK(evaluate_invariant({InvariantKind::BettiN, 1, 1}, eq5) == 5);
    CHECK(evaluate_invariant({InvariantKind::BettiNPow, 1, 2}, eq5) == 25);
    CHECK(evaluate_invariant({InvariantKind::TotalBettiM, 0, 1}, eq5) == 10);
    CHECK(evaluate_invariant({InvariantKind::GammaIndicator, 2, 1}, eq5) == 1);
    CHECK(evaluate_invariant({InvariantKind::NormalIndicator, 0, 1}, eq5) == 0);
    CHECK(evaluate_invariant({InvariantKind::LambdaIndicator, 2, 1}, eq5) == 0);
    CHECK(evaluate_invariant({InvariantKind::LambdaIndicator, 3, 1}, eq5) == 1);
}

TEST_CASE("estimates are shard and thread invariant")
{
    auto base = config(InvariantKind::BettiM, 10, 1, 20000, 7);
    base.block_size = 1000;
    const auto reference = run_expectation(base);
    for (auto [shards, threads] : {std::pair{8, 1}, std::pair{3, 2}, std::pair{20, 4}, std::pair{64, 3}}) {
        auto c = base;
        c.shards = shards;
        c.threads = threads;
        const auto r = run_expectation(c);
        CHECK(r.exact_mean == reference.exact_mean);
        CHECK(r.estimate.mean == reference.estimate.mean);
        CHECK(r.estimate.std_error == reference.estimate.std_error);
        CHECK(r.estimate.rejected == reference.estimate.rejected);
    }
}

TEST_CASE("seed changes the mean but not the theory")
{
    const auto a = run_expectation(config(InvariantKind::BettiM, 12, 1, 5000, 1));
    const auto b = run_expectation(config(InvariantKind::BettiM, 12, 1, 5000, 2));
    CHECK(a.exact_mean != b.exact_mean);
    CHECK(a.estimate.theory == b.estimate.theory);
    CHECK(a.estimate.count == 5000);
    CHECK(a.estimate.std_error == doctest::Approx(std::sqrt(a.estimate.variance / 5000)));
}

TEST_CASE("manifest round trip reproduces the results byte for byte")
{
    auto c = config(InvariantKind::BettiN, 11, 2, 6000, 99);
    c.shards = 4;
    const auto first = run_expectation(c);
    const Json manifest = make_manifest(first, {1.5, 2});
    const auto path = std::filesystem::temp_directory_path() / "polyspace_manifest_test.json";
    write_json_file(manifest, path);
    const Json loaded = read_json_file(path);
    std::filesystem::remove(path);
    CHECK(loaded == manifest);

    auto replay_config = config_from_manifest(loaded);
    replay_config.shards = 1;
    const auto second = run_expectation(replay_config);
    Json again = make_manifest(second, {0.25, 1});
    // Only run_info may differ; shard counts are recorded as configured.
    again["shard_layout"]["shards"] = manifest["shard_layout"]["shards"];
    again.erase("run_info");
    Json original = manifest;
    original.erase("run_info");
    CHECK(again.dump() == original.dump());
    CHECK(second.estimate.mean == first.estimate.mean);

    auto modified = loaded;
    modified["config"]["seed"] = 100;
    const auto third = run_expectation(config_from_manifest(modified));
    CHECK(third.exact_mean != first.exact_mean);
    CHECK(third.estimate.theory == first.estimate.theory);
}

TEST_CASE("Jensen consistency of the second moment")
{
    const auto mean = run_expectation(config(InvariantKind::BettiM, 12, 1, 8000, 5));
    auto pow_config = config(InvariantKind::BettiMPow, 12, 1, 8000, 6);
    pow_config.invariant.k = 2;
    const auto second = run_expectation(pow_config);
    const double m = mean.estimate.mean;
    const double se_sq = 2 * std::abs(m) * mean.estimate.std_error;
    CHECK(second.estimate.mean >= m * m - 5 * combined(second.estimate.std_error, se_sq));
}

TEST_CASE("indicator sandwich")
{
    const auto gamma = run_expectation(config(InvariantKind::GammaIndicator, 14, 3, 8000, 8));
    const auto normal = run_expectation(config(InvariantKind::NormalIndicator, 14, 0, 8000, 9));
    CHECK(gamma.estimate.mean <= normal.estimate.mean + 4 * combined(gamma.estimate.std_error, normal.estimate.std_error));
    REQUIRE(normal.bounds.size() == 2);
    CHECK(normal.bounds[0].name == "lower_bound");

    for (int p : {1, 2, 3}) {
        const auto lambda = run_expectation(config(InvariantKind::LambdaIndicator, 12, p, 8000, 10));
        REQUIRE(lambda.bounds.size() == 1);
        CHECK(lambda.estimate.mean <= to_double(lambda.bounds[0].value) + 4 * lambda.estimate.std_error + 1e-12);
    }

    // Same seed, same draws: Gamma_3 membership implies normality sample by sample.
    const auto g_same = run_expectation(config(InvariantKind::GammaIndicator, 14, 3, 8000, 9));
    CHECK(g_same.exact_mean <= normal.exact_mean);
}

TEST_CASE("total Betti averages")
{
    const auto five = total_betti_avg(5, MeasureKind::UniformSimplex, 20000, 3);
    CHECK(five.estimate.mean <= 10 + 4 * five.estimate.std_error);
    REQUIRE(five.bounds.size() == 1);
    CHECK(five.bounds[0].value == 10);
    std::int64_t total = 0;
    for (const auto& [value, count] : five.histogram) {
        CHECK(value >= 0);
        CHECK(value <= 10);
        total += count;
    }
    CHECK(total == 20000);

    const auto twelve = total_betti_avg(12, MeasureKind::UniformSimplex, 10000, 4, 4, 2);
    CHECK(twelve.exact_mean < total_betti_m_bound(12));
}

TEST_CASE("inside Gamma_2 every generic pentagon has total Betti number 10")
{
    RngStream rng(17, 0);
    std::map<std::int64_t, int> histogram;
    for (int s = 0; s < 20000; ++s) {
        const auto l = sample({MeasureKind::UniformSimplex, 5}, rng).lengths;
        if (!is_generic(l) || !in_gamma(l, 2)) continue;
        ++histogram[total_betti_m(l)];
    }
    REQUIRE(histogram.size() == 1);
    CHECK(histogram.begin()->first == 10);
    CHECK(histogram.begin()->second > 100);
}

TEST_CASE("convergence_scan rows and smoothing helper")
{
    auto c = config(InvariantKind::BettiM, 0, 1, 2000, 11);
    const auto rows = convergence_scan(c, 6, 9);
    REQUIRE(rows.size() == 4);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].n == 6 + static_cast<int>(i));
        REQUIRE(rows[i].theory.has_value());
        CHECK(*rows[i].theory == rows[i].n - 1);
        CHECK(rows[i].abs_dev == doctest::Approx(std::abs(rows[i].estimate.mean - *rows[i].theory)));
    }
    CHECK_THROWS_AS(convergence_scan(c, 9, 6), DomainError);

    const std::vector<double> decaying{5, 4, 4.5, 2, 1, 1.2, 0.3};
    CHECK(smoothed_nonincreasing(decaying));
    const std::vector<double> rising{1, 2, 3, 4, 5};
    CHECK_FALSE(smoothed_nonincreasing(rising));
    CHECK(smoothed_nonincreasing(rising, 1.0));
}
