#include "oracles.hpp"

#include "polyspace/betti.hpp"
#include "polyspace/errors.hpp"

#include <doctest.h>

using namespace polyspace;

namespace {

LengthVector lv(const char* csv)
{
    return LengthVector::parse(csv);
}

std::int64_t ipow(std::int64_t b, int e)
{
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::int64_t choose(int n, int k)
{
    return binomial(n, k).convert_to<std::int64_t>();
}

} // namespace

TEST_CASE("alpha examples")
{
    const auto eq5 = oracle::equilateral(5);
    CHECK(alpha(eq5, 0) == 1);
    CHECK(alpha(eq5, 1) == 4);
    CHECK(alpha(eq5, 2) == 0);
    CHECK(alpha(eq5, 3) == 0);
    const auto heavy = lv("1,1,1,1,10");
    for (int j = 0; j <= 4; ++j) CHECK(alpha(heavy, j) == 0);
    CHECK_THROWS_AS(alpha(eq5, 5), DomainError);
    CHECK_THROWS_AS(alpha(eq5, -1), DomainError);
}

TEST_CASE("equilateral pentagon profiles")
{
    const auto eq5 = oracle::equilateral(5);
    CHECK(betti_n(eq5, 0) == 1);
    CHECK(betti_n(eq5, 1) == 5);
    CHECK(betti_n(eq5, 2) == 1);
    CHECK(planar_profile(eq5).values == std::vector<std::int64_t>{1, 8, 1});
    CHECK(spatial_profile(eq5).values == std::vector<std::int64_t>{1, 0, 5, 0, 1});
    CHECK(a_short(eq5, 0) == 1);
    CHECK(a_short(eq5, 1) == 4);
    CHECK(a_short(eq5, 2) == 0);
    for (int p = 0; p <= 2; ++p) {
        CHECK(betti_m(eq5, p) == oracle::betti_m(eq5, p));
        CHECK(betti_n(eq5, p) == oracle::betti_n(eq5, p));
    }
    // A closed orientable surface of genus g has Betti numbers (1, 2g, 1).
    CHECK(betti_m(eq5, 1) == 2 * 4);
}

TEST_CASE("quadrilateral (0.15,0.2,0.25,0.4)")
{
    const auto l = lv("0.15,0.2,0.25,0.4");
    CHECK(planar_profile(l).values == std::vector<std::int64_t>{1, 1});
    CHECK(total_betti_m(l) == 2);
}

TEST_CASE("total Betti numbers")
{
    CHECK(total_betti_m(oracle::equilateral(5)) == 10);
    CHECK(total_betti_m_bound(5) == 10);
    CHECK(total_betti_m(lv("0.6,0.1,0.1,0.1,0.1")) == 0);
    CHECK_THROWS_AS(total_betti_m(oracle::equilateral(4)), GenericityError);
    CHECK(total_betti_m_bound(4) == 8 - 3);
    CHECK(total_betti_m_bound(12) == 2048 - 462);
}

TEST_CASE("tc_n")
{
    CHECK(tc_n(oracle::equilateral(5)) == 5);
    CHECK(tc_n(oracle::equilateral(6)) == 7);
    CHECK_THROWS_AS(tc_n(lv("0.6,0.2,0.2")), EmptinessError);
    CHECK_THROWS_AS(tc_n(lv("0.5,0.25,0.25")), EmptinessError);
}

TEST_CASE("domain and genericity errors")
{
    const auto eq5 = oracle::equilateral(5);
    CHECK_THROWS_AS(betti_n(eq5, 3), DomainError);
    CHECK_THROWS_AS(betti_m(eq5, -1), DomainError);
    CHECK_THROWS_AS(betti_n(oracle::equilateral(4), 0), GenericityError);
    CHECK_THROWS_AS(spatial_profile(oracle::equilateral(6)), GenericityError);
    CHECK_THROWS_AS(betti_m(lv("1,1"), 0), DomainError);
    CHECK(parse_space("spatial") == Space::Spatial);
    CHECK_THROWS_AS(parse_space("hyperbolic"), DomainError);
}

TEST_CASE("betti_m accepts walls and counts median subsets")
{
    std::mt19937_64 rng(41);
    int walls = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 6);
        const auto l = oracle::random_vector(rng, n, 1, 5);
        if (oracle::generic(l)) continue;
        ++walls;
        for (int p = 0; p <= n - 3; ++p) {
            CHECK(betti_m(l, p) == oracle::betti_m(l, p));
            CHECK(a_median(l, p) == oracle::a_count(l, p, SubsetClass::Median));
        }
    }
    CHECK(walls > 50);
}

TEST_CASE("oracle equivalence on a generic corpus, n <= 8")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 3 + trial % 6;
        const auto l = oracle::random_generic(rng, n);
        for (int j = 0; j <= n - 1; ++j) CHECK(alpha(l, j) == oracle::alpha(l, j));
        for (int p = 0; p <= n - 3; ++p) {
            CHECK(betti_m(l, p) == oracle::betti_m(l, p));
            CHECK(betti_n(l, p) == oracle::betti_n(l, p));
        }
    }
}

TEST_CASE("permutation invariance")
{
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 8);
        const auto l = oracle::random_generic(rng, n);
        const auto pl = l.permuted(oracle::random_permutation(rng, n));
        CHECK(planar_profile(pl) == planar_profile(l));
        CHECK(spatial_profile(pl) == spatial_profile(l));
    }
    // Ties for the longest bar: any maximal index gives the same answer.
    const auto tied = lv("3,1,3,2,2,1");
    for (int p = 0; p <= 3; ++p) CHECK(betti_m(tied, p) == betti_m(tied.permuted(std::vector<int>{2, 1, 0, 3, 4, 5}), p));
}

TEST_CASE("planar Poincare duality and connectedness")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 9);
        const auto l = oracle::random_generic(rng, n);
        const auto profile = planar_profile(l);
        REQUIRE(profile.values.size() == static_cast<std::size_t>(n - 2));
        for (int p = 0; p <= n - 3; ++p) CHECK(profile.values[static_cast<std::size_t>(p)] == profile.values[static_cast<std::size_t>(n - 3 - p)]);
        if (n_nonempty(l) == Emptiness::Nonempty) CHECK(betti_n(l, 0) == 1);
        else CHECK(betti_n(l, 0) == 0);
    }
}

TEST_CASE("upper bounds")
{
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 10);
        const auto l = oracle::random_generic(rng, n);
        for (int p = 0; p <= n - 3; ++p) {
            CHECK(betti_n(l, p) <= 2 * ipow(n - 1, p));
            CHECK(betti_m(l, p) <= ipow(n, p + 2));
        }
        CHECK(total_betti_m(l) <= total_betti_m_bound(n));
    }
}

TEST_CASE("low-degree Betti numbers are binomial inside Gamma_p")
{
    std::mt19937_64 rng(7);
    int hits = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 7);
        const auto l = oracle::random_vector(rng, n, 95, 105);
        if (!is_generic(l)) continue;
        for (int p = 1; p <= n; ++p) {
            if (!in_gamma(l, p)) break;
            ++hits;
            for (int j = 0; j <= p - 1; ++j) CHECK(alpha(l, j) == choose(n - 1, j));
            for (int j = 0; j <= p - 2 && j <= n - 3; ++j) CHECK(betti_m(l, j) == choose(n - 1, j));
            for (int q = 0; q <= p - 2 && q <= n - 3; ++q) {
                std::int64_t expected = 0;
                for (int i = 0; i <= q; ++i) expected += choose(n - 1, i);
                CHECK(betti_n(l, q) == expected);
            }
        }
    }
    CHECK(hits > 200);
}

TEST_CASE("profile shapes")
{
    const auto l = oracle::random_generic(*std::make_unique<std::mt19937_64>(5), 7);
    const auto s = spatial_profile(l);
    REQUIRE(s.values.size() == 9);
    for (std::size_t d = 1; d < s.values.size(); d += 2) CHECK(s.values[d] == 0);
    CHECK(s.space == Space::Spatial);
    CHECK(planar_profile(l).total() == total_betti_m(l));
}
