#include "lomax/distribution.hpp"
#include "lomax/random.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace lomax;
using doctest::Approx;

TEST_CASE("params are validated at construction")
{
    CHECK_THROWS_AS(LomaxParams(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(LomaxParams(1.0, -1.0), std::domain_error);
    CHECK_THROWS_AS(LomaxParams(std::nan(""), 1.0), std::domain_error);
    CHECK_NOTHROW(LomaxParams(0.1, 100.0));
}

TEST_CASE("pdf")
{
    CHECK(pdf(LomaxParams(10, 1), 0.0) == Approx(10.0));
    CHECK(pdf(LomaxParams(1, 1), 1.0) == Approx(0.25));
    // 40-digit evaluation of the closed form.
    CHECK(pdf(LomaxParams(2.5, 3), 1.5) == Approx(0.2016040940562286500574).epsilon(1e-14));
    CHECK_THROWS_AS(pdf(LomaxParams(1, 1), -0.1), std::domain_error);
}

TEST_CASE("cdf and reliability")
{
    const LomaxParams p(2.5, 3);
    CHECK(cdf(p, 0.0) == 0.0);
    CHECK(cdf(LomaxParams(1, 1), 1.0) == Approx(0.5));
    CHECK(cdf(LomaxParams(2, 1), 1.0) == Approx(0.75));
    CHECK(reliability(p, 0.0) == 1.0);
    CHECK(reliability(LomaxParams(1, 1), 1.0) == Approx(0.5));
    CHECK(reliability(p, 2.0) == Approx(1.0 - cdf(p, 2.0)).epsilon(1e-15));
    CHECK_THROWS_AS(cdf(p, -1.0), std::domain_error);
    CHECK_THROWS_AS(reliability(p, -1.0), std::domain_error);
}

TEST_CASE("hazard")
{
    CHECK(hazard(LomaxParams(10, 1), 0.0) == Approx(10.0));
    CHECK(hazard(LomaxParams(2, 2), 2.0) == Approx(0.5));
    const LomaxParams p(2.5, 3);
    CHECK(hazard(p, 1.0) == Approx(pdf(p, 1.0) / reliability(p, 1.0)).epsilon(1e-14));
    CHECK_THROWS_AS(hazard(p, -1e-9), std::domain_error);
}

TEST_CASE("moments")
{
    CHECK(mean(LomaxParams(2, 1)) == Approx(1.0));
    CHECK(variance(LomaxParams(3, 1)) == Approx(0.75));
    CHECK_THROWS_AS(mean(LomaxParams(1, 1)), MomentUndefined);
    CHECK_THROWS_AS(variance(LomaxParams(2, 1)), MomentUndefined);
    CHECK_NOTHROW(mean(LomaxParams(1.5, 1)));
}

TEST_CASE("sample_inverse")
{
    CHECK(sample_inverse(LomaxParams(3, 7), 0.0) == 0.0);
    CHECK(sample_inverse(LomaxParams(2, 1), 0.75) == Approx(1.0).epsilon(1e-15));
    const LomaxParams p(2.5, 3);
    CHECK(cdf(p, sample_inverse(p, 0.5)) == Approx(0.5).epsilon(1e-14));
    CHECK_THROWS_AS(sample_inverse(p, 1.0), std::domain_error);
    CHECK_THROWS_AS(sample_inverse(p, -0.01), std::domain_error);
}

TEST_CASE("sufficient statistic")
{
    const std::vector<double> one{std::numbers::e - 1.0};
    CHECK(sufficient_t(one, 1.0) == Approx(1.0).epsilon(1e-15));
    const std::vector<double> two{1.0, 1.0};
    CHECK(sufficient_t(two, 1.0) == Approx(2.0 * std::log(2.0)).epsilon(1e-15));
    CHECK_THROWS_AS(sufficient_t(std::vector<double>{}, 1.0), std::domain_error);
    CHECK_THROWS_AS(sufficient_t(std::vector<double>{1.0, 0.0}, 1.0), std::domain_error);
    CHECK_THROWS_AS(sufficient_t(std::vector<double>{1.0}, 0.0), std::domain_error);

    // Tiny x/lambda: log1p keeps full relative precision.
    const std::vector<double> tiny{1e-12};
    CHECK(std::abs(sufficient_t(tiny, 1.0) / (1e-12 - 0.5e-24) - 1.0) < 1e-15);

    const Sample s({1.0, 2.0, 3.0}, 2.0);
    CHECK(s.size() == 3);
    CHECK(s.t_stat() == Approx(std::log(1.5) + std::log(2.0) + std::log(2.5)));
    CHECK_THROWS_AS(Sample({1.0, -2.0}, 1.0), std::domain_error);
}

TEST_CASE("distribution identities on random parameters")
{
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> shape(0.2, 20.0);
    std::uniform_real_distribution<double> scale(0.1, 10.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const LomaxParams p(shape(gen), scale(gen));
        const double u = unit(gen);
        const double x = sample_inverse(p, u);
        REQUIRE(std::abs(cdf(p, x) - u) <= 1e-10);

        const double a = x * unit(gen);
        REQUIRE(cdf(p, a) <= cdf(p, x));
        REQUIRE(std::abs(reliability(p, x) - (1.0 - cdf(p, x))) <= 2.3e-16);
        const double f = pdf(p, x);
        REQUIRE(std::abs(hazard(p, x) * reliability(p, x) - f) <= 1e-12 * f);
        REQUIRE(pdf(p, a) >= f);
    }
}

TEST_CASE("pdf integrates to ~1 up to the 0.9999 quantile")
{
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> shape(0.5, 15.0);
    std::uniform_real_distribution<double> scale(0.2, 5.0);
    for (int trial = 0; trial < 5; ++trial) {
        const LomaxParams p(shape(gen), scale(gen));
        const double upper = sample_inverse(p, 0.9999);
        const double mass = oracle::simpson([&](double x) { return pdf(p, x); }, 0.0, upper, 200'000);
        CHECK(mass >= 0.9998);
        CHECK(mass == Approx(0.9999).epsilon(1e-6));
    }
}

TEST_CASE("inverse-transform draws reproduce the mean")
{
    for (double alpha : {2.5, 5.0}) {
        const LomaxParams p(alpha, 1.0);
        Xoshiro256 rng(2024);
        std::vector<double> draws(1'000'000);
        for (auto& x : draws)
            x = sample_inverse(p, rng.uniform01());
        const auto [m, se] = oracle::mean_se(draws);
        CHECK(std::abs(m - mean(p)) <= 3.0 * se);
    }
}
