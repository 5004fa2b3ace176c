#include "lomax/dataset.hpp"
#include "lomax/distribution.hpp"
#include "lomax/estimators.hpp"

#include "oracles.hpp"
#include "reference_tables.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace lomax;
using doctest::Approx;

namespace {

double mobility_t()
{
    return sufficient_t(embedded_dataset().values, reference::kMobilityLambda);
}

bool rel_close(double got, double want, double tol)
{
    return std::abs(got - want) <= tol * std::abs(want);
}

} // namespace

TEST_CASE("hyperparameter types validate")
{
    CHECK_THROWS_AS(GammaHyper(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(GammaHyper(1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(GammaHyper(0.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(HyperBound(0.0), std::domain_error);
    CHECK_THROWS_AS(HyperBound(-1.0), std::domain_error);
    CHECK(HyperBound(0.25).c() == 0.25);
}

TEST_CASE("mle")
{
    CHECK(mle(10, 5.0) == Approx(2.0));
    CHECK(mle(1, 1.0) == Approx(1.0));
    CHECK_THROWS_AS(mle(5, 0.0), std::domain_error);
    CHECK_THROWS_AS(mle(0, 1.0), std::domain_error);
    // T for the mobility data, 40-digit reference.
    CHECK(mobility_t() == Approx(8.269694971179197244706).epsilon(1e-14));
    CHECK(std::abs(mle(21, mobility_t()) - reference::kMobilityMle) < 1e-6);
}

TEST_CASE("bayes estimators for fixed hyperparameters")
{
    const GammaHyper h(0.5, 0.5);
    CHECK(bayes(LossKind::SEL, h, 10, 5.0) == Approx(10.5 / 5.5).epsilon(1e-15));
    CHECK(bayes(LossKind::KL, h, 10, 5.0) == Approx(std::sqrt(10.5 * 9.5) / 5.5).epsilon(1e-15));
    CHECK(bayes(LossKind::EL, h, 10, 5.0) == Approx(9.5 / 5.5).epsilon(1e-15));
    CHECK(bayes(LossKind::SEL, h, 10, 5.0) == Approx(1.909091).epsilon(1e-6));
    CHECK(bayes(LossKind::KL, h, 10, 5.0) == Approx(1.815908).epsilon(1e-6));
    CHECK(bayes(LossKind::EL, h, 10, 5.0) == Approx(1.727273).epsilon(1e-6));
    CHECK_THROWS_AS(bayes(LossKind::SEL, h, 10, -1.0), std::domain_error);
}

TEST_CASE("bayes SEL equals the mean of posterior draws")
{
    const GammaHyper h(0.3, 1.7);
    const std::size_t n = 15;
    const double t = 6.2;
    const auto draws = oracle::gamma_draws(n + h.a(), t + h.b(), 1'000'000, 99);
    const auto [m, se] = oracle::mean_se(draws);
    CHECK(std::abs(bayes(LossKind::SEL, h, n, t) - m) <= 3.0 * se);
}

TEST_CASE("E-Bayes estimates reproduce the mobility table")
{
    const double t = mobility_t();
    for (const auto& row : reference::kMobilityTable) {
        CAPTURE(row.c);
        const HyperBound c(row.c);
        CHECK(std::abs(ebayes(LossKind::SEL, c, 21, t) - row.values[0]) <= 5e-6);
        CHECK(std::abs(ebayes(LossKind::KL, c, 21, t) - row.values[1]) <= 5e-6);
        CHECK(std::abs(ebayes(LossKind::EL, c, 21, t) - row.values[2]) <= 5e-6);
    }
}

TEST_CASE("E-Bayes small-c limit")
{
    CHECK(std::abs(ebayes(LossKind::SEL, HyperBound(1e-8), 10, 5.0) - 2.1) <= 1e-6);
    CHECK(std::abs(ebayes(LossKind::EL, HyperBound(1e-8), 10, 5.0) - 1.9) <= 1e-6);
}

TEST_CASE("kl_integral against frozen values and the Simpson oracle")
{
    struct Case {
        std::size_t n;
        double value;
    };
    // 40-digit adaptive quadrature.
    const Case cases[] = {{1, 0.8403167750249355302931},  {2, 1.934991444758889881478},
                          {5, 4.974852063332141694609},   {10, 9.987481706066701954316},
                          {21, 20.99404564908779434254},  {50, 49.9974998541460376758},
                          {100, 99.99874998177018877091}};
    for (const auto& k : cases) {
        CAPTURE(k.n);
        const double got = kl_integral(k.n);
        CHECK(rel_close(got, k.value, 2e-15));
        const double nn = static_cast<double>(k.n);
        const double simpson = oracle::simpson([nn](double a) { return oracle::kl_integrand(a, nn); }, 0.0, 1.0);
        CHECK(rel_close(got, simpson, 1e-10));
        CHECK(got > nn - 0.5);
        CHECK(got < nn + 0.5);
    }
    CHECK_THROWS_AS(kl_integral(0), std::domain_error);

    // v * (1/0.25) * ln(8.51970/8.26970) reproduces the published 2.50106.
    const double t = mobility_t();
    CHECK(std::abs(kl_integral(21) / 0.25 * std::log((t + 0.25) / t) - 2.50106) < 5e-6);
}

TEST_CASE("E-Bayes properties on random inputs")
{
    std::mt19937_64 gen(3);
    std::uniform_int_distribution<std::size_t> ns(1, 200);
    std::uniform_real_distribution<double> logu(-4.0, 4.0);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t n = ns(gen);
        const double c = std::exp(logu(gen));
        const double t = std::exp(logu(gen));
        const HyperBound bound(c);
        const double sel = ebayes(LossKind::SEL, bound, n, t);
        const double kl = ebayes(LossKind::KL, bound, n, t);
        const double el = ebayes(LossKind::EL, bound, n, t);
        REQUIRE(el < kl);
        REQUIRE(kl < sel);

        const double k = std::exp(logu(gen));
        for (LossKind loss : kAllLosses) {
            const double base = ebayes(loss, bound, n, t);
            REQUIRE(rel_close(ebayes(loss, HyperBound(k * c), n, k * t), base / k, 1e-12));
            REQUIRE(ebayes(loss, bound, n, t * 1.01) < base);
            REQUIRE(ebayes(loss, HyperBound(c * 1.01), n, t) < base);
        }

        const double a = std::uniform_real_distribution<double>(0.01, 0.99)(gen);
        const GammaHyper h(a, c);
        REQUIRE(bayes(LossKind::EL, h, n, t) < bayes(LossKind::KL, h, n, t));
        REQUIRE(bayes(LossKind::KL, h, n, t) < bayes(LossKind::SEL, h, n, t));
    }
}

TEST_CASE("E-Bayes equals the hyperprior average of the Bayes estimator")
{
    std::mt19937_64 gen(17);
    std::uniform_int_distribution<std::size_t> ns(1, 100);
    std::uniform_real_distribution<double> cs(0.1, 3.0);
    std::uniform_real_distribution<double> ts(0.5, 60.0);
    for (int trial = 0; trial < 5; ++trial) {
        const std::size_t n = ns(gen);
        const double c = cs(gen);
        const double t = ts(gen);
        for (LossKind loss : kAllLosses) {
            const double avg = oracle::hyperprior_average(
                [&](double a, double b) { return bayes(loss, GammaHyper(a, b), n, t); }, c);
            CHECK(rel_close(ebayes(loss, HyperBound(c), n, t), avg, 1e-8));
        }
    }
}

TEST_CASE("MLE exceeds every E-Bayes estimate on the mobility data")
{
    const double t = mobility_t();
    for (double c : {0.5, 0.75, 1.0, 1.25}) {
        const HyperBound bound(c);
        CHECK(mle(21, t) > ebayes(LossKind::SEL, bound, 21, t));
        CHECK(ebayes(LossKind::SEL, bound, 21, t) > ebayes(LossKind::KL, bound, 21, t));
        CHECK(ebayes(LossKind::KL, bound, 21, t) > ebayes(LossKind::EL, bound, 21, t));
    }
}

TEST_CASE("make_report fills every field")
{
    const auto r = make_report(21, mobility_t(), HyperBound(0.25));
    CHECK(r.n == 21);
    CHECK(r.c == 0.25);
    CHECK(r.mle == Approx(2.539392).epsilon(1e-6));
    CHECK(r.eb.sel == Approx(2.56133).epsilon(1e-5));
    CHECK(r.emse.el == Approx(0.31935).epsilon(1e-4));
}
