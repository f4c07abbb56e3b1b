#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "fpp/pools.hpp"
#include "fpp/stats.hpp"

using namespace fpp;

TEST_CASE("growth-rate constant") {
    CHECK(lambda_s(1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lambda_s(2.0) ==
          doctest::Approx(std::atan(1.0)).epsilon(1e-12));  // pi/4
    CHECK_THROWS_AS(lambda_s(0.0), std::invalid_argument);
    // the defining identity, by quadrature, at 1e-8
    for (double s : {0.5, 1.0, 2.0})
        CHECK(mu_s_laplace(s, lambda_s(s)) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("growth-rate equation solutions") {
    CHECK(solve_malthusian(2.0, WeightLaw::exponential()) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(solve_malthusian(3.0, WeightLaw::exponential()) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(solve_malthusian(2.0, WeightLaw::constant_one()) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-12));
    const double lu = solve_malthusian(3.0, WeightLaw::uniform01());
    CHECK(std::fabs(3.0 * WeightLaw::uniform01().laplace(lu) - 1.0) < 1e-10);
    const double lp = solve_malthusian(2.5, WeightLaw::powered_exponential(2.0));
    CHECK(std::fabs(2.5 * WeightLaw::powered_exponential(2.0).laplace(lp) - 1.0) <
          1e-10);
    CHECK_THROWS_AS(solve_malthusian(1.0, WeightLaw::exponential()),
                    std::domain_error);
    CHECK_THROWS_AS(solve_malthusian(0.5, WeightLaw::exponential()),
                    std::domain_error);
}

TEST_CASE("validated limit parameter bundles") {
    const LimitParams cm =
        limit_params_cm(DegreeLaw::fixed(4), WeightLaw::exponential());
    CHECK(cm.nu == 3.0);
    CHECK(cm.lambda == doctest::Approx(2.0).epsilon(1e-12));
    const LimitParams wd = limit_params_complete(2.0);
    CHECK(wd.lambda_s == doctest::Approx(std::atan(1.0)).epsilon(1e-12));
    CHECK(wd.s == 2.0);
    CHECK_THROWS_AS(
        limit_params_cm(DegreeLaw::powerlaw(2.5, 2, 0), WeightLaw::exponential()),
        std::domain_error);
}

TEST_CASE("configuration-model fixed point matches the 3-regular closed form") {
    // offspring 2, exponential weights, rate 1: the fixed point has the
    // transform (1 + u/2)^-2
    RngStream rng(42, 0);
    PoolOptions opt;
    opt.size = 200'000;
    const SamplePool pool =
        solve_w_cm(DegreeLaw::fixed(3), WeightLaw::exponential(), 1.0, opt, rng);
    CHECK(pool.mean() == doctest::Approx(1.0).epsilon(0.01));
    for (double u : {0.5, 1.0, 2.0})
        CHECK(std::fabs(pool.laplace(u) - std::pow(1.0 + u / 2.0, -2.0)) < 0.01);
    CHECK(pool.sweeps > 2);
    CHECK(pool.last_sweep_ks < 0.02);
    CHECK(pool.lambda == 1.0);

    SUBCASE("deterministic for a fixed stream") {
        RngStream rng2(42, 0);
        const SamplePool again = solve_w_cm(DegreeLaw::fixed(3),
                                            WeightLaw::exponential(), 1.0, opt, rng2);
        REQUIRE(again.samples.size() == pool.samples.size());
        bool same = true;
        for (std::size_t i = 0; i < pool.samples.size(); ++i)
            same = same && again.samples[i] == pool.samples[i];
        CHECK(same);
    }
}

TEST_CASE("offspring mean of one is rejected") {
    RngStream rng(1, 0);
    PoolOptions opt;
    opt.size = 1000;
    CHECK_THROWS_AS(solve_w_cm(DegreeLaw::fixed(2), WeightLaw::exponential(), 1.0,
                               opt, rng),
                    std::domain_error);
}

TEST_CASE("weak-disorder fixed point at s=1 is standard exponential") {
    RngStream rng(7, 0);
    PoolOptions opt;
    opt.size = 200'000;
    const SamplePool pool = solve_w_complete(1.0, opt, rng);
    CHECK(pool.mean() == doctest::Approx(1.0).epsilon(0.01));
    const double ks = ks_statistic(
        pool.samples, [](double x) { return x <= 0 ? 0.0 : 1.0 - std::exp(-x); });
    CHECK(ks < 0.01);
}

TEST_CASE("weak-disorder fixed point means away from s=1") {
    PoolOptions opt;
    opt.size = 50'000;
    for (double s : {0.5, 2.0}) {
        RngStream rng(11, static_cast<std::uint64_t>(10 * s));
        const SamplePool pool = solve_w_complete(s, opt, rng);
        CHECK(pool.mean() == doctest::Approx(1.0).epsilon(0.012));
        for (double w : pool.samples) CHECK(w >= 0.0);
    }
}

TEST_CASE("explosion-time pools") {
    const DegreeLaw law = DegreeLaw::powerlaw(2.5, 2);
    SUBCASE("regime guards") {
        RngStream rng(1, 0);
        PoolOptions opt;
        opt.size = 1000;
        CHECK_THROWS_AS(solve_v_minrec(DegreeLaw::powerlaw(3.5, 2), opt, rng),
                        std::domain_error);
        CHECK_THROWS_AS(solve_v_minrec(DegreeLaw::powerlaw(2.5, 1), opt, rng),
                        std::domain_error);
        CHECK_THROWS_AS(solve_v_minrec(DegreeLaw::fixed(3), opt, rng),
                        std::domain_error);
        CHECK_THROWS_AS(solve_v_series(DegreeLaw::powerlaw(3.5, 2), 100, rng, 1e-3),
                        std::domain_error);
    }
    SUBCASE("the two representations agree") {
        RngStream rng_a(3, 0), rng_b(3, 1);
        PoolOptions opt;
        opt.size = 50'000;
        const SamplePool minrec = solve_v_minrec(law, opt, rng_a);
        const SamplePool series = solve_v_series(law, 10'000, rng_b, 1e-3);
        for (double v : minrec.samples) CHECK(v > 0.0);
        for (double v : series.samples) CHECK(v > 0.0);
        CHECK(ks_statistic(minrec.samples, series.samples) < 0.03);
        // fixed-point stability: the last full resampling sweep moved the
        // empirical law by less than the declared threshold
        CHECK(minrec.last_sweep_ks < 0.02);
    }
}

TEST_CASE("pool files round trip") {
    RngStream rng(13, 5);
    PoolOptions opt;
    opt.size = 2000;
    SamplePool pool = solve_w_complete(1.0, opt, rng);
    pool.save("pool_test.txt");
    const SamplePool back = SamplePool::load("pool_test.txt");
    CHECK(back.target == PoolTarget::w_complete);
    CHECK(back.s == pool.s);
    CHECK(back.lambda == pool.lambda);
    CHECK(back.sweeps == pool.sweeps);
    CHECK(back.seed == 13);
    CHECK(back.stream_id == 5);
    REQUIRE(back.samples.size() == pool.samples.size());
    bool same = true;
    for (std::size_t i = 0; i < pool.samples.size(); ++i)
        same = same && back.samples[i] == pool.samples[i];
    CHECK(same);
    std::remove("pool_test.txt");

    CHECK_THROWS_AS(SamplePool::load("no_such_pool.txt"), std::runtime_error);
}
