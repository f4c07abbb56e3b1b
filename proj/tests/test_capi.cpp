// Exercises the shared-library C surface only: no C++ core headers.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "fpp.h"

TEST_CASE("version and error text") {
    CHECK(std::strlen(fpp_version()) >= 5);
    CHECK(fpp_rng_create(1, 0, nullptr) == FPP_ERROR_INVALID);
    CHECK(std::strlen(fpp_last_error()) > 0);
}

TEST_CASE("rng streams through the C surface") {
    fpp_rng* a = nullptr;
    fpp_rng* b = nullptr;
    REQUIRE(fpp_rng_create(42, 7, &a) == FPP_OK);
    REQUIRE(fpp_rng_create(42, 7, &b) == FPP_OK);
    for (int i = 0; i < 100; ++i) {
        double x = 0, y = 0;
        CHECK(fpp_rng_uniform(a, &x) == FPP_OK);
        CHECK(fpp_rng_uniform(b, &y) == FPP_OK);
        CHECK(x == y);
    }
    double e = 0, g = 0;
    CHECK(fpp_rng_exponential(a, &e) == FPP_OK);
    CHECK(e > 0);
    CHECK(fpp_rng_gumbel(a, &g) == FPP_OK);
    std::vector<double> pts(10);
    CHECK(fpp_ppp_prefix(2.0, 10, a, pts.data()) == FPP_OK);
    for (int i = 1; i < 10; ++i) CHECK(pts[i] > pts[i - 1]);
    CHECK(fpp_ppp_prefix(-1.0, 10, a, pts.data()) == FPP_ERROR_INVALID);
    fpp_rng_destroy(a);
    fpp_rng_destroy(b);
}

TEST_CASE("laws through the C surface") {
    fpp_degree_law* law = nullptr;
    REQUIRE(fpp_degree_law_parse("powerlaw:3.5:5", &law) == FPP_OK);
    double p = 0, mean = 0, nu = 0;
    CHECK(fpp_degree_law_pmf(law, 5, &p) == FPP_OK);
    CHECK(p == doctest::Approx(0.3910203).epsilon(1e-5));
    CHECK(fpp_degree_law_mean(law, &mean) == FPP_OK);
    CHECK(fpp_degree_law_nu(law, &nu) == FPP_OK);
    CHECK(nu > 1.0);

    fpp_degree_law* biased = nullptr;
    REQUIRE(fpp_degree_law_size_biased(law, &biased) == FPP_OK);
    int inf = 1;
    CHECK(fpp_degree_law_infinite_mean(biased, &inf) == FPP_OK);
    CHECK(inf == 0);
    double folded = -1;
    CHECK(fpp_degree_law_truncation_mass(law, &folded) == FPP_OK);
    CHECK(folded >= 0);
    CHECK(folded < 1e-9);
    fpp_degree_law_destroy(biased);
    fpp_degree_law_destroy(law);

    CHECK(fpp_degree_law_parse("bogus", &law) == FPP_ERROR_INVALID);

    fpp_weight_law* w = nullptr;
    REQUIRE(fpp_weight_law_parse("exponential", &w) == FPP_OK);
    double l = 0;
    CHECK(fpp_weight_law_laplace(w, 1.0, &l) == FPP_OK);
    CHECK(l == doctest::Approx(0.5));
    fpp_weight_law_destroy(w);
}

TEST_CASE("graph and tree pipeline") {
    fpp_rng* rng = nullptr;
    REQUIRE(fpp_rng_create(7, 0, &rng) == FPP_OK);
    fpp_degree_law* law = nullptr;
    REQUIRE(fpp_degree_law_parse("fixed:4", &law) == FPP_OK);
    fpp_weight_law* w = nullptr;
    REQUIRE(fpp_weight_law_parse("exponential", &w) == FPP_OK);

    fpp_graph* g = nullptr;
    REQUIRE(fpp_graph_configuration_model(law, 2000, rng, &g) == FPP_OK);
    REQUIRE(fpp_graph_attach_weights(g, w, rng) == FPP_OK);
    int64_t n = 0, m = 0;
    CHECK(fpp_graph_order(g, &n, &m) == FPP_OK);
    CHECK(n == 2000);
    CHECK(m == 4000);
    int64_t deg = 0;
    CHECK(fpp_graph_degree(g, 3, &deg) == FPP_OK);
    CHECK(deg == 4);
    CHECK(fpp_graph_degree(g, 999999, &deg) == FPP_ERROR_INVALID);

    CHECK(fpp_graph_write(g, "capi.edges") == FPP_OK);
    fpp_graph* back = nullptr;
    REQUIRE(fpp_graph_read("capi.edges", &back) == FPP_OK);
    int64_t n2 = 0, m2 = 0;
    CHECK(fpp_graph_order(back, &n2, &m2) == FPP_OK);
    CHECK(m2 == m);
    std::remove("capi.edges");

    fpp_tree* t = nullptr;
    REQUIRE(fpp_tree_shortest_paths(g, 0, &t) == FPP_OK);
    int64_t reached = 0;
    CHECK(fpp_tree_reached(t, &reached) == FPP_OK);
    CHECK(reached > 1900);
    double md = 0;
    CHECK(fpp_tree_mean_degree(t, &md) == FPP_OK);
    CHECK(md == doctest::Approx(2.0 * (reached - 1) / 2000.0));
    std::vector<int32_t> degs(n);
    CHECK(fpp_tree_degrees(t, degs.data()) == FPP_OK);

    int64_t xd = 0;
    int skipped = 0;
    REQUIRE(fpp_excision_degree(g, 0, 13, &xd, &skipped) == FPP_OK);
    if (!skipped) CHECK(xd == degs[13]);
    fpp_tree_destroy(t);

    fpp_tree* bf = nullptr;
    REQUIRE(fpp_tree_bfst(g, 0, rng, &bf) == FPP_OK);
    fpp_tree_destroy(bf);

    fpp_graph* dense = nullptr;
    CHECK(fpp_graph_complete(20'000, 1.0, rng, 0, &dense) == FPP_ERROR_LIMIT);
    REQUIRE(fpp_graph_complete(200, 1.0, rng, 0, &dense) == FPP_OK);
    fpp_graph_destroy(dense);

    fpp_graph_destroy(back);
    fpp_graph_destroy(g);
    fpp_weight_law_destroy(w);
    fpp_degree_law_destroy(law);
    fpp_rng_destroy(rng);
}

TEST_CASE("pools and samplers") {
    fpp_rng* rng = nullptr;
    REQUIRE(fpp_rng_create(11, 0, &rng) == FPP_OK);

    fpp_pool* pool = nullptr;
    REQUIRE(fpp_pool_w_complete(1.0, 50'000, 0, rng, &pool) == FPP_OK);
    int64_t size = 0, sweeps = 0;
    double mean = 0, ks = 0;
    CHECK(fpp_pool_stats(pool, &size, &mean, &sweeps, &ks) == FPP_OK);
    CHECK(size == 50'000);
    CHECK(mean == doctest::Approx(1.0).epsilon(0.02));
    CHECK(fpp_pool_save(pool, "capi.pool") == FPP_OK);
    fpp_pool* loaded = nullptr;
    REQUIRE(fpp_pool_load("capi.pool", &loaded) == FPP_OK);
    double lap = 0;
    CHECK(fpp_pool_laplace(loaded, 1.0, &lap) == FPP_OK);
    CHECK(lap == doctest::Approx(0.5).epsilon(0.02));
    std::remove("capi.pool");

    std::vector<int64_t> degrees(50'000);
    REQUIRE(fpp_sample_hatd_complete(1.0, pool, 0, rng, degrees.size(),
                                     degrees.data(), nullptr) == FPP_OK);
    double dmean = 0;
    for (auto d : degrees) dmean += static_cast<double>(d);
    dmean /= static_cast<double>(degrees.size());
    CHECK(dmean == doctest::Approx(2.0).epsilon(0.04));
    double tv = 0;
    CHECK(fpp_tv_vs_geometric(degrees.data(), degrees.size(), 0.5, &tv) == FPP_OK);
    CHECK(tv < 0.02);

    double ls = 0;
    CHECK(fpp_lambda_s(2.0, &ls) == FPP_OK);
    CHECK(ls == doctest::Approx(std::atan(1.0)).epsilon(1e-12));
    fpp_weight_law* w = nullptr;
    REQUIRE(fpp_weight_law_parse("exponential", &w) == FPP_OK);
    double lambda = 0;
    CHECK(fpp_malthusian(3.0, w, &lambda) == FPP_OK);
    CHECK(lambda == doctest::Approx(2.0));
    CHECK(fpp_malthusian(0.9, w, &lambda) == FPP_ERROR_DOMAIN);

    double a3[3] = {0, 0, 0};
    CHECK(fpp_bfst_limit_pmf(3, a3) == FPP_OK);
    CHECK(a3[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-10));

    fpp_degree_law* d3 = nullptr;
    REQUIRE(fpp_degree_law_parse("fixed:3", &d3) == FPP_OK);
    double gf = 0;
    CHECK(fpp_gf_hatd_unit_weight(d3, 0.5, &gf) == FPP_OK);
    CHECK(gf == doctest::Approx(0.2916667).epsilon(1e-5));
    fpp_degree_law_destroy(d3);

    fpp_weight_law_destroy(w);
    fpp_pool_destroy(loaded);
    fpp_pool_destroy(pool);
    fpp_rng_destroy(rng);
}

TEST_CASE("experiment runner through the C surface") {
    const char* cfg =
        "experiment = fig2-regular\n"
        "n = 1500\nr = 6\nreplications = 2\nseed = 3\nout = tmp-capi-run\n";
    CHECK(fpp_run_experiment_text(cfg, nullptr, 0) == FPP_OK);
    CHECK(std::filesystem::exists("tmp-capi-run/stats.csv"));
    std::filesystem::remove_all("tmp-capi-run");

    const char* over = "experiment=nope";
    CHECK(fpp_run_experiment_text(cfg, &over, 1) == FPP_ERROR_INVALID);
    CHECK(fpp_run_experiment_file("no-such-config.txt", nullptr, 0) ==
          FPP_ERROR_INVALID);
}
