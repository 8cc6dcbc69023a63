#include <doctest.h>

#include <array>
#include <stdexcept>

#include "gve/embedding.hpp"
#include "gve/rng.hpp"

using namespace gve;

TEST_CASE("pair_distance: known values") {
    std::array<double, 2> o{0.0, 0.0};
    std::array<double, 2> p{3.0, 4.0};
    CHECK(pair_distance(o, p, 1.0, 0.0) == doctest::Approx(5.0));
    CHECK(pair_distance(p, p, 1.0, 0.0) == 0.0);

    // opposite corners of the unit square at kappa = 2
    std::array<double, 2> q{1.0, 1.0};
    CHECK(pair_distance(o, q, 2.0, 0.0) == doctest::Approx(2.0));
}

TEST_CASE("pair_distance: symmetry") {
    Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        int m = 1 + static_cast<int>(rng.integer(5));
        std::vector<double> a(m), b(m);
        for (double& x : a) x = rng.uniform(-3.0, 3.0);
        for (double& x : b) x = rng.uniform(-3.0, 3.0);
        double kappa = rng.uniform(kKappaMin, kKappaMax);
        double eps = rng.uniform() < 0.5 ? 0.0 : 1e-12;
        CHECK(pair_distance(a, b, kappa, eps) == pair_distance(b, a, kappa, eps));
    }
}

TEST_CASE("pair_distance: concave powers of a metric keep the triangle inequality") {
    Rng rng(23);
    for (int trial = 0; trial < 1000; ++trial) {
        int m = 1 + static_cast<int>(rng.integer(5));
        std::vector<double> a(m), b(m), c(m);
        for (double& x : a) x = rng.uniform(-2.0, 2.0);
        for (double& x : b) x = rng.uniform(-2.0, 2.0);
        for (double& x : c) x = rng.uniform(-2.0, 2.0);
        double kappa = rng.uniform(0.05, 1.0);
        double ab = pair_distance(a, b, kappa, 0.0);
        double bc = pair_distance(b, c, kappa, 0.0);
        double ac = pair_distance(a, c, kappa, 0.0);
        CHECK(ac <= ab + bc + 1e-12);
    }
}

TEST_CASE("kappa reparameterization") {
    CHECK(kappa_of_alpha(0.0) == doctest::Approx(1.025));
    CHECK(kappa_of_alpha(100.0) == doctest::Approx(2.0));
    CHECK(kappa_of_alpha(-100.0) == doctest::Approx(0.05));
    CHECK(kappa_of_alpha(alpha_of_kappa(1.3)) == doctest::Approx(1.3).epsilon(1e-9));

    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        double kappa = rng.uniform(0.0501, 1.9999);
        CHECK(kappa_of_alpha(alpha_of_kappa(kappa)) == doctest::Approx(kappa).epsilon(1e-9));
    }
    CHECK_THROWS_AS(alpha_of_kappa(0.05), std::invalid_argument);
    CHECK_THROWS_AS(alpha_of_kappa(2.0), std::invalid_argument);
}
