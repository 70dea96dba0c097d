#include <catch2/catch_amalgamated.hpp>

#include <latdirac/chebyshev.hpp>

using namespace latdirac;

TEST_CASE("recurrence and trig forms agree on the interval", "[chebyshev]") {
    for (int k = 0; k <= 12; ++k) {
        for (double x = -1.0; x <= 1.0001; x += 0.125) {
            double xc = std::min(x, 1.0);
            REQUIRE(cheb_t(k, xc) == Catch::Approx(cheb_t_trig(k, xc)).margin(1e-12));
            REQUIRE(cheb_u(k, xc) == Catch::Approx(cheb_u_trig(k, xc)).margin(1e-10));
        }
    }
    REQUIRE(cheb_u(-1, 0.3) == 0.0);
    REQUIRE(cheb_u(3, 1.0) == Catch::Approx(4.0));
    REQUIRE(cheb_u(3, -1.0) == Catch::Approx(-4.0));
}

TEST_CASE("pearson identity", "[chebyshev]") {
    for (int k = 1; k <= 10; ++k) {
        for (double x : {-0.9, -0.3, 0.0, 0.45, 0.99}) {
            double t = cheb_t(k, x), u = cheb_u(k - 1, x);
            REQUIRE(t * t + (1.0 - x * x) * u * u == Catch::Approx(1.0).margin(1e-11));
        }
    }
}

TEST_CASE("pole-anchored rule cancels an antisymmetric singularity", "[chebyshev]") {
    // PV of tan-like integrand over the half period is exactly zero.
    const double tau = 0.25;
    auto f = [&](double w) { return std::sin(w * tau) / std::cos(w * tau); };
    double v = pv_midpoint(f, 0.0, M_PI / tau, (M_PI / 2.0) / tau, 1 << 10);
    REQUIRE(std::abs(v) < 1e-9);
}

TEST_CASE("principal-value representations reproduce recurrence values", "[chebyshev]") {
    const double tau = 0.2;
    PvQuadrature q{1 << 12};

    REQUIRE(std::abs(pv_cheb_t(1, 0.3, tau, q) - 0.3) < 1e-6);

    for (double lam : {-0.9, -0.5, 0.1, 0.5, 0.9}) {
        for (int k = 1; k <= 8; ++k)
            REQUIRE(pv_cheb_t(k, lam, tau, q) == Catch::Approx(cheb_t(k, lam)).margin(1e-8));
        for (int k = 0; k <= 8; ++k)
            REQUIRE(pv_cheb_u(k, lam, tau, q) == Catch::Approx(cheb_u(k - 1, lam)).margin(1e-8));
    }
}

TEST_CASE("quadrature error decays under panel doubling", "[chebyshev]") {
    const double tau = 0.2, lam = 0.37;
    const int k = 5;
    double exact = cheb_t(k, lam);
    double e1 = std::abs(pv_cheb_t(k, lam, tau, {1 << 9}) - exact);
    double e2 = std::abs(pv_cheb_t(k, lam, tau, {1 << 10}) - exact);
    double e3 = std::abs(pv_cheb_t(k, lam, tau, {1 << 11}) - exact);
    REQUIRE(e2 < 0.5 * e1);
    REQUIRE(e3 < 0.5 * e2);
}

TEST_CASE("pv argument validation", "[chebyshev]") {
    REQUIRE_THROWS_AS(pv_cheb_t(0, 0.3, 0.2), ConfigError);
    REQUIRE_THROWS_AS(pv_cheb_u(-1, 0.3, 0.2), ConfigError);
    REQUIRE_THROWS_AS(pv_cheb_t(1, 1.0, 0.2), ConfigError);
    REQUIRE_THROWS_AS(pv_cheb_t(1, -1.2, 0.2), ConfigError);
    REQUIRE_THROWS_AS(pv_cheb_t(1, 0.3, -0.2), ConfigError);
    REQUIRE_THROWS_AS(pv_cheb_u(2, 0.3, 0.2, {4}), ConfigError);
}
