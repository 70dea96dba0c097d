#include <catch2/catch_amalgamated.hpp>

#include <latdirac/mittag_leffler.hpp>

using namespace latdirac;

TEST_CASE("series specializes to the exponential", "[mittag_leffler]") {
    REQUIRE(std::abs(ml(1.0, 1.0, 1.0) - std::exp(1.0)) < 1e-12);
    REQUIRE(std::abs(ml(1.0, 1.0, -2.5) - std::exp(-2.5)) < 1e-12);
    // E_{2,1}(z) = cosh(sqrt z)
    REQUIRE(std::abs(ml(2.0, 1.0, 2.25) - std::cosh(1.5)) < 1e-12);
    REQUIRE(std::abs(ml(2.0, 1.0, -2.25) - std::cos(1.5)) < 1e-12);
}

TEST_CASE("series satisfies the index recurrence", "[mittag_leffler]") {
    // E_{a,b}(z) = z E_{a,a+b}(z) + 1/Gamma(b)
    for (double a : {0.5, 1.0, 1.5}) {
        for (double b : {0.5, 1.0, 2.0}) {
            for (double z : {-2.0, -0.3, 0.8, 3.0}) {
                double lhs = ml(a, b, z);
                double rhs = z * ml(a, a + b, z) + 1.0 / std::tgamma(b);
                REQUIRE(lhs == Catch::Approx(rhs).margin(1e-12));
            }
        }
    }
    REQUIRE_THROWS_AS(ml(-1.0, 1.0, 0.5), ConfigError);
    REQUIRE_THROWS_AS(ml(0.5, 0.0, 0.5), ConfigError);
}

TEST_CASE("weighted laplace integral reaches its closed form", "[mittag_leffler]") {
    // Half-integer orders: 1/(lam - s) shape.  lam = 2, s = 0.5 gives 2/3.
    double lhs = laplace_weighted_integral(0.5, 0.5, 2.0, 0.5, 40.0);
    REQUIRE(std::abs(lhs - 2.0 / 3.0) < 1e-8);
    REQUIRE(std::abs(lhs - laplace_identity_rhs(0.5, 0.5, 2.0, 0.5)) < 1e-8);

    // Negative s, lam near 1.
    double l2 = laplace_weighted_integral(0.5, 0.5, 1.1, -0.5, 40.0);
    REQUIRE(std::abs(l2 - laplace_identity_rhs(0.5, 0.5, 1.1, -0.5)) < 1e-7);

    // s = 0 reduces to the plain Gamma integral lam^{-2 beta}.  Away from
    // half-integer orders the substituted integrand has a v^{1/beta} cusp at
    // zero, so the composite rule drops below fourth order; more nodes keep
    // the check tight.
    double l3 = laplace_weighted_integral(0.75, 0.75, 1.3, 0.0, 40.0, 32000);
    REQUIRE(std::abs(l3 - std::pow(1.3, -1.5)) < 1e-8);

    // Integer orders use the direct path, whose p = 0 limit is 1/Gamma(beta).
    double l4 = laplace_weighted_integral(1.0, 1.0, 1.2, 0.3, 40.0, 4000);
    REQUIRE(std::abs(l4 - laplace_identity_rhs(1.0, 1.0, 1.2, 0.3)) < 1e-8);

    // Outside the convergence region: lam^2 = 0.49 < |s|^{1/alpha} = 0.64.
    REQUIRE_THROWS_AS(laplace_identity_rhs(0.5, 0.5, 0.7, 0.8), ConfigError);
}

TEST_CASE("direct resolvent at the flat mode", "[mittag_leffler]") {
    LatticeGrid g{1, 4, 1.0};
    auto mult = Multipliers::compute(g, 0.2);
    // Mode 0: lambda = 1, B = 0; at omega tau = pi/2 the value is i.
    REQUIRE(mult.lam[0] == 1.0);
    REQUIRE(mult.B[0].is_zero());
    auto r = resolvent_direct(mult, 0, (M_PI / 2.0) / 0.2);
    REQUIRE(distance(r, Multivector::scalar(cplx{0.0, 1.0})) < 1e-14);

    // Denominator identity: (cos(omega tau) - lambda) r == numerator.
    std::size_t mode = 1;
    double omega = 1.3;
    auto rr = resolvent_direct(mult, mode, omega);
    double denom = std::cos(omega * 0.2) - mult.lam[mode];
    Multivector num = Multivector::scalar(cplx{0.0, -std::sin(omega * 0.2)}) + mult.B[mode];
    REQUIRE(distance(rr * cplx{denom}, num) < 1e-14);

    REQUIRE_THROWS_AS(resolvent_direct(mult, 0, 0.0), ConfigError);  // pole at omega = 0
}

TEST_CASE("laplace reconstruction matches the direct resolvent", "[mittag_leffler]") {
    LatticeGrid g{1, 4, 1.0};
    auto mult = Multipliers::compute(g, 0.2);
    std::size_t mode = 1;  // lambda^2 = 0.9184
    double lam = mult.lam[mode];
    REQUIRE(lam == Catch::Approx(std::sqrt(0.9184)).margin(1e-15));

    for (double c : {0.4, 0.0, -0.3}) {
        double omega = std::acos(c) / 0.2;
        auto direct = resolvent_direct(mult, mode, omega);
        auto viaml = ml_resolvent(mult, mode, omega, 40.0, 2000);
        REQUIRE(distance(viaml, direct) < 1e-6);
    }

    // Outside the convergence region the reconstruction refuses.
    double omega_bad = std::acos(0.99) / 0.2;
    REQUIRE_THROWS_AS(ml_resolvent(mult, mode, omega_bad), ConfigError);
}

TEST_CASE("subordination integrand has the parity of its numerator", "[mittag_leffler]") {
    LatticeGrid g{1, 4, 1.0};
    auto mult = Multipliers::compute(g, 0.2);
    std::size_t mode = 1;
    // At t = 0 the odd scalar part of the numerator integrates to zero, so
    // the scalar coefficient vanishes and only B-blades survive.
    auto a = subordination_integrand(mult, mode, 0.0, 1.7, 512);
    REQUIRE(std::abs(a.coeff(0)) < 1e-12);
    bool has_b_blade = false;
    for (const auto& [mask, c] : mult.B[mode].terms())
        if (std::abs(a.coeff(mask)) > 1e-6) has_b_blade = true;
    REQUIRE(has_b_blade);

    REQUIRE_THROWS_AS(subordination_integrand(mult, mode, 0.0, -1.0), ConfigError);
}
