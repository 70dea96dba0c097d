#include <catch2/catch_amalgamated.hpp>

#include <latdirac/rational.hpp>
#include <latdirac/umbral.hpp>

#include <cmath>

using namespace latdirac;

TEST_CASE("rational arithmetic normalizes and guards overflow", "[umbral]") {
    REQUIRE(Rational(2, -4) == Rational(-1, 2));
    REQUIRE(Rational(6, 3) == Rational(2));
    REQUIRE(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    REQUIRE(Rational(2, 5) * Rational(5, 2) == Rational(1));
    REQUIRE((Rational(3, 7) / Rational(3, 7)) == Rational(1));
    REQUIRE_THROWS_AS(Rational(1, 0), std::domain_error);
    Rational big(INT64_MAX / 2, 1);
    REQUIRE_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("polynomial shift expands binomially", "[umbral]") {
    // (t + 2)^3 = t^3 + 6 t^2 + 12 t + 8, checked through coefficients.
    auto p = Polynomial<Rational>::monomial(3);
    auto s = p.shifted(Rational(2));
    REQUIRE(s.coeff(0) == Rational(8));
    REQUIRE(s.coeff(1) == Rational(12));
    REQUIRE(s.coeff(2) == Rational(6));
    REQUIRE(s.coeff(3) == Rational(1));

    auto q = Polynomial<double>(std::vector<double>{1.0, -2.0, 0.5});
    for (double t : {-1.3, 0.0, 2.7}) {
        REQUIRE(q.shifted(0.4)(t) == Catch::Approx(q(t + 0.4)).margin(1e-13));
    }
}

TEST_CASE("stencil moment coefficients", "[umbral]") {
    Rational tau(1, 5);

    // Symmetric two-point difference: annihilates constants, b_1 = 2 tau,
    // b_2 = 8 tau^2 (apply twice to t^2: Q t^2 = 4 tau t, Q 4 tau t = 8 tau^2).
    auto q = symmetric_difference(tau);
    auto b = delta_coefficients(q, 3);
    REQUIRE(b[0] == Rational(0));
    REQUIRE(b[1] == Rational(2) * tau);
    REQUIRE(b[2] == Rational(8) * tau * tau);

    // Identity stencil: acts as 1 on constants, kills the origin values of t^k.
    Stencil<Rational> id{{{Rational(0), Rational(1)}}};
    auto bi = delta_coefficients(id, 2);
    REQUIRE(bi[0] == Rational(1));
    REQUIRE(bi[1] == Rational(0));
    REQUIRE(bi[2] == Rational(0));
}

TEST_CASE("basic sequence closed forms at low order", "[umbral]") {
    Rational tau(1, 5);
    auto g = gould_family(3, tau);

    REQUIRE(g[0] == Polynomial<Rational>::monomial(0));

    // G_1 = t / (2 tau)
    REQUIRE(g[1].coeff(1) == Rational(1) / (Rational(2) * tau));
    REQUIRE(g[1].coeff(0) == Rational(0));

    // G_2 = t^2 / (2 tau)^2
    REQUIRE(g[2].coeff(2) == Rational(1) / (Rational(4) * tau * tau));
    REQUIRE(g[2].coeff(1) == Rational(0));
    REQUIRE(g[2].coeff(0) == Rational(0));

    // G_3 = (t^3 - tau^2 t) / (2 tau)^3
    Rational d3 = Rational(8) * tau * tau * tau;
    REQUIRE(g[3].coeff(3) == Rational(1) / d3);
    REQUIRE(g[3].coeff(1) == -(tau * tau) / d3);
    REQUIRE(g[3].coeff(2) == Rational(0));
    REQUIRE(g[3].coeff(0) == Rational(0));
}

TEST_CASE("basic sequence satisfies its defining relations exactly", "[umbral]") {
    Rational tau(1, 5);
    const int kmax = 8;
    auto g = gould_family(kmax, tau);
    auto q = symmetric_difference(tau);
    for (int k = 1; k <= kmax; ++k) {
        REQUIRE(g[static_cast<std::size_t>(k)].degree() == k);
        REQUIRE(g[static_cast<std::size_t>(k)](Rational(0)) == Rational(0));
        auto lhs = apply(q, g[static_cast<std::size_t>(k)]);
        auto rhs = g[static_cast<std::size_t>(k - 1)] * Rational(k);
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("exponential generating function closes to exp of asinh", "[umbral]") {
    const double tau = 0.2;
    const int K = 40;
    auto g = gould_family(K, tau);

    for (double z : {0.3, 1.0, -0.7}) {
        for (double t : {0.0, tau, 4 * tau, 8 * tau}) {
            double sum = 0.0, even = 0.0, odd = 0.0;
            double zk = 1.0, fact = 1.0;
            for (int k = 0; k <= K; ++k) {
                if (k > 0) {
                    zk *= z;
                    fact *= k;
                }
                double term = g[static_cast<std::size_t>(k)](t) * zk / fact;
                sum += term;
                (k % 2 == 0 ? even : odd) += term;
            }
            double arg = (t / tau) * std::asinh(z / 2.0);
            REQUIRE(std::abs(sum - std::exp(arg)) < 1e-9);
            REQUIRE(std::abs(even - std::cosh(arg)) < 1e-9);
            REQUIRE(std::abs(odd - std::sinh(arg)) < 1e-9);
        }
    }
}
