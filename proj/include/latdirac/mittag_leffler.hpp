#pragma once

// Mittag-Leffler function by its defining series, the weighted Laplace
// integral identity it satisfies, and reconstruction of the momentum-side
// resolvent from that identity.

#include <latdirac/spectral.hpp>

#include <cmath>

namespace latdirac {

struct MlSeries {
    double eps = 1e-15;
    int max_terms = 600;
};

// E_{alpha,beta}(z) = sum_k z^k / Gamma(beta + alpha k).  The sum stops once
// three consecutive terms fall below eps relative to the partial sum.  Plain
// summation in double: for strongly negative arguments the alternating terms
// cancel, so absolute accuracy degrades like exp(z^2) * eps for alpha = 1/2;
// callers combine the value with a decaying weight that absorbs exactly that
// factor.
inline double ml(double alpha, double beta, double z, const MlSeries& opts = {}) {
    if (!(alpha > 0.0) || !(beta > 0.0)) throw ConfigError("ml needs alpha > 0 and beta > 0");
    double sum = 0.0, zk = 1.0;
    int small_run = 0;
    for (int k = 0; k < opts.max_terms; ++k) {
        double term = zk / std::tgamma(beta + alpha * k);
        sum += term;
        zk *= z;
        if (std::abs(term) < opts.eps * (1.0 + std::abs(sum))) {
            if (++small_run == 3) return sum;
        } else {
            small_run = 0;
        }
    }
    throw ConfigError("ml series did not settle within max_terms");
}

namespace detail {

template <class F>
auto simpson(F&& f, double a, double b, int intervals) -> decltype(f(a)) {
    if (intervals < 2 || intervals % 2 != 0)
        throw ConfigError("simpson needs an even interval count >= 2");
    const double h = (b - a) / intervals;
    auto acc = f(a) + f(b);
    for (int i = 1; i < intervals; ++i)
        acc += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return acc * (h / 3.0);
}

}  // namespace detail

// Left side of the weighted Laplace identity, truncated at P:
//   int_0^P exp(-p lam^2) p^{beta-1} E_{alpha,beta}(s p^alpha) dp.
// For beta < 1 the singular factor is removed exactly by substituting
// v = p^beta; for beta >= 1 the p = 0 value is the limit of the integrand.
inline double laplace_weighted_integral(double alpha, double beta, double lam, double s,
                                        double P, int nodes = 2000) {
    if (!(alpha > 0.0) || !(beta > 0.0)) throw ConfigError("needs alpha > 0 and beta > 0");
    if (!(P > 0.0)) throw ConfigError("needs a positive truncation P");
    const double lam2 = lam * lam;
    if (beta < 1.0) {
        auto f = [&](double v) {
            if (v == 0.0) return 1.0 / std::tgamma(beta);
            double p = std::pow(v, 1.0 / beta);
            return std::exp(-p * lam2) * ml(alpha, beta, s * std::pow(v, alpha / beta));
        };
        return detail::simpson(f, 0.0, std::pow(P, beta), nodes) / beta;
    }
    auto f = [&](double p) {
        if (p == 0.0) return beta == 1.0 ? 1.0 / std::tgamma(beta) : 0.0;
        return std::exp(-p * lam2) * std::pow(p, beta - 1.0) * ml(alpha, beta, s * std::pow(p, alpha));
    };
    return detail::simpson(f, 0.0, P, nodes);
}

// Closed form the integral converges to when lam^2 > |s|^{1/alpha}:
//   lam^{-2 beta} / (1 - s lam^{-2 alpha}).
inline double laplace_identity_rhs(double alpha, double beta, double lam, double s) {
    if (!(lam * lam > std::pow(std::abs(s), 1.0 / alpha)))
        throw ConfigError("outside the convergence region lam^2 > |s|^(1/alpha)");
    return std::pow(lam, -2.0 * beta) / (1.0 - s * std::pow(lam, -2.0 * alpha));
}

// Momentum-side resolvent at frequency omega for one dual mode:
//   [ -i sin(omega tau) + B(xi) ] / (cos(omega tau) - lambda(xi)).
inline Multivector resolvent_direct(const Multipliers& mult, std::size_t mode, double omega) {
    const double c = std::cos(omega * mult.tau);
    const double denom = c - mult.lam[mode];
    if (std::abs(denom) < 1e-12)
        throw ConfigError("resolvent evaluated at (or too near) its pole");
    Multivector num = Multivector::scalar(cplx{0.0, -std::sin(omega * mult.tau)}) + mult.B[mode];
    return num * cplx{1.0 / denom};
}

// The same resolvent with the reciprocal reconstructed from the weighted
// Laplace identity at alpha = beta = 1/2:
//   -int_0^P [num] exp(-p lam^2) E_{1/2,1/2}(cos(omega tau) sqrt(p)) / sqrt(p) dp,
// convergent where cos^2(omega tau) < lambda^2.
inline Multivector ml_resolvent(const Multipliers& mult, std::size_t mode, double omega,
                                double P = 40.0, int p_nodes = 2000) {
    const double lam = mult.lam[mode];
    const double s = std::cos(omega * mult.tau);
    if (!(s * s < lam * lam))
        throw ConfigError("ml resolvent needs cos^2(omega tau) < lambda^2");
    // Substituting p = u^2 removes the 1/sqrt(p) factor exactly.
    auto f = [&](double u) { return std::exp(-u * u * lam * lam) * ml(0.5, 0.5, s * u); };
    double integral = 2.0 * detail::simpson(f, 0.0, std::sqrt(P), p_nodes);
    Multivector num = Multivector::scalar(cplx{0.0, -std::sin(omega * mult.tau)}) + mult.B[mode];
    return num * cplx{-integral};
}

// Integrand of the subordination formula at fixed p, for one dual mode:
// the frequency average
//   -(tau / 2 pi) sum_omega [num(omega)] E_{1/2,1/2}(cos(omega tau) sqrt(p)) / sqrt(p)
//                 exp(-i omega t) domega
// over the full period (-pi/tau, pi/tau], by a uniform midpoint rule (the
// integrand is smooth: the pole only appears after the p-integral).
inline Multivector subordination_integrand(const Multipliers& mult, std::size_t mode, double t,
                                           double p, int omega_nodes = 512) {
    if (!(p > 0.0)) throw ConfigError("subordination integrand needs p > 0");
    if (omega_nodes < 8) throw ConfigError("needs at least 8 frequency nodes");
    const double tau = mult.tau;
    const double sp = std::sqrt(p);
    const double width = 2.0 * M_PI / tau;
    const double dw = width / omega_nodes;
    Multivector acc;
    for (int i = 0; i < omega_nodes; ++i) {
        double w = -M_PI / tau + (i + 0.5) * dw;
        Multivector num =
            Multivector::scalar(cplx{0.0, -std::sin(w * tau)}) + mult.B[mode];
        double e = ml(0.5, 0.5, std::cos(w * tau) * sp) / sp;
        acc += num * (std::polar(1.0, -w * t) * e * dw);
    }
    return acc * cplx{-tau / (2.0 * M_PI)};
}

}  // namespace latdirac
