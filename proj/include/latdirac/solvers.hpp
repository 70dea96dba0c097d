#pragma once

// Four routes from initial data to the field at t = m tau:
//   leapfrog      two-step recurrence driven by the evolution generator,
//   spectral      momentum-side propagator multiplier,
//   series        basic-sequence expansion of the generator,
//   convolution   position-space kernel summed against the data,
// plus the principal-value space-time kernel and the subordination route
// that reconstructs the resolvent through the Mittag-Leffler identity.

#include <latdirac/chebyshev.hpp>
#include <latdirac/mittag_leffler.hpp>
#include <latdirac/spectral.hpp>
#include <latdirac/umbral.hpp>

#include <algorithm>
#include <vector>

namespace latdirac {

struct SolveConfig {
    LatticeGrid grid;
    double tau = 0.1;
};

using Trajectory = std::vector<CliffordField>;

// --- spectral ------------------------------------------------------------

inline CliffordField spectral_solve(const SolveConfig& cfg, const CliffordField& phi0, double t) {
    auto mult = Multipliers::compute(cfg.grid, cfg.tau);
    auto M = propagator_multiplier(mult, t);
    const Signature sig = cfg.grid.sig();
    auto F = forward_dft(phi0);
    MomentumField G(cfg.grid);
    for (std::size_t i = 0; i < F.size(); ++i) G.at(i) = product(sig, M.at(i), F.at(i));
    return inverse_dft(G);
}

// --- leapfrog ------------------------------------------------------------

// First slice used to start the two-step recurrence: the one-step
// propagator applied spectrally.
inline CliffordField bootstrap_first_step(const SolveConfig& cfg, const CliffordField& phi0) {
    return spectral_solve(cfg, phi0, cfg.tau);
}

// slice(m+1) = slice(m-1) + A slice(m).
inline Trajectory leapfrog_solve(const SolveConfig& cfg, const CliffordField& phi0, int steps) {
    if (steps < 0) throw ConfigError("steps must be >= 0");
    require_cfl(cfg.grid, cfg.tau);
    Trajectory traj;
    traj.reserve(static_cast<std::size_t>(steps) + 1);
    traj.push_back(phi0);
    if (steps >= 1) traj.push_back(bootstrap_first_step(cfg, phi0));
    for (int m = 1; m < steps; ++m) {
        CliffordField next = traj[static_cast<std::size_t>(m - 1)] +
                             evolution_operator(traj[static_cast<std::size_t>(m)], cfg.tau);
        traj.push_back(std::move(next));
    }
    return traj;
}

// --- series --------------------------------------------------------------

// Basic-sequence expansion: Psi(t) = sum_{k<=K} G_k(t) A^k phi0 / k!, where
// G_k is the basic sequence of the symmetric difference at scale tau.  By
// construction the partial sums satisfy the same two-step recurrence as the
// leapfrog route once K is large enough for the tail to be negligible.
inline CliffordField series_solve(const SolveConfig& cfg, const CliffordField& phi0, double t,
                                  int K = 20) {
    if (K < 0) throw ConfigError("series order must be >= 0");
    require_cfl(cfg.grid, cfg.tau);
    step_count(cfg.tau, t);  // t must sit on the step grid
    auto g = gould_family<double>(K, cfg.tau);

    CliffordField acc = phi0;  // k = 0 term: G_0 = 1
    CliffordField power = phi0;
    double factorial = 1.0;
    for (int k = 1; k <= K; ++k) {
        power = evolution_operator(power, cfg.tau);
        factorial *= k;
        double coef = g[static_cast<std::size_t>(k)](t) / factorial;
        if (coef != 0.0) acc += power * cplx{coef};
    }
    return acc;
}

// --- kernel and convolution ----------------------------------------------

// Fundamental solution table: K(x, t) = (2 pi)^{-n} sum_xi M(xi, t) e^{-i x.xi} dxi.
// At t = 0 this is the discrete delta scaled by 1/h^n, and its h^n-weighted
// site sum is exactly 1 at every time.
inline CliffordField kernel_field(const SolveConfig& cfg, double t) {
    auto mult = Multipliers::compute(cfg.grid, cfg.tau);
    auto M = propagator_multiplier(mult, t);
    double scale = std::pow(2.0 * M_PI, -cfg.grid.n) * dual_measure(cfg.grid);
    return detail::transform<momentum_space_tag, position_space_tag>(M, -1, scale);
}

// Psi(x, t) = sum_y h^n K(x - y, t) phi0(y), the kernel acting from the left.
inline CliffordField convolution_solve(const SolveConfig& cfg, const CliffordField& phi0,
                                       double t) {
    const LatticeGrid& g = cfg.grid;
    const Signature sig = g.sig();
    CliffordField K = kernel_field(cfg, t);
    const double hn = std::pow(g.h, g.n);

    // Precompute multi-indices once; x - y is computed componentwise mod N.
    const std::size_t sites = g.sites();
    std::vector<std::vector<int>> mi(sites);
    for (std::size_t i = 0; i < sites; ++i) mi[i] = g.coords(i);

    CliffordField out(g);
    std::vector<int> diff(static_cast<std::size_t>(g.n));
    for (std::size_t x = 0; x < sites; ++x) {
        Multivector acc;
        for (std::size_t y = 0; y < sites; ++y) {
            if (phi0.at(y).is_zero()) continue;
            for (int a = 0; a < g.n; ++a) {
                int d = mi[x][static_cast<std::size_t>(a)] - mi[y][static_cast<std::size_t>(a)];
                diff[static_cast<std::size_t>(a)] = d < 0 ? d + g.N : d;
            }
            acc += product(sig, K.at(g.index(diff)), phi0.at(y));
        }
        out.at(x) = acc * cplx{hn};
    }
    return out;
}

// --- principal-value space-time kernel ------------------------------------

// K(x, t) evaluated from the frequency-domain resolvent:
//   tau (2 pi)^{-(n+1)} sum_xi dxi e^{-i x.xi} PV int_{-pi/tau}^{pi/tau}
//       [ -i sin(omega tau) + B(xi) ] / (cos(omega tau) - lambda(xi)) e^{-i omega t} domega.
// After exact parity reduction the omega-integral per mode is the pair of
// principal-value Chebyshev forms, so the representation needs t >= tau.
inline Multivector spacetime_kernel(const SolveConfig& cfg, const std::vector<int>& site,
                                    double t, int omega_panels = 1 << 12) {
    const LatticeGrid& g = cfg.grid;
    if (static_cast<int>(site.size()) != g.n) throw ConfigError("site needs n components");
    auto mult = Multipliers::compute(g, cfg.tau);
    const int m = step_count(cfg.tau, t);
    if (m < 1) throw ConfigError("space-time kernel representation needs t >= tau");
    const double tau = cfg.tau;
    PvQuadrature q{omega_panels};

    // Per-mode value of the omega-integral times tau/(2 pi).
    std::vector<Multivector> value(g.sites());
    for (std::size_t i = 0; i < g.sites(); ++i) {
        const double lam = mult.lam[i];
        if (lam < 1.0) {
            value[i] = Multivector::scalar(pv_cheb_t(m, lam, tau, q)) +
                       mult.B[i] * cplx{pv_cheb_u(m, lam, tau, q)};
        } else {
            // Flat mode: lambda = 1, B = 0; the integrand is regular,
            //   -sin(omega tau) sin(omega m tau) / (cos(omega tau) - 1)
            //   = cot(omega tau / 2) sin(omega m tau),
            // integrated by the same midpoint layout.
            auto f = [&](double w) {
                return std::sin(w * m * tau) / std::tan(w * tau / 2.0);
            };
            double v = (tau / M_PI) * pv_midpoint(f, 0.0, M_PI / tau, 0.0, omega_panels);
            value[i] = Multivector::scalar(v);
        }
    }

    // Spatial synthesis at the requested site.
    const double scale = std::pow(2.0 * M_PI, -g.n) * dual_measure(g);
    Multivector out;
    for (std::size_t i = 0; i < g.sites(); ++i) {
        auto xi = frequencies(g, i);
        double phase = 0.0;
        for (int a = 0; a < g.n; ++a)
            phase -= g.h * site[static_cast<std::size_t>(a)] * xi[static_cast<std::size_t>(a)];
        out += value[i] * (std::polar(1.0, phase) * scale);
    }
    return out;
}

// --- subordination ---------------------------------------------------------

struct SubordinationParams {
    double P = 40.0;      // truncation of the p-integral
    int p_nodes = 400;    // Simpson intervals for the p-integral
    int omega_nodes = 512;  // panels of the pole-anchored frequency rule
};

struct SubordinationDiagnostics {
    struct Mode {
        std::size_t index = 0;
        bool fallback = false;  // no node satisfied |cos| < lambda; spectral value used
        int ml_nodes = 0;       // reciprocal reconstructed through the p-integral
        int direct_nodes = 0;   // reciprocal evaluated directly
    };
    std::vector<Mode> modes;
    std::size_t fallback_count = 0;
};

// Per mode, the propagator value is assembled as the pole-anchored
// frequency quadrature of the resolvent times e^{-i omega t}; at nodes
// where exp(-P (lambda^2 - cos^2)) is negligible the reciprocal is
// reconstructed from the truncated Mittag-Leffler p-integral, elsewhere it
// is evaluated directly.  Modes whose node set never satisfies
// |cos(omega tau)| < lambda fall back to the spectral multiplier and are
// flagged in the diagnostics.
inline CliffordField subordination_solve(const SolveConfig& cfg, const CliffordField& phi0,
                                         double t, const SubordinationParams& par = {},
                                         SubordinationDiagnostics* diag = nullptr) {
    const LatticeGrid& g = cfg.grid;
    const Signature sig = g.sig();
    auto mult = Multipliers::compute(g, cfg.tau);
    const int m = step_count(cfg.tau, t);
    if (m < 1) throw ConfigError("subordination representation needs t >= tau");
    if (!(par.P > 0.0)) throw ConfigError("p-truncation must be positive");
    const double tau = cfg.tau;
    const double margin = std::log(1e12) / par.P;

    auto spectral_value = [&](std::size_t i) {
        double lam = mult.lam[i];
        double Ta = 1.0, Tb = lam, Ua = 0.0, Ub = 1.0;
        for (int k = 0; k < m; ++k) {
            double Tn = 2.0 * lam * Tb - Ta;
            Ta = Tb;
            Tb = Tn;
            double Un = 2.0 * lam * Ub - Ua;
            Ua = Ub;
            Ub = Un;
        }
        return Multivector::scalar(Ta) + mult.B[i] * cplx{Ua};
    };

    if (diag) {
        diag->modes.clear();
        diag->fallback_count = 0;
    }

    std::vector<Multivector> value(g.sites());
    for (std::size_t i = 0; i < g.sites(); ++i) {
        const double lam = mult.lam[i];
        const double pole = std::acos(std::clamp(lam, -1.0, 1.0)) / tau;
        SubordinationDiagnostics::Mode md;
        md.index = i;

        double min_abs_cos = 1.0;
        pv_panels(0.0, M_PI / tau, pole, par.omega_nodes,
                  [&](double w, double) { min_abs_cos = std::min(min_abs_cos, std::abs(std::cos(w * tau))); });

        // Fall back when no node admits the p-route.  An interior pole the
        // panel layout cannot resolve is also sent to the fallback; at
        // lambda = 1 the parity-reduced integrand is regular (the pole
        // degenerates onto the boundary), so the hybrid rule stands.
        const bool unresolved =
            lam < 1.0 && !detail::pole_resolved(0.0, M_PI / tau, pole, par.omega_nodes);
        if (min_abs_cos >= lam || unresolved) {
            md.fallback = true;
            value[i] = spectral_value(i);
        } else {
            Multivector acc;
            pv_panels(0.0, M_PI / tau, pole, par.omega_nodes, [&](double w, double weight) {
                const double c = std::cos(w * tau);
                double recip;
                if (lam * lam - c * c >= margin) {
                    auto f = [&](double u) { return std::exp(-u * u * lam * lam) * ml(0.5, 0.5, c * u); };
                    recip = -2.0 * detail::simpson(f, 0.0, std::sqrt(par.P), par.p_nodes);
                    ++md.ml_nodes;
                } else {
                    recip = 1.0 / (c - lam);
                    ++md.direct_nodes;
                }
                Multivector node = Multivector::scalar(-std::sin(w * tau) * std::sin(w * m * tau)) +
                                   mult.B[i] * cplx{std::cos(w * m * tau)};
                acc += node * cplx{recip * weight};
            });
            value[i] = acc * cplx{tau / M_PI};
        }

        if (diag) {
            diag->fallback_count += md.fallback ? 1u : 0u;
            diag->modes.push_back(md);
        }
    }

    auto F = forward_dft(phi0);
    MomentumField G(g);
    for (std::size_t i = 0; i < F.size(); ++i) G.at(i) = product(sig, value[i], F.at(i));
    return inverse_dft(G);
}

}  // namespace latdirac
