#pragma once

// Discrete Fourier transform between position and momentum space, the
// Fourier multipliers of the difference operators, the stability bound,
// and the momentum-side one-step propagator.

#include <latdirac/lattice.hpp>

#include <cmath>
#include <set>
#include <vector>

namespace latdirac {

// Momentum-side field.  Storage index j per axis carries the dual integer
// k = j for j <= N/2 and k = j - N otherwise, so xi = 2 pi k / (N h)
// ranges over (-pi/h, pi/h].
using MomentumField = GridField<struct momentum_space_tag>;

inline int dual_wrap(int j, int N) { return j <= N / 2 ? j : j - N; }

// Frequency coordinates of a momentum-grid storage index.
inline std::vector<double> frequencies(const LatticeGrid& g, std::size_t idx) {
    std::vector<double> xi(static_cast<std::size_t>(g.n));
    auto m = g.coords(idx);
    for (int a = 0; a < g.n; ++a)
        xi[static_cast<std::size_t>(a)] =
            2.0 * M_PI * dual_wrap(m[static_cast<std::size_t>(a)], g.N) / (g.N * g.h);
    return xi;
}

// Total dual cell volume element (2 pi / (N h))^n.
inline double dual_measure(const LatticeGrid& g) {
    return std::pow(2.0 * M_PI / (g.N * g.h), g.n);
}

namespace detail {

// Separable per-axis transform of one dense complex channel; sign is the
// exponent sign.  Since every dual integer is congruent to its storage
// index mod N, storage indices can be used directly in the phases.
inline void axis_transforms(const LatticeGrid& g, std::vector<cplx>& vals, int sign) {
    const int N = g.N;
    std::vector<cplx> phase(static_cast<std::size_t>(N));
    for (int r = 0; r < N; ++r)
        phase[static_cast<std::size_t>(r)] = std::polar(1.0, sign * 2.0 * M_PI * r / N);

    std::vector<cplx> line(static_cast<std::size_t>(N));
    for (int a = 0; a < g.n; ++a) {
        const std::size_t st = g.stride(a);
        const std::size_t sites = g.sites();
        for (std::size_t base = 0; base < sites; ++base) {
            if ((base / st) % static_cast<std::size_t>(N) != 0) continue;
            for (int k = 0; k < N; ++k) {
                cplx acc = 0.0;
                for (int m = 0; m < N; ++m)
                    acc += vals[base + static_cast<std::size_t>(m) * st] *
                           phase[static_cast<std::size_t>((m * k) % N)];
                line[static_cast<std::size_t>(k)] = acc;
            }
            for (int k = 0; k < N; ++k) vals[base + static_cast<std::size_t>(k) * st] = line[static_cast<std::size_t>(k)];
        }
    }
}

template <class TagIn, class TagOut>
GridField<TagOut> transform(const GridField<TagIn>& f, int sign, double scale) {
    const LatticeGrid& g = f.grid();
    std::set<std::uint32_t> masks;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (const auto& [mask, c] : f.at(i).terms()) masks.insert(mask);

    GridField<TagOut> out(g);
    std::vector<cplx> vals(f.size());
    for (std::uint32_t mask : masks) {
        for (std::size_t i = 0; i < f.size(); ++i) vals[i] = f.at(i).coeff(mask);
        axis_transforms(g, vals, sign);
        for (std::size_t i = 0; i < f.size(); ++i)
            if (vals[i] != cplx{0.0}) out.at(i).add_term(mask, scale * vals[i]);
    }
    return out;
}

}  // namespace detail

// Forward transform: F(xi) = h^n (2 pi)^{-n/2} sum_x f(x) e^{+i x . xi}.
inline MomentumField forward_dft(const CliffordField& f) {
    const LatticeGrid& g = f.grid();
    double scale = std::pow(g.h, g.n) * std::pow(2.0 * M_PI, -0.5 * g.n);
    return detail::transform<struct position_space_tag, struct momentum_space_tag>(f, +1, scale);
}

// Inverse transform: f(x) = (2 pi)^{-n/2} sum_xi F(xi) e^{-i x . xi} dxi.
inline CliffordField inverse_dft(const MomentumField& F) {
    const LatticeGrid& g = F.grid();
    double scale = std::pow(2.0 * M_PI, -0.5 * g.n) * dual_measure(g);
    return detail::transform<struct momentum_space_tag, struct position_space_tag>(F, -1, scale);
}

// Symbol of the lattice Laplacian (with opposite sign): sum_a (4/h^2) sin^2(h xi_a / 2).
inline double multiplier_d2(const LatticeGrid& g, const std::vector<double>& xi) {
    double s = 0.0;
    for (int a = 0; a < g.n; ++a) {
        double t = std::sin(g.h * xi[static_cast<std::size_t>(a)] / 2.0);
        s += 4.0 / (g.h * g.h) * t * t;
    }
    return s;
}

// Symbol of the first-order operator under the forward transform:
//   z = sum_a [ -i e_{a+1} sin(h xi_a)/h + e_{n+a+1} (1 - cos(h xi_a))/h ],
// satisfying z^2 = d2.
inline Multivector multiplier_z(const LatticeGrid& g, const std::vector<double>& xi) {
    Multivector z;
    for (int a = 0; a < g.n; ++a) {
        double x = g.h * xi[static_cast<std::size_t>(a)];
        z += Multivector::generator(a + 1) * cplx{0.0, -std::sin(x) / g.h};
        z += Multivector::generator(g.n + a + 1) * cplx{(1.0 - std::cos(x)) / g.h};
    }
    return z;
}

// Largest stable step: tau <= h sqrt((sqrt(2) - 1) / (2 n)) keeps
// 1 - tau^2 d2 - tau^4 d2^2 / 4 >= 0 over the whole dual grid.
inline double cfl_max_tau(int n, double h) {
    return h * std::sqrt((std::sqrt(2.0) - 1.0) / (2.0 * n));
}

inline void require_cfl(const LatticeGrid& g, double tau) {
    if (!(tau > 0.0)) throw ConfigError("tau must be positive");
    double bound = cfl_max_tau(g.n, g.h);
    if (tau > bound * (1.0 + 1e-12))
        throw CflError("tau=" + std::to_string(tau) + " exceeds the stability bound " +
                       std::to_string(bound));
}

// Per-mode data for evolution at step tau.
struct Multipliers {
    LatticeGrid grid;
    double tau = 0.0;
    std::vector<double> d2;
    std::vector<double> lam;   // sqrt(1 - tau^2 d2 - tau^4 d2^2/4), in [0, 1]
    std::vector<Multivector> z;
    std::vector<Multivector> B;  // tau e_0 z - (tau^2/2) e_{2n+1} e_0 d2, with B^2 = 1 - lam^2

    static Multipliers compute(const LatticeGrid& g, double tau) {
        g.validate();
        require_cfl(g, tau);
        const Signature sig = g.sig();
        const Multivector e0 = Multivector::generator(0);
        const Multivector pair = product(sig, Multivector::generator(2 * g.n + 1), e0);

        Multipliers m;
        m.grid = g;
        m.tau = tau;
        const std::size_t sites = g.sites();
        m.d2.resize(sites);
        m.lam.resize(sites);
        m.z.resize(sites);
        m.B.resize(sites);
        for (std::size_t i = 0; i < sites; ++i) {
            auto xi = frequencies(g, i);
            double d2 = multiplier_d2(g, xi);
            Multivector z = multiplier_z(g, xi);
            double lam2 = 1.0 - tau * tau * d2 - 0.25 * std::pow(tau, 4) * d2 * d2;
            m.d2[i] = d2;
            m.lam[i] = std::sqrt(std::max(lam2, 0.0));
            m.B[i] = product(sig, e0, z) * cplx{tau} - pair * cplx{0.5 * tau * tau * d2};
            m.z[i] = std::move(z);
        }
        return m;
    }
};

// Number of steps encoded by time t; rejects t off the step grid.
inline int step_count(double tau, double t) {
    if (!(tau > 0.0)) throw ConfigError("tau must be positive");
    double ratio = t / tau;
    int m = static_cast<int>(std::lround(ratio));
    if (m < 0 || std::abs(ratio - m) > 1e-9 * std::max(1.0, std::abs(ratio)))
        throw ConfigError("time t must be a nonnegative integer multiple of tau");
    return m;
}

// Momentum-side propagator at time t = m tau:
//   M_m(xi) = T_m(lam) + U_{m-1}(lam) B(xi),
// generated by the three-term recurrence M_{m+1} = 2 lam M_m - M_{m-1}.
inline MomentumField propagator_multiplier(const Multipliers& mult, double t) {
    const int m = step_count(mult.tau, t);
    MomentumField out(mult.grid);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double lam = mult.lam[i];
        // Advance (T_k, T_{k+1}) and (U_{k-1}, U_k) together m times;
        // afterwards the trailing members are T_m and U_{m-1}.
        double Ta = 1.0, Tb = lam;
        double Ua = 0.0, Ub = 1.0;
        for (int k = 0; k < m; ++k) {
            double Tn = 2.0 * lam * Tb - Ta;
            Ta = Tb;
            Tb = Tn;
            double Un = 2.0 * lam * Ub - Ua;
            Ua = Ub;
            Ub = Un;
        }
        out.at(i) = Multivector::scalar(Ta) + mult.B[i] * cplx{Ua};
    }
    return out;
}

}  // namespace latdirac
