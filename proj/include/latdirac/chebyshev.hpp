#pragma once

// Chebyshev polynomials of both kinds, and principal-value trigonometric
// integral representations of them, evaluated by a midpoint rule whose
// panels are anchored at the pole so that quadrature nodes pair up
// symmetrically around it and the singular contributions cancel.

#include <latdirac/clifford.hpp>

#include <cmath>

namespace latdirac {

// T_k by the three-term recurrence; valid for any real x and k >= 0.
inline double cheb_t(int k, double x) {
    if (k < 0) throw ConfigError("cheb_t needs k >= 0");
    double a = 1.0, b = x;
    for (int i = 0; i < k; ++i) {
        double c = 2.0 * x * b - a;
        a = b;
        b = c;
    }
    return a;
}

// U_k by the three-term recurrence; U_{-1} = 0.
inline double cheb_u(int k, double x) {
    if (k < -1) throw ConfigError("cheb_u needs k >= -1");
    double a = 0.0, b = 1.0;
    for (int i = 0; i <= k; ++i) {
        double c = 2.0 * x * b - a;
        a = b;
        b = c;
    }
    return a;
}

// Closed trigonometric forms on [-1, 1].
inline double cheb_t_trig(int k, double x) {
    if (std::abs(x) > 1.0) throw ConfigError("trig form needs |x| <= 1");
    return std::cos(k * std::acos(x));
}

inline double cheb_u_trig(int k, double x) {
    if (std::abs(x) > 1.0) throw ConfigError("trig form needs |x| <= 1");
    double phi = std::acos(x);
    double s = std::sin(phi);
    if (std::abs(s) < 1e-8) return cheb_u(k, x);  // endpoint: fall back to the recurrence
    return std::sin((k + 1) * phi) / s;
}

struct PvQuadrature {
    int panels = 1 << 12;
};

// Node/weight layout of the pole-anchored midpoint rule on [a, b]:
// uniform panels of width (b-a)/panels laid out so that the pole is a
// panel boundary; panels then pair symmetrically about the pole and the
// divergent parts of a simple-pole integrand cancel.  The leftover partial
// panels at the interval ends are evaluated at their own midpoints.
template <class Visitor>
void pv_panels(double a, double b, double pole, int panels, Visitor&& visit) {
    if (panels < 8) throw ConfigError("pv quadrature needs at least 8 panels");
    if (!(b > a)) throw ConfigError("pv quadrature needs b > a");
    const double D = (b - a) / panels;
    const double tiny = 1e-13 * (b - a);

    auto j0 = static_cast<long>(std::ceil((a - pole) / D - 1e-12));
    auto j1 = static_cast<long>(std::floor((b - pole) / D + 1e-12));

    double left = pole + static_cast<double>(j0) * D;
    double right = pole + static_cast<double>(j1) * D;
    if (left - a > tiny) visit(0.5 * (a + left), left - a);
    for (long j = j0; j < j1; ++j) visit(pole + (static_cast<double>(j) + 0.5) * D, D);
    if (b - right > tiny) visit(0.5 * (right + b), b - right);
}

// Principal value of the integral of f over [a, b] around a simple pole.
template <class F>
auto pv_midpoint(F&& f, double a, double b, double pole, int panels)
    -> decltype(f(0.0)) {
    using R = decltype(f(0.0));
    R total{};
    pv_panels(a, b, pole, panels, [&](double x, double w) { total += f(x) * w; });
    return total;
}

namespace detail {

inline void check_pv_args(int k, int kmin, double lam, double tau) {
    if (k < kmin) throw ConfigError("pv representation needs k >= " + std::to_string(kmin));
    if (!(tau > 0.0)) throw ConfigError("tau must be positive");
    if (!(std::abs(lam) < 1.0))
        throw ConfigError("pv representation needs |lambda| < 1 so the pole is interior");
}

// The anchored rule pairs nodes across the pole; a pole within two panel
// widths of an interval end would leave large near-pole nodes unpaired.
inline bool pole_resolved(double a, double b, double pole, int panels) {
    const double D = (b - a) / panels;
    return pole - a >= 2.0 * D && b - pole >= 2.0 * D;
}

inline void require_pole_resolved(double a, double b, double pole, int panels) {
    if (!pole_resolved(a, b, pole, panels))
        throw ConfigError("pole too close to an interval end for this panel count; increase panels");
}

}  // namespace detail

// T_k(lambda) = -(tau/pi) PV int_0^{pi/tau} sin(w tau) sin(w k tau) / (cos(w tau) - lambda) dw,
// valid for k >= 1 (the k = 0 integrand vanishes identically).
inline double pv_cheb_t(int k, double lam, double tau, const PvQuadrature& q = {}) {
    detail::check_pv_args(k, 1, lam, tau);
    const double pole = std::acos(lam) / tau;
    detail::require_pole_resolved(0.0, M_PI / tau, pole, q.panels);
    auto f = [&](double w) {
        return std::sin(w * tau) * std::sin(w * k * tau) / (std::cos(w * tau) - lam);
    };
    return -(tau / M_PI) * pv_midpoint(f, 0.0, M_PI / tau, pole, q.panels);
}

// U_{k-1}(lambda) = (tau/pi) PV int_0^{pi/tau} cos(w k tau) / (cos(w tau) - lambda) dw,
// valid for k >= 0 (k = 0 reproduces U_{-1} = 0).
inline double pv_cheb_u(int k, double lam, double tau, const PvQuadrature& q = {}) {
    detail::check_pv_args(k, 0, lam, tau);
    const double pole = std::acos(lam) / tau;
    detail::require_pole_resolved(0.0, M_PI / tau, pole, q.panels);
    auto f = [&](double w) { return std::cos(w * k * tau) / (std::cos(w * tau) - lam); };
    return (tau / M_PI) * pv_midpoint(f, 0.0, M_PI / tau, pole, q.panels);
}

}  // namespace latdirac
