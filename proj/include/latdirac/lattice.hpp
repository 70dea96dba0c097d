#pragma once

// Periodic spatial lattice, multivector-valued fields on it, and the
// second-order difference operators: lattice Laplacian, the Dirac-type
// first-order operator whose square is minus the Laplacian, and the
// one-step evolution generator built from the two of them.

#include <latdirac/clifford.hpp>

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace latdirac {

struct LatticeGrid {
    int n = 1;       // spatial dimension
    int N = 4;       // sites per axis, even
    double h = 1.0;  // lattice spacing

    void validate() const {
        if (n < 1 || n > 6) throw ConfigError("dimension n must be in 1..6");
        if (N < 2 || N % 2 != 0) throw ConfigError("points per axis must be even and >= 2");
        if (!(h > 0.0)) throw ConfigError("spacing must be positive");
        double s = std::pow(static_cast<double>(N), n);
        if (s > 4.0e6) throw ConfigError("lattice too large: " + std::to_string(s) + " sites");
    }

    Signature sig() const { return Signature{n}; }

    std::size_t sites() const {
        std::size_t s = 1;
        for (int j = 0; j < n; ++j) s *= static_cast<std::size_t>(N);
        return s;
    }

    std::size_t stride(int axis) const {
        std::size_t s = 1;
        for (int j = 0; j < axis; ++j) s *= static_cast<std::size_t>(N);
        return s;
    }

    // Axis 0 varies fastest.
    std::size_t index(const std::vector<int>& m) const {
        std::size_t idx = 0;
        for (int j = n - 1; j >= 0; --j) {
            int mj = ((m[static_cast<std::size_t>(j)] % N) + N) % N;
            idx = idx * static_cast<std::size_t>(N) + static_cast<std::size_t>(mj);
        }
        return idx;
    }

    std::vector<int> coords(std::size_t idx) const {
        std::vector<int> m(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            m[static_cast<std::size_t>(j)] = static_cast<int>(idx % static_cast<std::size_t>(N));
            idx /= static_cast<std::size_t>(N);
        }
        return m;
    }

    std::size_t neighbor(std::size_t idx, int axis, int step) const {
        std::size_t st = stride(axis);
        int m = static_cast<int>((idx / st) % static_cast<std::size_t>(N));
        int m2 = ((m + step) % N + N) % N;
        return idx + (static_cast<std::size_t>(m2) - static_cast<std::size_t>(m)) * st;
    }

    friend bool operator==(const LatticeGrid& a, const LatticeGrid& b) {
        return a.n == b.n && a.N == b.N && a.h == b.h;
    }
};

// Multivector-valued function on the grid.  The tag keeps position-space
// and momentum-space fields as distinct types over one implementation.
template <class Tag>
class GridField {
public:
    explicit GridField(LatticeGrid g) : grid_(g) {
        grid_.validate();
        v_.resize(grid_.sites());
    }

    const LatticeGrid& grid() const { return grid_; }
    std::size_t size() const { return v_.size(); }

    Multivector& at(std::size_t i) { return v_[i]; }
    const Multivector& at(std::size_t i) const { return v_[i]; }

    GridField& operator+=(const GridField& o) {
        require_same_grid(o);
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
        return *this;
    }

    GridField& operator-=(const GridField& o) {
        require_same_grid(o);
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
        return *this;
    }

    GridField& operator*=(cplx s) {
        for (auto& m : v_) m *= s;
        return *this;
    }

    friend GridField operator+(GridField a, const GridField& b) { return a += b; }
    friend GridField operator-(GridField a, const GridField& b) { return a -= b; }
    friend GridField operator*(GridField a, cplx s) { return a *= s; }
    friend GridField operator*(cplx s, GridField a) { return a *= s; }

private:
    void require_same_grid(const GridField& o) const {
        if (!(grid_ == o.grid_)) throw ConfigError("field grids differ");
    }

    LatticeGrid grid_;
    std::vector<Multivector> v_;
};

using CliffordField = GridField<struct position_space_tag>;

template <class Tag>
double sup_norm(const GridField<Tag>& f) {
    double m = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) m = std::max(m, f.at(i).norm_inf());
    return m;
}

// Blade-wise sesquilinear site sum, conjugate-linear in the first slot.
template <class Tag>
cplx inner(const GridField<Tag>& f, const GridField<Tag>& g) {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (const auto& [mask, c] : f.at(i).terms()) acc += std::conj(c) * g.at(i).coeff(mask);
    return acc;
}

// f(x + steps * h e_axis), periodic.
inline CliffordField shift(const CliffordField& f, int axis, int steps) {
    const LatticeGrid& g = f.grid();
    CliffordField out(g);
    for (std::size_t i = 0; i < f.size(); ++i) out.at(i) = f.at(g.neighbor(i, axis, steps));
    return out;
}

// Lattice Laplacian: sum over axes of [f(x+h) + f(x-h) - 2 f(x)] / h^2.
inline CliffordField laplacian(const CliffordField& f) {
    const LatticeGrid& g = f.grid();
    const double ih2 = 1.0 / (g.h * g.h);
    CliffordField out(g);
    for (std::size_t i = 0; i < f.size(); ++i) {
        Multivector acc;
        for (int a = 0; a < g.n; ++a) {
            acc += f.at(g.neighbor(i, a, +1));
            acc += f.at(g.neighbor(i, a, -1));
        }
        acc -= f.at(i) * cplx{2.0 * g.n};
        out.at(i) = acc * cplx{ih2};
    }
    return out;
}

// First-order operator: per axis a (generators are 1-based against axes),
//   e_{a+1} [f(x+h) - f(x-h)] / (2h)  +  e_{n+a+1} [2 f(x) - f(x+h) - f(x-h)] / (2h).
// Its square is exactly minus the Laplacian.
inline CliffordField dirac(const CliffordField& f) {
    const LatticeGrid& g = f.grid();
    const Signature sig = g.sig();
    const double i2h = 1.0 / (2.0 * g.h);
    CliffordField out(g);
    for (std::size_t i = 0; i < f.size(); ++i) {
        Multivector acc;
        for (int a = 0; a < g.n; ++a) {
            const Multivector& fp = f.at(g.neighbor(i, a, +1));
            const Multivector& fm = f.at(g.neighbor(i, a, -1));
            Multivector central = (fp - fm) * cplx{i2h};
            Multivector defect = (f.at(i) * cplx{2.0} - fp - fm) * cplx{i2h};
            acc += product(sig, Multivector::generator(a + 1), central);
            acc += product(sig, Multivector::generator(g.n + a + 1), defect);
        }
        out.at(i) = acc;
    }
    return out;
}

// One-step generator: A f = 2 tau e_0 (dirac f) + tau^2 e_{2n+1} e_0 (laplacian f).
inline CliffordField evolution_operator(const CliffordField& f, double tau) {
    const LatticeGrid& g = f.grid();
    const Signature sig = g.sig();
    Multivector e0 = Multivector::generator(0);
    Multivector etop = Multivector::generator(2 * g.n + 1);
    Multivector pair = product(sig, etop, e0);

    CliffordField df = dirac(f);
    CliffordField lf = laplacian(f);
    CliffordField out(g);
    for (std::size_t i = 0; i < f.size(); ++i) {
        out.at(i) = product(sig, e0, df.at(i)) * cplx{2.0 * tau} +
                    product(sig, pair, lf.at(i)) * cplx{tau * tau};
    }
    return out;
}

// Sup norm of the second-difference-in-time residual against the lattice
// Laplacian:  [next + prev - 2 cur] / tau^2  -  laplacian(cur).
inline double kg_residual(const CliffordField& prev, const CliffordField& cur,
                          const CliffordField& next, double tau) {
    CliffordField second = (next + prev - cur * cplx{2.0}) * cplx{1.0 / (tau * tau)};
    return sup_norm(second - laplacian(cur));
}

// Point mass at the origin site, scalar blade, amplitude 1.
inline CliffordField delta_datum(const LatticeGrid& g) {
    CliffordField f(g);
    f.at(0) = Multivector::scalar(1.0);
    return f;
}

// Scalar Gaussian bump, centred at the origin in periodic-minimal coordinates.
inline CliffordField gaussian_datum(const LatticeGrid& g, double sigma) {
    if (!(sigma > 0.0)) throw ConfigError("gaussian width must be positive");
    CliffordField f(g);
    for (std::size_t i = 0; i < f.size(); ++i) {
        auto m = g.coords(i);
        double r2 = 0.0;
        for (int j = 0; j < g.n; ++j) {
            int mj = m[static_cast<std::size_t>(j)];
            if (mj > g.N / 2) mj -= g.N;
            double x = g.h * mj;
            r2 += x * x;
        }
        f.at(i) = Multivector::scalar(std::exp(-r2 / (2.0 * sigma * sigma)));
    }
    return f;
}

// Scalar plane wave exp(i x . xi_k) for an integer mode vector k.
inline CliffordField planewave_datum(const LatticeGrid& g, const std::vector<int>& k) {
    if (static_cast<int>(k.size()) != g.n) throw ConfigError("plane-wave mode needs n components");
    CliffordField f(g);
    for (std::size_t i = 0; i < f.size(); ++i) {
        auto m = g.coords(i);
        double phase = 0.0;
        for (int j = 0; j < g.n; ++j)
            phase += 2.0 * M_PI * m[static_cast<std::size_t>(j)] * k[static_cast<std::size_t>(j)] / g.N;
        f.at(i) = Multivector::scalar(std::polar(1.0, phase));
    }
    return f;
}

}  // namespace latdirac
