#pragma once

// Polynomials over an exact or floating coefficient field, finite-difference
// stencils acting on them, and the basic polynomial sequence of the symmetric
// two-point difference at time scale tau.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace latdirac {

template <class T>
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(int k, T coef = T(1)) {
        std::vector<T> c(static_cast<std::size_t>(k) + 1, T(0));
        c.back() = coef;
        return Polynomial(std::move(c));
    }

    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    T coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return T(0);
        return c_[static_cast<std::size_t>(k)];
    }

    bool is_zero() const { return c_.empty(); }

    T operator()(const T& t) const {
        T acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    Polynomial& operator*=(const T& s) {
        for (auto& c : c_) c *= s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
    friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    // p(t + a), by binomial expansion of each power.
    Polynomial shifted(const T& a) const {
        int deg = degree();
        if (deg < 0) return {};
        std::vector<T> out(static_cast<std::size_t>(deg) + 1, T(0));
        // Pascal row built incrementally: binom[i] = C(k, i) for the current k.
        std::vector<T> binom{T(1)};
        std::vector<T> apow{T(1)};  // apow[j] = a^j
        for (int k = 0; k <= deg; ++k) {
            if (k > 0) {
                binom.push_back(T(1));
                for (int i = k - 1; i > 0; --i) binom[static_cast<std::size_t>(i)] += binom[static_cast<std::size_t>(i - 1)];
                apow.push_back(apow.back() * a);
            }
            const T& ck = c_[static_cast<std::size_t>(k)];
            if (ck == T(0)) continue;
            for (int i = 0; i <= k; ++i)
                out[static_cast<std::size_t>(i)] += ck * binom[static_cast<std::size_t>(i)] * apow[static_cast<std::size_t>(k - i)];
        }
        return Polynomial(std::move(out));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }

    std::vector<T> c_;
};

// Finite linear combination of shifts: (L p)(t) = sum_i weight_i * p(t + offset_i).
template <class T>
struct Stencil {
    struct Node {
        T offset;
        T weight;
    };
    std::vector<Node> nodes;
};

template <class T>
Polynomial<T> apply(const Stencil<T>& st, const Polynomial<T>& p) {
    Polynomial<T> out;
    for (const auto& node : st.nodes) out += p.shifted(node.offset) * node.weight;
    return out;
}

// Symmetric two-point difference at scale tau, as a stencil:
// (Q p)(t) = p(t + tau) - p(t - tau).
template <class T>
Stencil<T> symmetric_difference(const T& tau) {
    return Stencil<T>{{{tau, T(1)}, {-tau, T(-1)}}};
}

// Moment coefficients of a stencil: b_0 = (L 1)(0), the action on constants,
// and b_k = [(L)^k t^k](0) for k >= 1.
template <class T>
std::vector<T> delta_coefficients(const Stencil<T>& st, int kmax) {
    if (kmax < 0) throw std::invalid_argument("kmax must be >= 0");
    std::vector<T> b;
    b.reserve(static_cast<std::size_t>(kmax) + 1);
    b.push_back(apply(st, Polynomial<T>::monomial(0))(T(0)));
    for (int k = 1; k <= kmax; ++k) {
        Polynomial<T> p = Polynomial<T>::monomial(k);
        for (int i = 0; i < k; ++i) p = apply(st, p);
        b.push_back(p(T(0)));
    }
    return b;
}

// Basic sequence of the symmetric difference Q at scale tau:
//   G_0 = 1,  Q G_k = k G_{k-1},  G_k(0) = 0 for k >= 1,  deg G_k = k.
// Solved exactly by back-substitution: Q t^j has degree j-1 with leading
// coefficient 2 j tau, so the system is triangular.
template <class T>
std::vector<Polynomial<T>> gould_family(int kmax, const T& tau) {
    if (kmax < 0) throw std::invalid_argument("kmax must be >= 0");
    if (tau == T(0)) throw std::invalid_argument("tau must be nonzero");
    Stencil<T> q = symmetric_difference(tau);

    // Precompute Q t^j for j = 1..kmax.
    std::vector<Polynomial<T>> qmono(static_cast<std::size_t>(kmax) + 1);
    for (int j = 1; j <= kmax; ++j) qmono[static_cast<std::size_t>(j)] = apply(q, Polynomial<T>::monomial(j));

    std::vector<Polynomial<T>> g;
    g.reserve(static_cast<std::size_t>(kmax) + 1);
    g.push_back(Polynomial<T>::monomial(0));
    for (int k = 1; k <= kmax; ++k) {
        Polynomial<T> target = g.back() * T(k);
        [[maybe_unused]] T scale(0);
        if constexpr (std::is_floating_point_v<T>) {
            for (int j = 0; j <= target.degree(); ++j) scale = std::max(scale, std::abs(target.coeff(j)));
        }
        Polynomial<T> gk;
        for (int j = k; j >= 1; --j) {
            T cj = target.coeff(j - 1) / (T(2 * j) * tau);
            if (cj == T(0)) continue;
            gk += Polynomial<T>::monomial(j, cj);
            target -= qmono[static_cast<std::size_t>(j)] * cj;
        }
        // The solve consumes the target exactly; in floating point only a
        // roundoff-sized remainder is acceptable.
        if constexpr (std::is_floating_point_v<T>) {
            T slack = T(1024) * std::numeric_limits<T>::epsilon() * scale;
            for (int j = 0; j <= target.degree(); ++j)
                if (std::abs(target.coeff(j)) > slack)
                    throw std::logic_error("triangular solve left a residual");
        } else {
            if (!target.is_zero()) throw std::logic_error("triangular solve left a residual");
        }
        g.push_back(std::move(gk));
    }
    return g;
}

template <class T>
Polynomial<T> gould_polynomial(int k, const T& tau) {
    return gould_family(k, tau).back();
}

}  // namespace latdirac
