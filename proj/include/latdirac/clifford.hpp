#pragma once

// Clifford algebra Cl(n+1, n+1) over the complex numbers, represented on
// canonical basis blades encoded as bitmasks.

#include <bit>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace latdirac {

using cplx = std::complex<double>;

// Thrown for parameter sets the operators reject (bad dimensions, time off
// the step grid, stability bound violations).  The CLI maps this to exit 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CflError : ConfigError {
    using ConfigError::ConfigError;
};

// Generator signature: e_0 .. e_{2n+1}, with e_j^2 = -1 for 0 <= j <= n and
// e_j^2 = +1 for n+1 <= j <= 2n+1; distinct generators anticommute.
struct Signature {
    int n = 1;

    int generators() const { return 2 * n + 2; }

    double square(int j) const {
        if (j < 0 || j >= generators())
            throw ConfigError("generator index " + std::to_string(j) +
                              " out of range for n=" + std::to_string(n));
        return j <= n ? -1.0 : 1.0;
    }
};

// Sign accumulated when moving every generator of blade `a` past the
// lower-indexed generators of blade `b` into canonical order.  Each
// transposition of distinct generators contributes a factor -1.
inline double reorder_sign(std::uint32_t a, std::uint32_t b) {
    int swaps = 0;
    a >>= 1;
    while (a) {
        swaps += std::popcount(a & b);
        a >>= 1;
    }
    return (swaps & 1) ? -1.0 : 1.0;
}

// Sparse multivector: map from blade bitmask to coefficient.  Bit j set
// means e_j divides the blade; mask 0 is the scalar.  Coefficients equal
// to exactly (0,0) are never stored, so the term map is a canonical form
// and iteration order is deterministic.
class Multivector {
public:
    using Terms = std::map<std::uint32_t, cplx>;

    Multivector() = default;

    static Multivector scalar(cplx c) {
        Multivector m;
        m.add_term(0u, c);
        return m;
    }

    static Multivector generator(int j) {
        if (j < 0 || j >= 32) throw ConfigError("generator index out of range");
        Multivector m;
        m.add_term(std::uint32_t{1} << j, 1.0);
        return m;
    }

    static Multivector blade(std::uint32_t mask, cplx c) {
        Multivector m;
        m.add_term(mask, c);
        return m;
    }

    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }
    const Terms& terms() const { return t_; }

    cplx coeff(std::uint32_t mask) const {
        auto it = t_.find(mask);
        return it == t_.end() ? cplx{0.0} : it->second;
    }

    Multivector& add_term(std::uint32_t mask, cplx c) {
        auto [it, inserted] = t_.try_emplace(mask, c);
        if (!inserted) it->second += c;
        if (it->second == cplx{0.0}) t_.erase(it);
        return *this;
    }

    Multivector& operator+=(const Multivector& o) {
        for (const auto& [mask, c] : o.t_) add_term(mask, c);
        return *this;
    }

    Multivector& operator-=(const Multivector& o) {
        for (const auto& [mask, c] : o.t_) add_term(mask, -c);
        return *this;
    }

    Multivector& operator*=(cplx s) {
        if (s == cplx{0.0}) {
            t_.clear();
            return *this;
        }
        for (auto& [mask, c] : t_) c *= s;
        return *this;
    }

    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator-(Multivector a) { return a *= -1.0; }
    friend Multivector operator*(Multivector a, cplx s) { return a *= s; }
    friend Multivector operator*(cplx s, Multivector a) { return a *= s; }

    double norm_inf() const {
        double m = 0.0;
        for (const auto& [mask, c] : t_) m = std::max(m, std::abs(c));
        return m;
    }

private:
    Terms t_;
};

// Geometric product.  Blade times blade: reorder sign, then one signature
// factor per generator shared by both operands; the result blade is the
// symmetric difference of the masks.
inline Multivector product(const Signature& sig, const Multivector& x, const Multivector& y) {
    const std::uint32_t all = (sig.generators() >= 32)
                                  ? ~std::uint32_t{0}
                                  : ((std::uint32_t{1} << sig.generators()) - 1);
    Multivector out;
    for (const auto& [ma, ca] : x.terms()) {
        if (ma & ~all) throw ConfigError("blade uses generators outside the algebra");
        for (const auto& [mb, cb] : y.terms()) {
            if (mb & ~all) throw ConfigError("blade uses generators outside the algebra");
            double s = reorder_sign(ma, mb);
            std::uint32_t common = ma & mb;
            while (common) {
                int j = std::countr_zero(common);
                s *= sig.square(j);
                common &= common - 1;
            }
            out.add_term(ma ^ mb, s * ca * cb);
        }
    }
    return out;
}

/// Witt pair built from the two generators squaring to opposite signs:
// w_pm = (e_{2n+1} -+ e_0) / 2, so e_0 = w_- - w_+ and e_{2n+1} = w_- + w_+.
// Both are nilpotent and w_+ w_- + w_- w_+ = 1.
inline Multivector witt_plus(const Signature& sig) {
    Multivector m = Multivector::generator(2 * sig.n + 1) - Multivector::generator(0);
    return m * cplx{0.5};
}

inline Multivector witt_minus(const Signature& sig) {
    Multivector m = Multivector::generator(2 * sig.n + 1) + Multivector::generator(0);
    return m * cplx{0.5};
}

inline double distance(const Multivector& a, const Multivector& b) {
    return (a - b).norm_inf();
}

}  // namespace latdirac
