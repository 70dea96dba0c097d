#include <catch2/catch_amalgamated.hpp>

#include <latdirac/clifford.hpp>

#include <random>
#include <vector>

using namespace latdirac;

namespace {

// Independent product oracle: decode blades to generator index lists,
// concatenate, then bubble-sort with sign bookkeeping and contract equal
// neighbours through the signature.  No shared code with reorder_sign.
Multivector oracle_blade_product(const Signature& sig, std::uint32_t a, std::uint32_t b,
                                 cplx ca, cplx cb) {
    std::vector<int> gens;
    for (int j = 0; j < sig.generators(); ++j)
        if (a & (1u << j)) gens.push_back(j);
    for (int j = 0; j < sig.generators(); ++j)
        if (b & (1u << j)) gens.push_back(j);

    double sign = 1.0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < gens.size(); ++i) {
            if (gens[i] > gens[i + 1]) {
                std::swap(gens[i], gens[i + 1]);
                sign = -sign;
                changed = true;
            } else if (gens[i] == gens[i + 1]) {
                sign *= sig.square(gens[i]);
                gens.erase(gens.begin() + static_cast<long>(i), gens.begin() + static_cast<long>(i) + 2);
                changed = true;
                break;
            }
        }
    }
    std::uint32_t mask = 0;
    for (int j : gens) mask |= (1u << j);
    return Multivector::blade(mask, sign * ca * cb);
}

Multivector random_multivector(std::mt19937& rng, int generators, int terms) {
    std::uniform_int_distribution<std::uint32_t> mask_dist(0, (1u << generators) - 1);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    Multivector m;
    for (int i = 0; i < terms; ++i) m.add_term(mask_dist(rng), cplx{coef(rng), coef(rng)});
    return m;
}

}  // namespace

TEST_CASE("generator squares and anticommutation are exact", "[clifford]") {
    for (int n : {1, 2, 3}) {
        Signature sig{n};
        for (int j = 0; j < sig.generators(); ++j) {
            auto ej = Multivector::generator(j);
            auto sq = product(sig, ej, ej);
            REQUIRE(sq.term_count() == 1);
            REQUIRE(sq.coeff(0) == cplx{sig.square(j)});
        }
        for (int i = 0; i < sig.generators(); ++i) {
            for (int j = 0; j < sig.generators(); ++j) {
                if (i == j) continue;
                auto ei = Multivector::generator(i);
                auto ej = Multivector::generator(j);
                auto anti = product(sig, ei, ej) + product(sig, ej, ei);
                REQUIRE(anti.is_zero());
            }
        }
    }
}

TEST_CASE("blade product matches the bubble-sort oracle", "[clifford]") {
    std::mt19937 rng(2026);
    for (int n : {1, 2, 3}) {
        Signature sig{n};
        std::uniform_int_distribution<std::uint32_t> mask_dist(0, (1u << sig.generators()) - 1);
        for (int trial = 0; trial < 200; ++trial) {
            std::uint32_t a = mask_dist(rng), b = mask_dist(rng);
            auto got = product(sig, Multivector::blade(a, 1.0), Multivector::blade(b, 1.0));
            auto want = oracle_blade_product(sig, a, b, 1.0, 1.0);
            REQUIRE(distance(got, want) == 0.0);
        }
    }
}

TEST_CASE("product is associative and distributes over addition", "[clifford]") {
    std::mt19937 rng(7);
    Signature sig{2};
    for (int trial = 0; trial < 25; ++trial) {
        auto x = random_multivector(rng, sig.generators(), 5);
        auto y = random_multivector(rng, sig.generators(), 5);
        auto z = random_multivector(rng, sig.generators(), 5);
        auto lhs = product(sig, product(sig, x, y), z);
        auto rhs = product(sig, x, product(sig, y, z));
        REQUIRE(distance(lhs, rhs) < 1e-12);
        auto d1 = product(sig, x, y + z);
        auto d2 = product(sig, x, y) + product(sig, x, z);
        REQUIRE(distance(d1, d2) < 1e-13);
    }
}

TEST_CASE("witt pair is nilpotent and dualizing", "[clifford]") {
    for (int n : {1, 2, 3}) {
        Signature sig{n};
        auto wp = witt_plus(sig);
        auto wm = witt_minus(sig);
        REQUIRE(product(sig, wp, wp).is_zero());
        REQUIRE(product(sig, wm, wm).is_zero());
        auto unit = product(sig, wp, wm) + product(sig, wm, wp);
        REQUIRE(unit.term_count() == 1);
        REQUIRE(unit.coeff(0) == cplx{1.0});
    }
}

TEST_CASE("time-pair combinations re-express in the witt basis", "[clifford]") {
    // e_0 a + e_{2n+1} b == w_-(a+b) - w_+(a-b) for scalar weights a, b.
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> coef(-3.0, 3.0);
    for (int n : {1, 2}) {
        Signature sig{n};
        for (int trial = 0; trial < 10; ++trial) {
            cplx a{coef(rng), coef(rng)}, b{coef(rng), coef(rng)};
            auto lhs = Multivector::generator(0) * a + Multivector::generator(2 * n + 1) * b;
            auto rhs = witt_minus(sig) * (a + b) - witt_plus(sig) * (a - b);
            REQUIRE(distance(lhs, rhs) < 1e-14);
        }
    }
}

TEST_CASE("term map stays canonical", "[clifford]") {
    Multivector m;
    m.add_term(3, cplx{1.0, -2.0});
    m.add_term(3, cplx{-1.0, 2.0});
    REQUIRE(m.is_zero());

    std::mt19937 rng(5);
    auto x = random_multivector(rng, 4, 6);
    REQUIRE((x - x).is_zero());
    REQUIRE((x * cplx{0.0}).is_zero());
    REQUIRE(distance(x + x, x * cplx{2.0}) == 0.0);
}
