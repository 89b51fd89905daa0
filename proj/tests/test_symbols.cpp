#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cubiclf/symbols.hpp"

using namespace cubiclf;

namespace {
EisensteinInt rnd(std::mt19937_64& rng, long long range) {
    return {int128((long long)(rng() % (2 * range + 1))) - range,
            int128((long long)(rng() % (2 * range + 1))) - range};
}
}  // namespace

TEST_CASE("symbol_prime basics") {
    auto pi7 = split_rational_prime(7);
    // multiples of pi map to 0
    CHECK(symbol_prime(pi7.pi * EisensteinInt{4, 1}, pi7.pi).zero);
    // cubes are cubic residues
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        auto a = rnd(rng, 50);
        if (a.is_zero()) continue;
        auto cube = a * a * a;
        auto v = symbol_prime(cube, pi7.pi);
        if (!v.zero) CHECK(v == CubicValue::omega_pow(0));
    }
    auto v2 = symbol_prime(EisensteinInt{2, 0}, pi7.pi);
    CHECK_FALSE(v2.zero);  // some omega power
    // non-prime modulus with (N-1) % 3 != 0 is refused
    CHECK_THROWS_AS(symbol_prime(EisensteinInt{2, 0}, EisensteinInt{4, 1}), std::domain_error);
}

TEST_CASE("symbol on units and the supplement") {
    // (a/u)_3 = 1 for any unit modulus
    CHECK(symbol(EisensteinInt{5, 7}, kOmega) == CubicValue::omega_pow(0));
    CHECK(symbol(EisensteinInt{5, 7}, EisensteinInt{-1, 0}) == CubicValue::omega_pow(0));
    // (1-w / 10)_3 = 1: 10 is primary and == 1 (mod 9)
    CHECK(symbol(kLambda, EisensteinInt{10, 0}) == CubicValue::omega_pow(0));
    // modulus with norm divisible by 3 refused
    CHECK_THROWS_AS(symbol(EisensteinInt{2, 0}, kLambda), std::domain_error);
}

TEST_CASE("reciprocity path equals exponentiation path") {
    auto prims = primary_primes_up_to(100000);
    std::mt19937_64 rng(6);
    for (int i = 0; i < 3000; ++i) {
        const auto& p = prims[rng() % prims.size()];
        auto a = rnd(rng, 100000);
        if (a.is_zero()) continue;
        CHECK(symbol(a, p.pi) == symbol_prime(a, p.pi));
    }
}

TEST_CASE("multiplicativity in the modulus") {
    auto prims = primary_primes_up_to(3000);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 400; ++i) {
        const auto& p = prims[rng() % prims.size()];
        const auto& q = prims[rng() % prims.size()];
        if (p.pi == q.pi) continue;
        auto n = p.pi * q.pi;
        auto a = rnd(rng, 4000);
        if (a.is_zero()) continue;
        CHECK(symbol(a, n) == symbol_prime(a, p.pi) * symbol_prime(a, q.pi));
    }
}

TEST_CASE("multiplicativity in the upper argument and the cube law") {
    auto prims = primary_primes_up_to(5000);
    std::mt19937_64 rng(8);
    for (int i = 0; i < 500; ++i) {
        const auto& p = prims[rng() % prims.size()];
        auto a = rnd(rng, 2000), b = rnd(rng, 2000);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(symbol(a * b, p.pi) == symbol(a, p.pi) * symbol(b, p.pi));
        // chi^3 trivial: (a/pi)(a^2/pi) in {0, 1}
        auto v = symbol(a, p.pi) * symbol(a * a, p.pi);
        CHECK((v.zero || v == CubicValue::omega_pow(0)));
    }
}

TEST_CASE("ray class group mod 9") {
    const auto& rc = ray_class_group9();
    CHECK(rc.order() == 9);
    long long prod = 1;
    for (int o : rc.generator_orders()) prod *= o;
    CHECK(prod == 9);

    // principal character is 1 on any pi coprime to 3
    auto prims = primary_primes_up_to(500);
    for (const auto& p : prims) {
        CHECK(std::abs(rc.character(0, p.pi) - std::complex<double>(1.0)) < 1e-14);
    }

    // orthogonality detector: indicator of == 1 (mod 9) on primary residues
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b) {
            EisensteinInt z{a, b};
            if (norm(z) % 3 == 0 || !is_primary(z)) continue;
            double want =
                congruent_mod(z, EisensteinInt{1, 0}, EisensteinInt{9, 0}) ? 1.0 : 0.0;
            CHECK(std::abs(rc.detector(z) - std::complex<double>(want)) < 1e-13);
        }

    // characters are multiplicative and associate-invariant
    std::mt19937_64 rng(9);
    for (int i = 0; i < 300; ++i) {
        auto x = rnd(rng, 400), y = rnd(rng, 400);
        if (x.is_zero() || y.is_zero()) continue;
        if (norm(x) % 3 == 0 || norm(y) % 3 == 0) continue;
        for (int t = 0; t < 9; ++t) {
            CHECK(std::abs(rc.character(t, x * y) - rc.character(t, x) * rc.character(t, y)) <
                  1e-12);
        }
        const auto& u = units()[rng() % 6];
        CHECK(std::abs(rc.character(4 % rc.order(), u * x) - rc.character(4 % rc.order(), x)) <
              1e-12);
    }
}
