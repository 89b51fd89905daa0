#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cubiclf/eisenstein.hpp"

using namespace cubiclf;

namespace {
EisensteinInt rnd(std::mt19937_64& rng, long long range) {
    return {int128((long long)(rng() % (2 * range + 1))) - range,
            int128((long long)(rng() % (2 * range + 1))) - range};
}
}  // namespace

TEST_CASE("norm basics") {
    CHECK(norm(kOmega) == 1);
    CHECK(norm(EisensteinInt{3, 0}) == 9);
    CHECK(norm(EisensteinInt{2, 3}) == 7);  // 4 - 6 + 9
    // z * conj(z) = norm(z) as a rational integer
    EisensteinInt z{2, 3};
    CHECK(z * conj(z) == EisensteinInt{7, 0});
}

TEST_CASE("norm multiplicative on random pairs") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 10000; ++i) {
        auto x = rnd(rng, 1000000), y = rnd(rng, 1000000);
        CHECK(norm(x * y) == norm(x) * norm(y));
    }
}

TEST_CASE("units") {
    int count = 0;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            if (norm(EisensteinInt{a, b}) == 1) ++count;
    CHECK(count == 6);
    for (const auto& u : units()) CHECK(is_unit(u));
}

TEST_CASE("divrem examples") {
    auto d1 = divrem(EisensteinInt{6, 9}, EisensteinInt{2, 3});
    CHECK(d1.q == EisensteinInt{3, 0});
    CHECK(d1.r.is_zero());
    auto d2 = divrem(EisensteinInt{1, 0}, EisensteinInt{2, 3});
    CHECK(d2.q.is_zero());
    CHECK(d2.r == EisensteinInt{1, 0});
    // (5+w, 2-w): brute-force window oracle for the remainder bound
    EisensteinInt x{5, 1}, y{2, -1};
    auto d3 = divrem(x, y);
    CHECK(x == d3.q * y + d3.r);
    int128 best = norm(x);
    for (int a = -10; a <= 10; ++a)
        for (int b = -10; b <= 10; ++b) {
            int128 n = norm(x - EisensteinInt{a, b} * y);
            if (n < best) best = n;
        }
    CHECK(norm(d3.r) < norm(y));
    CHECK(norm(d3.r) == best);  // nearest-point rounding is norm-minimal here
}

TEST_CASE("divrem properties") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 10000; ++i) {
        auto x = rnd(rng, 100000), y = rnd(rng, 300);
        if (y.is_zero()) continue;
        auto d = divrem(x, y);
        CHECK(x == d.q * y + d.r);
        CHECK(norm(d.r) < norm(y));
    }
    CHECK_THROWS_AS(divrem(EisensteinInt{1, 0}, EisensteinInt{0, 0}), std::domain_error);
}

TEST_CASE("gcd examples") {
    // 7 = N(2+3w) splits; gcd is an associate of 2+3w
    auto g = gcd(EisensteinInt{2, 3}, EisensteinInt{7, 0});
    CHECK(norm(g) == 7);
    CHECK(divides(g, EisensteinInt{2, 3}));
    CHECK(divides(g, EisensteinInt{7, 0}));
    CHECK(gcd(EisensteinInt{5, 0}, EisensteinInt{7, 0}) == EisensteinInt{1, 0});
    // gcd(z, 0) = normalized z
    CHECK(gcd(EisensteinInt{2, 3}, EisensteinInt{0, 0}) ==
          normalize_associate(EisensteinInt{2, 3}));
    CHECK_THROWS_AS(gcd(EisensteinInt{0, 0}, EisensteinInt{0, 0}), std::domain_error);
}

TEST_CASE("primary associate") {
    CHECK(primary_associate(EisensteinInt{1, 0}) == EisensteinInt{1, 0});
    CHECK(primary_associate(EisensteinInt{2, 3}) == EisensteinInt{-2, -3});
    CHECK(primary_associate(EisensteinInt{17, 0}) == EisensteinInt{-17, 0});
    CHECK_THROWS_AS(primary_associate(kLambda), std::domain_error);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 2000; ++i) {
        auto z = rnd(rng, 100000);
        if (z.is_zero() || norm(z) % 3 == 0) continue;
        auto p = primary_associate(z);
        CHECK(is_primary(p));
        CHECK(primary_associate(p) == p);  // idempotent
        int count = 0;
        for (const auto& u : units())
            if (is_primary(u * z)) ++count;
        CHECK(count == 1);  // exactly one primary associate
    }
}

TEST_CASE("congruences") {
    CHECK(congruent_mod(EisensteinInt{-17, 0}, EisensteinInt{1, 0}, EisensteinInt{9, 0}));
    CHECK_FALSE(congruent_mod(kOmega, EisensteinInt{1, 0}, EisensteinInt{9, 0}));
    CHECK(congruent_mod(EisensteinInt{5, 7}, EisensteinInt{5, 7}, EisensteinInt{3, 1}));
}

TEST_CASE("residue systems") {
    auto r1 = residues(EisensteinInt{1, 0});
    CHECK(r1.representatives.size() == 1);
    CHECK(residues(EisensteinInt{2, 0}).representatives.size() == 4);
    auto r7 = residues(EisensteinInt{2, 3});
    REQUIRE(r7.representatives.size() == 7);
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = i + 1; j < 7; ++j)
            CHECK_FALSE(divides(EisensteinInt{2, 3},
                                r7.representatives[i] - r7.representatives[j]));
    CHECK_THROWS_AS(residues(EisensteinInt{100000, 3}, 1000), std::length_error);
}

TEST_CASE("canonical representative is a bijection onto the box") {
    std::mt19937_64 rng(4);
    for (EisensteinInt m : {EisensteinInt{2, 3}, EisensteinInt{4, 1}, EisensteinInt{5, 0}}) {
        auto sys = residues(m);
        for (int i = 0; i < 200; ++i) {
            auto z = rnd(rng, 500);
            auto c = canonical_rep(z, m);
            CHECK(divides(m, z - c));
            bool found = false;
            for (const auto& r : sys.representatives)
                if (r == c) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("text form round trip") {
    for (const char* s : {"-2-3*w", "w", "-w", "17", "0", "1+w", "5-9*w"}) {
        auto z = parse_eisenstein(s);
        CHECK(parse_eisenstein(to_string(z)) == z);
    }
    CHECK(parse_eisenstein("2+3w") == EisensteinInt{2, 3});
    CHECK_THROWS_AS(parse_eisenstein("abc"), std::invalid_argument);
}

TEST_CASE("overflow is detected") {
    int128 big = int128(1) << 100;
    EisensteinInt z{big, big};
    CHECK_THROWS_AS(z * z, std::overflow_error);
}
