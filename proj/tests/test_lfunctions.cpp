#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "cubiclf/gauss.hpp"
#include "cubiclf/lfunctions.hpp"

using namespace cubiclf;

namespace {

const std::vector<PrimaryPrime>& family() {
    static auto fam = sieve_family(5000);
    return fam;
}

// brute-force ideal coefficient oracle: enumerate lattice points of norm n,
// group into ideals (one primary generator per ideal, with lambda-power
// cofactors for the ramified part), and sum chi over them.
cdouble ideal_coeff_oracle(const CubicCharacter& chi, int n) {
    cdouble sum = 0.0;
    // ideals of norm n <-> elements z = u * (1-w)^e * g, g primary, up to units;
    // enumerate one generator per ideal by scanning the lattice and keeping a
    // canonical representative per associate class
    std::map<std::pair<long long, long long>, bool> seen;
    for (long long a = -80; a <= 80; ++a)
        for (long long b = -80; b <= 80; ++b) {
            EisensteinInt z{a, b};
            if (norm(z) != int128(n)) continue;
            // canonical associate: minimize (a, b) lexicographically over units
            EisensteinInt best = z;
            for (const auto& u : units()) {
                EisensteinInt w = u * z;
                if (std::pair<long long, long long>{(long long)w.a, (long long)w.b} <
                    std::pair<long long, long long>{(long long)best.a, (long long)best.b})
                    best = w;
            }
            auto key = std::pair<long long, long long>{(long long)best.a, (long long)best.b};
            if (seen[key]) continue;
            seen[key] = true;
            sum += chi(z).to_complex();
        }
    return sum;
}

}  // namespace

TEST_CASE("hecke coefficients against the lattice oracle") {
    ensure_prime_ideals(4000);
    auto h = make_hecke_handle(family()[0], false, 2.0, 200);
    CHECK(h.coeff[1] == cdouble(1.0));
    for (int n : {2, 3, 4, 6, 7, 9, 12, 13, 21, 49, 63, 91}) {
        cdouble want = ideal_coeff_oracle(h.character, n);
        CHECK(std::abs(h.coeff[n] - want) < 1e-12);
    }
    // conjugate handle has conjugate coefficients
    auto hb = make_hecke_handle(family()[0], true, 2.0, 200);
    for (int n = 1; n <= 100; ++n) CHECK(std::abs(hb.coeff[n] - std::conj(h.coeff[n])) < 1e-13);
}

TEST_CASE("handles require the family congruence") {
    PrimaryPrime p7 = split_rational_prime(7);  // 7-norm prime is not == 1 mod 9
    CHECK_THROWS_AS(make_hecke_handle(p7, false), std::domain_error);
}

TEST_CASE("root numbers lie on the unit circle") {
    ensure_prime_ideals(4000);
    for (std::size_t i = 0; i < 6 && i < family().size(); ++i) {
        auto h = make_hecke_handle(family()[i], false);
        CHECK(std::abs(std::abs(h.root_number) - 1.0) < 1e-8);
    }
}

TEST_CASE("two evaluation paths at s = 2") {
    ensure_prime_ideals(200000);
    auto h = make_hecke_handle(family()[1], false, 1.0, 200000);
    cdouble direct = dirichlet_series(h, cdouble(2.0));
    cdouble euler = euler_product(h, cdouble(2.0), 150000);
    cdouble afe = completed_L(h, cdouble(2.0)) / gamma_prefactor(h, cdouble(2.0));
    CHECK(std::abs(direct - euler) < 1e-8);
    CHECK(std::abs(direct - afe) < 1e-8);
}

TEST_CASE("functional equation and reflection formula") {
    ensure_prime_ideals(5000);
    std::mt19937_64 rng(41);
    for (std::size_t i = 0; i < 3; ++i) {
        auto h = make_hecke_handle(family()[i], false, 7.0);
        auto hb = make_hecke_handle(family()[i], true, 7.0);
        double N = double(h.conductor_norm);
        for (int k = 0; k < 10; ++k) {
            cdouble s(0.1 + 0.8 * (rng() % 1000) / 1000.0, -6.0 + 12.0 * (rng() % 1000) / 1000.0);
            cdouble lhs = completed_L(h, s);
            cdouble rhs = h.root_number * completed_L(hb, 1.0 - s);
            CHECK(std::abs(lhs - rhs) < 1e-6 * std::abs(lhs));
            // \eqref-style reflection for L itself:
            // L(s) = g (|D|)^{1/2-s} N^{-s} (2pi)^{2s-1} Gamma(1-s)/Gamma(s) L(1-s, bar)
            cdouble g = h.root_number * std::sqrt(N);
            cdouble pref = g * std::pow(cdouble(3.0), 0.5 - s) * std::pow(cdouble(N), -s) *
                           std::pow(cdouble(2.0 * std::numbers::pi), 2.0 * s - 1.0) *
                           gamma_c(1.0 - s) / gamma_c(s);
            cdouble l1 = hecke_L(h, s);
            cdouble l2 = pref * hecke_L(hb, 1.0 - s);
            CHECK(std::abs(l1 - l2) < 1e-6 * (1.0 + std::abs(l1)));
        }
        // conjugation symmetry at the center
        cdouble v = hecke_L(h, cdouble(0.5));
        cdouble vb = hecke_L(hb, cdouble(0.5));
        CHECK(std::abs(std::conj(v) - vb) < 1e-10);
    }
}

TEST_CASE("line evaluator equals the general evaluator") {
    ensure_prime_ideals(20000);
    auto h = make_hecke_handle(family()[2], false, 30.0);
    for (double t : {0.0, 0.9, 7.3, 14.8, 22.0, 29.0, -17.5}) {
        cdouble a = completed_L(h, cdouble(0.5, t));
        cdouble b = completed_L_line(h, t);
        CHECK(std::abs(a - b) <= 1e-7 * std::abs(a));
    }
}

TEST_CASE("log derivative") {
    ensure_prime_ideals(5000);
    auto h = make_hecke_handle(family()[0], false, 3.0);
    // against the termwise Dirichlet series of -L'/L at s = 2
    cdouble want = 0.0;
    for (const auto& q : primary_primes_up_to(3000)) {
        double lgN = std::log(double(q.norm));
        cdouble chi = h.character(q.pi).to_complex();
        cdouble chik = 1.0;
        for (int k = 1; std::pow(double(q.norm), k) < 3000; ++k) {
            chik *= chi;
            want -= lgN * chik * std::pow(double(q.norm), -2.0 * k);
        }
    }
    {  // ramified prime
        cdouble chi = h.character(kLambda).to_complex();
        cdouble chik = 1.0;
        for (int k = 1; std::pow(3.0, k) < 3000; ++k) {
            chik *= chi;
            want -= std::log(3.0) * chik * std::pow(3.0, -2.0 * k);
        }
    }
    CHECK(std::abs(log_deriv(h, cdouble(2.0)) - want) < 1e-8);

    // central finite differences of hecke_L, step 1e-4, pinned by 2e-4
    for (std::size_t i = 0; i < 3; ++i) {
        auto hh = make_hecke_handle(family()[i], false, 3.0);
        cdouble s(0.8, 0.0);
        cdouble ld = log_deriv(hh, s);
        for (double st : {1e-4, 2e-4}) {
            cdouble fd = (hecke_L(hh, s + st) - hecke_L(hh, s - st)) / (2.0 * st) / hecke_L(hh, s);
            CHECK(std::abs(ld - fd) < 1e-4);
        }
    }
    // conjugation: L'/L(conj s, bar chi) = conj(L'/L(s, chi))
    auto hb = make_hecke_handle(family()[0], true, 3.0);
    cdouble s(0.8, 1.1);
    CHECK(std::abs(log_deriv(hb, std::conj(s)) - std::conj(log_deriv(h, s))) < 1e-8);
}

TEST_CASE("dirichlet side") {
    ensure_prime_ideals(5000);
    int checked = 0;
    for (const auto& pp : family()) {
        if (pp.splitting != Splitting::split) continue;
        if (++checked > 3) break;
        // tau identity against the K-side Gauss sum
        cdouble tau = induced_tau(pp);
        cdouble g = gauss_sum_prime(EisensteinInt{1, 0}, pp).value;
        CHECK(std::abs(tau - g) < 1e-9 * std::sqrt(double(pp.norm)));
        // cubic character: chi(n)^3 = 1 on units mod p
        auto h = make_dirichlet_handle(pp, false, 6.0);
        std::mt19937_64 rng(47);
        for (int k = 0; k < 40; ++k) {
            std::uint64_t n = 1 + rng() % (pp.norm - 1);
            auto v = h.character(EisensteinInt{int128(n), 0});
            if (!v.zero) {
                auto c = v.to_complex();
                CHECK(std::abs(c * c * c - cdouble(1.0)) < 1e-12);
            }
        }
        // Q-side functional equation with parity 0
        auto hb = make_dirichlet_handle(pp, true, 6.0);
        for (cdouble s : {cdouble(0.3, 1.2), cdouble(0.62, -3.0)}) {
            cdouble lhs = completed_L(h, s);
            cdouble rhs = h.root_number * completed_L(hb, 1.0 - s);
            CHECK(std::abs(lhs - rhs) < 1e-6 * std::abs(lhs));
        }
        // direct series vs completed at s = 2
        auto hbig = make_dirichlet_handle(pp, false, 1.0, 100000);
        cdouble d = dirichlet_series(hbig, cdouble(2.0));
        cdouble a = completed_L(h, cdouble(2.0)) / gamma_prefactor(h, cdouble(2.0));
        CHECK(std::abs(d - a) < 1e-7);
    }
    CHECK(checked >= 3);
    // non-split input refused
    for (const auto& pp : family())
        if (pp.splitting == Splitting::inert) {
            CHECK_THROWS_AS(make_dirichlet_handle(pp, false), std::domain_error);
            CHECK_THROWS_AS(induced_tau(pp), std::domain_error);
            break;
        }
}

TEST_CASE("zero finder") {
    ensure_prime_ideals(20000);
    auto h = make_hecke_handle(family()[0], false, 13.0);
    auto zl = find_zeros(h, 12.0);
    REQUIRE(zl.verified);
    CHECK((long long)zl.ordinates.size() == zl.winding_count);
    // conjugate character zeros mirror gamma <-> -gamma
    auto hb = make_hecke_handle(family()[0], true, 13.0);
    auto zlb = find_zeros(hb, 12.0);
    REQUIRE(zlb.verified);
    REQUIRE(zlb.ordinates.size() == zl.ordinates.size());
    for (std::size_t i = 0; i < zl.ordinates.size(); ++i)
        CHECK(std::abs(zl.ordinates[i] + zlb.ordinates[zlb.ordinates.size() - 1 - i]) < 1e-6);
    // empty list below the lowest zero
    double lowest = 1e9;
    for (double g : zl.ordinates) lowest = std::min(lowest, std::abs(g));
    auto zl0 = find_zeros(h, lowest * 0.5);
    CHECK(zl0.verified);
    CHECK(zl0.ordinates.empty());
    // insufficient tmax is refused
    CHECK_THROWS_AS(find_zeros(h, 40.0), std::domain_error);
}
