#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "cubiclf/kernels.hpp"

using namespace cubiclf::kernels;

namespace {

struct Data {
    std::vector<double> phase;
    std::vector<std::uint8_t> cls;
    std::vector<std::complex<double>> coeff;
    std::vector<double> logn;
};

Data make_data(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ph(-3.0, 7.0), lg(0.0, 12.0), cf(-2.0, 2.0);
    Data d;
    for (std::size_t i = 0; i < n; ++i) {
        d.phase.push_back(ph(rng));
        d.cls.push_back(std::uint8_t(rng() % 3));
        d.coeff.push_back({cf(rng), cf(rng)});
        d.logn.push_back(lg(rng));
    }
    return d;
}

}  // namespace

TEST_CASE("scalar cis_class_sum against libm reference") {
    auto d = make_data(501, 11);
    auto got = cis_class_sum_scalar(d.phase.data(), d.cls.data(), d.phase.size());
    std::complex<double> want[3] = {0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < d.phase.size(); ++i) {
        double t = d.phase[i] - std::floor(d.phase[i]);
        want[d.cls[i]] += std::polar(1.0, 2.0 * std::numbers::pi * t);
    }
    for (int k = 0; k < 3; ++k) CHECK(std::abs(got.s[k] - want[k]) < 1e-11);
}

TEST_CASE("scalar exp_dot against naive evaluation") {
    auto d = make_data(1000, 12);
    std::complex<double> s{0.7, -23.0};
    auto got = exp_dot_scalar(d.coeff.data(), d.logn.data(), d.coeff.size(), s);
    std::complex<double> want = 0.0;
    for (std::size_t i = 0; i < d.coeff.size(); ++i)
        want += d.coeff[i] * std::exp(-s * d.logn[i]);
    CHECK(std::abs(got - want) < 1e-10 * (1.0 + std::abs(want)));
}

TEST_CASE("compensated sum handles cancellation") {
    std::vector<std::complex<double>> v;
    for (int i = 0; i < 2000; ++i) {
        v.push_back({1e16, -1e16});
        v.push_back({1.0, 1.0});
        v.push_back({-1e16, 1e16});
    }
    auto got = compensated_sum_scalar(v.data(), v.size());
    CHECK(got.real() == doctest::Approx(2000.0));
    CHECK(got.imag() == doctest::Approx(2000.0));
}

TEST_CASE("avx2 variants match scalar") {
    if (!avx2_supported()) {
        MESSAGE("avx2 not available; skipping equivalence checks");
        return;
    }
    for (std::size_t n : {0ul, 1ul, 3ul, 4ul, 5ul, 127ul, 4096ul, 10001ul}) {
        auto d = make_data(n, 100 + n);
        force_isa(Isa::avx2);
        auto a1 = cis_class_sum(d.phase.data(), d.cls.data(), n);
        auto e1 = exp_dot(d.coeff.data(), d.logn.data(), n, {1.3, 41.0});
        auto c1 = compensated_sum(d.coeff.data(), n);
        force_isa(Isa::scalar);
        auto a2 = cis_class_sum(d.phase.data(), d.cls.data(), n);
        auto e2 = exp_dot(d.coeff.data(), d.logn.data(), n, {1.3, 41.0});
        auto c2 = compensated_sum(d.coeff.data(), n);
        for (int k = 0; k < 3; ++k)
            CHECK(std::abs(a1.s[k] - a2.s[k]) < 1e-11 * (1.0 + std::abs(a2.s[k])));
        CHECK(std::abs(e1 - e2) < 1e-11 * (1.0 + std::abs(e2)));
        CHECK(std::abs(c1 - c2) < 1e-12 * (1.0 + std::abs(c2)));
    }
    force_isa(avx2_supported() ? Isa::avx2 : Isa::scalar);
}

TEST_CASE("exp_dot large negative exponents underflow cleanly") {
    std::vector<std::complex<double>> c{{1.0, 0.0}};
    std::vector<double> lg{40.0};
    for (auto isa : {Isa::scalar, Isa::avx2}) {
        if (isa == Isa::avx2 && !avx2_supported()) continue;
        force_isa(isa);
        auto v = exp_dot(c.data(), lg.data(), 1, {20.0, 0.0});  // e^{-800}
        CHECK(std::abs(v) < 1e-300);
    }
    force_isa(avx2_supported() ? Isa::avx2 : Isa::scalar);
}
