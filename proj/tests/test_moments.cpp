#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cubiclf/cache.hpp"
#include "cubiclf/moments.hpp"

using namespace cubiclf;

TEST_CASE("residue identity") {
    // identical arguments degenerate to 1/9 on both sides
    auto [l, r] = residue_identity(cdouble(2.0), cdouble(2.0), 1000);
    CHECK(std::abs(l - cdouble(1.0 / 9.0)) < 1e-12);
    CHECK(std::abs(r - cdouble(1.0 / 9.0)) < 1e-12);
    // rapid convergence at (2, 2) with small cutoff
    auto [l2, r2] = residue_identity(cdouble(2.0), cdouble(2.1), 1000);
    CHECK(std::abs(l2 - r2) < 1e-8);
    // agreement tightens monotonically with the cutoff
    auto [a1, b1] = residue_identity(cdouble(0.9), cdouble(1.1), 3000);
    auto [a2, b2] = residue_identity(cdouble(0.9), cdouble(1.1), 30000);
    CHECK(std::abs(a2 - b2) < std::abs(a1 - b1));
    CHECK_THROWS_AS(residue_identity(cdouble(0.2), cdouble(1.0), 100), std::domain_error);
}

TEST_CASE("alpha = beta collapses to the weighted prime sum") {
    double X = 2500;
    auto r = ratios_sum(X, cdouble(0.2), cdouble(0.2));
    double F = family_F(X);
    CHECK(std::abs(r.lhs - cdouble(F)) <= 1e-10 * F);
    CHECK(std::abs(r.lhs.imag()) < 1e-12);
    // main term collapses to w-hat(1) X / 9 exactly (zeta ratio = 1)
    const auto& w = WeightFunction::bump();
    CHECK(std::abs(r.main_term - cdouble(w.mellin1() * X / 9.0)) < 1e-12 * r.main_term.real());
    CHECK(r.predicted_E == doctest::Approx(0.8));
}

TEST_CASE("large-beta degeneration of the negative moment") {
    double X = 4000;
    auto r = negative_moment(X, cdouble(5.0));
    double F = family_F(X);
    // 1/L(5.5) = 1 + O(2^{-5.5}) termwise, so LHS tracks the plain sum
    CHECK(std::abs(r.lhs - cdouble(F)) < 0.06 * F);
    const auto& w = WeightFunction::bump();
    CHECK(std::abs(r.main_term - cdouble(w.mellin1() * X / 9.0 * (1.0 - std::pow(3.0, -5.5)))) <
          1e-10 * r.main_term.real());
}

TEST_CASE("ratios LHS equals the Mellin transform of the truncated triple series") {
    // (1/2 pi i) int A(s, 1/2+a, 1/2+b) X^s w-hat(s) ds over a vertical line
    // reduces, for the truncated family, to the exact weighted sum.
    double X = 400;
    cdouble alpha(0.25, 0.0), beta(0.3, 0.0);
    auto r = ratios_sum(X, alpha, beta);

    // recover the per-prime ratio data from two probe values of mds_partial:
    // A(s) = sum_i c_i N_i^{-s}, so solve on the family norms directly.
    auto fam = sieve_family(2.0 * X + 1.0);
    std::vector<double> norms;
    for (const auto& p : fam) norms.push_back(double(p.norm));
    // c_i via one mds evaluation per distinct exponent basis would be ill-
    // conditioned; instead recompute the same quantities mds uses and verify
    // mds at a handful of s, then run the contour with the cached values.
    std::vector<cdouble> ci(norms.size());
    for (std::size_t i = 0; i < norms.size(); ++i) {
        // difference trick: restrict the family to norms <= N_i
        cdouble hi = mds_partial(cdouble(3.0), 0.5 + alpha, 0.5 + beta, norms[i] + 0.5);
        cdouble lo = i == 0 ? cdouble(0.0)
                            : mds_partial(cdouble(3.0), 0.5 + alpha, 0.5 + beta,
                                          norms[i - 1] + 0.5);
        ci[i] = (hi - lo) * std::pow(cdouble(norms[i]), cdouble(3.0));
    }
    const auto& w = WeightFunction::bump();
    cdouble quad = 0.0;
    double c = 1.4, T = 220.0, dt = 0.02;  // trapezoid; decay is superalgebraic
    for (double t = -T; t <= T; t += dt) {
        cdouble s(c, t);
        cdouble A = 0.0;
        for (std::size_t i = 0; i < norms.size(); ++i)
            A += ci[i] * std::pow(cdouble(norms[i]), -s);
        quad += A * std::pow(cdouble(X), s) * w.mellin(s) * dt;
    }
    quad /= 2.0 * std::numbers::pi;
    CHECK(std::abs(quad - r.lhs) < 2e-6 * (1.0 + std::abs(r.lhs)));
}

TEST_CASE("mds_partial basics") {
    CHECK(mds_partial(cdouble(4.0), cdouble(2.0), cdouble(2.0), 10.0) == cdouble(0.0));
    auto a = mds_partial(cdouble(4.0), cdouble(2.0), cdouble(2.0), 4000.0);
    auto b = mds_partial(cdouble(4.0), cdouble(2.0), cdouble(2.0), 8000.0);
    CHECK(std::abs(a - b) < 1e-8);
    CHECK_THROWS_AS(mds_partial(cdouble(4.0), cdouble(0.3), cdouble(2.0), 100.0),
                    std::domain_error);
}

TEST_CASE("first moment smoke and report fields") {
    auto r = first_moment(3000, cdouble(0.0));
    CHECK(r.kind == "first");
    CHECK(r.family_size > 10);
    CHECK(std::abs(r.lhs.imag()) < 1e-10);  // real shifts, conjugate-paired family
    CHECK(r.ratio.real() > 0.2);
    CHECK(r.ratio.real() < 2.0);
    CHECK(r.predicted_E == doctest::Approx(12.0 / 13.0));
    auto j = r.to_json();
    CHECK(j.find("\"kind\"") != std::string::npos);
    CHECK_THROWS_AS(first_moment(3000, cdouble(-0.2)), std::domain_error);
}

TEST_CASE("logderiv moment preconditions and trend sanity") {
    CHECK_THROWS_AS(logderiv_moment(1000, cdouble(0.6)), std::domain_error);
    auto r = logderiv_moment(4000, cdouble(0.45));
    CHECK(std::abs(r.lhs.imag()) < 1e-9);
    CHECK(r.main_term.real() < 0.0);  // zeta log-derivative side is negative here
}

TEST_CASE("q-side reality and trend sanity") {
    auto r = q_first_moment(4000, cdouble(0.0));
    CHECK(std::abs(r.lhs.imag()) < 1e-8 * (1.0 + std::abs(r.lhs)));
    CHECK(r.ratio.real() > 0.2);
    CHECK(r.ratio.real() < 2.0);
    auto rn = q_negative_moment(4000, cdouble(5.0));
    CHECK(std::abs(rn.lhs.imag()) < 1e-8 * (1.0 + std::abs(rn.lhs)));
    // conjugate-pair identity for complex shifts: LHS is a sum S + conj(S'),
    // equal to twice the real part when the shifts are real
    auto rc = q_ratios_sum(2000, cdouble(0.2, 0.1), cdouble(0.3, -0.05));
    CHECK(std::isfinite(rc.lhs.real()));
}

TEST_CASE("density smoke at tiny X") {
    set_cache_dir("/tmp/cubiclf-test-cache");
    FamilyOptions opt;
    opt.zero_cache_dir = "/tmp/cubiclf-test-cache";
    auto d = one_level_density(500, 0.4, &opt);
    CHECK(d.density_leading == doctest::Approx(2.5));  // 1/a
    CHECK(std::abs(d.lhs.imag()) < 1e-12);
    CHECK(d.lhs.real() > 0.0);
    CHECK(d.zero_count > 100);
    CHECK(d.family_size >= 5);
    // reports carry the predicted exponent fields and weight name
    CHECK(d.weight_name == "bump");
    // rerun hits the zero cache and reproduces the same value exactly
    auto d2 = one_level_density(500, 0.4, &opt);
    CHECK(d2.lhs == d.lhs);
}
