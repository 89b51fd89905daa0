#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "cubiclf/analytic.hpp"
#include "cubiclf/primes.hpp"
#include "cubiclf/symbols.hpp"

namespace cubiclf {

enum class LSide { heckeK, dirichletQ };

// A cubic character of prime modulus pi == 1 (mod 9) together with the
// cached coefficient and root-number data needed for numerical evaluation.
//
// K side: a(n) = sum over ideals of norm n of chi(ideal); conductor (pi).
// Q side: a(n) = chi(n) for the induced cubic Dirichlet character mod p.
//
// The completed function is evaluated by the smoothed approximate
// functional equation with incomplete-gamma weights along a ray rotated
// by phi(Im s) into the upper/lower half-plane; the rotation keeps the
// term sizes commensurate with |Lambda| at heights where the real-axis
// decomposition cancels catastrophically.
struct LSeriesHandle {
    CubicCharacter character;
    PrimaryPrime prime;
    LSide side = LSide::heckeK;
    std::uint64_t conductor_norm = 0;
    std::vector<cdouble> coeff;     // a(n), 1-based at index 1
    std::vector<cdouble> coeff_conj;
    cdouble root_number{1.0, 0.0};  // W(chi) resp. tau(chi)/sqrt(p)
    double afe_scale = 1.0;         // K: c = sqrt(3N)/(2 pi); Q: unused
    double tmax = 5.0;              // height the coefficient cutoff supports

    std::uint64_t n_coeff() const { return coeff.empty() ? 0 : coeff.size() - 1; }
};

// Build handles. tmax controls the coefficient cutoff so the rotated AFE
// stays accurate for |Im s| <= tmax; extra_terms extends the direct-series
// cutoff beyond the AFE requirement.
LSeriesHandle make_hecke_handle(const PrimaryPrime& pi, bool conjugated, double tmax = 5.0,
                                std::uint64_t min_terms = 0);
LSeriesHandle make_dirichlet_handle(const PrimaryPrime& pi, bool conjugated, double tmax = 5.0,
                                    std::uint64_t min_terms = 0);

// Pre-extends the shared prime-ideal table; call before building handles in
// parallel (the table is append-only and not otherwise synchronized).
void ensure_prime_ideals(double limit);

// Plain truncated Dirichlet series over the cached coefficients.
cdouble dirichlet_series(const LSeriesHandle& h, cdouble s);
// Truncated Euler product (K side), independent cross-check path.
cdouble euler_product(const LSeriesHandle& h, cdouble s, double cutoff);

// Completed Lambda(s, chi) by the rotated-ray AFE.
cdouble completed_L(const LSeriesHandle& h, cdouble s);
// Value together with d/ds, by dual-number propagation through the AFE.
Dual completed_L_dual(const LSeriesHandle& h, cdouble s);
// Fast critical-line evaluator Lambda(1/2 + it): conjugate-symmetric
// weights plus a marching Gauss-Legendre accumulation of the incomplete
// gammas along the ray. Agrees with completed_L to ~1e-11.
cdouble completed_L_line(const LSeriesHandle& h, double t);

// Gamma-factor prefactor: Lambda(s) = prefactor(s) * L(s).
cdouble gamma_prefactor(const LSeriesHandle& h, cdouble s);

// L(s, chi): direct series for Re(s) >= 1.25, reflected through the
// completed function for 0 < Re(s) < 1.25.
cdouble hecke_L(const LSeriesHandle& h, cdouble s);

// L'/L by the differentiated AFE; cross-checked in tests against central
// finite differences of hecke_L.
cdouble log_deriv(const LSeriesHandle& h, cdouble s);

// tau(chi_{j,pi}) = sum_{x mod p} chi(x) e(x/p) for split pi (Q side).
cdouble induced_tau(const PrimaryPrime& pi);

struct ZeroList {
    std::vector<double> ordinates;  // sorted, |gamma| <= height
    double height = 0.0;            // effective T after edge adjustment
    long long winding_count = 0;    // argument-principle count on the box
    bool verified = false;          // refined count == winding count
    std::string message;
};

// All zeros of Lambda(s, chi) with |Im s| <= T (edge-adjusted upward by at
// most 0.2), by argument-principle counting on the rectangle
// [-0.25, 1.25] x [-T, T] plus refinement of |Lambda| minima on the line.
ZeroList find_zeros(const LSeriesHandle& h, double T);

}  // namespace cubiclf
