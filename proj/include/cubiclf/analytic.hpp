#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>

#include "cubiclf/dual.hpp"

namespace cubiclf {

using cdouble = std::complex<double>;

// Complex Gamma by Lanczos (g = 7, 9 terms) with reflection.
cdouble gamma_c(cdouble s);
Dual gamma_dual(const Dual& s);
// Gamma'/Gamma by asymptotic series + recurrence + reflection.
cdouble digamma_c(cdouble s);

// Hurwitz zeta(s, a) for real a > 0 by Euler-Maclaurin; s != 1.
cdouble hurwitz_zeta(cdouble s, double a);
cdouble riemann_zeta(cdouble s);
// L(s, chi_{-3}), the quadratic character mod 3, via Hurwitz zetas.
cdouble dirichlet_L_chi3(cdouble s);

// Dedekind zeta of Q(w): factorization path zeta(s) L(s, chi_{-3}).
cdouble zeta_K(cdouble s);
// Independent path: Euler product over primes with norm <= cutoff.
cdouble zeta_K_euler(cdouble s, double cutoff);
// 3-depleted versions: the Euler factor at the prime above 3 removed.
cdouble zeta_K_j(cdouble s);           // zeta_K(s) (1 - 3^{-s})
cdouble zeta_j_rational(cdouble s);    // zeta(s) (1 - 3^{-s})

// f'(s)/f(s) by central differences with the given step (pinned by a second
// step size in the tests).
cdouble log_deriv_fd(const std::function<cdouble(cdouble)>& f, cdouble s, double step = 1e-6);

// Upper incomplete gamma Gamma(s, z) for Re(z) > 0 (complex z supports the
// rotated-ray evaluation of completed L-functions at heights where the
// real-axis decomposition cancels catastrophically): Legendre continued
// fraction for |z| >= |s| + 2, else Gamma(s) minus the lower series. The
// Dual variant propagates d/ds through the same recurrences.
cdouble upper_gamma(cdouble s, cdouble z);
Dual upper_gamma_dual(const Dual& s, cdouble z);

// Adaptive Simpson quadrature (complex integrand, real interval).
cdouble integrate(const std::function<cdouble(double)>& f, double a, double b,
                  double tol = 1e-12, int max_depth = 40);

// Smooth nonnegative weight supported in (1,2): exp(-1/(t-1) - 1/(2-t)).
class WeightFunction {
  public:
    static const WeightFunction& bump();

    double operator()(double t) const;
    cdouble mellin(cdouble s) const;  // \int w(t) t^{s-1} dt
    double mellin1() const;           // \hat w(1) = \int w
    double integral_log() const;      // \int w(u) log u du
    const std::string& name() const { return name_; }

  private:
    explicit WeightFunction(std::string name) : name_(std::move(name)) {}
    std::string name_;
    mutable std::optional<double> m1_, ilog_;
};

// Fejer-kernel test function pair: h(x) = (sin(pi a x)/(pi a x))^2 with
// triangular Fourier transform supported in [-a, a].
struct DensityTestFunction {
    double support_a = 0.5;
    std::string name = "fejer";

    double evaluate(double x) const;
    double fourier(double u) const;  // \hat h(u) = (1/a) max(0, 1 - |u|/a)
    double integral() const { return 1.0 / support_a; }
    double hat_at_1() const { return fourier(1.0); }
};

DensityTestFunction fejer_pair(double a);

// Error exponents E(alpha, beta), E(alpha) = lim_{beta->inf}, delta(alpha).
struct ShiftExponent {
    cdouble alpha{0.0, 0.0};
    std::optional<cdouble> beta;
    double E = 0.0;
    double delta = 0.0;
};

ShiftExponent error_exponent(cdouble alpha, std::optional<cdouble> beta);

}  // namespace cubiclf
