#include "cubiclf/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "cubiclf/primes.hpp"

namespace cubiclf {

namespace {

constexpr double kPi = std::numbers::pi;

const double kLanczos[9] = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7,
};

template <typename C>
C gamma_impl(C s) {
    if (value_of(s).real() < 0.5) {
        // reflection: Gamma(s) = pi / (sin(pi s) Gamma(1 - s))
        return C(kPi) / (sin(C(kPi) * s) * gamma_impl(C(1.0) - s));
    }
    C z = s - C(1.0);
    C x = C(kLanczos[0]);
    for (int i = 1; i < 9; ++i) x += C(kLanczos[i]) / (z + C(double(i)));
    C t = z + C(7.5);
    return C(std::sqrt(2.0 * kPi)) * exp((z + C(0.5)) * log(t) - t) * x;
}

// Dual needs sin/log/exp defined (dual.hpp); complex<double> uses std names.
using std::exp;
using std::log;
using std::pow;
using std::sin;

}  // namespace

cdouble gamma_c(cdouble s) { return gamma_impl<cdouble>(s); }
Dual gamma_dual(const Dual& s) { return gamma_impl<Dual>(s); }

cdouble digamma_c(cdouble s) {
    if (s.real() < 0.5) {
        // psi(s) = psi(1-s) - pi cot(pi s)
        return digamma_c(1.0 - s) - kPi * std::cos(kPi * s) / std::sin(kPi * s);
    }
    cdouble acc = 0.0;
    while (s.real() < 16.0) {
        acc -= 1.0 / s;
        s += 1.0;
    }
    static const double B[] = {1.0 / 6,  -1.0 / 30,   1.0 / 42,   -1.0 / 30,
                               5.0 / 66, -691.0 / 2730, 7.0 / 6};
    cdouble inv2 = 1.0 / (s * s);
    cdouble sum = std::log(s) - 0.5 / s;
    cdouble p = inv2;
    for (int k = 0; k < 7; ++k) {
        sum -= B[k] / (2.0 * (k + 1)) * p;
        p *= inv2;
    }
    return acc + sum;
}

cdouble hurwitz_zeta(cdouble s, double a) {
    if (s == cdouble(1.0, 0.0)) throw std::domain_error("hurwitz_zeta: pole at s = 1");
    if (a <= 0.0) throw std::domain_error("hurwitz_zeta: a <= 0");
    int M = std::max(18, int(std::abs(s.imag()) * 1.3) + 12);
    cdouble sum = 0.0;
    for (int n = 0; n < M; ++n) sum += std::pow(cdouble(n + a), -s);
    cdouble q = cdouble(M + a);
    sum += std::pow(q, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(q, -s);
    // Euler-Maclaurin correction terms
    static const double B2k[] = {1.0 / 6,       -1.0 / 30,      1.0 / 42,    -1.0 / 30,
                                 5.0 / 66,      -691.0 / 2730,  7.0 / 6,     -3617.0 / 510,
                                 43867.0 / 798, -174611.0 / 330, 854513.0 / 138};
    cdouble poch = s;  // (s)_{2k-1} rising factorial, k = 1 -> just s
    cdouble qpow = std::pow(q, -s - 1.0);
    double fact = 2.0;  // (2k)!
    cdouble corr = 0.0;
    for (int k = 1; k <= 11; ++k) {
        corr += B2k[k - 1] / fact * poch * qpow;
        // advance to k+1
        poch *= (s + double(2 * k - 1)) * (s + double(2 * k));
        qpow /= q * q;
        fact *= double(2 * k + 1) * double(2 * k + 2);
    }
    return sum + corr;
}

cdouble riemann_zeta(cdouble s) { return hurwitz_zeta(s, 1.0); }

cdouble dirichlet_L_chi3(cdouble s) {
    return std::pow(cdouble(3.0), -s) * (hurwitz_zeta(s, 1.0 / 3.0) - hurwitz_zeta(s, 2.0 / 3.0));
}

cdouble zeta_K(cdouble s) { return riemann_zeta(s) * dirichlet_L_chi3(s); }

cdouble zeta_K_euler(cdouble s, double cutoff) {
    auto ps = rational_primes(std::uint64_t(cutoff));
    cdouble logprod = 0.0;
    for (auto p : ps) {
        cdouble pv = std::pow(cdouble(double(p)), -s);
        if (p == 3) {
            logprod -= std::log(1.0 - pv);
        } else if (p % 3 == 1) {
            logprod -= 2.0 * std::log(1.0 - pv);
        } else {
            logprod -= std::log(1.0 - pv * pv);
        }
    }
    return std::exp(logprod);
}

cdouble zeta_K_j(cdouble s) { return zeta_K(s) * (1.0 - std::pow(cdouble(3.0), -s)); }
cdouble zeta_j_rational(cdouble s) {
    return riemann_zeta(s) * (1.0 - std::pow(cdouble(3.0), -s));
}

cdouble log_deriv_fd(const std::function<cdouble(cdouble)>& f, cdouble s, double step) {
    cdouble num = (f(s + step) - f(s - step)) / (2.0 * step);
    return num / f(s);
}

namespace {

// Legendre continued fraction for Gamma(s, z) by modified Lentz.
template <typename C>
C upper_gamma_cf(C s, cdouble z) {
    const double tiny = 1e-290;
    C b = C(z + 1.0) - s;
    C c = C(1.0 / tiny);
    C d = C(1.0) / b;
    C h = d;
    for (int i = 1; i <= 600; ++i) {
        C an = C(-double(i)) * (C(double(i)) - s);
        b += C(2.0);
        d = an * d + b;
        if (abs_v(d) < tiny) d = C(tiny);
        c = b + an / c;
        if (abs_v(c) < tiny) c = C(tiny);
        d = C(1.0) / d;
        C delta = d * c;
        h *= delta;
        if (abs_v(delta - C(1.0)) < 1e-16) {
            return exp(-C(z) + s * C(std::log(z))) * h;
        }
    }
    throw std::runtime_error("upper_gamma: continued fraction did not converge");
}

// Lower series gamma(s, z) = z^s e^{-z} sum_k z^k / (s (s+1) ... (s+k)).
template <typename C>
C upper_gamma_series(C s, cdouble z) {
    C ap = s;
    C sum = C(1.0) / s;
    C del = sum;
    for (int i = 0; i < 900; ++i) {
        ap += C(1.0);
        del *= C(z) / ap;
        sum += del;
        if (abs_v(del) < abs_v(sum) * 1e-17) {
            C lower = sum * exp(-C(z) + s * C(std::log(z)));
            return gamma_impl<C>(s) - lower;
        }
    }
    throw std::runtime_error("upper_gamma: series did not converge");
}

// Gamma(-m, z) = z^{-m} E_{m+1}(z) via the exponential-integral recurrence;
// value-only (no pole-free expression of d/ds is provided here).
cdouble upper_gamma_nonpos_int(int m, cdouble z) {
    const double euler = 0.57721566490153286;
    cdouble e1 = -euler - std::log(z);
    cdouble term(1.0, 0.0);
    for (int k = 1; k < 300; ++k) {
        term *= -z / double(k);
        cdouble add = -term / double(k);
        e1 += add;
        if (std::abs(add) < 1e-18 * (std::abs(e1) + 1e-30)) break;
    }
    cdouble en = e1;
    cdouble emz = std::exp(-z);
    for (int n = 1; n <= m; ++n) en = (emz - z * en) / double(n);
    return en * std::pow(z, -double(m));
}

template <typename C>
C upper_gamma_impl(C s, cdouble z) {
    if (z == cdouble(0.0)) return gamma_impl<C>(s);
    if (z.real() <= 0.0) throw std::domain_error("upper_gamma: Re(z) <= 0");
    double smag = std::abs(value_of(s));
    if (std::abs(z) >= smag + 2.0) return upper_gamma_cf<C>(s, z);
    cdouble sv = value_of(s);
    if (sv.real() < 0.75) {
        long long mr = std::llround(-sv.real());
        cdouble gap = sv + cdouble(double(mr));
        if (mr >= 0 && std::abs(gap) < 1e-6) {
            if (std::abs(gap) > 1e-12)
                throw std::domain_error("upper_gamma: s too close to a nonpositive integer");
            if constexpr (std::is_same_v<C, cdouble>) {
                return upper_gamma_nonpos_int(int(mr), z);
            } else {
                throw std::domain_error("upper_gamma: d/ds at nonpositive integers unsupported");
            }
        }
    }
    if (sv.real() < -0.5) {
        // lift to Re >= 1: Gamma(s,z) = (Gamma(s+1,z) - z^s e^{-z})/s
        int k = int(std::ceil(1.0 - sv.real()));
        C up = upper_gamma_impl<C>(s + C(double(k)), z);
        for (int j = k - 1; j >= 0; --j) {
            C sj = s + C(double(j));
            up = (up - exp(sj * C(std::log(z)) - C(z))) / sj;
        }
        return up;
    }
    return upper_gamma_series<C>(s, z);
}

}  // namespace

cdouble upper_gamma(cdouble s, cdouble z) { return upper_gamma_impl<cdouble>(s, z); }
Dual upper_gamma_dual(const Dual& s, cdouble z) { return upper_gamma_impl<Dual>(s, z); }

namespace {

cdouble simpson_rec(const std::function<cdouble(double)>& f, double a, double b, cdouble fa,
                    cdouble fm, cdouble fb, cdouble whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    cdouble flm = f(lm), frm = f(rm);
    cdouble left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    cdouble right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    cdouble delta = left + right - whole;
    if (depth <= 0) return left + right + delta / 15.0;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, tol * 0.5, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, tol * 0.5, depth - 1);
}

}  // namespace

cdouble integrate(const std::function<cdouble(double)>& f, double a, double b, double tol,
                  int max_depth) {
    // seed with a few panels so oscillation is not missed by the first probe
    const int panels = 8;
    cdouble total = 0.0;
    double h = (b - a) / panels;
    for (int i = 0; i < panels; ++i) {
        double x0 = a + i * h, x1 = x0 + h;
        cdouble f0 = f(x0), fm = f(0.5 * (x0 + x1)), f1 = f(x1);
        cdouble whole = (x1 - x0) / 6.0 * (f0 + 4.0 * fm + f1);
        total += simpson_rec(f, x0, x1, f0, fm, f1, whole, tol / panels, max_depth);
    }
    return total;
}

const WeightFunction& WeightFunction::bump() {
    static const WeightFunction w("bump");
    return w;
}

double WeightFunction::operator()(double t) const {
    if (t <= 1.0 || t >= 2.0) return 0.0;
    return std::exp(-1.0 / (t - 1.0) - 1.0 / (2.0 - t));
}

cdouble WeightFunction::mellin(cdouble s) const {
    return integrate([&](double t) { return (*this)(t)*std::pow(cdouble(t), s - 1.0); }, 1.0,
                     2.0, 1e-13);
}

double WeightFunction::mellin1() const {
    if (!m1_) m1_ = mellin(cdouble(1.0)).real();
    return *m1_;
}

double WeightFunction::integral_log() const {
    if (!ilog_)
        ilog_ = integrate([&](double t) { return cdouble((*this)(t)*std::log(t)); }, 1.0, 2.0,
                          1e-13)
                    .real();
    return *ilog_;
}

double DensityTestFunction::evaluate(double x) const {
    double t = kPi * support_a * x;
    if (std::abs(t) < 1e-8) return 1.0 - t * t / 3.0;
    double r = std::sin(t) / t;
    return r * r;
}

double DensityTestFunction::fourier(double u) const {
    double au = std::abs(u);
    if (au >= support_a) return 0.0;
    return (1.0 - au / support_a) / support_a;
}

DensityTestFunction fejer_pair(double a) {
    if (a <= 0.0) throw std::domain_error("fejer_pair: a <= 0");
    return DensityTestFunction{a, "fejer"};
}

ShiftExponent error_exponent(cdouble alpha, std::optional<cdouble> beta) {
    double ra = alpha.real();
    ShiftExponent out;
    out.alpha = alpha;
    out.beta = beta;
    out.delta = ra < 0.0 ? 2.0 / 11.0 : 0.0;
    double E = std::max(0.5, 5.0 / 6.0 - ra);
    E = std::max(E, 12.0 / 13.0 - 11.0 / 13.0 * ra);
    if (beta) {
        double rb = beta->real();
        E = std::max(E, 1.0 - rb);
        E = std::max(E, 1.0 - 3.0 * ra - 2.0 * rb);
        E = std::max(E, 1.0 - 13.0 / 15.0 * ra - 2.0 / 15.0 * rb);
    }
    out.E = E;
    return out;
}

}  // namespace cubiclf
