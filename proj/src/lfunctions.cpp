#include "cubiclf/lfunctions.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>

#include "cubiclf/gauss.hpp"
#include "cubiclf/kernels.hpp"

namespace cubiclf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kXmax = 40.0;          // e^{-40} tail cut for the AFE weights
constexpr double kRotBudget = 15.0;     // digits ceded to rotation-limited cancellation

// Shared prime-ideal table (generators of the prime ideals coprime to 3),
// grown on demand; extend single-threaded via ensure_prime_ideals before
// parallel handle builds.
std::vector<PrimaryPrime>& ideal_table() {
    static std::vector<PrimaryPrime> t;
    return t;
}
double& ideal_limit() {
    static double lim = 0.0;
    return lim;
}
std::mutex g_ideal_mu;

const std::vector<PrimaryPrime>& ideals_up_to(double limit) {
    std::lock_guard<std::mutex> lock(g_ideal_mu);
    if (limit > ideal_limit()) {
        double newlim = std::max(limit, 2048.0);
        ideal_table() = primary_primes_up_to(newlim);
        ideal_limit() = newlim;
    }
    return ideal_table();
}

double rotation_angle(double t, LSide side) {
    double at = std::abs(t);
    if (at < 1e-12) return 0.0;
    double budget = side == LSide::heckeK ? kRotBudget : 2.0 * kRotBudget;
    double phi = kPi / 2.0 - budget / at;
    if (phi <= 0.0) return 0.0;
    return t > 0 ? phi : -phi;
}

std::uint64_t terms_for(const LSeriesHandle& h, double phi) {
    double c = std::cos(phi);
    if (h.side == LSide::heckeK) return std::uint64_t(std::ceil(kXmax * h.afe_scale / c)) + 1;
    return std::uint64_t(std::ceil(std::sqrt(kXmax * double(h.conductor_norm) / (kPi * c)))) + 1;
}

// x-argument of the incomplete gamma for term n (before rotation)
double term_x(const LSeriesHandle& h, std::uint64_t n) {
    if (h.side == LSide::heckeK) return double(n) / h.afe_scale;
    return kPi * double(n) * double(n) / double(h.conductor_norm);
}

// coefficient sieve: A[l^k m] += A[m] * c_k over m coprime to l
void apply_local_factor(std::vector<cdouble>& A, std::uint64_t ell,
                        const std::vector<cdouble>& ck) {
    std::uint64_t M = A.size() - 1;
    for (std::uint64_t m = 1; m * ell <= M; ++m) {
        if (m % ell == 0) continue;
        if (A[m] == cdouble(0.0)) continue;
        std::uint64_t q = ell;
        for (std::size_t k = 1; k < ck.size() && q <= M / m; ++k, q *= ell) {
            A[m * q] += A[m] * ck[k];
            if (q > M / ell) break;
        }
    }
}

std::vector<cdouble> hecke_coefficients(const CubicCharacter& chi, std::uint64_t M) {
    std::vector<cdouble> A(M + 1, cdouble(0.0));
    A[1] = 1.0;
    if (M < 2) return A;
    const auto& tab = ideals_up_to(double(M));
    // group generators of equal norm (split conjugate pairs)
    std::vector<std::pair<std::uint64_t, std::vector<cdouble>>> locals;
    // ramified prime above 3
    locals.push_back({3, {chi(kLambda).to_complex()}});
    for (std::size_t i = 0; i < tab.size() && tab[i].norm <= M; ++i) {
        std::uint64_t ell = tab[i].norm;
        cdouble v = chi(tab[i].pi).to_complex();
        if (!locals.empty() && locals.back().first == ell)
            locals.back().second.push_back(v);
        else
            locals.push_back({ell, {v}});
    }
    for (auto& [ell, vs] : locals) {
        int kmax = int(std::log(double(M)) / std::log(double(ell))) + 1;
        std::vector<cdouble> ck(kmax + 1, cdouble(0.0));
        ck[0] = 1.0;
        if (vs.size() == 1) {
            for (int k = 1; k <= kmax; ++k) ck[k] = ck[k - 1] * vs[0];
        } else {
            // complete homogeneous sums of (v1, v2)
            for (int k = 1; k <= kmax; ++k) {
                cdouble s = 0.0, p1 = 1.0;
                for (int i = 0; i <= k; ++i) {
                    cdouble p2 = 1.0;
                    for (int j = 0; j < k - i; ++j) p2 *= vs[1];
                    s += p1 * p2;
                    p1 *= vs[0];
                }
                ck[k] = s;
            }
        }
        apply_local_factor(A, ell, ck);
    }
    return A;
}

std::vector<cdouble> dirichlet_coefficients(const CubicCharacter& chi, std::uint64_t M) {
    std::vector<cdouble> A(M + 1, cdouble(0.0));
    A[1] = 1.0;
    if (M < 2) return A;
    for (std::uint64_t p : rational_primes(M)) {
        cdouble v = chi(EisensteinInt{int128(p), 0}).to_complex();
        if (v == cdouble(0.0)) continue;  // local factor 1 at the conductor
        int kmax = int(std::log(double(M)) / std::log(double(p))) + 1;
        std::vector<cdouble> ck(kmax + 1, cdouble(0.0));
        ck[0] = 1.0;
        for (int k = 1; k <= kmax; ++k) ck[k] = ck[k - 1] * v;
        apply_local_factor(A, p, ck);
    }
    return A;
}

void check_family(const PrimaryPrime& pi) {
    if (!congruent_mod(pi.pi, EisensteinInt{1, 0}, EisensteinInt{9, 0}))
        throw std::domain_error("L-series handle: pi != 1 (mod 9), character not trivial on units");
}

template <typename C>
C seed_like(cdouble v, const C&);
template <>
cdouble seed_like<cdouble>(cdouble v, const cdouble&) {
    return v;
}
template <>
Dual seed_like<Dual>(cdouble v, const Dual&) {
    return Dual(v);
}

cdouble upper_gamma_impl_dispatch(cdouble s, cdouble z) { return upper_gamma(s, z); }
Dual upper_gamma_impl_dispatch(const Dual& s, cdouble z) { return upper_gamma_dual(s, z); }

template <typename C>
C completed_impl(const LSeriesHandle& h, C s) {
    cdouble sv = value_of(s);
    double phi = rotation_angle(sv.imag(), h.side);
    std::uint64_t M = terms_for(h, phi);
    if (M > h.n_coeff())
        throw std::runtime_error("completed_L: accuracy budget exceeded (handle built for smaller |Im s|)");
    cdouble eip = std::polar(1.0, phi);
    C one(1.0);
    C sw = h.side == LSide::heckeK ? s : s * C(0.5);
    C swr = h.side == LSide::heckeK ? one - s : (one - s) * C(0.5);
    // dual-sum power: x^{s-1} (K side), (pi n^2/p)^{(s-1)/2} (Q side)
    C dual_exp = h.side == LSide::heckeK ? sw - one : sw - C(0.5);
    C W = seed_like<C>(h.root_number, s);
    C main_sum(0.0), dual_sum(0.0);
    for (std::uint64_t n = 1; n <= M; ++n) {
        cdouble a = h.coeff[n];
        cdouble ac = h.coeff_conj[n];
        if (a == cdouble(0.0) && ac == cdouble(0.0)) continue;
        double x = term_x(h, n);
        double lx = std::log(x);
        C G = upper_gamma_impl_dispatch(sw, x * eip);
        C Gr = upper_gamma_impl_dispatch(swr, x * std::conj(eip));
        main_sum += seed_like<C>(a, s) * exp(-sw * C(lx)) * G;
        dual_sum += seed_like<C>(ac, s) * exp(dual_exp * C(lx)) * Gr;
    }
    return main_sum + W * dual_sum;
}

}  // namespace

void ensure_prime_ideals(double limit) { ideals_up_to(limit); }

LSeriesHandle make_hecke_handle(const PrimaryPrime& pi, bool conjugated, double tmax,
                                std::uint64_t min_terms) {
    check_family(pi);
    LSeriesHandle h;
    h.prime = pi;
    h.side = LSide::heckeK;
    h.character = CubicCharacter{pi.pi, pi.norm, conjugated};
    h.conductor_norm = pi.norm;
    h.afe_scale = std::sqrt(3.0 * double(pi.norm)) / (2.0 * kPi);
    h.tmax = tmax;
    double phi = rotation_angle(tmax, h.side);
    std::uint64_t M = std::max<std::uint64_t>(terms_for(h, phi) + 8, min_terms);
    h.coeff = hecke_coefficients(h.character, M);
    h.coeff_conj.resize(h.coeff.size());
    for (std::size_t i = 0; i < h.coeff.size(); ++i) h.coeff_conj[i] = std::conj(h.coeff[i]);
    cdouble g = gauss_sum_prime(EisensteinInt{1, 0}, pi).value;
    h.root_number = g / std::sqrt(double(pi.norm));
    if (conjugated) h.root_number = std::conj(h.root_number);
    return h;
}

LSeriesHandle make_dirichlet_handle(const PrimaryPrime& pi, bool conjugated, double tmax,
                                    std::uint64_t min_terms) {
    check_family(pi);
    if (pi.splitting != Splitting::split)
        throw std::domain_error("dirichlet handle: conductor must be a split rational prime");
    LSeriesHandle h;
    h.prime = pi;
    h.side = LSide::dirichletQ;
    h.character = CubicCharacter{pi.pi, pi.norm, conjugated};
    h.conductor_norm = pi.norm;
    h.afe_scale = 1.0;
    h.tmax = tmax;
    double phi = rotation_angle(tmax, h.side);
    std::uint64_t M = std::max<std::uint64_t>(terms_for(h, phi) + 8, min_terms);
    h.coeff = dirichlet_coefficients(h.character, M);
    h.coeff_conj.resize(h.coeff.size());
    for (std::size_t i = 0; i < h.coeff.size(); ++i) h.coeff_conj[i] = std::conj(h.coeff[i]);
    cdouble tau = induced_tau(pi);
    if (conjugated) tau = std::conj(tau);
    h.root_number = tau / std::sqrt(double(pi.norm));
    return h;
}

cdouble dirichlet_series(const LSeriesHandle& h, cdouble s) {
    std::uint64_t M = h.n_coeff();
    std::vector<cdouble> c(M);
    std::vector<double> ln(M);
    for (std::uint64_t n = 1; n <= M; ++n) {
        c[n - 1] = h.coeff[n];
        ln[n - 1] = std::log(double(n));
    }
    return kernels::exp_dot(c.data(), ln.data(), M, s);
}

cdouble euler_product(const LSeriesHandle& h, cdouble s, double cutoff) {
    if (h.side != LSide::heckeK) throw std::domain_error("euler_product: K side only");
    cdouble logprod = 0.0;
    cdouble v3 = h.character(kLambda).to_complex();
    logprod -= std::log(1.0 - v3 * std::pow(cdouble(3.0), -s));
    for (const auto& pp : ideals_up_to(cutoff)) {
        if (double(pp.norm) > cutoff) break;
        cdouble v = h.character(pp.pi).to_complex();
        logprod -= std::log(1.0 - v * std::pow(cdouble(double(pp.norm)), -s));
    }
    return std::exp(logprod);
}

cdouble completed_L(const LSeriesHandle& h, cdouble s) { return completed_impl<cdouble>(h, s); }

Dual completed_L_dual(const LSeriesHandle& h, cdouble s) {
    return completed_impl<Dual>(h, Dual::seed(s));
}

cdouble completed_L_line(const LSeriesHandle& h, double t) {
    cdouble s(0.5, t);
    double phi = rotation_angle(t, h.side);
    std::uint64_t M = terms_for(h, phi);
    if (M > h.n_coeff())
        throw std::runtime_error("completed_L_line: accuracy budget exceeded");
    cdouble eip = std::polar(1.0, phi);
    cdouble sw = h.side == LSide::heckeK ? s : 0.5 * s;
    // phase of f(u) = e^{-u} u^{sw-1} advances ~ Im(sw) * dln(x_n); march
    // only once the per-step advance is tame
    std::uint64_t n_switch = std::min<std::uint64_t>(M, std::uint64_t(3.0 * (std::abs(t) + 2.0)) + 1);
    cdouble V = 0.0;

    auto f = [&](cdouble u) { return std::exp(-u + (sw - 1.0) * std::log(u)); };
    // 4-point Gauss-Legendre nodes on [0,1]
    static const double gx[4] = {0.069431844202973712, 0.33000947820757187,
                                 0.66999052179242813, 0.93056815579702629};
    static const double gw[4] = {0.17392742256872693, 0.32607257743127307,
                                 0.32607257743127307, 0.17392742256872693};

    cdouble G = 0.0;
    double x_prev = 0.0;
    for (std::uint64_t n = 1; n <= M; ++n) {
        double x = term_x(h, n);
        if (n <= n_switch || (n - n_switch) % 256 == 1) {
            G = upper_gamma(sw, x * eip);
        } else {
            // G(x) = G(x_prev) - int_{x_prev}^{x} f(u e^{i phi}) e^{i phi} du
            cdouble inc = 0.0;
            double w = x - x_prev;
            for (int j = 0; j < 4; ++j) inc += gw[j] * f((x_prev + gx[j] * w) * eip);
            G -= inc * w * eip;
        }
        x_prev = x;
        cdouble a = h.coeff[n];
        if (a == cdouble(0.0)) continue;
        double lx = std::log(x);
        cdouble u = std::exp(-sw * lx);  // x^{-sw}
        V += a * u * G;
    }
    return V + h.root_number * std::conj(V);
}

cdouble gamma_prefactor(const LSeriesHandle& h, cdouble s) {
    if (h.side == LSide::heckeK) {
        double q = 3.0 * double(h.conductor_norm);
        return std::exp(0.5 * s * std::log(q) - s * std::log(2.0 * kPi)) * gamma_c(s);
    }
    double q = double(h.conductor_norm) / kPi;
    return std::exp(0.5 * s * std::log(q)) * gamma_c(0.5 * s);
}

cdouble hecke_L(const LSeriesHandle& h, cdouble s) {
    if (s.real() >= 1.25) return dirichlet_series(h, s);
    return completed_L(h, s) / gamma_prefactor(h, s);
}

cdouble log_deriv(const LSeriesHandle& h, cdouble s) {
    Dual D = completed_L_dual(h, s);
    cdouble lam_ld = D.d / D.v;
    if (h.side == LSide::heckeK) {
        double q = 3.0 * double(h.conductor_norm);
        return lam_ld - 0.5 * std::log(q) + std::log(2.0 * kPi) - digamma_c(s);
    }
    double q = double(h.conductor_norm) / kPi;
    return lam_ld - 0.5 * std::log(q) - 0.5 * digamma_c(0.5 * s);
}

cdouble induced_tau(const PrimaryPrime& pi) {
    if (pi.splitting != Splitting::split) throw std::domain_error("induced_tau: split primes only");
    std::uint64_t p = pi.norm;
    // chi(g^i) = w^{i e}; tau = sum_m chi(m) e(m/p) accumulated per class
    auto fs = factor_u64(p - 1);
    std::uint64_t g = 2;
    for (;; ++g) {
        bool ok = true;
        for (auto& [q, e] : fs) {
            std::uint64_t r = 1, b = g % p, ee = (p - 1) / q;
            while (ee) {
                if (ee & 1) r = (unsigned __int128)r * b % p;
                b = (unsigned __int128)b * b % p;
                ee >>= 1;
            }
            if (r == 1) {
                ok = false;
                break;
            }
        }
        if (ok) break;
    }
    CubicValue cg = symbol(EisensteinInt{int128(g), 0}, pi.pi);
    if (cg.zero || cg.exponent == 0) throw std::logic_error("induced_tau: generator symbol trivial");
    const std::size_t chunk = 4096;
    std::vector<double> phase(chunk);
    std::vector<std::uint8_t> cls(chunk);
    kernels::ClassSums acc;
    double invp = 1.0 / double(p);
    std::uint64_t m = 1;
    int e = 0;
    std::size_t fill = 0;
    for (std::uint64_t i = 1; i < p; ++i) {
        m = (unsigned __int128)m * g % p;
        e += cg.exponent;
        if (e >= 3) e -= 3;
        phase[fill] = double(m) * invp;
        cls[fill] = std::uint8_t(e);
        if (++fill == chunk) {
            auto part = kernels::cis_class_sum(phase.data(), cls.data(), fill);
            for (int k = 0; k < 3; ++k) acc.s[k] += part.s[k];
            fill = 0;
        }
    }
    if (fill) {
        auto part = kernels::cis_class_sum(phase.data(), cls.data(), fill);
        for (int k = 0; k < 3; ++k) acc.s[k] += part.s[k];
    }
    const cdouble w = std::polar(1.0, 2.0 * kPi / 3.0);
    return acc.s[0] + w * acc.s[1] + std::conj(w) * acc.s[2];
}

namespace {

// adaptive argument tracking along a segment; returns accumulated d(arg f)
double arg_walk(const LSeriesHandle& h, cdouble z1, cdouble f1, cdouble z2, cdouble f2,
                int depth) {
    double d = std::arg(f2 / f1);
    if (std::abs(d) <= 1.9) return d;
    if (depth <= 0) throw std::runtime_error("find_zeros: argument tracking failed to resolve");
    cdouble zm = 0.5 * (z1 + z2);
    cdouble fm = completed_L(h, zm);
    if (fm == cdouble(0.0)) throw std::runtime_error("find_zeros: zero on the contour");
    return arg_walk(h, z1, f1, zm, fm, depth - 1) + arg_walk(h, zm, fm, z2, f2, depth - 1);
}

long long winding_count(const LSeriesHandle& h, double sl, double sr, double tlo, double thi) {
    std::vector<cdouble> pts;
    auto seg = [&](cdouble a, cdouble b, int n) {
        for (int i = 0; i < n; ++i)
            pts.push_back(a + (b - a) * (double(i) / n));
    };
    int nv = std::max(24, int((thi - tlo) * 4.0));
    int nh = 16;
    seg({sl, tlo}, {sr, tlo}, nh);
    seg({sr, tlo}, {sr, thi}, nv);
    seg({sr, thi}, {sl, thi}, nh);
    seg({sl, thi}, {sl, tlo}, nv);
    pts.push_back({sl, tlo});
    double total = 0.0;
    cdouble fprev = completed_L(h, pts[0]);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        cdouble f = completed_L(h, pts[i]);
        total += arg_walk(h, pts[i - 1], fprev, pts[i], f, 32);
        fprev = f;
    }
    double turns = total / (2.0 * kPi);
    long long cnt = std::llround(turns);
    if (std::abs(turns - double(cnt)) > 0.25)
        throw std::runtime_error("find_zeros: non-integral winding number");
    return cnt;
}

double golden_min(const std::function<double(double)>& f, double a, double b, double tol) {
    const double gr = 0.6180339887498949;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

ZeroList find_zeros(const LSeriesHandle& h, double T) {
    if (h.tmax < T + 0.7)
        throw std::domain_error("find_zeros: handle tmax too small for requested height");
    ZeroList out;
    auto absline = [&](double t) { return std::abs(completed_L_line(h, t)); };
    // nudge the box edge away from any zero sitting on it
    double Teff = T;
    for (int tries = 0; tries < 4; ++tries) {
        double top = absline(Teff), bot = absline(-Teff);
        double near = std::sqrt(absline(Teff - 0.31) * absline(Teff + 0.31));
        double nearb = std::sqrt(absline(-Teff - 0.31) * absline(-Teff + 0.31));
        if (top > 0.02 * near && bot > 0.02 * nearb) break;
        Teff += 0.05;
    }
    out.height = Teff;
    out.winding_count = winding_count(h, -0.25, 1.25, -Teff, Teff);

    double logq = std::log(3.0 * double(h.conductor_norm));
    auto scan_step = [&](double T0) {
        double dens = (logq + 2.0 * std::log((T0 + 3.0) / (2.0 * kPi))) / (2.0 * kPi);
        return std::min(0.25, 0.4 / std::max(dens, 0.2));
    };

    const double shrink[3] = {1.0, 5.0, 25.0};
    for (int attempt = 0; attempt < 3; ++attempt) {
        double step = scan_step(Teff) / shrink[attempt];
        std::vector<double> ts, vs;
        for (double t = -Teff - 2.0 * step; t <= Teff + 2.0 * step + 1e-12; t += step) {
            ts.push_back(t);
            vs.push_back(absline(t));
        }
        std::vector<double> zeros;
        for (std::size_t i = 1; i + 1 < ts.size(); ++i) {
            if (vs[i] <= vs[i - 1] && vs[i] <= vs[i + 1]) {
                double t0 = golden_min(absline, ts[i - 1], ts[i + 1], 1e-9);
                double v0 = absline(t0);
                double edge = std::max(vs[i - 1], vs[i + 1]);
                if (v0 < 1e-4 * edge && std::abs(t0) < Teff) zeros.push_back(t0);
            }
        }
        std::sort(zeros.begin(), zeros.end());
        // drop duplicates from adjacent brackets
        std::vector<double> uniq;
        for (double z : zeros)
            if (uniq.empty() || z - uniq.back() > 1e-7) uniq.push_back(z);
        out.ordinates = uniq;
        if ((long long)uniq.size() == out.winding_count) {
            out.verified = true;
            out.message = "ok";
            return out;
        }
    }
    out.verified = false;
    out.message = "refined zero count " + std::to_string(out.ordinates.size()) +
                  " != winding count " + std::to_string(out.winding_count);
    return out;
}

}  // namespace cubiclf
