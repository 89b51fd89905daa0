#include "cubiclf/moments.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "cubiclf/cache.hpp"
#include "cubiclf/gauss.hpp"
#include "cubiclf/kernels.hpp"
#include "cubiclf/parallel.hpp"

namespace cubiclf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kH9 = 9;  // #h_(9), pinned by the ray class tests

struct Member {
    PrimaryPrime self;
    PrimaryPrime base;  // handle conductor (b > 0 representative for split)
    bool conj = false;  // handle built with the conjugate character
    double weight = 0.0;
    double lam = 0.0;  // Lambda_K = log norm
};

std::vector<Member> weighted_family(double X, bool split_only) {
    const auto& w = WeightFunction::bump();
    std::vector<Member> out;
    for (const auto& pp : sieve_family(2.0 * X + 1, split_only)) {
        double wt = w(double(pp.norm) / X);
        if (wt <= 0.0) continue;
        Member m;
        m.self = pp;
        m.weight = wt;
        m.lam = std::log(double(pp.norm));
        if (pp.splitting == Splitting::split && pp.pi.b < 0) {
            m.conj = true;
            m.base = pp;
            m.base.pi = primary_associate(conj(pp.pi));
            m.base.residue_mod9 = canonical_rep(m.base.pi, EisensteinInt{9, 0});
        } else {
            m.base = pp;
        }
        out.push_back(m);
    }
    return out;
}

double max_afe_norm(const std::vector<Member>& mem) {
    double mx = 0.0;
    for (const auto& m : mem) mx = std::max(mx, double(m.self.norm));
    return mx;
}

// Family sum sum Lambda_K(pi) w(N/X) f(handle), reduced in norm order.
template <typename F>
cdouble family_sum(const std::vector<Member>& mem, LSide side, double tmax, F f,
                   std::vector<std::string>& flags, FamilyOptions* opt) {
    double c_max = std::sqrt(3.0 * (max_afe_norm(mem) + 1.0)) / (2.0 * kPi);
    ensure_prime_ideals(40.0 * c_max + 64.0);
    std::vector<cdouble> vals(mem.size(), cdouble(0.0));
    std::vector<std::string> local_flags(mem.size());
    parallel_for(mem.size(), [&](std::size_t i) {
        const Member& m = mem[i];
        try {
            LSeriesHandle h = side == LSide::heckeK
                                  ? make_hecke_handle(m.base, m.conj, tmax)
                                  : make_dirichlet_handle(m.base, m.conj, tmax);
            vals[i] = m.lam * m.weight * f(h);
        } catch (const std::exception& e) {
            local_flags[i] = to_string(m.self.pi) + ": " + e.what();
        }
    });
    for (auto& fl : local_flags)
        if (!fl.empty()) flags.push_back(fl);
    if (opt && opt->dump_terms) {
        for (std::size_t i = 0; i < mem.size(); ++i)
            opt->terms.push_back({mem[i].self, mem[i].weight, vals[i]});
    }
    return kernels::compensated_sum(vals.data(), vals.size());
}

bool essentially_real(cdouble z) { return std::abs(z.imag()) < 1e-14; }

// Q side: sum over both cubic characters mod p. For real shifts the pair
// contributes twice the real part of the chi-side term.
template <typename F>
cdouble q_family_sum(const std::vector<Member>& mem, double tmax, bool real_shifts, F f_pair,
                     std::vector<std::string>& flags, FamilyOptions* opt) {
    std::vector<cdouble> vals(mem.size(), cdouble(0.0));
    std::vector<std::string> local_flags(mem.size());
    parallel_for(mem.size(), [&](std::size_t i) {
        const Member& m = mem[i];
        try {
            LSeriesHandle h = make_dirichlet_handle(m.base, m.conj, tmax);
            cdouble t = f_pair(h, false);
            cdouble pair = real_shifts ? cdouble(2.0 * t.real(), 0.0) : t + std::conj(f_pair(h, true));
            vals[i] = m.lam * m.weight * pair;
        } catch (const std::exception& e) {
            local_flags[i] = to_string(m.self.pi) + ": " + e.what();
        }
    });
    for (auto& fl : local_flags)
        if (!fl.empty()) flags.push_back(fl);
    if (opt && opt->dump_terms) {
        for (std::size_t i = 0; i < mem.size(); ++i)
            opt->terms.push_back({mem[i].self, mem[i].weight, vals[i]});
    }
    return kernels::compensated_sum(vals.data(), vals.size());
}

cdouble guarded_ratio(const LSeriesHandle& h, cdouble num_s, cdouble den_s) {
    cdouble den = hecke_L(h, den_s);
    if (std::abs(den) < 1e-12)
        throw std::runtime_error("denominator guard: |L| < 1e-12 at s=" +
                                 std::to_string(den_s.real()));
    return hecke_L(h, num_s) / den;
}

double shift_tmax(cdouble a, cdouble b = cdouble(0.0)) {
    return std::max({1.0, std::abs(a.imag()) + 0.5, std::abs(b.imag()) + 0.5});
}

MomentReport base_report(std::string kind, double X, cdouble alpha, std::optional<cdouble> beta) {
    MomentReport r;
    r.kind = std::move(kind);
    r.X = X;
    r.alpha = alpha;
    r.beta = beta;
    auto se = error_exponent(alpha, beta);
    r.predicted_E = se.E;
    r.predicted_delta = se.delta;
    return r;
}

void finish(MomentReport& r) {
    if (r.main_term != cdouble(0.0)) r.ratio = r.lhs / r.main_term;
}

cdouble zeta_ratio_K(cdouble a, cdouble b) { return zeta_K_j(a) / zeta_K_j(b); }
cdouble zeta_ratio_Q(cdouble a, cdouble b) { return zeta_j_rational(a) / zeta_j_rational(b); }

cdouble three_factor(cdouble shift) { return 1.0 - std::pow(cdouble(3.0), -0.5 - shift); }

}  // namespace

double family_F(double X, bool split_only) {
    auto mem = weighted_family(X, split_only);
    double s = 0.0;
    for (const auto& m : mem) s += m.lam * m.weight;
    return s;
}

MomentReport ratios_sum(double X, cdouble alpha, cdouble beta, FamilyOptions* opt) {
    auto se = error_exponent(alpha, beta);
    if (alpha.real() <= -1.0 / 11.0 || beta.real() <= 0.0 || se.E >= 1.0)
        throw std::domain_error("ratios_sum: shifts outside the theorem range");
    MomentReport r = base_report("ratios", X, alpha, beta);
    auto mem = weighted_family(X, opt ? opt->split_only : false);
    r.family_size = mem.size();
    double tmax = shift_tmax(alpha, beta);
    r.lhs = family_sum(mem, LSide::heckeK, tmax,
                       [&](const LSeriesHandle& h) {
                           return guarded_ratio(h, 0.5 + alpha, 0.5 + beta);
                       },
                       r.flags, opt);
    const auto& w = WeightFunction::bump();
    r.main_term = (w.mellin1() * X / kH9) * (three_factor(beta) / three_factor(alpha)) *
                  zeta_ratio_K(1.5 + 3.0 * alpha, 1.5 + 2.0 * alpha + beta);
    finish(r);
    return r;
}

MomentReport first_moment(double X, cdouble alpha, FamilyOptions* opt) {
    if (alpha.real() <= -1.0 / 11.0) throw std::domain_error("first_moment: Re(alpha) <= -1/11");
    MomentReport r = base_report("first", X, alpha, std::nullopt);
    auto mem = weighted_family(X, opt ? opt->split_only : false);
    r.family_size = mem.size();
    r.lhs = family_sum(mem, LSide::heckeK, shift_tmax(alpha),
                       [&](const LSeriesHandle& h) { return hecke_L(h, 0.5 + alpha); }, r.flags,
                       opt);
    const auto& w = WeightFunction::bump();
    r.main_term = (w.mellin1() * X / kH9) * zeta_K_j(1.5 + 3.0 * alpha) / three_factor(alpha);
    finish(r);
    return r;
}

MomentReport negative_moment(double X, cdouble beta, FamilyOptions* opt) {
    if (beta.real() <= 0.0) throw std::domain_error("negative_moment: Re(beta) <= 0");
    MomentReport r = base_report("negative", X, beta, std::nullopt);
    auto mem = weighted_family(X, opt ? opt->split_only : false);
    r.family_size = mem.size();
    r.lhs = family_sum(mem, LSide::heckeK, shift_tmax(beta),
                       [&](const LSeriesHandle& h) {
                           cdouble den = hecke_L(h, 0.5 + beta);
                           if (std::abs(den) < 1e-12)
                               throw std::runtime_error("denominator guard tripped");
                           return 1.0 / den;
                       },
                       r.flags, opt);
    const auto& w = WeightFunction::bump();
    r.main_term = (w.mellin1() * X / kH9) * three_factor(beta);
    finish(r);
    return r;
}

MomentReport logderiv_moment(double X, cdouble rr, FamilyOptions* opt) {
    if (rr.real() <= 0.0 || rr.real() >= 0.5)
        throw std::domain_error("logderiv_moment: Re(r) outside (0, 1/2)");
    MomentReport r = base_report("logderiv", X, rr, std::nullopt);
    auto mem = weighted_family(X, opt ? opt->split_only : false);
    r.family_size = mem.size();
    r.lhs = family_sum(mem, LSide::heckeK, shift_tmax(rr),
                       [&](const LSeriesHandle& h) { return log_deriv(h, 0.5 + rr); }, r.flags,
                       opt);
    const auto& w = WeightFunction::bump();
    cdouble zld = log_deriv_fd([](cdouble s) { return zeta_K_j(s); }, 1.5 + 3.0 * rr);
    cdouble corr = std::log(3.0) / (std::pow(cdouble(3.0), 0.5 + rr) - 1.0);
    r.main_term = (w.mellin1() * X / kH9) * (zld - corr);
    finish(r);
    return r;
}

namespace {

struct ZeroCacheEntry {
    ZeroList zl;
};

ZeroList zeros_for(const LSeriesHandle& h, const Member& m, double T, const std::string& kind_tag,
                   bool use_cache) {
    std::ostringstream key;
    key << "zeros_" << kind_tag << "_" << to_string_i128(m.self.pi.a) << "_"
        << to_string_i128(m.self.pi.b) << "_T" << T;
    if (use_cache) {
        if (auto payload = cache_load(key.str())) {
            ZeroList zl;
            std::istringstream in(*payload);
            std::string hdr;
            in >> hdr >> zl.height >> zl.winding_count >> zl.verified;
            double g;
            while (in >> g) zl.ordinates.push_back(g);
            if (hdr == "zl1") return zl;
        }
    }
    ZeroList zl = find_zeros(h, T);
    if (use_cache) {
        std::ostringstream out;
        out.precision(15);
        out << "zl1 " << zl.height << " " << zl.winding_count << " " << zl.verified;
        for (double g : zl.ordinates) out << "\n" << g;
        cache_store(key.str(), out.str());
    }
    return zl;
}

MomentReport density_impl(double X, double a, bool q_side, FamilyOptions* opt) {
    if (a <= 0.0) throw std::domain_error("one_level_density: a <= 0");
    MomentReport r = base_report(q_side ? "q_density" : "density", X, cdouble(0.0), std::nullopt);
    r.support_a = a;
    DensityTestFunction h = fejer_pair(a);
    r.density_leading = h.integral();
    double logX = std::log(X);
    double T = std::min(50.0, a * logX * 50.0 / (2.0 * kPi));
    r.zero_height = T;
    auto mem = weighted_family(X, q_side ? true : (opt ? opt->split_only : false));
    r.family_size = mem.size();
    bool use_cache = opt && !opt->zero_cache_dir.empty();
    if (use_cache) set_cache_dir(opt->zero_cache_dir);

    double c_max = std::sqrt(3.0 * (max_afe_norm(mem) + 1.0)) / (2.0 * kPi);
    ensure_prime_ideals(40.0 * c_max / std::sin(std::min(1.0, 15.0 / (T + 1.7))) + 64.0);

    std::vector<double> zsums(mem.size(), 0.0);
    std::vector<std::size_t> zcounts(mem.size(), 0);
    std::vector<std::string> errs(mem.size());
    parallel_for(mem.size(), [&](std::size_t i) {
        const Member& m = mem[i];
        try {
            LSeriesHandle lh = q_side ? make_dirichlet_handle(m.base, m.conj, T + 1.0)
                                      : make_hecke_handle(m.base, m.conj, T + 1.0);
            ZeroList zl = zeros_for(lh, m, T, q_side ? "q" : "k", use_cache);
            if (!zl.verified) throw std::runtime_error("zero finder: " + zl.message);
            double s = 0.0;
            for (double g : zl.ordinates) s += h.evaluate(g * logX / (2.0 * kPi));
            zsums[i] = s;
            zcounts[i] = zl.ordinates.size();
        } catch (const std::exception& e) {
            errs[i] = to_string(m.self.pi) + ": " + e.what();
        }
    });
    for (auto& e : errs)
        if (!e.empty()) throw std::runtime_error("one_level_density aborted: " + e);

    double F = 0.0, D = 0.0, wlog = 0.0;
    std::size_t totz = 0;
    for (std::size_t i = 0; i < mem.size(); ++i) {
        double lw = mem[i].lam * mem[i].weight;
        double mult = q_side ? 2.0 : 1.0;  // two conjugate characters per p
        F += mult * lw;
        D += mult * lw * zsums[i];
        wlog += mult * lw * std::log(double(mem[i].self.norm));
        totz += (q_side ? 2 : 1) * zcounts[i];
    }
    D /= F;
    r.lhs = D;
    r.zero_count = totz;

    const auto& w = WeightFunction::bump();
    auto zj = [&](cdouble s) { return q_side ? zeta_j_rational(s) : zeta_K_j(s); };
    // int h(u) (zeta'/zeta(3/2 + 6 pi i u/L) - log3/(3^{1/2 + 2 pi i u/L} - 1)) du,
    // evaluated exactly through the Dirichlet series against hat(h): the
    // compactly supported transform leaves a finite prime-power sum.
    double I_zeta = 0.0;
    {
        double cap = std::exp(a * logX / 3.0);
        if (q_side) {
            for (auto p : rational_primes(std::uint64_t(cap) + 1)) {
                if (p == 3) continue;
                double lp = std::log(double(p));
                for (int k = 1; 3.0 * k * lp / logX < a; ++k)
                    I_zeta -= lp * std::pow(double(p), -1.5 * k) * h.fourier(3.0 * k * lp / logX);
            }
        } else {
            for (const auto& q : primary_primes_up_to(cap + 1.0)) {
                double lp = std::log(double(q.norm));
                for (int k = 1; 3.0 * k * lp / logX < a; ++k)
                    I_zeta -=
                        lp * std::pow(double(q.norm), -1.5 * k) * h.fourier(3.0 * k * lp / logX);
            }
        }
        double l3 = std::log(3.0);
        for (int k = 1; k * l3 / logX < a; ++k)
            I_zeta -= l3 * std::pow(3.0, -0.5 * k) * h.fourier(k * l3 / logX);
    }
    double g_apex = q_side ? 0.25 : 0.5;
    auto gint = [&](double u) {
        cdouble arg1(g_apex, (q_side ? kPi : 2.0 * kPi) * u / logX);
        return cdouble(h.evaluate(u)) * (digamma_c(arg1) + digamma_c(std::conj(arg1)));
    };
    // h decays like u^{-2} against the digamma's log growth
    cdouble I_gamma = 0.0;
    {
        double U = 0.0;
        for (double step : {2.0, 6.0, 24.0, 96.0, 400.0, 1600.0, 6400.0}) {
            I_gamma += integrate(gint, U, U + step, 1e-8, 22) +
                       integrate([&](double u) { return gint(-u); }, U, U + step, 1e-8, 22);
            U += step;
        }
    }

    // Conductor and constant terms carry the coefficient int(h) = hat_h(0):
    // that is what the contour shift of the constant against h produces, and
    // it is the reading consistent with the digamma term; the explicit-
    // formula oracle test pins it. The printed form's 2*hat_h(1) is reported
    // alongside for reference.
    double h0 = h.integral();
    double hh1 = h.hat_at_1();
    double const_log = std::log((q_side ? 1.0 : 3.0) / (q_side ? kPi : 4.0 * kPi * kPi));
    double t1 = h0 / (F * logX) * wlog;
    double qmult = q_side ? 2.0 : 1.0;
    double t2 = (1.0 / F) * (qmult * 2.0 * w.mellin1() / kH9) * (X / logX) * I_zeta;
    double t3 = (1.0 / logX) * I_gamma.real();
    double t4 = h0 / logX * const_log;
    r.main_term = t1 + t2 + t3 + t4;

    cdouble zld32 = log_deriv_fd(zj, cdouble(1.5));
    double bracket = 2.0 * zld32.real() - 2.0 * std::log(3.0) / (std::sqrt(3.0) - 1.0) +
                     w.integral_log() / w.mellin1() + 2.0 * digamma_c(cdouble(g_apex)).real() +
                     const_log;
    r.asym_prediction = h.integral() + (h0 / logX) * bracket;
    r.asym_literal = h.integral() + (2.0 * hh1 / logX) * bracket;
    finish(r);
    return r;
}

}  // namespace

MomentReport one_level_density(double X, double a, FamilyOptions* opt) {
    return density_impl(X, a, false, opt);
}

MomentReport q_one_level_density(double Q, double a, FamilyOptions* opt) {
    return density_impl(Q, a, true, opt);
}

MomentReport q_ratios_sum(double Q, cdouble alpha, cdouble beta, FamilyOptions* opt) {
    auto se = error_exponent(alpha, beta);
    if (alpha.real() <= -1.0 / 11.0 || beta.real() <= 0.0 || se.E >= 1.0)
        throw std::domain_error("q_ratios_sum: shifts outside the theorem range");
    MomentReport r = base_report("q_ratios", Q, alpha, beta);
    auto mem = weighted_family(Q, true);
    r.family_size = mem.size();
    bool real_sh = essentially_real(alpha) && essentially_real(beta);
    r.lhs = q_family_sum(mem, shift_tmax(alpha, beta), real_sh,
                         [&](const LSeriesHandle& h, bool conj_shifts) {
                             cdouble al = conj_shifts ? std::conj(alpha) : alpha;
                             cdouble be = conj_shifts ? std::conj(beta) : beta;
                             return guarded_ratio(h, 0.5 + al, 0.5 + be);
                         },
                         r.flags, opt);
    const auto& w = WeightFunction::bump();
    r.main_term = (2.0 * w.mellin1() * Q / kH9) * (three_factor(beta) / three_factor(alpha)) *
                  zeta_ratio_Q(1.5 + 3.0 * alpha, 1.5 + 2.0 * alpha + beta);
    finish(r);
    return r;
}

MomentReport q_first_moment(double Q, cdouble alpha, FamilyOptions* opt) {
    if (alpha.real() <= -1.0 / 11.0) throw std::domain_error("q_first_moment: Re(alpha) <= -1/11");
    MomentReport r = base_report("q_first", Q, alpha, std::nullopt);
    auto mem = weighted_family(Q, true);
    r.family_size = mem.size();
    r.lhs = q_family_sum(mem, shift_tmax(alpha), essentially_real(alpha),
                         [&](const LSeriesHandle& h, bool cs) {
                             return hecke_L(h, 0.5 + (cs ? std::conj(alpha) : alpha));
                         },
                         r.flags, opt);
    const auto& w = WeightFunction::bump();
    r.main_term =
        (2.0 * w.mellin1() * Q / kH9) * zeta_j_rational(1.5 + 3.0 * alpha) / three_factor(alpha);
    finish(r);
    return r;
}

MomentReport q_negative_moment(double Q, cdouble beta, FamilyOptions* opt) {
    if (beta.real() <= 0.0) throw std::domain_error("q_negative_moment: Re(beta) <= 0");
    MomentReport r = base_report("q_negative", Q, beta, std::nullopt);
    auto mem = weighted_family(Q, true);
    r.family_size = mem.size();
    r.lhs = q_family_sum(mem, shift_tmax(beta), essentially_real(beta),
                         [&](const LSeriesHandle& h, bool cs) {
                             cdouble be = cs ? std::conj(beta) : beta;
                             cdouble den = hecke_L(h, 0.5 + be);
                             if (std::abs(den) < 1e-12)
                                 throw std::runtime_error("denominator guard tripped");
                             return 1.0 / den;
                         },
                         r.flags, opt);
    const auto& w = WeightFunction::bump();
    r.main_term = (2.0 * w.mellin1() * Q / kH9) * three_factor(beta);
    finish(r);
    return r;
}

MomentReport q_logderiv_moment(double Q, cdouble rr, FamilyOptions* opt) {
    if (rr.real() <= 0.0 || rr.real() >= 0.5)
        throw std::domain_error("q_logderiv_moment: Re(r) outside (0, 1/2)");
    MomentReport r = base_report("q_logderiv", Q, rr, std::nullopt);
    auto mem = weighted_family(Q, true);
    r.family_size = mem.size();
    r.lhs = q_family_sum(mem, shift_tmax(rr), essentially_real(rr),
                         [&](const LSeriesHandle& h, bool cs) {
                             return log_deriv(h, 0.5 + (cs ? std::conj(rr) : rr));
                         },
                         r.flags, opt);
    const auto& w = WeightFunction::bump();
    cdouble zld = log_deriv_fd([](cdouble s) { return zeta_j_rational(s); }, 1.5 + 3.0 * rr);
    cdouble corr = std::log(3.0) / (std::pow(cdouble(3.0), 0.5 + rr) - 1.0);
    r.main_term = (2.0 * w.mellin1() * Q / kH9) * (zld - corr);
    finish(r);
    return r;
}

cdouble mds_partial(cdouble s, cdouble w, cdouble z, double X) {
    if (w.real() < 0.5 || z.real() <= 0.5)
        throw std::domain_error("mds_partial: Re(w) >= 1/2 and Re(z) > 1/2 required");
    auto fam = sieve_family(X);
    double c_max = std::sqrt(3.0 * (X + 1.0)) / (2.0 * kPi);
    ensure_prime_ideals(40.0 * c_max + 64.0);
    double tmax = std::max({1.0, std::abs(w.imag()) + 0.5, std::abs(z.imag()) + 0.5});
    std::vector<cdouble> vals(fam.size(), cdouble(0.0));
    parallel_for(fam.size(), [&](std::size_t i) {
        const auto& pp = fam[i];
        bool cj = pp.splitting == Splitting::split && pp.pi.b < 0;
        PrimaryPrime base = pp;
        if (cj) {
            base.pi = primary_associate(conj(pp.pi));
            base.residue_mod9 = canonical_rep(base.pi, EisensteinInt{9, 0});
        }
        LSeriesHandle h = make_hecke_handle(base, cj, tmax);
        cdouble den = hecke_L(h, z);
        if (std::abs(den) < 1e-12) return;  // guarded term, dropped
        vals[i] = std::log(double(pp.norm)) * hecke_L(h, w) / den *
                  std::exp(-s * std::log(double(pp.norm)));
    });
    return kernels::compensated_sum(vals.data(), vals.size());
}

std::pair<cdouble, cdouble> residue_identity(cdouble w, cdouble z, double cutoff) {
    if (w.real() <= 1.0 / 3.0 || (2.0 * w + z).real() <= 1.0)
        throw std::domain_error("residue_identity: outside the convergence domain");
    cdouble pref = (1.0 / double(kH9)) * (1.0 - std::pow(cdouble(3.0), -z)) /
                   (1.0 - std::pow(cdouble(3.0), -w));
    cdouble logprod = 0.0;
    for (const auto& pp : primary_primes_up_to(cutoff)) {
        cdouble N(double(pp.norm));
        cdouble n3w = std::pow(N, -3.0 * w);
        cdouble factor = 1.0 + (1.0 - std::pow(N, w - z)) * n3w / (1.0 - n3w);
        logprod += std::log(factor);
    }
    cdouble lhs = pref * std::exp(logprod);
    cdouble rhs = pref * zeta_K_j(3.0 * w) / zeta_K_j(2.0 * w + z);
    return {lhs, rhs};
}

std::string MomentReport::to_json() const {
    nlohmann::json j;
    j["kind"] = kind;
    j["X"] = X;
    j["alpha"] = {alpha.real(), alpha.imag()};
    if (beta) j["beta"] = {beta->real(), beta->imag()};
    j["lhs"] = {lhs.real(), lhs.imag()};
    j["main_term"] = {main_term.real(), main_term.imag()};
    j["ratio"] = {ratio.real(), ratio.imag()};
    j["predicted_E"] = predicted_E;
    j["predicted_delta"] = predicted_delta;
    j["family_size"] = family_size;
    j["weight"] = weight_name;
    j["flags"] = flags;
    if (kind == "density" || kind == "q_density") {
        j["support_a"] = support_a;
        j["density_leading"] = density_leading;
        j["asym_prediction"] = asym_prediction;
        j["asym_literal"] = asym_literal;
        j["zero_height"] = zero_height;
        j["zero_count"] = zero_count;
    }
    return j.dump(2);
}

}  // namespace cubiclf
