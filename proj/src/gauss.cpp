#include "cubiclf/gauss.hpp"

#include <cmath>
#include <numbers>

#include "cubiclf/cache.hpp"
#include "cubiclf/kernels.hpp"
#include "cubiclf/parallel.hpp"

#include <sstream>

namespace cubiclf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Neumaier {
    double s = 0.0, c = 0.0;
    void add(double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

std::complex<double> omega_pow_c(int e) {
    static const std::complex<double> w{-0.5, std::sqrt(3.0) / 2.0};
    e = ((e % 3) + 3) % 3;
    if (e == 0) return {1.0, 0.0};
    return e == 1 ? w : std::conj(w);
}

// floating reduction a*b mod p for p < 2^26-ish operands (exact in double)
struct SmallMod {
    std::uint64_t p;
    double inv;
    explicit SmallMod(std::uint64_t p_) : p(p_), inv(1.0 / double(p_)) {}
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        double q = double(a) * double(b) * inv;
        std::int64_t r = std::int64_t(a * b) - std::int64_t(std::uint64_t(q)) * std::int64_t(p);
        if (r < 0) r += p;
        if (r >= std::int64_t(p)) r -= p;
        return std::uint64_t(r);
    }
};

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    unsigned __int128 r = 1, x = a % m;
    while (e) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return std::uint64_t(r);
}

std::uint64_t find_generator_fp(std::uint64_t p) {
    auto fs = factor_u64(p - 1);
    for (std::uint64_t g = 2;; ++g) {
        bool ok = true;
        for (auto& [q, e] : fs)
            if (powmod_u64(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
}

struct Fq2 {  // residue field O/(q) for inert q, coordinates mod q
    std::uint64_t q;
    std::pair<std::uint64_t, std::uint64_t> mul(std::pair<std::uint64_t, std::uint64_t> x,
                                                std::pair<std::uint64_t, std::uint64_t> y) const {
        // (a+bw)(c+dw) = (ac - bd) + (ad + bc - bd) w
        std::uint64_t ac = x.first * y.first % q, bd = x.second * y.second % q;
        std::uint64_t ad = x.first * y.second % q, bc = x.second * y.first % q;
        std::uint64_t re = (ac + q - bd) % q;
        std::uint64_t im = (ad + bc + q - bd) % q;
        return {re, im};
    }
    std::pair<std::uint64_t, std::uint64_t> pow(std::pair<std::uint64_t, std::uint64_t> x,
                                                std::uint64_t e) const {
        std::pair<std::uint64_t, std::uint64_t> r{1, 0};
        while (e) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }
};

std::pair<std::uint64_t, std::uint64_t> find_generator_fq2(const Fq2& f) {
    std::uint64_t n = f.q * f.q - 1;
    auto fs = factor_u64(n);
    for (std::uint64_t b = 1; b < f.q; ++b) {
        for (std::uint64_t a = 0; a < f.q; ++a) {
            std::pair<std::uint64_t, std::uint64_t> g{a, b};
            bool ok = true;
            for (auto& [pf, e] : fs)
                if (f.pow(g, n / pf) == std::pair<std::uint64_t, std::uint64_t>{1, 0}) {
                    ok = false;
                    break;
                }
            if (ok) return g;
        }
    }
    throw std::logic_error("no generator of F_q^2 found");
}

constexpr std::size_t kChunk = 4096;

}  // namespace

std::complex<double> e_K(const EisensteinInt& x, const EisensteinInt& q) {
    if (q.is_zero()) throw std::domain_error("e_K: zero denominator");
    EisensteinInt t = x * conj(q);
    int128 N = norm(q);
    int128 v = t.b % N;
    if (v < 0) v += N;
    double phase = double(v) / double(N);
    return std::polar(1.0, kTwoPi * phase);
}

std::complex<double> e_K_direct(const EisensteinInt& x, const EisensteinInt& q) {
    const std::complex<double> w{-0.5, std::sqrt(3.0) / 2.0};
    std::complex<double> z = (double(x.a) + double(x.b) * w) / (double(q.a) + double(q.b) * w);
    // (z - zbar)/sqrt(-3) = 2 Im(z) / sqrt(3)
    return std::polar(1.0, kTwoPi * (2.0 * z.imag() / std::sqrt(3.0)));
}

GaussSumValue gauss_sum(const EisensteinInt& k, const EisensteinInt& n, int128 cap) {
    if (norm(n) % 3 == 0) throw std::domain_error("gauss_sum: modulus norm divisible by 3");
    auto sys = residues(n, cap);
    int128 N = norm(n);
    EisensteinInt kr = mod(k, n);
    Neumaier re, im;
    for (const auto& x : sys.representatives) {
        CubicValue c = symbol(x, n);
        if (c.zero) continue;
        std::complex<double> term = omega_pow_c(c.exponent) * e_K(kr * x, n);
        re.add(term.real());
        im.add(term.imag());
    }
    return {{re.value(), im.value()}, std::uint64_t(N)};
}

GaussSumValue gauss_sum_prime(const EisensteinInt& k, const PrimaryPrime& pi) {
    if (divides(pi.pi, k)) return {{0.0, 0.0}, pi.norm};  // nontrivial chi over full system
    std::vector<double> phase(kChunk);
    std::vector<std::uint8_t> cls(kChunk);
    kernels::ClassSums acc;

    auto flush = [&](std::size_t cnt) {
        auto part = kernels::cis_class_sum(phase.data(), cls.data(), cnt);
        for (int e = 0; e < 3; ++e) acc.s[e] += part.s[e];
    };

    if (pi.splitting == Splitting::split) {
        std::uint64_t p = pi.norm;
        SmallMod sm(p);
        std::uint64_t g = find_generator_fp(p);
        CubicValue cg = symbol(EisensteinInt{int128(g), 0}, pi.pi);
        if (cg.zero || cg.exponent == 0)
            throw std::logic_error("gauss_sum_prime: generator has trivial symbol");
        EisensteinInt W = mod(k, pi.pi) * conj(pi.pi);
        std::int64_t wb = std::int64_t(W.b % int128(p));
        std::uint64_t wbu = std::uint64_t(wb < 0 ? wb + std::int64_t(p) : wb);
        double invp = 1.0 / double(p);
        std::uint64_t m = 1;
        int e = 0;
        std::size_t fill = 0;
        for (std::uint64_t i = 1; i < p; ++i) {
            m = sm.mul(m, g);
            e += cg.exponent;
            if (e >= 3) e -= 3;
            phase[fill] = double(sm.mul(m, wbu)) * invp;
            cls[fill] = std::uint8_t(e);
            if (++fill == kChunk) {
                flush(fill);
                fill = 0;
            }
        }
        if (fill) flush(fill);
    } else if (pi.splitting == Splitting::inert) {
        std::uint64_t q = std::uint64_t(-pi.pi.a);
        Fq2 f{q};
        auto g = find_generator_fq2(f);
        CubicValue cg = symbol(EisensteinInt{int128(g.first), int128(g.second)}, pi.pi);
        if (cg.zero || cg.exponent == 0)
            throw std::logic_error("gauss_sum_prime: generator has trivial symbol");
        EisensteinInt kr = mod(k, pi.pi);
        std::uint64_t ka = std::uint64_t(((kr.a % int128(q)) + int128(q)) % int128(q));
        std::uint64_t kb = std::uint64_t(((kr.b % int128(q)) + int128(q)) % int128(q));
        // e_K(k x / (-q)) has phase -wcoeff(k x)/q mod 1
        double invq = 1.0 / double(q);
        std::pair<std::uint64_t, std::uint64_t> x{1, 0};
        int e = 0;
        std::size_t fill = 0;
        std::uint64_t order = q * q - 1;
        for (std::uint64_t i = 1; i <= order; ++i) {
            x = f.mul(x, g);
            e += cg.exponent;
            if (e >= 3) e -= 3;
            auto kx = f.mul({ka, kb}, x);
            phase[fill] = -double(kx.second) * invq;
            cls[fill] = std::uint8_t(e);
            if (++fill == kChunk) {
                flush(fill);
                fill = 0;
            }
        }
        if (fill) flush(fill);
    } else {
        throw std::domain_error("gauss_sum_prime: ramified modulus");
    }
    std::complex<double> total = 0.0;
    for (int e = 0; e < 3; ++e) total += omega_pow_c(e) * acc.s[e];
    return {total, pi.norm};
}

std::vector<GaussBatchEntry> gauss_batch(double X) {
    auto prims = primary_primes_up_to(X);
    std::vector<GaussBatchEntry> out(prims.size());
    // split conjugate pairs are adjacent in sieve order (same norm); compute
    // the lexicographically first of each pair, conjugate for the partner
    std::vector<std::size_t> work;
    for (std::size_t i = 0; i < prims.size(); ++i) {
        out[i].prime = prims[i];
        if (prims[i].splitting == Splitting::split && i > 0 &&
            prims[i - 1].norm == prims[i].norm &&
            prims[i - 1].pi == primary_associate(conj(prims[i].pi)))
            continue;  // partner of work item i-1
        work.push_back(i);
    }
    parallel_for(work.size(), [&](std::size_t wi) {
        std::size_t i = work[wi];
        out[i].g1 = gauss_sum_prime(EisensteinInt{1, 0}, prims[i]).value;
    });
    for (std::size_t i = 0; i < prims.size(); ++i) {
        if (prims[i].splitting == Splitting::split && i > 0 &&
            prims[i - 1].norm == prims[i].norm &&
            prims[i - 1].pi == primary_associate(conj(prims[i].pi)))
            out[i].g1 = std::conj(out[i - 1].g1);
    }
    return out;
}

std::vector<GaussBatchEntry> gauss_batch_cached(double X) {
    std::ostringstream key;
    key << "gauss1_" << std::uint64_t(X);
    if (auto payload = cache_load(key.str())) {
        std::vector<GaussBatchEntry> out;
        std::istringstream in(*payload);
        std::string line;
        std::getline(in, line);  // header
        bool ok = line == "a,b,norm,re,im";
        while (ok && std::getline(in, line)) {
            std::replace(line.begin(), line.end(), ',', ' ');
            std::istringstream row(line);
            long long a, b;
            std::uint64_t nrm;
            double re, im;
            if (!(row >> a >> b >> nrm >> re >> im)) {
                ok = false;
                break;
            }
            GaussBatchEntry e;
            e.prime.pi = EisensteinInt{a, b};
            e.prime.norm = nrm;
            e.prime.splitting = e.prime.pi.b == 0 ? Splitting::inert : Splitting::split;
            e.prime.residue_mod9 = canonical_rep(e.prime.pi, EisensteinInt{9, 0});
            e.g1 = {re, im};
            out.push_back(e);
        }
        if (ok) return out;
    }
    auto out = gauss_batch(X);
    std::ostringstream payload;
    payload.precision(17);
    payload << "a,b,norm,re,im";
    for (const auto& e : out)
        payload << "\n" << to_string_i128(e.prime.pi.a) << "," << to_string_i128(e.prime.pi.b)
                << "," << e.prime.norm << "," << e.g1.real() << "," << e.g1.imag();
    cache_store(key.str(), payload.str());
    return out;
}

std::complex<double> h_partial_from_batch(const std::vector<GaussBatchEntry>& batch,
                                          const EisensteinInt& r, std::complex<double> s,
                                          int psi_index, double x) {
    if (!is_primary(r)) throw std::domain_error("h_partial: r not primary");
    const auto& rc = ray_class_group9();
    Neumaier re, im;
    for (const auto& ent : batch) {
        if (double(ent.prime.norm) > x) break;
        CubicValue chir = symbol(r, ent.prime.pi);
        if (chir.zero) continue;  // (pi, r) != 1
        std::complex<double> g = omega_pow_c(-chir.exponent) * ent.g1;  // twisting law
        std::complex<double> term = std::log(double(ent.prime.norm)) *
                                    rc.character(psi_index, ent.prime.pi) * g *
                                    std::exp(-s * std::log(double(ent.prime.norm)));
        re.add(term.real());
        im.add(term.imag());
    }
    return {re.value(), im.value()};
}

std::complex<double> h_partial(const EisensteinInt& r, std::complex<double> s, int psi_index,
                               double x) {
    auto batch = gauss_batch(x);
    return h_partial_from_batch(batch, r, s, psi_index, x);
}

}  // namespace cubiclf
