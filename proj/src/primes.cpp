#include "cubiclf/primes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cubiclf/parallel.hpp"

namespace cubiclf {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return (u128)a * b % m; }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic witness set for all n < 2^64
    for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        u64 x = powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

u64 pollard_rho(u64 n) {
    if ((n & 1) == 0) return 2;
    u64 c = 1;
    for (;;) {
        u64 x = 2, y = 2, d = 1;
        auto step = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        u64 q = 1;
        int cnt = 0;
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            u64 diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            q = mulmod(q, diff, n);
            if (++cnt % 64 == 0) {
                d = std::gcd(q, n);
                if (d != 1 && d != n) return d;
                q = 1;
            }
        }
        d = std::gcd(q, n);
        if (d != 1 && d != n) return d;
        // retry with a different increment on cycle failure
        ++c;
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        if (n % p == 0) {
            out.push_back(p);
            factor_rec(n / p, out);
            return;
        }
    }
    u64 d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<u64, int>> factor_u64(u64 n) {
    std::vector<u64> fs;
    factor_rec(n, fs);
    std::sort(fs.begin(), fs.end());
    std::vector<std::pair<u64, int>> out;
    for (u64 p : fs) {
        if (!out.empty() && out.back().first == p) {
            ++out.back().second;
        } else {
            out.push_back({p, 1});
        }
    }
    return out;
}

std::vector<u64> rational_primes(u64 limit) {
    std::vector<u64> ps;
    if (limit < 2) return ps;
    std::vector<bool> comp(limit + 1, false);
    for (u64 i = 2; i * i <= limit; ++i) {
        if (!comp[i])
            for (u64 j = i * i; j <= limit; j += i) comp[j] = true;
    }
    for (u64 i = 2; i <= limit; ++i)
        if (!comp[i]) ps.push_back(i);
    return ps;
}

bool is_prime_element(const EisensteinInt& z) {
    if (z.is_zero() || is_unit(z)) return false;
    int128 n = norm(z);
    if (n > int128(~0ull >> 1)) throw std::overflow_error("is_prime_element: norm too large");
    u64 nn = (u64)n;
    if (is_prime_u64(nn)) return true;  // degree-one (split or ramified)
    // inert: associate of a rational prime q == 2 (mod 3), norm q^2
    u64 q = (u64)std::llround(std::sqrt((double)nn));
    while (q * q > nn) --q;
    while ((q + 1) * (q + 1) <= nn) ++q;
    if (q * q != nn || q % 3 != 2 || !is_prime_u64(q)) return false;
    for (const auto& u : units())
        if (u * EisensteinInt{int128(q), 0} == z) return true;
    return false;
}

PrimaryPrime split_rational_prime(u64 p) {
    if (p % 3 != 1) throw std::domain_error("split_rational_prime: p != 1 (mod 3)");
    // bounded search: a^2 - ab + b^2 = p  =>  a = (b + sqrt(4p - 3b^2)) / 2
    for (u64 b = 1;; ++b) {
        u128 t = (u128)4 * p;
        u128 bb = (u128)3 * b * b;
        if (bb > t) break;
        u64 d = (u64)(t - bb);
        u64 s = (u64)std::llround(std::sqrt((double)d));
        while (s * s > d) --s;
        while ((s + 1) * (s + 1) <= d) ++s;
        if (s * s == d && (b + s) % 2 == 0) {
            EisensteinInt z{int128((b + s) / 2), int128(b)};
            if (norm(z) == int128(p)) {
                EisensteinInt pi = primary_associate(z);
                EisensteinInt pib = primary_associate(conj(z));
                EisensteinInt chosen = pi.b > 0 ? pi : pib;
                PrimaryPrime out;
                out.pi = chosen;
                out.norm = p;
                out.splitting = Splitting::split;
                out.residue_mod9 = canonical_rep(chosen, EisensteinInt{9, 0});
                return out;
            }
        }
    }
    throw std::logic_error("split_rational_prime: no representation found");
}

std::vector<PrimaryPrime> primary_primes_up_to(double X, u64 cap) {
    if (X < 2) return {};
    if (X > (double)cap) throw std::length_error("primary_primes_up_to: sieve cap exceeded");
    u64 limit = (u64)X;
    auto ps = rational_primes(limit);
    std::vector<std::vector<PrimaryPrime>> rows(ps.size());
    parallel_for(ps.size(), [&](std::size_t i) {
        u64 p = ps[i];
        if (p % 3 == 1) {
            PrimaryPrime pp = split_rational_prime(p);
            PrimaryPrime qq = pp;
            qq.pi = primary_associate(conj(pp.pi));
            qq.residue_mod9 = canonical_rep(qq.pi, EisensteinInt{9, 0});
            rows[i].push_back(pp);
            rows[i].push_back(qq);
        } else if (p % 3 == 2 && (u128)p * p <= limit) {
            PrimaryPrime pp;
            pp.pi = EisensteinInt{-int128(p), 0};
            pp.norm = p * p;
            pp.splitting = Splitting::inert;
            pp.residue_mod9 = canonical_rep(pp.pi, EisensteinInt{9, 0});
            rows[i].push_back(pp);
        }
    });
    std::vector<PrimaryPrime> out;
    for (auto& r : rows)
        for (auto& pp : r) out.push_back(pp);
    std::sort(out.begin(), out.end(), [](const PrimaryPrime& x, const PrimaryPrime& y) {
        if (x.norm != y.norm) return x.norm < y.norm;
        if (x.pi.a != y.pi.a) return x.pi.a < y.pi.a;
        return x.pi.b < y.pi.b;
    });
    return out;
}

std::vector<PrimaryPrime> sieve_family(double X, bool split_only, u64 cap) {
    auto all = primary_primes_up_to(X, cap);
    std::vector<PrimaryPrime> fam;
    for (auto& pp : all) {
        if (split_only && pp.splitting != Splitting::split) continue;
        if (pp.residue_mod9 == canonical_rep(EisensteinInt{1, 0}, EisensteinInt{9, 0}))
            fam.push_back(pp);
    }
    return fam;
}

double lambda_K(const EisensteinInt& n) {
    if (n.is_zero()) throw std::domain_error("lambda_K(0)");
    int128 N = norm(n);
    if (N == 1) return 0.0;
    if (N > int128(~0ull >> 1)) throw std::overflow_error("lambda_K: norm too large");
    auto fs = factor_u64((u64)N);
    if (fs.size() != 1) return 0.0;  // norm not a prime power => not a prime power
    u64 p = fs[0].first;
    int e = fs[0].second;
    auto is_assoc_power = [&](const EisensteinInt& w, int k) {
        EisensteinInt cur = n;
        for (int i = 0; i < k; ++i) {
            auto dr = divrem(cur, w);
            if (!dr.r.is_zero()) return false;
            cur = dr.q;
        }
        return is_unit(cur);
    };
    if (p == 3) {
        // n associate of (1-w)^e, norm 3^e
        return is_assoc_power(kLambda, e) ? std::log(3.0) : 0.0;
    }
    if (p % 3 == 1) {
        EisensteinInt pi = split_rational_prime(p).pi;
        if (is_assoc_power(pi, e) || is_assoc_power(primary_associate(conj(pi)), e))
            return std::log((double)p);
        return 0.0;
    }
    // inert: norm q^{2m}
    if (e % 2 != 0) return 0.0;
    return is_assoc_power(EisensteinInt{int128(p), 0}, e / 2) ? 2.0 * std::log((double)p) : 0.0;
}

double chebyshev_family(double y, bool split_only) {
    double s = 0.0;
    for (const auto& pp : sieve_family(y, split_only)) s += std::log((double)pp.norm);
    return s;
}

}  // namespace cubiclf
