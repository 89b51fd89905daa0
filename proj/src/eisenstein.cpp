#include "cubiclf/eisenstein.hpp"

#include <algorithm>
#include <cctype>

namespace cubiclf {

namespace {

int128 checked_add(int128 x, int128 y) {
    int128 r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("eisenstein: add overflow");
    return r;
}

int128 checked_sub(int128 x, int128 y) {
    int128 r;
    if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("eisenstein: sub overflow");
    return r;
}

int128 checked_mul(int128 x, int128 y) {
    int128 r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("eisenstein: mul overflow");
    return r;
}

// floor division for int128
int128 floor_div(int128 n, int128 d) {
    int128 q = n / d;
    if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
    return q;
}

int128 mod_floor(int128 n, int128 d) { return n - floor_div(n, d) * d; }

}  // namespace

std::string to_string_i128(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    std::string s;
    while (u) {
        s.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

int128 parse_i128(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer");
    size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("bad integer: " + s);
    int128 v = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit((unsigned char)s[i])) throw std::invalid_argument("bad integer: " + s);
        v = checked_add(checked_mul(v, 10), s[i] - '0');
    }
    return neg ? -v : v;
}

EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y) {
    return {checked_add(x.a, y.a), checked_add(x.b, y.b)};
}

EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y) {
    return {checked_sub(x.a, y.a), checked_sub(x.b, y.b)};
}

EisensteinInt operator-(const EisensteinInt& x) { return {checked_sub(0, x.a), checked_sub(0, x.b)}; }

EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y) {
    int128 ac = checked_mul(x.a, y.a);
    int128 bd = checked_mul(x.b, y.b);
    int128 ad = checked_mul(x.a, y.b);
    int128 bc = checked_mul(x.b, y.a);
    return {checked_sub(ac, bd), checked_sub(checked_add(ad, bc), bd)};
}

const std::array<EisensteinInt, 6>& units() {
    static const std::array<EisensteinInt, 6> u = {
        EisensteinInt{1, 0},  EisensteinInt{0, 1},  EisensteinInt{-1, -1},
        EisensteinInt{-1, 0}, EisensteinInt{0, -1}, EisensteinInt{1, 1},
    };
    return u;
}

bool is_unit(const EisensteinInt& z) { return norm(z) == 1; }

int128 norm(const EisensteinInt& z) {
    int128 aa = checked_mul(z.a, z.a);
    int128 ab = checked_mul(z.a, z.b);
    int128 bb = checked_mul(z.b, z.b);
    return checked_add(checked_sub(aa, ab), bb);
}

EisensteinInt conj(const EisensteinInt& z) { return {checked_sub(z.a, z.b), checked_sub(0, z.b)}; }

DivRem divrem(const EisensteinInt& x, const EisensteinInt& y) {
    if (y.is_zero()) throw std::domain_error("eisenstein: division by zero");
    int128 n = norm(y);
    // x/y = x*conj(y)/norm(y); round each rational coordinate to nearest,
    // breaking exact halves downward (smaller coefficient).
    EisensteinInt t = x * conj(y);
    auto round_nearest = [&](int128 num) {
        int128 q = floor_div(num, n);
        int128 r = num - q * n;  // 0 <= r < n
        if (2 * r > n) ++q;
        return q;
    };
    EisensteinInt q{round_nearest(t.a), round_nearest(t.b)};
    EisensteinInt r = x - q * y;
    return {q, r};
}

EisensteinInt mod(const EisensteinInt& x, const EisensteinInt& m) { return divrem(x, m).r; }

bool divides(const EisensteinInt& d, const EisensteinInt& z) {
    if (d.is_zero()) return z.is_zero();
    return mod(z, d).is_zero();
}

bool congruent_mod(const EisensteinInt& z, const EisensteinInt& w, const EisensteinInt& m) {
    if (m.is_zero()) throw std::domain_error("congruent_mod: zero modulus");
    return divides(m, z - w);
}

bool is_primary(const EisensteinInt& z) {
    return mod_floor(z.a, 3) == 1 && mod_floor(z.b, 3) == 0;
}

EisensteinInt primary_associate(const EisensteinInt& z) {
    if (norm(z) % 3 == 0) throw std::domain_error("primary_associate: norm divisible by 3");
    for (const auto& u : units()) {
        EisensteinInt w = u * z;
        if (is_primary(w)) return w;
    }
    throw std::logic_error("primary_associate: no primary associate");  // unreachable
}

EisensteinInt normalize_associate(const EisensteinInt& z) {
    if (z.is_zero()) return z;
    if (norm(z) % 3 != 0) return primary_associate(z);
    EisensteinInt best;
    bool have = false;
    for (const auto& u : units()) {
        EisensteinInt w = u * z;
        if (w.a <= 0) continue;
        auto key = [](const EisensteinInt& e) {
            return std::tuple<int, int128, int128>(e.b >= 0 ? 0 : 1, e.a, e.b);
        };
        if (!have || key(w) < key(best)) {
            best = w;
            have = true;
        }
    }
    return have ? best : z;  // a > 0 candidate always exists for z != 0
}

EisensteinInt gcd(EisensteinInt x, EisensteinInt y) {
    if (x.is_zero() && y.is_zero()) throw std::domain_error("gcd(0,0) undefined");
    while (!y.is_zero()) {
        EisensteinInt r = mod(x, y);
        x = y;
        y = r;
    }
    return normalize_associate(x);
}

ResidueSystem residues(const EisensteinInt& m, int128 cap) {
    if (m.is_zero()) throw std::domain_error("residues: zero modulus");
    int128 n = norm(m);
    if (n > cap) throw std::length_error("residues: enumeration cap exceeded");
    // Column HNF of the lattice spanned by m = (a,b) and m*w = (-b, a-b):
    // gcd of the second coordinates gives the y-period d2, then the
    // x-period is norm/d2.
    // Find lattice vector with smallest positive y via integer gcd combo.
    int128 a = m.a, b = m.b;
    // y-coordinates generated: {b, a-b} -> d2 = gcd(b, a-b)
    auto igcd = [](int128 u, int128 v) {
        if (u < 0) u = -u;
        if (v < 0) v = -v;
        while (v) {
            int128 t = u % v;
            u = v;
            v = t;
        }
        return u;
    };
    int128 d2 = igcd(b, a - b);
    if (d2 == 0) d2 = 1;  // m rational: lattice has basis (a,0),(0,a)... handled below
    int128 d1 = n / d2;
    ResidueSystem sys;
    sys.modulus = m;
    sys.representatives.reserve(size_t(n));
    for (int128 x = 0; x < d1; ++x)
        for (int128 y = 0; y < d2; ++y) sys.representatives.push_back(EisensteinInt{x, y});
    return sys;
}

EisensteinInt canonical_rep(const EisensteinInt& z, const EisensteinInt& m) {
    // Reduce into the HNF box used by residues(): first y mod d2 using a
    // lattice vector with y-coordinate d2, then x mod d1.
    if (m.is_zero()) throw std::domain_error("canonical_rep: zero modulus");
    int128 n = norm(m);
    int128 a = m.a, b = m.b;
    // extended gcd over the y-coordinates of m and m*w
    int128 r0 = b, r1 = a - b;
    int128 s0 = 1, s1 = 0, t0 = 0, t1 = 1;  // coefficients on m, m*w
    while (r1 != 0) {
        int128 q = floor_div(r0, r1);
        int128 r2 = r0 - q * r1;
        int128 s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    int128 d2 = r0;
    EisensteinInt g = EisensteinInt{s0, 0} * m + EisensteinInt{t0, 0} * (m * kOmega);
    EisensteinInt red = z;
    if (d2 < 0) {
        d2 = -d2;
        g = -g;
    }
    if (d2 == 0) {
        d2 = 1;  // can't happen for m != 0 (b and a-b both zero implies m == 0... or b==0,a==b==0)
    }
    // g has g.b == d2
    int128 k = floor_div(red.b, d2);
    red = red - EisensteinInt{k, 0} * g;
    // now 0 <= red.b < d2; reduce a mod d1 using lattice vector (d1, 0)
    int128 d1 = n / d2;
    red.a = mod_floor(red.a, d1);
    return red;
}

std::string to_string(const EisensteinInt& z) {
    if (z.b == 0) return to_string_i128(z.a);
    std::string bs;
    if (z.b == 1) bs = "w";
    else if (z.b == -1) bs = "-w";
    else bs = to_string_i128(z.b) + "*w";
    if (z.a == 0) return bs;
    std::string s = to_string_i128(z.a);
    if (z.b > 0) s += "+";
    return s + bs;
}

EisensteinInt parse_eisenstein(const std::string& in) {
    // accepts "a", "b*w", "bw", "a+b*w", "-2-3*w", "w", "-w", "1+w"
    std::string s;
    for (char c : in)
        if (!std::isspace((unsigned char)c)) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty eisenstein literal");
    // split into terms at '+'/'-' boundaries (keeping signs)
    std::vector<std::string> terms;
    size_t start = 0;
    for (size_t i = 1; i <= s.size(); ++i) {
        if (i == s.size() || ((s[i] == '+' || s[i] == '-') && s[i - 1] != '+' && s[i - 1] != '-')) {
            terms.push_back(s.substr(start, i - start));
            start = i;
        }
    }
    int128 a = 0, b = 0;
    for (auto& t : terms) {
        bool omega_term = !t.empty() && (t.back() == 'w' || t.back() == 'W');
        if (omega_term) {
            std::string coef = t.substr(0, t.size() - 1);
            if (!coef.empty() && coef.back() == '*') coef.pop_back();
            if (coef.empty() || coef == "+") coef = "1";
            else if (coef == "-") coef = "-1";
            b = checked_add(b, parse_i128(coef));
        } else {
            a = checked_add(a, parse_i128(t));
        }
    }
    return {a, b};
}

}  // namespace cubiclf
