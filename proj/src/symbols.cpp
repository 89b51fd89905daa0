#include "cubiclf/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cubiclf {

namespace {

int mod3(int128 v) { return int(((v % 3) + 3) % 3); }

// w-exponent of the unit u (sign discarded: (-1/c)_3 = 1), or -1 if not a unit.
int unit_omega_exponent(const EisensteinInt& u) {
    if (u == EisensteinInt{1, 0} || u == EisensteinInt{-1, 0}) return 0;
    if (u == EisensteinInt{0, 1} || u == EisensteinInt{0, -1}) return 1;
    if (u == EisensteinInt{-1, -1} || u == EisensteinInt{1, 1}) return 2;
    return -1;
}

EisensteinInt mulmod(const EisensteinInt& x, const EisensteinInt& y, const EisensteinInt& m) {
    return mod(x * y, m);
}

}  // namespace

std::complex<double> CubicValue::to_complex() const {
    if (zero) return {0.0, 0.0};
    static const std::complex<double> w{-0.5, std::sqrt(3.0) / 2.0};
    if (exponent == 0) return {1.0, 0.0};
    return exponent == 1 ? w : std::conj(w);
}

CubicValue symbol_prime(const EisensteinInt& a, const EisensteinInt& pi) {
    int128 N = norm(pi);
    if (N % 3 == 0) throw std::domain_error("symbol_prime: modulus not coprime to 3");
    if ((N - 1) % 3 != 0) throw std::domain_error("symbol_prime: non-prime modulus");
    EisensteinInt base = mod(a, pi);
    if (base.is_zero()) return CubicValue::make_zero();
    int128 e = (N - 1) / 3;
    EisensteinInt r{1, 0};
    EisensteinInt x = base;
    while (e > 0) {
        if (e & 1) r = mulmod(r, x, pi);
        x = mulmod(x, x, pi);
        e >>= 1;
    }
    for (int k = 0; k < 3; ++k) {
        static const EisensteinInt pw[3] = {{1, 0}, {0, 1}, {-1, -1}};
        if (congruent_mod(r, pw[k], pi)) return CubicValue::omega_pow(k);
    }
    throw std::domain_error("symbol_prime: non-prime modulus (residue not a cube root of unity)");
}

CubicValue symbol_prime(const EisensteinInt& a, const PrimaryPrime& pi) {
    return symbol_prime(a, pi.pi);
}

CubicValue symbol(const EisensteinInt& a_in, const EisensteinInt& n_in) {
    if (norm(n_in) % 3 == 0) throw std::domain_error("symbol: modulus norm divisible by 3");
    if (is_unit(n_in)) return CubicValue::omega_pow(0);
    EisensteinInt n = primary_associate(n_in);
    EisensteinInt a = mod(a_in, n);
    int acc = 0;
    for (;;) {
        if (a.is_zero()) return CubicValue::make_zero();  // gcd(a, n) nontrivial
        int e = 0;
        for (;;) {
            auto dr = divrem(a, kLambda);
            if (!dr.r.is_zero()) break;
            a = dr.q;
            ++e;
        }
        EisensteinInt b = primary_associate(a);
        int uexp = -1;
        for (const auto& u : units()) {
            if (u * b == a) {
                uexp = unit_omega_exponent(u);
                break;
            }
        }
        int m = mod3((n.a - 1) / 3);
        int k = mod3(n.b / 3);
        // a = u * (1-w)^e * b:  (u/n) (lambda/n)^e = w^{uexp * -(m+k) + e * m}
        acc += uexp * (3 - mod3(m + k)) + e * m;
        if (is_unit(b)) return CubicValue::omega_pow(acc);  // b == 1
        EisensteinInt r = mod(n, b);
        n = b;
        a = r;
    }
}

RayClassGroup9::RayClassGroup9() {
    const EisensteinInt nine{9, 0};
    auto sys = residues(nine);
    box_ = sys.representatives;  // 81 reps, (a,b) with 0 <= a,b < 9, index a*9+b
    auto box_index = [&](const EisensteinInt& z) {
        EisensteinInt c = canonical_rep(z, nine);
        return int(c.a) * 9 + int(c.b);
    };
    std::vector<int> coprime;  // indices with norm coprime to 3
    for (int i = 0; i < int(box_.size()); ++i)
        if (norm(box_[i]) % 3 != 0) coprime.push_back(i);

    // coset of the unit image containing each coprime residue
    std::vector<int> coset_min(box_.size(), -1);
    for (int i : coprime) {
        int mn = box_.size();
        for (const auto& u : units()) mn = std::min(mn, box_index(u * box_[i]));
        coset_min[i] = mn;
    }
    std::vector<int> reps;  // distinct coset labels
    for (int i : coprime)
        if (coset_min[i] == i) reps.push_back(i);
    order_ = int(reps.size());

    // class ids: identity (coset of 1) first, then by label
    int id_label = coset_min[box_index(EisensteinInt{1, 0})];
    std::sort(reps.begin(), reps.end());
    std::vector<int> labels;
    labels.push_back(id_label);
    for (int r : reps)
        if (r != id_label) labels.push_back(r);
    std::vector<int> class_of_label(box_.size(), -1);
    for (int c = 0; c < int(labels.size()); ++c) class_of_label[labels[c]] = c;
    class_of_rep_.assign(box_.size(), -1);
    for (int i : coprime) class_of_rep_[i] = class_of_label[coset_min[i]];

    auto cls_mul = [&](int c1, int c2) {
        EisensteinInt p = box_[labels[c1]] * box_[labels[c2]];
        return class_of_rep_[box_index(p)];
    };
    auto cls_order = [&](int c) {
        int o = 1, cur = c;
        while (cur != 0) {
            cur = cls_mul(cur, c);
            ++o;
        }
        return o;
    };

    // generator basis by enumeration, greedy on maximal order; the product
    // of generator orders must come out equal to the group order, which
    // validates that the derived basis splits the group
    std::vector<int> gen_cls;
    std::vector<std::vector<int>> dl(order_);
    std::vector<char> reached(order_, 0);
    reached[0] = 1;
    int covered = 1;
    while (covered < order_) {
        int pick = -1, po = 0;
        for (int c = 1; c < order_; ++c) {
            if (reached[c]) continue;
            int o = cls_order(c);
            if (o > po) {
                po = o;
                pick = c;
            }
        }
        gen_cls.push_back(pick);
        gen_orders_.push_back(po);
        std::vector<std::pair<int, std::vector<int>>> base;
        for (int c = 0; c < order_; ++c)
            if (reached[c]) base.push_back({c, dl[c]});
        for (auto& [c, d] : base) {
            d.push_back(0);
            dl[c] = d;
        }
        int pw = 0;
        for (int k = 1; k < po; ++k) {
            pw = (k == 1) ? pick : cls_mul(pw, pick);
            for (auto& [c, d] : base) {
                int nc = cls_mul(c, pw);
                if (!reached[nc]) {
                    reached[nc] = 1;
                    auto nd = d;
                    nd.back() = k;
                    dl[nc] = nd;
                    ++covered;
                }
            }
        }
    }
    long long prod = 1;
    for (int o : gen_orders_) prod *= o;
    if (prod != order_) throw std::logic_error("ray class: generator basis does not split the group");
    dlogs_ = std::move(dl);
    for (int g : gen_cls) gens_.push_back(box_[labels[g]]);
}

int RayClassGroup9::class_index(const EisensteinInt& n) const {
    if (norm(n) % 3 == 0) throw std::domain_error("ray class: element not coprime to 3");
    EisensteinInt c = canonical_rep(n, EisensteinInt{9, 0});
    return class_of_rep_[int(c.a) * 9 + int(c.b)];
}

std::complex<double> RayClassGroup9::character_on_class(int t, int cls) const {
    // exponent vector of psi_t in the generator basis: mixed-radix digits of t
    double phase = 0.0;
    int tt = t;
    const auto& d = dlogs_[cls];
    for (size_t i = 0; i < gen_orders_.size(); ++i) {
        int o = gen_orders_[i];
        int e = tt % o;
        tt /= o;
        phase += double(e) * double(d[i]) / double(o);
    }
    phase -= std::floor(phase);
    return std::polar(1.0, 2.0 * std::numbers::pi * phase);
}

std::complex<double> RayClassGroup9::character(int t, const EisensteinInt& n) const {
    return character_on_class(t, class_index(n));
}

std::complex<double> RayClassGroup9::detector(const EisensteinInt& n) const {
    std::complex<double> s = 0.0;
    int cls = class_index(n);
    for (int t = 0; t < order_; ++t) s += character_on_class(t, cls);
    return s / double(order_);
}

const RayClassGroup9& ray_class_group9() {
    static const RayClassGroup9 g;
    return g;
}

}  // namespace cubiclf
