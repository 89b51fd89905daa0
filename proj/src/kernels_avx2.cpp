// AVX2+FMA variants of the batched kernels. This TU is compiled with
// -mavx2 -mfma; the dispatcher only routes here after a CPUID check.
#include "cubiclf/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)
#define CUBICLF_AVX2_BUILD 1
#include <immintrin.h>

#include <cmath>

namespace cubiclf::kernels {

namespace {

// ---- vector sin/cos on [-pi, pi] via quadrant reduction + Taylor in x^2 ----

inline __m256d poly_sin(__m256d x) {
    const __m256d u = _mm256_mul_pd(x, x);
    __m256d p = _mm256_set1_pd(2.8114572543455208e-15);   // 1/17!
    p = _mm256_fmadd_pd(p, u, _mm256_set1_pd(-7.6471637318198164e-13));  // -1/15!
    p = _mm256_fmadd_pd(p, u, _mm256_set1_pd(1.6059043836821613e-10));   // 1/13!
    p = _mm256_fmadd_pd(p, u, _mm256_set1_pd(-2.5052108385441720e-8));   // -1/11!
    p = _mm256_fmadd_pd(p, u, _mm256_set1_pd(2.7557319223985893e-6));    // 1/9!
    p = _mm256_fmadd_pd(p, u, _mm256_set1_pd(-1.9841269841269841e-4));   // -1/7!
    p = _mm256_fmadd_pd(p, u, _mm256_set1_pd(8.3333333333333333e-3));    // 1/5!
    p = _mm256_fmadd_pd(p, u, _mm256_set1_pd(-1.6666666666666667e-1));   // -1/3!
    p = _mm256_fmadd_pd(p, u, _mm256_set1_pd(1.0));
    return _mm256_mul_pd(p, x);
}

inline __m256d poly_cos(__m256d x) {
    const __m256d u = _mm256_mul_pd(x, x);
    __m256d p = _mm256_set1_pd(4.7794773323873853e-14);   // 1/16!
    p = _mm256_fmadd_pd(p, u, _mm256_set1_pd(-1.1470745597729725e-11));  // -1/14!
    p = _mm256_fmadd_pd(p, u, _mm256_set1_pd(2.0876756987868099e-9));    // 1/12!
    p = _mm256_fmadd_pd(p, u, _mm256_set1_pd(-2.7557319223985888e-7));   // -1/10!
    p = _mm256_fmadd_pd(p, u, _mm256_set1_pd(2.4801587301587302e-5));    // 1/8!
    p = _mm256_fmadd_pd(p, u, _mm256_set1_pd(-1.3888888888888889e-3));   // -1/6!
    p = _mm256_fmadd_pd(p, u, _mm256_set1_pd(4.1666666666666667e-2));    // 1/4!
    p = _mm256_fmadd_pd(p, u, _mm256_set1_pd(-5.0e-1));                  // -1/2!
    p = _mm256_fmadd_pd(p, u, _mm256_set1_pd(1.0));
    return p;
}

// theta in [-pi - eps, pi + eps]; writes cos(theta), sin(theta)
inline void sincos_pm_pi(__m256d theta, __m256d& c, __m256d& s) {
    const __m256d two_over_pi = _mm256_set1_pd(0.63661977236758134);
    const __m256d pio2_hi = _mm256_set1_pd(1.5707963267948966);
    const __m256d pio2_lo = _mm256_set1_pd(6.123233995736766e-17);
    __m256d k = _mm256_round_pd(_mm256_mul_pd(theta, two_over_pi),
                                _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d x = _mm256_fnmadd_pd(k, pio2_hi, theta);
    x = _mm256_fnmadd_pd(k, pio2_lo, x);
    __m256d sp = poly_sin(x), cp = poly_cos(x);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d neg0 = _mm256_set1_pd(-0.0);
    __m256d kabs = _mm256_andnot_pd(neg0, k);
    __m256d odd = _mm256_cmp_pd(kabs, one, _CMP_EQ_OQ);       // |k| == 1
    __m256d keven_sign = _mm256_cmp_pd(kabs, zero, _CMP_NEQ_OQ);  // k != 0 -> flip
    __m256d ksign = _mm256_and_pd(k, neg0);                   // sign bit of k
    // even k: (cos, sin) = (+-cp, +-sp), sign - iff k != 0
    __m256d even_flip = _mm256_and_pd(keven_sign, neg0);
    __m256d ce = _mm256_xor_pd(cp, even_flip);
    __m256d se = _mm256_xor_pd(sp, even_flip);
    // odd k: cos = -sign(k) * sp, sin = sign(k) * cp
    __m256d co = _mm256_xor_pd(_mm256_xor_pd(sp, ksign), neg0);
    __m256d so = _mm256_xor_pd(cp, ksign);
    c = _mm256_blendv_pd(ce, co, odd);
    s = _mm256_blendv_pd(se, so, odd);
}

inline __m256d poly_exp(__m256d x) {
    // exp on |r| <= ln2/2 after k*ln2 reduction; Taylor through r^13
    const __m256d ln2_hi = _mm256_set1_pd(0.69314718055994529);
    const __m256d ln2_lo = _mm256_set1_pd(2.3190468138462996e-17);
    const __m256d inv_ln2 = _mm256_set1_pd(1.4426950408889634);
    __m256d k = _mm256_round_pd(_mm256_mul_pd(x, inv_ln2),
                                _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    // clamp to keep the exponent-bit construction defined
    k = _mm256_max_pd(_mm256_set1_pd(-1021.0), _mm256_min_pd(_mm256_set1_pd(1022.0), k));
    __m256d r = _mm256_fnmadd_pd(k, ln2_hi, x);
    r = _mm256_fnmadd_pd(k, ln2_lo, r);
    __m256d p = _mm256_set1_pd(1.6059043836821613e-10);  // 1/13!
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(2.0876756987868099e-9));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(2.5052108385441720e-8));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(2.7557319223985893e-7));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(2.7557319223985888e-6));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(2.4801587301587302e-5));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.9841269841269841e-4));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.3888888888888889e-3));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(8.3333333333333333e-3));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(4.1666666666666667e-2));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.6666666666666667e-1));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(5.0e-1));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));
    // scale by 2^k via exponent bits
    __m128i ki32 = _mm256_cvtpd_epi32(k);
    __m256i ki64 = _mm256_cvtepi32_epi64(ki32);
    __m256i bits = _mm256_slli_epi64(_mm256_add_epi64(ki64, _mm256_set1_epi64x(1023)), 52);
    return _mm256_mul_pd(p, _mm256_castsi256_pd(bits));
}

struct VNeumaier {
    __m256d s = _mm256_setzero_pd();
    __m256d c = _mm256_setzero_pd();
    inline void add(__m256d x) {
        const __m256d neg0 = _mm256_set1_pd(-0.0);
        __m256d t = _mm256_add_pd(s, x);
        __m256d as = _mm256_andnot_pd(neg0, s);
        __m256d ax = _mm256_andnot_pd(neg0, x);
        __m256d big_s = _mm256_cmp_pd(as, ax, _CMP_GE_OQ);
        __m256d corr_s = _mm256_add_pd(_mm256_sub_pd(s, t), x);
        __m256d corr_x = _mm256_add_pd(_mm256_sub_pd(x, t), s);
        c = _mm256_add_pd(c, _mm256_blendv_pd(corr_x, corr_s, big_s));
        s = t;
    }
    // fold lanes 0..3 in order with a scalar Neumaier pass
    double value() const {
        alignas(32) double sv[4], cv[4];
        _mm256_store_pd(sv, s);
        _mm256_store_pd(cv, c);
        double acc = 0.0, comp = 0.0;
        for (int i = 0; i < 4; ++i) {
            double x = sv[i] + cv[i];
            double t = acc + x;
            if (std::abs(acc) >= std::abs(x))
                comp += (acc - t) + x;
            else
                comp += (x - t) + acc;
            acc = t;
        }
        return acc + comp;
    }
};

inline void deinterleave(const std::complex<double>* v, std::size_t i, __m256d& re,
                                 __m256d& im) {
    const double* p = reinterpret_cast<const double*>(v + i);
    __m256d v0 = _mm256_loadu_pd(p);      // r0 i0 r1 i1
    __m256d v1 = _mm256_loadu_pd(p + 4);  // r2 i2 r3 i3
    __m256d lo = _mm256_unpacklo_pd(v0, v1);  // r0 r2 r1 r3
    __m256d hi = _mm256_unpackhi_pd(v0, v1);  // i0 i2 i1 i3
    re = _mm256_permute4x64_pd(lo, _MM_SHUFFLE(3, 1, 2, 0));
    im = _mm256_permute4x64_pd(hi, _MM_SHUFFLE(3, 1, 2, 0));
}

}  // namespace

ClassSums cis_class_sum_avx2(const double* phase, const std::uint8_t* cls,
                                     std::size_t n) {
    const __m256d two_pi = _mm256_set1_pd(6.2831853071795865);
    VNeumaier re[3], im[3];
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d ph = _mm256_loadu_pd(phase + i);
        // frac to [-0.5, 0.5], then angle in [-pi, pi]
        __m256d r = _mm256_sub_pd(
            ph, _mm256_round_pd(ph, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC));
        __m256d c, s;
        sincos_pm_pi(_mm256_mul_pd(r, two_pi), c, s);
        for (int k = 0; k < 3; ++k) {
            __m256d m = _mm256_castsi256_pd(_mm256_cmpeq_epi64(
                _mm256_set_epi64x(cls[i + 3], cls[i + 2], cls[i + 1], cls[i + 0]),
                _mm256_set1_epi64x(k)));
            re[k].add(_mm256_and_pd(m, c));
            im[k].add(_mm256_and_pd(m, s));
        }
    }
    ClassSums out;
    for (int k = 0; k < 3; ++k) out.s[k] = {re[k].value(), im[k].value()};
    if (i < n) {  // scalar tail, appended in order
        ClassSums tail = cis_class_sum_scalar(phase + i, cls + i, n - i);
        for (int k = 0; k < 3; ++k) out.s[k] += tail.s[k];
    }
    return out;
}

std::complex<double> exp_dot_avx2(const std::complex<double>* coeff, const double* logn,
                                          std::size_t n, std::complex<double> s) {
    const __m256d sig = _mm256_set1_pd(-s.real());
    const __m256d tau = _mm256_set1_pd(-s.imag());
    const __m256d inv_two_pi = _mm256_set1_pd(0.15915494309189534);
    const __m256d two_pi_hi = _mm256_set1_pd(6.2831853071795865);
    const __m256d two_pi_lo = _mm256_set1_pd(2.4492935982947064e-16);
    VNeumaier re, im;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d L = _mm256_loadu_pd(logn + i);
        __m256d mag = poly_exp(_mm256_mul_pd(sig, L));
        __m256d ang = _mm256_mul_pd(tau, L);
        __m256d j = _mm256_round_pd(_mm256_mul_pd(ang, inv_two_pi),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
        ang = _mm256_fnmadd_pd(j, two_pi_hi, ang);
        ang = _mm256_fnmadd_pd(j, two_pi_lo, ang);
        __m256d c, sn;
        sincos_pm_pi(ang, c, sn);
        c = _mm256_mul_pd(c, mag);
        sn = _mm256_mul_pd(sn, mag);
        __m256d cr, ci;
        deinterleave(coeff, i, cr, ci);
        re.add(_mm256_fnmadd_pd(ci, sn, _mm256_mul_pd(cr, c)));
        im.add(_mm256_fmadd_pd(cr, sn, _mm256_mul_pd(ci, c)));
    }
    std::complex<double> out{re.value(), im.value()};
    if (i < n) out += exp_dot_scalar(coeff + i, logn + i, n - i, s);
    return out;
}

std::complex<double> compensated_sum_avx2(const std::complex<double>* v, std::size_t n) {
    VNeumaier re, im;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d cr, ci;
        deinterleave(v, i, cr, ci);
        re.add(cr);
        im.add(ci);
    }
    std::complex<double> out{re.value(), im.value()};
    if (i < n) out += compensated_sum_scalar(v + i, n - i);
    return out;
}

}  // namespace cubiclf::kernels

#endif  // CUBICLF_AVX2_BUILD
