#include <atomic>
#include <stdexcept>

#include "cubiclf/kernels.hpp"

namespace cubiclf::kernels {

#ifdef CUBICLF_HAVE_AVX2_IMPL
ClassSums cis_class_sum_avx2(const double*, const std::uint8_t*, std::size_t);
std::complex<double> exp_dot_avx2(const std::complex<double>*, const double*, std::size_t,
                                  std::complex<double>);
std::complex<double> compensated_sum_avx2(const std::complex<double>*, std::size_t);
#endif

bool avx2_supported() {
#ifdef CUBICLF_HAVE_AVX2_IMPL
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

std::atomic<int> g_isa{-1};  // -1 = undecided

Isa decide() {
    int cur = g_isa.load();
    if (cur >= 0) return Isa(cur);
    Isa pick = avx2_supported() ? Isa::avx2 : Isa::scalar;
    g_isa.store(int(pick));
    return pick;
}

}  // namespace

Isa active_isa() { return decide(); }

void force_isa(Isa isa) {
    if (isa == Isa::avx2 && !avx2_supported())
        throw std::runtime_error("kernels: avx2 not supported on this host");
    g_isa.store(int(isa));
}

std::string isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

ClassSums cis_class_sum(const double* phase, const std::uint8_t* cls, std::size_t n) {
#ifdef CUBICLF_HAVE_AVX2_IMPL
    if (decide() == Isa::avx2) return cis_class_sum_avx2(phase, cls, n);
#endif
    return cis_class_sum_scalar(phase, cls, n);
}

std::complex<double> exp_dot(const std::complex<double>* coeff, const double* logn,
                             std::size_t n, std::complex<double> s) {
#ifdef CUBICLF_HAVE_AVX2_IMPL
    if (decide() == Isa::avx2) return exp_dot_avx2(coeff, logn, n, s);
#endif
    return exp_dot_scalar(coeff, logn, n, s);
}

std::complex<double> compensated_sum(const std::complex<double>* v, std::size_t n) {
#ifdef CUBICLF_HAVE_AVX2_IMPL
    if (decide() == Isa::avx2) return compensated_sum_avx2(v, n);
#endif
    return compensated_sum_scalar(v, n);
}

}  // namespace cubiclf::kernels
