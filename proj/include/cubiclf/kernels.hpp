#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>

namespace cubiclf::kernels {

enum class Isa { scalar, avx2 };

// Active implementation; auto-detected on first use, overridable for tests
// and for reproducing results across machines.
Isa active_isa();
void force_isa(Isa isa);  // throws std::runtime_error if unsupported
std::string isa_name(Isa isa);

struct ClassSums {
    std::complex<double> s[3] = {0.0, 0.0, 0.0};
};

// Per-class accumulation of unit phasors: s[cls[i]] += e(phase[i]), phases
// in turns (cycles). The batched inner loop of the character sums.
ClassSums cis_class_sum(const double* phase, const std::uint8_t* cls, std::size_t n);

// sum_i coeff[i] * exp(-s * logn[i]): the Dirichlet-series / theta kernel.
std::complex<double> exp_dot(const std::complex<double>* coeff, const double* logn,
                             std::size_t n, std::complex<double> s);

// Neumaier-compensated sum in array order.
std::complex<double> compensated_sum(const std::complex<double>* v, std::size_t n);

// Scalar reference implementations (always available; equivalence oracle).
ClassSums cis_class_sum_scalar(const double* phase, const std::uint8_t* cls, std::size_t n);
std::complex<double> exp_dot_scalar(const std::complex<double>* coeff, const double* logn,
                                    std::size_t n, std::complex<double> s);
std::complex<double> compensated_sum_scalar(const std::complex<double>* v, std::size_t n);

bool avx2_supported();

}  // namespace cubiclf::kernels
