#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "cubiclf/eisenstein.hpp"
#include "cubiclf/primes.hpp"
#include "cubiclf/symbols.hpp"

namespace cubiclf {

struct GaussSumValue {
    std::complex<double> value;
    std::uint64_t modulus_norm = 0;
};

// Additive character e~_K(x/q) = e(2 pi i ((z - zbar)/sqrt(D_K))) for
// z = x/q. Computed by the closed form e(v) where v is the w-coefficient
// of x/q, reduced mod 1 exactly as a rational.
std::complex<double> e_K(const EisensteinInt& x, const EisensteinInt& q);
// Same quantity straight from the defining display in floating point.
std::complex<double> e_K_direct(const EisensteinInt& x, const EisensteinInt& q);

// g_K(k, chi_{j,n}) by direct summation over the residue system mod n in
// its canonical order, one reciprocity symbol per residue, compensated
// accumulation. Reference path; requires gcd(N(n), 3) = 1.
GaussSumValue gauss_sum(const EisensteinInt& k, const EisensteinInt& n,
                        int128 cap = int128(1) << 24);

// Fast path for prime modulus: multiplicative enumeration by a generator
// of the residue field, batched phase/class arrays through the kernels.
// Equivalence-tested against gauss_sum.
GaussSumValue gauss_sum_prime(const EisensteinInt& k, const PrimaryPrime& pi);

struct GaussBatchEntry {
    PrimaryPrime prime;
    std::complex<double> g1;  // g_{K,j}(1, pi)
};

// g_{K,j}(pi) for every primary prime with norm <= X, in sieve order.
// Split conjugate pairs share one field enumeration (conjugate values).
std::vector<GaussBatchEntry> gauss_batch(double X);
// Same, backed by the CSV cache (a,b,norm,re,im).
std::vector<GaussBatchEntry> gauss_batch_cached(double X);

// Partial sum of h(r, s; psi) over primary primes coprime to r with
// N(pi) <= x, using the twisting law g(r, chi) = conj(chi)(r) g(1, chi).
std::complex<double> h_partial(const EisensteinInt& r, std::complex<double> s, int psi_index,
                               double x);
std::complex<double> h_partial_from_batch(const std::vector<GaussBatchEntry>& batch,
                                          const EisensteinInt& r, std::complex<double> s,
                                          int psi_index, double x);

}  // namespace cubiclf
