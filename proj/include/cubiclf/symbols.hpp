#pragma once

#include <complex>
#include <vector>

#include "cubiclf/eisenstein.hpp"
#include "cubiclf/primes.hpp"

namespace cubiclf {

// Value of a cubic residue symbol: 0 or w^exponent.
struct CubicValue {
    bool zero = false;
    int exponent = 0;  // in {0,1,2}, meaningful when !zero

    static CubicValue make_zero() { return {true, 0}; }
    static CubicValue omega_pow(int k) { return {false, ((k % 3) + 3) % 3}; }

    bool operator==(const CubicValue&) const = default;
    CubicValue operator*(const CubicValue& o) const {
        if (zero || o.zero) return make_zero();
        return omega_pow(exponent + o.exponent);
    }
    CubicValue conj() const { return zero ? *this : omega_pow(-exponent); }
    std::complex<double> to_complex() const;
};

// (a/pi)_3 by the defining congruence a^{(N(pi)-1)/3} == w^k (mod pi).
// This is the oracle path; it requires pi prime (else the exponent test
// can fail, which is reported as std::domain_error).
CubicValue symbol_prime(const EisensteinInt& a, const EisensteinInt& pi);
CubicValue symbol_prime(const EisensteinInt& a, const PrimaryPrime& pi);

// (a/n)_3 for any n with gcd(N(n), 3) = 1, computed without factoring n:
// reduce a mod n, strip unit and (1-w) cofactors via the supplementary
// laws, then swap the primary parts through cubic reciprocity and repeat.
// The supplementary exponents used (for primary c = a+bw, m = (a-1)/3,
// k = b/3):   (w/c)_3 = w^{-(m+k)},   ((1-w)/c)_3 = w^{m},   (-1/c)_3 = 1,
// and (p/q)_3 = (q/p)_3 for primary p, q. These are pinned against the
// exponentiation oracle in the test suite.
CubicValue symbol(const EisensteinInt& a, const EisensteinInt& n);

// A cubic Hecke symbol chi_{j,pi} (or its conjugate) of prime modulus.
struct CubicCharacter {
    EisensteinInt modulus;     // primary
    std::uint64_t conductor_norm = 0;
    bool conjugated = false;   // evaluate conj symbol

    CubicValue operator()(const EisensteinInt& a) const {
        CubicValue v = symbol(a, modulus);
        return conjugated ? v.conj() : v;
    }
};

// The ray class group mod (9): residues mod 9 coprime to 3, modulo the
// image of the unit group. Structure and characters derived by enumeration.
class RayClassGroup9 {
  public:
    RayClassGroup9();

    int order() const { return order_; }
    int num_generators() const { return int(gen_orders_.size()); }
    const std::vector<int>& generator_orders() const { return gen_orders_; }
    const std::vector<EisensteinInt>& generators() const { return gens_; }

    // Index of the class of (n) for n coprime to 3 (associate-invariant).
    int class_index(const EisensteinInt& n) const;

    // Character values psi_t(n), t in [0, order). psi_0 is principal.
    std::complex<double> character(int t, const EisensteinInt& n) const;
    std::complex<double> character_on_class(int t, int cls) const;

    // (1/order) sum_t psi_t(n): 1 if the class of (n) is trivial, else 0.
    std::complex<double> detector(const EisensteinInt& n) const;

  private:
    int order_ = 0;
    std::vector<EisensteinInt> gens_;
    std::vector<int> gen_orders_;
    std::vector<int> class_of_rep_;            // residue-box index -> class index
    std::vector<std::vector<int>> dlogs_;      // class index -> exponent vector
    std::vector<EisensteinInt> box_;           // residues mod 9 (all 81)
};

const RayClassGroup9& ray_class_group9();

}  // namespace cubiclf
