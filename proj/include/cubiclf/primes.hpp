#pragma once

#include <cstdint>
#include <vector>

#include "cubiclf/eisenstein.hpp"

namespace cubiclf {

bool is_prime_u64(std::uint64_t n);
// Prime factorization n = prod p_i^{e_i}, p_i increasing.
std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n);
// Rational primes in [2, limit], by sieve of Eratosthenes.
std::vector<std::uint64_t> rational_primes(std::uint64_t limit);

enum class Splitting { split, inert, ramified };

struct PrimaryPrime {
    EisensteinInt pi;       // primary generator (associate of 1-w if ramified)
    std::uint64_t norm = 0;
    Splitting splitting = Splitting::split;
    EisensteinInt residue_mod9;
};

// True iff (z) is a prime ideal: norm(z) is a rational prime, or z is an
// associate of an inert rational prime q == 2 (mod 3).
bool is_prime_element(const EisensteinInt& z);

// Primary pi with norm p for split p == 1 (mod 3); of the conjugate pair the
// one with b > 0 is returned (tie-break smaller a cannot occur for split p).
PrimaryPrime split_rational_prime(std::uint64_t p);

// All primary prime elements with norm <= X: both conjugates of each split
// p == 1 (mod 3), and -q for inert q == 2 (mod 3) with q^2 <= X. The
// ramified prime is never primary. Sorted by (norm, a, b).
std::vector<PrimaryPrime> primary_primes_up_to(double X,
                                               std::uint64_t cap = 400000000ull);

// The family: primary primes == 1 (mod 9). split_only drops inert members.
std::vector<PrimaryPrime> sieve_family(double X, bool split_only = false,
                                       std::uint64_t cap = 400000000ull);

// log norm(w) if n is an associate of w^k for a prime element w, else 0.
double lambda_K(const EisensteinInt& n);

// Sum of Lambda_K over family members (primes only) with norm <= y.
double chebyshev_family(double y, bool split_only = false);

}  // namespace cubiclf
