#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubiclf {

using int128 = __int128;

std::string to_string_i128(int128 v);
int128 parse_i128(const std::string& s);

// Element a + b*w of Z[w], w = (-1+sqrt(-3))/2, w^2 = -1 - w.
// Coefficients are 128-bit signed; every arithmetic op checks for overflow
// and throws std::overflow_error, so results are exact or refused.
struct EisensteinInt {
    int128 a = 0;
    int128 b = 0;

    constexpr EisensteinInt() = default;
    constexpr EisensteinInt(int128 a_, int128 b_ = 0) : a(a_), b(b_) {}

    bool operator==(const EisensteinInt&) const = default;
    bool is_zero() const { return a == 0 && b == 0; }
};

EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y);
EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y);
EisensteinInt operator-(const EisensteinInt& x);
// (a+bw)(c+dw) = (ac - bd) + (ad + bc - bd) w
EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y);

inline const EisensteinInt kOmega{0, 1};
inline const EisensteinInt kLambda{1, -1};  // 1 - w, the prime above 3

// Unit group of Z[w]: 1, w, w^2, -1, -w, -w^2, as w-exponent times sign.
const std::array<EisensteinInt, 6>& units();
bool is_unit(const EisensteinInt& z);

int128 norm(const EisensteinInt& z);  // a^2 - ab + b^2 >= 0
EisensteinInt conj(const EisensteinInt& z);  // (a-b) - b w

struct DivRem {
    EisensteinInt q;
    EisensteinInt r;
};

// Euclidean division: x = q*y + r with norm(r) < norm(y). q is x/y rounded
// to the nearest lattice point in the {1,w} basis; half-integer ties round
// toward the smaller coefficient (a first, then b).
DivRem divrem(const EisensteinInt& x, const EisensteinInt& y);
EisensteinInt mod(const EisensteinInt& x, const EisensteinInt& m);
bool divides(const EisensteinInt& d, const EisensteinInt& z);

bool congruent_mod(const EisensteinInt& z, const EisensteinInt& w,
                   const EisensteinInt& m);

// The unique associate with a == 1, b == 0 (mod 3). Requires gcd(norm, 3) = 1.
EisensteinInt primary_associate(const EisensteinInt& z);
bool is_primary(const EisensteinInt& z);

// Associate normalization used by gcd: primary when coprime to 3, otherwise
// the associate with a > 0 preferring b >= 0, lexicographic (a,b) last.
EisensteinInt normalize_associate(const EisensteinInt& z);

EisensteinInt gcd(EisensteinInt x, EisensteinInt y);

struct ResidueSystem {
    EisensteinInt modulus;
    std::vector<EisensteinInt> representatives;
};

// Complete residue system mod m, canonical reps {x + y w : 0 <= x < d1,
// 0 <= y < d2} from the column HNF of the lattice (m, m w), ordered
// lexicographically on (a, b). Throws if norm(m) exceeds `cap`.
ResidueSystem residues(const EisensteinInt& m, int128 cap = int128(1) << 24);

// Canonical representative of z mod m lying in the residues(m) box.
EisensteinInt canonical_rep(const EisensteinInt& z, const EisensteinInt& m);

// Text form "a+b*w", e.g. "-2-3*w", "w", "17".
std::string to_string(const EisensteinInt& z);
EisensteinInt parse_eisenstein(const std::string& s);

}  // namespace cubiclf
