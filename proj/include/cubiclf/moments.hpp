#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "cubiclf/analytic.hpp"
#include "cubiclf/lfunctions.hpp"
#include "cubiclf/primes.hpp"

namespace cubiclf {

struct TermRecord {
    PrimaryPrime prime;
    double weight = 0.0;
    cdouble value{0.0, 0.0};
};

struct MomentReport {
    std::string kind;  // ratios|first|negative|logderiv|density and q_ prefixes
    double X = 0.0;    // X (K side) or Q (Q side)
    cdouble alpha{0.0, 0.0};
    std::optional<cdouble> beta;  // beta, or r stored in alpha for logderiv
    cdouble lhs{0.0, 0.0};
    cdouble main_term{0.0, 0.0};
    cdouble ratio{0.0, 0.0};
    double predicted_E = 0.0;
    double predicted_delta = 0.0;
    std::size_t family_size = 0;  // members with nonzero weight
    std::string weight_name = "bump";
    std::vector<std::string> flags;

    // density extras
    double support_a = 0.0;
    double density_leading = 0.0;   // integral of h
    double asym_prediction = 0.0;   // a < 1 closed form, int(h)-coefficient reading
    double asym_literal = 0.0;      // same with the printed 2*hat_h(1) coefficient
    double zero_height = 0.0;       // T used by the zero finder
    std::size_t zero_count = 0;

    std::string to_json() const;
};

struct FamilyOptions {
    bool split_only = false;
    bool dump_terms = false;
    std::vector<TermRecord> terms;  // filled when dump_terms
    std::string zero_cache_dir;     // density: reuse zero lists when set
};

MomentReport ratios_sum(double X, cdouble alpha, cdouble beta, FamilyOptions* opt = nullptr);
MomentReport first_moment(double X, cdouble alpha, FamilyOptions* opt = nullptr);
MomentReport negative_moment(double X, cdouble beta, FamilyOptions* opt = nullptr);
MomentReport logderiv_moment(double X, cdouble r, FamilyOptions* opt = nullptr);
MomentReport one_level_density(double X, double a, FamilyOptions* opt = nullptr);

// Q-side analogues (sums over both cubic Dirichlet characters mod p).
MomentReport q_ratios_sum(double Q, cdouble alpha, cdouble beta, FamilyOptions* opt = nullptr);
MomentReport q_first_moment(double Q, cdouble alpha, FamilyOptions* opt = nullptr);
MomentReport q_negative_moment(double Q, cdouble beta, FamilyOptions* opt = nullptr);
MomentReport q_logderiv_moment(double Q, cdouble r, FamilyOptions* opt = nullptr);
MomentReport q_one_level_density(double Q, double a, FamilyOptions* opt = nullptr);

// Truncated triple Dirichlet series A_{K,j}(s, w, z) over family N(pi) <= X.
cdouble mds_partial(cdouble s, cdouble w, cdouble z, double X);

// Residue identity at s = 1: Euler-product side and zeta-ratio side.
std::pair<cdouble, cdouble> residue_identity(cdouble w, cdouble z, double cutoff);

// Exact weighted family size F(X) = sum Lambda_K(pi) w(N/X).
double family_F(double X, bool split_only = false);

}  // namespace cubiclf
