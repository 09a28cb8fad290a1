#pragma once

#include <cstdint>

#include "maps.hpp"

namespace psell {

// Common-denominator candidate data: component j of the candidate is the
// q_j-th root of numerators[j]/denominator, the last component is
// last_numerator/denominator. Classified maps lower into this form; the
// JSON surface also accepts it directly for externally supplied maps.
struct CandidateMap {
    ProblemInstance inst;
    std::vector<HermPoly> numerators;
    HermPoly denominator;
    HermPoly last_numerator;

    static CandidateMap from_classified(const ClassifiedMap& h);
};

// Validates polynomial shape: variables restricted to (z, w), maps the
// origin to the origin, denominator is a unit at 0.
void check_candidate(const CandidateMap& cand);

// Denominator-cleared membership combination before restriction to the
// Segre variety:
//   G(z,w) bar(delta)(chi,tau) - bar(G)(chi,tau) delta(z,w)
//     - 2i sum_j P_j(z,w) bar(P_j)(chi,tau).
// Anti-symmetric under the bar involution for every candidate.
HermPoly polarized_combination(const CandidateMap& cand);

// The combination with w replaced by the source defining function
// Q(z,chi,tau); identically zero iff the candidate sends the source model
// into the target model near 0.
HermPoly polarized_residual(const CandidateMap& cand);
HermPoly polarized_residual(const ClassifiedMap& h);

// Transversality at 0: the w-coefficient of the last numerator is nonzero
// (lambda^2 for classified maps).
bool is_transversal(const CandidateMap& cand);
bool is_transversal(const ClassifiedMap& h);

// Max over sampled source points of |Im H_{N+1} - sum_j |P_j/delta|^2|.
// Near-singular samples (|delta| below a fixed floor) are redrawn; throws
// if that persists.
double numeric_membership(const CandidateMap& cand, int nsamples, std::uint64_t seed);

// Min |delta| over sampled source points.
double denominator_min_modulus(const CandidateMap& cand, int nsamples, std::uint64_t seed);

struct ResidualReport {
    bool symbolic_zero = false;
    HermPoly residual = HermPoly(VarLayout{0});
    double numeric_max_error = 0.0;
    bool transversal = false;
    double denom_min_modulus = 0.0;
};

ResidualReport full_report(const CandidateMap& cand, int nsamples, std::uint64_t seed);

}  // namespace psell
