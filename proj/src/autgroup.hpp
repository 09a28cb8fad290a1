#pragma once

#include <optional>

#include "maps.hpp"

namespace psell {

// Elementary generators of the stability group of the target model at
// the origin. Indices are user order, 0-based; permutations act on the
// exponent >= 2 coordinates, Mobius vectors live on the exponent-1
// coordinates, the linear part is an s x s unitary on the exponent-1
// block plus one unimodular phase per exponent >= 2 coordinate.
struct AutElement {
    enum class Kind { Perm, Dilation, Mobius, LinearPhase };
    Kind kind = Kind::Dilation;

    std::map<int, int> perm;    // Perm: exponent-preserving
    mpq_class lambda = 1;       // Dilation: > 0
    std::vector<GRat> b;        // Mobius: length N
    mpq_class r = 0;            // Mobius
    Matrix U;                   // LinearPhase: s x s unitary
    std::vector<GRat> mu;       // LinearPhase: per exponent >= 2 coordinate

    static AutElement dilation(const mpq_class& lambda);
    static AutElement permutation(std::map<int, int> perm);
    static AutElement mobius(std::vector<GRat> b, mpq_class r);
    static AutElement linear_phase(Matrix U, std::vector<GRat> mu);
};

// Normal form Delta_lambda o Lambda_{U,mu} o Psi_{b,r} o Sigma_perm.
struct CanonicalAut {
    ExponentSignature target;
    mpq_class lambda = 1;
    Matrix U;                 // s x s, indexed by exponent-1 slots in user order
    std::vector<GRat> mu;     // per exponent >= 2 coordinate, user order
    std::vector<GRat> b;      // length N, supported on exponent-1 coordinates
    mpq_class r = 0;
    std::map<int, int> perm;  // permutation of exponent >= 2 coordinates

    friend bool operator==(const CanonicalAut& a, const CanonicalAut& b);
};

CanonicalAut identity_aut(const ExponentSignature& target);
CanonicalAut canonical_from_element(const ExponentSignature& target, const AutElement& g);
void validate_aut(const CanonicalAut& t);

// Normal form of a o b (b applied first). Exact in the parameters.
CanonicalAut compose_pair(const CanonicalAut& a, const CanonicalAut& b);
// Normal form of word[0] o word[1] o ... (rightmost applied first).
CanonicalAut compose_word(const ExponentSignature& target, const std::vector<AutElement>& word);
CanonicalAut invert_aut(const CanonicalAut& t);

// Connected components of the stability group correspond to the
// permutation part.
bool same_component(const CanonicalAut& a, const CanonicalAut& b);

// Post-composition action on classified maps; exact on the q-power
// representation.
ClassifiedMap apply_aut(const CanonicalAut& t, const ClassifiedMap& h);
ClassifiedMap apply_element(const AutElement& g, const ClassifiedMap& h);

// The automorphism as a self-map of the target model.
ClassifiedMap realize_as_map(const CanonicalAut& t);

// Principal-branch numeric action on a target-space point.
std::vector<std::complex<double>> eval_aut(const CanonicalAut& t, std::vector<std::complex<double>> z,
                                           std::complex<double> w);
std::vector<std::complex<double>> eval_element(const AutElement& g, const ExponentSignature& target,
                                               std::vector<std::complex<double>> z, std::complex<double> w);

// Searches for T with apply_aut(T, h1) = h2 (equality of q-power
// representations over exact parameters); nullopt when no such T exists
// in the exact parameter domain.
std::optional<CanonicalAut> orbit_equivalent(const ClassifiedMap& h1, const ClassifiedMap& h2);

}  // namespace psell
