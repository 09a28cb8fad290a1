#pragma once

#include "maps.hpp"

namespace psell {

// Monomial ideal given by exponent-vector generators in n variables.
// Canonicalization removes generators divisible by another generator.
struct MonomialIdeal {
    int nvars = 0;
    std::vector<std::vector<unsigned>> gens;
};

MonomialIdeal make_monomial_ideal(int nvars, std::vector<std::vector<unsigned>> gens);

struct CodimResult {
    bool finite = false;
    mpz_class value = 0;  // meaningful when finite
};

// Number of monomials outside the staircase; finite exactly when every
// variable occurs as a pure power among the generators.
CodimResult monomial_codim(const MonomialIdeal& ideal);

// Codimension of (z_1^{p_1}, ..., z_n^{p_n}), by staircase counting.
mpz_class essential_type(const ExponentSignature& p);

struct MultiplicityResult {
    bool finite = false;
    mpz_class value = 0;
    bool certified = false;
    unsigned truncation_degree = 0;
};

// Codimension of the ideal generated by the components of z -> H(z, 0),
// in q-power-adjusted form: pure powers z_{sigma(k)}^{p_sigma(k)/q_k} for
// the K columns and the exponent-1 linear combinations, unit factors
// dropped. Certified via degree-stabilization; uncertified bounds are
// labeled, never silently trusted.
MultiplicityResult map_multiplicity(const ClassifiedMap& h);

// mult <= esstype. Throws when the multiplicity is uncertified.
bool check_mult_bound(const ClassifiedMap& h);

}  // namespace psell
