#pragma once

#include <complex>
#include <random>
#include <vector>

#include "poly.hpp"

namespace psell {

// Exponent tuple of a model hypersurface {Im w = sum |z_j|^(2 q_j)}.
// Entries are kept in the user's coordinate order; `ones_first_perm`
// records the stable permutation that moves the q_j = 1 entries to the
// front (the arrangement used by the classification statements).
struct ExponentSignature {
    std::vector<unsigned> exps;
    // user position -> normalized position
    std::vector<int> ones_first_perm;

    int size() const { return static_cast<int>(exps.size()); }
    // number of exponents equal to 1
    int ones_count() const;
    std::vector<int> ones_positions() const;    // user indices with q_j = 1, ascending
    std::vector<int> higher_positions() const;  // user indices with q_j >= 2, ascending
    std::vector<unsigned> normalized_exps() const;
    std::vector<unsigned> denormalized(const std::vector<unsigned>& normalized) const;
};

ExponentSignature normalize_signature(const std::vector<unsigned>& raw);

struct ProblemInstance {
    ExponentSignature source;  // length n, never reordered
    ExponentSignature target;  // length N

    int n() const { return source.size(); }
    int N() const { return target.size(); }
    bool codim_ok() const { return N() - n() < n(); }
    void require_embedding_direction() const;
    void require_codim() const;
};

ProblemInstance make_instance(const std::vector<unsigned>& p, const std::vector<unsigned>& q);

// The polarized complex defining function Q(z, chi, tau) = tau +
// 2i * sum_j z_j^{q_j} chi_j^{q_j}, so that the hypersurface is
// {w = Q(z, conj z, conj w)}.
HermPoly defining_polynomial(const ExponentSignature& sig);

struct SamplePoint {
    std::vector<std::complex<double>> z;
    std::complex<double> w;
};

// Random point on {Im w = sum |z_j|^(2 p_j)} in floating arithmetic.
SamplePoint sample_point(const ExponentSignature& sig, std::mt19937_64& rng);

}  // namespace psell
