#pragma once

#include <complex>
#include <map>
#include <vector>

#include "existence.hpp"
#include "model.hpp"
#include "poly.hpp"

namespace psell {

// Coefficient matrix W = (u_ij), n rows (source) by N columns (target).
using Matrix = std::vector<std::vector<GRat>>;

Matrix identity_matrix(int n);
Matrix conj_transpose(const Matrix& m);
Matrix mat_mul(const Matrix& a, const Matrix& b);
bool rows_orthonormal(const Matrix& w);
bool is_unitary(const Matrix& u);

// Classified map in exact q-power representation. Component j of the map
// is determined by P_j = H_j^{q_j} = numerator_j / delta; the last
// component is lambda^2 w / delta. Multi-valued components are never
// stored as radicals, only realized at evaluation/printing time.
class ClassifiedMap {
public:
    static ClassifiedMap monomial(const ProblemInstance& inst, const AdmissiblePattern& pattern, const Matrix& W);
    // The canonical construction from an admissible pattern: uncovered
    // source coordinates fill the first linear slots, one representative
    // per covered source gets coefficient 1. The stored pattern is the
    // reduced one actually realized by the coefficient matrix.
    static ClassifiedMap default_witness(const ProblemInstance& inst, const AdmissiblePattern& pattern);
    static ClassifiedMap general(const ProblemInstance& inst, const AdmissiblePattern& pattern, const Matrix& W,
                                 const mpq_class& lambda, const mpq_class& r, const std::vector<GRat>& c);
    // The identity self-map of the target model (p = q, W = I).
    static ClassifiedMap identity(const ExponentSignature& q);

    const ProblemInstance& inst() const { return inst_; }
    const AdmissiblePattern& pattern() const { return pattern_; }
    const Matrix& W() const { return W_; }
    const mpq_class& lambda() const { return lambda_; }
    const mpq_class& r() const { return r_; }
    // Length N, nonzero only on exponent-1 target coordinates.
    const std::vector<GRat>& c() const { return c_; }
    const std::vector<GRat>& b_prime() const { return b_prime_; }
    const mpq_class& beta() const { return beta_; }

    const std::vector<HermPoly>& numerators() const { return numerators_; }
    const HermPoly& denominator() const { return denominator_; }
    const HermPoly& last_numerator() const { return last_numerator_; }

    // Post-composition with the elementary target automorphisms; each
    // returns the composed map, again in classified form.
    ClassifiedMap with_target_perm(const std::map<int, int>& rho) const;
    ClassifiedMap with_mobius(const std::vector<GRat>& b, const mpq_class& r) const;
    ClassifiedMap with_linear_phase(const Matrix& U, const std::vector<GRat>& mu) const;
    ClassifiedMap with_dilation(const mpq_class& factor) const;

    // Principal-branch numeric realization at a point with delta != 0.
    std::vector<std::complex<double>> evaluate(const std::vector<std::complex<double>>& z,
                                               std::complex<double> w) const;

    // Human-readable components with formal ^(1/q) radicals where an
    // exact root is unavailable.
    std::vector<std::string> radical_strings() const;

    friend bool operator==(const ClassifiedMap& a, const ClassifiedMap& b);
    friend bool operator!=(const ClassifiedMap& a, const ClassifiedMap& b) { return !(a == b); }

private:
    ClassifiedMap(ProblemInstance inst, AdmissiblePattern pattern, Matrix W, mpq_class lambda, mpq_class r,
                  std::vector<GRat> c);
    void validate() const;
    void derive();

    ProblemInstance inst_;
    AdmissiblePattern pattern_;
    Matrix W_;
    mpq_class lambda_;
    mpq_class r_;
    std::vector<GRat> c_;

    std::vector<GRat> b_prime_;
    mpq_class beta_;
    std::vector<HermPoly> numerators_;
    HermPoly denominator_;
    HermPoly last_numerator_;
};

// Mobius vector constraints: zero outside exponent-1 columns, zero
// everywhere when s = 0.
void check_mobius_vector(const ExponentSignature& target, const std::vector<GRat>& b);

}  // namespace psell
