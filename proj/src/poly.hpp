#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "grat.hpp"

namespace psell {

// Variable layout for polynomials on the polarized model: a z-block of
// size n, a matching chi-block (the polarization of z-bar), and the two
// scalars w and tau (polarizing w-bar). Indices:
//   z_i   -> i          (0-based i < n)
//   chi_i -> n + i
//   w     -> 2n
//   tau   -> 2n + 1
struct VarLayout {
    int n = 0;

    int vars() const { return 2 * n + 2; }
    int z(int i) const { return i; }
    int chi(int i) const { return n + i; }
    int w() const { return 2 * n; }
    int tau() const { return 2 * n + 1; }

    friend bool operator==(const VarLayout& a, const VarLayout& b) { return a.n == b.n; }
    friend bool operator!=(const VarLayout& a, const VarLayout& b) { return a.n != b.n; }

    std::string var_name(int v) const;
    // Parses "z3"/"x2"/"w"/"t" (1-based digits) to a variable index.
    int var_index(const std::string& name) const;
};

// Sparse exponent vector: sorted (var, exp>0) pairs.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<int, unsigned>> factors);

    static Monomial one() { return Monomial(); }
    static Monomial var(int v, unsigned e = 1);

    const std::vector<std::pair<int, unsigned>>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    unsigned total_degree() const;
    unsigned exponent(int v) const;

    Monomial times(const Monomial& o) const;
    // Remaps variable indices (used by the bar involution).
    Monomial permuted(const std::vector<int>& var_map) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

    // Graded-lex: total degree first, then earlier variables dominate.
    static int cmp_grlex(const Monomial& a, const Monomial& b);

private:
    std::vector<std::pair<int, unsigned>> factors_;
};

struct MonomialGrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::cmp_grlex(a, b) > 0; }
};

// Sparse polynomial over Gaussian rationals in the (z, chi, w, tau) block
// layout. Term maps are canonical: no zero coefficients are stored, so
// equality of polynomials is equality of term maps. Values are immutable
// in spirit: operations return new polynomials.
class HermPoly {
public:
    using TermMap = std::map<Monomial, GRat, MonomialGrlexDesc>;

    explicit HermPoly(VarLayout layout) : layout_(layout) {}
    HermPoly(VarLayout layout, const GRat& constant);

    static HermPoly zero(VarLayout layout) { return HermPoly(layout); }
    static HermPoly constant(VarLayout layout, const GRat& c) { return HermPoly(layout, c); }
    static HermPoly term(VarLayout layout, const GRat& c, const Monomial& m);
    static HermPoly variable(VarLayout layout, int v, unsigned e = 1);

    const VarLayout& layout() const { return layout_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    unsigned degree() const;
    unsigned degree_in(int v) const;
    bool depends_on(int v) const { return degree_in(v) > 0; }
    GRat coeff(const Monomial& m) const;

    HermPoly operator-() const;
    friend HermPoly operator+(const HermPoly& a, const HermPoly& b);
    friend HermPoly operator-(const HermPoly& a, const HermPoly& b);
    friend HermPoly operator*(const HermPoly& a, const HermPoly& b);
    friend bool operator==(const HermPoly& a, const HermPoly& b) {
        return a.layout_ == b.layout_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const HermPoly& a, const HermPoly& b) { return !(a == b); }

    HermPoly scaled(const GRat& c) const;
    HermPoly pow(unsigned e) const;

    // Conjugates coefficients and swaps z <-> chi, w <-> tau. An involution
    // and (composed with conjugation) a ring homomorphism.
    HermPoly bar_swap() const;

    // Replaces w by S (which must not depend on w), expanding exactly.
    HermPoly substitute_w(const HermPoly& S) const;

    std::complex<double> eval(const std::vector<std::complex<double>>& point) const;
    GRat eval_exact(const std::vector<GRat>& point) const;

    // Canonical text form: graded-lex descending, coefficients always in
    // parentheses as "(re+im*i)". Round-trips through parse.
    std::string str() const;
    static HermPoly parse(VarLayout layout, const std::string& text);

    void add_term(const Monomial& m, const GRat& c);

private:
    void check_same_layout(const HermPoly& o) const;

    VarLayout layout_;
    TermMap terms_;
};

}  // namespace psell
