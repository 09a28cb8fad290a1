#include "maps.hpp"

#include <algorithm>

#include "roots.hpp"

namespace psell {

Matrix identity_matrix(int n) {
    Matrix m(n, std::vector<GRat>(n, GRat(0)));
    for (int i = 0; i < n; ++i) m[i][i] = GRat(1);
    return m;
}

Matrix conj_transpose(const Matrix& m) {
    if (m.empty()) return {};
    Matrix out(m[0].size(), std::vector<GRat>(m.size(), GRat(0)));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j].conj();
    return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.empty() || b.empty()) return {};
    std::size_t inner = b.size();
    Matrix out(a.size(), std::vector<GRat>(b[0].size(), GRat(0)));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != inner) throw Error("matrix product shape mismatch");
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < b[k].size(); ++j) out[i][j] += a[i][k] * b[k][j];
        }
    }
    return out;
}

bool rows_orthonormal(const Matrix& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t k = i; k < w.size(); ++k) {
            GRat dot(0);
            for (std::size_t j = 0; j < w[i].size(); ++j) dot += w[i][j] * w[k][j].conj();
            if (dot != (i == k ? GRat(1) : GRat(0))) return false;
        }
    }
    return true;
}

bool is_unitary(const Matrix& u) {
    if (u.empty()) return true;
    if (u.size() != u[0].size()) return false;
    return rows_orthonormal(u);
}

void check_mobius_vector(const ExponentSignature& target, const std::vector<GRat>& b) {
    if (static_cast<int>(b.size()) != target.size()) throw Error("mobius vector must have length N");
    int s = target.ones_count();
    for (int j = 0; j < target.size(); ++j) {
        if (target.exps[j] >= 2 && !b[j].is_zero())
            throw Error("mobius vector must vanish on exponent >= 2 coordinates");
    }
    if (s == 0)
        for (const GRat& v : b)
            if (!v.is_zero()) throw Error("mobius vector must vanish when the target has no exponent-1 coordinates");
}

ClassifiedMap::ClassifiedMap(ProblemInstance inst, AdmissiblePattern pattern, Matrix W, mpq_class lambda, mpq_class r,
                             std::vector<GRat> c)
    : inst_(std::move(inst)),
      pattern_(std::move(pattern)),
      W_(std::move(W)),
      lambda_(std::move(lambda)),
      r_(std::move(r)),
      c_(std::move(c)),
      denominator_(VarLayout{inst_.n()}),
      last_numerator_(VarLayout{inst_.n()}) {
    validate();
    derive();
}

void ClassifiedMap::validate() const {
    inst_.require_codim();
    check_pattern(inst_, pattern_);
    if (lambda_ <= 0) throw Error("lambda must be positive");
    if (static_cast<int>(W_.size()) != inst_.n()) throw Error("coefficient matrix must have n rows");
    for (const auto& row : W_)
        if (static_cast<int>(row.size()) != inst_.N()) throw Error("coefficient matrix must have N columns");
    if (!rows_orthonormal(W_)) throw Error("condition (a) fails: rows of W are not orthonormal");
    for (int j = 0; j < inst_.N(); ++j) {
        if (inst_.target.exps[j] < 2) continue;
        bool in_K = pattern_.K.count(j) > 0;
        for (int i = 0; i < inst_.n(); ++i) {
            bool should_be_nonzero = in_K && pattern_.sigma.at(j) == i;
            if (should_be_nonzero == W_[i][j].is_zero())
                throw Error("condition (b) fails at entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                            ")");
        }
    }
    check_mobius_vector(inst_.target, c_);
}

void ClassifiedMap::derive() {
    int n = inst_.n(), N = inst_.N();
    VarLayout layout{n};
    // b' = c W^*, beta = <c, conj c>
    b_prime_.assign(n, GRat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < N; ++j) b_prime_[i] += c_[j] * W_[i][j].conj();
    beta_ = 0;
    for (const GRat& cj : c_) beta_ += cj.norm();

    GRat lam{mpq_class(lambda_)};
    numerators_.clear();
    numerators_.reserve(N);
    for (int j = 0; j < N; ++j) {
        HermPoly num(layout);
        if (inst_.target.exps[j] == 1) {
            for (int i = 0; i < n; ++i) {
                if (W_[i][j].is_zero()) continue;
                num.add_term(Monomial::var(layout.z(i), inst_.source.exps[i]), lam * W_[i][j]);
            }
            if (!c_[j].is_zero()) num.add_term(Monomial::var(layout.w()), lam * c_[j]);
        } else if (pattern_.K.count(j) > 0) {
            int i = pattern_.sigma.at(j);
            num.add_term(Monomial::var(layout.z(i), inst_.source.exps[i]), lam * W_[i][j]);
        }
        numerators_.push_back(std::move(num));
    }

    denominator_ = HermPoly::constant(layout, GRat(1));
    GRat minus_two_i(mpq_class(0), mpq_class(-2));
    for (int i = 0; i < n; ++i) {
        if (b_prime_[i].is_zero()) continue;
        denominator_.add_term(Monomial::var(layout.z(i), inst_.source.exps[i]), minus_two_i * b_prime_[i].conj());
    }
    denominator_.add_term(Monomial::var(layout.w()), -GRat(r_, beta_));

    last_numerator_ = HermPoly::term(layout, GRat(mpq_class(lambda_ * lambda_)), Monomial::var(layout.w()));
}

ClassifiedMap ClassifiedMap::monomial(const ProblemInstance& inst, const AdmissiblePattern& pattern, const Matrix& W) {
    return ClassifiedMap(inst, pattern, W, 1, 0, std::vector<GRat>(inst.N(), GRat(0)));
}

ClassifiedMap ClassifiedMap::general(const ProblemInstance& inst, const AdmissiblePattern& pattern, const Matrix& W,
                                     const mpq_class& lambda, const mpq_class& r, const std::vector<GRat>& c) {
    return ClassifiedMap(inst, pattern, W, lambda, r, c);
}

ClassifiedMap ClassifiedMap::default_witness(const ProblemInstance& inst, const AdmissiblePattern& pattern) {
    inst.require_codim();
    check_pattern(inst, pattern);
    int n = inst.n(), N = inst.N();
    std::vector<int> ones = inst.target.ones_positions();

    std::set<int> covered;
    for (const auto& [k, i] : pattern.sigma) covered.insert(i);
    std::vector<int> uncovered;
    for (int i = 0; i < n; ++i)
        if (covered.count(i) == 0) uncovered.push_back(i);
    if (uncovered.size() > ones.size()) throw Error("internal: admissible pattern leaves too many sources uncovered");

    Matrix W(n, std::vector<GRat>(N, GRat(0)));
    for (std::size_t t = 0; t < uncovered.size(); ++t) W[uncovered[t]][ones[t]] = GRat(1);

    // One representative column per covered source coordinate.
    AdmissiblePattern reduced;
    for (int i : covered) {
        int rep = -1;
        for (const auto& [k, src] : pattern.sigma) {
            if (src == i && (rep == -1 || k < rep)) rep = k;
        }
        reduced.K.insert(rep);
        reduced.sigma[rep] = i;
        W[i][rep] = GRat(1);
    }
    return monomial(inst, reduced, W);
}

ClassifiedMap ClassifiedMap::identity(const ExponentSignature& q) {
    ProblemInstance inst{q, q};
    AdmissiblePattern pat;
    for (int j : q.higher_positions()) {
        pat.K.insert(j);
        pat.sigma[j] = j;
    }
    return monomial(inst, pat, identity_matrix(q.size()));
}

ClassifiedMap ClassifiedMap::with_target_perm(const std::map<int, int>& rho) const {
    std::vector<int> higher = inst_.target.higher_positions();
    if (rho.size() != higher.size()) throw Error("permutation must cover all exponent >= 2 coordinates");
    std::set<int> image;
    for (int j : higher) {
        auto it = rho.find(j);
        if (it == rho.end()) throw Error("permutation undefined on coordinate " + std::to_string(j + 1));
        if (inst_.target.exps[it->second] != inst_.target.exps[j])
            throw Error("permutation must preserve exponents");
        image.insert(it->second);
    }
    if (image.size() != higher.size()) throw Error("permutation is not a bijection");

    Matrix W = W_;
    for (int j : higher) {
        int src_col = rho.at(j);
        for (int i = 0; i < inst_.n(); ++i) W[i][j] = W_[i][src_col];
    }
    AdmissiblePattern pat;
    for (int j : higher) {
        int from = rho.at(j);
        if (pattern_.K.count(from) > 0) {
            pat.K.insert(j);
            pat.sigma[j] = pattern_.sigma.at(from);
        }
    }
    return ClassifiedMap(inst_, pat, W, lambda_, r_, c_);
}

ClassifiedMap ClassifiedMap::with_mobius(const std::vector<GRat>& b, const mpq_class& r) const {
    check_mobius_vector(inst_.target, b);
    GRat lam{mpq_class(lambda_)};
    std::vector<GRat> c = c_;
    GRat cross(0);
    for (int j = 0; j < inst_.N(); ++j) {
        cross += c_[j] * b[j].conj();
        c[j] += lam * b[j];
    }
    mpq_class new_r = r_ + lambda_ * lambda_ * r - 2 * lambda_ * cross.im();
    return ClassifiedMap(inst_, pattern_, W_, lambda_, new_r, c);
}

ClassifiedMap ClassifiedMap::with_linear_phase(const Matrix& U, const std::vector<GRat>& mu) const {
    std::vector<int> ones = inst_.target.ones_positions();
    std::vector<int> higher = inst_.target.higher_positions();
    if (U.size() != ones.size()) throw Error("linear part must be s x s");
    if (!is_unitary(U)) throw Error("linear part must be unitary");
    if (mu.size() != higher.size()) throw Error("need one phase per exponent >= 2 coordinate");
    for (const GRat& m : mu)
        if (!m.is_unimodular()) throw Error("phases must be unimodular");

    Matrix W = W_;
    std::vector<GRat> c = c_;
    for (std::size_t tp = 0; tp < ones.size(); ++tp) {
        GRat csum(0);
        for (std::size_t t = 0; t < ones.size(); ++t) csum += c_[ones[t]] * U[t][tp];
        c[ones[tp]] = csum;
        for (int i = 0; i < inst_.n(); ++i) {
            GRat sum(0);
            for (std::size_t t = 0; t < ones.size(); ++t) sum += W_[i][ones[t]] * U[t][tp];
            W[i][ones[tp]] = sum;
        }
    }
    for (std::size_t h = 0; h < higher.size(); ++h) {
        int j = higher[h];
        GRat scale = mu[h].pow(inst_.target.exps[j]);
        for (int i = 0; i < inst_.n(); ++i) W[i][j] = W_[i][j] * scale;
    }
    return ClassifiedMap(inst_, pattern_, W, lambda_, r_, c);
}

ClassifiedMap ClassifiedMap::with_dilation(const mpq_class& factor) const {
    if (factor <= 0) throw Error("dilation factor must be positive");
    return ClassifiedMap(inst_, pattern_, W_, lambda_ * factor, r_, c_);
}

std::vector<std::complex<double>> ClassifiedMap::evaluate(const std::vector<std::complex<double>>& z,
                                                          std::complex<double> w) const {
    int n = inst_.n(), N = inst_.N();
    if (static_cast<int>(z.size()) != n) throw Error("evaluate: wrong source arity");
    VarLayout layout{n};
    std::vector<std::complex<double>> point(layout.vars(), 0.0);
    for (int i = 0; i < n; ++i) point[layout.z(i)] = z[i];
    point[layout.w()] = w;

    std::complex<double> den = denominator_.eval(point);
    if (std::abs(den) == 0.0) throw Error("evaluate: denominator vanishes at the point");

    std::vector<std::complex<double>> out(N + 1, 0.0);
    for (int j = 0; j < N; ++j) {
        std::complex<double> pj = numerators_[j].eval(point) / den;
        unsigned qj = inst_.target.exps[j];
        out[j] = qj == 1 ? pj : std::pow(pj, 1.0 / static_cast<double>(qj));
    }
    out[N] = last_numerator_.eval(point) / den;
    return out;
}

namespace {

std::string pretty_coeff(const GRat& c, bool* need_star) {
    *need_star = true;
    if (c == GRat(1)) {
        *need_star = false;
        return "";
    }
    if (c == GRat(-1)) {
        *need_star = false;
        return "-";
    }
    if (c.is_real()) return rational_str(c.re());
    if (c.re() == 0) {
        if (c.im() == 1) return "i";
        if (c.im() == -1) return "-i";
        return rational_str(c.im()) + "*i";
    }
    return "(" + c.str() + ")";
}

std::string pretty_poly(const HermPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        bool star = false;
        std::string ctext = pretty_coeff(c, &star);
        std::string mono;
        for (const auto& [v, e] : m.factors()) {
            if (!mono.empty()) mono += "*";
            mono += p.layout().var_name(v);
            if (e != 1) mono += "^" + std::to_string(e);
        }
        std::string term;
        if (mono.empty())
            term = ctext.empty() || ctext == "-" ? ctext + "1" : ctext;
        else if (ctext.empty())
            term = mono;
        else if (ctext == "-")
            term = "-" + mono;
        else
            term = star ? ctext + "*" + mono : ctext + mono;
        out += first ? term : " + " + term;
        first = false;
    }
    return out;
}

}  // namespace

std::vector<std::string> ClassifiedMap::radical_strings() const {
    bool unit_den = denominator_ == HermPoly::constant(denominator_.layout(), GRat(1));
    std::string den_text = pretty_poly(denominator_);
    std::vector<std::string> out;
    for (int j = 0; j < inst_.N(); ++j) {
        const HermPoly& num = numerators_[j];
        unsigned qj = inst_.target.exps[j];
        if (num.is_zero()) {
            out.push_back("0");
            continue;
        }
        if (qj == 1) {
            out.push_back(unit_den ? pretty_poly(num) : "(" + pretty_poly(num) + ")/(" + den_text + ")");
            continue;
        }
        // Exactly one monomial term here: coefficient * z_i^{p_i}.
        const auto& [mono, coeff] = *num.terms().begin();
        auto [var, exp] = mono.factors().front();
        std::string text;
        auto root = grat_qth_root(coeff, qj);
        if (root && exp % qj == 0) {
            bool star = false;
            std::string ctext = pretty_coeff(*root, &star);
            std::string base = num.layout().var_name(var);
            if (exp / qj != 1) base += "^" + std::to_string(exp / qj);
            text = ctext.empty() ? base : (ctext == "-" ? "-" + base : (star ? ctext + "*" + base : ctext + base));
        } else {
            text = "(" + pretty_poly(num) + ")^(1/" + std::to_string(qj) + ")";
        }
        if (!unit_den) text += "/(" + den_text + ")^(1/" + std::to_string(qj) + ")";
        out.push_back(text);
    }
    if (unit_den && lambda_ == 1)
        out.push_back("w");
    else if (unit_den)
        out.push_back(rational_str(mpq_class(lambda_ * lambda_)) + "*w");
    else
        out.push_back(rational_str(mpq_class(lambda_ * lambda_)) + "*w/(" + den_text + ")");
    return out;
}

bool operator==(const ClassifiedMap& a, const ClassifiedMap& b) {
    return a.inst_.source.exps == b.inst_.source.exps && a.inst_.target.exps == b.inst_.target.exps &&
           a.pattern_ == b.pattern_ && a.W_ == b.W_ && a.lambda_ == b.lambda_ && a.r_ == b.r_ && a.c_ == b.c_;
}

}  // namespace psell
