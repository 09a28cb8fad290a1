#include "autgroup.hpp"

#include <algorithm>

#include "linalg.hpp"
#include "roots.hpp"

namespace psell {

AutElement AutElement::dilation(const mpq_class& lambda) {
    AutElement g;
    g.kind = Kind::Dilation;
    g.lambda = lambda;
    return g;
}

AutElement AutElement::permutation(std::map<int, int> perm) {
    AutElement g;
    g.kind = Kind::Perm;
    g.perm = std::move(perm);
    return g;
}

AutElement AutElement::mobius(std::vector<GRat> b, mpq_class r) {
    AutElement g;
    g.kind = Kind::Mobius;
    g.b = std::move(b);
    g.r = std::move(r);
    return g;
}

AutElement AutElement::linear_phase(Matrix U, std::vector<GRat> mu) {
    AutElement g;
    g.kind = Kind::LinearPhase;
    g.U = std::move(U);
    g.mu = std::move(mu);
    return g;
}

bool operator==(const CanonicalAut& a, const CanonicalAut& b) {
    return a.target.exps == b.target.exps && a.lambda == b.lambda && a.U == b.U && a.mu == b.mu && a.b == b.b &&
           a.r == b.r && a.perm == b.perm;
}

CanonicalAut identity_aut(const ExponentSignature& target) {
    CanonicalAut t;
    t.target = target;
    int s = target.ones_count();
    t.U = identity_matrix(s);
    t.mu.assign(target.higher_positions().size(), GRat(1));
    t.b.assign(target.size(), GRat(0));
    for (int j : target.higher_positions()) t.perm[j] = j;
    return t;
}

void validate_aut(const CanonicalAut& t) {
    std::vector<int> higher = t.target.higher_positions();
    int s = t.target.ones_count();
    if (t.lambda <= 0) throw Error("dilation factor must be positive");
    if (static_cast<int>(t.U.size()) != s) throw Error("linear part must be s x s");
    if (!is_unitary(t.U)) throw Error("linear part must be unitary");
    if (t.mu.size() != higher.size()) throw Error("need one phase per exponent >= 2 coordinate");
    for (const GRat& m : t.mu)
        if (!m.is_unimodular()) throw Error("phases must be unimodular");
    check_mobius_vector(t.target, t.b);
    if (t.perm.size() != higher.size()) throw Error("permutation must cover the exponent >= 2 coordinates");
    std::set<int> image;
    for (int j : higher) {
        auto it = t.perm.find(j);
        if (it == t.perm.end()) throw Error("permutation undefined on a coordinate");
        if (t.target.exps[it->second] != t.target.exps[j]) throw Error("permutation must preserve exponents");
        image.insert(it->second);
    }
    if (image.size() != higher.size()) throw Error("permutation is not a bijection");
}

CanonicalAut canonical_from_element(const ExponentSignature& target, const AutElement& g) {
    CanonicalAut t = identity_aut(target);
    switch (g.kind) {
        case AutElement::Kind::Dilation:
            t.lambda = g.lambda;
            break;
        case AutElement::Kind::Perm:
            t.perm = g.perm;
            break;
        case AutElement::Kind::Mobius:
            t.b = g.b;
            t.r = g.r;
            break;
        case AutElement::Kind::LinearPhase:
            t.U = g.U;
            t.mu = g.mu;
            break;
    }
    validate_aut(t);
    return t;
}

namespace {

// Slot index of each exponent >= 2 coordinate inside the `higher` list.
std::map<int, int> higher_slots(const std::vector<int>& higher) {
    std::map<int, int> out;
    for (std::size_t h = 0; h < higher.size(); ++h) out[higher[h]] = static_cast<int>(h);
    return out;
}

// gamma = conj(U) b on the exponent-1 block: the Mobius vector resulting
// from pushing Psi_b leftward through Lambda_U.
std::vector<GRat> mobius_through_linear(const ExponentSignature& target, const Matrix& U, const std::vector<GRat>& b) {
    std::vector<int> ones = target.ones_positions();
    std::vector<GRat> out(target.size(), GRat(0));
    for (std::size_t m = 0; m < ones.size(); ++m) {
        GRat acc(0);
        for (std::size_t j = 0; j < ones.size(); ++j) acc += U[m][j].conj() * b[ones[j]];
        out[ones[m]] = acc;
    }
    return out;
}

}  // namespace

CanonicalAut compose_pair(const CanonicalAut& a, const CanonicalAut& b) {
    if (a.target.exps != b.target.exps) throw Error("compose: target signatures differ");
    const ExponentSignature& q = a.target;
    std::vector<int> higher = q.higher_positions();
    auto slot = higher_slots(higher);

    CanonicalAut out;
    out.target = q;
    out.lambda = a.lambda * b.lambda;

    // Push Delta_{lambda_b} to the front through Sigma_a and Psi_a:
    // Psi_{b,r} o Delta_l = Delta_l o Psi_{l b, l^2 r}.
    std::vector<GRat> b_a(q.size(), GRat(0));
    GRat lam_b{mpq_class(b.lambda)};
    for (int j = 0; j < q.size(); ++j) b_a[j] = lam_b * a.b[j];
    mpq_class r_a = b.lambda * b.lambda * a.r;

    // Move Lambda_b left through Sigma_a: phases get permuted.
    std::vector<GRat> mu_b(higher.size(), GRat(1));
    for (int j : higher) mu_b[slot[j]] = b.mu[slot[a.perm.at(j)]];

    // Move Lambda_b left through Psi_a: the Mobius vector twists by the
    // conjugate linear part.
    std::vector<GRat> b_a2 = mobius_through_linear(q, b.U, b_a);

    // Merge the linear parts (b's applied first) and the phases.
    out.U = mat_mul(b.U, a.U);
    out.mu.resize(higher.size());
    for (std::size_t h = 0; h < higher.size(); ++h) out.mu[h] = a.mu[h] * mu_b[h];

    // Merge the Mobius parts: Psi_{v} o Psi_{u} = Psi_{v+u, r_v + r_u - 2 Im<u, conj v>}.
    GRat cross(0);
    out.b.assign(q.size(), GRat(0));
    for (int j = 0; j < q.size(); ++j) {
        cross += b.b[j] * b_a2[j].conj();
        out.b[j] = b_a2[j] + b.b[j];
    }
    out.r = r_a + b.r - 2 * cross.im();

    // Merge permutations: (Sigma_a o Sigma_b)(z)_j = z_{perm_b(perm_a(j))}.
    for (int j : higher) out.perm[j] = b.perm.at(a.perm.at(j));
    validate_aut(out);
    return out;
}

CanonicalAut compose_word(const ExponentSignature& target, const std::vector<AutElement>& word) {
    CanonicalAut acc = identity_aut(target);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        acc = compose_pair(canonical_from_element(target, *it), acc);
    return acc;
}

CanonicalAut invert_aut(const CanonicalAut& t) {
    const ExponentSignature& q = t.target;
    std::vector<int> higher = q.higher_positions();
    auto slot = higher_slots(higher);

    CanonicalAut inv_perm = identity_aut(q);
    for (int j : higher) inv_perm.perm[t.perm.at(j)] = j;

    CanonicalAut inv_mobius = identity_aut(q);
    for (int j = 0; j < q.size(); ++j) inv_mobius.b[j] = -t.b[j];
    inv_mobius.r = -t.r;

    CanonicalAut inv_linear = identity_aut(q);
    inv_linear.U = conj_transpose(t.U);
    for (std::size_t h = 0; h < higher.size(); ++h) inv_linear.mu[h] = t.mu[h].conj();

    CanonicalAut inv_dilation = identity_aut(q);
    inv_dilation.lambda = 1 / t.lambda;

    // T^{-1} = Sigma^{-1} o Psi^{-1} o Lambda^{-1} o Delta^{-1}
    return compose_pair(inv_perm, compose_pair(inv_mobius, compose_pair(inv_linear, inv_dilation)));
}

bool same_component(const CanonicalAut& a, const CanonicalAut& b) {
    if (a.target.exps != b.target.exps) throw Error("same_component: target signatures differ");
    return a.perm == b.perm;
}

ClassifiedMap apply_aut(const CanonicalAut& t, const ClassifiedMap& h) {
    if (t.target.exps != h.inst().target.exps) throw Error("apply_aut: signature mismatch");
    validate_aut(t);
    return h.with_target_perm(t.perm).with_mobius(t.b, t.r).with_linear_phase(t.U, t.mu).with_dilation(t.lambda);
}

ClassifiedMap apply_element(const AutElement& g, const ClassifiedMap& h) {
    switch (g.kind) {
        case AutElement::Kind::Perm:
            return h.with_target_perm(g.perm);
        case AutElement::Kind::Dilation:
            return h.with_dilation(g.lambda);
        case AutElement::Kind::Mobius:
            return h.with_mobius(g.b, g.r);
        case AutElement::Kind::LinearPhase:
            return h.with_linear_phase(g.U, g.mu);
    }
    throw Error("apply_element: bad kind");
}

ClassifiedMap realize_as_map(const CanonicalAut& t) { return apply_aut(t, ClassifiedMap::identity(t.target)); }

std::vector<std::complex<double>> eval_aut(const CanonicalAut& t, std::vector<std::complex<double>> z,
                                           std::complex<double> w) {
    const ExponentSignature& q = t.target;
    if (static_cast<int>(z.size()) != q.size()) throw Error("eval_aut: wrong arity");
    std::vector<int> ones = q.ones_positions();
    std::vector<int> higher = q.higher_positions();
    auto slot = higher_slots(higher);

    // Sigma
    std::vector<std::complex<double>> cur = z;
    for (int j : higher) cur[j] = z[t.perm.at(j)];

    // Psi_{b,r}: delta = 1 - 2i<z^q, conj b> - (r + i |b|^2) w
    std::complex<double> pairing = 0.0;
    double bnorm = 0.0;
    for (int j : ones) {
        std::complex<double> bj(t.b[j].re_double(), t.b[j].im_double());
        pairing += cur[j] * std::conj(bj);
        bnorm += std::norm(bj);
    }
    std::complex<double> delta = 1.0 - std::complex<double>(0, 2) * pairing -
                                 (std::complex<double>(t.r.get_d(), bnorm)) * w;
    std::vector<std::complex<double>> next = cur;
    for (int j : ones) {
        std::complex<double> bj(t.b[j].re_double(), t.b[j].im_double());
        next[j] = (cur[j] + bj * w) / delta;
    }
    for (int j : higher) next[j] = cur[j] / std::pow(delta, 1.0 / static_cast<double>(q.exps[j]));
    w /= delta;
    cur = next;

    // Lambda_{U,mu}
    next = cur;
    for (std::size_t tp = 0; tp < ones.size(); ++tp) {
        std::complex<double> acc = 0.0;
        for (std::size_t k = 0; k < ones.size(); ++k)
            acc += cur[ones[k]] * std::complex<double>(t.U[k][tp].re_double(), t.U[k][tp].im_double());
        next[ones[tp]] = acc;
    }
    for (int j : higher) {
        const GRat& m = t.mu[slot[j]];
        next[j] = cur[j] * std::complex<double>(m.re_double(), m.im_double());
    }
    cur = next;

    // Delta_lambda
    double lam = t.lambda.get_d();
    for (int j : ones) cur[j] *= lam;
    for (int j : higher) cur[j] *= std::pow(lam, 1.0 / static_cast<double>(q.exps[j]));
    w *= lam * lam;

    cur.push_back(w);
    return cur;
}

std::vector<std::complex<double>> eval_element(const AutElement& g, const ExponentSignature& target,
                                               std::vector<std::complex<double>> z, std::complex<double> w) {
    return eval_aut(canonical_from_element(target, g), std::move(z), w);
}

namespace {

// Strips the Mobius and dilation parts: S with apply_aut(S, h) a monomial
// map (lambda = 1, r = 0, c = 0) sharing h's coefficient matrix.
CanonicalAut strip_aut(const ClassifiedMap& h) {
    CanonicalAut s = identity_aut(h.inst().target);
    GRat inv_lam{mpq_class(1 / h.lambda())};
    for (int j = 0; j < h.inst().N(); ++j) s.b[j] = -(h.c()[j] * inv_lam);
    s.r = -h.r() / (h.lambda() * h.lambda());
    // Delta_{1/lambda} o Psi_{-c/lambda, -r/lambda^2}
    s.lambda = 1 / h.lambda();
    return s;
}

// All bijections rho on the exponent >= 2 coordinates with
// q_{rho(j)} = q_j, rho(K2) = K1 and sigma1(rho(j)) = sigma2(j).
std::vector<std::map<int, int>> pattern_perms(const ProblemInstance& inst, const AdmissiblePattern& p1,
                                              const AdmissiblePattern& p2) {
    std::vector<int> higher = inst.target.higher_positions();
    std::vector<std::map<int, int>> out;
    if (p1.K.size() != p2.K.size()) return out;

    std::vector<int> k2(p2.K.begin(), p2.K.end());
    std::vector<std::vector<int>> cands(k2.size());
    for (std::size_t t = 0; t < k2.size(); ++t) {
        for (int k1 : p1.K) {
            if (inst.target.exps[k1] == inst.target.exps[k2[t]] && p1.sigma.at(k1) == p2.sigma.at(k2[t]))
                cands[t].push_back(k1);
        }
        if (cands[t].empty()) return out;
    }
    std::vector<int> chosen(k2.size(), -1);
    std::set<int> used;
    auto rec = [&](auto&& self, std::size_t t) -> void {
        if (t == k2.size()) {
            std::map<int, int> rho;
            for (std::size_t u = 0; u < k2.size(); ++u) rho[k2[u]] = chosen[u];
            // complete on the zero columns, pairing equal exponents in order
            std::vector<int> rest2, rest1;
            for (int j : higher)
                if (p2.K.count(j) == 0) rest2.push_back(j);
            for (int j : higher)
                if (p1.K.count(j) == 0) rest1.push_back(j);
            std::stable_sort(rest2.begin(), rest2.end(),
                             [&](int x, int y) { return inst.target.exps[x] < inst.target.exps[y]; });
            std::stable_sort(rest1.begin(), rest1.end(),
                             [&](int x, int y) { return inst.target.exps[x] < inst.target.exps[y]; });
            for (std::size_t u = 0; u < rest2.size(); ++u) {
                if (inst.target.exps[rest2[u]] != inst.target.exps[rest1[u]]) return;  // cannot happen
                rho[rest2[u]] = rest1[u];
            }
            out.push_back(std::move(rho));
            return;
        }
        for (int cand : cands[t]) {
            if (used.count(cand)) continue;
            used.insert(cand);
            chosen[t] = cand;
            self(self, t + 1);
            used.erase(cand);
        }
    };
    rec(rec, 0);
    return out;
}

// Orthogonalizes rows (hermitian, unnormalized). Returns rows + norms.
std::pair<Mat, std::vector<mpq_class>> gram_schmidt(const std::vector<Vec>& rows) {
    Mat basis;
    std::vector<mpq_class> norms;
    for (Vec v : rows) {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            GRat proj = dot_conj(v, basis[k]);
            if (proj.is_zero()) continue;
            GRat f = proj / GRat(norms[k]);
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * basis[k][j];
        }
        GRat nn = dot_conj(v, v);
        if (nn.is_zero()) continue;
        norms.push_back(nn.re());
        basis.push_back(std::move(v));
    }
    return {basis, norms};
}

// An exact unitary V with A V = B, if the construction finds one. A and B
// are m x s. Complete when rank(A) = s; otherwise the orthocomplements
// are matched basis-by-basis with norm rebalancing over Q(i).
std::optional<Mat> solve_unitary(const Mat& A, const Mat& B, std::size_t s) {
    if (A.size() != B.size()) return std::nullopt;
    // Gram check (necessary for any unitary solution).
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t k = 0; k < A.size(); ++k)
            if (dot_conj(A[i], A[k]) != dot_conj(B[i], B[k])) return std::nullopt;

    std::vector<int> pivots = independent_rows(A);
    Mat P, Q;
    for (int i : pivots) {
        P.push_back(A[i]);
        Q.push_back(B[i]);
    }
    // Consistency of the dependent rows.
    for (std::size_t i = 0; i < A.size(); ++i) {
        auto coords = express_in_span(P, A[i]);
        if (!coords) return std::nullopt;
        Vec expect(s, GRat(0));
        for (std::size_t t = 0; t < coords->size(); ++t)
            for (std::size_t j = 0; j < s; ++j) expect[j] += (*coords)[t] * Q[t][j];
        if (expect != B[i]) return std::nullopt;
    }

    Mat source_basis = P, image_basis = Q;
    if (pivots.size() < s) {
        // Extend both sides by orthocomplement bases with matching norms.
        auto kernel_of = [&](const Mat& rows) {
            Mat conj_rows;
            for (const Vec& rrow : rows) {
                Vec cr(rrow.size());
                for (std::size_t j = 0; j < rrow.size(); ++j) cr[j] = rrow[j].conj();
                conj_rows.push_back(std::move(cr));
            }
            return null_space(conj_rows);
        };
        auto [fa, ua] = gram_schmidt(kernel_of(P));
        auto [fb, vb] = gram_schmidt(P.empty() ? kernel_of(Mat{Vec(s, GRat(0))}) : kernel_of(Q));
        if (P.empty()) {
            fa.clear();
            ua.clear();
            fb.clear();
            vb.clear();
            for (std::size_t j = 0; j < s; ++j) {
                Vec e(s, GRat(0));
                e[j] = GRat(1);
                fa.push_back(e);
                fb.push_back(e);
                ua.push_back(1);
                vb.push_back(1);
            }
        }
        if (fa.size() != fb.size()) return std::nullopt;
        std::size_t d = fa.size();
        // Greedy matching of norm profiles with exact rebalancing.
        std::vector<bool> taken(d, false);
        for (std::size_t t = 0; t < d; ++t) {
            bool placed = false;
            for (std::size_t u = 0; u < d && !placed; ++u) {
                if (taken[u]) continue;
                auto alpha = grat_of_norm(ua[t] / vb[u]);
                if (!alpha) continue;
                Vec img(s, GRat(0));
                for (std::size_t j = 0; j < s; ++j) img[j] = *alpha * fb[u][j];
                source_basis.push_back(fa[t]);
                image_basis.push_back(std::move(img));
                taken[u] = true;
                placed = true;
            }
            if (!placed) return std::nullopt;
        }
    }

    auto minv = mat_inverse(source_basis);
    if (!minv) return std::nullopt;
    Mat V = mat_mul(*minv, image_basis);
    if (!is_unitary(V)) return std::nullopt;
    for (std::size_t i = 0; i < A.size(); ++i) {
        Vec got(s, GRat(0));
        for (std::size_t k = 0; k < s; ++k)
            for (std::size_t j = 0; j < s; ++j) got[j] += A[i][k] * V[k][j];
        if (got != B[i]) return std::nullopt;
    }
    return V;
}

}  // namespace

std::optional<CanonicalAut> orbit_equivalent(const ClassifiedMap& h1, const ClassifiedMap& h2) {
    if (h1.inst().source.exps != h2.inst().source.exps || h1.inst().target.exps != h2.inst().target.exps)
        throw Error("orbit_equivalent: instances differ");
    const ExponentSignature& q = h1.inst().target;
    std::vector<int> ones = q.ones_positions();
    std::vector<int> higher = q.higher_positions();
    auto slot = higher_slots(higher);

    CanonicalAut s1 = strip_aut(h1), s2 = strip_aut(h2);
    ClassifiedMap m1 = apply_aut(s1, h1), m2 = apply_aut(s2, h2);

    for (const auto& rho : pattern_perms(h1.inst(), m1.pattern(), m2.pattern())) {
        // Phases on the K columns: ratios must be unimodular with an exact
        // q_j-th root.
        std::vector<GRat> mu(higher.size(), GRat(1));
        bool ok = true;
        for (int j : higher) {
            if (m2.pattern().K.count(j) == 0) continue;
            int i2 = m2.pattern().sigma.at(j);
            int j1 = rho.at(j);
            GRat ratio = m2.W()[i2][j] / m1.W()[i2][j1];
            if (!ratio.is_unimodular()) {
                ok = false;
                break;
            }
            auto root = unimodular_qth_root(ratio, q.exps[j]);
            if (!root) {
                ok = false;
                break;
            }
            mu[slot[j]] = *root;
        }
        if (!ok) continue;

        // After Sigma_rho and the phases, the exponent-1 blocks must match
        // under a unitary: W2_ones = W1_ones * U.
        Mat A, B;
        for (int i = 0; i < h1.inst().n(); ++i) {
            Vec ra(ones.size()), rb(ones.size());
            for (std::size_t t = 0; t < ones.size(); ++t) {
                ra[t] = m1.W()[i][ones[t]];
                rb[t] = m2.W()[i][ones[t]];
            }
            A.push_back(std::move(ra));
            B.push_back(std::move(rb));
        }
        auto U = solve_unitary(A, B, ones.size());
        if (!U) continue;

        CanonicalAut tmono = identity_aut(q);
        tmono.perm = rho;
        tmono.mu = mu;
        tmono.U = *U;
        if (apply_aut(tmono, m1) != m2) continue;

        CanonicalAut total = compose_pair(invert_aut(s2), compose_pair(tmono, s1));
        if (apply_aut(total, h1) != h2) continue;
        return total;
    }
    return std::nullopt;
}

}  // namespace psell
