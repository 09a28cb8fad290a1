#include "ideals.hpp"

#include <algorithm>

#include "linalg.hpp"

namespace psell {

namespace {

bool divides(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

}  // namespace

MonomialIdeal make_monomial_ideal(int nvars, std::vector<std::vector<unsigned>> gens) {
    for (const auto& g : gens)
        if (static_cast<int>(g.size()) != nvars) throw Error("monomial ideal: generator arity mismatch");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<std::vector<unsigned>> keep;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            if (i != j && divides(gens[j], gens[i]) && !(gens[i] == gens[j] && j > i)) redundant = true;
        if (!redundant) keep.push_back(gens[i]);
    }
    return MonomialIdeal{nvars, std::move(keep)};
}

namespace {

// Counts staircase monomials inside the box prod [0, bound_i) recursively,
// pruning full boxes and dominated branches.
mpz_class staircase_count(int var, std::vector<unsigned>& partial, const std::vector<unsigned>& bounds,
                          const std::vector<std::vector<unsigned>>& gens) {
    int nvars = static_cast<int>(bounds.size());
    // Generators still compatible with the chosen prefix.
    std::vector<const std::vector<unsigned>*> active;
    for (const auto& g : gens) {
        bool compat = true;
        for (int j = 0; j < var && compat; ++j) compat = g[j] <= partial[j];
        if (!compat) continue;
        // If the remaining coordinates are all zero the branch is fully
        // inside the ideal.
        bool dominated = true;
        for (int j = var; j < nvars && dominated; ++j) dominated = g[j] == 0;
        if (dominated) return 0;
        active.push_back(&g);
    }
    if (active.empty()) {
        mpz_class box = 1;
        for (int j = var; j < nvars; ++j) box *= bounds[j];
        return box;
    }
    if (var == nvars) return 1;  // unreachable given the checks above
    mpz_class total = 0;
    std::vector<unsigned> sub;
    sub.reserve(active.size());
    for (unsigned e = 0; e < bounds[var]; ++e) {
        partial[var] = e;
        total += staircase_count(var + 1, partial, bounds, gens);
    }
    partial[var] = 0;
    return total;
}

}  // namespace

CodimResult monomial_codim(const MonomialIdeal& ideal) {
    for (const auto& g : ideal.gens) {
        bool unit = true;
        for (unsigned e : g) unit = unit && e == 0;
        if (unit) return CodimResult{true, 0};  // the whole ring
    }
    std::vector<unsigned> bounds(ideal.nvars, 0);
    for (int i = 0; i < ideal.nvars; ++i) {
        unsigned best = 0;
        for (const auto& g : ideal.gens) {
            bool pure = g[i] > 0;
            for (int j = 0; j < ideal.nvars && pure; ++j) pure = j == i || g[j] == 0;
            if (pure && (best == 0 || g[i] < best)) best = g[i];
        }
        if (best == 0) return CodimResult{false, 0};
        bounds[i] = best;
    }
    std::vector<unsigned> partial(ideal.nvars, 0);
    return CodimResult{true, staircase_count(0, partial, bounds, ideal.gens)};
}

mpz_class essential_type(const ExponentSignature& p) {
    int n = p.size();
    std::vector<std::vector<unsigned>> gens;
    for (int i = 0; i < n; ++i) {
        std::vector<unsigned> g(n, 0);
        g[i] = p.exps[i];
        gens.push_back(std::move(g));
    }
    CodimResult res = monomial_codim(make_monomial_ideal(n, std::move(gens)));
    return res.value;
}

namespace {

// Generators of the ideal of h(z) = H(z, 0) with unit factors dropped and
// K-column components replaced by their q-th-root exponents.
std::vector<HermPoly> multiplicity_generators(const ClassifiedMap& h) {
    const ProblemInstance& inst = h.inst();
    VarLayout layout{inst.n()};
    std::vector<HermPoly> gens;
    for (int j = 0; j < inst.N(); ++j) {
        unsigned qj = inst.target.exps[j];
        if (qj == 1) {
            HermPoly g(layout);
            for (int i = 0; i < inst.n(); ++i)
                if (!h.W()[i][j].is_zero()) g.add_term(Monomial::var(layout.z(i), inst.source.exps[i]), h.W()[i][j]);
            if (!g.is_zero()) gens.push_back(std::move(g));
        } else if (h.pattern().K.count(j) > 0) {
            int i = h.pattern().sigma.at(j);
            unsigned e = inst.source.exps[i] / qj;
            gens.push_back(HermPoly::variable(layout, layout.z(i), e));
        }
    }
    return gens;
}

std::vector<Monomial> monomials_up_to(const VarLayout& layout, int n, unsigned degree) {
    std::vector<Monomial> out;
    std::vector<unsigned> exps(n, 0);
    auto rec = [&](auto&& self, int var, unsigned remaining) -> void {
        if (var == n) {
            std::vector<std::pair<int, unsigned>> factors;
            for (int i = 0; i < n; ++i)
                if (exps[i] > 0) factors.emplace_back(layout.z(i), exps[i]);
            out.push_back(Monomial(std::move(factors)));
            return;
        }
        for (unsigned e = 0; e <= remaining; ++e) {
            exps[var] = e;
            self(self, var + 1, remaining - e);
        }
        exps[var] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

struct TruncationPass {
    bool certified = false;
    mpz_class quotient_dim = 0;
};

TruncationPass truncated_quotient(const std::vector<HermPoly>& gens, const VarLayout& layout, int n, unsigned D) {
    std::vector<Monomial> basis = monomials_up_to(layout, n, D);
    std::map<Monomial, std::size_t, MonomialGrlexDesc> index;
    for (std::size_t t = 0; t < basis.size(); ++t) index.emplace(basis[t], t);

    RowSpace space(basis.size());
    for (const HermPoly& g : gens) {
        for (const Monomial& m : basis) {
            if (m.total_degree() + 1 > D) continue;
            Vec row(basis.size(), GRat(0));
            bool nonzero = false;
            for (const auto& [gm, gc] : g.terms()) {
                Monomial prod = m.times(gm);
                if (prod.total_degree() > D) continue;
                row[index.at(prod)] += gc;
                nonzero = true;
            }
            if (nonzero) space.add(std::move(row));
        }
    }

    // Stabilization certificate: every degree-D monomial lies in the
    // truncated ideal image. Then m^D is inside the ideal and the quotient
    // dimension is exact.
    bool certified = true;
    for (const Monomial& m : basis) {
        if (m.total_degree() != D) continue;
        Vec probe(basis.size(), GRat(0));
        probe[index.at(m)] = GRat(1);
        if (!space.contains(std::move(probe))) {
            certified = false;
            break;
        }
    }
    return TruncationPass{certified, mpz_class(static_cast<long>(basis.size()) - space.rank())};
}

}  // namespace

MultiplicityResult map_multiplicity(const ClassifiedMap& h) {
    const ProblemInstance& inst = h.inst();
    VarLayout layout{inst.n()};
    std::vector<HermPoly> gens = multiplicity_generators(h);

    // Pure-monomial generator sets reduce to staircase counting.
    bool all_monomial = std::all_of(gens.begin(), gens.end(),
                                    [](const HermPoly& g) { return g.term_count() == 1; });
    if (all_monomial) {
        std::vector<std::vector<unsigned>> mgens;
        unsigned maxdeg = 0;
        for (const HermPoly& g : gens) {
            std::vector<unsigned> exps(inst.n(), 0);
            for (const auto& [v, e] : g.terms().begin()->first.factors()) exps[v] = e;
            maxdeg = std::max(maxdeg, g.degree());
            mgens.push_back(std::move(exps));
        }
        CodimResult cr = monomial_codim(make_monomial_ideal(inst.n(), std::move(mgens)));
        return MultiplicityResult{cr.finite, cr.value, cr.finite, maxdeg};
    }

    unsigned maxdeg = 0;
    for (const HermPoly& g : gens) maxdeg = std::max(maxdeg, g.degree());
    mpz_class ess = essential_type(inst.source);
    mpz_class degree_cap_z = ess + maxdeg;
    unsigned degree_cap =
        degree_cap_z.fits_uint_p() ? static_cast<unsigned>(degree_cap_z.get_ui()) : 4 * maxdeg + 64;

    unsigned D = maxdeg + 1;
    TruncationPass pass;
    while (true) {
        pass = truncated_quotient(gens, layout, inst.n(), D);
        if (pass.certified) return MultiplicityResult{true, pass.quotient_dim, true, D};
        if (D > degree_cap) break;
        D *= 2;
    }
    return MultiplicityResult{true, pass.quotient_dim, false, D};
}

bool check_mult_bound(const ClassifiedMap& h) {
    MultiplicityResult mr = map_multiplicity(h);
    if (!mr.certified) throw Error("multiplicity uncertified; bound check inconclusive");
    return mr.value <= essential_type(h.inst().source);
}

}  // namespace psell
