#include "verify.hpp"

#include <cmath>

namespace psell {

CandidateMap CandidateMap::from_classified(const ClassifiedMap& h) {
    return CandidateMap{h.inst(), h.numerators(), h.denominator(), h.last_numerator()};
}

void check_candidate(const CandidateMap& cand) {
    VarLayout layout{cand.inst.n()};
    if (static_cast<int>(cand.numerators.size()) != cand.inst.N())
        throw Error("candidate: need one numerator per target coordinate");
    auto check_vars = [&](const HermPoly& p) {
        if (p.layout() != layout) throw Error("candidate: wrong variable layout");
        for (int i = 0; i < layout.n; ++i)
            if (p.depends_on(layout.chi(i))) throw Error("candidate: polynomials may not involve chi variables");
        if (p.depends_on(layout.tau())) throw Error("candidate: polynomials may not involve tau");
    };
    for (const HermPoly& p : cand.numerators) {
        check_vars(p);
        if (!p.coeff(Monomial::one()).is_zero()) throw Error("candidate: map must send the origin to the origin");
    }
    check_vars(cand.last_numerator);
    if (!cand.last_numerator.coeff(Monomial::one()).is_zero())
        throw Error("candidate: map must send the origin to the origin");
    check_vars(cand.denominator);
    if (cand.denominator.coeff(Monomial::one()).is_zero())
        throw Error("candidate: denominator must be a unit at the origin");
}

HermPoly polarized_combination(const CandidateMap& cand) {
    check_candidate(cand);
    HermPoly bar_delta = cand.denominator.bar_swap();
    HermPoly bar_g = cand.last_numerator.bar_swap();
    HermPoly res = cand.last_numerator * bar_delta - bar_g * cand.denominator;
    GRat two_i(mpq_class(0), mpq_class(2));
    for (const HermPoly& num : cand.numerators) {
        if (num.is_zero()) continue;
        res = res - (num * num.bar_swap()).scaled(two_i);
    }
    return res;
}

HermPoly polarized_residual(const CandidateMap& cand) {
    HermPoly Q = defining_polynomial(cand.inst.source);
    return polarized_combination(cand).substitute_w(Q);
}

HermPoly polarized_residual(const ClassifiedMap& h) { return polarized_residual(CandidateMap::from_classified(h)); }

bool is_transversal(const CandidateMap& cand) {
    VarLayout layout{cand.inst.n()};
    return !cand.last_numerator.coeff(Monomial::var(layout.w())).is_zero();
}

bool is_transversal(const ClassifiedMap& h) { return is_transversal(CandidateMap::from_classified(h)); }

namespace {

constexpr double kDenomFloor = 0.05;

std::vector<std::complex<double>> lift_point(const VarLayout& layout, const SamplePoint& pt) {
    std::vector<std::complex<double>> point(layout.vars(), 0.0);
    for (int i = 0; i < layout.n; ++i) point[layout.z(i)] = pt.z[i];
    point[layout.w()] = pt.w;
    return point;
}

}  // namespace

double numeric_membership(const CandidateMap& cand, int nsamples, std::uint64_t seed) {
    check_candidate(cand);
    VarLayout layout{cand.inst.n()};
    std::mt19937_64 rng(seed);
    double max_err = 0.0;
    for (int t = 0; t < nsamples; ++t) {
        std::vector<std::complex<double>> point;
        std::complex<double> den;
        int attempts = 0;
        while (true) {
            point = lift_point(layout, sample_point(cand.inst.source, rng));
            den = cand.denominator.eval(point);
            if (std::abs(den) >= kDenomFloor) break;
            if (++attempts > 64) throw Error("numeric_membership: denominator persistently near zero on samples");
        }
        double sum = 0.0;
        for (const HermPoly& num : cand.numerators) {
            std::complex<double> pj = num.eval(point) / den;
            sum += std::norm(pj);
        }
        std::complex<double> last = cand.last_numerator.eval(point) / den;
        max_err = std::max(max_err, std::abs(last.imag() - sum));
    }
    return max_err;
}

double denominator_min_modulus(const CandidateMap& cand, int nsamples, std::uint64_t seed) {
    VarLayout layout{cand.inst.n()};
    std::mt19937_64 rng(seed);
    double min_mod = std::numeric_limits<double>::infinity();
    for (int t = 0; t < nsamples; ++t) {
        auto point = lift_point(layout, sample_point(cand.inst.source, rng));
        min_mod = std::min(min_mod, std::abs(cand.denominator.eval(point)));
    }
    return min_mod;
}

ResidualReport full_report(const CandidateMap& cand, int nsamples, std::uint64_t seed) {
    ResidualReport rep;
    rep.residual = polarized_residual(cand);
    rep.symbolic_zero = rep.residual.is_zero();
    rep.numeric_max_error = numeric_membership(cand, nsamples, seed);
    rep.transversal = is_transversal(cand);
    rep.denom_min_modulus = denominator_min_modulus(cand, nsamples, seed + 1);
    return rep;
}

}  // namespace psell
