#include "model.hpp"

#include <cmath>

namespace psell {

int ExponentSignature::ones_count() const {
    int s = 0;
    for (unsigned e : exps) s += e == 1 ? 1 : 0;
    return s;
}

std::vector<int> ExponentSignature::ones_positions() const {
    std::vector<int> out;
    for (int j = 0; j < size(); ++j)
        if (exps[j] == 1) out.push_back(j);
    return out;
}

std::vector<int> ExponentSignature::higher_positions() const {
    std::vector<int> out;
    for (int j = 0; j < size(); ++j)
        if (exps[j] >= 2) out.push_back(j);
    return out;
}

std::vector<unsigned> ExponentSignature::normalized_exps() const {
    std::vector<unsigned> out(exps.size());
    for (int j = 0; j < size(); ++j) out[ones_first_perm[j]] = exps[j];
    return out;
}

std::vector<unsigned> ExponentSignature::denormalized(const std::vector<unsigned>& normalized) const {
    if (normalized.size() != exps.size()) throw Error("denormalize: length mismatch");
    std::vector<unsigned> out(exps.size());
    for (int j = 0; j < size(); ++j) out[j] = normalized[ones_first_perm[j]];
    return out;
}

ExponentSignature normalize_signature(const std::vector<unsigned>& raw) {
    ExponentSignature sig;
    sig.exps = raw;
    for (unsigned e : raw)
        if (e < 1) throw Error("exponents must be positive integers");
    sig.ones_first_perm.resize(raw.size());
    int next = 0;
    for (std::size_t j = 0; j < raw.size(); ++j)
        if (raw[j] == 1) sig.ones_first_perm[j] = next++;
    for (std::size_t j = 0; j < raw.size(); ++j)
        if (raw[j] >= 2) sig.ones_first_perm[j] = next++;
    return sig;
}

void ProblemInstance::require_embedding_direction() const {
    if (N() < n()) throw Error("target dimension must be at least the source dimension");
}

void ProblemInstance::require_codim() const {
    require_embedding_direction();
    if (!codim_ok()) throw Error("codimension bound violated: need N - n < n");
}

ProblemInstance make_instance(const std::vector<unsigned>& p, const std::vector<unsigned>& q) {
    ProblemInstance inst{normalize_signature(p), normalize_signature(q)};
    inst.require_embedding_direction();
    return inst;
}

HermPoly defining_polynomial(const ExponentSignature& sig) {
    VarLayout layout{sig.size()};
    HermPoly q = HermPoly::variable(layout, layout.tau());
    GRat two_i(mpq_class(0), mpq_class(2));
    for (int j = 0; j < sig.size(); ++j) {
        Monomial m = Monomial::var(layout.z(j), sig.exps[j]).times(Monomial::var(layout.chi(j), sig.exps[j]));
        q = q + HermPoly::term(layout, two_i, m);
    }
    return q;
}

SamplePoint sample_point(const ExponentSignature& sig, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> mag(0.15, 0.8);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> upart(-1.0, 1.0);
    SamplePoint pt;
    pt.z.resize(sig.size());
    double height = 0.0;
    for (int j = 0; j < sig.size(); ++j) {
        double r = mag(rng);
        double th = angle(rng);
        pt.z[j] = std::polar(r, th);
        height += std::pow(r * r, static_cast<double>(sig.exps[j]));
    }
    pt.w = std::complex<double>(upart(rng), height);
    return pt;
}

}  // namespace psell
