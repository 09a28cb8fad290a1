#include "jsonio.hpp"

namespace psell {

namespace {

mpq_class rational_from_json(const Json& j, const std::string& what) {
    if (j.is_number_integer()) return mpq_class(j.get<long>());
    if (!j.is_string()) throw Error(what + ": expected a rational string");
    return parse_rational(j.get<std::string>());
}

int index_from_json(const Json& j, int limit, const std::string& what) {
    if (!j.is_number_integer()) throw Error(what + ": expected a 1-based index");
    long v = j.get<long>();
    if (v < 1 || v > limit) throw Error(what + ": index out of range");
    return static_cast<int>(v - 1);
}

}  // namespace

Json grat_to_json(const GRat& v) { return Json{{"re", rational_str(v.re())}, {"im", rational_str(v.im())}}; }

GRat grat_from_json(const Json& j) {
    if (j.is_string()) return GRat(parse_rational(j.get<std::string>()));
    if (j.is_number_integer()) return GRat(j.get<long>());
    if (!j.is_object() || !j.contains("re") || !j.contains("im"))
        throw Error("complex value: expected {\"re\", \"im\"}");
    return GRat(rational_from_json(j.at("re"), "re"), rational_from_json(j.at("im"), "im"));
}

std::vector<unsigned> exponents_from_json(const Json& j, const std::string& what) {
    if (!j.is_array() || j.empty()) throw Error(what + ": expected a non-empty array of positive integers");
    std::vector<unsigned> out;
    for (const Json& e : j) {
        if (!e.is_number_integer() || e.get<long>() < 1) throw Error(what + ": exponents must be integers >= 1");
        out.push_back(static_cast<unsigned>(e.get<long>()));
    }
    return out;
}

Json pattern_to_json(const AdmissiblePattern& pat) {
    Json k = Json::array();
    Json sigma = Json::object();
    for (int j : pat.K) {
        k.push_back(j + 1);
        sigma[std::to_string(j + 1)] = pat.sigma.at(j) + 1;
    }
    return Json{{"K", k}, {"sigma", sigma}};
}

AdmissiblePattern pattern_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("K") || !j.contains("sigma")) throw Error("pattern: expected {K, sigma}");
    AdmissiblePattern pat;
    if (!j.at("K").is_array()) throw Error("pattern: K must be an array");
    for (const Json& e : j.at("K")) {
        if (!e.is_number_integer() || e.get<long>() < 1) throw Error("pattern: K entries are 1-based indices");
        pat.K.insert(static_cast<int>(e.get<long>() - 1));
    }
    if (!j.at("sigma").is_object()) throw Error("pattern: sigma must be an object");
    for (const auto& [key, val] : j.at("sigma").items()) {
        int k = std::stoi(key) - 1;
        if (!val.is_number_integer() || val.get<long>() < 1) throw Error("pattern: sigma values are 1-based indices");
        pat.sigma[k] = static_cast<int>(val.get<long>() - 1);
    }
    return pat;
}

Json matrix_to_json(const Matrix& m) {
    Json out = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const GRat& v : row) r.push_back(grat_to_json(v));
        out.push_back(std::move(r));
    }
    return out;
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw Error("matrix: expected an array of rows");
    Matrix m;
    for (const Json& row : j) {
        if (!row.is_array()) throw Error("matrix: expected rows as arrays");
        std::vector<GRat> r;
        for (const Json& v : row) r.push_back(grat_from_json(v));
        m.push_back(std::move(r));
    }
    return m;
}

Json grat_vector_to_json(const std::vector<GRat>& v) {
    Json out = Json::array();
    for (const GRat& x : v) out.push_back(grat_to_json(x));
    return out;
}

std::vector<GRat> grat_vector_from_json(const Json& j) {
    if (!j.is_array()) throw Error("vector: expected an array");
    std::vector<GRat> out;
    for (const Json& v : j) out.push_back(grat_from_json(v));
    return out;
}

Json map_to_json(const ClassifiedMap& h) {
    Json qpower{{"numerators", Json::array()},
                {"denominator", h.denominator().str()},
                {"last_numerator", h.last_numerator().str()}};
    for (const HermPoly& num : h.numerators()) qpower["numerators"].push_back(num.str());
    return Json{{"p", h.inst().source.exps},
                {"q", h.inst().target.exps},
                {"pattern", pattern_to_json(h.pattern())},
                {"W", matrix_to_json(h.W())},
                {"lambda", rational_str(h.lambda())},
                {"r", rational_str(h.r())},
                {"c", grat_vector_to_json(h.c())},
                {"qpower", qpower}};
}

ClassifiedMap map_from_json(const Json& j) {
    if (!j.is_object()) throw Error("map: expected an object");
    for (const char* key : {"p", "q", "pattern", "W"})
        if (!j.contains(key)) throw Error(std::string("map: missing field \"") + key + "\"");
    ProblemInstance inst = make_instance(exponents_from_json(j.at("p"), "p"), exponents_from_json(j.at("q"), "q"));
    AdmissiblePattern pat = pattern_from_json(j.at("pattern"));
    Matrix w = matrix_from_json(j.at("W"));
    mpq_class lambda = j.contains("lambda") ? rational_from_json(j.at("lambda"), "lambda") : mpq_class(1);
    mpq_class r = j.contains("r") ? rational_from_json(j.at("r"), "r") : mpq_class(0);
    std::vector<GRat> c =
        j.contains("c") ? grat_vector_from_json(j.at("c")) : std::vector<GRat>(inst.N(), GRat(0));
    if (static_cast<int>(c.size()) != inst.N()) throw Error("map: c must have length N");
    ClassifiedMap h = ClassifiedMap::general(inst, pat, w, lambda, r, c);
    if (j.contains("qpower")) {
        const Json& qp = j.at("qpower");
        VarLayout layout{inst.n()};
        if (qp.contains("denominator") &&
            HermPoly::parse(layout, qp.at("denominator").get<std::string>()) != h.denominator())
            throw Error("map: qpower denominator inconsistent with parameters");
        if (qp.contains("numerators")) {
            const Json& nums = qp.at("numerators");
            if (static_cast<int>(nums.size()) != inst.N()) throw Error("map: qpower numerator count mismatch");
            for (int t = 0; t < inst.N(); ++t)
                if (HermPoly::parse(layout, nums[t].get<std::string>()) != h.numerators()[t])
                    throw Error("map: qpower numerator inconsistent with parameters");
        }
    }
    return h;
}

Json candidate_to_json(const CandidateMap& cand) {
    Json nums = Json::array();
    for (const HermPoly& p : cand.numerators) nums.push_back(p.str());
    return Json{{"p", cand.inst.source.exps},
                {"q", cand.inst.target.exps},
                {"numerators", nums},
                {"denominator", cand.denominator.str()},
                {"last_numerator", cand.last_numerator.str()}};
}

CandidateMap candidate_from_json(const Json& j) {
    if (!j.is_object()) throw Error("candidate: expected an object");
    for (const char* key : {"p", "q", "numerators", "denominator", "last_numerator"})
        if (!j.contains(key)) throw Error(std::string("candidate: missing field \"") + key + "\"");
    ProblemInstance inst = make_instance(exponents_from_json(j.at("p"), "p"), exponents_from_json(j.at("q"), "q"));
    VarLayout layout{inst.n()};
    CandidateMap cand{inst, {}, HermPoly(layout), HermPoly(layout)};
    if (!j.at("numerators").is_array() || static_cast<int>(j.at("numerators").size()) != inst.N())
        throw Error("candidate: need exactly N numerators");
    for (const Json& p : j.at("numerators"))
        cand.numerators.push_back(HermPoly::parse(layout, p.get<std::string>()));
    cand.denominator = HermPoly::parse(layout, j.at("denominator").get<std::string>());
    cand.last_numerator = HermPoly::parse(layout, j.at("last_numerator").get<std::string>());
    check_candidate(cand);
    return cand;
}

Json aut_to_json(const CanonicalAut& t) {
    Json perm = Json::object();
    for (const auto& [k, v] : t.perm) perm[std::to_string(k + 1)] = v + 1;
    Json ones = Json::array(), higher = Json::array();
    for (int j : t.target.ones_positions()) ones.push_back(j + 1);
    for (int j : t.target.higher_positions()) higher.push_back(j + 1);
    return Json{{"q", t.target.exps},
                {"lambda", rational_str(t.lambda)},
                {"U", matrix_to_json(t.U)},
                {"mu", grat_vector_to_json(t.mu)},
                {"b", grat_vector_to_json(t.b)},
                {"r", rational_str(t.r)},
                {"perm", perm},
                {"ones_cols", ones},
                {"higher_cols", higher}};
}

CanonicalAut aut_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("q")) throw Error("aut: expected an object with target signature q");
    CanonicalAut t = identity_aut(normalize_signature(exponents_from_json(j.at("q"), "q")));
    if (j.contains("lambda")) t.lambda = rational_from_json(j.at("lambda"), "lambda");
    if (j.contains("U")) t.U = matrix_from_json(j.at("U"));
    if (j.contains("mu")) t.mu = grat_vector_from_json(j.at("mu"));
    if (j.contains("b")) t.b = grat_vector_from_json(j.at("b"));
    if (j.contains("r")) t.r = rational_from_json(j.at("r"), "r");
    if (j.contains("perm")) {
        t.perm.clear();
        for (const auto& [key, val] : j.at("perm").items())
            t.perm[std::stoi(key) - 1] = index_from_json(val, t.target.size(), "perm");
    }
    validate_aut(t);
    return t;
}

AutElement element_from_json(const ExponentSignature& target, const Json& j) {
    if (!j.is_object() || !j.contains("kind")) throw Error("aut element: expected an object with \"kind\"");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "dilation") {
        if (!j.contains("lambda")) throw Error("dilation: missing lambda");
        return AutElement::dilation(rational_from_json(j.at("lambda"), "lambda"));
    }
    if (kind == "perm") {
        if (!j.contains("perm")) throw Error("perm: missing perm");
        std::map<int, int> perm;
        for (const auto& [key, val] : j.at("perm").items())
            perm[std::stoi(key) - 1] = index_from_json(val, target.size(), "perm");
        return AutElement::permutation(std::move(perm));
    }
    if (kind == "mobius") {
        if (!j.contains("b")) throw Error("mobius: missing b");
        std::vector<GRat> b = grat_vector_from_json(j.at("b"));
        mpq_class r = j.contains("r") ? rational_from_json(j.at("r"), "r") : mpq_class(0);
        return AutElement::mobius(std::move(b), std::move(r));
    }
    if (kind == "linear_phase") {
        Matrix u = j.contains("U") ? matrix_from_json(j.at("U")) : identity_matrix(target.ones_count());
        std::vector<GRat> mu = j.contains("mu") ? grat_vector_from_json(j.at("mu"))
                                                : std::vector<GRat>(target.higher_positions().size(), GRat(1));
        return AutElement::linear_phase(std::move(u), std::move(mu));
    }
    throw Error("aut element: unknown kind \"" + kind + "\"");
}

Json certificate_to_json(const InfeasibilityCertificate& cert) {
    Json sources = Json::array(), nb = Json::array();
    for (int i : cert.violating_sources) sources.push_back(i + 1);
    for (int k : cert.neighborhood) nb.push_back(k + 1);
    return Json{{"violating_sources", sources}, {"neighborhood", nb}};
}

InfeasibilityCertificate certificate_from_json(const Json& j) {
    InfeasibilityCertificate cert;
    for (const Json& e : j.at("violating_sources")) cert.violating_sources.push_back(e.get<int>() - 1);
    for (const Json& e : j.at("neighborhood")) cert.neighborhood.push_back(e.get<int>() - 1);
    return cert;
}

Json existence_to_json(const ExistenceResult& res) {
    Json out{{"exists", res.exists}};
    if (res.witness) out["witness"] = pattern_to_json(*res.witness);
    if (res.certificate) out["certificate"] = certificate_to_json(*res.certificate);
    return out;
}

Json report_to_json(const ResidualReport& rep) {
    return Json{{"symbolic_zero", rep.symbolic_zero},
                {"residual", rep.residual.str()},
                {"numeric_max_error", rep.numeric_max_error},
                {"transversal", rep.transversal},
                {"denom_min_modulus", rep.denom_min_modulus}};
}

Json multiplicity_to_json(const MultiplicityResult& mr) {
    Json out{{"certified", mr.certified}, {"truncation_degree", mr.truncation_degree}};
    if (mr.finite)
        out["value"] = mr.value.get_str();
    else
        out["value"] = "infinite";
    return out;
}

}  // namespace psell
