#include "engine.hpp"

namespace psell {

namespace {

Json error_response(const std::string& code, const std::string& message) {
    return Json{{"ok", false}, {"error", Json{{"code", code}, {"message", message}}}};
}

Json ok_response(Json result) { return Json{{"ok", true}, {"result", std::move(result)}}; }

const Json& payload_of(const Json& request) {
    static const Json empty = Json::object();
    if (!request.contains("payload")) return empty;
    if (!request.at("payload").is_object()) throw Error("payload must be an object");
    return request.at("payload");
}

ProblemInstance instance_from_payload(const Json& payload) {
    if (!payload.contains("p") || !payload.contains("q")) throw Error("payload needs exponent lists \"p\" and \"q\"");
    return make_instance(exponents_from_json(payload.at("p"), "p"), exponents_from_json(payload.at("q"), "q"));
}

std::uint64_t seed_of(const Json& request) {
    if (!request.contains("seed")) return 0;
    if (!request.at("seed").is_number_integer() || request.at("seed").get<long long>() < 0)
        throw Error("seed must be a nonnegative integer");
    return static_cast<std::uint64_t>(request.at("seed").get<long long>());
}

int samples_of(const Json& payload, int fallback) {
    if (!payload.contains("nsamples")) return fallback;
    if (!payload.at("nsamples").is_number_integer() || payload.at("nsamples").get<long>() < 1)
        throw Error("nsamples must be a positive integer");
    return static_cast<int>(payload.at("nsamples").get<long>());
}

Json cmd_decide(const Json& payload) {
    ProblemInstance inst = instance_from_payload(payload);
    return existence_to_json(maps_exist(inst));
}

Json cmd_enumerate(const Json& payload) {
    ProblemInstance inst = instance_from_payload(payload);
    std::size_t limit = 1000;
    if (payload.contains("limit")) {
        if (!payload.at("limit").is_number_integer() || payload.at("limit").get<long>() < 0)
            throw Error("limit must be a nonnegative integer");
        limit = static_cast<std::size_t>(payload.at("limit").get<long>());
    }
    Json patterns = Json::array();
    for (const AdmissiblePattern& pat : enumerate_patterns(inst, limit)) patterns.push_back(pattern_to_json(pat));
    return Json{{"patterns", patterns}, {"count", patterns.size()}};
}

Json cmd_construct(const Json& payload) {
    ProblemInstance inst = instance_from_payload(payload);
    AdmissiblePattern pattern;
    if (payload.contains("pattern")) {
        pattern = pattern_from_json(payload.at("pattern"));
    } else {
        ExistenceResult res = maps_exist(inst);
        if (!res.exists) {
            Json err = error_response("infeasible", "no transversal map exists for this instance");
            err["error"]["certificate"] = certificate_to_json(*res.certificate);
            throw err;  // rethrown as a structured response below
        }
        pattern = *res.witness;
    }
    mpq_class lambda = payload.contains("lambda") ? parse_rational(payload.at("lambda").get<std::string>()) : 1;
    mpq_class r = payload.contains("r") ? parse_rational(payload.at("r").get<std::string>()) : 0;
    ClassifiedMap map = payload.contains("W")
                            ? ClassifiedMap::general(
                                  inst, pattern, matrix_from_json(payload.at("W")), lambda, r,
                                  payload.contains("c") ? grat_vector_from_json(payload.at("c"))
                                                        : std::vector<GRat>(inst.N(), GRat(0)))
                            : ClassifiedMap::default_witness(inst, pattern);
    if (!payload.contains("W") && (lambda != 1 || r != 0 || payload.contains("c"))) {
        map = ClassifiedMap::general(inst, map.pattern(), map.W(), lambda, r,
                                     payload.contains("c") ? grat_vector_from_json(payload.at("c"))
                                                           : std::vector<GRat>(inst.N(), GRat(0)));
    }
    Json out{{"map", map_to_json(map)}};
    Json radicals = Json::array();
    for (const std::string& comp : map.radical_strings()) radicals.push_back(comp);
    out["components"] = radicals;
    return out;
}

Json cmd_verify(const Json& payload, std::uint64_t seed) {
    int nsamples = samples_of(payload, 200);
    CandidateMap cand = payload.contains("candidate")
                            ? candidate_from_json(payload.at("candidate"))
                            : CandidateMap::from_classified(map_from_json(payload.at("map")));
    return report_to_json(full_report(cand, nsamples, seed));
}

Json cmd_mult(const Json& payload) {
    ClassifiedMap map = map_from_json(payload.at("map"));
    MultiplicityResult mr = map_multiplicity(map);
    Json out = multiplicity_to_json(mr);
    mpz_class ess = essential_type(map.inst().source);
    out["essential_type"] = ess.get_str();
    if (mr.certified) out["bound_holds"] = mr.value <= ess;
    return out;
}

Json cmd_esstype(const Json& payload) {
    if (!payload.contains("p")) throw Error("payload needs the exponent list \"p\"");
    ExponentSignature p = normalize_signature(exponents_from_json(payload.at("p"), "p"));
    return Json{{"value", essential_type(p).get_str()}};
}

Json cmd_aut_compose(const Json& payload) {
    if (!payload.contains("q") || !payload.contains("word"))
        throw Error("payload needs \"q\" and a \"word\" array of elements");
    ExponentSignature q = normalize_signature(exponents_from_json(payload.at("q"), "q"));
    if (!payload.at("word").is_array()) throw Error("word must be an array");
    std::vector<AutElement> word;
    for (const Json& e : payload.at("word")) word.push_back(element_from_json(q, e));
    return Json{{"aut", aut_to_json(compose_word(q, word))}};
}

Json cmd_aut_invert(const Json& payload) {
    if (!payload.contains("aut")) throw Error("payload needs \"aut\"");
    return Json{{"aut", aut_to_json(invert_aut(aut_from_json(payload.at("aut"))))}};
}

Json cmd_equivalent(const Json& payload) {
    if (!payload.contains("map1") || !payload.contains("map2")) throw Error("payload needs \"map1\" and \"map2\"");
    ClassifiedMap h1 = map_from_json(payload.at("map1"));
    ClassifiedMap h2 = map_from_json(payload.at("map2"));
    auto t = orbit_equivalent(h1, h2);
    Json out{{"equivalent", t.has_value()}};
    if (t) out["aut"] = aut_to_json(*t);
    return out;
}

}  // namespace

Json run_request(const Json& request) {
    try {
        if (!request.is_object()) return error_response("invalid_request", "request must be a JSON object");
        if (!request.contains("command") || !request.at("command").is_string())
            return error_response("invalid_request", "request needs a string \"command\"");
        std::string command = request.at("command").get<std::string>();
        const Json& payload = payload_of(request);
        std::uint64_t seed = seed_of(request);

        if (command == "decide") return ok_response(cmd_decide(payload));
        if (command == "enumerate") return ok_response(cmd_enumerate(payload));
        if (command == "construct") return ok_response(cmd_construct(payload));
        if (command == "verify") return ok_response(cmd_verify(payload, seed));
        if (command == "mult") return ok_response(cmd_mult(payload));
        if (command == "esstype") return ok_response(cmd_esstype(payload));
        if (command == "aut-compose") return ok_response(cmd_aut_compose(payload));
        if (command == "aut-invert") return ok_response(cmd_aut_invert(payload));
        if (command == "equivalent") return ok_response(cmd_equivalent(payload));
        return error_response("invalid_request", "unknown command \"" + command + "\"");
    } catch (const Json& structured) {
        return structured;
    } catch (const Error& e) {
        return error_response("invalid_argument", e.what());
    } catch (const Json::exception& e) {
        return error_response("invalid_request", e.what());
    } catch (const std::exception& e) {
        return error_response("internal", e.what());
    }
}

std::string run_request_text(const std::string& request_text) {
    Json request = Json::parse(request_text, nullptr, false);
    if (request.is_discarded())
        return error_response("malformed_json", "request is not valid JSON").dump();
    return run_request(request).dump();
}

}  // namespace psell
