#include "psell/psell.h"

#include <cstring>
#include <new>

#include "engine.hpp"

using psell::ClassifiedMap;
using psell::Json;

struct psell_map {
    ClassifiedMap map;
};

namespace {

constexpr const char* kVersion = "0.1.0";

char* dup_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

psell_status classify_exception() {
    try {
        throw;
    } catch (const psell::Error&) {
        return PSELL_ERR_INVALID_ARGUMENT;
    } catch (const Json::exception&) {
        return PSELL_ERR_PARSE;
    } catch (...) {
        return PSELL_ERR_INTERNAL;
    }
}

}  // namespace

extern "C" {

const char* psell_version(void) { return kVersion; }

const char* psell_status_message(psell_status status) {
    switch (status) {
        case PSELL_OK:
            return "ok";
        case PSELL_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case PSELL_ERR_PARSE:
            return "parse error";
        case PSELL_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

void psell_string_free(char* s) { delete[] s; }

psell_status psell_run_json(const char* request_json, char** response_json) {
    if (!request_json || !response_json) return PSELL_ERR_INVALID_ARGUMENT;
    try {
        std::string response = psell::run_request_text(request_json);
        *response_json = dup_string(response);
        if (!*response_json) return PSELL_ERR_INTERNAL;
        Json parsed = Json::parse(response);
        if (parsed.value("ok", false)) return PSELL_OK;
        std::string code = parsed["error"].value("code", "internal");
        if (code == "malformed_json") return PSELL_ERR_PARSE;
        if (code == "internal") return PSELL_ERR_INTERNAL;
        return PSELL_ERR_INVALID_ARGUMENT;
    } catch (...) {
        return classify_exception();
    }
}

psell_status psell_map_parse(const char* map_json, psell_map** out) {
    if (!map_json || !out) return PSELL_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    try {
        Json j = Json::parse(map_json);
        *out = new psell_map{psell::map_from_json(j)};
        return PSELL_OK;
    } catch (...) {
        return classify_exception();
    }
}

void psell_map_free(psell_map* map) { delete map; }

psell_status psell_map_to_json(const psell_map* map, char** map_json) {
    if (!map || !map_json) return PSELL_ERR_INVALID_ARGUMENT;
    try {
        *map_json = dup_string(psell::map_to_json(map->map).dump());
        return *map_json ? PSELL_OK : PSELL_ERR_INTERNAL;
    } catch (...) {
        return classify_exception();
    }
}

psell_status psell_map_dims(const psell_map* map, int* n, int* N) {
    if (!map || !n || !N) return PSELL_ERR_INVALID_ARGUMENT;
    *n = map->map.inst().n();
    *N = map->map.inst().N();
    return PSELL_OK;
}

psell_status psell_map_verify(const psell_map* map, int nsamples, uint64_t seed, char** report_json) {
    if (!map || !report_json || nsamples < 1) return PSELL_ERR_INVALID_ARGUMENT;
    try {
        auto report = psell::full_report(psell::CandidateMap::from_classified(map->map), nsamples, seed);
        *report_json = dup_string(psell::report_to_json(report).dump());
        return *report_json ? PSELL_OK : PSELL_ERR_INTERNAL;
    } catch (...) {
        return classify_exception();
    }
}

psell_status psell_map_multiplicity(const psell_map* map, char** result_json) {
    if (!map || !result_json) return PSELL_ERR_INVALID_ARGUMENT;
    try {
        auto result = psell::map_multiplicity(map->map);
        *result_json = dup_string(psell::multiplicity_to_json(result).dump());
        return *result_json ? PSELL_OK : PSELL_ERR_INTERNAL;
    } catch (...) {
        return classify_exception();
    }
}

psell_status psell_map_evaluate(const psell_map* map, const double* point, double* out) {
    if (!map || !point || !out) return PSELL_ERR_INVALID_ARGUMENT;
    try {
        int n = map->map.inst().n();
        int N = map->map.inst().N();
        std::vector<std::complex<double>> z(n);
        for (int i = 0; i < n; ++i) z[i] = {point[2 * i], point[2 * i + 1]};
        std::complex<double> w{point[2 * n], point[2 * n + 1]};
        auto image = map->map.evaluate(z, w);
        for (int j = 0; j <= N; ++j) {
            out[2 * j] = image[j].real();
            out[2 * j + 1] = image[j].imag();
        }
        return PSELL_OK;
    } catch (...) {
        return classify_exception();
    }
}

}  // extern "C"
