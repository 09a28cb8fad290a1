// Command-line front end. All computation happens behind the C API of
// libpsell; this binary only assembles JSON requests and formats output.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "psell/psell.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;     // structured error from the engine
constexpr int kExitBadInput = 2;  // malformed JSON / unusable file

// Relative paths are tried as-is first, then against PSELL_FIXTURE_DIR.
std::string resolve_path(const std::string& path) {
    namespace fs = std::filesystem;
    if (fs::exists(path)) return path;
    if (const char* dir = std::getenv("PSELL_FIXTURE_DIR"); dir && fs::path(path).is_relative()) {
        fs::path joined = fs::path(dir) / path;
        if (fs::exists(joined)) return joined.string();
    }
    return path;
}

json read_json_file(const std::string& path) {
    std::ifstream in(resolve_path(path));
    if (!in) throw std::runtime_error("cannot open file: " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw std::runtime_error("file is not valid JSON: " + path);
    return j;
}

std::vector<unsigned> parse_exponent_list(const std::string& text) {
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(static_cast<unsigned>(std::stoul(item)));
    }
    if (out.empty()) throw std::runtime_error("empty exponent list");
    return out;
}

struct Options {
    std::string format = "json";
    long long seed = 0;
    bool print_radical = false;
};

json call_engine(const json& request, psell_status* status_out = nullptr) {
    char* response = nullptr;
    psell_status status = psell_run_json(request.dump().c_str(), &response);
    if (status_out) *status_out = status;
    if (!response) throw std::runtime_error("engine returned no response");
    json parsed = json::parse(response);
    psell_string_free(response);
    return parsed;
}

int emit(const json& response, const Options& opts) {
    if (response.value("ok", false)) {
        const json& result = response.at("result");
        if (opts.print_radical && result.contains("components")) {
            std::string line = "H = (";
            bool first = true;
            for (const auto& comp : result.at("components")) {
                if (!first) line += ", ";
                line += comp.get<std::string>();
                first = false;
            }
            std::cout << line << ")\n";
            return kExitOk;
        }
        std::cout << (opts.format == "pretty" ? result.dump(2) : result.dump()) << "\n";
        return kExitOk;
    }
    std::cout << (opts.format == "pretty" ? response.dump(2) : response.dump()) << "\n";
    std::string code = response.at("error").value("code", "");
    return code == "malformed_json" ? kExitBadInput : kExitError;
}

int run_batch(const std::string& path, const Options& opts) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (path != "-") {
        file.open(resolve_path(path));
        if (!file) {
            std::cerr << "cannot open batch file: " << path << "\n";
            return kExitBadInput;
        }
        in = &file;
    }
    std::string line;
    long long seq = 0;
    while (std::getline(*in, line)) {
        if (line.empty()) continue;
        char* response = nullptr;
        psell_run_json(line.c_str(), &response);
        json parsed = response ? json::parse(response) : json{{"ok", false}};
        psell_string_free(response);
        parsed["seq"] = seq++;
        std::cout << parsed.dump() << "\n";
    }
    (void)opts;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact classification of transversal holomorphic maps between pseudoellipsoidal models"};
    app.set_version_flag("--version", std::string(psell_version()));
    app.require_subcommand(1);
    app.fallthrough();

    Options opts;
    app.add_option("--format", opts.format, "Output format: json or pretty")
        ->check(CLI::IsMember({"json", "pretty"}));
    app.add_option("--seed", opts.seed, "Seed for sampling-based checks")->check(CLI::NonNegativeNumber);

    std::string p_list, q_list, map_file, map2_file, candidate_file, aut_file, word_file, pattern_text, batch_file;
    std::string lambda_text, r_text, c_text, w_file;
    long long limit = 1000;
    int nsamples = 200;

    auto add_pq = [&](CLI::App* cmd, bool need_q = true) {
        cmd->add_option("--p", p_list, "Source exponents, comma separated (e.g. 2,4,6)")->required();
        if (need_q) cmd->add_option("--q", q_list, "Target exponents, comma separated")->required();
    };

    CLI::App* decide = app.add_subcommand("decide", "Decide whether a transversal map exists");
    add_pq(decide);

    CLI::App* enumerate = app.add_subcommand("enumerate", "Enumerate admissible patterns (K, sigma)");
    add_pq(enumerate);
    enumerate->add_option("--limit", limit, "Maximum number of patterns to emit");

    CLI::App* construct = app.add_subcommand("construct", "Construct a classified map");
    add_pq(construct);
    construct->add_option("--pattern", pattern_text, "Pattern JSON, e.g. {\"K\":[4,5],\"sigma\":{\"4\":1,\"5\":2}}");
    construct->add_option("--W", w_file, "File with the coefficient matrix W as JSON");
    construct->add_option("--lambda", lambda_text, "Dilation parameter (positive rational)");
    construct->add_option("--r", r_text, "Mobius parameter r (rational)");
    construct->add_option("--c", c_text, "Mobius vector c as a JSON array");
    construct->add_flag("--print-radical", opts.print_radical, "Print the map with formal radicals instead of JSON");

    CLI::App* verify = app.add_subcommand("verify", "Verify that a map sends the source model into the target");
    verify->add_option("--map", map_file, "Classified map JSON file");
    verify->add_option("--candidate", candidate_file, "External candidate JSON file (common-denominator form)");
    verify->add_option("--nsamples", nsamples, "Number of numeric samples");

    CLI::App* mult = app.add_subcommand("mult", "Multiplicity of the map germ at 0");
    mult->add_option("--map", map_file, "Classified map JSON file")->required();

    CLI::App* esstype = app.add_subcommand("esstype", "Essential type of the source model");
    esstype->add_option("--p", p_list, "Source exponents, comma separated")->required();

    CLI::App* aut_compose = app.add_subcommand("aut-compose", "Compose a word of stability-group generators");
    aut_compose->add_option("--q", q_list, "Target exponents, comma separated")->required();
    aut_compose->add_option("--word", word_file, "File with a JSON array of generators")->required();

    CLI::App* aut_invert = app.add_subcommand("aut-invert", "Invert a stability-group element");
    aut_invert->add_option("--aut", aut_file, "Canonical automorphism JSON file")->required();

    CLI::App* equivalent = app.add_subcommand("equivalent", "Test orbit equivalence of two classified maps");
    equivalent->add_option("--map1", map_file, "First map JSON file")->required();
    equivalent->add_option("--map2", map2_file, "Second map JSON file")->required();

    CLI::App* batch = app.add_subcommand("batch", "Run newline-delimited JSON requests");
    batch->add_option("file", batch_file, "Request file, or - for stdin")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        json request;
        request["seed"] = opts.seed;
        json payload = json::object();

        if (app.got_subcommand(decide) || app.got_subcommand(enumerate) || app.got_subcommand(construct)) {
            payload["p"] = parse_exponent_list(p_list);
            payload["q"] = parse_exponent_list(q_list);
        }
        if (app.got_subcommand(decide)) {
            request["command"] = "decide";
        } else if (app.got_subcommand(enumerate)) {
            request["command"] = "enumerate";
            payload["limit"] = limit;
        } else if (app.got_subcommand(construct)) {
            request["command"] = "construct";
            if (!pattern_text.empty()) payload["pattern"] = json::parse(pattern_text);
            if (!w_file.empty()) payload["W"] = read_json_file(w_file);
            if (!lambda_text.empty()) payload["lambda"] = lambda_text;
            if (!r_text.empty()) payload["r"] = r_text;
            if (!c_text.empty()) payload["c"] = json::parse(c_text);
        } else if (app.got_subcommand(verify)) {
            request["command"] = "verify";
            if (map_file.empty() == candidate_file.empty()) {
                std::cerr << "verify: need exactly one of --map or --candidate\n";
                return kExitBadInput;
            }
            if (!map_file.empty()) payload["map"] = read_json_file(map_file);
            if (!candidate_file.empty()) payload["candidate"] = read_json_file(candidate_file);
            payload["nsamples"] = nsamples;
        } else if (app.got_subcommand(mult)) {
            request["command"] = "mult";
            payload["map"] = read_json_file(map_file);
        } else if (app.got_subcommand(esstype)) {
            request["command"] = "esstype";
            payload["p"] = parse_exponent_list(p_list);
        } else if (app.got_subcommand(aut_compose)) {
            request["command"] = "aut-compose";
            payload["q"] = parse_exponent_list(q_list);
            payload["word"] = read_json_file(word_file);
        } else if (app.got_subcommand(aut_invert)) {
            request["command"] = "aut-invert";
            payload["aut"] = read_json_file(aut_file);
        } else if (app.got_subcommand(equivalent)) {
            request["command"] = "equivalent";
            payload["map1"] = read_json_file(map_file);
            payload["map2"] = read_json_file(map2_file);
        } else if (app.got_subcommand(batch)) {
            return run_batch(batch_file, opts);
        }

        request["payload"] = payload;
        return emit(call_engine(request), opts);
    } catch (const json::exception& e) {
        std::cerr << "invalid JSON input: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitBadInput;
    }
}
