#pragma once

#include <string>

#include "jsonio.hpp"

namespace psell {

// Dispatches a request {"command": ..., "payload": {...}, "seed": ...} to
// the corresponding operation. Always returns a response object, either
// {"ok": true, "result": ...} or {"ok": false, "error": {code, message}}.
Json run_request(const Json& request);

// String-level entry point used by the C API and the batch runner. A
// parse failure of the request itself yields an "error" response with
// code "malformed_json".
std::string run_request_text(const std::string& request_text);

}  // namespace psell
