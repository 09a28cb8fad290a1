/* C interface to the pseudoellipsoid mapping library.
 *
 * All computations run in exact rational arithmetic behind this surface.
 * Strings returned through `char **` out-parameters are heap-allocated
 * and must be released with psell_string_free(). Handles are opaque and
 * must be released with their matching *_free() function.
 */
#ifndef PSELL_H
#define PSELL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum psell_status {
    PSELL_OK = 0,
    PSELL_ERR_INVALID_ARGUMENT = 1, /* precondition or domain violation */
    PSELL_ERR_PARSE = 2,            /* malformed JSON or literal */
    PSELL_ERR_INTERNAL = 3
} psell_status;

/* Library version, e.g. "0.1.0". Static storage; do not free. */
const char *psell_version(void);

/* Human-readable description of a status code. Static storage. */
const char *psell_status_message(psell_status status);

void psell_string_free(char *s);

/* Runs one JSON request {"command": ..., "payload": ..., "seed": ...} and
 * stores the JSON response in *response_json. The response always parses;
 * errors are reported inside it as {"ok": false, "error": ...} and
 * mirrored in the return code. Commands: decide, enumerate, construct,
 * verify, mult, esstype, aut-compose, aut-invert, equivalent. */
psell_status psell_run_json(const char *request_json, char **response_json);

/* Opaque handle to a classified map in exact q-power representation. */
typedef struct psell_map psell_map;

psell_status psell_map_parse(const char *map_json, psell_map **out);
void psell_map_free(psell_map *map);
psell_status psell_map_to_json(const psell_map *map, char **map_json);

/* Source and target dimensions (n and N). */
psell_status psell_map_dims(const psell_map *map, int *n, int *N);

/* Symbolic + numeric verification report as JSON. */
psell_status psell_map_verify(const psell_map *map, int nsamples, uint64_t seed, char **report_json);

/* Multiplicity of the map germ at 0, as JSON (value, certified flag,
 * truncation degree). */
psell_status psell_map_multiplicity(const psell_map *map, char **result_json);

/* Principal-branch evaluation. `point` holds n+1 complex numbers as
 * re/im pairs (z_1..z_n, w); `out` receives N+1 pairs. */
psell_status psell_map_evaluate(const psell_map *map, const double *point, double *out);

#ifdef __cplusplus
}
#endif

#endif /* PSELL_H */
