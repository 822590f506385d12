#ifndef DELTADER_DELTADER_H
#define DELTADER_DELTADER_H

/*
 * C interface to the delta-derivation engine.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Functions returning dd_status write their result
 * through the final out-parameter only on DD_OK; on failure a description is
 * available from dd_last_error() on the calling thread. Strings returned
 * through char** are heap-allocated and released with dd_string_free().
 *
 * Rationals are passed as strings "p/q", "-p/q" or "p".
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define DD_API __declspec(dllexport)
#else
#define DD_API __attribute__((visibility("default")))
#endif

typedef struct dd_algebra dd_algebra;
typedef struct dd_module dd_module;
typedef struct dd_space dd_space;
typedef struct dd_scan_report dd_scan_report;
typedef struct dd_verify_report dd_verify_report;

typedef enum dd_status {
  DD_OK = 0,
  DD_ERR_INVALID_ARGUMENT = 1,
  DD_ERR_PARSE = 2,
  DD_ERR_SEMANTIC = 3,
  DD_ERR_INDEX_OUT_OF_RANGE = 4,
  DD_ERR_JACOBI = 5,
  DD_ERR_NOT_A_REPRESENTATION = 6,
  DD_ERR_ALGEBRA_MISMATCH = 7,
  DD_ERR_NOT_DIAGONAL = 8,
  DD_ERR_SHAPE_MISMATCH = 9,
  DD_ERR_VERIFICATION = 10,
  DD_ERR_INTERNAL = 11
} dd_status;

typedef enum dd_format { DD_FORMAT_JSON = 0, DD_FORMAT_TABLE = 1 } dd_format;

DD_API const char* dd_last_error(void);
DD_API const char* dd_status_name(dd_status status);
DD_API void dd_string_free(char* s);

/* Algebras: "sl2", "sl3", "sl2 o+ sl3", ... or the JSON schema
 * { "dim": int, "brackets": [[i, j, k, "c"], ...], "labels": [...] }. */
DD_API dd_status dd_algebra_parse(const char* descriptor, dd_algebra** out);
DD_API dd_status dd_algebra_from_json(const char* json, dd_algebra** out);
DD_API dd_status dd_algebra_to_json(const dd_algebra* algebra, char** out);
/* Canonical descriptor, or "custom" for algebras read from JSON. */
DD_API dd_status dd_algebra_describe(const dd_algebra* algebra, char** out);
DD_API size_t dd_algebra_dim(const dd_algebra* algebra);
DD_API void dd_algebra_free(dd_algebra* algebra);

/* Modules: "V(n)", "adjoint", "natural", "trivial(d)", combined with "o+" and
 * "(x)", or the JSON schema { "dim": int, "action": [matrix, ...] }. */
DD_API dd_status dd_module_parse(const dd_algebra* algebra, const char* descriptor, dd_module** out);
DD_API dd_status dd_module_from_json(const dd_algebra* algebra, const char* json, dd_module** out);
DD_API dd_status dd_module_to_json(const dd_module* module, char** out);
DD_API dd_status dd_module_describe(const dd_module* module, char** out);
DD_API size_t dd_module_dim(const dd_module* module);
DD_API void dd_module_free(dd_module* module);

/* Reads { "algebra": {...}, "module": {...} }; module_out may be NULL, and is
 * set to NULL when the document has no module. */
DD_API dd_status dd_load_json(const char* json, dd_algebra** algebra_out, dd_module** module_out);

/* Describes an algebra and optional module (module may be NULL). The JSON
 * form embeds both schemas and can be fed back through dd_load_json. */
DD_API dd_status dd_describe_render(const dd_algebra* algebra, const dd_module* module, dd_format format, char** out);

/* Der_delta(L, V). grading_element < 0 solves the whole system at once;
 * otherwise the system is split by the eigenvalues of that basis element. */
DD_API dd_status dd_solve(const dd_module* module, const char* delta, long grading_element, dd_space** out);
DD_API size_t dd_space_dimension(const dd_space* space);
DD_API dd_status dd_space_render(const dd_space* space, dd_format format, char** out);
DD_API void dd_space_free(dd_space* space);

/* All rational delta with nonzero Der_delta (delta = 0 only if include_zero). */
DD_API dd_status dd_scan(const dd_module* module, int include_zero, dd_scan_report** out);
DD_API size_t dd_scan_finding_count(const dd_scan_report* report);
DD_API dd_status dd_scan_finding(const dd_scan_report* report, size_t index, char** delta, size_t* dimension);
DD_API size_t dd_scan_generic_rank(const dd_scan_report* report);
DD_API size_t dd_scan_nonrational_count(const dd_scan_report* report);
DD_API dd_status dd_scan_render(const dd_scan_report* report, dd_format format, char** out);
DD_API void dd_scan_free(dd_scan_report* report);

DD_API dd_status dd_verify_all(int max_n, dd_verify_report** out);
DD_API size_t dd_verify_failures(const dd_verify_report* report);
DD_API dd_status dd_verify_render(const dd_verify_report* report, dd_format format, char** out);
DD_API void dd_verify_free(dd_verify_report* report);

#ifdef __cplusplus
}
#endif

#endif /* DELTADER_DELTADER_H */
