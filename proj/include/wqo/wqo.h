/*
 * C interface to the wqo library: down-closed sets over well-quasi-ordered
 * data types, and cover/coverability for Petri nets and functional-lossy
 * channel systems.
 *
 * Objects are opaque handles created by *_parse / *_new style calls and
 * released with the matching *_destroy.  Every function returns WQO_OK (0)
 * or a negative error code; the message of the last error on the calling
 * thread is available from wqo_last_error_message().
 *
 * Functions producing text follow one convention: pass a buffer and its
 * capacity in *out_len.  If the buffer is NULL or too small, *out_len is set
 * to the required size (including the terminating NUL) and
 * WQO_ERROR_INSUFFICIENT_BUFFER is returned.
 */
#ifndef WQO_H_
#define WQO_H_

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
  #define WQO_API __declspec(dllexport)
#else
  #define WQO_API __attribute__((visibility("default")))
#endif

enum wqo_error_code {
   WQO_OK = 0,
   WQO_ERROR_NULL_POINTER = -1,
   WQO_ERROR_SYNTAX = -2,
   WQO_ERROR_SEMANTIC = -3,
   WQO_ERROR_SHAPE_MISMATCH = -4,
   WQO_ERROR_TYPE_MISMATCH = -5,
   WQO_ERROR_USAGE = -6,
   WQO_ERROR_INSUFFICIENT_BUFFER = -7,
   WQO_ERROR_MODEL_INTEGRITY = -8,
   WQO_ERROR_INVALID_OBJECT = -9,
   WQO_ERROR_INTERNAL = -10
};

WQO_API const char* wqo_error_description(int code);
WQO_API const char* wqo_last_error_message(void);

typedef struct wqo_type_struct* wqo_type_t;
typedef struct wqo_downset_struct* wqo_downset_t;
typedef struct wqo_model_struct* wqo_model_t;
typedef struct wqo_cover_result_struct* wqo_cover_result_t;

/* Data types, e.g. "fin{a,b | a<b}*" or "(nat * nat)". */
WQO_API int wqo_type_parse(wqo_type_t* out, const char* text);
WQO_API int wqo_type_to_string(wqo_type_t type, char* out, size_t* out_len);
WQO_API int wqo_type_destroy(wqo_type_t type);

/* Element order: *result = 1 if a <= b, else 0. */
WQO_API int wqo_value_leq(wqo_type_t type, const char* a, const char* b, int* result);

/* Down-closed sets, written as sums of ideals ("a? b? + {a}*") or "empty". */
WQO_API int wqo_downset_parse(wqo_downset_t* out, wqo_type_t type, const char* sre);
WQO_API int wqo_downset_from_json(wqo_downset_t* out, const char* json);
WQO_API int wqo_downset_full(wqo_downset_t* out, wqo_type_t type);
WQO_API int wqo_downset_union(wqo_downset_t* out, wqo_downset_t a, wqo_downset_t b);
WQO_API int wqo_downset_leq(wqo_downset_t a, wqo_downset_t b, int* result);
WQO_API int wqo_downset_member(wqo_downset_t d, const char* value, int* result);
WQO_API int wqo_downset_size(wqo_downset_t d, size_t* parts);
WQO_API int wqo_downset_to_string(wqo_downset_t d, char* out, size_t* out_len);
WQO_API int wqo_downset_to_json(wqo_downset_t d, char* out, size_t* out_len);
WQO_API int wqo_downset_destroy(wqo_downset_t d);

/* Models in the line-oriented petri/flcs format. */
WQO_API int wqo_model_parse(wqo_model_t* out, const char* text);
WQO_API int wqo_model_is_petri(wqo_model_t model, int* result);
WQO_API int wqo_model_state_type(wqo_model_t model, wqo_type_t* out);
WQO_API int wqo_model_destroy(wqo_model_t model);

typedef struct wqo_budget {
   size_t max_rounds;
   size_t max_composite_len;
   size_t max_adds;
} wqo_budget;

/* max_rounds=64, max_composite_len=4, max_adds=4096 */
WQO_API void wqo_budget_default(wqo_budget* budget);

enum wqo_cover_status {
   WQO_COVER_COMPLETE = 0,
   WQO_COVER_BUDGET_EXHAUSTED = 1
};

/* `budget` may be NULL for the defaults. */
WQO_API int wqo_cover(wqo_cover_result_t* out, wqo_model_t model, const char* init, const wqo_budget* budget);
WQO_API int wqo_cover_result_status(wqo_cover_result_t r, int* status);
WQO_API int wqo_cover_result_cover(wqo_cover_result_t r, wqo_downset_t* out);
WQO_API int wqo_cover_result_to_json(wqo_cover_result_t r, char* out, size_t* out_len);
WQO_API int wqo_cover_result_destroy(wqo_cover_result_t r);

enum wqo_verdict {
   WQO_VERDICT_YES = 0,
   WQO_VERDICT_NO = 1,
   WQO_VERDICT_UNKNOWN = 3
};

enum wqo_method {
   WQO_METHOD_FORWARD = 0,
   WQO_METHOD_BACKWARD = 1
};

/* Backward is only available for Petri models (WQO_ERROR_USAGE otherwise). */
WQO_API int wqo_coverable(wqo_model_t model, const char* init, const char* target,
                          int method, const wqo_budget* budget, int* verdict);

#ifdef __cplusplus
}
#endif

#endif
