#ifndef MULTCTL_H
#define MULTCTL_H

#include <stddef.h>
#include <stdint.h>

typedef enum MultStatus {
  MULT_STATUS_OK = 0,
  MULT_STATUS_NULL_POINTER = 1,
  MULT_STATUS_INVALID_UTF8 = 2,
  MULT_STATUS_PARSE_ERROR = 3,
  MULT_STATUS_INPUT_ERROR = 4,
  MULT_STATUS_DOMAIN_ERROR = 5,
  MULT_STATUS_INCONCLUSIVE = 6,
  MULT_STATUS_PANIC = 7,
} MultStatus;

typedef enum MultVerdict {
  MULT_VERDICT_HOLDS = 0,
  MULT_VERDICT_HOLDS_WITH_EQUALITY = 1,
  MULT_VERDICT_INCONCLUSIVE = 2,
  MULT_VERDICT_FAILS = 3,
} MultVerdict;

// A monomial ideal together with the names of its variables.
typedef struct MultIdeal MultIdeal;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or NULL. The pointer is
// valid until the next call into this library from the same thread.
const char *mult_last_error(void);

// Parses an ideal such as `"<x^2, y^3>"`. `vars` is a comma-separated list
// of variable names, or NULL to infer them.
//
// # Safety
// `text` and `vars` must be NUL-terminated strings or NULL; `out` must be
// valid for writes.
enum MultStatus mult_ideal_parse(const char *text, const char *vars, struct MultIdeal **out);

// # Safety
// `ideal` must come from this library and not be freed twice.
void mult_ideal_free(struct MultIdeal *ideal);

// # Safety
// `ideal` must be a live handle; `out` must be valid for writes.
enum MultStatus mult_ideal_arity(const struct MultIdeal *ideal, size_t *out);

// Canonical text of the ideal, generators in descending order.
//
// # Safety
// `ideal` must be a live handle; `out` must be valid for writes.
enum MultStatus mult_ideal_to_string(const struct MultIdeal *ideal, char **out);

// # Safety
// `s` must come from this library and not be freed twice.
void mult_string_free(char *s);

// Log canonical threshold as a rational string, `"inf"` for the unit ideal.
//
// # Safety
// `ideal` must be a live handle; `out` must be valid for writes.
enum MultStatus mult_lct(const struct MultIdeal *ideal, char **out);

// The multiplier ideal `I(coeff·a)` as a new handle in the same variables.
//
// # Safety
// `ideal` must be a live handle, `coeff` a NUL-terminated string and `out`
// valid for writes.
enum MultStatus mult_multiplier_ideal(const struct MultIdeal *ideal,
                                      const char *coeff,
                                      struct MultIdeal **out);

// Jumping numbers in `(0, max]`, comma-separated in increasing order
// (empty string when there are none).
//
// # Safety
// `ideal` must be a live handle, `max` a NUL-terminated string and `out`
// valid for writes.
enum MultStatus mult_jumping_numbers(const struct MultIdeal *ideal, const char *max, char **out);

// Checks `I(γ·(a+b)) ⊆ Σ_{α+β=γ} I(α·a)·I(β·b)` for ideals in the same
// variables.
//
// # Safety
// `a` and `b` must be live handles, `gamma` a NUL-terminated string and
// `out` valid for writes.
enum MultStatus mult_verify_sum_inclusion(const struct MultIdeal *a,
                                          const struct MultIdeal *b,
                                          const char *gamma,
                                          enum MultVerdict *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MULTCTL_H */
