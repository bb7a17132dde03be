/* conjal C API. Handles are opaque; strings are freed with conjal_string_free. */

#pragma once

/* Generated with cbindgen:0.29.4 */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible entry point.
typedef enum ConjalStatus {
  ConjalStatus_Ok = 0,
  ConjalStatus_NullPointer = 1,
  ConjalStatus_InvalidUtf8 = 2,
  ConjalStatus_RingMismatch = 3,
  ConjalStatus_NotEntire = 4,
  ConjalStatus_NotAField = 5,
  ConjalStatus_DivisionByZero = 6,
  ConjalStatus_AlgebraMismatch = 7,
  ConjalStatus_NotScalar = 8,
  ConjalStatus_NotInvertible = 9,
  ConjalStatus_UnknownAlgebra = 10,
  ConjalStatus_NonAssociative = 11,
  ConjalStatus_DegreeBound = 12,
  ConjalStatus_RootOfDenominator = 13,
  ConjalStatus_Precondition = 14,
  ConjalStatus_Syntax = 15,
  ConjalStatus_UnknownBasis = 16,
  ConjalStatus_InvalidSpec = 17,
  ConjalStatus_Usage = 18,
  ConjalStatus_Io = 19,
  ConjalStatus_Internal = 20,
} ConjalStatus;

// Classification tags mirroring the kernel's zero set / invertible split.
typedef enum ConjalClass {
  ConjalClass_Zero = 0,
  ConjalClass_ZeroDivisor = 1,
  ConjalClass_Invertible = 2,
} ConjalClass;

// Opaque algebra handle.
typedef struct ConjalAlgebra ConjalAlgebra;

// Opaque element handle. Elements remember their algebra; results of
// inversion may live in the lifted (fraction-field) algebra.
typedef struct ConjalElement ConjalElement;

// Outcome of the algebra axiom checks.
typedef struct ConjalValidation {
  bool unit_ok;
  bool involution_ok;
  bool anti_homomorphism_ok;
  bool norm_scalar_ok;
  bool associative;
  // Unit, involution, anti-homomorphism and norm scalarity all hold.
  bool passed;
} ConjalValidation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Returns the crate version as a static string; do not free.
const char *conjal_version(void);

// Returns the detail message of the most recent failure on this thread,
// or null. The caller frees it with `conjal_string_free`.
char *conjal_last_error_message(void);

// Frees a string returned by this library. Null is ignored.
//
// # Safety
// `s` must be null or a pointer previously returned by a conjal function
// that documents this deallocator, not yet freed.
void conjal_string_free(char *s);

// Builds a catalog algebra. `name` is one of complex, split_complex, dual,
// quaternion, split_quaternion, octonion; `ring` is "Z", "Q" or "Z/<n>".
//
// # Safety
// `name` and `ring` must be valid C strings; `out` must be a valid
// location to store the new handle.
enum ConjalStatus conjal_algebra_catalog(const char *name,
                                         const char *ring,
                                         struct ConjalAlgebra **out);

// Loads an algebra from its JSON spec text.
//
// # Safety
// `json` must be a valid C string; `out` must be a valid location.
enum ConjalStatus conjal_algebra_from_json(const char *json, struct ConjalAlgebra **out);

// Serializes an algebra to its JSON spec text; free with
// `conjal_string_free`. Returns null on a null handle.
//
// # Safety
// `alg` must be null or a live algebra handle.
char *conjal_algebra_to_json(const struct ConjalAlgebra *alg);

// # Safety
// `alg` must be null or a live handle, not yet freed.
void conjal_algebra_free(struct ConjalAlgebra *alg);

// # Safety
// `alg` must be null or a live algebra handle.
uintptr_t conjal_algebra_dim(const struct ConjalAlgebra *alg);

// # Safety
// `alg` must be null or a live algebra handle.
bool conjal_algebra_is_associative(const struct ConjalAlgebra *alg);

// Runs the axiom checks and fills `report`.
//
// # Safety
// `alg` must be a live algebra handle and `report` a valid location.
enum ConjalStatus conjal_algebra_validate(const struct ConjalAlgebra *alg,
                                          struct ConjalValidation *report);

// Parses an element expression (no variable) against the algebra.
//
// # Safety
// `alg` must be a live handle, `src` a valid C string, `out` a valid
// location.
enum ConjalStatus conjal_element_parse(const struct ConjalAlgebra *alg,
                                       const char *src,
                                       struct ConjalElement **out);

// Renders an element in the expression grammar; free with
// `conjal_string_free`.
//
// # Safety
// `e` must be null or a live element handle.
char *conjal_element_format(const struct ConjalElement *e);

// # Safety
// `e` must be null or a live handle, not yet freed.
void conjal_element_free(struct ConjalElement *e);

// Conjugate of an element.
//
// # Safety
// `a` must be a live element handle and `out` a valid location.
enum ConjalStatus conjal_element_conj(const struct ConjalElement *a, struct ConjalElement **out);

// Writes the norm `a a*` as a scalar literal; free with
// `conjal_string_free`.
//
// # Safety
// `a` must be a live element handle and `out` a valid location.
enum ConjalStatus conjal_element_norm(const struct ConjalElement *a, char **out);

// Classifies an element. When it is a zero divisor and `witness` is
// non-null, a nonzero annihilating partner is returned through it (free
// with `conjal_element_free`); otherwise `witness` is set to null.
//
// # Safety
// `a` must be a live element handle, `tag` a valid location, `witness`
// null or a valid location.
enum ConjalStatus conjal_element_classify(const struct ConjalElement *a,
                                          enum ConjalClass *tag,
                                          struct ConjalElement **witness);

// Inverse through the conjugate, computed in the lifted algebra. Fails
// with `NotInvertible` when the norm vanishes.
//
// # Safety
// `a` must be a live element handle and `out` a valid location.
enum ConjalStatus conjal_element_invert(const struct ConjalElement *a, struct ConjalElement **out);

// Evaluates a polynomial expression (in `x` and `~x`) at a point, both
// given in the expression grammar. Nonassociative ambients evaluate the
// parse tree as written.
//
// # Safety
// `alg` must be a live handle, `poly_src` and `point_src` valid C strings,
// `out` a valid location.
enum ConjalStatus conjal_poly_eval(const struct ConjalAlgebra *alg,
                                   const char *poly_src,
                                   const char *point_src,
                                   struct ConjalElement **out);

// Evaluates a rational expression (`inv(p)` allowed) at a point, in the
// lifted algebra. Fails with `RootOfDenominator` at roots.
//
// # Safety
// `alg` must be a live handle, `expr_src` and `point_src` valid C strings,
// `out` a valid location.
enum ConjalStatus conjal_rational_eval(const struct ConjalAlgebra *alg,
                                       const char *expr_src,
                                       const char *point_src,
                                       struct ConjalElement **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus
