#ifndef IAA_H
#define IAA_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum IaaStatus {
  IAA_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  IAA_STATUS_NULL_POINTER = 1,
  /**
   * Bad argument: invalid UTF-8, unknown measure, index out of range.
   */
  IAA_STATUS_INVALID_ARGUMENT = 2,
  /**
   * Interval, scale or weight validation failed.
   */
  IAA_STATUS_INVALID_INPUT = 3,
  /**
   * A ratio or score is undefined (zero denominator).
   */
  IAA_STATUS_UNDEFINED = 4,
  /**
   * File could not be read or parsed.
   */
  IAA_STATUS_IO = 5,
  /**
   * The library panicked; this is a bug.
   */
  IAA_STATUS_INTERNAL = 99,
} IaaStatus;

/**
 * Similarity measure selector.
 */
typedef enum IaaMeasure {
  IAA_MEASURE_JACCARD = 0,
  IAA_MEASURE_ATTRIBUTE = 1,
  IAA_MEASURE_COMBINED = 2,
} IaaMeasure;

/**
 * Opaque fuzzy number.
 */
typedef struct IaaFuzzyNumber IaaFuzzyNumber;

/**
 * Opaque collection of intervals under construction.
 */
typedef struct IaaIntervalSet IaaIntervalSet;

/**
 * One region of a fuzzy number: membership `height` on `[left, right]`.
 */
typedef struct IaaRegion {
  double left;
  double right;
  double height;
} IaaRegion;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or null. Owned by the library;
 * valid until the next failing call on this thread.
 */
const char *iaa_last_error_message(void);

/**
 * Frees a string returned by the library. Null is ignored.
 */
void iaa_string_free(char *s);

/**
 * New empty interval set. `label` may be null.
 */
struct IaaIntervalSet *iaa_interval_set_new(const char *label);

enum IaaStatus iaa_interval_set_push(struct IaaIntervalSet *set, double left, double right);

size_t iaa_interval_set_len(const struct IaaIntervalSet *set);

void iaa_interval_set_free(struct IaaIntervalSet *set);

/**
 * Builds the fuzzy number of `set` on the scale `[scale_min, scale_max]`.
 */
enum IaaStatus iaa_fuzzy_number_construct(const struct IaaIntervalSet *set,
                                          double scale_min,
                                          double scale_max,
                                          struct IaaFuzzyNumber **out_fz);

void iaa_fuzzy_number_free(struct IaaFuzzyNumber *fz);

/**
 * Membership grade at `x`; 0 for a null handle.
 */
double iaa_fuzzy_number_membership(const struct IaaFuzzyNumber *fz, double x);

size_t iaa_fuzzy_number_region_count(const struct IaaFuzzyNumber *fz);

/**
 * Copies region `index` (sorted by left, then right) into `out_region`.
 */
enum IaaStatus iaa_fuzzy_number_region(const struct IaaFuzzyNumber *fz,
                                       size_t index,
                                       struct IaaRegion *out_region);

enum IaaStatus iaa_fuzzy_number_centroid(const struct IaaFuzzyNumber *fz,
                                         double *out_x,
                                         double *out_y);

/**
 * Total area under the membership function.
 */
enum IaaStatus iaa_fuzzy_number_area(const struct IaaFuzzyNumber *fz, double *out_value);

enum IaaStatus iaa_fuzzy_number_height(const struct IaaFuzzyNumber *fz, double *out_value);

/**
 * Outline length, baseline included; an isolated spike counts twice its height.
 */
enum IaaStatus iaa_fuzzy_number_perimeter(const struct IaaFuzzyNumber *fz, double *out_value);

/**
 * Area over the support hull width; the height when the hull is a point.
 */
enum IaaStatus iaa_fuzzy_number_agreement_ratio(const struct IaaFuzzyNumber *fz, double *out_value);

/**
 * JSON form of the fuzzy number; free with `iaa_string_free`.
 */
enum IaaStatus iaa_fuzzy_number_to_json(const struct IaaFuzzyNumber *fz, char **out_json);

/**
 * Similarity of `a` and `b` under the default feature weights.
 */
enum IaaStatus iaa_similarity(const struct IaaFuzzyNumber *a,
                              const struct IaaFuzzyNumber *b,
                              enum IaaMeasure measure,
                              double *out_value);

/**
 * Universal order: writes 1 if `a` ranks above `b`, -1 if below, 0 if tied.
 */
enum IaaStatus iaa_universal_compare(const struct IaaFuzzyNumber *a,
                                     const struct IaaFuzzyNumber *b,
                                     double epsilon,
                                     int32_t *out_order);

/**
 * `S(fz, best) / (S(fz, best) + S(fz, worst))`; `IAA_STATUS_UNDEFINED` when
 * both similarities are zero.
 */
enum IaaStatus iaa_ideal_ratio(const struct IaaFuzzyNumber *fz,
                               const struct IaaFuzzyNumber *best,
                               const struct IaaFuzzyNumber *worst,
                               enum IaaMeasure measure,
                               double *out_value);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* IAA_H */
