/* C interface to the exact immanant library. */

#ifndef IMMANANT_H
#define IMMANANT_H

/* Generated by cbindgen; edit the Rust source instead. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum ImmStatus {
  /**
   * The call succeeded and the out parameter holds the result.
   */
  IMM_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  IMM_STATUS_NULL_ARGUMENT = 1,
  /**
   * An argument failed validation (malformed partition, class, matrix,
   * or a size mismatch against the table).
   */
  IMM_STATUS_INVALID_INPUT = 2,
  /**
   * The requested n is beyond the supported range.
   */
  IMM_STATUS_UNSUPPORTED = 3,
  /**
   * An internal invariant failed; the out parameter is untouched.
   */
  IMM_STATUS_INTERNAL = 4,
} ImmStatus;

/**
 * Opaque handle to a character table of one symmetric group.
 */
typedef struct ImmTable ImmTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds the character table of S_n and writes a heap-allocated handle to
 * `out`. Release it with `imm_table_free`.
 *
 * # Safety
 * `out` must be a valid pointer to an `ImmTable*` slot.
 */
enum ImmStatus imm_table_new(size_t n, struct ImmTable **out);

/**
 * Releases a handle produced by `imm_table_new`. Null is a no-op.
 *
 * # Safety
 * `table` must be null or a handle not already freed.
 */
void imm_table_free(struct ImmTable *table);

/**
 * Writes the n of the group the table describes.
 *
 * # Safety
 * `table` must be a live handle; `out` must be writable.
 */
enum ImmStatus imm_table_n(const struct ImmTable *table, size_t *out);

/**
 * Writes the character value chi_partition(class). Both arrays are
 * partitions of the table's n, given as positive parts.
 *
 * # Safety
 * `table` must be a live handle; the two arrays must hold `partition_len`
 * and `class_len` readable values; `out` must be writable.
 */
enum ImmStatus imm_character(const struct ImmTable *table,
                             const size_t *partition,
                             size_t partition_len,
                             const size_t *class_,
                             size_t class_len,
                             int64_t *out);

/**
 * Writes the dimension of the irreducible representation labelled by the
 * partition (the immanant's value on the identity matrix).
 *
 * # Safety
 * `partition` must hold `partition_len` readable values; `out` must be
 * writable.
 */
enum ImmStatus imm_dimension(const size_t *partition, size_t partition_len, uint64_t *out);

/**
 * Evaluates the immanant of a square matrix given as a JSON array of rows;
 * entries are integers or "p/q" strings. Writes the exact rational result
 * as a NUL-terminated decimal or "p/q" string; release it with
 * `imm_string_free`.
 *
 * # Safety
 * `table` must be a live handle; `partition` must hold `partition_len`
 * readable values; `matrix_json` must be a NUL-terminated string; `out`
 * must be writable.
 */
enum ImmStatus imm_immanant_json(const struct ImmTable *table,
                                 const size_t *partition,
                                 size_t partition_len,
                                 const char *matrix_json,
                                 char **out);

/**
 * Releases a string returned through an out pointer. Null is a no-op.
 *
 * # Safety
 * `s` must be null or a string produced by this library, not already freed.
 */
void imm_string_free(char *s);

/**
 * Writes the rank of the linear span of all n x n permutation matrices,
 * which equals (n-1)^2 + 1.
 *
 * # Safety
 * `out` must be writable.
 */
enum ImmStatus imm_perm_span_rank(size_t n, size_t *out);

/**
 * Writes the dimension of the solution space of the torus constraints for
 * the partition: n^2 minus the rank of the span of the nonvanishing
 * permutation matrices.
 *
 * # Safety
 * `table` must be a live handle; `partition` must hold `partition_len`
 * readable values; `out` must be writable.
 */
enum ImmStatus imm_torus_constraint_dimension(const struct ImmTable *table,
                                              const size_t *partition,
                                              size_t partition_len,
                                              size_t *out);

/**
 * Writes the order of the group of permutations whose left translations
 * preserve both character zero sets of the partition. Scans all n!
 * permutations; n = 7 takes a few seconds.
 *
 * # Safety
 * `table` must be a live handle; `partition` must hold `partition_len`
 * readable values; `out` must be writable.
 */
enum ImmStatus imm_gset_order(const struct ImmTable *table,
                              const size_t *partition,
                              size_t partition_len,
                              size_t *out);

/**
 * Returns the library version as a static NUL-terminated string. Do not
 * free it.
 */
const char *imm_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* IMMANANT_H */
