#ifndef KEIKIT_H
#define KEIKIT_H

/* keikit — counting and module-enhanced invariants of unoriented classical
 * and virtual links over finite kei.
 *
 * Conventions:
 *   - Every function returning int yields a KEIKIT_* status code; on any
 *     nonzero status the output parameters are untouched and
 *     keikit_last_error() holds a message (thread-local, valid until the
 *     next failing call on the same thread).
 *   - Strings returned through char** are heap-allocated; release them with
 *     keikit_string_free().  Objects returned through handle pointers are
 *     released with their matching *_free(); all *_free functions accept
 *     NULL.
 *   - Kei elements are 1-based (1..order), matching operation-table files.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    KEIKIT_OK = 0,
    KEIKIT_ERROR_INVALID_ARGUMENT = 1, /* NULL handle, bad enum string, ... */
    KEIKIT_ERROR_PARSE = 2,            /* malformed input text */
    KEIKIT_ERROR_DOMAIN = 3,           /* violates a mathematical contract */
    KEIKIT_ERROR_LIMIT = 4             /* refused by a size guard */
};

typedef struct keikit_kei keikit_kei;
typedef struct keikit_diagram keikit_diagram;
typedef struct keikit_module keikit_module;
typedef struct keikit_module_list keikit_module_list;

/* Message for the most recent failure on this thread; never NULL. */
const char* keikit_last_error(void);

void keikit_string_free(char* s);

/* ---- kei ------------------------------------------------------------- */

/* Operation table as JSON {"order": n, "table": [[...], ...]} or as n
 * whitespace-separated rows of n integers.  Validates the kei axioms. */
int keikit_kei_parse(const char* text, keikit_kei** out);

/* x > y = 2y - x over Z_n. */
int keikit_kei_takasaki(int n, keikit_kei** out);

/* x > y = t x + (1 - t) y over Z_n; requires t*t = 1 (mod n). */
int keikit_kei_alexander(int n, long long t, keikit_kei** out);

void keikit_kei_free(keikit_kei* k);

int keikit_kei_order(const keikit_kei* k);

/* The operation x > y; elements 1-based. */
int keikit_kei_op(const keikit_kei* k, int x, int y, int* out);

int keikit_kei_to_json(const keikit_kei* k, char** out);

/* Stable 16-hex-digit tag of the operation table. */
int keikit_kei_digest(const keikit_kei* k, char** out);

/* ---- diagrams -------------------------------------------------------- */

/* "PD[X[1,4,2,5],...]"; X entries are classical crossings listed
 * counterclockwise from the incoming under-edge, V entries are virtual
 * crossings (erased on read).  Non-planar codes are read as virtual links. */
int keikit_diagram_parse_pd(const char* text, keikit_diagram** out);

/* "<strands>:<g1>,<g2>,..." braid closure; i / -i are Artin generators,
 * vi is a virtual swap, "1:" is the zero-crossing unknot. */
int keikit_diagram_parse_braid(const char* text, keikit_diagram** out);

void keikit_diagram_free(keikit_diagram* d);

int keikit_diagram_reverse(const keikit_diagram* d, keikit_diagram** out);

/* Round-trippable PD code; fails (DOMAIN) on crossingless components. */
int keikit_diagram_to_pd(const keikit_diagram* d, char** out);

int keikit_diagram_crossings(const keikit_diagram* d);
int keikit_diagram_arcs(const keikit_diagram* d);
int keikit_diagram_components(const keikit_diagram* d);

/* ---- counting invariant ---------------------------------------------- */

/* Number of labelings of d's arcs by k satisfying every crossing relation. */
int keikit_count_labelings(const keikit_diagram* d, const keikit_kei* k,
                           unsigned long long* out);

/* ---- kei modules ------------------------------------------------------ */

/* JSON {"modulus": m, "variant": "kei"|"quandle", "t": [[...]], "s": [[...]]}
 * or text: n rows of 2n integers (the [T|S] block).  `modulus` > 0 overrides
 * or supplies the modulus; `variant` non-NULL overrides or supplies the
 * variant.  Structure relations are NOT checked here; see
 * keikit_module_verify. */
int keikit_module_parse(const char* text, long long modulus, const char* variant,
                        keikit_module** out);

void keikit_module_free(keikit_module* m);

long long keikit_module_modulus(const keikit_module* m);
int keikit_module_order(const keikit_module* m);

/* "kei" or "quandle"; pointer is static, do not free. */
const char* keikit_module_variant(const keikit_module* m);

/* Checks every relation instance of the module's variant against k.
 * Status KEIKIT_OK means the check ran: *valid is 1/0, and *report (may be
 * NULL if not wanted) receives a human-readable violation list, empty when
 * valid.  Order mismatch with k is KEIKIT_ERROR_DOMAIN. */
int keikit_module_verify(const keikit_kei* k, const keikit_module* m, int* valid,
                         char** report);

int keikit_module_to_json(const keikit_module* m, char** out);
int keikit_module_to_text(const keikit_module* m, char** out);
int keikit_module_digest(const keikit_module* m, char** out);

/* All module structures on Z_modulus for the given variant ("kei" or
 * "quandle"), ordered lexicographically on the [T|S] block rows.
 * limit <= 0 selects the default guard on order*modulus. */
int keikit_enumerate_modules(const keikit_kei* k, long long modulus,
                             const char* variant, long long limit,
                             keikit_module_list** out);

void keikit_module_list_free(keikit_module_list* l);

long long keikit_module_list_size(const keikit_module_list* l);

/* Borrowed reference, valid while the list lives; NULL when out of range. */
const keikit_module* keikit_module_list_get(const keikit_module_list* l,
                                            long long i);

/* ---- enhanced invariant ----------------------------------------------- */

/* Canonical rendering: terms by ascending exponent, "<mult>u^<exp>" joined
 * by " + ", exponent 1 printed "u"; e.g. "3u^7 + 6u^49". */
int keikit_enhanced_invariant(const keikit_diagram* d, const keikit_kei* k,
                              const keikit_module* m, char** out);

/* Full JSON record:
 *   {"link": <name>, "kei": <digest>, "module": <digest>,
 *    "terms": [{"exp": E, "mult": M}, ...], "countingInvariant": N}
 * Exponents that overflow 64 bits are emitted as decimal strings. */
int keikit_enhanced_invariant_json(const keikit_diagram* d, const keikit_kei* k,
                                   const keikit_module* m, const char* link_name,
                                   char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* KEIKIT_H */
