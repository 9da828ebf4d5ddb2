/* depfca: FD/MVD/DMVD checking and discovery over CSV relations.
 *
 * C interface to the depfca core. All functions return a status code;
 * results come back through out parameters. Strings returned through
 * `char**` are owned by the caller and released with depfca_string_free().
 * On any non-OK status, depfca_last_error() describes the failure
 * (thread-local).
 */
#ifndef DEPFCA_H
#define DEPFCA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Values 2..4 line up with the CLI exit codes. */
enum {
    DEPFCA_OK = 0,
    DEPFCA_E_USAGE = 2,    /* bad arguments / contract violation */
    DEPFCA_E_INGEST = 3,   /* malformed input data */
    DEPFCA_E_CAPACITY = 4, /* a hard size cap was exceeded */
    DEPFCA_E_INTERNAL = 5
};

enum {
    DEPFCA_METHOD_PARTITION = 0, /* pattern-structure partition test (default for FDs) */
    DEPFCA_METHOD_CONTEXT = 1,   /* binarized formal context implication */
    DEPFCA_METHOD_ORACLE = 2,    /* definition-level reference check */
    DEPFCA_METHOD_GAMMA = 3      /* closure-operator test (default for MVDs) */
};

enum { DEPFCA_FORMAT_TEXT = 0, DEPFCA_FORMAT_JSON = 1 };

enum { DEPFCA_LATTICE_DMVD = 0, DEPFCA_LATTICE_MVD = 1 };

typedef struct depfca_relation depfca_relation;

typedef struct {
    char delimiter;    /* field separator, default ',' */
    int dedupe_rows;   /* drop exact duplicate rows, keep first occurrence */
    int null_distinct; /* empty cells compare unequal to everything */
} depfca_load_options;

void depfca_load_options_init(depfca_load_options* opts);

/* Loads a CSV file (RFC 4180, header row mandatory). `opts` may be NULL. */
int depfca_relation_load_csv(const char* path, const depfca_load_options* opts,
                             depfca_relation** out);
void depfca_relation_free(depfca_relation* rel);

size_t depfca_relation_attr_count(const depfca_relation* rel);
size_t depfca_relation_tuple_count(const depfca_relation* rel);
/* Borrowed pointer, valid for the relation's lifetime; NULL if out of range. */
const char* depfca_relation_attr_name(const depfca_relation* rel, size_t index);
/* Case-sensitive lookup; returns -1 when the name is absent. */
int depfca_relation_attr_index(const depfca_relation* rel, const char* name);

/* Functional dependency lhs -> rhs. `holds` receives 0 or 1. */
int depfca_check_fd(const depfca_relation* rel, const size_t* lhs, size_t lhs_len,
                    const size_t* rhs, size_t rhs_len, int method, int* holds);

/* Generalized MVD lhs ->> Y1 | ... | Ym. The rhs blocks are passed flattened:
 * `rhs_attrs` holds the attribute indices block after block and
 * `block_sizes[i]` is the length of block i. The blocks must partition the
 * attributes outside lhs. `max_tuples` bounds the class enumeration
 * (0 selects the default cap of 16). */
int depfca_check_mvd(const depfca_relation* rel, const size_t* lhs, size_t lhs_len,
                     const size_t* rhs_attrs, const size_t* block_sizes, size_t block_count,
                     int method, size_t max_tuples, int* holds);

/* Degenerated MVD: pairs agreeing on lhs disagree in at most one rhs block. */
int depfca_check_dmvd(const depfca_relation* rel, const size_t* lhs, size_t lhs_len,
                      const size_t* rhs_attrs, const size_t* block_sizes, size_t block_count,
                      int* holds);

/* Minimal FDs, sorted by (|lhs|, lhs, rhs). Pass (size_t)-1 for an unbounded
 * lhs size. */
int depfca_discover_fds(const depfca_relation* rel, size_t max_lhs, int format, char** out);

/* Burmeister-style rendering of the pairwise-agreement formal context. */
int depfca_binarize_text(const depfca_relation* rel, char** out);

/* Closure of an attribute partition under the composite operator. The
 * partition is passed flattened like the MVD rhs blocks and must cover all
 * attributes. The result is rendered canonically ("a,b|c"). */
int depfca_gamma_closure(const depfca_relation* rel, const size_t* attrs,
                         const size_t* block_sizes, size_t block_count, size_t max_tuples,
                         char** out);

/* Attribute-partition lattice elements, one per line (text) or as a JSON
 * array of block arrays. */
int depfca_lattice(const depfca_relation* rel, int kind, size_t max_tuples, int format,
                   char** out);

void depfca_string_free(char* s);

/* Message for the most recent failure on this thread; never NULL. */
const char* depfca_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* DEPFCA_H */
