#ifndef XALG_XALG_H
#define XALG_XALG_H

/* C API of the xalg workbench: finite-group crossed modules, internal
 * categories in groups and in crossed modules, crossed squares, the
 * equivalence functors between them, exhaustive axiom checkers with
 * witnesses, and brute-force enumeration oracles.
 *
 * All functions are thread-compatible: handles are immutable after creation
 * and may be shared across threads.
 *
 * Strings returned through char** out parameters are heap-allocated and must
 * be released with xalg_string_free. Status codes follow the CLI convention:
 * 0 = pass, 1 = axiom/check failure (the report carries a witness),
 * 2 = input error.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct xalg_bundle xalg_bundle;

typedef enum xalg_status {
    XALG_OK = 0,
    XALG_CHECK_FAILED = 1,
    XALG_INPUT_ERROR = 2
} xalg_status;

const char* xalg_version(void);

/* Current group-order bound (XALG_SIZE_LIMIT override, default 64). */
int xalg_size_limit(void);

/* Parses a bundle document. Returns NULL on failure; *error_message (when
 * non-NULL) then receives a diagnostic. */
xalg_bundle* xalg_bundle_parse(const char* text, char** error_message);
xalg_bundle* xalg_bundle_parse_file(const char* path, char** error_message);

/* The built-in catalog as a bundle. The handle is owned by the caller. */
xalg_bundle* xalg_catalog_bundle(void);

/* Canonical serialization: sorted keys, two-space indent, integer arrays on
 * one line, trailing newline. */
char* xalg_bundle_serialize(const xalg_bundle* bundle);

void xalg_bundle_free(xalg_bundle* bundle);
void xalg_string_free(char* text);

/* kind: group | hom | action | xmod | ggpd | catxmod | xsq.
 * bundle may be NULL to resolve names against the catalog only. */
xalg_status xalg_check(const xalg_bundle* bundle, const char* kind, const char* name,
                       char** report);

/* functor: phi | psi | eta | psi_sq | pair | discrete. On success *output
 * receives the serialized result bundle, otherwise the failure report. */
xalg_status xalg_convert(const xalg_bundle* bundle, const char* functor, const char* name,
                         char** output);

/* kind: xmod | catxmod | xsq. Prints one verdict line per natural
 * isomorphism checked. */
xalg_status xalg_roundtrip(const xalg_bundle* bundle, const char* kind, const char* name,
                           char** report);

/* kind: actions | xmods | ggpds. group_a and group_b are catalog group
 * names; set classify to partition the results up to isomorphism. */
xalg_status xalg_enumerate(const char* kind, const char* group_a, const char* group_b,
                           int classify, char** report);

/* Newline-separated "kind: name name ..." listing of catalog entries. */
char* xalg_catalog_list(void);

/* Emits one catalog entry (with its dependencies) as a bundle. */
xalg_status xalg_catalog_emit(const char* name, char** output);

#ifdef __cplusplus
}
#endif

#endif /* XALG_XALG_H */
