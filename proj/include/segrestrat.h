#ifndef SEGRESTRAT_H
#define SEGRESTRAT_H

/* C interface to the Segre stratification library. All functions returning
 * sgs_status leave a human-readable message in sgs_last_error() on failure.
 * Strings handed out through char** are heap-allocated; release them with
 * sgs_string_free. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define SGS_VERSION "1.0.0"

typedef enum {
  SGS_OK = 0,
  SGS_ERR_PARSE = 1,
  SGS_ERR_DIMENSION = 2,
  SGS_ERR_DOMAIN = 3,
  SGS_ERR_DEGENERATE_PARABOLIC = 4,
  SGS_ERR_UNSUPPORTED_FAMILY = 5,
  SGS_ERR_OVERFLOW = 6,
  SGS_ERR_INVALID_ARGUMENT = 7,
  SGS_ERR_INTERNAL = 8
} sgs_status;

typedef struct sgs_group sgs_group;
typedef struct sgs_parabolic sgs_parabolic;

const char* sgs_version(void);

/* Message of the most recent failure on this thread; empty if none. */
const char* sgs_last_error(void);

void sgs_string_free(char* s);

/* ---- groups ---- */

/* Accepts GL(r), SL(r), SL(r)/mu(m), PGL(r), Sp(2n), PSp(2n), SO(r), Spin(r). */
sgs_status sgs_group_parse(const char* name, sgs_group** out);
void sgs_group_free(sgs_group* g);

/* {"result": {name, family, dim, dim_center, torus_rank, pi1, root_type,
 *             moduli_dim? (with genus>=2 via sgs_group_json_at_genus)},
 *  "warnings": []} */
sgs_status sgs_group_json(const sgs_group* g, char** out_json);
sgs_status sgs_roots_json(const sgs_group* g, char** out_json);

/* ---- parabolics ---- */

sgs_status sgs_parabolic_from_flag(const sgs_group* g, const int* blocks, size_t count,
                                   sgs_parabolic** out);
sgs_status sgs_parabolic_from_isotropic(const sgs_group* g, const int* dims, size_t count,
                                        int lagrangian_class, sgs_parabolic** out);
sgs_status sgs_parabolic_from_omitted(const sgs_group* g, const int* omitted, size_t count,
                                      sgs_parabolic** out);
sgs_status sgs_parabolic_borel(const sgs_group* g, sgs_parabolic** out);
void sgs_parabolic_free(sgs_parabolic* p);

sgs_status sgs_parabolic_json(const sgs_parabolic* p, char** out_json);
sgs_status sgs_isotropy_json(const sgs_parabolic* p, char** out_json);

/* ---- Segre values ---- */

sgs_status sgs_segre_value(const sgs_parabolic* p, const long long* degrees, size_t count,
                           long long* out_value);
sgs_status sgs_segre_json(const sgs_parabolic* p, const long long* degrees, size_t count,
                          char** out_json);

/* ---- strata ---- */

sgs_status sgs_hn_upper_bound(const sgs_parabolic* p, int genus, long long* out_value);

/* group is GL(r), PGL(r), SO(2n) or Spin(2n); n is the type-A parabolic
 * parameter (ignored for the orthogonal families). */
sgs_status sgs_stratum_json(const char* group_name, int n, long long delta, long long s,
                            int genus, char** out_json);
sgs_status sgs_sigma_json(const char* group_name, int n, long long delta, int genus,
                          char** out_json);

/* kind: adjoint | central-quotient | quotient-to-adjoint | adjoint-symplectic
 * | cover. r, m parameterise the isogeny as in the group names. omitted may
 * be NULL with count 0 for the catalogued maximal parabolic (requires n > 0
 * for type A sources). source_status: "yes" | "no" | "unknown" | NULL
 * (NULL = derive from the source catalog when available, else unknown). */
sgs_status sgs_transfer_json(const char* kind, int r, int m, int n, const int* omitted,
                             size_t omitted_count, long long delta, long long s, int genus,
                             const char* source_status, char** out_json);

/* ---- GL(3) Borel classification ---- */

sgs_status sgs_gl3_classify_json(long long d1, long long d2, long long d3, long long delta,
                                 int genus, char** out_json);

/* format: "csv" | "svg" | "json". */
sgs_status sgs_gl3_figure(long long delta, int genus, long long d1_min, long long d1_max,
                          long long d3_min, long long d3_max, const char* format,
                          char** out_text);

#ifdef __cplusplus
}
#endif

#endif
