/*
 * su3mult — exact SU(3) triple multiplicities, GL(3) Littlewood-Richardson
 * coefficients, the chamber complex of the label cone, and its order-144
 * group of linear symmetries.
 *
 * C API conventions:
 *   - every function returns an su3_status (SU3_OK on success);
 *   - results travel through out-parameters;
 *   - a triple label is an int64 array (l1,l2,m1,m2,n1,n2), a GL label an
 *     int64 array (lambda1..3, mu1..3, nu1..3), a BZ labelling int64 arrays
 *     y[3], z[6];
 *   - cells are identified by their 9-character presence bitmask over the
 *     fixed ray order C1,C2,C3,D1,D3,D5,LT,RT,STAR;
 *   - string outputs are written into caller buffers and NUL-terminated;
 *     SU3_ERR_BUFFER reports a too-small buffer;
 *   - the symmetry group lives behind an opaque handle built once with
 *     su3_group_create and freed with su3_group_destroy.
 *
 * Textual grammars (also used by the CLI):
 *   triple label:  l1,l2;m1,m2;n1,n2       e.g.  1,1;1,1;1,1
 *   GL label:      l1,l2,l3|m1,m2,m3|n1,n2,n3
 *   BZ labelling:  y1,y2,y3/z1,z2,z3,z4,z5,z6
 */

#ifndef SU3MULT_H
#define SU3MULT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SU3_API __declspec(dllexport)
#else
#define SU3_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum su3_status {
  SU3_OK = 0,
  SU3_ERR_PARSE = 1,     /* malformed textual input */
  SU3_ERR_DOMAIN = 2,    /* precondition violated (non-lattice, outside cone, ...) */
  SU3_ERR_INVALID = 3,   /* invalid argument (bad index, bad bitmask, NULL) */
  SU3_ERR_BUFFER = 4,    /* output buffer too small */
  SU3_ERR_OVERFLOW = 5,  /* result set larger than the provided capacity */
  SU3_ERR_INTERNAL = 6
} su3_status;

/* Ray identifiers, also the bit order of cell bitmasks. */
typedef enum su3_ray {
  SU3_RAY_C1 = 0,
  SU3_RAY_C2 = 1,
  SU3_RAY_C3 = 2,
  SU3_RAY_D1 = 3,
  SU3_RAY_D3 = 4,
  SU3_RAY_D5 = 5,
  SU3_RAY_LT = 6,
  SU3_RAY_RT = 7,
  SU3_RAY_STAR = 8
} su3_ray;

typedef enum su3_group_id {
  SU3_GROUP_G = 0,   /* all linear symmetries, order 144 */
  SU3_GROUP_GG = 1,  /* general symmetries, order 12 */
  SU3_GROUP_GL = 2,  /* symmetries with a BZ lifting, order 72 */
  SU3_GROUP_GLG = 3  /* intersection, order 6 */
} su3_group_id;

typedef enum su3_fiber_mode {
  SU3_FIBER_SCAN = 0,      /* integer scan over the fiber interval */
  SU3_FIBER_EXHAUSTIVE = 1 /* independent bounded search */
} su3_fiber_mode;

SU3_API const char* su3_version(void);
SU3_API const char* su3_status_name(su3_status s);
SU3_API const char* su3_ray_name(su3_ray r);

/* ---- parsing and formatting -------------------------------------------- */

SU3_API su3_status su3_triple_parse(const char* text, int64_t t[6]);
SU3_API su3_status su3_triple_format(const int64_t t[6], char* buf, size_t cap);
SU3_API su3_status su3_gl_parse(const char* text, int64_t g[9]);
SU3_API su3_status su3_gl_format(const int64_t g[9], char* buf, size_t cap);
SU3_API su3_status su3_bz_parse(const char* text, int64_t y[3], int64_t z[6]);
SU3_API su3_status su3_bz_format(const int64_t y[3], const int64_t z[6],
                                 char* buf, size_t cap);

/* ---- lattice ------------------------------------------------------------ */

SU3_API su3_status su3_in_lattice(const int64_t t[6], int* out);
SU3_API su3_status su3_dual(const int64_t t[6], int64_t out[6]);
SU3_API su3_status su3_gl_to_su(const int64_t g[9], int64_t t[6]);
/* SU3_ERR_DOMAIN when t violates the mod-3 condition. */
SU3_API su3_status su3_su_to_gl0(const int64_t t[6], int64_t g[9]);

/* ---- forms and multiplicities ------------------------------------------ */

/* Exact values scaled by 3: f_times3[3], g_times3[6], omega_times3. */
SU3_API su3_status su3_eval_forms(const int64_t t[6], int64_t f_times3[3],
                                  int64_t g_times3[6], int64_t* omega_times3);
SU3_API su3_status su3_in_cone(const int64_t t[6], int* out);

SU3_API su3_status su3_triple_multiplicity(const int64_t t[6], int64_t* out);
SU3_API su3_status su3_tensor_multiplicity(const int64_t l[2], const int64_t m[2],
                                           const int64_t n[2], int64_t* out);
/* Numerators of the linear form (f_i - g_j) over denominator 3; 1-based i,j. */
SU3_API su3_status su3_chamber_formula(int i, int j, int64_t num[6],
                                       int64_t* den);
SU3_API su3_status su3_multiplicity_via_min(const int64_t t[6], int64_t* out);
SU3_API su3_status su3_multiplicity_det(const int64_t t[6], int i, int j,
                                        int64_t* out);
SU3_API su3_status su3_lr_coefficient(const int64_t g[9], int64_t* out);
SU3_API su3_status su3_lr_tableau_oracle(const int64_t g[9], int64_t* out);
SU3_API su3_status su3_lr_delta_involution(const int64_t g[9], int64_t out[9]);
SU3_API su3_status su3_su2_multiplicity(int64_t l, int64_t m, int64_t n,
                                        int64_t* out);
SU3_API su3_status su3_lr_symmetry_order(int64_t* out);

/* ---- BZ labellings ------------------------------------------------------ */

SU3_API su3_status su3_bz_of(const int64_t t[6], int64_t x, int64_t y[3],
                             int64_t z[6]);
SU3_API su3_status su3_bz_project(const int64_t y[3], const int64_t z[6],
                                  int64_t t[6]);
/* Fiber size (0 for non-lattice t). */
SU3_API su3_status su3_fiber_count(const int64_t t[6], su3_fiber_mode mode,
                                   int64_t* out);
/* Writes up to cap labellings as 9 int64 each (y then z), row-major;
 * *count receives the fiber size. SU3_ERR_OVERFLOW when cap is too small
 * (count is still written). */
SU3_API su3_status su3_fiber_list(const int64_t t[6], su3_fiber_mode mode,
                                  int64_t* out_yz, size_t cap, size_t* count);
SU3_API su3_status su3_fundamental_triangle(su3_ray r, int64_t y[3],
                                            int64_t z[6]);
/* Decomposition over the eight fundamental triangles. The input is the
 * labelling scaled by den >= 1; coefficients come out over the same
 * denominator. coeff is indexed by su3_ray (STAR coefficient always 0). */
SU3_API su3_status su3_bz_decompose(const int64_t y[3], const int64_t z[6],
                                    int64_t den, int64_t coeff[9]);

/* ---- chamber complex ---------------------------------------------------- */

SU3_API su3_status su3_ray_generator(su3_ray r, int64_t t[6]);
/* cond must be a ray id; t must lie in the cone. */
SU3_API su3_status su3_condition_holds(su3_ray cond, const int64_t t[6],
                                       int* out);
/* Bitmask (10-byte buffer) of the open cell containing t. */
SU3_API su3_status su3_locate(const int64_t t[6], char bitmask[10]);
SU3_API su3_status su3_cell_dim(const char* bitmask, int* out);
/* Chamber indices of a 6-dimensional cell; SU3_ERR_DOMAIN otherwise. */
SU3_API su3_status su3_cell_chamber(const char* bitmask, int* i, int* j);
SU3_API su3_status su3_chamber_cell(int i, int j, char bitmask[10]);
/* Number of cells of dimension dim (0..6), or all 294 for dim = -1. */
SU3_API su3_status su3_cell_count(int dim, int64_t* out);
/* Bitmasks of all cells of dimension dim (all cells for dim = -1), written
 * consecutively as 10-byte NUL-terminated records. */
SU3_API su3_status su3_cells_list(int dim, char* out, size_t cap, size_t* count);
SU3_API su3_status su3_face_relation(const char* bitmask_a,
                                     const char* bitmask_b, int* out);
SU3_API su3_status su3_cell_diagram(const char* bitmask, char* buf, size_t cap);
/* {"absent": [...], "dim": d, "bitmask": "..."} */
SU3_API su3_status su3_cell_json(const char* bitmask, char* buf, size_t cap);

/* ---- symmetry group ----------------------------------------------------- */

typedef struct su3_group su3_group;

SU3_API su3_status su3_group_create(su3_group** out);
SU3_API void su3_group_destroy(su3_group* g);

SU3_API su3_status su3_group_order(const su3_group* g, su3_group_id which,
                                   int64_t* out);
/* Element indices of a subgroup within the full group (0..143). */
SU3_API su3_status su3_group_members(const su3_group* g, su3_group_id which,
                                     int* out, size_t cap, size_t* count);
/* Matrices are unimodular automorphisms of the mod-3 lattice; entries lie in
 * (1/3)Z and are returned as integer numerators over *den (always 3). They
 * are integral on Z^6 exactly for the twelve general symmetries. */
SU3_API su3_status su3_symmetry_matrix(const su3_group* g, int index,
                                       int64_t num[36], int64_t* den);
/* images[r] = image ray id of ray r. */
SU3_API su3_status su3_symmetry_perm(const su3_group* g, int index,
                                     int images[9]);
/* SU3_ERR_DOMAIN when the image of t is not integral (t off the lattice). */
SU3_API su3_status su3_symmetry_apply(const su3_group* g, int index,
                                      const int64_t t[6], int64_t out[6]);
/* {"index": k, "perm": {...}, "matrix_num": [...], "matrix_den": 3,
 *  "integral": bool, "liftable": bool} */
SU3_API su3_status su3_symmetry_json(const su3_group* g, int index, char* buf,
                                     size_t cap);
SU3_API su3_status su3_symmetry_liftable(const su3_group* g, int index,
                                         int* out);
/* Lift applied to a BZ labelling; SU3_ERR_DOMAIN for non-liftable elements. */
SU3_API su3_status su3_symmetry_lift_apply(const su3_group* g, int index,
                                           const int64_t y[3], const int64_t z[6],
                                           int64_t y_out[3], int64_t z_out[6]);
SU3_API su3_status su3_act_on_cell(const su3_group* g, int index,
                                   const char* bitmask, char bitmask_out[10]);
SU3_API su3_status su3_orbit_size(const su3_group* g, su3_group_id which,
                                  const char* bitmask, int64_t* out);
/* Orbit cells as 10-byte bitmask records. */
SU3_API su3_status su3_orbit_list(const su3_group* g, su3_group_id which,
                                  const char* bitmask, char* out, size_t cap,
                                  size_t* count);

/* ---- stability ----------------------------------------------------------- */

SU3_API su3_status su3_stable_value(const int64_t t[6], const int64_t u[6],
                                    int64_t* out);
/* *found = 0 and *out untouched when the sequence has not settled by k_max. */
SU3_API su3_status su3_stabilization_index(const int64_t t[6], const int64_t u[6],
                                           int64_t k_max, int64_t* out,
                                           int* found);

/* ---- verification -------------------------------------------------------- */

#define SU3_VERIFY_FAULT_RAYS 1u /* corrupt the ray table (negative testing) */

/* Runs the verification suites with lattice-sweep bound `sweep` (0..10);
 * writes one line per suite into `report`. *pass receives 1 when every
 * suite passed. */
SU3_API su3_status su3_verify(int64_t sweep, unsigned flags, char* report,
                              size_t cap, int* pass);

#ifdef __cplusplus
}
#endif

#endif /* SU3MULT_H */
