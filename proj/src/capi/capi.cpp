// extern "C" boundary over the core library: exceptions become status codes,
// results travel through caller buffers.

#include "su3mult.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include <json.hpp>

#include "core/bz.hpp"
#include "core/cells.hpp"
#include "core/forms.hpp"
#include "core/lr.hpp"
#include "core/multiplicity.hpp"
#include "core/rays.hpp"
#include "core/stability.hpp"
#include "core/symmetry.hpp"
#include "core/types.hpp"
#include "core/verify.hpp"

using json = nlohmann::ordered_json;

struct su3_group {
  su3::SymmetryGroup impl;
};

namespace {

template <typename F>
su3_status guarded(F&& fn) {
  try {
    return fn();
  } catch (const std::domain_error&) {
    return SU3_ERR_DOMAIN;
  } catch (const std::invalid_argument&) {
    return SU3_ERR_INVALID;
  } catch (const std::length_error&) {
    return SU3_ERR_OVERFLOW;
  } catch (const std::bad_alloc&) {
    return SU3_ERR_INTERNAL;
  } catch (const std::exception&) {
    return SU3_ERR_INTERNAL;
  }
}

su3_status write_str(const std::string& s, char* buf, size_t cap) {
  if (!buf) return SU3_ERR_INVALID;
  if (s.size() + 1 > cap) return SU3_ERR_BUFFER;
  std::memcpy(buf, s.data(), s.size() + 1);
  return SU3_OK;
}

su3::TripleLabel triple_of(const int64_t t[6]) {
  su3::Vec6 v;
  for (int k = 0; k < 6; ++k) v[k] = t[k];
  return su3::TripleLabel{v};
}

void triple_out(const su3::TripleLabel& t, int64_t out[6]) {
  for (int k = 0; k < 6; ++k) out[k] = t.v[k];
}

su3::GLTriple gl_of(const int64_t g[9]) {
  su3::GLTriple out;
  for (int k = 0; k < 3; ++k) {
    out.lambda[k] = g[k];
    out.mu[k] = g[3 + k];
    out.nu[k] = g[6 + k];
  }
  return out;
}

void gl_out(const su3::GLTriple& g, int64_t out[9]) {
  for (int k = 0; k < 3; ++k) {
    out[k] = g.lambda[k];
    out[3 + k] = g.mu[k];
    out[6 + k] = g.nu[k];
  }
}

su3::BZLabelling bz_of_arrays(const int64_t y[3], const int64_t z[6]) {
  su3::BZLabelling b;
  for (int i = 0; i < 3; ++i) b.y[i] = y[i];
  for (int j = 0; j < 6; ++j) b.z[j] = z[j];
  return b;
}

bool valid_ray(int r) { return r >= 0 && r < su3::kNumRays; }

su3_status cell_of(const char* bitmask, su3::Cell* out) {
  if (!bitmask) return SU3_ERR_INVALID;
  auto c = su3::Cell::from_bitmask(bitmask);
  if (!c) return SU3_ERR_INVALID;
  *out = *c;
  return SU3_OK;
}

su3::Group group_of(su3_group_id id) {
  switch (id) {
    case SU3_GROUP_G: return su3::Group::kG;
    case SU3_GROUP_GG: return su3::Group::kGg;
    case SU3_GROUP_GL: return su3::Group::kGl;
    case SU3_GROUP_GLG: return su3::Group::kGlg;
  }
  throw std::invalid_argument("bad group id");
}

json cell_to_json(const su3::Cell& c) {
  json j;
  j["absent"] = c.absent_names();
  j["dim"] = c.dim();
  j["bitmask"] = c.bitmask();
  return j;
}

}  // namespace

extern "C" {

const char* su3_version(void) { return "1.0.0"; }

const char* su3_status_name(su3_status s) {
  switch (s) {
    case SU3_OK: return "ok";
    case SU3_ERR_PARSE: return "parse error";
    case SU3_ERR_DOMAIN: return "domain error";
    case SU3_ERR_INVALID: return "invalid argument";
    case SU3_ERR_BUFFER: return "buffer too small";
    case SU3_ERR_OVERFLOW: return "capacity exceeded";
    case SU3_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* su3_ray_name(su3_ray r) {
  return valid_ray(r) ? su3::kRayNames[r] : "?";
}

su3_status su3_triple_parse(const char* text, int64_t t[6]) {
  if (!text || !t) return SU3_ERR_INVALID;
  auto parsed = su3::parse_triple(text);
  if (!parsed) return SU3_ERR_PARSE;
  triple_out(*parsed, t);
  return SU3_OK;
}

su3_status su3_triple_format(const int64_t t[6], char* buf, size_t cap) {
  if (!t) return SU3_ERR_INVALID;
  return write_str(su3::format_triple(triple_of(t)), buf, cap);
}

su3_status su3_gl_parse(const char* text, int64_t g[9]) {
  if (!text || !g) return SU3_ERR_INVALID;
  auto parsed = su3::parse_gl(text);
  if (!parsed) return SU3_ERR_PARSE;
  gl_out(*parsed, g);
  return SU3_OK;
}

su3_status su3_gl_format(const int64_t g[9], char* buf, size_t cap) {
  if (!g) return SU3_ERR_INVALID;
  return write_str(su3::format_gl(gl_of(g)), buf, cap);
}

su3_status su3_bz_parse(const char* text, int64_t y[3], int64_t z[6]) {
  if (!text || !y || !z) return SU3_ERR_INVALID;
  auto parsed = su3::parse_bz(text);
  if (!parsed) return SU3_ERR_PARSE;
  for (int i = 0; i < 3; ++i) y[i] = parsed->y[i];
  for (int j = 0; j < 6; ++j) z[j] = parsed->z[j];
  return SU3_OK;
}

su3_status su3_bz_format(const int64_t y[3], const int64_t z[6], char* buf,
                         size_t cap) {
  if (!y || !z) return SU3_ERR_INVALID;
  return write_str(su3::format_bz(bz_of_arrays(y, z)), buf, cap);
}

su3_status su3_in_lattice(const int64_t t[6], int* out) {
  if (!t || !out) return SU3_ERR_INVALID;
  *out = su3::in_lattice(triple_of(t)) ? 1 : 0;
  return SU3_OK;
}

su3_status su3_dual(const int64_t t[6], int64_t out[6]) {
  if (!t || !out) return SU3_ERR_INVALID;
  triple_out(su3::dual(triple_of(t)), out);
  return SU3_OK;
}

su3_status su3_gl_to_su(const int64_t g[9], int64_t t[6]) {
  if (!g || !t) return SU3_ERR_INVALID;
  return guarded([&] {
    su3::GLTriple gl = gl_of(g);
    if (!gl.weakly_decreasing()) return SU3_ERR_DOMAIN;
    triple_out(su3::gl_to_su(gl), t);
    return SU3_OK;
  });
}

su3_status su3_su_to_gl0(const int64_t t[6], int64_t g[9]) {
  if (!t || !g) return SU3_ERR_INVALID;
  return guarded([&] {
    gl_out(su3::su_to_gl0(triple_of(t)), g);
    return SU3_OK;
  });
}

su3_status su3_eval_forms(const int64_t t[6], int64_t f_times3[3],
                          int64_t g_times3[6], int64_t* omega_times3) {
  if (!t || !f_times3 || !g_times3 || !omega_times3) return SU3_ERR_INVALID;
  su3::Forms fo = su3::eval_forms(triple_of(t));
  for (int i = 0; i < 3; ++i) f_times3[i] = fo.f3[i];
  for (int j = 0; j < 6; ++j) g_times3[j] = fo.g3[j];
  *omega_times3 = fo.w3;
  return SU3_OK;
}

su3_status su3_in_cone(const int64_t t[6], int* out) {
  if (!t || !out) return SU3_ERR_INVALID;
  *out = su3::in_cone(triple_of(t)) ? 1 : 0;
  return SU3_OK;
}

su3_status su3_triple_multiplicity(const int64_t t[6], int64_t* out) {
  if (!t || !out) return SU3_ERR_INVALID;
  *out = su3::triple_multiplicity(triple_of(t));
  return SU3_OK;
}

su3_status su3_tensor_multiplicity(const int64_t l[2], const int64_t m[2],
                                   const int64_t n[2], int64_t* out) {
  if (!l || !m || !n || !out) return SU3_ERR_INVALID;
  *out = su3::tensor_multiplicity({l[0], l[1]}, {m[0], m[1]}, {n[0], n[1]});
  return SU3_OK;
}

su3_status su3_chamber_formula(int i, int j, int64_t num[6], int64_t* den) {
  if (!num || !den) return SU3_ERR_INVALID;
  return guarded([&] {
    su3::LinearForm f = su3::chamber_formula(i, j);
    for (int k = 0; k < 6; ++k) num[k] = f.num[k];
    *den = 3;
    return SU3_OK;
  });
}

su3_status su3_multiplicity_via_min(const int64_t t[6], int64_t* out) {
  if (!t || !out) return SU3_ERR_INVALID;
  return guarded([&] {
    *out = su3::multiplicity_via_min(triple_of(t));
    return SU3_OK;
  });
}

su3_status su3_multiplicity_det(const int64_t t[6], int i, int j, int64_t* out) {
  if (!t || !out) return SU3_ERR_INVALID;
  return guarded([&] {
    *out = su3::multiplicity_det(triple_of(t), i, j);
    return SU3_OK;
  });
}

su3_status su3_lr_coefficient(const int64_t g[9], int64_t* out) {
  if (!g || !out) return SU3_ERR_INVALID;
  return guarded([&] {
    *out = su3::lr_coefficient(gl_of(g));
    return SU3_OK;
  });
}

su3_status su3_lr_tableau_oracle(const int64_t g[9], int64_t* out) {
  if (!g || !out) return SU3_ERR_INVALID;
  return guarded([&] {
    *out = su3::lr_oracle_normalized(gl_of(g));
    return SU3_OK;
  });
}

su3_status su3_lr_delta_involution(const int64_t g[9], int64_t out[9]) {
  if (!g || !out) return SU3_ERR_INVALID;
  return guarded([&] {
    gl_out(su3::delta_involution(gl_of(g)), out);
    return SU3_OK;
  });
}

su3_status su3_su2_multiplicity(int64_t l, int64_t m, int64_t n, int64_t* out) {
  if (!out) return SU3_ERR_INVALID;
  return guarded([&] {
    *out = su3::su2_multiplicity(l, m, n);
    return SU3_OK;
  });
}

su3_status su3_lr_symmetry_order(int64_t* out) {
  if (!out) return SU3_ERR_INVALID;
  *out = su3::kLRSymmetryOrder;
  return SU3_OK;
}

su3_status su3_bz_of(const int64_t t[6], int64_t x, int64_t y[3], int64_t z[6]) {
  if (!t || !y || !z) return SU3_ERR_INVALID;
  return guarded([&] {
    su3::BZLabelling b = su3::bz_of(triple_of(t), x);
    for (int i = 0; i < 3; ++i) y[i] = b.y[i];
    for (int j = 0; j < 6; ++j) z[j] = b.z[j];
    return SU3_OK;
  });
}

su3_status su3_bz_project(const int64_t y[3], const int64_t z[6], int64_t t[6]) {
  if (!y || !z || !t) return SU3_ERR_INVALID;
  triple_out(su3::project(bz_of_arrays(y, z)), t);
  return SU3_OK;
}

su3_status su3_fiber_count(const int64_t t[6], su3_fiber_mode mode,
                           int64_t* out) {
  if (!t || !out) return SU3_ERR_INVALID;
  return guarded([&] {
    if (mode == SU3_FIBER_EXHAUSTIVE)
      *out = su3::fiber_count_exhaustive(triple_of(t));
    else
      *out = su3::triple_multiplicity(triple_of(t));
    return SU3_OK;
  });
}

su3_status su3_fiber_list(const int64_t t[6], su3_fiber_mode mode,
                          int64_t* out_yz, size_t cap, size_t* count) {
  if (!t || !out_yz || !count) return SU3_ERR_INVALID;
  return guarded([&] {
    auto mode_cpp = mode == SU3_FIBER_EXHAUSTIVE ? su3::FiberMode::kExhaustive
                                                 : su3::FiberMode::kScan;
    auto fiber = su3::enumerate_fiber(triple_of(t), mode_cpp);
    *count = fiber.size();
    if (fiber.size() > cap) return SU3_ERR_OVERFLOW;
    size_t pos = 0;
    for (const su3::BZLabelling& b : fiber) {
      for (int i = 0; i < 3; ++i) out_yz[pos++] = b.y[i];
      for (int j = 0; j < 6; ++j) out_yz[pos++] = b.z[j];
    }
    return SU3_OK;
  });
}

su3_status su3_fundamental_triangle(su3_ray r, int64_t y[3], int64_t z[6]) {
  if (!y || !z || !valid_ray(r)) return SU3_ERR_INVALID;
  return guarded([&] {
    su3::BZLabelling b = su3::fundamental_triangle(static_cast<su3::Ray>(r));
    for (int i = 0; i < 3; ++i) y[i] = b.y[i];
    for (int j = 0; j < 6; ++j) z[j] = b.z[j];
    return SU3_OK;
  });
}

su3_status su3_bz_decompose(const int64_t y[3], const int64_t z[6], int64_t den,
                            int64_t coeff[9]) {
  if (!y || !z || !coeff || den < 1) return SU3_ERR_INVALID;
  return guarded([&] {
    auto c = su3::decompose(bz_of_arrays(y, z));
    for (int r = 0; r < su3::kNumRays; ++r) coeff[r] = c[r];
    return SU3_OK;
  });
}

su3_status su3_ray_generator(su3_ray r, int64_t t[6]) {
  if (!t || !valid_ray(r)) return SU3_ERR_INVALID;
  triple_out(su3::ray_generator(static_cast<su3::Ray>(r)), t);
  return SU3_OK;
}

su3_status su3_condition_holds(su3_ray cond, const int64_t t[6], int* out) {
  if (!t || !out || !valid_ray(cond)) return SU3_ERR_INVALID;
  return guarded([&] {
    *out = su3::holds(static_cast<su3::Ray>(cond), triple_of(t)) ? 1 : 0;
    return SU3_OK;
  });
}

su3_status su3_locate(const int64_t t[6], char bitmask[10]) {
  if (!t || !bitmask) return SU3_ERR_INVALID;
  return guarded([&] {
    return write_str(su3::locate(triple_of(t)).bitmask(), bitmask, 10);
  });
}

su3_status su3_cell_dim(const char* bitmask, int* out) {
  if (!out) return SU3_ERR_INVALID;
  su3::Cell c;
  if (su3_status st = cell_of(bitmask, &c); st != SU3_OK) return st;
  *out = c.dim();
  return SU3_OK;
}

su3_status su3_cell_chamber(const char* bitmask, int* i, int* j) {
  if (!i || !j) return SU3_ERR_INVALID;
  su3::Cell c;
  if (su3_status st = cell_of(bitmask, &c); st != SU3_OK) return st;
  auto ch = su3::chamber_of(c);
  if (!ch) return SU3_ERR_DOMAIN;
  *i = ch->i;
  *j = ch->j;
  return SU3_OK;
}

su3_status su3_chamber_cell(int i, int j, char bitmask[10]) {
  if (!bitmask) return SU3_ERR_INVALID;
  if (i < 1 || i > 3 || j < 1 || j > 6) return SU3_ERR_INVALID;
  const su3::Chamber& ch = su3::chambers()[(i - 1) * 6 + (j - 1)];
  return write_str(ch.cell.bitmask(), bitmask, 10);
}

su3_status su3_cell_count(int dim, int64_t* out) {
  if (!out || dim < -1 || dim > 6) return SU3_ERR_INVALID;
  if (dim == -1) {
    *out = static_cast<int64_t>(su3::cells().size());
  } else {
    *out = su3::cell_counts()[dim];
  }
  return SU3_OK;
}

su3_status su3_cells_list(int dim, char* out, size_t cap, size_t* count) {
  if (!out || !count || dim < -1 || dim > 6) return SU3_ERR_INVALID;
  size_t n = 0;
  for (const su3::Cell& c : su3::cells())
    if (dim == -1 || c.dim() == dim) ++n;
  *count = n;
  if (n * 10 > cap) return SU3_ERR_OVERFLOW;
  size_t pos = 0;
  for (const su3::Cell& c : su3::cells()) {
    if (dim != -1 && c.dim() != dim) continue;
    std::string b = c.bitmask();
    std::memcpy(out + pos, b.c_str(), 10);
    pos += 10;
  }
  return SU3_OK;
}

su3_status su3_face_relation(const char* bitmask_a, const char* bitmask_b,
                             int* out) {
  if (!out) return SU3_ERR_INVALID;
  su3::Cell a, b;
  if (su3_status st = cell_of(bitmask_a, &a); st != SU3_OK) return st;
  if (su3_status st = cell_of(bitmask_b, &b); st != SU3_OK) return st;
  *out = su3::face_relation(a, b) ? 1 : 0;
  return SU3_OK;
}

su3_status su3_cell_diagram(const char* bitmask, char* buf, size_t cap) {
  su3::Cell c;
  if (su3_status st = cell_of(bitmask, &c); st != SU3_OK) return st;
  return write_str(su3::render_diagram(c), buf, cap);
}

su3_status su3_cell_json(const char* bitmask, char* buf, size_t cap) {
  su3::Cell c;
  if (su3_status st = cell_of(bitmask, &c); st != SU3_OK) return st;
  return write_str(cell_to_json(c).dump(), buf, cap);
}

su3_status su3_group_create(su3_group** out) {
  if (!out) return SU3_ERR_INVALID;
  return guarded([&] {
    *out = new su3_group{};
    return SU3_OK;
  });
}

void su3_group_destroy(su3_group* g) { delete g; }

su3_status su3_group_order(const su3_group* g, su3_group_id which,
                           int64_t* out) {
  if (!g || !out) return SU3_ERR_INVALID;
  return guarded([&] {
    *out = static_cast<int64_t>(g->impl.order(group_of(which)));
    return SU3_OK;
  });
}

su3_status su3_group_members(const su3_group* g, su3_group_id which, int* out,
                             size_t cap, size_t* count) {
  if (!g || !out || !count) return SU3_ERR_INVALID;
  return guarded([&] {
    const auto& members = g->impl.members(group_of(which));
    *count = members.size();
    if (members.size() > cap) return SU3_ERR_OVERFLOW;
    for (size_t k = 0; k < members.size(); ++k) out[k] = members[k];
    return SU3_OK;
  });
}

su3_status su3_symmetry_matrix(const su3_group* g, int index, int64_t num[36],
                               int64_t* den) {
  if (!g || !num || !den || index < 0 || index >= 144) return SU3_ERR_INVALID;
  const su3::Mat6& mat = g->impl.element(index).mat;
  for (int k = 0; k < 36; ++k) num[k] = mat.num[k];
  *den = 3;
  return SU3_OK;
}

su3_status su3_symmetry_perm(const su3_group* g, int index, int images[9]) {
  if (!g || !images || index < 0 || index >= 144) return SU3_ERR_INVALID;
  const su3::RayPermutation& p = g->impl.element(index).perm;
  for (int r = 0; r < su3::kNumRays; ++r) images[r] = p.img[r];
  return SU3_OK;
}

su3_status su3_symmetry_apply(const su3_group* g, int index, const int64_t t[6],
                              int64_t out[6]) {
  if (!g || !t || !out || index < 0 || index >= 144) return SU3_ERR_INVALID;
  return guarded([&] {
    triple_out(g->impl.element(index).mat.apply(triple_of(t)), out);
    return SU3_OK;
  });
}

su3_status su3_symmetry_json(const su3_group* g, int index, char* buf,
                             size_t cap) {
  if (!g || index < 0 || index >= 144) return SU3_ERR_INVALID;
  const su3::Symmetry& s = g->impl.element(index);
  json j;
  j["index"] = s.index;
  json perm;
  for (int r = 0; r < su3::kNumRays; ++r)
    perm[su3::kRayNames[r]] = su3::kRayNames[s.perm.img[r]];
  j["perm"] = perm;
  j["matrix_num"] = s.mat.num;
  j["matrix_den"] = 3;
  j["integral"] = s.mat.integral();
  j["liftable"] = g->impl.liftable(index);
  return write_str(j.dump(), buf, cap);
}

su3_status su3_symmetry_liftable(const su3_group* g, int index, int* out) {
  if (!g || !out || index < 0 || index >= 144) return SU3_ERR_INVALID;
  *out = g->impl.liftable(index) ? 1 : 0;
  return SU3_OK;
}

su3_status su3_symmetry_lift_apply(const su3_group* g, int index,
                                   const int64_t y[3], const int64_t z[6],
                                   int64_t y_out[3], int64_t z_out[6]) {
  if (!g || !y || !z || !y_out || !z_out || index < 0 || index >= 144)
    return SU3_ERR_INVALID;
  return guarded([&] {
    auto lift = g->impl.lift(index);
    if (!lift) return SU3_ERR_DOMAIN;
    su3::BZLabelling b = lift->apply(bz_of_arrays(y, z));
    for (int i = 0; i < 3; ++i) y_out[i] = b.y[i];
    for (int j = 0; j < 6; ++j) z_out[j] = b.z[j];
    return SU3_OK;
  });
}

su3_status su3_act_on_cell(const su3_group* g, int index, const char* bitmask,
                           char bitmask_out[10]) {
  if (!g || !bitmask_out || index < 0 || index >= 144) return SU3_ERR_INVALID;
  su3::Cell c;
  if (su3_status st = cell_of(bitmask, &c); st != SU3_OK) return st;
  return write_str(g->impl.act_on_cell(index, c).bitmask(), bitmask_out, 10);
}

su3_status su3_orbit_size(const su3_group* g, su3_group_id which,
                          const char* bitmask, int64_t* out) {
  if (!g || !out) return SU3_ERR_INVALID;
  su3::Cell c;
  if (su3_status st = cell_of(bitmask, &c); st != SU3_OK) return st;
  return guarded([&] {
    *out = static_cast<int64_t>(g->impl.orbit(group_of(which), c).size());
    return SU3_OK;
  });
}

su3_status su3_orbit_list(const su3_group* g, su3_group_id which,
                          const char* bitmask, char* out, size_t cap,
                          size_t* count) {
  if (!g || !out || !count) return SU3_ERR_INVALID;
  su3::Cell c;
  if (su3_status st = cell_of(bitmask, &c); st != SU3_OK) return st;
  return guarded([&] {
    auto orbit = g->impl.orbit(group_of(which), c);
    *count = orbit.size();
    if (orbit.size() * 10 > cap) return SU3_ERR_OVERFLOW;
    size_t pos = 0;
    for (const su3::Cell& oc : orbit) {
      std::string b = oc.bitmask();
      std::memcpy(out + pos, b.c_str(), 10);
      pos += 10;
    }
    return SU3_OK;
  });
}

su3_status su3_stable_value(const int64_t t[6], const int64_t u[6],
                            int64_t* out) {
  if (!t || !u || !out) return SU3_ERR_INVALID;
  return guarded([&] {
    *out = su3::stable_value(triple_of(t), triple_of(u));
    return SU3_OK;
  });
}

su3_status su3_stabilization_index(const int64_t t[6], const int64_t u[6],
                                   int64_t k_max, int64_t* out, int* found) {
  if (!t || !u || !out || !found) return SU3_ERR_INVALID;
  return guarded([&] {
    auto idx = su3::stabilization_index(triple_of(t), triple_of(u), k_max);
    *found = idx.has_value() ? 1 : 0;
    if (idx) *out = *idx;
    return SU3_OK;
  });
}

su3_status su3_verify(int64_t sweep, unsigned flags, char* report, size_t cap,
                      int* pass) {
  if (!report || !pass || sweep < 0 || sweep > 10) return SU3_ERR_INVALID;
  return guarded([&] {
    su3::VerifyOptions opts;
    opts.sweep = sweep;
    opts.corrupt_rays = (flags & SU3_VERIFY_FAULT_RAYS) != 0;
    auto results = su3::run_verify(opts);
    std::string text;
    *pass = 1;
    for (const auto& r : results) {
      text += r.pass ? "PASS " : "FAIL ";
      text += r.name;
      text += ": ";
      text += r.detail;
      text += '\n';
      if (!r.pass) *pass = 0;
    }
    return write_str(text, report, cap);
  });
}

}  // extern "C"
