// su3mult command-line tool. Talks to the library exclusively through the C
// API in su3mult.h.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "su3mult.h"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

[[noreturn]] void die_usage(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(kExitUsage);
}

void check(su3_status st, const std::string& what) {
  if (st != SU3_OK) die_usage(what + ": " + su3_status_name(st));
}

std::array<int64_t, 6> parse_triple_arg(const std::string& text) {
  std::array<int64_t, 6> t;
  if (su3_triple_parse(text.c_str(), t.data()) != SU3_OK)
    die_usage("cannot parse triple label '" + text + "'");
  return t;
}

std::string triple_str(const int64_t t[6]) {
  char buf[160];
  check(su3_triple_format(t, buf, sizeof buf), "format");
  return buf;
}

// Value scaled by 3, printed exactly.
std::string third_str(int64_t v3) {
  if (v3 % 3 == 0) return std::to_string(v3 / 3);
  return std::to_string(v3) + "/3";
}

json thirds_json(const int64_t* v3, int n) {
  json arr = json::array();
  for (int k = 0; k < n; ++k) {
    if (v3[k] % 3 == 0)
      arr.push_back(v3[k] / 3);
    else
      arr.push_back(third_str(v3[k]));
  }
  return arr;
}

unsigned thread_budget() {
  if (const char* env = std::getenv("SU3MULT_THREADS")) {
    long n = std::strtol(env, nullptr, 10);
    return n >= 1 ? static_cast<unsigned>(n) : 1u;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Applies fn to every line of the batch file in parallel chunks, emitting
// results in input order. fn returns the output line or nullopt on parse
// failure (reported with its 1-based line number, exit 2).
void run_batch(const std::string& path,
               const std::function<std::optional<std::string>(const std::string&)>& fn) {
  std::ifstream in(path);
  if (!in) die_usage("cannot open batch file '" + path + "'");
  const unsigned workers = thread_budget();
  const std::size_t chunk_lines = 8192;
  std::vector<std::string> lines;
  std::vector<std::size_t> numbers;
  std::string line;
  std::size_t lineno = 0;
  bool eof = false;
  while (!eof) {
    lines.clear();
    numbers.clear();
    while (lines.size() < chunk_lines) {
      if (!std::getline(in, line)) {
        eof = true;
        break;
      }
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      lines.push_back(line);
      numbers.push_back(lineno);
    }
    if (lines.empty()) continue;
    std::vector<std::optional<std::string>> results(lines.size());
    if (workers <= 1 || lines.size() < 2) {
      for (std::size_t k = 0; k < lines.size(); ++k) results[k] = fn(lines[k]);
    } else {
      std::vector<std::thread> pool;
      const std::size_t per = (lines.size() + workers - 1) / workers;
      for (unsigned w = 0; w < workers; ++w) {
        std::size_t lo = w * per, hi = std::min(lines.size(), lo + per);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
          for (std::size_t k = lo; k < hi; ++k) results[k] = fn(lines[k]);
        });
      }
      for (auto& th : pool) th.join();
    }
    for (std::size_t k = 0; k < results.size(); ++k) {
      if (!results[k]) {
        std::cerr << "error: parse failure at line " << numbers[k] << "\n";
        std::exit(kExitUsage);
      }
      std::cout << *results[k] << "\n";
    }
  }
}

struct GroupHandle {
  su3_group* g = nullptr;
  GroupHandle() { check(su3_group_create(&g), "group construction"); }
  ~GroupHandle() { su3_group_destroy(g); }
};

su3_group_id parse_group(const std::string& name) {
  if (name == "G") return SU3_GROUP_G;
  if (name == "Gg") return SU3_GROUP_GG;
  if (name == "Gl") return SU3_GROUP_GL;
  if (name == "Glg") return SU3_GROUP_GLG;
  die_usage("unknown group '" + name + "' (expected G, Gg, Gl or Glg)");
}

std::string parse_cell_arg(const std::string& arg) {
  // Accepts a 9-character bitmask or a comma-separated list of ray names.
  if (arg.size() == 9 && arg.find_first_not_of("01") == std::string::npos) {
    int dim = 0;
    if (su3_cell_dim(arg.c_str(), &dim) != SU3_OK)
      die_usage("invalid cell bitmask '" + arg + "'");
    return arg;
  }
  // Name list: build the mask through the ray enum.
  uint16_t mask = 0;
  std::size_t start = 0;
  std::string names = arg;
  if (!names.empty()) {
    for (std::size_t i = 0; i <= names.size(); ++i) {
      if (i == names.size() || names[i] == ',') {
        std::string tok = names.substr(start, i - start);
        bool found = false;
        for (int r = 0; r < 9; ++r)
          if (tok == su3_ray_name(static_cast<su3_ray>(r))) {
            mask |= (1u << r);
            found = true;
          }
        if (!found) die_usage("unknown ray name '" + tok + "'");
        start = i + 1;
      }
    }
  }
  std::string bits(9, '0');
  for (int r = 0; r < 9; ++r)
    if (mask & (1u << r)) bits[r] = '1';
  int dim = 0;
  if (su3_cell_dim(bits.c_str(), &dim) != SU3_OK)
    die_usage("'" + arg + "' is not a cell of the complex");
  return bits;
}

// --- mult ------------------------------------------------------------------

std::string explain_text(const int64_t t[6], bool as_json) {
  int64_t f3[3], g3[6], w3;
  check(su3_eval_forms(t, f3, g3, &w3), "eval_forms");
  int64_t c = 0;
  check(su3_triple_multiplicity(t, &c), "multiplicity");
  int lattice = 0, cone = 0;
  check(su3_in_lattice(t, &lattice), "in_lattice");
  check(su3_in_cone(t, &cone), "in_cone");

  std::string chamber = "-";
  std::string formula;
  char cellmask[10] = "-";
  if (!lattice) {
    formula = "c = 0 (outside the mod-3 lattice)";
  } else if (!cone) {
    formula = "c = 0 (outside the support cone)";
  } else {
    int64_t minf = f3[0], maxg = g3[0];
    for (int i = 1; i < 3; ++i) minf = std::min(minf, f3[i]);
    for (int j = 1; j < 6; ++j) maxg = std::max(maxg, g3[j]);
    int bi = 0, bj = 0;
    for (int i = 2; i >= 0; --i)
      if (f3[i] == minf) bi = i;
    for (int j = 5; j >= 0; --j)
      if (g3[j] == maxg) bj = j;
    chamber = "C(" + std::to_string(bi + 1) + "," + std::to_string(bj + 1) + ")";
    formula = "c = 1 + f" + std::to_string(bi + 1) + " - g" +
              std::to_string(bj + 1) + " on " + chamber;
    check(su3_locate(t, cellmask), "locate");
  }

  if (as_json) {
    json j;
    j["t"] = triple_str(t);
    j["c"] = c;
    j["omega"] = w3 % 3 == 0 ? json(w3 / 3) : json(third_str(w3));
    j["f"] = thirds_json(f3, 3);
    j["g"] = thirds_json(g3, 6);
    j["in_lattice"] = lattice != 0;
    j["in_cone"] = cone != 0;
    j["cell"] = std::string(cellmask);
    j["chamber"] = chamber;
    j["formula"] = formula;
    return j.dump();
  }
  std::string out;
  out += "t: " + triple_str(t) + "\n";
  out += "c: " + std::to_string(c) + "\n";
  out += "omega: " + third_str(w3) + "\n";
  out += "f: " + third_str(f3[0]) + " " + third_str(f3[1]) + " " + third_str(f3[2]) + "\n";
  out += "g:";
  for (int j = 0; j < 6; ++j) out += " " + third_str(g3[j]);
  out += "\n";
  out += "cell: " + std::string(cellmask) + "\n";
  out += "chamber: " + chamber + "\n";
  out += "formula: " + formula;
  return out;
}

int cmd_mult(const std::string& label, const std::string& batch, bool explain,
             bool fiber, bool as_json) {
  auto one = [&](const std::string& text) -> std::optional<std::string> {
    std::array<int64_t, 6> t;
    if (su3_triple_parse(text.c_str(), t.data()) != SU3_OK) return std::nullopt;
    int64_t c = 0;
    check(su3_triple_multiplicity(t.data(), &c), "multiplicity");
    if (as_json) {
      json j;
      j["t"] = triple_str(t.data());
      j["c"] = c;
      return j.dump();
    }
    return std::to_string(c);
  };

  if (!batch.empty()) {
    run_batch(batch, one);
    return kExitOk;
  }

  std::array<int64_t, 6> t = parse_triple_arg(label);
  if (explain) {
    std::cout << explain_text(t.data(), as_json) << "\n";
    return kExitOk;
  }
  int64_t c = 0;
  check(su3_triple_multiplicity(t.data(), &c), "multiplicity");
  std::vector<std::string> fiber_lines;
  if (fiber) {
    std::vector<int64_t> yz(static_cast<std::size_t>(std::max<int64_t>(c, 1)) * 9);
    std::size_t count = 0;
    su3_status st =
        su3_fiber_list(t.data(), SU3_FIBER_SCAN, yz.data(), yz.size() / 9, &count);
    check(st, "fiber");
    for (std::size_t k = 0; k < count; ++k) {
      char buf[256];
      check(su3_bz_format(&yz[9 * k], &yz[9 * k + 3], buf, sizeof buf), "format");
      fiber_lines.push_back(buf);
    }
  }
  if (as_json) {
    json j;
    j["t"] = triple_str(t.data());
    j["c"] = c;
    if (fiber) j["fiber"] = fiber_lines;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << c << "\n";
    for (const auto& line : fiber_lines) std::cout << line << "\n";
  }
  return kExitOk;
}

// --- lr ----------------------------------------------------------------------

int cmd_lr(const std::string& label, const std::string& batch, bool oracle,
           bool as_json) {
  std::atomic<bool> all_agree{true};  // written from parallel batch workers
  auto one = [&](const std::string& text) -> std::optional<std::string> {
    std::array<int64_t, 9> g;
    if (su3_gl_parse(text.c_str(), g.data()) != SU3_OK) return std::nullopt;
    int64_t lr = 0;
    check(su3_lr_coefficient(g.data(), &lr), "lr");
    int64_t oracle_val = 0;
    bool agree = true;
    if (oracle) {
      check(su3_lr_tableau_oracle(g.data(), &oracle_val), "oracle");
      agree = oracle_val == lr;
      if (!agree) all_agree = false;
    }
    if (as_json) {
      json j;
      char buf[256];
      check(su3_gl_format(g.data(), buf, sizeof buf), "format");
      j["g"] = std::string(buf);
      j["lr"] = lr;
      if (oracle) {
        j["oracle"] = oracle_val;
        j["agree"] = agree;
      }
      return j.dump();
    }
    if (oracle)
      return std::to_string(lr) + " oracle=" + std::to_string(oracle_val) +
             (agree ? " agree" : " DISAGREE");
    return std::to_string(lr);
  };

  if (!batch.empty()) {
    run_batch(batch, one);
    return all_agree ? kExitOk : kExitVerifyFail;
  }
  auto out = one(label);
  if (!out) die_usage("cannot parse GL label '" + label + "'");
  std::cout << *out << "\n";
  return all_agree ? kExitOk : kExitVerifyFail;
}

// --- remaining commands -------------------------------------------------------

int cmd_su2(int64_t l, int64_t m, int64_t n, bool as_json) {
  int64_t c = 0;
  if (su3_su2_multiplicity(l, m, n, &c) != SU3_OK)
    die_usage("su2 labels must be nonnegative");
  if (as_json) {
    json j;
    j["l"] = l;
    j["m"] = m;
    j["n"] = n;
    j["c"] = c;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << c << "\n";
  }
  return kExitOk;
}

int cmd_chamber(const std::string& label, bool as_json) {
  std::array<int64_t, 6> t = parse_triple_arg(label);
  char mask[10];
  su3_status st = su3_locate(t.data(), mask);
  if (st == SU3_ERR_DOMAIN) die_usage("label lies outside the support cone");
  check(st, "locate");
  int dim = 0;
  check(su3_cell_dim(mask, &dim), "cell_dim");
  int ci = 0, cj = 0;
  bool is_chamber = su3_cell_chamber(mask, &ci, &cj) == SU3_OK;
  char cjson[512];
  check(su3_cell_json(mask, cjson, sizeof cjson), "cell_json");
  if (as_json) {
    json j = json::parse(cjson);
    j["t"] = triple_str(t.data());
    if (is_chamber) {
      j["chamber"] = {ci, cj};
    } else {
      j["chamber"] = nullptr;
    }
    std::cout << j.dump() << "\n";
  } else {
    json j = json::parse(cjson);
    std::cout << "bitmask " << mask << "\n";
    std::cout << "dim " << dim << "\n";
    std::string absent;
    for (const auto& name : j["absent"]) {
      if (!absent.empty()) absent += ",";
      absent += name.get<std::string>();
    }
    std::cout << "absent " << absent << "\n";
    if (is_chamber)
      std::cout << "chamber C(" << ci << "," << cj << ")\n";
  }
  return kExitOk;
}

int cmd_cells(int dim, bool count_only, bool diagram, bool as_json) {
  if (count_only) {
    if (dim >= 0) {
      int64_t n = 0;
      check(su3_cell_count(dim, &n), "cell_count");
      std::cout << n << "\n";
    } else {
      std::string out;
      for (int d = 0; d <= 6; ++d) {
        int64_t n = 0;
        check(su3_cell_count(d, &n), "cell_count");
        if (d) out += " ";
        out += std::to_string(n);
      }
      std::cout << out << "\n";
    }
    return kExitOk;
  }
  int64_t total = 0;
  check(su3_cell_count(dim < 0 ? -1 : dim, &total), "cell_count");
  std::vector<char> buf(static_cast<std::size_t>(total) * 10);
  std::size_t count = 0;
  check(su3_cells_list(dim < 0 ? -1 : dim, buf.data(), buf.size(), &count),
        "cells_list");
  for (std::size_t k = 0; k < count; ++k) {
    const char* mask = buf.data() + 10 * k;
    if (as_json) {
      char cjson[512];
      check(su3_cell_json(mask, cjson, sizeof cjson), "cell_json");
      std::cout << cjson << "\n";
    } else if (diagram) {
      char dia[256];
      check(su3_cell_diagram(mask, dia, sizeof dia), "diagram");
      std::cout << dia << "\n";
    } else {
      std::cout << mask << "\n";
    }
  }
  return kExitOk;
}

int cmd_chambers(bool as_json) {
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 6; ++j) {
      char mask[10];
      check(su3_chamber_cell(i, j, mask), "chamber_cell");
      if (as_json) {
        char cjson[512];
        check(su3_cell_json(mask, cjson, sizeof cjson), "cell_json");
        json out = json::parse(cjson);
        out["i"] = i;
        out["j"] = j;
        std::cout << out.dump() << "\n";
      } else {
        std::cout << "C(" << i << "," << j << ") " << mask << "\n";
      }
    }
  return kExitOk;
}

int cmd_rays(bool as_json) {
  for (int r = 0; r < 9; ++r) {
    int64_t t[6];
    check(su3_ray_generator(static_cast<su3_ray>(r), t), "ray");
    if (as_json) {
      json j;
      j["name"] = su3_ray_name(static_cast<su3_ray>(r));
      j["t"] = triple_str(t);
      // Exterior rays carry the unique BZ triangle projecting onto them.
      int64_t y[3], z[6];
      if (su3_fundamental_triangle(static_cast<su3_ray>(r), y, z) == SU3_OK) {
        char buf[128];
        check(su3_bz_format(y, z, buf, sizeof buf), "format");
        j["triangle"] = std::string(buf);
      }
      std::cout << j.dump() << "\n";
    } else {
      std::cout << su3_ray_name(static_cast<su3_ray>(r)) << " (" << triple_str(t)
                << ")\n";
    }
  }
  return kExitOk;
}

int cmd_diagram(const std::string& cell_arg, bool as_json) {
  std::string mask = parse_cell_arg(cell_arg);
  if (as_json) {
    char cjson[512];
    check(su3_cell_json(mask.c_str(), cjson, sizeof cjson), "cell_json");
    char dia[256];
    check(su3_cell_diagram(mask.c_str(), dia, sizeof dia), "diagram");
    json j = json::parse(cjson);
    j["diagram"] = std::string(dia);
    std::cout << j.dump() << "\n";
  } else {
    char dia[256];
    check(su3_cell_diagram(mask.c_str(), dia, sizeof dia), "diagram");
    std::cout << dia;
  }
  return kExitOk;
}

int cmd_symmetries(const std::string& group, bool count_only, bool as_json) {
  su3_group_id id = parse_group(group);
  GroupHandle handle;
  int64_t order = 0;
  check(su3_group_order(handle.g, id, &order), "order");
  if (count_only) {
    std::cout << order << "\n";
    return kExitOk;
  }
  std::vector<int> members(static_cast<std::size_t>(order));
  std::size_t count = 0;
  check(su3_group_members(handle.g, id, members.data(), members.size(), &count),
        "members");
  if (!as_json) std::cout << "order " << order << "\n";
  for (std::size_t k = 0; k < count; ++k) {
    char buf[2048];
    check(su3_symmetry_json(handle.g, members[k], buf, sizeof buf), "symmetry");
    std::cout << buf << "\n";
  }
  return kExitOk;
}

int cmd_orbit(const std::string& cell_arg, const std::string& group,
              bool count_only, bool as_json) {
  std::string mask = parse_cell_arg(cell_arg);
  su3_group_id id = parse_group(group);
  GroupHandle handle;
  int64_t size = 0;
  check(su3_orbit_size(handle.g, id, mask.c_str(), &size), "orbit");
  if (count_only) {
    std::cout << size << "\n";
    return kExitOk;
  }
  std::vector<char> buf(static_cast<std::size_t>(size) * 10);
  std::size_t count = 0;
  check(su3_orbit_list(handle.g, id, mask.c_str(), buf.data(), buf.size(), &count),
        "orbit");
  if (as_json) {
    json arr = json::array();
    for (std::size_t k = 0; k < count; ++k)
      arr.push_back(std::string(buf.data() + 10 * k));
    json j;
    j["cell"] = mask;
    j["group"] = group;
    j["orbit"] = arr;
    std::cout << j.dump() << "\n";
  } else {
    for (std::size_t k = 0; k < count; ++k)
      std::cout << (buf.data() + 10 * k) << "\n";
  }
  return kExitOk;
}

int cmd_stability(const std::string& t_arg, const std::string& u_arg,
                  int64_t kmax, bool as_json) {
  std::array<int64_t, 6> t = parse_triple_arg(t_arg);
  std::array<int64_t, 6> u = parse_triple_arg(u_arg);
  int64_t value = 0;
  su3_status st = su3_stable_value(t.data(), u.data(), &value);
  if (st == SU3_ERR_DOMAIN)
    die_usage("stability requires lattice t, u with u in the cone and c(u)=1");
  check(st, "stable_value");
  int64_t index = 0;
  int found = 0;
  check(su3_stabilization_index(t.data(), u.data(), kmax, &index, &found),
        "stabilization_index");
  if (as_json) {
    json j;
    j["t"] = triple_str(t.data());
    j["u"] = triple_str(u.data());
    j["stable_value"] = value;
    if (found)
      j["index"] = index;
    else
      j["index"] = nullptr;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "stable_value " << value << "\n";
    if (found)
      std::cout << "index " << index << "\n";
    else
      std::cout << "index none (k_max " << kmax << ")\n";
  }
  return kExitOk;
}

int cmd_verify(int64_t sweep, bool inject_fault) {
  char report[16384];
  int pass = 0;
  unsigned flags = inject_fault ? SU3_VERIFY_FAULT_RAYS : 0u;
  check(su3_verify(sweep, flags, report, sizeof report, &pass), "verify");
  std::cout << report;
  return pass ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact SU(3) triple multiplicities, GL(3) Littlewood-Richardson "
               "coefficients, chamber complex and linear symmetries"};
  app.set_version_flag("--version", su3_version());
  app.require_subcommand(1);

  int exit_code = kExitOk;

  // mult
  std::string mult_label, mult_batch;
  bool mult_explain = false, mult_fiber = false, mult_json = false;
  auto* mult = app.add_subcommand("mult", "Triple multiplicity c(t)");
  mult->add_option("label", mult_label, "triple label l1,l2;m1,m2;n1,n2");
  mult->add_option("--batch", mult_batch, "file with one label per line");
  mult->add_flag("--explain", mult_explain, "show forms, cell and formula");
  mult->add_flag("--fiber", mult_fiber, "list the BZ triangles in the fiber");
  mult->add_flag("--json", mult_json, "JSON output");
  mult->callback([&] {
    if (mult_label.empty() == mult_batch.empty())
      die_usage("mult needs exactly one of LABEL or --batch FILE");
    if (!mult_batch.empty() && (mult_explain || mult_fiber))
      die_usage("--explain/--fiber apply to single labels only");
    exit_code = cmd_mult(mult_label, mult_batch, mult_explain, mult_fiber, mult_json);
  });

  // lr
  std::string lr_label, lr_batch;
  bool lr_oracle = false, lr_json = false;
  auto* lr = app.add_subcommand("lr", "GL(3) Littlewood-Richardson coefficient");
  lr->add_option("label", lr_label, "GL label l1,l2,l3|m1,m2,m3|n1,n2,n3");
  lr->add_option("--batch", lr_batch, "file with one label per line");
  lr->add_flag("--oracle", lr_oracle, "cross-check with the tableau oracle");
  lr->add_flag("--json", lr_json, "JSON output");
  lr->callback([&] {
    if (lr_label.empty() == lr_batch.empty())
      die_usage("lr needs exactly one of LABEL or --batch FILE");
    exit_code = cmd_lr(lr_label, lr_batch, lr_oracle, lr_json);
  });

  // su2
  int64_t su2_l = 0, su2_m = 0, su2_n = 0;
  bool su2_json = false;
  auto* su2 = app.add_subcommand("su2", "SU(2) triple multiplicity (0 or 1)");
  su2->add_option("l", su2_l)->required();
  su2->add_option("m", su2_m)->required();
  su2->add_option("n", su2_n)->required();
  su2->add_flag("--json", su2_json, "JSON output");
  su2->callback([&] { exit_code = cmd_su2(su2_l, su2_m, su2_n, su2_json); });

  // chamber
  std::string chamber_label;
  bool chamber_json = false;
  auto* chamber = app.add_subcommand("chamber", "Cell of the chamber complex containing t");
  chamber->add_option("label", chamber_label)->required();
  chamber->add_flag("--json", chamber_json, "JSON output");
  chamber->callback([&] { exit_code = cmd_chamber(chamber_label, chamber_json); });

  // cells
  int cells_dim = -1;
  bool cells_count = false, cells_diagram = false, cells_json = false;
  auto* cellsc = app.add_subcommand("cells", "List cells of the chamber complex");
  cellsc->add_option("--dim", cells_dim, "restrict to one dimension (0..6)")
      ->check(CLI::Range(0, 6));
  cellsc->add_flag("--count", cells_count, "print counts only");
  cellsc->add_flag("--diagram", cells_diagram, "print diagrams");
  cellsc->add_flag("--json", cells_json, "JSON output");
  cellsc->callback([&] {
    exit_code = cmd_cells(cells_dim, cells_count, cells_diagram, cells_json);
  });

  // chambers
  bool chambers_json = false;
  auto* chambersc = app.add_subcommand("chambers", "List the 18 chambers");
  chambersc->add_flag("--json", chambers_json, "JSON output");
  chambersc->callback([&] { exit_code = cmd_chambers(chambers_json); });

  // rays
  bool rays_json = false;
  auto* rays = app.add_subcommand("rays", "List the nine ray generators");
  rays->add_flag("--json", rays_json, "JSON output");
  rays->callback([&] { exit_code = cmd_rays(rays_json); });

  // diagram
  std::string diagram_cell;
  bool diagram_json = false;
  auto* diagram = app.add_subcommand("diagram", "Render a cell diagram");
  diagram->add_option("--cell", diagram_cell, "bitmask or ray-name list")->required();
  diagram->add_flag("--json", diagram_json, "JSON output");
  diagram->callback([&] { exit_code = cmd_diagram(diagram_cell, diagram_json); });

  // symmetries
  std::string sym_group = "G";
  bool sym_count = false, sym_json = false;
  auto* sym = app.add_subcommand("symmetries", "Linear symmetry groups");
  sym->add_option("--group", sym_group, "G, Gg, Gl or Glg")->required();
  sym->add_flag("--count", sym_count, "print the order only");
  sym->add_flag("--json", sym_json, "JSON output");
  sym->callback([&] { exit_code = cmd_symmetries(sym_group, sym_count, sym_json); });

  // orbit
  std::string orbit_cell, orbit_group = "G";
  bool orbit_count = false, orbit_json = false;
  auto* orbit = app.add_subcommand("orbit", "Orbit of a cell under a symmetry group");
  orbit->add_option("--cell", orbit_cell, "bitmask or ray-name list")->required();
  orbit->add_option("--group", orbit_group, "G, Gg, Gl or Glg")->required();
  orbit->add_flag("--count", orbit_count, "print the orbit size only");
  orbit->add_flag("--json", orbit_json, "JSON output");
  orbit->callback([&] {
    exit_code = cmd_orbit(orbit_cell, orbit_group, orbit_count, orbit_json);
  });

  // stability
  std::string stab_t, stab_u;
  int64_t stab_kmax = 24;
  bool stab_json = false;
  auto* stab = app.add_subcommand("stability", "Stable value of c(t + k u)");
  stab->add_option("t", stab_t)->required();
  stab->add_option("u", stab_u)->required();
  stab->add_option("--kmax", stab_kmax, "search bound for the index");
  stab->add_flag("--json", stab_json, "JSON output");
  stab->callback([&] { exit_code = cmd_stability(stab_t, stab_u, stab_kmax, stab_json); });

  // verify
  int64_t verify_sweep = 6;
  bool verify_fault = false;
  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--sweep", verify_sweep, "lattice sweep coordinate bound")
      ->check(CLI::Range(static_cast<int64_t>(0), static_cast<int64_t>(8)));
  verify
      ->add_flag("--inject-ray-fault", verify_fault,
                 "verify against a corrupted ray table (negative testing)")
      ->group("");  // hidden
  verify->callback([&] { exit_code = cmd_verify(verify_sweep, verify_fault); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  return exit_code;
}
