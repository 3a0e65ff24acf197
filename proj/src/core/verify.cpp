#include "core/verify.hpp"

#include <atomic>
#include <mutex>
#include <sstream>

#include "core/bz.hpp"
#include "core/cells.hpp"
#include "core/forms.hpp"
#include "core/multiplicity.hpp"
#include "core/parallel.hpp"
#include "core/rays.hpp"
#include "core/symmetry.hpp"

namespace su3 {

std::vector<TripleLabel> lattice_sweep(i64 bound) {
  std::vector<TripleLabel> pts;
  Vec6 v{};
  for (v[0] = 0; v[0] <= bound; ++v[0])
    for (v[1] = 0; v[1] <= bound; ++v[1])
      for (v[2] = 0; v[2] <= bound; ++v[2])
        for (v[3] = 0; v[3] <= bound; ++v[3])
          for (v[4] = 0; v[4] <= bound; ++v[4])
            for (v[5] = 0; v[5] <= bound; ++v[5]) {
              TripleLabel t{v};
              if (in_lattice(t)) pts.push_back(t);
            }
  return pts;
}

namespace {

SuiteResult oracle_suite(const std::vector<TripleLabel>& sweep) {
  SuiteResult res{"oracle-equivalence", true, ""};
  std::mutex mu;
  parallel_chunks(sweep.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      const TripleLabel& t = sweep[k];
      i64 closed = triple_multiplicity(t);
      i64 scan = static_cast<i64>(enumerate_fiber(t, FiberMode::kScan).size());
      i64 exhaustive = fiber_count_exhaustive(t);
      if (closed != scan || closed != exhaustive) {
        std::lock_guard<std::mutex> lock(mu);
        if (res.pass) {
          res.pass = false;
          std::ostringstream os;
          os << "counterexample t=" << format_triple(t) << " closed=" << closed
             << " scan=" << scan << " exhaustive=" << exhaustive;
          res.detail = os.str();
        }
      }
    }
  });
  if (res.pass) {
    std::ostringstream os;
    os << sweep.size() << " lattice points, closed form = x-scan = exhaustive";
    res.detail = os.str();
  }
  return res;
}

SuiteResult symmetry_suite(const std::vector<TripleLabel>& sweep) {
  SuiteResult res{"symmetry-invariance", true, ""};
  const SymmetryGroup& group = symmetry_group();
  std::mutex mu;
  parallel_chunks(sweep.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      const TripleLabel& t = sweep[k];
      i64 c = triple_multiplicity(t);
      for (const Symmetry& s : group.all()) {
        if (triple_multiplicity(s.mat.apply(t)) != c) {
          std::lock_guard<std::mutex> lock(mu);
          if (res.pass) {
            res.pass = false;
            std::ostringstream os;
            os << "counterexample t=" << format_triple(t) << " symmetry #"
               << s.index;
            res.detail = os.str();
          }
          break;
        }
      }
    }
  });
  if (res.pass) {
    std::ostringstream os;
    os << "c(M t) = c(t) for all 144 matrices on " << sweep.size() << " points";
    res.detail = os.str();
  }
  return res;
}

SuiteResult chamber_suite(bool corrupt_rays) {
  SuiteResult res{"chamber-complex", true, ""};
  auto fail = [&](const std::string& msg) {
    if (res.pass) {
      res.pass = false;
      res.detail = msg;
    }
  };

  std::array<Vec6, kNumRays> rays = kRayVectors;
  if (corrupt_rays) rays[kC1][0] += 1;  // fault injection

  // f-vector and total count.
  static const std::array<int, 7> expected = {1, 9, 35, 75, 93, 63, 18};
  std::array<int, 7> counts = cell_counts();
  if (counts != expected) {
    std::ostringstream os;
    os << "f-vector mismatch:";
    for (int c : counts) os << ' ' << c;
    fail(os.str());
  }
  if (cells().size() != 294) fail("cell total != 294");

  // Each ray generator fails exactly its own condition.
  for (int r = 0; r < kNumRays && res.pass; ++r) {
    TripleLabel t{rays[r]};
    std::ostringstream os;
    os << "ray " << kRayNames[r] << " at " << format_triple(t);
    try {
      Cell c = locate(t);
      if (c.mask != (1u << r)) {
        os << " locates to absent={";
        for (auto& n : c.absent_names()) os << n << ' ';
        os << "} instead of {" << kRayNames[r] << "}";
        fail(os.str());
      }
    } catch (const std::exception& e) {
      os << ": " << e.what();
      fail(os.str());
    }
  }

  // Ray relations C1+C2+C3 = D1+D3+D5 = LT+RT = STAR.
  auto sum3 = [&](int a, int b, int c) {
    Vec6 s{};
    for (int k = 0; k < 6; ++k) s[k] = rays[a][k] + rays[b][k] + rays[c][k];
    return s;
  };
  Vec6 lt_rt{};
  for (int k = 0; k < 6; ++k) lt_rt[k] = rays[kLT][k] + rays[kRT][k];
  if (sum3(kC1, kC2, kC3) != rays[kStar] || sum3(kD1, kD3, kD5) != rays[kStar] ||
      lt_rt != rays[kStar])
    fail("ray generator relations violated");

  // Chambers: simplicial with independent rays, basis determinant +-3.
  for (const Chamber& ch : chambers()) {
    if (!res.pass) break;
    std::array<Vec6, 6> cols{};
    int k = 0;
    for (int r = 0; r < kNumRays; ++r)
      if (ch.cell.contains_ray(static_cast<Ray>(r))) cols[k++] = rays[r];
    if (k != 6) {
      fail("chamber without six rays");
      break;
    }
    i64 d = det6(cols);
    if (d != 3 && d != -3) {
      std::ostringstream os;
      os << "chamber C(" << ch.i << "," << ch.j << ") basis determinant " << d;
      fail(os.str());
    }
  }

  // Interior sampling pins the (i,j) decode: the ray-sum of each chamber's
  // cell lies in that chamber and locates to it.
  for (const Chamber& ch : chambers()) {
    if (!res.pass) break;
    Vec6 sum{};
    for (int r = 0; r < kNumRays; ++r)
      if (ch.cell.contains_ray(static_cast<Ray>(r)))
        for (int k = 0; k < 6; ++k) sum[k] += rays[r][k];
    TripleLabel t{sum};
    if (!in_cone(t) || !(locate(t) == ch.cell)) {
      std::ostringstream os;
      os << "interior point " << format_triple(t) << " misses chamber C("
         << ch.i << "," << ch.j << ")";
      fail(os.str());
    }
  }

  if (res.pass)
    res.detail = "f-vector 1 9 35 75 93 63 18, 294 cells, 18 simplicial chambers";
  return res;
}

SuiteResult group_suite() {
  SuiteResult res{"group-orders", true, ""};
  const SymmetryGroup& group = symmetry_group();
  auto fail = [&](const std::string& msg) {
    if (res.pass) {
      res.pass = false;
      res.detail = msg;
    }
  };
  if (group.order(Group::kG) != 144) fail("|G| != 144");
  if (group.order(Group::kGg) != 12) fail("|Gg| != 12");
  if (group.order(Group::kGl) != 72) fail("|Gl| != 72");
  if (group.order(Group::kGlg) != 6) fail("|Glg| != 6");
  std::size_t lift_count = 0;
  for (const Symmetry& s : group.all()) {
    bool has_lift = group.lift(s.index).has_value();
    if (has_lift) ++lift_count;
    bool in_gl = std::binary_search(group.members(Group::kGl).begin(),
                                    group.members(Group::kGl).end(), s.index);
    if (has_lift != in_gl) fail("liftable set differs from Gl");
  }
  if (lift_count != 72) fail("lift count != 72");
  if (group.lift(group.duality_index()).has_value()) fail("duality lifts");
  if (group.lift(group.swap_lm_index()).has_value()) fail("l<->m lifts");
  if (res.pass) res.detail = "|G|=144 |Gg|=12 |Gl|=72 |Glg|=6, 72 liftable";
  return res;
}

}  // namespace

std::vector<SuiteResult> run_verify(const VerifyOptions& opts) {
  std::vector<TripleLabel> sweep = lattice_sweep(opts.sweep);
  std::vector<SuiteResult> out;
  out.push_back(oracle_suite(sweep));
  out.push_back(symmetry_suite(sweep));
  out.push_back(chamber_suite(opts.corrupt_rays));
  out.push_back(group_suite());
  return out;
}

}  // namespace su3
