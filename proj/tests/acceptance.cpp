// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "segrestrat/functor.hpp"
#include "segrestrat/gl3borel.hpp"
#include "segrestrat/segre.hpp"

using namespace sgs;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << index << ": " << name;
  if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++g_failures;
}

GroupDescriptor named(const std::string& n) { return GroupDescriptor::parse(n); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// 1. Closed-form Segre coefficients across the catalogued parabolic families.
void criterion1() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;

  for (int r = 2; r <= 10 && ok; ++r)
    for (int n = 1; n < r && ok; ++n) {
      const auto p = ParabolicType::from_flag_signature(
          named("GL(" + std::to_string(r) + ")"), {n, r - n});
      for (Int d = -6; d <= 6 && ok; ++d)
        for (Int e = -6; e <= 6; ++e) {
          if (segre_value(NumericalType::make(p, {e, d - e})) != n * d - r * e) {
            ok = false;
            detail = "two-step value mismatch at r=" + std::to_string(r);
            break;
          }
        }
    }

  for (int n = 1; n <= 6 && ok; ++n) {
    const auto p = ParabolicType::from_isotropic_flag(
        named("Sp(" + std::to_string(2 * n) + ")"), {n});
    for (Int e = -6; e <= 6; ++e)
      if (segre_value(NumericalType::make(p, {e})) != -(n + 1) * e) {
        ok = false;
        detail = "Siegel value mismatch at n=" + std::to_string(n);
        break;
      }
  }

  for (int n = 2; n <= 6 && ok; ++n) {
    const auto p = ParabolicType::from_isotropic_flag(
        named("SO(" + std::to_string(2 * n) + ")"), {n});
    for (Int e = -6; e <= 6; ++e)
      if (segre_value(NumericalType::make(p, {e})) != -(n - 1) * e) {
        ok = false;
        detail = "Lagrangian value mismatch at n=" + std::to_string(n);
        break;
      }
  }

  const auto borel = ParabolicType::borel(named("GL(3)"));
  for (Int d1 = -6; d1 <= 6 && ok; ++d1)
    for (Int d2 = -6; d2 <= 6 && ok; ++d2)
      for (Int d3 = -6; d3 <= 6; ++d3)
        if (segre_value(NumericalType::make(borel, {d1, d2, d3})) != 2 * (d3 - d1)) {
          ok = false;
          detail = "full-flag value mismatch";
          break;
        }

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (ok && seconds >= 5.0) {
    ok = false;
    detail = "runtime " + std::to_string(seconds) + "s exceeds 5s";
  }
  report(1, "closed-form Segre coefficients (exact, under 5s)", ok, detail);
}

// 2. |quotient_roots| = dim G - dim P with dim P from an independent
// cocharacter-sign oracle, all parabolics, all descriptors of rank <= 8.
void criterion2() {
  bool ok = true;
  std::string detail;
  std::vector<GroupDescriptor> groups;
  for (int r = 1; r <= 8; ++r) groups.push_back(GroupDescriptor::make(GroupFamily::GL, r));
  for (int r = 2; r <= 8; ++r) {
    groups.push_back(GroupDescriptor::make(GroupFamily::SL, r));
    groups.push_back(GroupDescriptor::make(GroupFamily::PGL, r));
    for (int m = 2; m <= r; ++m)
      if (r % m == 0) groups.push_back(GroupDescriptor::make(GroupFamily::SLmod, r, m));
  }
  for (int n = 1; n <= 8; ++n) {
    groups.push_back(GroupDescriptor::make(GroupFamily::Sp, 2 * n));
    groups.push_back(GroupDescriptor::make(GroupFamily::PSp, 2 * n));
  }
  for (int r = 3; r <= 17; ++r) {
    groups.push_back(GroupDescriptor::make(GroupFamily::SO, r));
    groups.push_back(GroupDescriptor::make(GroupFamily::Spin, r));
  }

  for (const auto& g : groups) {
    const int rank = static_cast<int>(g.root_system().simple_roots.size());
    for (unsigned mask = 1; mask < (1u << rank) && ok; ++mask) {
      std::vector<int> omitted;
      for (int k = 0; k < rank; ++k)
        if (mask & (1u << k)) omitted.push_back(k + 1);
      const auto p = ParabolicType::from_omitted(g, omitted);
      const Int dim_p = oracles::parabolic_dim_oracle(g, omitted);
      if (static_cast<Int>(quotient_roots(p).size()) != g.dim() - dim_p) {
        ok = false;
        detail = "mismatch for " + g.name() + ", " + p.describe();
      }
    }
    if (!ok) break;
  }
  report(2, "quotient root counts match the independent parabolic dimension oracle", ok,
         detail);
}

// 3. Stratum dimension polynomials and spot values.
void criterion3() {
  bool ok = true;
  std::string detail;

  for (int r = 2; r <= 5 && ok; ++r)
    for (int n = 1; n < r && ok; ++n)
      for (int g = 2; g <= 5 && ok; ++g)
        for (Int d = -2; d <= 2 && ok; ++d) {
          const CurveContext ctx(g);
          for (Int s = 1; s <= Int(n) * (r - n) * (g - 1) + (n - 1); ++s) {
            const auto rec = glr_stratum(r, n, d, s, ctx);
            if (rec.nonempty != Nonempty::yes) continue;
            if (rec.dim != (Int(r) * r - Int(n) * (r - n)) * (g - 1) + s + 1) {
              ok = false;
              detail = "vector bundle dimension polynomial mismatch";
              break;
            }
            const auto prec = pglr_stratum(r, n, d, s, ctx);
            if (prec.nonempty == Nonempty::yes &&
                prec.dim != (Int(r) * r - Int(n) * (r - n) - 1) * (g - 1) + s) {
              ok = false;
              detail = "projective dimension polynomial mismatch";
              break;
            }
          }
        }

  for (int n = 2; n <= 5 && ok; ++n)
    for (int g = 2; g <= 5 && ok; ++g) {
      const CurveContext ctx(g);
      for (Int s = 1; s <= Int(n - 1) * n * (g - 1) / 2 + 2; ++s) {
        const auto rec = so2n_stratum(n, 0, s, ctx);
        if ((rec.nonempty == Nonempty::yes) != (s % (n - 1) == 0)) {
          ok = false;
          detail = "orthogonal congruence mismatch";
          break;
        }
        if (rec.nonempty == Nonempty::yes &&
            rec.dim != Int(n) * (3 * n - 1) * (g - 1) / 2 + s) {
          ok = false;
          detail = "orthogonal dimension polynomial mismatch";
          break;
        }
      }
    }

  if (ok && glr_stratum(2, 1, 1, 1, CurveContext(2)).dim != 5) {
    ok = false;
    detail = "spot value (2,1,1,2,1) != 5";
  }
  if (ok && so2n_stratum(3, 0, 2, CurveContext(2)).dim != 14) {
    ok = false;
    detail = "spot value SO (3,2,2) != 14";
  }
  report(3, "stratum dimension formulas and spot values", ok, detail);
}

// 4. sigma-set equality between the vector bundle and projective catalogs,
// directly and via transfer.
void criterion4() {
  bool ok = true;
  std::string detail;
  for (int r : {2, 3})
    for (Int d : {0, 1, 2})
      for (int g : {2, 3, 4})
        for (int n = 1; n < r && ok; ++n) {
          const CurveContext ctx(g);
          const auto a = sigma_set(GroupDescriptor::make(GroupFamily::GL, r), d, n, ctx);
          const auto b = sigma_set(GroupDescriptor::make(GroupFamily::PGL, r), d, n, ctx);
          if (a.nonempty != b.nonempty || a.unknown_band != b.unknown_band) {
            ok = false;
            detail = "direct sigma sets differ at r=" + std::to_string(r);
            break;
          }
          const auto iso = Isogeny::make(IsogenyKind::adjoint, r);
          const auto p = ParabolicType::from_flag_signature(iso.source, {n, r - n});
          const Int hn = hn_upper_bound(p, ctx);
          std::vector<Int> transferred;
          for (Int s = 1; s <= hn; ++s) {
            const auto dst = transfer_stratum(iso, glr_stratum(r, n, d, s, ctx), ctx);
            if (dst.s != s) {
              ok = false;
              detail = "transfer changed s";
              break;
            }
            if (dst.nonempty == Nonempty::yes) transferred.push_back(s);
            const auto direct = pglr_stratum(r, n, d, s, ctx);
            if (dst.nonempty != direct.nonempty) {
              ok = false;
              detail = "transferred status differs from the direct catalog";
              break;
            }
          }
          if (ok && transferred != b.nonempty) {
            ok = false;
            detail = "transferred sigma set differs";
          }
        }
  report(4, "sigma sets agree between catalogs, directly and via transfer", ok, detail);
}

// 5. Genus 7 figure reproduction with byte-identical golden files.
void criterion5() {
  bool ok = true;
  std::string detail;
  const CurveContext g7(7);
  const gl3::Window window{-9, 0, 0, 9};

  const auto dense1 = gl3::classify({-5, 1, 4}, 0, g7);
  const auto dense2 = gl3::classify({-4, -1, 5}, 0, g7);
  for (const auto& pt : {dense1, dense2})
    if (pt.color != gl3::Color::green_dense || pt.stratum.serialize() != "=18" ||
        pt.dim_exact != 55) {
      ok = false;
      detail = "dense point misclassified";
    }
  if (ok && gl3::classify({-8, 1, 7}, 0, g7).color != gl3::Color::red) {
    ok = false;
    detail = "(-8,1,7) not red";
  }

  const auto model = gl3::figure_data(0, g7, window);
  if (ok) {
    for (const auto& pt : model.points)
      if ((pt.d[0] >= 0 || pt.d[2] <= 0) && pt.color != gl3::Color::orange) {
        ok = false;
        detail = "unstable point not orange";
        break;
      }
  }
  if (ok) {
    std::vector<Int> expected_lines;
    for (Int c = 1; c <= 9; ++c) expected_lines.push_back(c);
    if (model.level_lines != expected_lines) {
      ok = false;
      detail = "level lines are not 1..9";
    }
  }

  const std::string csv = gl3::figure_csv(model);
  const std::string svg = gl3::figure_svg(model);
  const auto model2 = gl3::figure_data(0, g7, window);
  if (ok && (csv != gl3::figure_csv(model2) || svg != gl3::figure_svg(model2))) {
    ok = false;
    detail = "renderers are not run-to-run deterministic";
  }
  if (ok && csv != read_file(std::string(GOLDEN_DIR) + "/gl3_figure_g7_d0.csv")) {
    ok = false;
    detail = "CSV differs from the golden file";
  }
  if (ok && svg != read_file(std::string(GOLDEN_DIR) + "/gl3_figure_g7_d0.svg")) {
    ok = false;
    detail = "SVG differs from the golden file";
  }
  report(5, "genus 7 figure reproduction and golden files", ok, detail);
}

// 6. Ceiling values; no exact stratum above a sharp ceiling.
void criterion6() {
  bool ok = true;
  std::string detail;
  const CurveContext g7(7);
  const auto sharp = gl3::hirschowitz_ceiling(0, g7);
  const auto loose = gl3::hirschowitz_ceiling(1, g7);
  if (sharp.value != 18 || !sharp.sharp) {
    ok = false;
    detail = "ceiling(0, g=7) != 18 sharp";
  }
  if (ok && (loose.value != 21 || loose.sharp)) {
    ok = false;
    detail = "ceiling(1, g=7) != 21 not sharp";
  }
  if (ok) {
    const auto model = gl3::figure_data(0, g7, gl3::Window{-15, 0, 0, 15});
    for (const auto& pt : model.points)
      if (pt.stratum.kind == gl3::StratumS::Kind::exact && pt.stratum.value > 18) {
        ok = false;
        detail = "exact stratum above the sharp ceiling";
        break;
      }
  }
  report(6, "sharp and fallback ceilings respected", ok, detail);
}

// 7. Duality: classify(d; delta) vs classify(reversed negated d; -delta).
void criterion7() {
  bool ok = true;
  std::string detail;
  for (int g : {2, 7, 13}) {
    const CurveContext ctx(g);
    for (Int delta : {0, 1, 3}) {
      for (Int d1 = -30; d1 <= 30 && ok; ++d1)
        for (Int d2 = -30; d2 <= 30; ++d2) {
          const Int d3 = delta - d1 - d2;
          if (d3 < -30 || d3 > 30) continue;
          const auto a = gl3::classify({d1, d2, d3}, delta, ctx);
          const auto b = gl3::classify({-d3, -d2, -d1}, -delta, ctx);
          if (a.color != b.color || a.s_bound != b.s_bound) {
            ok = false;
            detail = "duality violated at genus " + std::to_string(g);
            break;
          }
        }
      if (!ok) break;
    }
    if (!ok) break;
  }
  report(7, "classification is duality invariant on |d_i| <= 30", ok, detail);
}

// 8. Closure DAG edges raise s_bound by exactly 2; closure_order agrees.
void criterion8() {
  bool ok = true;
  std::string detail;
  const CurveContext g7(7);
  const auto edges = gl3::closure_dag(0, g7, gl3::Window{-8, 0, 0, 8});
  if (edges.empty()) {
    ok = false;
    detail = "no edges emitted";
  }
  for (const auto& e : edges) {
    const auto child = gl3::classify(e.child, 0, g7);
    const auto parent = gl3::classify(e.parent, 0, g7);
    if (parent.s_bound != child.s_bound + 2) {
      ok = false;
      detail = "edge does not raise s_bound by 2";
      break;
    }
    if (closure_order(child.s_bound, parent.s_bound, 2, child.s_bound % 2) !=
        ClosureRel::below) {
      ok = false;
      detail = "closure_order does not mark the child as below";
      break;
    }
  }
  report(8, "closure DAG edges and closure order", ok, detail);
}

} // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  if (g_failures) {
    std::cout << g_failures << " criteria failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
