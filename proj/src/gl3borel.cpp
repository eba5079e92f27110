#include "segrestrat/gl3borel.hpp"

#include <sstream>

namespace sgs {
namespace gl3 {

namespace {

Int nonneg_mod(Int a, Int m) { return ((a % m) + m) % m; }

const char* color_hex(Color c) {
  switch (c) {
    case Color::green_generically_finite:
    case Color::green_dense: return "#2ca02c";
    case Color::red: return "#d62728";
    case Color::blue: return "#1f77b4";
    case Color::orange: return "#ff7f0e";
  }
  return "#000000";
}

} // namespace

const char* to_string(Color c) {
  switch (c) {
    case Color::green_generically_finite: return "green(generically-finite)";
    case Color::green_dense: return "green(dense)";
    case Color::red: return "red";
    case Color::blue: return "blue";
    case Color::orange: return "orange";
  }
  return "?";
}

std::string StratumS::serialize() const {
  switch (kind) {
    case Kind::exact: return "=" + std::to_string(value);
    case Kind::at_most: return "<=" + std::to_string(value);
    case Kind::unknown: return "?";
  }
  return "?";
}

bool stable_region(const Triple& d, Int delta) {
  if (checked_add(checked_add(d[0], d[1]), d[2]) != delta)
    fail(errc::domain, "triple does not sum to delta");
  return checked_mul(3, d[0]) < delta && checked_mul(3, d[2]) > delta;
}

Ceiling hirschowitz_ceiling(Int delta, const CurveContext& ctx) {
  const Int g = ctx.genus;
  if (nonneg_mod(delta, 3) == 0 && nonneg_mod(g, 6) == 1) return {3 * (g - 1), true};
  return {3 * g, false};
}

BorelPoint classify(const Triple& d, Int delta, const CurveContext& ctx) {
  BorelPoint pt;
  pt.d = d;
  pt.delta = delta;
  const bool stable = stable_region(d, delta); // also validates the sum
  pt.s_bound = checked_mul(2, checked_sub(d[2], d[0]));

  if (!stable) {
    pt.color = Color::orange;
    pt.stratum = {StratumS::Kind::unknown, 0};
    return pt;
  }

  const Int g = ctx.genus;
  const Int s = pt.s_bound;
  pt.closure_parents = {Triple{d[0] - 1, d[1] + 1, d[2]}, Triple{d[0], d[1] - 1, d[2] + 1}};
  pt.has_parents = true;

  const bool green_gf =
      d[1] - d[0] <= g - 1 && d[2] - d[1] <= g - 1 && d[2] - d[0] <= g - 1;

  bool green_dense = false;
  if (nonneg_mod(g, 6) == 1 && nonneg_mod(delta, 3) == 0) {
    const Int u = (g - 1) / 6;
    const Int k = delta / 3;
    green_dense = (d == Triple{-5 * u + k, u + k, 4 * u + k}) ||
                  (d == Triple{-4 * u + k, -u + k, 5 * u + k});
  }

  const bool red = d[1] - d[0] >= g + 1 || d[2] - d[1] >= g + 1;
  if ((green_gf || green_dense) && red)
    fail(errc::internal, "green and red conditions cannot both hold");

  if (green_dense) {
    pt.color = Color::green_dense;
    pt.dim_upper = 6 * g - 5 + s;
    pt.dim_exact = 9 * g - 8;
    pt.stratum = {StratumS::Kind::exact, 3 * (g - 1)};
  } else if (green_gf) {
    pt.color = Color::green_generically_finite;
    pt.dim_upper = 6 * g - 5 + s;
    pt.dim_exact = 6 * g - 5 + s;
    pt.stratum = {StratumS::Kind::exact, s};
  } else if (red) {
    pt.color = Color::red;
    pt.dim_upper = 6 * g - 7 + s;
    const Ceiling ceiling = hirschowitz_ceiling(delta, ctx);
    pt.stratum = {StratumS::Kind::at_most, std::min(s - 2, ceiling.value)};
    pt.note = d[1] - d[0] >= g + 1 ? (d[2] - d[1] >= g + 1 ? "gaps d2-d1 and d3-d2 >= g+1"
                                                           : "gap d2-d1 >= g+1")
                                   : "gap d3-d2 >= g+1";
  } else {
    pt.color = Color::blue;
    pt.dim_upper = 6 * g - 5 + s;
    pt.stratum = {StratumS::Kind::unknown, 0};
  }
  return pt;
}

std::vector<DagEdge> closure_dag(Int delta, const CurveContext& ctx, const Window& window) {
  if (window.empty()) fail(errc::domain, "empty figure window");
  std::vector<DagEdge> edges;
  for (Int d3 = window.d3_max; d3 >= window.d3_min; --d3)
    for (Int d1 = window.d1_min; d1 <= window.d1_max; ++d1) {
      const Triple d{d1, delta - d1 - d3, d3};
      const BorelPoint pt = classify(d, delta, ctx);
      if (!pt.has_parents) continue;
      for (const Triple& parent : pt.closure_parents)
        edges.push_back({d, parent, window.contains(parent[0], parent[2])});
    }
  return edges;
}

FigureModel figure_data(Int delta, const CurveContext& ctx, const Window& window) {
  if (window.empty()) fail(errc::domain, "empty figure window");
  FigureModel model;
  model.delta = delta;
  model.genus = ctx.genus;
  model.window = window;
  model.ceiling = hirschowitz_ceiling(delta, ctx);
  for (Int c = 1; c <= model.ceiling.value / 2; ++c) model.level_lines.push_back(c);
  for (Int d3 = window.d3_max; d3 >= window.d3_min; --d3)
    for (Int d1 = window.d1_min; d1 <= window.d1_max; ++d1)
      model.points.push_back(classify({d1, delta - d1 - d3, d3}, delta, ctx));
  return model;
}

std::string figure_csv(const FigureModel& model) {
  std::ostringstream out;
  out << "d1,d2,d3,s_bound,color,dim_upper,dim_exact,stratum_s,parent1,parent2\n";
  for (const auto& pt : model.points) {
    out << pt.d[0] << ',' << pt.d[1] << ',' << pt.d[2] << ',' << pt.s_bound << ','
        << to_string(pt.color) << ',';
    if (pt.dim_upper) out << *pt.dim_upper;
    out << ',';
    if (pt.dim_exact) out << *pt.dim_exact;
    out << ',' << pt.stratum.serialize() << ',';
    if (pt.has_parents) {
      const auto& p1 = pt.closure_parents[0];
      const auto& p2 = pt.closure_parents[1];
      out << "\"(" << p1[0] << ',' << p1[1] << ',' << p1[2] << ")\","
          << "\"(" << p2[0] << ',' << p2[1] << ',' << p2[2] << ")\"";
    } else {
      out << ',';
    }
    out << '\n';
  }
  return out.str();
}

std::string figure_svg(const FigureModel& model) {
  constexpr Int spacing = 24;
  constexpr Int radius = 5;
  constexpr Int margin = 48;
  const Window& w = model.window;
  const Int width = 2 * margin + (w.d1_max - w.d1_min) * spacing;
  const Int height = 2 * margin + (w.d3_max - w.d3_min) * spacing;
  auto px = [&](Int d1) { return margin + (d1 - w.d1_min) * spacing; };
  auto py = [&](Int d3) { return margin + (w.d3_max - d3) * spacing; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";

  // dotted level lines d3 - d1 = c
  for (Int c : model.level_lines) {
    const Int d1_lo = std::max(w.d1_min, w.d3_min - c);
    const Int d1_hi = std::min(w.d1_max, w.d3_max - c);
    if (d1_lo > d1_hi) continue;
    out << "<line x1=\"" << px(d1_lo) << "\" y1=\"" << py(d1_lo + c) << "\" x2=\""
        << px(d1_hi) << "\" y2=\"" << py(d1_hi + c)
        << "\" stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"4,3\"/>\n";
  }

  for (const auto& pt : model.points) {
    out << "<circle cx=\"" << px(pt.d[0]) << "\" cy=\"" << py(pt.d[2]) << "\" r=\"" << radius
        << "\" fill=\"" << color_hex(pt.color) << "\"/>\n";
  }

  out << "<text x=\"" << (width - margin / 2) << "\" y=\"" << (height - margin / 4)
      << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"end\">d1</text>\n";
  out << "<text x=\"" << (margin / 4) << "\" y=\"" << (margin / 2)
      << "\" font-family=\"sans-serif\" font-size=\"14\">d3</text>\n";
  out << "</svg>\n";
  return out.str();
}

} // namespace gl3
} // namespace sgs
