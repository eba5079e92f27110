#ifndef SEGRESTRAT_GL3BOREL_HPP
#define SEGRESTRAT_GL3BOREL_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "segrestrat/strata.hpp"

namespace sgs {
namespace gl3 {

using Triple = std::array<Int, 3>;

enum class Color { green_generically_finite, green_dense, red, blue, orange };

const char* to_string(Color c);

/// The stratum membership statement attached to a B-reduction type:
/// an exact Segre value, an upper bound, or unresolved.
struct StratumS {
  enum class Kind { exact, at_most, unknown };
  Kind kind = Kind::unknown;
  Int value = 0;

  std::string serialize() const; // "=N", "<=N", "?"
};

struct BorelPoint {
  Triple d{};
  Int delta = 0;
  Int s_bound = 0; // 2*(d3 - d1)
  Color color = Color::blue;
  std::optional<Int> dim_upper;
  std::optional<Int> dim_exact;
  StratumS stratum;
  std::array<Triple, 2> closure_parents{};
  bool has_parents = false;
  std::string note; // e.g. which red gap fired
};

/// d1 < delta/3 < d3, integer-exact.
bool stable_region(const Triple& d, Int delta);

struct Ceiling {
  Int value;
  bool sharp;
};

/// 3(g-1) (sharp) when delta = 0 mod 3 and g = 1 mod 6; else 3g.
Ceiling hirschowitz_ceiling(Int delta, const CurveContext& ctx);

BorelPoint classify(const Triple& d, Int delta, const CurveContext& ctx);

struct Window {
  Int d1_min, d1_max, d3_min, d3_max;

  bool empty() const { return d1_min > d1_max || d3_min > d3_max; }
  bool contains(Int d1, Int d3) const {
    return d1 >= d1_min && d1 <= d1_max && d3 >= d3_min && d3 <= d3_max;
  }
};

struct DagEdge {
  Triple child{};
  Triple parent{};
  bool parent_in_window = false;
};

/// Two edges per in-window non-orange point, toward its closure parents.
std::vector<DagEdge> closure_dag(Int delta, const CurveContext& ctx, const Window& window);

struct FigureModel {
  Int delta = 0;
  int genus = 0;
  Window window{};
  Ceiling ceiling{};
  std::vector<Int> level_lines;    // d3 - d1 = c, c = 1 .. floor(ceiling/2)
  std::vector<BorelPoint> points;  // row-major: d3 descending, d1 ascending
};

FigureModel figure_data(Int delta, const CurveContext& ctx, const Window& window);

std::string figure_csv(const FigureModel& model);
std::string figure_svg(const FigureModel& model);

} // namespace gl3
} // namespace sgs

#endif
