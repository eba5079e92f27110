#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "segrestrat/gl3borel.hpp"

using namespace sgs;
using namespace sgs::gl3;

TEST_CASE("stability region") {
  CHECK(stable_region({-1, 0, 1}, 0));
  CHECK_FALSE(stable_region({0, 0, 0}, 0));
  CHECK_FALSE(stable_region({-2, 2, 0}, 0));
  CHECK(stable_region({0, 1, 2}, 3));
  CHECK_FALSE(stable_region({1, 1, 1}, 3));
  CHECK_THROWS_AS(stable_region({1, 1, 1}, 0), error);
}

TEST_CASE("ceiling values") {
  CHECK(hirschowitz_ceiling(0, CurveContext(7)).value == 18);
  CHECK(hirschowitz_ceiling(0, CurveContext(7)).sharp);
  CHECK(hirschowitz_ceiling(1, CurveContext(7)).value == 21);
  CHECK_FALSE(hirschowitz_ceiling(1, CurveContext(7)).sharp);
  CHECK(hirschowitz_ceiling(3, CurveContext(13)).value == 36);
  CHECK(hirschowitz_ceiling(3, CurveContext(13)).sharp);
  CHECK(hirschowitz_ceiling(0, CurveContext(2)).value == 6);
  CHECK_FALSE(hirschowitz_ceiling(0, CurveContext(2)).sharp);
  CHECK(hirschowitz_ceiling(-3, CurveContext(7)).sharp);
}

TEST_CASE("classification of the documented genus 7 points") {
  const CurveContext g7(7);

  const auto dense = classify({-5, 1, 4}, 0, g7);
  CHECK(dense.color == Color::green_dense);
  CHECK(dense.dim_exact == 55);
  CHECK(dense.stratum.serialize() == "=18");
  CHECK(dense.s_bound == 18);

  const auto dense2 = classify({-4, -1, 5}, 0, g7);
  CHECK(dense2.color == Color::green_dense);
  CHECK(dense2.dim_exact == 55);

  const auto gf = classify({-2, 0, 2}, 0, g7);
  CHECK(gf.color == Color::green_generically_finite);
  CHECK(gf.dim_exact == 45);
  CHECK(gf.stratum.serialize() == "=8");

  const auto red = classify({-8, 1, 7}, 0, g7);
  CHECK(red.color == Color::red);
  CHECK(red.dim_upper == 6 * 7 - 7 + 30);
  CHECK(red.stratum.kind == StratumS::Kind::at_most);
  CHECK(red.stratum.value == 18); // min(s-2, ceiling) = min(28, 18)
  CHECK_FALSE(red.note.empty());

  const auto orange = classify({0, 0, 0}, 0, g7);
  CHECK(orange.color == Color::orange);
  CHECK_FALSE(orange.has_parents);
  CHECK_FALSE(orange.dim_upper.has_value());
  CHECK(orange.stratum.serialize() == "?");

  // a gap of exactly 7 is neither green (needs <= 6) nor red (needs >= 8)
  const auto blue = classify({-5, 2, 3}, 0, g7);
  CHECK(blue.color == Color::blue);
  CHECK(blue.stratum.serialize() == "?");
  CHECK(blue.dim_upper == 6 * 7 - 5 + 16);
}

TEST_CASE("closure parents raise the gap by one step") {
  const auto pt = classify({-1, 0, 1}, 0, CurveContext(7));
  REQUIRE(pt.has_parents);
  CHECK(pt.closure_parents[0] == Triple{-2, 1, 1});
  CHECK(pt.closure_parents[1] == Triple{-1, -1, 2});
}

TEST_CASE("classify validates the degree sum") {
  CHECK_THROWS_AS(classify({1, 1, 1}, 0, CurveContext(7)), error);
}

TEST_CASE("duality on a small window") {
  for (int g : {2, 7}) {
    const CurveContext ctx(g);
    for (Int delta : {0, 1}) {
      for (Int d1 = -8; d1 <= 8; ++d1)
        for (Int d2 = -8; d2 <= 8; ++d2) {
          const Int d3 = delta - d1 - d2;
          if (d3 < -8 || d3 > 8) continue;
          const auto a = classify({d1, d2, d3}, delta, ctx);
          const auto b = classify({-d3, -d2, -d1}, -delta, ctx);
          CHECK(a.color == b.color);
          CHECK(a.s_bound == b.s_bound);
        }
    }
  }
}

TEST_CASE("closure DAG edges") {
  const CurveContext g7(7);
  const Window window{-3, 0, 0, 3};
  const auto edges = closure_dag(0, g7, window);
  const CurveContext& ctx = g7;
  CHECK(!edges.empty());
  for (const auto& e : edges) {
    const Int child_d2 = 0 - e.child[0] - e.child[2];
    CHECK(e.child[1] == child_d2);
    const auto child = classify(e.child, 0, ctx);
    const auto parent = classify(e.parent, 0, ctx);
    CHECK(child.color != Color::orange);
    CHECK(parent.s_bound == child.s_bound + 2);
    CHECK(e.parent_in_window == window.contains(e.parent[0], e.parent[2]));
  }
  // every non-orange point contributes exactly two edges
  std::set<std::pair<Int, Int>> children;
  for (const auto& e : edges) children.insert({e.child[0], e.child[2]});
  CHECK(edges.size() == 2 * children.size());

  CHECK_THROWS_AS(closure_dag(0, g7, Window{1, 0, 0, 0}), error);
}

TEST_CASE("figure model layout") {
  const CurveContext g7(7);
  const auto model = figure_data(0, g7, Window{-3, -1, 1, 3});
  CHECK(model.level_lines.size() == 9);
  CHECK(model.level_lines.front() == 1);
  CHECK(model.level_lines.back() == 9);
  CHECK(model.points.size() == 9);
  // row-major: d3 descending, d1 ascending
  CHECK(model.points.front().d == Triple{-3, 0, 3});
  CHECK(model.points[1].d == Triple{-2, -1, 3});
  CHECK(model.points.back().d == Triple{-1, 0, 1});
}

TEST_CASE("renderers are deterministic") {
  const CurveContext g7(7);
  const auto model = figure_data(0, g7, Window{-6, 0, 0, 6});
  CHECK(figure_csv(model) == figure_csv(figure_data(0, g7, Window{-6, 0, 0, 6})));
  CHECK(figure_svg(model) == figure_svg(figure_data(0, g7, Window{-6, 0, 0, 6})));

  const auto csv = figure_csv(model);
  CHECK(csv.rfind("d1,d2,d3,s_bound,color,dim_upper,dim_exact,stratum_s,parent1,parent2\n",
                  0) == 0);
  const auto svg = figure_svg(model);
  CHECK(svg.find("#2ca02c") != std::string::npos);
  CHECK(svg.find("#ff7f0e") != std::string::npos);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);
}

TEST_CASE("exact strata respect a sharp ceiling") {
  const CurveContext g7(7);
  const auto ceiling = hirschowitz_ceiling(0, g7);
  REQUIRE(ceiling.sharp);
  const auto model = figure_data(0, g7, Window{-12, 0, 0, 12});
  for (const auto& pt : model.points)
    if (pt.stratum.kind == StratumS::Kind::exact) CHECK(pt.stratum.value <= ceiling.value);
}
