#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "crossball/taut.hpp"
#include "test_support.hpp"

using namespace crossball;

namespace {

int count_rule(const std::vector<TautViolation>& vs, const std::string& rule) {
  return static_cast<int>(std::count_if(
      vs.begin(), vs.end(),
      [&](const TautViolation& v) { return v.rule == rule; }));
}

}  // namespace

TEST_CASE("interpolating positions pass every check") {
  for (const char* pd : {testpd::kTrefoil, testpd::kFig8, testpd::kFive2,
                         testpd::kSix2, testpd::kHopf}) {
    Diagram d = Diagram::parse_pd(pd);
    for (const char* color : {"black", "white"}) {
      CAPTURE(pd);
      CAPTURE(color);
      CHECK(taut_check(interpolating_position(d, color)).empty());
    }
  }
}

TEST_CASE("tube torus violations on the trefoil") {
  Diagram d = Diagram::parse_pd(testpd::kTrefoil);
  SurfacePosition p{testpd::tube_data(d)};
  std::vector<TautViolation> vs = taut_check(p);

  CHECK(vs.size() == 12);
  CHECK(count_rule(vs, "chord_rail_return") == 6);
  CHECK(count_rule(vs, "pass_arcs_one_circle") == 6);
  CHECK(vs[0] ==
        TautViolation{"chord_rail_return", "face 0 arc e1:L@0 to e1:L@1"});

  int plus = 0, minus = 0;
  for (const TautViolation& v : vs) {
    if (v.rule != "pass_arcs_one_circle") continue;
    plus += v.witness.find("plus") == 0;
    minus += v.witness.find("minus") == 0;
  }
  CHECK(plus == 3);
  CHECK(minus == 3);
}

TEST_CASE("saddle pair leaves return arcs at the ball") {
  Diagram d = Diagram::parse_pd(testpd::kTrefoil);
  SurfacePosition p{testpd::saddled_data(d, 0)};
  std::vector<TautViolation> vs = taut_check(p);

  CHECK(vs.size() == 10);
  CHECK(count_rule(vs, "chord_ball_return") == 2);
  CHECK(count_rule(vs, "chord_ball_to_edge") == 4);
  CHECK(count_rule(vs, "innermost_touches_ball") == 4);
  CHECK(count_rule(vs, "saddle_shape") == 0);
  CHECK(count_rule(vs, "band_rail_return") == 0);
  CHECK(count_rule(vs, "edge_extra_crossings") == 0);
}

TEST_CASE("section that doubles back over one rail") {
  Diagram d = Diagram::parse_pd(testpd::kTrefoil);
  PositionData pd = interpolating_position(d, "black").data();
  EdgeId e0 = d.edge_ids()[0];
  RailKey key{e0, 0};
  if (pd.rails.count(key)) key.lr = 1;
  pd.rails[key] = {SectionId{0, 0}, SectionId{0, 0}};
  int f = key.lr == 0 ? d.left_face(e0) : d.right_face(e0);
  pd.faces[f].emplace_back(PointRef::on_rail(key, 0),
                           PointRef::on_rail(key, 1));

  std::vector<TautViolation> vs = taut_check(SurfacePosition{std::move(pd)});
  CHECK(vs.size() == 4);
  CHECK(count_rule(vs, "chord_rail_return") == 1);
  CHECK(count_rule(vs, "band_rail_return") == 1);
  CHECK(count_rule(vs, "innermost_misses_pass") == 1);
  CHECK(count_rule(vs, "edge_extra_crossings") == 1);
  for (const TautViolation& v : vs)
    if (v.rule == "edge_extra_crossings")
      CHECK(v.witness == "edge 1 section 0 crosses 3 times");
}

TEST_CASE("non-alternating diagrams skip the alternating-only checks") {
  Diagram d = Diagram::parse_pd("X(1,4,2,5) X(3,6,4,1) X(2,6,3,5)");
  REQUIRE_FALSE(d.alternating());

  std::vector<TautViolation> vs = taut_check(interpolating_position(d, "white"));
  CHECK(vs.size() == 8);
  CHECK(count_rule(vs, "chord_rail_return") == 2);
  CHECK(count_rule(vs, "pass_arcs_one_circle") == 6);
  CHECK(count_rule(vs, "edge_extra_crossings") == 0);
  CHECK(count_rule(vs, "innermost_touches_ball") == 0);
  CHECK(count_rule(vs, "innermost_misses_pass") == 0);

  CHECK(taut_check(interpolating_position(d, "black")).empty());
}
