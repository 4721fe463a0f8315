#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crossball/position.hpp"
#include "test_support.hpp"

using namespace crossball;
using namespace testpd;



TEST_CASE("rail keys round trip") {
  CHECK(RailKey{3, 0}.str() == "e3:L");
  CHECK(RailKey{12, 1}.str() == "e12:R");
  CHECK(RailKey::parse_str("e3:L") == RailKey{3, 0});
  CHECK(RailKey::parse_str("e12:R") == RailKey{12, 1});
  CHECK_THROWS_AS(RailKey::parse_str("e3:X"), ParseError);
  CHECK_THROWS_AS(RailKey::parse_str("3:L"), ParseError);
  CHECK_THROWS_AS(RailKey::parse_str("e:L"), ParseError);
  CHECK_THROWS_AS(RailKey::parse_str("e3L"), ParseError);
}

TEST_CASE("checkerboard colors") {
  Diagram d = Diagram::parse_pd(kTrefoil);
  std::vector<int> col = checkerboard_colors(d);
  REQUIRE(static_cast<int>(col.size()) == 5);
  int c0 = 0;
  for (int c : col) c0 += c == 0 ? 1 : 0;
  CHECK(c0 == 2);  // the smaller class gets color 0
  for (EdgeId e : d.edge_ids())
    CHECK(col[d.left_face(e)] != col[d.right_face(e)]);

  CHECK_THROWS_AS(checkerboard_colors(Diagram::parse_pd("U(1)")), DomainError);
  Diagram split = Diagram::parse_pd(
      "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) X(7,10,8,11) X(9,12,10,7) X(11,8,12,9)");
  CHECK_THROWS_AS(checkerboard_colors(split), DomainError);
}

TEST_CASE("tube position on the trefoil") {
  Diagram d = Diagram::parse_pd(kTrefoil);
  SurfacePosition p(tube_data(d));

  CHECK(p.saddle_total() == 0);
  CHECK(p.transition_total() == 12);
  CHECK(p.chord_total() == 6);
  CHECK(p.complexity() == std::pair<long, long>{0, 6});

  for (EdgeId e : d.edge_ids()) {
    CHECK(p.rail_transitions(RailKey{e, 0}).size() == 2);
    CHECK(p.rail_transitions(RailKey{e, 1}).empty());
    // Both sections cross together, so the two transitions flip the same way.
    CHECK(p.side_before(RailKey{e, 0}, 0) == p.side_before(RailKey{e, 0}, 1));
    CHECK(p.side_after(RailKey{e, 0}, 0) == -p.side_before(RailKey{e, 0}, 0));
  }

  // Every edge is alternating, so the flip direction matches the tail pass.
  for (EdgeId e : d.edge_ids()) {
    int tail_side = d.edge(e).tail.slot % 2 == 1 ? +1 : -1;
    CHECK(p.side_before(RailKey{e, 0}, 0) == tail_side);
  }

  // Each section crosses once per edge.
  for (int w = 0; w < 2; ++w)
    CHECK(p.section_points(SectionId{0, w}).size() == 6);

  // Band pieces: two per edge per side. Pass pieces: two per pass.
  int band[2] = {0, 0}, pass[2] = {0, 0};
  for (int s = 0; s < 2; ++s)
    for (const SweepArc& a : p.side_arcs(static_cast<Side>(s))) {
      if (a.two_cell.kind == CellId::EdgeBand) ++band[s];
      if (a.two_cell.kind == CellId::PassBand) ++pass[s];
    }
  CHECK(band[0] == 12);
  CHECK(band[1] == 12);
  CHECK(pass[0] == 6);
  CHECK(pass[1] == 6);

  // All four meridians of every ball carry both sections.
  for (int t = 0; t < d.n(); ++t)
    for (int s = 0; s < 4; ++s)
      CHECK(p.meridian_sections(CellId::meridian(t, s)).size() == 2);
}

TEST_CASE("interpolating position on the trefoil") {
  Diagram d = Diagram::parse_pd(kTrefoil);
  SurfacePosition p = interpolating_position(d, "black");

  CHECK(p.saddle_total() == 0);
  CHECK(p.transition_total() == 12);
  CHECK(p.chord_total() == 6);
  CHECK(p.complexity() == std::pair<long, long>{0, 6});
  for (int t = 0; t < 3; ++t) CHECK(p.saddle_count(t) == 0);

  std::vector<int> col = checkerboard_colors(d);
  for (EdgeId e : d.edge_ids()) {
    // Both transitions of an edge sit on its rail across from the black side.
    RailKey white{e, col[d.left_face(e)] == 0 ? 1 : 0};
    RailKey black{e, 1 - white.lr};
    REQUIRE(p.rail_transitions(white).size() == 2);
    CHECK(p.rail_transitions(black).empty());
    CHECK(p.rail_transitions(white)[0] != p.rail_transitions(white)[1]);
  }

  int chords = 0;
  for (int f = 0; f < d.face_count(); ++f) {
    bool chosen = col[f] == 0;
    for (const auto& [a, b] : p.face_matching(f)) {
      // Every arc hugs a corner of a white face: rail to adjacent rail.
      CHECK(!chosen);
      REQUIRE(a.kind == PointRef::OnRail);
      REQUIRE(b.kind == PointRef::OnRail);
      CHECK(a.rail != b.rail);
      ++chords;
    }
  }
  CHECK(chords == 6);

  int band[2] = {0, 0}, pass[2] = {0, 0};
  for (int s = 0; s < 2; ++s)
    for (const SweepArc& a : p.side_arcs(static_cast<Side>(s))) {
      if (a.two_cell.kind == CellId::EdgeBand) ++band[s];
      if (a.two_cell.kind == CellId::PassBand) ++pass[s];
    }
  CHECK(band[0] == 12);
  CHECK(band[1] == 12);
  CHECK(pass[0] == 6);
  CHECK(pass[1] == 6);
}

TEST_CASE("interpolating smoke checks") {
  for (const char* pd : {kFig8, kFive2, kSix2, kHopf}) {
    Diagram d = Diagram::parse_pd(pd);
    for (const char* color : {"black", "white"}) {
      SurfacePosition p = interpolating_position(d, color);
      CHECK(p.transition_total() == 4 * d.n());
      CHECK(p.saddle_total() == 0);
      CHECK(p.chord_total() == 2 * d.n());
    }
  }
  Diagram d = Diagram::parse_pd(kTrefoil);
  CHECK_THROWS_AS(interpolating_position(d, "grey"), DomainError);
  CHECK_THROWS_WITH(interpolating_position(Diagram::parse_pd(kKink), "black"),
                    "diagram not reduced");
}

TEST_CASE("canonical form is stable") {
  Diagram d = Diagram::parse_pd(kTrefoil);
  SurfacePosition p = interpolating_position(d, "black");
  SurfacePosition q(p.data());
  CHECK(q.data().saddles == p.data().saddles);
  CHECK(q.data().rails == p.data().rails);
  CHECK(q.data().faces == p.data().faces);

  SurfacePosition tube{tube_data(d)};
  SurfacePosition tube2(tube.data());
  CHECK(tube2.data().rails == tube.data().rails);
  CHECK(tube2.data().faces == tube.data().faces);
}

TEST_CASE("relabeled sections normalize to the same data") {
  Diagram d = Diagram::parse_pd(kTrefoil);
  SurfacePosition p = interpolating_position(d, "black");
  PositionData flipped = p.data();
  for (auto& [key, list] : flipped.rails)
    for (SectionId& s : list) s.which ^= 1;
  SurfacePosition q(std::move(flipped));
  CHECK(q.data().rails == p.data().rails);
}

TEST_CASE("position data validation errors") {
  Diagram d = Diagram::parse_pd(kTrefoil);

  {
    PositionData pd = tube_data(d);
    pd.saddles.pop_back();
    CHECK_THROWS_AS(SurfacePosition{std::move(pd)}, DomainError);
  }
  {
    PositionData pd = tube_data(d);
    pd.saddles[1] = -1;
    CHECK_THROWS_AS(SurfacePosition{std::move(pd)}, DomainError);
  }
  {
    PositionData pd = tube_data(d);
    pd.rails[RailKey{99, 0}] = {SectionId{0, 0}};
    CHECK_THROWS_AS(SurfacePosition{std::move(pd)}, DomainError);
  }
  {
    // No transitions at all: sections cannot alternate over and under passes.
    PositionData pd;
    pd.diagram = d;
    pd.saddles.assign(3, 0);
    try {
      SurfacePosition p{std::move(pd)};
      FAIL("expected a domain error");
    } catch (const DomainError& e) {
      CHECK(std::string(e.what()).find("wrong side") != std::string::npos);
    }
  }
  {
    // One rail list out of stacking order.
    PositionData pd = tube_data(d);
    std::vector<EdgeId> cycle = component_cycle(d, 0);
    pd.rails[RailKey{cycle[1], 0}] = {SectionId{0, 0}, SectionId{0, 1}};
    pd.rails[RailKey{cycle[0], 0}] = {SectionId{0, 0}, SectionId{0, 1}};
    try {
      SurfacePosition p{std::move(pd)};
      FAIL("expected a domain error");
    } catch (const DomainError& e) {
      CHECK(std::string(e.what()).find("stacking") != std::string::npos);
    }
  }
  {
    Diagram hopf = Diagram::parse_pd(kHopf);
    PositionData pd = tube_data(hopf);
    EdgeId e1 = -1;
    for (EdgeId e : hopf.edge_ids())
      if (hopf.edge(e).component == 1) { e1 = e; break; }
    pd.rails[RailKey{e1, 0}][0] = SectionId{0, 0};
    try {
      SurfacePosition p{std::move(pd)};
      FAIL("expected a domain error");
    } catch (const DomainError& e) {
      CHECK(std::string(e.what()).find("another component") != std::string::npos);
    }
  }
}

TEST_CASE("matching validation errors") {
  Diagram d = Diagram::parse_pd(kTrefoil);
  SurfacePosition good = interpolating_position(d, "black");

  {
    // Drop one pair.
    PositionData pd = good.data();
    for (auto& [f, match] : pd.faces) {
      if (match.empty()) continue;
      match.pop_back();
      break;
    }
    try {
      SurfacePosition p{std::move(pd)};
      FAIL("expected a domain error");
    } catch (const DomainError& e) {
      CHECK(std::string(e.what()).find("does not cover") != std::string::npos);
    }
  }
  {
    // Re-pair two corner arcs of one face so they interleave.
    PositionData pd = good.data();
    bool done = false;
    for (int f = 0; f < d.face_count() && !done; ++f) {
      const std::vector<PointRef>& pts = good.face_boundary_points(f);
      int v = static_cast<int>(pts.size());
      if (v < 4) continue;
      auto& match = pd.faces[f];
      auto has = [&](const PointRef& a, const PointRef& b) {
        for (auto& pr : match)
          if ((pr.first == a && pr.second == b) ||
              (pr.first == b && pr.second == a))
            return true;
        return false;
      };
      for (int o = 0; o < 2 && !done; ++o) {
        PointRef q0 = pts[o], q1 = pts[o + 1], q2 = pts[o + 2],
                 q3 = pts[(o + 3) % v];
        if (!has(q0, q1) || !has(q2, q3)) continue;
        std::vector<MatchPair> next;
        for (auto& pr : match) {
          bool drop = (pr.first == q0 && pr.second == q1) ||
                      (pr.first == q1 && pr.second == q0) ||
                      (pr.first == q2 && pr.second == q3) ||
                      (pr.first == q3 && pr.second == q2);
          if (!drop) next.push_back(pr);
        }
        next.emplace_back(q0, q2);
        next.emplace_back(q1, q3);
        match = std::move(next);
        done = true;
      }
    }
    REQUIRE(done);
    try {
      SurfacePosition p{std::move(pd)};
      FAIL("expected a domain error");
    } catch (const DomainError& e) {
      CHECK(std::string(e.what()).find("crossing arcs") != std::string::npos);
    }
  }
  {
    // Point from one face used in another face's matching.
    PositionData pd = good.data();
    PointRef foreign = PointRef::on_quad(0, 0, 1);
    int home = good.face_of_point(foreign);
    for (auto& [f, match] : pd.faces) {
      if (f == home || match.empty()) continue;
      match[0].first = foreign;
      break;
    }
    try {
      SurfacePosition p{std::move(pd)};
      FAIL("expected a domain error");
    } catch (const DomainError& e) {
      CHECK(std::string(e.what()).find("off its boundary") != std::string::npos);
    }
  }
}

TEST_CASE("face boundary points and partners") {
  Diagram d = Diagram::parse_pd(kTrefoil);
  SurfacePosition p = interpolating_position(d, "black");

  int total = 0;
  for (int f = 0; f < d.face_count(); ++f) {
    const std::vector<PointRef>& pts = p.face_boundary_points(f);
    total += static_cast<int>(pts.size());
    for (const PointRef& pt : pts) {
      CHECK(p.face_of_point(pt) == f);
      PointRef back = p.matched_partner(p.matched_partner(pt));
      CHECK(back == pt);
    }
  }
  CHECK(total == 12);

  CHECK(p.point_count(CellId::meridian(0, 1), Side::Plus) == 2);
  CHECK(p.point_count(CellId::meridian(0, 1), Side::Minus) == 0);
  CHECK(p.point_count(CellId::meridian(0, 0), Side::Minus) == 2);
  CHECK_THROWS_AS(p.point_count(CellId::face_disk(0), Side::Plus), DomainError);

  // Saddles add quad points. locate maps depth so that depth 1 sits nearest
  // the over-strand end.
  SurfacePosition s{saddled_data(d, 0)};
  MarkedPoint odd = s.locate(PointRef::on_quad(0, 1, 1));
  CHECK(odd.pos == 0);
  MarkedPoint even = s.locate(PointRef::on_quad(0, 0, 1));
  CHECK(even.pos == 1);
  CHECK(s.point_count(CellId::quad_arc(0, 2), Side::Plus) == 2);
  CHECK(s.chord_total() == 10);
}
