#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "crossball/cell_complex.hpp"

namespace crossball {

// Each link component carries exactly two section circles on its tube.
struct SectionId {
  int component = -1;
  int which = -1;  // 0 or 1, canonically ordered at construction
  auto operator<=>(const SectionId&) const = default;
};

struct RailKey {
  EdgeId edge = -1;
  int lr = 0;  // 0 = left of the oriented edge, 1 = right
  auto operator<=>(const RailKey&) const = default;
  CellId cell() const { return CellId::rail(edge, lr); }
  std::string str() const;
  static RailKey parse_str(const std::string& s);
};

// A marked point on the face side: either a section transition on a rail
// (pos indexes that rail's list) or a saddle corner on a quadrant arc
// (depth counts 1.. from the pass, deepest last).
struct PointRef {
  enum Kind : int { OnRail = 0, OnQuad = 1 };
  Kind kind = OnRail;
  RailKey rail{};
  int pos = 0;
  int crossing = -1, quadrant = 0, depth = 0;
  auto operator<=>(const PointRef&) const = default;

  static PointRef on_rail(RailKey k, int p) {
    PointRef r;
    r.kind = OnRail;
    r.rail = k;
    r.pos = p;
    return r;
  }
  static PointRef on_quad(int t, int q, int d) {
    PointRef r;
    r.kind = OnQuad;
    r.crossing = t;
    r.quadrant = q;
    r.depth = d;
    return r;
  }
  std::string str() const;
};

using MatchPair = std::pair<PointRef, PointRef>;

struct PositionData {
  Diagram diagram;
  std::vector<int> saddles;                         // per crossing
  std::map<RailKey, std::vector<SectionId>> rails;  // transitions, tail to head
  std::map<int, std::vector<MatchPair>> faces;      // face id -> matching
};

// A marked point on any 1-cell; pos counts along the cell's stored direction.
struct MarkedPoint {
  CellId cell;
  int pos = 0;
  auto operator<=>(const MarkedPoint&) const = default;
};

// A derived piece of a section inside an edge band or a pass band.
struct SweepArc {
  CellId two_cell;
  MarkedPoint a, b;
  SectionId section;
};

// A validated surface position: the data plus everything the sweep derives.
class SurfacePosition {
 public:
  explicit SurfacePosition(PositionData data);

  const PositionData& data() const { return data_; }
  const Diagram& diagram() const { return data_.diagram; }

  int saddle_count(int t) const { return data_.saddles[t]; }
  int saddle_total() const;
  int transition_total() const;
  int chord_total() const;
  std::pair<long, long> complexity() const {
    return {saddle_total(), chord_total()};
  }

  const std::vector<SectionId>& rail_transitions(RailKey k) const;
  // Sides are +1 (Plus) / -1 (Minus); a transition flips its section.
  int side_before(RailKey k, int pos) const;
  int side_after(RailKey k, int pos) const;

  // The section's transitions in strand order, starting where the component
  // walk starts (the tail of its lowest edge).
  const std::vector<MarkedPoint>& section_points(SectionId s) const;

  // Derived chords of F on the given sphere: edge band and pass band pieces.
  const std::vector<SweepArc>& side_arcs(Side side) const {
    return side_arcs_[static_cast<int>(side)];
  }
  // Sections crossing a pass meridian, ordered along the stored direction.
  const std::vector<SectionId>& meridian_sections(CellId meridian) const;

  // All marked points around a face disk, in boundary walk order.
  const std::vector<PointRef>& face_boundary_points(int f) const;
  const std::vector<MatchPair>& face_matching(int f) const;
  int face_of_point(const PointRef& p) const;
  PointRef matched_partner(const PointRef& p) const;

  MarkedPoint locate(const PointRef& p) const;
  int point_count(CellId one_cell, Side side) const;

 private:
  void validate_and_derive();

  PositionData data_;
  std::map<SectionId, std::vector<MarkedPoint>> section_points_;
  std::map<RailKey, std::vector<std::pair<int, int>>> rail_sides_;  // before, after
  std::vector<SweepArc> side_arcs_[2];
  std::map<CellId, std::vector<SectionId>> meridian_points_;
  std::map<int, std::vector<PointRef>> face_points_;
  std::vector<MatchPair> empty_matching_;
  std::vector<SectionId> empty_rail_;
};

// The boundary of a neighborhood of one checkerboard surface, in standard
// position: two saddles per ball and a transition near each strand end on
// the rail across from the chosen color.
SurfacePosition interpolating_position(const Diagram& d, const std::string& color);

// 0/1 per face; class 0 has fewer faces (ties go to the class of face 0).
std::vector<int> checkerboard_colors(const Diagram& d);

}  // namespace crossball
