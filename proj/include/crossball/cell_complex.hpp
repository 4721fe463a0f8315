#pragma once
#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "crossball/diagram.hpp"

namespace crossball {

// The two boundary spheres over and under the projection plane. The strand
// crossing the ball interior on the Plus side is the over-strand (odd slots).
enum class Side : int { Plus = 0, Minus = 1 };

inline Side other(Side s) { return s == Side::Plus ? Side::Minus : Side::Plus; }
inline int pass_parity(Side s) { return s == Side::Plus ? 1 : 0; }
inline const char* side_name(Side s) { return s == Side::Plus ? "plus" : "minus"; }

struct CellId {
  enum Kind : int {
    Zero,      // (t, s, b): flank b of strand end s at ball t; b=1 faces quadrant s
    Rail,      // (edge, 0=L/1=R): runs from the tail flank to the head flank
    QuadArc,   // (t, q): runs zc(t,q,1) -> zc(t,q+1,0) along the ball wall
    Meridian,  // (t, s): runs zc(t,s,0) -> zc(t,s,1) over the strand end
    LongArc,   // (t, w): flanks cap half (t,w), crossing the ball alongside the pass
    FaceDisk,  // diagram face id
    EdgeBand,  // edge id
    PassBand,  // t
    CapHalf,   // (t, w): quadrants {2w+1, 2w+2} on Plus, {2w, 2w+1} on Minus
  };
  Kind kind = Zero;
  int a = 0;
  int b = 0;
  int c = 0;  // only Zero uses all three fields

  auto operator<=>(const CellId&) const = default;

  static CellId zero(int t, int s, int flank) { return {Zero, t, s, flank}; }
  static CellId rail(EdgeId e, int lr) { return {Rail, e, lr, 0}; }
  static CellId quad_arc(int t, int q) { return {QuadArc, t, q, 0}; }
  static CellId meridian(int t, int s) { return {Meridian, t, s, 0}; }
  static CellId long_arc(int t, int w) { return {LongArc, t, w, 0}; }
  static CellId face_disk(int f) { return {FaceDisk, f, 0, 0}; }
  static CellId edge_band(EdgeId e) { return {EdgeBand, e, 0, 0}; }
  static CellId pass_band(int t) { return {PassBand, t, 0, 0}; }
  static CellId cap_half(int t, int w) { return {CapHalf, t, w, 0}; }

  bool is_one_cell() const {
    return kind == Rail || kind == QuadArc || kind == Meridian || kind == LongArc;
  }
  bool is_two_cell() const {
    return kind == FaceDisk || kind == EdgeBand || kind == PassBand ||
           kind == CapHalf;
  }
  std::string str() const;
};

struct BoundaryStep {
  CellId cell;
  bool reversed = false;
};

// One side's sphere, cut along the link tube and the ball walls. Faces,
// rails, quadrant arcs and zero cells are shared with the opposite side;
// meridians, long arcs, bands and cap halves belong to their own side.
class CellComplex {
 public:
  CellComplex(const Diagram& d, Side side);

  Side side() const { return side_; }
  const Diagram& diagram() const { return *diagram_; }

  const std::vector<CellId>& two_cells() const { return two_cells_; }
  const std::vector<CellId>& one_cells() const { return one_cells_; }
  const std::vector<BoundaryStep>& boundary(CellId two_cell) const;
  std::array<CellId, 2> endpoints(CellId one_cell) const;  // {start, end}
  const std::vector<CellId>& coboundary(CellId one_cell) const;

  int zero_cell_count() const { return 8 * diagram_->n(); }
  long euler_characteristic() const;

 private:
  const Diagram* diagram_;
  Side side_;
  std::vector<CellId> two_cells_, one_cells_;
  std::map<CellId, std::vector<BoundaryStep>> bnd_;
  std::map<CellId, std::array<CellId, 2>> ends_;
  std::map<CellId, std::vector<CellId>> cob_;
};

}  // namespace crossball
