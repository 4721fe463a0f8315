#pragma once
#include "crossball/position.hpp"

namespace crossball {

// One arc of the surface on a single sphere. Face chords are listed on both
// spheres; band, pass and cap arcs belong to the sphere they sit on. All
// arcs are stored in a definite direction: chords from their first matched
// point, section arcs along the strand, cap arcs from the lower quadrant.
struct Piece {
  enum Kind : int { FaceChord = 0, BandArc, PassArc, CapArc };
  Kind kind = FaceChord;
  CellId two_cell;
  MarkedPoint a, b;
  int face = -1;        // FaceChord
  int pair_index = -1;  // FaceChord
  SectionId section{};  // BandArc, PassArc
  int depth = 0;        // CapArc: which saddle, 1..k
};

struct CircleStep {
  int piece = -1;
  bool reversed = false;
};

struct SideTrace {
  Side side = Side::Plus;
  std::vector<Piece> pieces;
  std::vector<std::vector<CircleStep>> circles;
  std::vector<int> circle_of_piece;
  int chord_count = 0;  // pieces[0 .. chord_count) are the face chords
};

SideTrace trace_side(const SurfacePosition& p, Side side);

struct SurfaceShape {
  int circles_plus = 0;
  int circles_minus = 0;
  long euler = 0;
  int components = 0;
  bool connected = false;
  bool orientable = false;
  int genus = -1;  // when connected: genus, or crosscap count if nonorientable
};

SurfaceShape assemble(const SurfacePosition& p);

}  // namespace crossball
