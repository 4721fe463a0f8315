#pragma once
#include <array>
#include <compare>
#include <string>
#include <vector>

#include "crossball/errors.hpp"

namespace crossball {

using EdgeId = int;

// An edge end at a crossing. Slots run counterclockwise; slot 0 is the
// incoming under-strand, so the under-strand runs slot 0 -> slot 2.
struct Dart {
  int crossing = -1;
  int slot = -1;
  bool operator==(const Dart&) const = default;
  auto operator<=>(const Dart&) const = default;
};

// Quadrant q at a crossing sits between slots q and q+1 (mod 4).
struct Quad {
  int crossing = -1;
  int q = -1;
  bool operator==(const Quad&) const = default;
  auto operator<=>(const Quad&) const = default;
};

struct EdgeInfo {
  // tail/head have crossing == -1 for free loops.
  Dart tail;
  Dart head;
  int component = -1;
};

// A complementary region of the projection, walked with the region on the
// right of each dart's travel (dart d is traversed from d toward twin(d)).
// corners[i] == twin(darts[i]) names the quadrant swept between consecutive
// darts, so darts[i+1] == rotate+1(corners[i]).
struct Face {
  std::vector<Dart> darts;
  std::vector<Quad> corners;
};

class Diagram {
 public:
  Diagram() = default;  // empty placeholder; parse_pd and from_data build real ones
  // Text form: optional PD[...] wrapper around tokens X(a,b,c,d) and U(i),
  // with () or [] brackets. X lists the edges counterclockwise from the
  // incoming under-strand; U(i) is a crossing-free circle.
  static Diagram parse_pd(const std::string& text);
  static Diagram from_data(std::vector<std::array<EdgeId, 4>> crossings,
                           std::vector<EdgeId> free_loops);

  const std::vector<std::array<EdgeId, 4>>& crossings() const { return xs_; }
  const std::vector<EdgeId>& free_loops() const { return loops_; }
  int n() const { return static_cast<int>(xs_.size()); }

  std::vector<EdgeId> edge_ids() const;  // sorted, free loops included
  const EdgeInfo& edge(EdgeId e) const;
  EdgeId edge_at(Dart d) const { return xs_[d.crossing][d.slot]; }
  Dart twin(Dart d) const;
  static bool under_end(Dart d) { return d.slot % 2 == 0; }

  // Given the head end of an edge, the head end of the next edge along the
  // strand through that crossing.
  Dart strand_next(Dart head_end) const;

  // Link components: strand cycles first (numbered along ascending smallest
  // edge id), then free loops in stored order.
  int component_count() const { return component_count_; }

  // Connectivity of the projection itself (crossing graph plus loops).
  int piece_count() const { return piece_count_; }
  bool connected() const { return piece_count_ == 1; }

  // Faces are dart orbits of next(d) = rotate+1(twin(d)), enumerated from
  // their smallest dart. For a disconnected projection the orbits describe
  // each piece separately; face_count() is the sphere count 1 + pieces - V + E.
  const std::vector<Face>& faces() const { return faces_; }
  int face_of_dart(Dart d) const;
  int face_of_corner(Quad c) const { return face_of_dart(rot1(c)); }
  int left_face(EdgeId e) const;   // side names follow the edge orientation
  int right_face(EdgeId e) const;
  int face_count() const;

  bool alternating() const;
  std::vector<int> nugatory_crossings() const;
  bool reduced() const { return nugatory_crossings().empty(); }

  // type 'A' joins slot pairs {0,1},{2,3}; type 'B' joins {0,3},{1,2}.
  // The result is rebuilt from scratch, so its orientations are its own.
  Diagram smoothed(int crossing, char type) const;

  // Same diagram with the over/under roles swapped at one crossing.
  Diagram switched(int crossing) const;

  std::string to_pd() const;

  static Dart rot1(Quad c) { return Dart{c.crossing, (c.q + 1) % 4}; }

 private:
  void build();  // validates and derives everything below

  std::vector<std::array<EdgeId, 4>> xs_;
  std::vector<EdgeId> loops_;

  std::vector<EdgeId> sorted_edges_;
  std::vector<EdgeInfo> edge_info_;       // parallel to sorted_edges_
  std::vector<std::array<Dart, 2>> occ_;  // stored-order occurrences
  std::vector<int> edge_index_of_id_;     // dense lookup, -1 where unused
  std::vector<Face> faces_;
  std::vector<std::array<int, 4>> face_of_dart_;  // per crossing, per slot
  int component_count_ = 0;
  int piece_count_ = 0;

  int edge_index(EdgeId e) const;
};

}  // namespace crossball
