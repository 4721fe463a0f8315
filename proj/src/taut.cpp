#include "crossball/taut.hpp"

#include <map>

#include "crossball/cell_complex.hpp"
#include "crossball/height.hpp"

namespace crossball {

std::vector<TautViolation> taut_check(const SurfacePosition& p) {
  std::vector<TautViolation> out;
  const Diagram& d = p.data().diagram;

  // Face arcs that double back: to one rail, to one ball, or from a ball to
  // an edge at that ball. Each such arc guides a complexity reduction, so a
  // minimal position has none.
  for (int f = 0; f < d.face_count(); ++f) {
    const std::vector<MatchPair>& match = p.face_matching(f);
    for (const auto& [a, b] : match) {
      std::string at =
          "face " + std::to_string(f) + " arc " + a.str() + " to " + b.str();
      if (a.kind == PointRef::OnRail && b.kind == PointRef::OnRail) {
        if (a.rail == b.rail) out.push_back({"chord_rail_return", at});
      } else if (a.kind == PointRef::OnQuad && b.kind == PointRef::OnQuad) {
        if (a.crossing == b.crossing) out.push_back({"chord_ball_return", at});
      } else {
        const PointRef& q = a.kind == PointRef::OnQuad ? a : b;
        const PointRef& r = a.kind == PointRef::OnQuad ? b : a;
        const EdgeInfo& e = d.edge(r.rail.edge);
        if (e.tail.crossing == q.crossing || e.head.crossing == q.crossing)
          out.push_back({"chord_ball_to_edge", at});
      }
    }
  }

  std::map<std::pair<int, int>, std::array<int, 2>> saddle_arcs;
  for (Side side : {Side::Plus, Side::Minus}) {
    SideTrace tr = trace_side(p, side);

    for (int i = 0; i < static_cast<int>(tr.pieces.size()); ++i) {
      const Piece& pc = tr.pieces[i];
      std::string at =
          std::string{side_name(side)} + " arc " + pc.two_cell.str();
      switch (pc.kind) {
        case Piece::BandArc:
        case Piece::PassArc:
          // A section arc with both ends on one rail bounds a bigon with it.
          if (pc.a.cell.kind == CellId::Rail && pc.a.cell == pc.b.cell)
            out.push_back({"band_rail_return",
                           at + " at " + pc.a.cell.str() + "@" +
                               std::to_string(pc.a.pos) + "," +
                               std::to_string(pc.b.pos)});
          break;
        case Piece::CapArc: {
          if (pc.a.cell == pc.b.cell) {
            out.push_back({"cap_quad_return", at});
            break;
          }
          auto& slots = saddle_arcs[{pc.two_cell.a, pc.depth}];
          slots[side == Side::Plus ? 0 : 1] += 1;
          // Neighbouring quadrants only; the saddle crosses the pass.
          if ((pc.b.cell.b - pc.a.cell.b + 4) % 4 != 1)
            out.push_back({"saddle_shape", at + " skips a quadrant"});
          break;
        }
        case Piece::FaceChord:
          break;
      }
    }

    // The two section arcs over each pass must land on distinct circles.
    for (int t = 0; t < d.n(); ++t) {
      int first = -1;
      for (int i = 0; i < static_cast<int>(tr.pieces.size()); ++i) {
        const Piece& pc = tr.pieces[i];
        if (pc.kind != Piece::PassArc || pc.two_cell.a != t) continue;
        if (first < 0) {
          first = i;
        } else if (tr.circle_of_piece[first] == tr.circle_of_piece[i]) {
          out.push_back({"pass_arcs_one_circle",
                         std::string{side_name(side)} + " pass at ball " +
                             std::to_string(t) + ", circle " +
                             std::to_string(tr.circle_of_piece[i])});
        }
      }
    }

    if (d.alternating()) {
      HeightTree ht = build_height_tree(p, tr);
      for (int c = 0; c < ht.circle_count(); ++c) {
        if (!ht.innermost(c)) continue;
        bool cap = false, pass = false;
        for (const CircleStep& st : tr.circles[c]) {
          Piece::Kind k = tr.pieces[st.piece].kind;
          cap = cap || k == Piece::CapArc;
          pass = pass || k == Piece::PassArc;
        }
        std::string at =
            std::string{side_name(side)} + " circle " + std::to_string(c);
        if (cap) out.push_back({"innermost_touches_ball", at});
        if (!pass) out.push_back({"innermost_misses_pass", at});
      }
    }
  }

  for (int t = 0; t < d.n(); ++t)
    for (int i = 1; i <= p.saddle_count(t); ++i) {
      auto it = saddle_arcs.find({t, i});
      if (it == saddle_arcs.end() || it->second[0] != 2 || it->second[1] != 2)
        out.push_back({"saddle_shape", "ball " + std::to_string(t) +
                                           " saddle " + std::to_string(i) +
                                           " lacks its four arcs"});
    }

  if (d.alternating()) {
    // Along each edge both sections switch sides exactly once.
    for (EdgeId e : d.edge_ids()) {
      int comp = d.edge(e).component;
      for (int w = 0; w < 2; ++w) {
        int cnt = 0;
        for (int lr = 0; lr < 2; ++lr)
          for (const SectionId& s : p.rail_transitions(RailKey{e, lr}))
            cnt += s == SectionId{comp, w} ? 1 : 0;
        if (cnt != 1)
          out.push_back({"edge_extra_crossings",
                         "edge " + std::to_string(e) + " section " +
                             std::to_string(w) + " crosses " +
                             std::to_string(cnt) + " times"});
      }
    }
  }

  return out;
}

}  // namespace crossball
