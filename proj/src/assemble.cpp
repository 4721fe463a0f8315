#include "crossball/assemble.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace crossball {

namespace {

struct Dsu {
  std::vector<int> up;
  explicit Dsu(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
  void join(int a, int b) { up[find(a)] = find(b); }
};

}  // namespace

SideTrace trace_side(const SurfacePosition& p, Side side) {
  const Diagram& d = p.diagram();
  SideTrace tr;
  tr.side = side;

  for (int f = 0; f < d.face_count(); ++f) {
    const std::vector<MatchPair>& match = p.face_matching(f);
    for (size_t i = 0; i < match.size(); ++i) {
      Piece pc;
      pc.kind = Piece::FaceChord;
      pc.two_cell = CellId::face_disk(f);
      pc.a = p.locate(match[i].first);
      pc.b = p.locate(match[i].second);
      pc.face = f;
      pc.pair_index = static_cast<int>(i);
      tr.pieces.push_back(pc);
    }
  }
  tr.chord_count = static_cast<int>(tr.pieces.size());

  for (const SweepArc& a : p.side_arcs(side)) {
    Piece pc;
    pc.kind = a.two_cell.kind == CellId::PassBand ? Piece::PassArc : Piece::BandArc;
    pc.two_cell = a.two_cell;
    pc.a = a.a;
    pc.b = a.b;
    pc.section = a.section;
    tr.pieces.push_back(pc);
  }

  for (int t = 0; t < d.n(); ++t) {
    int k = p.saddle_count(t);
    for (int w = 0; w < 2; ++w) {
      int qa = (2 * w + pass_parity(side)) % 4, qb = (qa + 1) % 4;
      for (int i = 1; i <= k; ++i) {
        Piece pc;
        pc.kind = Piece::CapArc;
        pc.two_cell = CellId::cap_half(t, w);
        pc.a = p.locate(PointRef::on_quad(t, qa, i));
        pc.b = p.locate(PointRef::on_quad(t, qb, i));
        pc.depth = i;
        tr.pieces.push_back(pc);
      }
    }
  }

  // Every marked point this sphere sees joins exactly two arcs.
  std::map<MarkedPoint, std::vector<std::pair<int, bool>>> at;
  for (size_t i = 0; i < tr.pieces.size(); ++i) {
    at[tr.pieces[i].a].emplace_back(static_cast<int>(i), false);
    at[tr.pieces[i].b].emplace_back(static_cast<int>(i), true);
  }
  for (const auto& [pt, inc] : at)
    if (inc.size() != 2)
      throw DomainError("internal: marked point " + pt.cell.str() + "@" +
                        std::to_string(pt.pos) + " joins " +
                        std::to_string(inc.size()) + " arcs");

  tr.circle_of_piece.assign(tr.pieces.size(), -1);
  for (size_t start = 0; start < tr.pieces.size(); ++start) {
    if (tr.circle_of_piece[start] != -1) continue;
    int cid = static_cast<int>(tr.circles.size());
    std::vector<CircleStep> steps;
    MarkedPoint origin = tr.pieces[start].a;
    int cur = static_cast<int>(start);
    bool rev = false;
    for (;;) {
      steps.push_back({cur, rev});
      tr.circle_of_piece[cur] = cid;
      MarkedPoint next = rev ? tr.pieces[cur].a : tr.pieces[cur].b;
      if (next == origin) break;
      const auto& inc = at[next];
      auto [q, at_b] = inc[0].first == cur ? inc[1] : inc[0];
      cur = q;
      rev = at_b;
    }
    tr.circles.push_back(std::move(steps));
  }
  return tr;
}

SurfaceShape assemble(const SurfacePosition& p) {
  const Diagram& d = p.diagram();
  SideTrace tp = trace_side(p, Side::Plus);
  SideTrace tm = trace_side(p, Side::Minus);

  int chords = tp.chord_count;
  int K = p.saddle_total();
  int T = p.transition_total();
  int cp = static_cast<int>(tp.circles.size());
  int cm = static_cast<int>(tm.circles.size());
  int ncomp = d.component_count();

  SurfaceShape shape;
  shape.circles_plus = cp;
  shape.circles_minus = cm;
  shape.euler = cp + cm - T / 2 - K;

  // Saddle node offsets per ball.
  std::vector<int> soff(d.n() + 1, 0);
  for (int t = 0; t < d.n(); ++t) soff[t + 1] = soff[t] + p.saddle_count(t);
  auto plus_disk = [&](int c) { return c; };
  auto minus_disk = [&](int c) { return cp + c; };
  auto saddle_node = [&](int t, int depth) { return cp + cm + soff[t] + depth - 1; };
  auto band_node = [&](int c) { return cp + cm + K + c; };
  int nodes = cp + cm + K + ncomp;

  Dsu dsu(nodes);
  for (int j = 0; j < chords; ++j)
    dsu.join(plus_disk(tp.circle_of_piece[j]), minus_disk(tm.circle_of_piece[j]));
  for (const SideTrace* tr : {&tp, &tm}) {
    bool plus = tr->side == Side::Plus;
    for (size_t i = chords; i < tr->pieces.size(); ++i) {
      const Piece& pc = tr->pieces[i];
      int disk = plus ? plus_disk(tr->circle_of_piece[i])
                      : minus_disk(tr->circle_of_piece[i]);
      if (pc.kind == Piece::CapArc)
        dsu.join(disk, saddle_node(pc.two_cell.a, pc.depth));
      else
        dsu.join(disk, band_node(pc.section.component));
    }
  }
  std::vector<int> roots;
  for (int i = 0; i < nodes; ++i) roots.push_back(dsu.find(i));
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  shape.components = static_cast<int>(roots.size());
  shape.connected = shape.components == 1;

  // Orientation parity over the polygon gluing: every arc joins two polygon
  // boundary slots, same direction means the polygons must disagree.
  int n_plus_extra = static_cast<int>(tp.pieces.size()) - chords;
  int n_minus_extra = static_cast<int>(tm.pieces.size()) - chords;
  int fiber_base = chords + n_plus_extra + n_minus_extra;
  int total_edges = fiber_base + ncomp;
  // Plus arcs keep their piece index; minus extras follow the plus extras.
  auto minus_edge = [&](int i) {
    return i < chords ? i : n_plus_extra + i;
  };

  int total_polys = cp + cm + K + ncomp;
  std::vector<std::vector<std::pair<int, bool>>> slots(total_edges);
  auto add_slot = [&](int edge, int poly, bool forward) {
    slots[edge].emplace_back(poly, forward);
  };

  for (int c = 0; c < cp; ++c)
    for (const CircleStep& st : tp.circles[c])
      add_slot(st.piece, c, !st.reversed);
  for (int c = 0; c < cm; ++c)
    for (const CircleStep& st : tm.circles[c])
      add_slot(minus_edge(st.piece), cp + c, !st.reversed);

  // Cap arc lookup per side: (ball, lower quadrant wing, depth) -> edge id.
  std::map<std::array<int, 3>, int> cap_edge[2];
  for (const SideTrace* tr : {&tp, &tm}) {
    int s = static_cast<int>(tr->side);
    for (size_t i = chords; i < tr->pieces.size(); ++i) {
      const Piece& pc = tr->pieces[i];
      if (pc.kind != Piece::CapArc) continue;
      int e = tr->side == Side::Plus ? static_cast<int>(i)
                                     : minus_edge(static_cast<int>(i));
      cap_edge[s][{pc.two_cell.a, pc.two_cell.b, pc.depth}] = e;
    }
  }
  for (int t = 0; t < d.n(); ++t)
    for (int i = 1; i <= p.saddle_count(t); ++i) {
      int poly = cp + cm + soff[t] + i - 1;
      // Chain around the ball: quads 0->1->2->3->0.
      add_slot(cap_edge[static_cast<int>(Side::Minus)][{t, 0, i}], poly, true);
      add_slot(cap_edge[static_cast<int>(Side::Plus)][{t, 0, i}], poly, true);
      add_slot(cap_edge[static_cast<int>(Side::Minus)][{t, 1, i}], poly, true);
      add_slot(cap_edge[static_cast<int>(Side::Plus)][{t, 1, i}], poly, true);
    }

  // Component bands, cut along one tube fiber at the walk start.
  std::vector<EdgeId> ids = d.edge_ids();
  for (int comp = 0; comp < ncomp; ++comp) {
    int poly = cp + cm + K + comp;
    EdgeId e0 = -1;
    for (EdgeId e : ids)
      if (d.edge(e).component == comp) { e0 = e; break; }
    Dart tail0 = d.edge(e0).tail;
    CellId mer = CellId::meridian(tail0.crossing, tail0.slot);
    const std::vector<SectionId>& secs = p.meridian_sections(mer);

    int fiber = fiber_base + comp;
    add_slot(fiber, poly, true);
    for (int w = 1; w >= 0; --w) {
      SectionId s{comp, w};
      // Arcs of this section keyed by their strandwise start point.
      std::map<MarkedPoint, std::pair<int, const Piece*>> from;
      for (const SideTrace* tr : {&tp, &tm})
        for (size_t i = chords; i < tr->pieces.size(); ++i) {
          const Piece& pc = tr->pieces[i];
          if (pc.kind == Piece::CapArc || !(pc.section == s)) continue;
          int e = tr->side == Side::Plus ? static_cast<int>(i)
                                         : minus_edge(static_cast<int>(i));
          from[pc.a] = {e, &pc};
        }
      int pos = secs[0] == s ? 0 : 1;
      MarkedPoint start{mer, pos};
      std::vector<int> chain;
      MarkedPoint cur = start;
      do {
        auto it = from.find(cur);
        if (it == from.end())
          throw DomainError("internal: section chain breaks at " +
                            cur.cell.str());
        chain.push_back(it->second.first);
        cur = it->second.second->b;
      } while (!(cur == start));
      if (w == 1) {
        for (int e : chain) add_slot(e, poly, true);
        add_slot(fiber, poly, false);
      } else {
        for (auto it = chain.rbegin(); it != chain.rend(); ++it)
          add_slot(*it, poly, false);
      }
    }
  }

  for (int e = 0; e < total_edges; ++e)
    if (slots[e].size() != 2)
      throw DomainError("internal: arc " + std::to_string(e) + " glued " +
                        std::to_string(slots[e].size()) + " times");

  std::vector<int> color(total_polys, -1);
  bool orientable = true;
  std::vector<std::vector<std::pair<int, int>>> adj(total_polys);
  for (int e = 0; e < total_edges; ++e) {
    auto [p1, f1] = slots[e][0];
    auto [p2, f2] = slots[e][1];
    int rel = f1 == f2 ? 1 : 0;
    if (p1 == p2) {
      if (rel == 1) orientable = false;
      continue;
    }
    adj[p1].emplace_back(p2, rel);
    adj[p2].emplace_back(p1, rel);
  }
  for (int start = 0; start < total_polys && orientable; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::vector<int> stack{start};
    while (!stack.empty() && orientable) {
      int v = stack.back();
      stack.pop_back();
      for (auto [u, rel] : adj[v]) {
        int want = color[v] ^ rel;
        if (color[u] == -1) {
          color[u] = want;
          stack.push_back(u);
        } else if (color[u] != want) {
          orientable = false;
        }
      }
    }
  }
  shape.orientable = orientable;

  // Independent count of the same characteristic from the cell structure.
  long verts = T + 4L * K + 8L * d.n();
  long edges = chords + static_cast<long>(p.side_arcs(Side::Plus).size()) +
               static_cast<long>(p.side_arcs(Side::Minus).size()) + 4L * K +
               ncomp;
  long cells = total_polys;
  if (verts - edges + cells != shape.euler)
    throw DomainError("internal: cell count disagrees with the circle count");

  if (shape.connected)
    shape.genus = orientable ? static_cast<int>((2 - shape.euler) / 2)
                             : static_cast<int>(2 - shape.euler);
  return shape;
}

}  // namespace crossball
