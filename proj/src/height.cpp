#include "crossball/height.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "crossball/cell_complex.hpp"
#include "crossball/errors.hpp"

namespace crossball {

namespace {

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) {
    for (int i = 0; i < n; ++i) up[i] = i;
  }
  int find(int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  void unite(int a, int b) { up[find(a)] = find(b); }
};

}  // namespace

HeightTree build_height_tree(const SurfacePosition& p, Side side) {
  return build_height_tree(p, trace_side(p, side));
}

HeightTree build_height_tree(const SurfacePosition& p, const SideTrace& tr) {
  const Diagram& d = p.data().diagram;
  CellComplex cx(d, tr.side);

  std::map<CellId, std::vector<int>> by_cell;
  for (int i = 0; i < static_cast<int>(tr.pieces.size()); ++i)
    by_cell[tr.pieces[i].two_cell].push_back(i);

  // One node per piece of a two-cell cut along its arcs: the part against the
  // uncut boundary, plus the part just inside each arc.
  std::map<CellId, int> base;
  int nodes = 0;
  for (CellId c : cx.two_cells()) {
    base[c] = nodes;
    auto it = by_cell.find(c);
    nodes += 1 + (it == by_cell.end() ? 0 : static_cast<int>(it->second.size()));
  }
  UnionFind uf(nodes);

  // Flanking nodes of each arc, recorded while sweeping its two-cell.
  std::vector<std::array<int, 2>> piece_nodes(tr.pieces.size(), {-1, -1});
  // Segments of one-cells between consecutive marked points; each must appear
  // on exactly two two-cells, and joins their local parts.
  std::map<std::pair<CellId, int>, int> seam;

  for (CellId c : cx.two_cells()) {
    std::vector<int> local;  // pieces in this cell
    if (auto it = by_cell.find(c); it != by_cell.end()) local = it->second;

    std::map<MarkedPoint, int> ends;
    for (int i : local) {
      const Piece& pc = tr.pieces[i];
      if (!ends.emplace(pc.a, i).second || !ends.emplace(pc.b, i).second)
        throw DomainError("marked point shared by two arcs of one cell");
    }

    struct Item {
      bool is_point = false;
      CellId cell;
      int idx = 0;  // point: pos on the one-cell; segment: gap index 0..m
    };
    std::vector<Item> items;
    for (const BoundaryStep& st : cx.boundary(c)) {
      int m = p.point_count(st.cell, tr.side);
      for (int k = 0; k <= m; ++k) {
        int seg = st.reversed ? m - k : k;
        items.push_back({false, st.cell, seg});
        if (k < m)
          items.push_back({true, st.cell, st.reversed ? m - 1 - k : k});
      }
    }

    // Arcs nest; sweeping the boundary, the part just inside an arc runs
    // from its first endpoint to its second. The wrap-around part is the
    // one against the start of the sweep.
    auto local_node = [&](int label) {
      if (label < 0) return base[c];
      int at = static_cast<int>(std::find(local.begin(), local.end(), label) -
                                local.begin());
      return base[c] + 1 + at;
    };
    std::vector<int> stack;
    int current = -1;
    for (const Item& it : items) {
      if (!it.is_point) {
        auto [s, fresh] =
            seam.try_emplace({it.cell, it.idx}, local_node(current));
        if (!fresh) {
          if (s->second == -2)
            throw DomainError("one-cell segment shared thrice");
          uf.unite(s->second, local_node(current));
          s->second = -2;
        }
        continue;
      }
      auto e = ends.find(MarkedPoint{it.cell, it.idx});
      if (e == ends.end())
        throw DomainError("marked point without an arc in its cell");
      int pc = e->second;
      if (piece_nodes[pc][0] < 0) {
        piece_nodes[pc] = {local_node(current), local_node(pc)};
        stack.push_back(pc);
        current = pc;
      } else {
        if (stack.empty() || stack.back() != pc)
          throw DomainError("arcs cross inside a cell");
        stack.pop_back();
        current = stack.empty() ? -1 : stack.back();
      }
    }
    if (!stack.empty()) throw DomainError("unclosed arc in a cell");
  }

  for (const auto& [key, state] : seam)
    if (state != -2) throw DomainError("one-cell segment not shared twice");

  std::map<int, int> region_id;
  auto region = [&](int node) {
    int r = uf.find(node);
    auto [it, fresh] = region_id.emplace(r, static_cast<int>(region_id.size()));
    (void)fresh;
    return it->second;
  };

  HeightTree t;
  t.side = tr.side;
  int circles = static_cast<int>(tr.circles.size());
  t.circle_regions.assign(circles, {-1, -1});
  for (int i = 0; i < static_cast<int>(tr.pieces.size()); ++i) {
    int u = region(piece_nodes[i][0]), v = region(piece_nodes[i][1]);
    if (u == v) throw DomainError("circle borders one region twice");
    std::array<int, 2> pair{std::min(u, v), std::max(u, v)};
    auto& slot = t.circle_regions[tr.circle_of_piece[i]];
    if (slot[0] < 0)
      slot = pair;
    else if (slot != pair)
      throw DomainError("circle borders more than two regions");
  }
  t.region_count = static_cast<int>(region_id.size());
  if (t.region_count != circles + 1)
    throw DomainError("regions do not form a tree");

  t.region_circles.assign(t.region_count, {});
  for (int c = 0; c < circles; ++c) {
    t.region_circles[t.circle_regions[c][0]].push_back(c);
    t.region_circles[t.circle_regions[c][1]].push_back(c);
  }

  // Farthest distance from each endpoint without using the circle's edge.
  auto far = [&](int from, int skip) {
    std::vector<int> dist(t.region_count, -1);
    dist[from] = 0;
    std::vector<int> queue{from};
    int best = 0;
    for (size_t h = 0; h < queue.size(); ++h) {
      int r = queue[h];
      for (int c : t.region_circles[r]) {
        if (c == skip) continue;
        int o = t.circle_regions[c][0] ^ t.circle_regions[c][1] ^ r;
        if (dist[o] >= 0) continue;
        dist[o] = dist[r] + 1;
        best = std::max(best, dist[o]);
        queue.push_back(o);
      }
    }
    return best;
  };
  t.heights.assign(circles, {0, 0});
  for (int c = 0; c < circles; ++c)
    t.heights[c] = {far(t.circle_regions[c][0], c),
                    far(t.circle_regions[c][1], c)};
  if (circles) {
    std::vector<char> seen(t.region_count, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    int count = 1;
    for (size_t h = 0; h < queue.size(); ++h)
      for (int c : t.region_circles[queue[h]]) {
        int o = t.circle_regions[c][0] ^ t.circle_regions[c][1] ^ queue[h];
        if (!seen[o]) {
          seen[o] = 1;
          ++count;
          queue.push_back(o);
        }
      }
    if (count != t.region_count) throw DomainError("regions do not form a tree");
  }
  return t;
}

bool check_height1(const HeightTree& t) {
  bool all0 = true, has1 = false;
  for (const auto& h : t.heights) {
    if (std::min(h[0], h[1]) != 0) all0 = false;
    if (h[0] == 1 || h[1] == 1) has1 = true;
  }
  return all0 || has1;
}

std::string height_tree_dot(const HeightTree& t) {
  std::ostringstream out;
  out << "graph heights_" << (t.side == Side::Plus ? "plus" : "minus")
      << " {\n";
  for (int r = 0; r < t.region_count; ++r) out << "  r" << r << ";\n";
  for (int c = 0; c < t.circle_count(); ++c)
    out << "  r" << t.circle_regions[c][0] << " -- r" << t.circle_regions[c][1]
        << " [label=\"c" << c << " " << t.heights[c][0] << "|"
        << t.heights[c][1] << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace crossball
