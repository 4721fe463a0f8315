#include "crossball/position.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace crossball {

namespace {

int ix(int sign) { return sign > 0 ? 0 : 1; }

}  // namespace

std::string RailKey::str() const {
  return "e" + std::to_string(edge) + (lr == 0 ? ":L" : ":R");
}

RailKey RailKey::parse_str(const std::string& s) {
  if (s.size() < 4 || s[0] != 'e')
    throw ParseError("bad rail key: " + s);
  size_t colon = s.find(':');
  if (colon == std::string::npos || colon + 2 != s.size())
    throw ParseError("bad rail key: " + s);
  char side = s[colon + 1];
  if (side != 'L' && side != 'R')
    throw ParseError("bad rail key: " + s);
  int edge = 0;
  try {
    size_t used = 0;
    edge = std::stoi(s.substr(1, colon - 1), &used);
    if (used != colon - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw ParseError("bad rail key: " + s);
  }
  return RailKey{edge, side == 'L' ? 0 : 1};
}

std::string PointRef::str() const {
  if (kind == OnRail) return rail.str() + "@" + std::to_string(pos);
  return "quad(" + std::to_string(crossing) + "," + std::to_string(quadrant) +
         ")@" + std::to_string(depth);
}

SurfacePosition::SurfacePosition(PositionData data) : data_(std::move(data)) {
  validate_and_derive();
}

int SurfacePosition::saddle_total() const {
  int k = 0;
  for (int s : data_.saddles) k += s;
  return k;
}

int SurfacePosition::transition_total() const {
  int t = 0;
  for (const auto& [key, list] : data_.rails) t += static_cast<int>(list.size());
  return t;
}

int SurfacePosition::chord_total() const {
  int c = 0;
  for (const auto& [f, match] : data_.faces) c += static_cast<int>(match.size());
  return c;
}

const std::vector<SectionId>& SurfacePosition::rail_transitions(RailKey k) const {
  auto it = data_.rails.find(k);
  return it == data_.rails.end() ? empty_rail_ : it->second;
}

int SurfacePosition::side_before(RailKey k, int pos) const {
  auto it = rail_sides_.find(k);
  if (it == rail_sides_.end() || pos < 0 || pos >= static_cast<int>(it->second.size()))
    throw DomainError("no transition at " + k.str() + "@" + std::to_string(pos));
  return it->second[pos].first;
}

int SurfacePosition::side_after(RailKey k, int pos) const {
  auto it = rail_sides_.find(k);
  if (it == rail_sides_.end() || pos < 0 || pos >= static_cast<int>(it->second.size()))
    throw DomainError("no transition at " + k.str() + "@" + std::to_string(pos));
  return it->second[pos].second;
}

const std::vector<MarkedPoint>& SurfacePosition::section_points(SectionId s) const {
  auto it = section_points_.find(s);
  if (it == section_points_.end())
    throw DomainError("no such section");
  return it->second;
}

const std::vector<SectionId>& SurfacePosition::meridian_sections(CellId meridian) const {
  static const std::vector<SectionId> none;
  auto it = meridian_points_.find(meridian);
  return it == meridian_points_.end() ? none : it->second;
}

const std::vector<PointRef>& SurfacePosition::face_boundary_points(int f) const {
  auto it = face_points_.find(f);
  if (it == face_points_.end())
    throw DomainError("no face " + std::to_string(f));
  return it->second;
}

const std::vector<MatchPair>& SurfacePosition::face_matching(int f) const {
  auto it = data_.faces.find(f);
  return it == data_.faces.end() ? empty_matching_ : it->second;
}

int SurfacePosition::face_of_point(const PointRef& p) const {
  if (p.kind == PointRef::OnRail)
    return p.rail.lr == 0 ? diagram().left_face(p.rail.edge)
                          : diagram().right_face(p.rail.edge);
  return diagram().face_of_corner(Quad{p.crossing, p.quadrant});
}

PointRef SurfacePosition::matched_partner(const PointRef& p) const {
  int f = face_of_point(p);
  for (const auto& [a, b] : face_matching(f)) {
    if (a == p) return b;
    if (b == p) return a;
  }
  throw DomainError("point is not matched: " + p.str());
}

MarkedPoint SurfacePosition::locate(const PointRef& p) const {
  if (p.kind == PointRef::OnRail)
    return MarkedPoint{p.rail.cell(), p.pos};
  int k = data_.saddles[p.crossing];
  int pos = p.quadrant % 2 == 1 ? p.depth - 1 : k - p.depth;
  return MarkedPoint{CellId::quad_arc(p.crossing, p.quadrant), pos};
}

int SurfacePosition::point_count(CellId one_cell, Side side) const {
  switch (one_cell.kind) {
    case CellId::Rail: {
      auto it = data_.rails.find(RailKey{one_cell.a, one_cell.b});
      return it == data_.rails.end() ? 0 : static_cast<int>(it->second.size());
    }
    case CellId::QuadArc:
      return data_.saddles[one_cell.a];
    case CellId::Meridian:
      return one_cell.b % 2 == pass_parity(side) ? 2 : 0;
    case CellId::LongArc:
      return 0;
    default:
      throw DomainError("marked points live on 1-cells: " + one_cell.str());
  }
}

void SurfacePosition::validate_and_derive() {
  const Diagram& d = data_.diagram;
  CellComplex plus(d, Side::Plus);

  if (static_cast<int>(data_.saddles.size()) != d.n())
    throw DomainError("saddle list length must match the crossing count");
  for (int k : data_.saddles)
    if (k < 0) throw DomainError("saddle counts cannot be negative");
  if (!d.free_loops().empty())
    throw DomainError("a component that never enters a crossing ball cannot carry a position");

  std::vector<EdgeId> ids = d.edge_ids();
  std::set<EdgeId> idset(ids.begin(), ids.end());
  for (const auto& [key, list] : data_.rails) {
    if (key.lr != 0 && key.lr != 1)
      throw DomainError("rail side must be 0 or 1");
    if (!idset.count(key.edge))
      throw DomainError("rail names a missing edge: " + key.str());
    int comp = d.edge(key.edge).component;
    for (const SectionId& s : list) {
      if (s.which != 0 && s.which != 1)
        throw DomainError("section label must be 0 or 1 on " + key.str());
      if (s.component != comp)
        throw DomainError("transition section belongs to another component on " +
                          key.str());
    }
  }
  for (const auto& [f, match] : data_.faces) {
    (void)match;
    if (f < 0 || f >= d.face_count())
      throw DomainError("matching names a missing face " + std::to_string(f));
  }

  for (int pass = 0;; ++pass) {
    section_points_.clear();
    rail_sides_.clear();
    side_arcs_[0].clear();
    side_arcs_[1].clear();
    meridian_points_.clear();
    face_points_.clear();

    std::vector<int> swaps;
    for (int comp = 0; comp < d.component_count(); ++comp) {
      // Edge cycle in strand order from the lowest edge.
      EdgeId e0 = -1;
      for (EdgeId e : ids)
        if (d.edge(e).component == comp) { e0 = e; break; }
      std::vector<EdgeId> cycle;
      EdgeId e = e0;
      do {
        cycle.push_back(e);
        e = d.edge_at(d.strand_next(d.edge(e).head));
      } while (e != e0);

      struct Temp {
        std::map<SectionId, std::vector<MarkedPoint>> sec_points;
        std::map<RailKey, std::vector<std::pair<int, int>>> rail_sides;
        std::vector<SweepArc> arcs[2];
        std::map<CellId, std::vector<SectionId>> mer_points;
      };

      auto attempt = [&](std::array<int, 2> init, Temp& T) -> std::string {
        for (int w = 0; w < 2; ++w)
          T.sec_points[SectionId{comp, w}];
        for (EdgeId ce : cycle)
          for (int lr = 0; lr < 2; ++lr) {
            auto it = data_.rails.find(RailKey{ce, lr});
            if (it != data_.rails.end())
              T.rail_sides[RailKey{ce, lr}].assign(it->second.size(), {0, 0});
          }

        Dart tail0 = d.edge(e0).tail;
        int sigma0 = tail0.slot % 2 == 1 ? +1 : -1;
        std::array<std::vector<int>, 2> lists;  // [0] Plus, [1] Minus, left first
        lists[ix(sigma0)] = {init[0], init[1]};
        std::array<int, 2> side{sigma0, sigma0};
        std::array<MarkedPoint, 2> piece_start;
        {
          CellId mer = CellId::meridian(tail0.crossing, tail0.slot);
          for (int i = 0; i < 2; ++i)
            piece_start[init[i]] = MarkedPoint{mer, 1 - i};
        }

        for (size_t idx = 0; idx < cycle.size(); ++idx) {
          EdgeId ce = cycle[idx];
          const std::vector<SectionId>* ev[2] = {nullptr, nullptr};
          for (int lr = 0; lr < 2; ++lr) {
            auto it = data_.rails.find(RailKey{ce, lr});
            if (it != data_.rails.end()) ev[lr] = &it->second;
          }
          size_t at[2] = {0, 0};
          auto legal = [&](int lr) {
            const SectionId& s = (*ev[lr])[at[lr]];
            const std::vector<int>& lst = lists[ix(side[s.which])];
            if (lst.empty()) return false;
            return lr == 0 ? lst.front() == s.which : lst.back() == s.which;
          };
          auto process = [&](int lr) {
            int pos = static_cast<int>(at[lr]);
            const SectionId s = (*ev[lr])[at[lr]++];
            int old = side[s.which];
            RailKey key{ce, lr};
            T.rail_sides[key][pos] = {old, -old};
            MarkedPoint here{key.cell(), pos};
            T.arcs[ix(old)].push_back(
                {CellId::edge_band(ce), piece_start[s.which], here, s});
            T.sec_points[s].push_back(here);
            piece_start[s.which] = here;
            std::vector<int>& from = lists[ix(old)];
            std::vector<int>& to = lists[ix(-old)];
            if (lr == 0) {
              from.erase(from.begin());
              to.insert(to.begin(), s.which);
            } else {
              from.pop_back();
              to.push_back(s.which);
            }
            side[s.which] = -old;
          };
          size_t nl = ev[0] ? ev[0]->size() : 0, nr = ev[1] ? ev[1]->size() : 0;
          while (at[0] < nl || at[1] < nr) {
            if (at[0] < nl && legal(0)) process(0);
            else if (at[1] < nr && legal(1)) process(1);
            else
              return "transitions on edge " + std::to_string(ce) +
                     " violate the section stacking order";
          }

          // Ball passage into the next edge of the cycle.
          Dart h = d.edge(ce).head;
          int t = h.crossing, sin = h.slot, sout = (sin + 2) % 4;
          int sig = sin % 2 == 1 ? +1 : -1;
          if (side[0] != sig || side[1] != sig)
            return "a section enters ball " + std::to_string(t) +
                   " on the wrong side";
          std::vector<int>& lst = lists[ix(sig)];
          CellId hm = CellId::meridian(t, sin), tm = CellId::meridian(t, sout);
          T.mer_points[hm] = {SectionId{comp, lst[0]}, SectionId{comp, lst[1]}};
          T.mer_points[tm] = {SectionId{comp, lst[1]}, SectionId{comp, lst[0]}};
          bool closing = idx + 1 == cycle.size();
          for (int i = 0; i < 2; ++i) {
            int w = lst[i];
            MarkedPoint hp{hm, i}, tp{tm, 1 - i};
            T.arcs[ix(sig)].push_back(
                {CellId::edge_band(ce), piece_start[w], hp, SectionId{comp, w}});
            T.arcs[ix(sig)].push_back(
                {CellId::pass_band(t), hp, tp, SectionId{comp, w}});
            if (!closing) piece_start[w] = tp;
          }
          if (closing && (lst[0] != init[0] || lst[1] != init[1]))
            return "section stacking does not close up around component " +
                   std::to_string(comp);
        }
        return "";
      };

      Temp T;
      std::string err = attempt({0, 1}, T);
      if (!err.empty()) {
        T = Temp{};
        std::string err2 = attempt({1, 0}, T);
        if (!err2.empty()) throw DomainError(err);
      }
      for (auto& [s, pts] : T.sec_points)
        section_points_[s] = std::move(pts);
      for (auto& [key, sides] : T.rail_sides)
        rail_sides_[key] = std::move(sides);
      for (int sd = 0; sd < 2; ++sd)
        side_arcs_[sd].insert(side_arcs_[sd].end(), T.arcs[sd].begin(),
                              T.arcs[sd].end());
      for (auto& [cell, secs] : T.mer_points)
        meridian_points_[cell] = std::move(secs);

      if (section_points_[SectionId{comp, 1}] < section_points_[SectionId{comp, 0}])
        swaps.push_back(comp);
    }

    if (swaps.empty()) break;
    if (pass > 0)
      throw DomainError("section labels failed to stabilize");
    std::set<int> sw(swaps.begin(), swaps.end());
    for (auto& [key, list] : data_.rails)
      for (SectionId& s : list)
        if (sw.count(s.component)) s.which ^= 1;
  }

  // Face boundary marked points in walk order.
  for (int f = 0; f < d.face_count(); ++f) {
    std::vector<PointRef>& pts = face_points_[f];
    for (const BoundaryStep& st : plus.boundary(CellId::face_disk(f))) {
      if (st.cell.kind == CellId::Rail) {
        RailKey key{st.cell.a, st.cell.b};
        int m = static_cast<int>(rail_transitions(key).size());
        for (int i = 0; i < m; ++i)
          pts.push_back(PointRef::on_rail(key, st.reversed ? m - 1 - i : i));
      } else {
        int t = st.cell.a, q = st.cell.b, k = data_.saddles[t];
        for (int p = 0; p < k; ++p)
          pts.push_back(PointRef::on_quad(t, q, q % 2 == 1 ? p + 1 : k - p));
      }
    }
  }

  for (int f = 0; f < d.face_count(); ++f) {
    const std::vector<PointRef>& pts = face_points_[f];
    const std::vector<MatchPair>& match = face_matching(f);
    std::string fname = "face " + std::to_string(f);
    if (pts.empty()) {
      if (!match.empty())
        throw DomainError(fname + " has no marked points but carries a matching");
      continue;
    }
    std::map<PointRef, int> at;
    for (size_t i = 0; i < pts.size(); ++i) at[pts[i]] = static_cast<int>(i);
    std::vector<int> partner(pts.size(), -1);
    for (const auto& [a, b] : match) {
      auto ia = at.find(a), ib = at.find(b);
      if (ia == at.end())
        throw DomainError("matching on " + fname + " uses a point off its boundary: " + a.str());
      if (ib == at.end())
        throw DomainError("matching on " + fname + " uses a point off its boundary: " + b.str());
      if (a == b)
        throw DomainError("matching on " + fname + " pairs a point with itself: " + a.str());
      if (partner[ia->second] != -1)
        throw DomainError("matching on " + fname + " uses a point twice: " + a.str());
      if (partner[ib->second] != -1)
        throw DomainError("matching on " + fname + " uses a point twice: " + b.str());
      partner[ia->second] = ib->second;
      partner[ib->second] = ia->second;
    }
    for (size_t i = 0; i < pts.size(); ++i)
      if (partner[i] == -1)
        throw DomainError("matching on " + fname + " does not cover " + pts[i].str());

    // Chords must be disjoint in the disk: peel innermost pairs.
    int v = static_cast<int>(pts.size());
    std::vector<char> alive(v, 1);
    int remaining = v / 2;
    while (remaining > 0) {
      bool found = false;
      for (int i = 0; i < v && !found; ++i) {
        if (!alive[i]) continue;
        int j = (i + 1) % v;
        while (!alive[j]) j = (j + 1) % v;
        if (j != i && partner[i] == j) {
          alive[i] = alive[j] = 0;
          --remaining;
          found = true;
        }
      }
      if (!found)
        throw DomainError("matching on " + fname + " has crossing arcs");
    }
  }
}

std::vector<int> checkerboard_colors(const Diagram& d) {
  if (d.n() < 1)
    throw DomainError("checkerboard colors need at least one crossing");
  if (!d.connected())
    throw DomainError("checkerboard colors need a connected projection");
  int nf = d.face_count();
  std::vector<std::vector<int>> adj(nf);
  for (EdgeId e : d.edge_ids()) {
    int l = d.left_face(e), r = d.right_face(e);
    adj[l].push_back(r);
    adj[r].push_back(l);
  }
  std::vector<int> col(nf, -1);
  std::deque<int> queue{0};
  col[0] = 0;
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    for (int g : adj[f]) {
      if (col[g] == -1) {
        col[g] = 1 - col[f];
        queue.push_back(g);
      } else if (col[g] == col[f]) {
        throw DomainError("faces are not checkerboard colorable");
      }
    }
  }
  int c0 = static_cast<int>(std::count(col.begin(), col.end(), 0));
  if (nf - c0 < c0)
    for (int& c : col) c = 1 - c;
  return col;
}

SurfacePosition interpolating_position(const Diagram& d, const std::string& color) {
  int target;
  if (color == "black") target = 0;
  else if (color == "white") target = 1;
  else throw DomainError("color must be \"black\" or \"white\"");
  std::vector<int> col = checkerboard_colors(d);
  for (int t = 0; t < d.n(); ++t)
    for (int q = 0; q < 2; ++q)
      if (d.face_of_corner(Quad{t, q}) == d.face_of_corner(Quad{t, q + 2}))
        throw DomainError("diagram not reduced");

  PositionData pd;
  pd.diagram = d;
  pd.saddles.assign(d.n(), 0);

  auto transition_rail = [&](EdgeId e) {
    // Transitions sit on the rail across from the chosen color.
    return RailKey{e, col[d.left_face(e)] == target ? 1 : 0};
  };
  auto pass_sign = [&](Dart dart) { return dart.slot % 2 == 1 ? +1 : -1; };

  std::vector<EdgeId> ids = d.edge_ids();
  for (int comp = 0; comp < d.component_count(); ++comp) {
    EdgeId e0 = -1;
    for (EdgeId e : ids)
      if (d.edge(e).component == comp) { e0 = e; break; }
    std::vector<EdgeId> cycle;
    EdgeId e = e0;
    do {
      cycle.push_back(e);
      e = d.edge_at(d.strand_next(d.edge(e).head));
    } while (e != e0);

    int sigma0 = pass_sign(d.edge(e0).tail);
    std::array<std::vector<int>, 2> lists;
    lists[ix(sigma0)] = {0, 1};
    std::array<int, 2> side{sigma0, sigma0};

    auto shift = [&](int w, int lr) {
      std::vector<int>& from = lists[ix(side[w])];
      std::vector<int>& to = lists[ix(-side[w])];
      if (lr == 0) {
        from.erase(from.begin());
        to.insert(to.begin(), w);
      } else {
        from.pop_back();
        to.push_back(w);
      }
      side[w] = -side[w];
    };

    for (EdgeId ce : cycle) {
      int signext = pass_sign(d.edge(ce).head);
      if (side[0] == signext) continue;  // pass side holds, sections stay put
      RailKey key = transition_rail(ce);
      std::vector<int>& lst = lists[ix(side[0])];  // both sections together here
      int mover1 = key.lr == 0 ? lst.front() : lst.back();
      shift(mover1, key.lr);
      int mover2 = side[0] == signext ? 1 : 0;  // the one still off the pass side
      shift(mover2, key.lr);
      pd.rails[key] = {SectionId{comp, mover1}, SectionId{comp, mover2}};
    }
  }

  // The surface doubles the chosen faces and the crossing bands. Its rim
  // crosses each unchosen face in arcs that hug the corners, so consecutive
  // transitions around the face pair up, offset so no arc returns to its own
  // rail. Chosen faces and the balls stay clear of the surface interior.
  CellComplex plus(d, Side::Plus);
  for (int f = 0; f < d.face_count(); ++f) {
    if (col[f] == target) continue;
    std::vector<PointRef> pts;
    for (const BoundaryStep& st : plus.boundary(CellId::face_disk(f))) {
      if (st.cell.kind != CellId::Rail) continue;
      RailKey key{st.cell.a, st.cell.b};
      auto it = pd.rails.find(key);
      if (it == pd.rails.end()) continue;
      int m = static_cast<int>(it->second.size());
      for (int i = 0; i < m; ++i)
        pts.push_back(PointRef::on_rail(key, st.reversed ? m - 1 - i : i));
    }
    if (pts.empty()) continue;
    std::vector<MatchPair>& pairs = pd.faces[f];
    int m = static_cast<int>(pts.size());
    for (int i = 1; i < m; i += 2) pairs.emplace_back(pts[i], pts[(i + 1) % m]);
  }

  return SurfacePosition(std::move(pd));
}

}  // namespace crossball
