#include "crossball/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace crossball {

namespace {

Dart rot2(Dart d) { return Dart{d.crossing, (d.slot + 2) % 4}; }

int find_rep(std::map<EdgeId, EdgeId>& parent, EdgeId e) {
  if (!parent.count(e)) return e;
  EdgeId r = e;
  while (parent.count(r) && parent[r] != r) r = parent[r];
  while (parent.count(e) && parent[e] != r) {
    EdgeId nxt = parent[e];
    parent[e] = r;
    e = nxt;
  }
  return r;
}

// Rewiring crossings can leave a row whose under-strand enters at slot 2;
// rotating such a row by two slots names the same crossing with the
// under-strand entering at slot 0 again.
std::vector<std::array<EdgeId, 4>> rotate_under_in(
    std::vector<std::array<EdgeId, 4>> rows) {
  std::map<EdgeId, std::vector<Dart>> occ;
  for (int c = 0; c < static_cast<int>(rows.size()); ++c)
    for (int s = 0; s < 4; ++s) occ[rows[c][s]].push_back(Dart{c, s});
  for (auto& [e, v] : occ)
    if (v.size() != 2)
      throw ParseError("edge " + std::to_string(e) +
                       " appears " + std::to_string(v.size()) + " times");

  auto twin = [&](Dart d) {
    auto& v = occ[rows[d.crossing][d.slot]];
    return v[0] == d ? v[1] : v[0];
  };
  auto didx = [&](Dart d) { return d.crossing * 4 + d.slot; };
  std::vector<char> seen(4 * rows.size(), 0), arrival(4 * rows.size(), 0);
  for (int c = 0; c < static_cast<int>(rows.size()); ++c)
    for (int s = 0; s < 4; ++s) {
      Dart d0{c, s};
      if (seen[didx(d0)]) continue;
      std::vector<Dart> orb;
      Dart d = d0;
      do {
        orb.push_back(d);
        seen[didx(d)] = 1;
        d = twin(Dart{d.crossing, (d.slot + 2) % 4});
      } while (!(d == d0));
      for (Dart a : orb) seen[didx(twin(a))] = 1;
      EdgeId emin = rows[orb[0].crossing][orb[0].slot];
      for (Dart a : orb) emin = std::min(emin, rows[a.crossing][a.slot]);
      bool orb_has_second = false;
      for (Dart a : orb)
        if (a == occ[emin][1]) orb_has_second = true;
      for (Dart a : orb) arrival[didx(orb_has_second ? a : twin(a))] = 1;
    }

  for (auto& row : rows) {
    int c = static_cast<int>(&row - rows.data());
    if (arrival[didx(Dart{c, 2})])
      row = {row[2], row[3], row[0], row[1]};
  }
  return rows;
}

}  // namespace

Diagram Diagram::parse_pd(const std::string& text) {
  std::vector<std::array<EdgeId, 4>> xs;
  std::vector<EdgeId> loops;

  size_t i = 0;
  auto err = [&](const std::string& msg) {
    std::ostringstream os;
    os << "PD parse error at offset " << i << ": " << msg;
    return ParseError(os.str());
  };
  auto skip = [&] {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };

  skip();
  char wrapper_close = 0;
  if (text.compare(i, 2, "PD") == 0) {
    i += 2;
    skip();
    if (i >= text.size() || (text[i] != '(' && text[i] != '['))
      throw err("expected '[' after PD");
    wrapper_close = text[i] == '(' ? ')' : ']';
    ++i;
  }

  bool saw_token = false;
  while (true) {
    skip();
    if (i >= text.size()) {
      if (wrapper_close) throw err("unclosed PD bracket");
      break;
    }
    if (wrapper_close && text[i] == wrapper_close) {
      ++i;
      skip();
      if (i != text.size()) throw err("trailing text after PD bracket");
      break;
    }
    char kind = text[i];
    if (kind != 'X' && kind != 'U')
      throw err(std::string("expected token X or U, found '") + text[i] + "'");
    ++i;
    skip();
    if (i >= text.size() || (text[i] != '(' && text[i] != '['))
      throw err("expected '(' after token name");
    char close = text[i] == '(' ? ')' : ']';
    ++i;
    std::vector<EdgeId> nums;
    while (true) {
      skip();
      if (i >= text.size()) throw err("unclosed token bracket");
      if (text[i] == close) {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw err("expected edge label");
      long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 1000000) throw err("edge label too large");
        ++i;
      }
      nums.push_back(static_cast<EdgeId>(v));
    }
    if (kind == 'X') {
      if (nums.size() != 4) throw err("X token needs 4 edge labels");
      xs.push_back({nums[0], nums[1], nums[2], nums[3]});
    } else {
      if (nums.size() != 1) throw err("U token needs 1 edge label");
      loops.push_back(nums[0]);
    }
    saw_token = true;
  }
  if (!saw_token) throw ParseError("PD parse error: no tokens");
  return from_data(std::move(xs), std::move(loops));
}

Diagram Diagram::from_data(std::vector<std::array<EdgeId, 4>> crossings,
                           std::vector<EdgeId> free_loops) {
  Diagram d;
  d.xs_ = std::move(crossings);
  d.loops_ = std::move(free_loops);
  d.build();
  return d;
}

int Diagram::edge_index(EdgeId e) const {
  if (e < 0 || e >= static_cast<int>(edge_index_of_id_.size()) ||
      edge_index_of_id_[e] < 0)
    throw DomainError("unknown edge label " + std::to_string(e));
  return edge_index_of_id_[e];
}

const EdgeInfo& Diagram::edge(EdgeId e) const { return edge_info_[edge_index(e)]; }

std::vector<EdgeId> Diagram::edge_ids() const { return sorted_edges_; }

Dart Diagram::twin(Dart d) const {
  const auto& o = occ_[edge_index(edge_at(d))];
  return o[0] == d ? o[1] : o[0];
}

Dart Diagram::strand_next(Dart head_end) const {
  // head_end is where a strand enters a crossing; it leaves two slots on.
  return twin(rot2(head_end));
}

void Diagram::build() {
  if (xs_.empty() && loops_.empty()) throw ParseError("diagram has no strands");

  EdgeId max_id = 0;
  auto note_id = [&](EdgeId e) {
    if (e < 0) throw ParseError("negative edge label");
    max_id = std::max(max_id, e);
  };
  for (auto& x : xs_)
    for (EdgeId e : x) note_id(e);
  for (EdgeId e : loops_) note_id(e);

  std::vector<int> cross_occ(max_id + 1, 0), loop_occ(max_id + 1, 0);
  for (auto& x : xs_)
    for (EdgeId e : x) ++cross_occ[e];
  for (EdgeId e : loops_) ++loop_occ[e];

  sorted_edges_.clear();
  for (EdgeId e = 0; e <= max_id; ++e) {
    int c = cross_occ[e], l = loop_occ[e];
    if (c == 0 && l == 0) continue;
    if (c > 0 && l > 0)
      throw ParseError("edge " + std::to_string(e) +
                       " appears both at a crossing and as a free circle");
    if (l > 1)
      throw ParseError("free circle label " + std::to_string(e) + " repeated");
    if (c != 0 && c != 2)
      throw ParseError("edge " + std::to_string(e) + " appears " +
                       std::to_string(c) +
                       " times at crossings; every edge label must appear exactly twice");
    sorted_edges_.push_back(e);
  }

  edge_index_of_id_.assign(max_id + 1, -1);
  for (size_t k = 0; k < sorted_edges_.size(); ++k)
    edge_index_of_id_[sorted_edges_[k]] = static_cast<int>(k);
  edge_info_.assign(sorted_edges_.size(), EdgeInfo{});

  occ_.assign(sorted_edges_.size(), {Dart{}, Dart{}});
  std::vector<int> occ_n(sorted_edges_.size(), 0);
  for (int c = 0; c < n(); ++c)
    for (int s = 0; s < 4; ++s) {
      int k = edge_index_of_id_[xs_[c][s]];
      occ_[k][occ_n[k]++] = Dart{c, s};
    }

  // Strand cycles are orbits of the arrival step F(d) = twin(rot2(d)); the
  // two directions of one cycle are twin images of each other. Slot parity
  // forces the direction when the cycle ever runs under a crossing.
  auto didx = [](Dart d) { return d.crossing * 4 + d.slot; };
  std::vector<char> seen(4 * n(), 0);
  struct Cycle {
    std::vector<Dart> arrivals;
    EdgeId min_edge;
  };
  std::vector<Cycle> cycles;

  for (int c = 0; c < n(); ++c)
    for (int s = 0; s < 4; ++s) {
      Dart d0{c, s};
      if (seen[didx(d0)]) continue;
      std::vector<Dart> orb;
      std::vector<char> in_orb(4 * n(), 0);
      Dart d = d0;
      do {
        orb.push_back(d);
        seen[didx(d)] = 1;
        in_orb[didx(d)] = 1;
        d = twin(rot2(d));
      } while (!(d == d0));
      for (Dart a : orb) seen[didx(twin(a))] = 1;

      bool fwd_ok = true, rev_ok = true;
      for (Dart a : orb)
        for (Dart e : {a, twin(a)}) {
          if (e.slot % 2 != 0) continue;
          bool in_fwd = in_orb[didx(e)];
          if (e.slot == 0) {
            fwd_ok = fwd_ok && in_fwd;
            rev_ok = rev_ok && !in_fwd;
          } else {
            fwd_ok = fwd_ok && !in_fwd;
            rev_ok = rev_ok && in_fwd;
          }
        }
      if (!fwd_ok && !rev_ok)
        throw ParseError("strand orientations conflict around a component");

      EdgeId emin = max_id + 1;
      for (Dart a : orb) emin = std::min(emin, edge_at(a));
      bool use_fwd;
      if (fwd_ok && rev_ok) {
        // Never an under-strand: orient so the smallest edge leaves from its
        // first stored occurrence.
        Dart second = occ_[edge_index_of_id_[emin]][1];
        use_fwd = in_orb[didx(second)];
      } else {
        use_fwd = fwd_ok;
      }

      Cycle cyc;
      cyc.min_edge = emin;
      for (Dart a : orb) cyc.arrivals.push_back(use_fwd ? a : twin(a));
      cycles.push_back(std::move(cyc));
    }

  for (auto& cyc : cycles)
    for (Dart a : cyc.arrivals) {
      EdgeInfo& info = edge_info_[edge_index_of_id_[edge_at(a)]];
      if (info.head.crossing != -1)
        throw ParseError("strand passes edge " + std::to_string(edge_at(a)) +
                         " twice in conflicting directions");
      info.head = a;
      info.tail = twin(a);
    }

  std::sort(cycles.begin(), cycles.end(),
            [](const Cycle& a, const Cycle& b) { return a.min_edge < b.min_edge; });
  int comp = 0;
  for (auto& cyc : cycles) {
    for (Dart a : cyc.arrivals)
      edge_info_[edge_index_of_id_[edge_at(a)]].component = comp;
    ++comp;
  }
  for (EdgeId e : loops_) edge_info_[edge_index_of_id_[e]].component = comp++;
  component_count_ = comp;

  // Projection pieces: crossings joined by shared edges, plus free circles.
  std::vector<int> piece(n());
  std::iota(piece.begin(), piece.end(), 0);
  auto proot = [&](int v) {
    while (piece[v] != v) v = piece[v] = piece[piece[v]];
    return v;
  };
  for (size_t k = 0; k < sorted_edges_.size(); ++k) {
    if (occ_n[k] == 0) continue;
    piece[proot(occ_[k][0].crossing)] = proot(occ_[k][1].crossing);
  }
  piece_count_ = static_cast<int>(loops_.size());
  for (int c = 0; c < n(); ++c)
    if (proot(c) == c) ++piece_count_;

  // Faces: orbits of next(d) = rotate+1(twin(d)); the orbit keeps its region
  // on the right of each dart and sweeps the quadrant of each twin dart.
  face_of_dart_.assign(n(), {-1, -1, -1, -1});
  faces_.clear();
  for (int c = 0; c < n(); ++c)
    for (int s = 0; s < 4; ++s) {
      if (face_of_dart_[c][s] != -1) continue;
      int f = static_cast<int>(faces_.size());
      Face face;
      Dart d{c, s};
      do {
        face_of_dart_[d.crossing][d.slot] = f;
        face.darts.push_back(d);
        Dart t = twin(d);
        face.corners.push_back(Quad{t.crossing, t.slot});
        d = Dart{t.crossing, (t.slot + 1) % 4};
      } while (!(d == Dart{c, s}));
      faces_.push_back(std::move(face));
    }

  // Euler count per piece rejects maps with no planar drawing.
  if (n() > 0) {
    std::map<int, std::array<int, 3>> vef;
    for (int c = 0; c < n(); ++c) ++vef[proot(c)][0];
    for (size_t k = 0; k < sorted_edges_.size(); ++k)
      if (occ_n[k] > 0) ++vef[proot(occ_[k][0].crossing)][1];
    for (auto& face : faces_) ++vef[proot(face.darts[0].crossing)][2];
    for (auto& [root, counts] : vef)
      if (counts[0] - counts[1] + counts[2] != 2)
        throw ParseError("projection piece has no planar drawing");
  }
}

int Diagram::face_of_dart(Dart d) const {
  if (d.crossing < 0 || d.crossing >= n() || d.slot < 0 || d.slot >= 4)
    throw DomainError("dart out of range");
  return face_of_dart_[d.crossing][d.slot];
}

int Diagram::left_face(EdgeId e) const {
  const EdgeInfo& info = edge(e);
  if (info.head.crossing == -1) throw DomainError("free circle has no crossing faces");
  return face_of_dart(info.head);
}

int Diagram::right_face(EdgeId e) const {
  const EdgeInfo& info = edge(e);
  if (info.tail.crossing == -1) throw DomainError("free circle has no crossing faces");
  return face_of_dart(info.tail);
}

int Diagram::face_count() const {
  int edges = 0;
  for (const auto& info : edge_info_)
    if (info.head.crossing != -1) ++edges;
  return 1 + piece_count_ - n() + edges;
}

bool Diagram::alternating() const {
  for (size_t k = 0; k < sorted_edges_.size(); ++k) {
    const EdgeInfo& info = edge_info_[k];
    if (info.head.crossing == -1) continue;
    if (info.head.slot % 2 == info.tail.slot % 2) return false;
  }
  return true;
}

std::vector<int> Diagram::nugatory_crossings() const {
  std::vector<int> out;
  for (int c = 0; c < n(); ++c) {
    auto f = [&](int q) { return face_of_corner(Quad{c, q}); };
    if (f(0) == f(2) || f(1) == f(3)) out.push_back(c);
  }
  return out;
}

Diagram Diagram::smoothed(int crossing, char type) const {
  if (crossing < 0 || crossing >= n())
    throw DomainError("no crossing " + std::to_string(crossing));
  if (type != 'A' && type != 'B')
    throw DomainError("smoothing type must be 'A' or 'B'");

  const auto& x = xs_[crossing];
  std::array<std::array<int, 2>, 2> joins =
      type == 'A' ? std::array<std::array<int, 2>, 2>{{{0, 1}, {2, 3}}}
                  : std::array<std::array<int, 2>, 2>{{{0, 3}, {1, 2}}};

  std::map<EdgeId, EdgeId> parent;
  auto unite = [&](EdgeId a, EdgeId b) {
    EdgeId ra = find_rep(parent, a), rb = find_rep(parent, b);
    if (ra == rb) return;
    if (ra > rb) std::swap(ra, rb);
    parent[rb] = ra;
    parent.try_emplace(ra, ra);
  };
  for (auto& j : joins) unite(x[j[0]], x[j[1]]);

  std::vector<std::array<EdgeId, 4>> new_xs;
  for (int c = 0; c < n(); ++c) {
    if (c == crossing) continue;
    std::array<EdgeId, 4> row;
    for (int s = 0; s < 4; ++s) row[s] = find_rep(parent, xs_[c][s]);
    new_xs.push_back(row);
  }

  std::map<EdgeId, int> remaining;
  for (int s = 0; s < 4; ++s) remaining.try_emplace(find_rep(parent, x[s]), 0);
  for (auto& row : new_xs)
    for (EdgeId e : row)
      if (auto it = remaining.find(e); it != remaining.end()) ++it->second;

  std::vector<EdgeId> new_loops = loops_;
  for (auto& [rep, cnt] : remaining)
    if (cnt == 0) new_loops.push_back(rep);

  return from_data(rotate_under_in(std::move(new_xs)), std::move(new_loops));
}

Diagram Diagram::switched(int crossing) const {
  if (crossing < 0 || crossing >= n())
    throw DomainError("no crossing " + std::to_string(crossing));
  // The over-strand becomes the under-strand, so its entry slot rotates to 0.
  int k = edge(edge_at(Dart{crossing, 1})).head == Dart{crossing, 1} ? 1 : 3;
  std::vector<std::array<EdgeId, 4>> new_xs = xs_;
  std::array<EdgeId, 4> old = new_xs[crossing];
  for (int s = 0; s < 4; ++s) new_xs[crossing][s] = old[(s + k) % 4];
  return from_data(std::move(new_xs), loops_);
}

std::string Diagram::to_pd() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : xs_) {
    if (!first) os << ' ';
    os << "X(" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ')';
    first = false;
  }
  for (EdgeId e : loops_) {
    if (!first) os << ' ';
    os << "U(" << e << ')';
    first = false;
  }
  return os.str();
}

}  // namespace crossball
