#include "crossball/cell_complex.hpp"

#include <sstream>

namespace crossball {

std::string CellId::str() const {
  std::ostringstream os;
  switch (kind) {
    case Zero: os << "zc(" << a << ',' << b << ',' << c << ')'; break;
    case Rail: os << "e" << a << (b == 0 ? ":L" : ":R"); break;
    case QuadArc: os << "quad(" << a << ',' << b << ')'; break;
    case Meridian: os << "mer(" << a << ',' << b << ')'; break;
    case LongArc: os << "long(" << a << ',' << b << ')'; break;
    case FaceDisk: os << "face" << a; break;
    case EdgeBand: os << "band(e" << a << ')'; break;
    case PassBand: os << "pass(" << a << ')'; break;
    case CapHalf: os << "cap(" << a << ',' << b << ')'; break;
  }
  return os.str();
}

CellComplex::CellComplex(const Diagram& d, Side side)
    : diagram_(&d), side_(side) {
  if (d.n() == 0)
    throw DomainError("cell structure needs at least one crossing");
  if (!d.connected())
    throw DomainError("cell structure needs a connected projection");

  const int n = d.n();
  const int p1 = pass_parity(side);
  auto mod4 = [](int x) { return ((x % 4) + 4) % 4; };

  // 1-cells with their endpoint zero cells.
  for (EdgeId e : d.edge_ids()) {
    const EdgeInfo& info = d.edge(e);
    Dart t0 = info.tail, h0 = info.head;
    ends_[CellId::rail(e, 0)] = {CellId::zero(t0.crossing, t0.slot, 1),
                                 CellId::zero(h0.crossing, h0.slot, 0)};
    ends_[CellId::rail(e, 1)] = {CellId::zero(t0.crossing, t0.slot, 0),
                                 CellId::zero(h0.crossing, h0.slot, 1)};
  }
  for (int t = 0; t < n; ++t) {
    for (int q = 0; q < 4; ++q)
      ends_[CellId::quad_arc(t, q)] = {CellId::zero(t, q, 1),
                                       CellId::zero(t, mod4(q + 1), 0)};
    for (int s = 0; s < 4; ++s)
      ends_[CellId::meridian(t, s)] = {CellId::zero(t, s, 0),
                                       CellId::zero(t, s, 1)};
    for (int w = 0; w < 2; ++w) {
      int a = mod4(p1 + 2 * w);
      ends_[CellId::long_arc(t, w)] = {CellId::zero(t, a, 1),
                                       CellId::zero(t, mod4(a + 2), 0)};
    }
  }
  for (auto& [cell, e] : ends_) {
    (void)e;
    one_cells_.push_back(cell);
  }

  // Face disks: the rail segment for dart d runs zc(d,0) -> zc(twin(d),1),
  // then the corner quad arc continues forward to the next dart's start.
  for (int f = 0; f < static_cast<int>(d.faces().size()); ++f) {
    const Face& face = d.faces()[f];
    std::vector<BoundaryStep> steps;
    for (size_t i = 0; i < face.darts.size(); ++i) {
      Dart dart = face.darts[i];
      EdgeId e = d.edge_at(dart);
      bool is_tail = d.edge(e).tail == dart;
      steps.push_back({CellId::rail(e, is_tail ? 1 : 0), !is_tail});
      steps.push_back({CellId::quad_arc(face.corners[i].crossing,
                                        face.corners[i].q),
                       false});
    }
    bnd_[CellId::face_disk(f)] = std::move(steps);
  }

  // Edge bands: two rails and the two end meridians.
  for (EdgeId e : d.edge_ids()) {
    const EdgeInfo& info = d.edge(e);
    bnd_[CellId::edge_band(e)] = {
        {CellId::rail(e, 0), false},
        {CellId::meridian(info.head.crossing, info.head.slot), false},
        {CellId::rail(e, 1), true},
        {CellId::meridian(info.tail.crossing, info.tail.slot), false},
    };
  }

  // Pass bands and cap halves at each ball.
  for (int t = 0; t < n; ++t) {
    bnd_[CellId::pass_band(t)] = {
        {CellId::meridian(t, p1), false},
        {CellId::long_arc(t, 0), false},
        {CellId::meridian(t, mod4(p1 + 2)), false},
        {CellId::long_arc(t, 1), false},
    };
    for (int w = 0; w < 2; ++w) {
      int a = mod4(p1 + 2 * w);
      bnd_[CellId::cap_half(t, w)] = {
          {CellId::long_arc(t, w), false},
          {CellId::quad_arc(t, mod4(a + 1)), true},
          {CellId::meridian(t, mod4(a + 1)), true},
          {CellId::quad_arc(t, a), true},
      };
    }
  }

  for (auto& [cell, steps] : bnd_) {
    two_cells_.push_back(cell);
    for (const BoundaryStep& st : steps) cob_[st.cell].push_back(cell);
  }
}

const std::vector<BoundaryStep>& CellComplex::boundary(CellId two_cell) const {
  auto it = bnd_.find(two_cell);
  if (it == bnd_.end()) throw DomainError("no such 2-cell: " + two_cell.str());
  return it->second;
}

std::array<CellId, 2> CellComplex::endpoints(CellId one_cell) const {
  auto it = ends_.find(one_cell);
  if (it == ends_.end()) throw DomainError("no such 1-cell: " + one_cell.str());
  return it->second;
}

const std::vector<CellId>& CellComplex::coboundary(CellId one_cell) const {
  auto it = cob_.find(one_cell);
  if (it == cob_.end()) throw DomainError("no such 1-cell: " + one_cell.str());
  return it->second;
}

long CellComplex::euler_characteristic() const {
  return static_cast<long>(zero_cell_count()) -
         static_cast<long>(one_cells_.size()) +
         static_cast<long>(two_cells_.size());
}

}  // namespace crossball
