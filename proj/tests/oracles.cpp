#include "oracles.hpp"

namespace oracles {

namespace {

struct RawWalker {
  const BoundaryComplex& bc;
  const EnumerationConstraints& cons;
  int nF, nI;

  std::vector<char> used_interior, used_bdry, visited_face;
  int total_visits = 0;
  int visit_cap = 0;
  std::vector<CurveArc> arcs;
  bool start_bdry = false;
  int start_cell = -1, start_in = -1;
  std::set<std::string> seen;
  std::vector<NormalCurve> out;

  RawWalker(const BoundaryComplex& b, const EnumerationConstraints& c)
      : bc(b),
        cons(c),
        nF(static_cast<int>(b.interior_faces.size())),
        nI(static_cast<int>(b.interior_edges.size())) {
    used_interior.assign(bc.interior_edges.size(), 0);
    used_bdry.assign(bc.boundary_edges.size(), 0);
    visited_face.assign(bc.boundary_faces.size(), 0);
    visit_cap = cons.max_boundary_visits < 0 ? static_cast<int>(bc.boundary_faces.size())
                                             : cons.max_boundary_visits;
  }

  int side_count(bool bdry, int cell) const {
    return bdry ? static_cast<int>(bc.boundary_faces[cell].sides.size())
                : static_cast<int>(bc.interior_faces[cell].sides.size());
  }

  // (edge-kind boundary?, edge id) of a side.
  std::pair<bool, int> side_edge(bool bdry, int cell, int i) const {
    if (bdry) return {true, bc.boundary_faces[cell].sides[i]};
    const auto& s = bc.interior_faces[cell].sides[i];
    return {s.boundary, s.id};
  }

  std::tuple<bool, int, int> cross(bool bdry, int cell, int i) const {
    if (bdry) {
      const auto& be = bc.boundary_edges[bc.boundary_faces[cell].sides[i]];
      return {false, be.interior_face, be.interior_side};
    }
    const auto& s = bc.interior_faces[cell].sides[i];
    if (s.boundary) {
      const auto& be = bc.boundary_edges[s.id];
      return {true, be.boundary_face, be.boundary_side};
    }
    const auto& ie = bc.interior_edges[s.id];
    int slot = (ie.face[0] == cell && ie.side_index[0] == i) ? 1 : 0;
    return {false, ie.face[slot], ie.side_index[slot]};
  }

  bool filter(const NormalCurve& c) const {
    auto rep = check_normal(c);
    if (!rep.normal()) return false;
    int visits = 0;
    for (const auto& a : c.arcs) {
      if (!a.in_boundary_face) continue;
      visits++;
      CuspClass cls = bc.boundary_faces[a.cell].cls;
      if (cls == CuspClass::KnotStrand && !cons.allow_knot_cusps) return false;
      if (cls == CuspClass::CrossingCircle && !cons.allow_circle_cusps) return false;
    }
    int cap = cons.max_boundary_visits < 0 ? static_cast<int>(bc.boundary_faces.size())
                                           : cons.max_boundary_visits;
    if (visits > cap) return false;
    bool shaded = c.meets_shaded();
    if (cons.require_shaded && !shaded) return false;
    if (cons.shaded == EnumerationConstraints::ShadedPolicy::Forbid && shaded) return false;
    if (cons.shaded == EnumerationConstraints::ShadedPolicy::DiskType) {
      for (const auto& a : c.arcs) {
        if (a.in_boundary_face) continue;
        const auto& f = bc.interior_faces[a.cell];
        if (f.color != FaceColor::Shaded) continue;
        // Disk-type: one endpoint on the circle corner, the other on the
        // interior side not adjacent to it.
        int k = static_cast<int>(f.sides.size());
        int circle_side = -1;
        for (int i = 0; i < k; ++i) {
          if (!f.sides[i].boundary) continue;
          const auto& be = bc.boundary_edges[f.sides[i].id];
          if (bc.boundary_faces[be.boundary_face].cls == CuspClass::CrossingCircle)
            circle_side = i;
        }
        if (circle_side < 0) return false;
        int other = a.in == circle_side ? a.out : (a.out == circle_side ? a.in : -1);
        if (other < 0) return false;
        if (f.sides[other].boundary) return false;
        bool adj = (other - circle_side + k) % k == 1 || (circle_side - other + k) % k == 1;
        if (adj) return false;
      }
    }
    return true;
  }

  // Definitional caps only (normality conditions 4 and 5 plus the visit
  // constraint); everything else is filtered after the fact.
  void walk(bool bdry, int cell, int in) {
    const int k = side_count(bdry, cell);
    for (int outside = 0; outside < k; ++outside) {
      if (outside == in) continue;  // same-side arcs are never normal
      auto [eb, eid] = side_edge(bdry, cell, outside);
      auto [tb, tc, ts] = cross(bdry, cell, outside);
      if (tb == start_bdry && tc == start_cell && ts == start_in) {
        arcs.push_back({bdry, cell, in, outside});
        NormalCurve c;
        c.bc = &bc;
        c.arcs = arcs;
        if (filter(c) && seen.insert(c.word()).second) out.push_back(c);
        arcs.pop_back();
        continue;
      }
      auto& used = eb ? used_bdry : used_interior;
      if (used[eid]) continue;
      if (tb && (visited_face[tc] || total_visits + 1 > visit_cap)) continue;
      used[eid] = 1;
      if (tb) {
        visited_face[tc] = 1;
        total_visits++;
      }
      arcs.push_back({bdry, cell, in, outside});
      walk(tb, tc, ts);
      arcs.pop_back();
      if (tb) {
        visited_face[tc] = 0;
        total_visits--;
      }
      used[eid] = 0;
    }
  }

  void start_from(bool b, int cell, int in) {
    start_bdry = b;
    start_cell = cell;
    start_in = in;
    if (b) {
      if (visit_cap < 1) return;
      visited_face[cell] = 1;
      total_visits++;
    }
    auto entry_edge = [&]() -> std::pair<bool, int> {
      // The edge crossed when entering (cell, in).
      return side_edge(b, cell, in);
    }();
    auto& used = entry_edge.first ? used_bdry : used_interior;
    used[entry_edge.second] = 1;
    walk(b, cell, in);
    used[entry_edge.second] = 0;
    if (b) {
      visited_face[cell] = 0;
      total_visits--;
    }
  }

  void run() {
    for (int cell = 0; cell < nF; ++cell)
      for (int in = 0; in < side_count(false, cell); ++in) start_from(false, cell, in);
    for (size_t cell = 0; cell < bc.boundary_faces.size(); ++cell)
      for (int in = 0; in < side_count(true, static_cast<int>(cell)); ++in)
        start_from(true, static_cast<int>(cell), in);
  }
};

}  // namespace

std::vector<NormalCurve> enumerate_bruteforce(const BoundaryComplex& bc,
                                              const EnumerationConstraints& cons) {
  RawWalker w(bc, cons);
  w.run();
  return std::move(w.out);
}

}  // namespace oracles
