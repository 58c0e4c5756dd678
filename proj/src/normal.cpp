#include "auglink/normal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace auglink {

namespace {

// Cells are addressed as interior faces [0, nF) then boundary faces
// [nF, nF + nB). Crossings (transverse edge intersections) as interior edges
// [0, nI) then boundary edges [nI, nI + nBE).
struct Cells {
  const BoundaryComplex& bc;
  int nF, nB, nI, nBE;

  explicit Cells(const BoundaryComplex& b)
      : bc(b),
        nF(static_cast<int>(b.interior_faces.size())),
        nB(static_cast<int>(b.boundary_faces.size())),
        nI(static_cast<int>(b.interior_edges.size())),
        nBE(static_cast<int>(b.boundary_edges.size())) {}

  int side_count(bool bdry, int cell) const {
    return bdry ? static_cast<int>(bc.boundary_faces[cell].sides.size())
                : static_cast<int>(bc.interior_faces[cell].sides.size());
  }
  // Crossing id of side `i` of a cell.
  int crossing_id(bool bdry, int cell, int i) const {
    if (bdry) return nI + bc.boundary_faces[cell].sides[i];
    const auto& s = bc.interior_faces[cell].sides[i];
    return s.boundary ? nI + s.id : s.id;
  }
  // Cross side `i`: the cell and entry side on the other side.
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
  bool shaded(int cell) const { return bc.interior_faces[cell].color == FaceColor::Shaded; }
};

using Triple = std::array<int, 3>;

std::vector<Triple> encode(const Cells& cells, const std::vector<CurveArc>& arcs) {
  std::vector<Triple> word;
  word.reserve(arcs.size());
  for (const auto& a : arcs)
    word.push_back({a.in_boundary_face ? cells.nF + a.cell : a.cell, a.in, a.out});
  return word;
}

std::vector<Triple> canonical_word(std::vector<Triple> word) {
  auto rotations_min = [](const std::vector<Triple>& w) {
    std::vector<Triple> best = w;
    std::vector<Triple> cur = w;
    for (size_t r = 1; r < w.size(); ++r) {
      std::rotate(cur.begin(), cur.begin() + 1, cur.end());
      if (cur < best) best = cur;
    }
    return best;
  };
  std::vector<Triple> rev(word.rbegin(), word.rend());
  for (auto& t : rev) std::swap(t[1], t[2]);
  auto a = rotations_min(word);
  auto b = rotations_min(rev);
  return a < b ? a : b;
}

// Chords (a0,a1), (b0,b1) on a cycle of length k interleave iff exactly one
// endpoint of b lies strictly between a0 and a1.
bool interleaves(int a0, int a1, int b0, int b1, int k) {
  auto between = [&](int x) {
    int d_a1 = (a1 - a0 + k) % k;
    int d_x = (x - a0 + k) % k;
    return d_x > 0 && d_x < d_a1;
  };
  return between(b0) != between(b1);
}

}  // namespace

int NormalCurve::interior_edge_crossings() const {
  int endpoints = 0;
  for (const auto& a : arcs) {
    if (a.in_boundary_face) continue;
    const auto& sides = bc->interior_faces[a.cell].sides;
    endpoints += !sides[a.in].boundary;
    endpoints += !sides[a.out].boundary;
  }
  return endpoints / 2;
}

int NormalCurve::boundary_face_visits() const {
  int m = 0;
  for (const auto& a : arcs) m += a.in_boundary_face;
  return m;
}

int NormalCurve::crossings_of_edge(int interior_edge) const {
  int endpoints = 0;
  for (const auto& a : arcs) {
    if (a.in_boundary_face) continue;
    const auto& sides = bc->interior_faces[a.cell].sides;
    if (!sides[a.in].boundary && sides[a.in].id == interior_edge) endpoints++;
    if (!sides[a.out].boundary && sides[a.out].id == interior_edge) endpoints++;
  }
  return endpoints / 2;
}

std::vector<CuspSegment> NormalCurve::cusp_segments() const {
  std::vector<CuspSegment> out;
  for (const auto& a : arcs) {
    if (!a.in_boundary_face) continue;
    const auto& bf = bc->boundary_faces[a.cell];
    auto side_color = [&](int i) {
      const auto& be = bc->boundary_edges[bf.sides[i]];
      return bc->interior_faces[be.interior_face].color;
    };
    int shaded_sides = (side_color(a.in) == FaceColor::Shaded) +
                       (side_color(a.out) == FaceColor::Shaded);
    CuspSegment seg;
    seg.cls = bf.cls;
    seg.boundary_face = a.cell;
    seg.region = bf.region;
    seg.kind = shaded_sides == 0 ? SegmentKind::SParallel
                                 : (shaded_sides == 1 ? SegmentKind::Diagonal
                                                      : SegmentKind::WParallel);
    out.push_back(seg);
  }
  return out;
}

int NormalCurve::circle_segment_count() const {
  int k = 0;
  for (const auto& s : cusp_segments()) k += s.cls == CuspClass::CrossingCircle;
  return k;
}

bool NormalCurve::meets_shaded() const {
  for (const auto& a : arcs)
    if (!a.in_boundary_face && bc->interior_faces[a.cell].color == FaceColor::Shaded) return true;
  return false;
}

std::string NormalCurve::word() const {
  Cells cells(*bc);
  auto w = canonical_word(encode(cells, arcs));
  std::ostringstream out;
  for (const auto& t : w) {
    if (t[0] >= cells.nF)
      out << 'B' << (t[0] - cells.nF);
    else
      out << (bc->interior_faces[t[0]].color == FaceColor::Shaded ? 'S' : 'W') << t[0];
    out << '(' << t[1] << '>' << t[2] << ") ";
  }
  std::string s = out.str();
  if (!s.empty()) s.pop_back();
  return s;
}

NormalityReport check_normal(const NormalCurve& c) {
  NormalityReport r;
  if (c.contained_in_face.has_value()) {
    r.condition_ok[1] = false;
    r.violations.push_back("curve lies entirely in face " +
                           std::to_string(*c.contained_in_face));
    return r;
  }
  if (c.arcs.empty()) throw NormalCurveError("open word: curve has no arcs");
  Cells cells(*c.bc);

  // Closing transitions must be consistent.
  const int L = static_cast<int>(c.arcs.size());
  for (int k = 0; k < L; ++k) {
    const auto& a = c.arcs[k];
    const auto& b = c.arcs[(k + 1) % L];
    auto [tb, tc, ts] = cells.cross(a.in_boundary_face, a.cell, a.out);
    if (tb != b.in_boundary_face || tc != b.cell || ts != b.in)
      throw NormalCurveError("open word: arc " + std::to_string(k) +
                             " does not continue into arc " + std::to_string((k + 1) % L));
  }

  std::map<int, int> edge_crossings;    // interior edge -> count
  std::map<int, int> bdry_face_visits;  // boundary face -> count
  for (int k = 0; k < L; ++k) {
    const auto& a = c.arcs[k];
    if (a.in == a.out) {
      r.condition_ok[2] = false;
      r.violations.push_back("arc " + std::to_string(k) + " has both endpoints on one side");
    }
    if (a.in_boundary_face) {
      bdry_face_visits[a.cell]++;
      continue;
    }
    const auto& sides = c.bc->interior_faces[a.cell].sides;
    const int k_sides = static_cast<int>(sides.size());
    bool adjacent = (a.out - a.in + k_sides) % k_sides == 1 ||
                    (a.in - a.out + k_sides) % k_sides == 1;
    if (adjacent && sides[a.in].boundary != sides[a.out].boundary) {
      r.condition_ok[2] = false;
      r.violations.push_back("arc " + std::to_string(k) +
                             " runs between a boundary face and an adjacent edge");
    }
    if (!sides[a.in].boundary) edge_crossings[sides[a.in].id] += 1;
    if (!sides[a.out].boundary) edge_crossings[sides[a.out].id] += 1;
  }
  for (auto& [e, twice] : edge_crossings) {
    if (twice / 2 > 1) {
      r.condition_ok[3] = false;
      r.violations.push_back("interior edge " + std::to_string(e) + " crossed " +
                             std::to_string(twice / 2) + " times");
    }
  }
  for (auto& [b, k] : bdry_face_visits) {
    if (k > 1) {
      r.condition_ok[4] = false;
      r.violations.push_back("boundary face " + std::to_string(b) + " visited " +
                             std::to_string(k) + " times");
    }
  }

  // Embeddedness: arcs in one cell must be pairwise non-interleaved.
  std::map<std::pair<bool, int>, std::vector<std::pair<int, int>>> per_cell;
  for (const auto& a : c.arcs) per_cell[{a.in_boundary_face, a.cell}].push_back({a.in, a.out});
  for (auto& [cell, chords] : per_cell) {
    int k_sides = cells.side_count(cell.first, cell.second);
    for (size_t i = 0; i < chords.size(); ++i)
      for (size_t j = i + 1; j < chords.size(); ++j)
        if (interleaves(chords[i].first, chords[i].second, chords[j].first, chords[j].second,
                        k_sides)) {
          r.embedded = false;
          r.violations.push_back("arcs interleave in a cell; curve is not embedded");
        }
  }
  return r;
}

// --- enumeration -----------------------------------------------------------

namespace {

struct Enumerator {
  const BoundaryComplex& bc;
  Cells cells;
  EnumerationConstraints cons;
  int max_visits;

  std::vector<char> used;          // crossing ids
  std::vector<char> face_visited;  // boundary faces
  int total_visits = 0;
  std::vector<CurveArc> arcs;
  std::map<std::pair<bool, int>, std::vector<std::pair<int, int>>> chords;
  // disk-type pair per shaded interior face: (circle corner side, opposite side)
  std::vector<std::pair<int, int>> disk_pair;

  int start_crossing = -1;
  bool start_bdry = false;
  int start_cell = -1, start_in = -1;

  std::set<std::vector<Triple>> seen;
  std::vector<NormalCurve> out;

  Enumerator(const BoundaryComplex& b, const EnumerationConstraints& c)
      : bc(b), cells(b), cons(c) {
    max_visits = cons.max_boundary_visits < 0 ? cells.nB : cons.max_boundary_visits;
    if (cons.max_boundary_visits > cells.nB)
      throw NormalCurveError("max boundary-face visits " +
                             std::to_string(cons.max_boundary_visits) + " exceeds the " +
                             std::to_string(cells.nB) + " boundary faces");
    used.assign(cells.nI + cells.nBE, 0);
    face_visited.assign(cells.nB, 0);
    disk_pair.assign(cells.nF, {-1, -1});
    for (int f = 0; f < cells.nF; ++f) {
      if (bc.interior_faces[f].color != FaceColor::Shaded) continue;
      const auto& sides = bc.interior_faces[f].sides;
      const int k = static_cast<int>(sides.size());
      int circle_side = -1;
      int count = 0;
      for (int i = 0; i < k; ++i) {
        if (!sides[i].boundary) continue;
        const auto& be = bc.boundary_edges[sides[i].id];
        if (bc.boundary_faces[be.boundary_face].cls == CuspClass::CrossingCircle) {
          circle_side = i;
          count++;
        }
      }
      if (count != 1) continue;
      int opp = -1;
      int opp_count = 0;
      for (int i = 0; i < k; ++i) {
        if (sides[i].boundary) continue;
        bool adj = (i - circle_side + k) % k == 1 || (circle_side - i + k) % k == 1;
        if (!adj) {
          opp = i;
          opp_count++;
        }
      }
      if (opp_count == 1) disk_pair[f] = {circle_side, opp};
    }
  }

  bool entry_allowed(bool bdry, int cell) const {
    if (bdry) {
      if (face_visited[cell]) return false;
      if (total_visits + 1 > max_visits) return false;
      CuspClass cls = bc.boundary_faces[cell].cls;
      if (cls == CuspClass::KnotStrand && !cons.allow_knot_cusps) return false;
      if (cls == CuspClass::CrossingCircle && !cons.allow_circle_cusps) return false;
      return true;
    }
    if (cells.shaded(cell) && cons.shaded == EnumerationConstraints::ShadedPolicy::Forbid)
      return false;
    return true;
  }

  void record() {
    if (cons.require_shaded) {
      bool has = false;
      for (const auto& a : arcs)
        if (!a.in_boundary_face && cells.shaded(a.cell)) has = true;
      if (!has) return;
    }
    auto word = canonical_word(encode(cells, arcs));
    if (seen.insert(word).second) {
      NormalCurve c;
      c.bc = &bc;
      c.arcs = arcs;
      out.push_back(std::move(c));
    }
  }

  void extend(bool bdry, int cell, int in) {
    const int k = cells.side_count(bdry, cell);
    for (int outside = 0; outside < k; ++outside) {
      if (outside == in) continue;
      if (!bdry) {
        const auto& sides = bc.interior_faces[cell].sides;
        bool adjacent = (outside - in + k) % k == 1 || (in - outside + k) % k == 1;
        if (adjacent && sides[in].boundary != sides[outside].boundary) continue;
        if (cells.shaded(cell) &&
            cons.shaded == EnumerationConstraints::ShadedPolicy::DiskType) {
          auto [b_side, o_side] = disk_pair[cell];
          bool ok = (in == b_side && outside == o_side) || (in == o_side && outside == b_side);
          if (!ok) continue;
        }
      }
      int cx = cells.crossing_id(bdry, cell, outside);
      auto [tb, tc, ts] = cells.cross(bdry, cell, outside);
      if (cx == start_crossing) {
        if (tb == start_bdry && tc == start_cell && ts == start_in) {
          if (push_arc(bdry, cell, in, outside)) {
            record();
            pop_arc();
          }
        }
        continue;
      }
      if (used[cx]) continue;
      if (!entry_allowed(tb, tc)) continue;
      if (!push_arc(bdry, cell, in, outside)) continue;
      used[cx] = 1;
      if (tb) {
        face_visited[tc] = 1;
        total_visits++;
      }
      extend(tb, tc, ts);
      if (tb) {
        face_visited[tc] = 0;
        total_visits--;
      }
      used[cx] = 0;
      pop_arc();
    }
  }

  // Completing an arc checks embeddedness incrementally.
  bool push_arc(bool bdry, int cell, int in, int outside) {
    auto& list = chords[{bdry, cell}];
    int k = cells.side_count(bdry, cell);
    for (auto& [a, b] : list)
      if (interleaves(a, b, in, outside, k)) return false;
    list.push_back({in, outside});
    arcs.push_back({bdry, cell, in, outside});
    return true;
  }
  void pop_arc() {
    const auto& a = arcs.back();
    chords[{a.in_boundary_face, a.cell}].pop_back();
    arcs.pop_back();
  }

  void run() {
    for (int cx = 0; cx < cells.nI + cells.nBE; ++cx) {
      start_crossing = cx;
      // Two directions across the crossing.
      std::array<std::tuple<bool, int, int>, 2> entries;
      if (cx < cells.nI) {
        const auto& ie = bc.interior_edges[cx];
        entries = {std::tuple<bool, int, int>{false, ie.face[0], ie.side_index[0]},
                   std::tuple<bool, int, int>{false, ie.face[1], ie.side_index[1]}};
      } else {
        const auto& be = bc.boundary_edges[cx - cells.nI];
        entries = {std::tuple<bool, int, int>{true, be.boundary_face, be.boundary_side},
                   std::tuple<bool, int, int>{false, be.interior_face, be.interior_side}};
      }
      for (auto [b, cell, in] : entries) {
        if (!entry_allowed(b, cell)) continue;
        start_bdry = b;
        start_cell = cell;
        start_in = in;
        used[cx] = 1;
        if (b) {
          face_visited[cell] = 1;
          total_visits++;
        }
        extend(b, cell, in);
        if (b) {
          face_visited[cell] = 0;
          total_visits--;
        }
        used[cx] = 0;
      }
    }
    // Deterministic canonical order.
    std::sort(out.begin(), out.end(), [&](const NormalCurve& a, const NormalCurve& b) {
      return canonical_word(encode(cells, a.arcs)) < canonical_word(encode(cells, b.arcs));
    });
  }
};

}  // namespace

std::vector<NormalCurve> enumerate_normal_curves(const BoundaryComplex& bc,
                                                 const EnumerationConstraints& constraints) {
  Enumerator en(bc, constraints);
  en.run();
  // Anchoring at the minimal crossing would also work; the used[] cap plus
  // canonical dedup keeps this exhaustive and duplicate-free.
  return std::move(en.out);
}

AreaValue area(const NormalCurve& c) {
  return AreaValue{static_cast<long long>(c.interior_edge_crossings()) +
                   2LL * c.boundary_face_visits() - 4LL};
}

std::vector<SegmentLength> comb_length(const NormalCurve& c) {
  auto segments = c.cusp_segments();
  std::vector<CuspSegment> circle_segments;
  for (const auto& s : segments)
    if (s.cls == CuspClass::CrossingCircle) circle_segments.push_back(s);
  if (circle_segments.empty())
    throw NormalCurveError(
        "combinatorial length undefined: curve meets no crossing-circle boundary face");
  Rational each(area(c).half_pi_units, 2LL * static_cast<long long>(circle_segments.size()));
  std::vector<SegmentLength> out;
  for (const auto& s : circle_segments) out.push_back({s, each});
  return out;
}

CuspPattern cusp_pattern(int n) {
  if (n < 1) throw NormalCurveError("cusp pattern requires n >= 1, got " + std::to_string(n));
  CuspPattern p;
  p.n = n;
  p.s_parallel = n - 1;
  p.total_segments = n + 1;
  p.homology = {1, n};
  // Columns of the universal cover visited in order; the vertical step stays
  // in its column exactly when the region has even parity.
  p.segments.push_back({SegmentKind::Diagonal, 0});
  int col = (n % 2 == 0) ? 0 : 1;
  p.segments.push_back({SegmentKind::Diagonal, col});
  for (int i = 0; i < n - 1; ++i) {
    col = (col + 1) % 2;
    p.segments.push_back({SegmentKind::SParallel, col});
  }
  return p;
}

ProjectionDescriptor project_curve(const NormalCurve& c) {
  ProjectionDescriptor d;
  std::set<int> regions;
  for (const auto& a : c.arcs) {
    if (!a.in_boundary_face) {
      if (c.bc->interior_faces[a.cell].color == FaceColor::Shaded)
        throw NormalCurveError("projection undefined: curve meets a shaded face");
      continue;
    }
    const auto& bf = c.bc->boundary_faces[a.cell];
    ProjectionDescriptor::Crossing x;
    if (bf.cls == CuspClass::CrossingCircle) {
      x.kind = ProjectionDescriptor::Crossing::RegionPass;
      x.region = bf.region;
      d.region_passes++;
      regions.insert(bf.region);
    } else {
      x.kind = ProjectionDescriptor::Crossing::StrandCross;
      x.strand_edge = bf.strand_edge;
      d.strand_crossings++;
    }
    d.crossings.push_back(x);
  }
  d.link_intersections = 2 * d.region_passes + d.strand_crossings;
  d.primeness_violation_shape = d.region_passes == 1 && d.strand_crossings == 0;
  d.twist_reduced_violation_shape =
      d.region_passes == 2 && d.strand_crossings == 0 && regions.size() == 2;
  return d;
}

std::optional<int> compare(const ComplexityTuple& a, const ComplexityTuple& b) {
  if (a.counts.size() != b.counts.size()) return std::nullopt;
  bool le = true, ge = true;
  for (size_t i = 0; i < a.counts.size(); ++i) {
    if (a.counts[i] > b.counts[i]) le = false;
    if (a.counts[i] < b.counts[i]) ge = false;
  }
  if (le && ge) return 0;
  if (le) return -1;
  if (ge) return 1;
  return std::nullopt;
}

ComplexityTuple complexity(const std::vector<CurveInstance>& system, const Decomposition& dec) {
  const int F = static_cast<int>(dec.P.faces.size());
  ComplexityTuple t;
  t.counts.assign(2 * F, 0);
  for (const auto& inst : system) {
    for (const auto& a : inst.curve.arcs) {
      if (a.in_boundary_face) continue;
      int face = inst.curve.bc->interior_faces[a.cell].poly_face;
      t.counts[inst.polyhedron * F + face]++;
    }
  }
  return t;
}

// --- surface assembly ------------------------------------------------------

namespace {

// Side bijection of a glued face pair, as a function of side index.
struct FaceGluing {
  int poly = -1, face = -1;  // partner
  bool reflect = false;      // odd shaded gluing: i -> (4 - i) mod 6
  int map_side(int i, int k) const { return reflect ? ((4 - i) % k + k) % k : i; }
};

FaceGluing partner_of(const Decomposition& dec, int poly, int poly_face) {
  const PolyFace& f = dec.P.faces[poly_face];
  FaceGluing g;
  if (f.color == FaceColor::White) {
    g.poly = 1 - poly;
    g.face = poly_face;
    return g;
  }
  const auto& pair = dec.shaded_face_of_region[f.region];
  int other = pair[0] == poly_face ? pair[1] : pair[0];
  bool twisted = dec.shaded_gluings[f.region].twisted;
  g.poly = twisted ? 1 - poly : poly;
  g.face = other;
  g.reflect = twisted;
  return g;
}

}  // namespace

GaussBonnetResult gauss_bonnet(const SurfaceAssembly& assembly) {
  if (!assembly.dec) throw NormalCurveError("assembly lacks a decomposition");
  const Decomposition& dec = *assembly.dec;
  GaussBonnetResult r;

  long long total = 0;
  for (const auto& d : assembly.disks) total += area(d.curve).half_pi_units;
  r.total_area = AreaValue{total};
  r.chi = Rational(-total, 4);

  // Validate pairings and union endpoint points.
  const int D = static_cast<int>(assembly.disks.size());
  std::vector<int> arc_offset(D + 1, 0);
  for (int i = 0; i < D; ++i)
    arc_offset[i + 1] = arc_offset[i] + static_cast<int>(assembly.disks[i].curve.arcs.size());
  std::vector<int> point_parent(arc_offset[D]);
  std::iota(point_parent.begin(), point_parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (point_parent[x] != x) x = point_parent[x] = point_parent[point_parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { point_parent[find(a)] = find(b); };
  auto point_id = [&](int disk, int crossing) {
    int L = static_cast<int>(assembly.disks[disk].curve.arcs.size());
    return arc_offset[disk] + ((crossing % L) + L) % L;
  };

  std::vector<char> paired(arc_offset[D], 0);
  long long interior_arcs = 0, boundary_arcs = 0;
  for (int di = 0; di < D; ++di)
    for (const auto& a : assembly.disks[di].curve.arcs)
      (a.in_boundary_face ? boundary_arcs : interior_arcs)++;

  for (const auto& [ra, rb] : assembly.pairings) {
    auto arc_of = [&](const ArcRef& ref) -> const CurveArc& {
      if (ref.disk < 0 || ref.disk >= D) throw NormalCurveError("inconsistent gluing: bad disk");
      const auto& arcs = assembly.disks[ref.disk].curve.arcs;
      if (ref.arc < 0 || ref.arc >= static_cast<int>(arcs.size()))
        throw NormalCurveError("inconsistent gluing: bad arc index");
      return arcs[ref.arc];
    };
    const CurveArc& a = arc_of(ra);
    const CurveArc& b = arc_of(rb);
    if (a.in_boundary_face || b.in_boundary_face)
      throw NormalCurveError("inconsistent gluing: boundary-face arcs cannot be glued");
    int ga = arc_offset[ra.disk] + ra.arc;
    int gb = arc_offset[rb.disk] + rb.arc;
    if (ga == gb || paired[ga] || paired[gb])
      throw NormalCurveError("inconsistent gluing: arc glued twice");

    const auto& bca = *assembly.disks[ra.disk].curve.bc;
    const auto& bcb = *assembly.disks[rb.disk].curve.bc;
    int face_a = bca.interior_faces[a.cell].poly_face;
    int face_b = bcb.interior_faces[b.cell].poly_face;
    FaceGluing g = partner_of(dec, assembly.disks[ra.disk].polyhedron, face_a);
    if (g.poly != assembly.disks[rb.disk].polyhedron || g.face != face_b)
      throw NormalCurveError("inconsistent gluing: faces are not identified");
    int k = static_cast<int>(bca.interior_faces[a.cell].sides.size());
    int in_m = g.map_side(a.in, k);
    int out_m = g.map_side(a.out, k);
    bool straight = in_m == b.in && out_m == b.out;
    bool flipped = in_m == b.out && out_m == b.in;
    if (!straight && !flipped)
      throw NormalCurveError("inconsistent gluing: arc sides do not correspond");
    paired[ga] = paired[gb] = 1;
    // Endpoint matching: arc k's in-point is crossing k, out-point crossing k+1.
    if (straight) {
      unite(point_id(ra.disk, ra.arc), point_id(rb.disk, rb.arc));
      unite(point_id(ra.disk, ra.arc + 1), point_id(rb.disk, rb.arc + 1));
    } else {
      unite(point_id(ra.disk, ra.arc), point_id(rb.disk, rb.arc + 1));
      unite(point_id(ra.disk, ra.arc + 1), point_id(rb.disk, rb.arc));
    }
  }

  long long matched = static_cast<long long>(assembly.pairings.size());
  r.complete = 2 * matched == interior_arcs;

  std::set<int> roots;
  for (int p = 0; p < arc_offset[D]; ++p) roots.insert(find(p));
  r.cells_v = static_cast<long long>(roots.size());
  r.cells_e = matched + boundary_arcs;
  r.cells_f = D;
  r.cell_chi = Rational(r.cells_v - r.cells_e + r.cells_f, 1);
  return r;
}

}  // namespace auglink
