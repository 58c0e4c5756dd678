#include "auglink/polyhedral.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

/*
 Construction of the two ideal polyhedra of a flat augmented link.

 The flat augmented link is the base diagram with every twist region replaced
 by two parallel strands gripped by a crossing circle (full twists removed;
 a leftover half twist enters only the shaded-face gluing, never the
 polyhedra). Slicing the complement along the projection plane and splitting
 the half crossing-disks yields two identical polyhedra whose boundary cell
 structure is determined by the diagram combinatorics alone:

   * Every crossing belongs to a twist region, so the arcs of the flat link
     between consecutive crossing-disk punctures are exactly the external
     edges of the diagram (edges not consumed by chain bigons). Each such
     edge is one ideal strand vertex.

   * Each region contributes one ideal circle vertex and six edges: four
     spokes joining the circle vertex to the strand vertices at the region's
     four legs, and two opposite edges joining the strand-vertex pairs at the
     band's two ends. The two shaded triangles of the region are
     (circle, legs 0,1) on top and (circle, legs 3,2) on the bottom; the
     spokes appear around the circle vertex in the leg boundary-walk order,
     which makes its truncated boundary face a rectangle with sides
     alternating shaded/white.

   * White faces are the non-bigon faces of the base diagram. A face's
     boundary walk translates passage by passage: a run along a band side
     becomes spoke - circle vertex - spoke, a turn around a band end becomes
     that end's opposite edge, and every external edge becomes its strand
     vertex.

 Counts for t regions: V = 3t, E = 6t, F = 3t + 2 with 2t shaded triangles,
 so V - E + F = 2, E = 2V, F = V + 2 automatically; validate() re-derives
 everything from the produced complex, including the single-cycle vertex
 links that pin down the sphere structure.
*/

namespace auglink {

void ValidationReport::add(const std::string& name, bool pass, const std::string& detail) {
  items.push_back({name, pass, detail});
  if (!pass) all_pass = false;
}

int Decomposition::circle_vertex(int region) const {
  for (size_t i = 0; i < P.vertices.size(); ++i)
    if (P.vertices[i].cls == CuspClass::CrossingCircle && P.vertices[i].region == region)
      return static_cast<int>(i);
  return -1;
}

namespace {

struct RegionCells {
  int circle_vertex = -1;
  std::array<int, 4> spoke = {-1, -1, -1, -1};  // by leg index
  std::array<int, 2> opposite = {-1, -1};       // top, bottom
  std::array<int, 2> triangle = {-1, -1};       // top, bottom
};

// leg index -> band end (0 top, 1 bottom)
int leg_end(int leg) { return leg < 2 ? 0 : 1; }
// legs on the same band side: {0,3} left, {1,2} right
int side_partner(int leg) { return 3 - leg; }

}  // namespace

Decomposition decompose(const AugmentedStructure& flat_in) {
  if (!flat_in.flat) throw DecomposeError("decompose requires a flattened augmented structure");
  const Diagram& d = flat_in.base;
  const TwistAnalysis& ta = flat_in.twist;
  if (!d.connected) throw DecomposeError("decomposition requires a connected diagram");
  if (ta.t < 2)
    throw DecomposeError("decomposition requires at least 2 twist regions, found " +
                         std::to_string(ta.t));
  for (const auto& region : ta.regions) {
    if (region.cyclic)
      throw DecomposeError("cyclic twist region with t >= 2; diagram is not a valid projection");
    if (!region.alternating) throw DecomposeError("non-alternating twist region");
  }

  Decomposition dec;
  dec.flat = flat_in;
  Polyhedron& P = dec.P;

  // Classify edges: chain-internal (bigon) vs external.
  std::vector<char> internal_edge(d.num_edges + 1, 0);
  for (const auto& region : ta.regions)
    for (int f : region.bigon_faces)
      for (Dart dd : d.faces[f].darts) internal_edge[d.edge_at(dd)] = 1;

  dec.strand_vertex_of_edge.assign(d.num_edges + 1, -1);
  for (int e = 1; e <= d.num_edges; ++e) {
    if (internal_edge[e]) continue;
    PolyVertex v;
    v.cls = CuspClass::KnotStrand;
    v.strand_edge = e;
    dec.strand_vertex_of_edge[e] = static_cast<int>(P.vertices.size());
    P.vertices.push_back(v);
  }

  std::vector<RegionCells> cells(ta.t);
  std::vector<std::map<Dart, int>> spoke_of_leg_dart(ta.t);
  for (int ri = 0; ri < ta.t; ++ri) {
    const TwistRegion& region = ta.regions[ri];
    RegionCells& rc = cells[ri];
    PolyVertex cv;
    cv.cls = CuspClass::CrossingCircle;
    cv.region = ri;
    rc.circle_vertex = static_cast<int>(P.vertices.size());
    P.vertices.push_back(cv);

    for (int leg = 0; leg < 4; ++leg) {
      int e = d.edge_at(region.legs[leg]);
      int sv = dec.strand_vertex_of_edge[e];
      if (sv < 0) throw DecomposeError("leg edge is not external");
      PolyEdge pe;
      pe.v0 = rc.circle_vertex;
      pe.v1 = sv;
      pe.kind = PolyEdge::Spoke;
      pe.region = ri;
      pe.end = leg_end(leg);
      pe.leg = leg;
      rc.spoke[leg] = static_cast<int>(P.edges.size());
      spoke_of_leg_dart[ri][region.legs[leg]] = rc.spoke[leg];
      P.edges.push_back(pe);
    }
    const std::array<std::array<int, 2>, 2> end_legs = {{{0, 1}, {3, 2}}};
    for (int end = 0; end < 2; ++end) {
      PolyEdge pe;
      pe.v0 = dec.strand_vertex_of_edge[d.edge_at(region.legs[end_legs[end][0]])];
      pe.v1 = dec.strand_vertex_of_edge[d.edge_at(region.legs[end_legs[end][1]])];
      pe.kind = PolyEdge::Opposite;
      pe.region = ri;
      pe.end = end;
      rc.opposite[end] = static_cast<int>(P.edges.size());
      P.edges.push_back(pe);
    }
  }

  // Shaded triangles: (spoke, opposite, spoke) with corners
  // (strand, strand, circle).
  dec.shaded_face_of_region.assign(ta.t, {-1, -1});
  for (int ri = 0; ri < ta.t; ++ri) {
    const TwistRegion& region = ta.regions[ri];
    RegionCells& rc = cells[ri];
    const std::array<std::array<int, 2>, 2> end_legs = {{{0, 1}, {3, 2}}};
    for (int end = 0; end < 2; ++end) {
      int la = end_legs[end][0], lb = end_legs[end][1];
      PolyFace f;
      f.color = FaceColor::Shaded;
      f.region = ri;
      f.end = end;
      f.edges = {rc.spoke[la], rc.opposite[end], rc.spoke[lb]};
      f.corners = {dec.strand_vertex_of_edge[d.edge_at(region.legs[la])],
                   dec.strand_vertex_of_edge[d.edge_at(region.legs[lb])],
                   rc.circle_vertex};
      rc.triangle[end] = static_cast<int>(P.faces.size());
      dec.shaded_face_of_region[ri][end] = rc.triangle[end];
      P.faces.push_back(std::move(f));
    }
  }

  // White faces from the non-bigon faces of the diagram. Walk the face orbit
  // and translate passages through regions.
  std::set<int> bigon_face_ids;
  for (const auto& region : ta.regions)
    for (int f : region.bigon_faces) bigon_face_ids.insert(f);

  auto leg_index = [&](int ri, Dart leg) {
    const auto& legs = ta.regions[ri].legs;
    for (int i = 0; i < 4; ++i)
      if (legs[i] == leg) return i;
    return -1;
  };

  for (size_t fi = 0; fi < d.faces.size(); ++fi) {
    if (bigon_face_ids.count(static_cast<int>(fi))) continue;
    const Face& face = d.faces[fi];
    PolyFace pf;
    pf.color = FaceColor::White;
    pf.diagram_face = static_cast<int>(fi);

    // Split the orbit at external darts; each gap is a passage through one
    // region from the arrival leg alpha(d_k) to the departure leg d_{k+1}.
    std::vector<Dart> ext;
    for (Dart dd : face.darts)
      if (!internal_edge[d.edge_at(dd)]) ext.push_back(dd);
    if (ext.empty())
      throw DecomposeError("white face with no external edges; unexpected diagram structure");

    const int m = static_cast<int>(ext.size());
    for (int k = 0; k < m; ++k) {
      Dart dep = ext[k];
      int sv = dec.strand_vertex_of_edge[d.edge_at(dep)];
      // Passage from arrival leg to the next departure leg.
      Dart arrive = d.alpha(dep);
      int ri = ta.crossing_region[dart_crossing(arrive)];
      Dart next_dep = d.face_next(dep);
      while (internal_edge[d.edge_at(next_dep)]) next_dep = d.face_next(next_dep);
      int li_in = leg_index(ri, arrive);
      int li_out = leg_index(ri, next_dep);
      if (li_in < 0 || li_out < 0 || ta.crossing_region[dart_crossing(next_dep)] != ri)
        throw DecomposeError("face passage does not resolve to legs of one region");

      pf.corners.push_back(sv);  // corner at the strand vertex, before the passage edges
      if (leg_end(li_in) == leg_end(li_out)) {
        // Turn around a band end: the opposite edge.
        pf.edges.push_back(cells[ri].opposite[leg_end(li_in)]);
      } else if (side_partner(li_in) == li_out) {
        // Run along a band side: spoke in, circle vertex, spoke out.
        pf.edges.push_back(cells[ri].spoke[li_in]);
        pf.corners.push_back(cells[ri].circle_vertex);
        pf.edges.push_back(cells[ri].spoke[li_out]);
      } else {
        throw DecomposeError("face passage crosses a twist band diagonally");
      }
    }
    // The loop emits corner-then-edges per passage; shifting corners left by
    // one aligns them with the convention corners[i] = vertex between
    // edges[i] and edges[i+1].
    if (pf.corners.size() > 1)
      std::rotate(pf.corners.begin(), pf.corners.begin() + 1, pf.corners.end());
    P.faces.push_back(std::move(pf));
  }

  dec.Pp = P;
  dec.Pp.mirrored = true;

  dec.shaded_gluings.reserve(ta.t);
  for (int ri = 0; ri < ta.t; ++ri) {
    ShadedGluing g;
    g.region = ri;
    g.twisted = dec.flat.parity[ri] != 0;
    dec.shaded_gluings.push_back(g);
  }

  PrimeResult pr = is_prime(d);
  dec.non_prime_flagged = !pr.prime;
  return dec;
}

ValidationReport validate(const Polyhedron& p) {
  ValidationReport r;
  const int V = static_cast<int>(p.vertices.size());
  const int E = static_cast<int>(p.edges.size());
  const int F = static_cast<int>(p.faces.size());

  r.add("euler_formula", V - E + F == 2,
        "V=" + std::to_string(V) + " E=" + std::to_string(E) + " F=" + std::to_string(F));
  r.add("edge_count", E == 2 * V, "E=" + std::to_string(E) + " 2V=" + std::to_string(2 * V));
  r.add("face_count", F == V + 2, "");

  // Face boundary integrity: corner between consecutive edges is an endpoint
  // of both.
  bool boundary_ok = true;
  for (const auto& f : p.faces) {
    if (f.edges.size() != f.corners.size() || f.edges.empty()) {
      boundary_ok = false;
      continue;
    }
    const int k = f.degree();
    for (int i = 0; i < k; ++i) {
      const PolyEdge& e0 = p.edges[f.edges[i]];
      const PolyEdge& e1 = p.edges[f.edges[(i + 1) % k]];
      int c = f.corners[i];
      bool on0 = e0.v0 == c || e0.v1 == c;
      bool on1 = e1.v0 == c || e1.v1 == c;
      if (!on0 || !on1) boundary_ok = false;
    }
  }
  r.add("face_boundaries_consistent", boundary_ok, "");

  // Every edge borders exactly one white and one shaded face.
  std::vector<int> white_count(E, 0), shaded_count(E, 0);
  for (const auto& f : p.faces)
    for (int e : f.edges) (f.color == FaceColor::White ? white_count : shaded_count)[e]++;
  bool checker = true;
  for (int e = 0; e < E; ++e)
    if (white_count[e] != 1 || shaded_count[e] != 1) checker = false;
  r.add("checkerboard", checker, "each edge borders one white and one shaded face");

  // Valence and single-cycle vertex links. Around a vertex, each incident
  // edge must appear in exactly two face corners, and the corners chain into
  // a single cycle.
  bool valence4 = true, links_ok = true;
  std::vector<std::vector<std::pair<int, int>>> corner_edges(V);  // per vertex, (e_prev, e_next)
  for (const auto& f : p.faces) {
    const int k = f.degree();
    for (int i = 0; i < k; ++i)
      corner_edges[f.corners[i]].push_back({f.edges[i], f.edges[(i + 1) % k]});
  }
  for (int v = 0; v < V; ++v) {
    std::map<int, int> deg;  // incident edge -> corner incidences
    for (auto& [a, b] : corner_edges[v]) {
      deg[a]++;
      deg[b]++;
    }
    if (deg.size() != 4) valence4 = false;
    for (auto& [e, k] : deg)
      if (k != 2) links_ok = false;
    // Chain corners into cycles.
    if (corner_edges[v].empty()) {
      links_ok = false;
      continue;
    }
    std::vector<char> used(corner_edges[v].size(), 0);
    int cycle_len = 1;
    used[0] = 1;
    int cur_edge = corner_edges[v][0].second;
    const int start_edge = corner_edges[v][0].first;
    while (cur_edge != start_edge) {
      bool advanced = false;
      for (size_t i = 0; i < corner_edges[v].size(); ++i) {
        if (used[i]) continue;
        if (corner_edges[v][i].first == cur_edge) {
          cur_edge = corner_edges[v][i].second;
          used[i] = 1;
          cycle_len++;
          advanced = true;
          break;
        }
        if (corner_edges[v][i].second == cur_edge) {
          cur_edge = corner_edges[v][i].first;
          used[i] = 1;
          cycle_len++;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
    if (cycle_len != static_cast<int>(corner_edges[v].size()) || cur_edge != start_edge)
      links_ok = false;
  }
  r.add("vertices_4_valent", valence4, "");
  r.add("vertex_links_single_cycle", links_ok, "");

  // Shaded faces: triangles with exactly one crossing-circle corner, 2 per
  // region.
  bool shaded_tri = true, shaded_circle = true;
  std::map<int, int> shaded_per_region;
  for (const auto& f : p.faces) {
    if (f.color != FaceColor::Shaded) continue;
    if (f.degree() != 3) shaded_tri = false;
    int circles = 0;
    for (int c : f.corners)
      circles += p.vertices[c].cls == CuspClass::CrossingCircle;
    if (circles != 1) shaded_circle = false;
    shaded_per_region[f.region]++;
  }
  r.add("shaded_faces_triangles", shaded_tri, "");
  r.add("shaded_one_circle_vertex", shaded_circle, "");
  int circle_vertices = 0;
  for (const auto& v : p.vertices) circle_vertices += v.cls == CuspClass::CrossingCircle;
  bool two_per_region = static_cast<int>(shaded_per_region.size()) == circle_vertices;
  for (auto& [ri, k] : shaded_per_region)
    if (k != 2) two_per_region = false;
  r.add("shaded_count_2t", p.num_shaded() == 2 * circle_vertices && two_per_region,
        "shaded=" + std::to_string(p.num_shaded()) + " t=" + std::to_string(circle_vertices));

  return r;
}

ValidationReport validate(const Decomposition& dec) {
  ValidationReport r = validate(dec.P);
  ValidationReport r2 = validate(dec.Pp);
  for (auto& item : r2.items) r.add(item.name + "_mirror", item.pass, item.detail);
  r.add("polyhedra_isomorphic", canonical_code(dec.P) == canonical_code(dec.Pp), "");
  r.add("white_count_t_plus_2", [&] {
    int whites = 0;
    for (const auto& f : dec.P.faces) whites += f.color == FaceColor::White;
    return whites == dec.flat.twist.t + 2;
  }(), "");
  std::ostringstream conv;
  for (const auto& g : dec.shaded_gluings)
    conv << (g.twisted ? 'T' : 'I');
  r.add("shaded_gluing_convention", true,
        "per-region gluing (I = straight within polyhedron, T = half-twist flip across): " +
            conv.str());
  if (dec.non_prime_flagged)
    r.add("prime_diagram", false, "base diagram is not prime; bound certificates non-binding");
  return r;
}

// --- canonical form ------------------------------------------------------

namespace {

// Flags of the colored map: (face, position, direction). Encodes the complex
// by breadth-first traversal; minimal encoding over all starts.
struct MapEncoder {
  const Polyhedron& p;
  // face -> cyclic (edge, corner) lists; orientation flag reverses.
  std::vector<std::vector<std::pair<int, int>>> edge_faces;  // edge -> (face, position)

  explicit MapEncoder(const Polyhedron& poly) : p(poly) {
    edge_faces.assign(p.edges.size(), {});
    for (size_t f = 0; f < p.faces.size(); ++f)
      for (size_t i = 0; i < p.faces[f].edges.size(); ++i)
        edge_faces[p.faces[f].edges[i]].push_back({static_cast<int>(f), static_cast<int>(i)});
  }

  std::string encode_from(int face0, int pos0, bool reversed) const {
    std::map<int, int> face_label, edge_label, vertex_label;
    std::ostringstream out;
    std::vector<std::tuple<int, int, bool>> queue{{face0, pos0, reversed}};
    auto label = [](std::map<int, int>& m, int id) {
      auto it = m.find(id);
      if (it != m.end()) return it->second;
      int l = static_cast<int>(m.size());
      m.emplace(id, l);
      return l;
    };
    std::set<int> visited;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      auto [f, pos, rev] = queue[qi];
      if (visited.count(f)) continue;
      visited.insert(f);
      const PolyFace& face = p.faces[f];
      const int k = face.degree();
      out << (face.color == FaceColor::White ? 'w' : 's') << k << ':';
      for (int i = 0; i < k; ++i) {
        int idx = rev ? (pos - i + 2 * k) % k : (pos + i) % k;
        int e = face.edges[idx];
        // corner after edges[idx] in traversal order
        int cidx = rev ? (idx - 1 + k) % k : idx;
        int c = face.corners[cidx];
        out << 'e' << label(edge_label, e) << 'v' << label(vertex_label, c)
            << (p.vertices[c].cls == CuspClass::CrossingCircle ? 'C' : 'K');
        // Cross to the partner face of e.
        for (auto& [pf, pp] : edge_faces[e]) {
          if (pf == f && pp == idx) continue;
          // partner traverses e in the opposite direction
          queue.push_back({pf, pp, !rev});
        }
      }
      out << ';';
    }
    return out.str();
  }
};

}  // namespace

std::string canonical_code(const Polyhedron& p) {
  MapEncoder enc(p);
  std::string best;
  for (size_t f = 0; f < p.faces.size(); ++f) {
    for (size_t pos = 0; pos < p.faces[f].edges.size(); ++pos) {
      for (bool rev : {false, true}) {
        std::string s = enc.encode_from(static_cast<int>(f), static_cast<int>(pos), rev);
        if (best.empty() || s < best) best = s;
      }
    }
  }
  return best;
}

// --- truncation ----------------------------------------------------------

int BoundaryComplex::side_of_interior_edge(int face, int edge) const {
  const auto& sides = interior_faces[face].sides;
  for (size_t i = 0; i < sides.size(); ++i)
    if (!sides[i].boundary && sides[i].id == edge) return static_cast<int>(i);
  return -1;
}

BoundaryComplex boundary_complex(const Polyhedron& p) {
  BoundaryComplex bc;
  bc.mirrored = p.mirrored;
  bc.interior_faces.resize(p.faces.size());
  bc.interior_edges.resize(p.edges.size());
  for (auto& e : bc.interior_edges) e = BoundaryComplex::InteriorEdge{};

  // Rebuild each vertex's rotation by chaining face corners, so the boundary
  // face sides land in rotation order. Corner record: (face, corner index).
  struct Corner {
    int face, index, e_prev, e_next;
  };
  std::vector<std::vector<Corner>> at_vertex(p.vertices.size());
  for (size_t f = 0; f < p.faces.size(); ++f) {
    const PolyFace& face = p.faces[f];
    const int k = face.degree();
    for (int i = 0; i < k; ++i)
      at_vertex[face.corners[i]].push_back(
          {static_cast<int>(f), i, face.edges[i], face.edges[(i + 1) % k]});
  }

  // Interior faces with placeholder boundary-edge sides.
  for (size_t f = 0; f < p.faces.size(); ++f) {
    const PolyFace& face = p.faces[f];
    auto& inf = bc.interior_faces[f];
    inf.color = face.color;
    inf.poly_face = static_cast<int>(f);
    inf.region = face.region;
    inf.end = face.end;
    const int k = face.degree();
    for (int i = 0; i < k; ++i) {
      int e = face.edges[i];
      auto& ie = bc.interior_edges[e];
      int slot = ie.face[0] < 0 ? 0 : 1;
      ie.face[slot] = static_cast<int>(f);
      ie.side_index[slot] = static_cast<int>(inf.sides.size());
      ie.poly_edge = e;
      inf.sides.push_back({false, e});
      inf.sides.push_back({true, -1});  // corner cut at face.corners[i], filled below
    }
  }

  // Boundary faces: chain the corners around each vertex into the rotation
  // cycle, then cut a boundary edge per corner.
  for (size_t v = 0; v < p.vertices.size(); ++v) {
    auto& corners = at_vertex[v];
    if (corners.size() != 4)
      throw std::runtime_error("boundary_complex: vertex is not 4-valent");
    BoundaryComplex::BoundaryFace bf;
    bf.vertex = static_cast<int>(v);
    bf.cls = p.vertices[v].cls;
    bf.region = p.vertices[v].region;
    bf.strand_edge = p.vertices[v].strand_edge;

    std::vector<int> order{0};
    std::vector<char> used(corners.size(), 0);
    used[0] = 1;
    int cur_edge = corners[0].e_next;
    while (order.size() < corners.size()) {
      bool advanced = false;
      for (size_t i = 0; i < corners.size(); ++i) {
        if (used[i]) continue;
        if (corners[i].e_prev == cur_edge || corners[i].e_next == cur_edge) {
          cur_edge = corners[i].e_prev == cur_edge ? corners[i].e_next : corners[i].e_prev;
          used[i] = 1;
          order.push_back(static_cast<int>(i));
          advanced = true;
          break;
        }
      }
      if (!advanced) throw std::runtime_error("boundary_complex: broken vertex link");
    }

    int bface_id = static_cast<int>(bc.boundary_faces.size());
    bf.sides.resize(4);
    for (int side = 0; side < 4; ++side) {
      const Corner& c = corners[order[side]];
      int bedge_id = static_cast<int>(bc.boundary_edges.size());
      BoundaryComplex::BoundaryEdge be;
      be.interior_face = c.face;
      // The corner sits after the interior-edge side of face.edges[c.index]:
      // side index 2*c.index + 1 in the truncated cycle.
      be.interior_side = 2 * c.index + 1;
      be.boundary_face = bface_id;
      be.boundary_side = side;
      bc.interior_faces[c.face].sides[be.interior_side] = {true, bedge_id};
      bf.sides[side] = bedge_id;
      bc.boundary_edges.push_back(be);
    }
    bc.boundary_faces.push_back(bf);
  }
  return bc;
}

}  // namespace auglink
