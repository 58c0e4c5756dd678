#pragma once

#include "auglink/augment.hpp"

namespace auglink {

struct DecomposeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FaceColor { White, Shaded };
enum class CuspClass { KnotStrand, CrossingCircle };

struct PolyVertex {
  CuspClass cls = CuspClass::KnotStrand;
  int region = -1;       // crossing-circle vertices: owning twist region
  int strand_edge = -1;  // knot-strand vertices: the external diagram edge
};

struct PolyEdge {
  int v0 = -1, v1 = -1;
  enum Kind { Spoke, Opposite } kind = Spoke;
  int region = -1;
  int end = -1;  // 0 = top of the band, 1 = bottom
  int leg = -1;  // spokes: which leg (0..3) of the region they sit at
};

struct PolyFace {
  FaceColor color = FaceColor::White;
  std::vector<int> edges;    // boundary cycle
  std::vector<int> corners;  // corners[i] = vertex between edges[i] and edges[i+1]
  int region = -1;           // shaded faces: owning region
  int end = -1;              // shaded faces: 0 top / 1 bottom
  int diagram_face = -1;     // white faces: source face of the base diagram
  int degree() const { return static_cast<int>(edges.size()); }
};

// One of the two truncated ideal polyhedra. The cell complex is shared
// between P and P'; `mirrored` records that the partner's boundary carries
// the opposite orientation (its face cycles and vertex rotations reversed).
struct Polyhedron {
  std::vector<PolyVertex> vertices;
  std::vector<PolyEdge> edges;
  std::vector<PolyFace> faces;
  bool mirrored = false;

  int num_shaded() const {
    int k = 0;
    for (const auto& f : faces) k += f.color == FaceColor::Shaded;
    return k;
  }
};

// Face identifications of the two-polyhedron decomposition.
//   - Every white face of P glues to the same white face of P' by the
//     identity.
//   - The two shaded triangles of each crossing disk re-glue the cut along
//     that disk. With even parity the top triangle of each polyhedron glues
//     to the bottom triangle of the same polyhedron, matching the strand
//     vertices of equal band side (A_top <-> A_bot). With odd parity (a half
//     twist) the gluing crosses polyhedra and swaps the strands
//     (A_top of P <-> B_bot of P').
struct ShadedGluing {
  int region = -1;
  bool twisted = false;  // odd parity
};

struct Decomposition {
  AugmentedStructure flat;
  Polyhedron P;   // upper polyhedron
  Polyhedron Pp;  // lower polyhedron (mirror copy)
  std::vector<ShadedGluing> shaded_gluings;
  std::vector<int> strand_vertex_of_edge;  // diagram edge (1-based) -> vertex, or -1
  std::vector<std::array<int, 2>> shaded_face_of_region;  // region -> {top face, bottom face}
  int circle_vertex(int region) const;
  bool non_prime_flagged = false;
};

// Builds the two identical checkerboard-colored polyhedra of the flat
// augmented link complement. Requires a connected diagram with at least two
// twist regions, all alternating. A non-prime diagram is allowed (the lemma
// verifiers depend on that) and merely flagged.
Decomposition decompose(const AugmentedStructure& flat);

struct ValidationReport {
  struct Item {
    std::string name;
    bool pass;
    std::string detail;
  };
  std::vector<Item> items;
  bool all_pass = true;
  void add(const std::string& name, bool pass, const std::string& detail = "");
};

// Checks every structural property the decomposition promises, recomputing
// from the cell complex alone: Euler formula, 4-valence, single-cycle vertex
// links, checkerboard coloring, shaded faces triangular with exactly one
// circle vertex, shaded count 2t, and F = V + 2, E = 2V.
ValidationReport validate(const Polyhedron& p);
ValidationReport validate(const Decomposition& dec);

// Canonical encoding of the colored cell complex, minimal over all starting
// flags and both orientations; equal strings == isomorphic complexes.
std::string canonical_code(const Polyhedron& p);

// --- Truncated boundary ------------------------------------------------

// Cells of the truncated boundary sphere of one polyhedron. An interior face
// of ideal degree k becomes a 2k-gon whose sides alternate between interior
// edges and boundary edges (cut corners); each ideal vertex becomes a
// boundary face whose four sides are boundary edges shared with the interior
// faces around it, in rotation order.
struct BoundaryComplex {
  struct Side {
    bool boundary = false;  // true: boundary edge, false: interior edge
    int id = -1;            // interior edge id or boundary edge id
  };
  struct InteriorFace {
    FaceColor color = FaceColor::White;
    std::vector<Side> sides;
    int poly_face = -1;
    int region = -1, end = -1;  // shaded faces
  };
  struct BoundaryFace {
    CuspClass cls = CuspClass::KnotStrand;
    int vertex = -1;            // ideal vertex it truncates
    int region = -1;            // crossing-circle faces
    int strand_edge = -1;       // knot-strand faces: underlying diagram edge
    std::vector<int> sides;     // boundary edge ids in rotation order
  };
  struct InteriorEdge {
    int face[2] = {-1, -1};  // interior faces on the two sides
    int side_index[2] = {-1, -1};
    int poly_edge = -1;
  };
  struct BoundaryEdge {
    int interior_face = -1, interior_side = -1;
    int boundary_face = -1, boundary_side = -1;
  };

  std::vector<InteriorFace> interior_faces;
  std::vector<BoundaryFace> boundary_faces;
  std::vector<InteriorEdge> interior_edges;
  std::vector<BoundaryEdge> boundary_edges;
  bool mirrored = false;

  int num_circle_faces() const {
    int k = 0;
    for (const auto& b : boundary_faces) k += b.cls == CuspClass::CrossingCircle;
    return k;
  }
  // Interior face side lookup of an interior edge occurrence.
  int side_of_interior_edge(int face, int edge) const;
};

BoundaryComplex boundary_complex(const Polyhedron& p);

}  // namespace auglink
