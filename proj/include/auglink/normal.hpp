#pragma once

#include <boost/rational.hpp>

#include "auglink/polyhedral.hpp"

namespace auglink {

using Rational = boost::rational<long long>;

struct NormalCurveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One maximal arc of a curve inside a cell of the truncated boundary,
// entering through side `in` and leaving through side `out` of that cell's
// side cycle.
struct CurveArc {
  bool in_boundary_face = false;
  int cell = -1;
  int in = -1;
  int out = -1;
};

enum class SegmentKind { SParallel, Diagonal, WParallel };

struct CuspSegment {
  CuspClass cls = CuspClass::KnotStrand;
  int boundary_face = -1;
  int region = -1;
  SegmentKind kind = SegmentKind::SParallel;
};

struct NormalCurve {
  const BoundaryComplex* bc = nullptr;
  std::vector<CurveArc> arcs;
  // Degenerate representation for a closed curve inside a single face; used
  // only to exercise normality condition (2).
  std::optional<int> contained_in_face;

  int interior_edge_crossings() const;         // n
  int boundary_face_visits() const;            // m
  int crossings_of_edge(int interior_edge) const;
  std::vector<CuspSegment> cusp_segments() const;
  int circle_segment_count() const;
  bool meets_shaded() const;
  std::string word() const;  // canonical printable flag word
};

struct NormalityReport {
  bool closed = true;
  std::array<bool, 5> condition_ok{true, true, true, true, true};
  bool embedded = true;
  std::vector<std::string> violations;
  bool normal() const {
    for (bool ok : condition_ok)
      if (!ok) return false;
    return closed && embedded;
  }
};

// Checks the five normality conditions and embeddedness (pairwise
// non-interleaved arcs in every cell). Throws on an open word.
NormalityReport check_normal(const NormalCurve& c);

struct EnumerationConstraints {
  int max_boundary_visits = -1;  // -1: number of boundary faces
  bool allow_knot_cusps = true;
  bool allow_circle_cusps = true;
  enum class ShadedPolicy {
    Any,
    Forbid,
    // Arcs in shaded faces must run from the crossing-circle corner to the
    // opposite edge, the only pattern a surface in favorable position makes.
    DiskType,
  };
  ShadedPolicy shaded = ShadedPolicy::Any;
  bool require_shaded = false;
};

// Complete duplicate-free list (up to rotation and reversal) of embedded
// curves satisfying the five normality conditions and the constraints, in
// canonical order.
std::vector<NormalCurve> enumerate_normal_curves(const BoundaryComplex& bc,
                                                 const EnumerationConstraints& constraints = {});

// Exact combinatorial area in half-pi units: n + 2m - 4.
struct AreaValue {
  long long half_pi_units = 0;
  Rational pi_multiple() const { return Rational(half_pi_units, 2); }
  bool operator==(const AreaValue&) const = default;
};

AreaValue area(const NormalCurve& c);

// Combinatorial length: the disk's area split evenly over its crossing-circle
// segments, as an exact multiple of pi. Requires at least one such segment.
struct SegmentLength {
  CuspSegment segment;
  Rational pi_multiple;
};
std::vector<SegmentLength> comb_length(const NormalCurve& c);

// Canonical meridian pattern on the cusp torus of a crossing circle whose
// twist region has n crossings: (n-1) segments parallel to the shaded faces
// plus two diagonals, homology class w + n*s.
struct CuspPattern {
  int n = 0;
  int s_parallel = 0;
  int diagonals = 2;
  int total_segments = 0;
  std::pair<int, int> homology;  // (coefficient of w, coefficient of s)
  int shaded_geometric_intersection = 1;
  struct Segment {
    SegmentKind kind;
    int rectangle;  // 0 = upper polyhedron's boundary face, 1 = lower's
  };
  std::vector<Segment> segments;
};
CuspPattern cusp_pattern(int n);

// Translation of a shaded-free normal curve to the projection plane: the
// curve cuts through a twist region at each crossing-circle visit (meeting
// the link twice there) and crosses a strand of the link at each knot visit.
struct ProjectionDescriptor {
  struct Crossing {
    enum Kind { RegionPass, StrandCross } kind;
    int region = -1;       // RegionPass
    int strand_edge = -1;  // StrandCross (diagram edge of the strand vertex)
  };
  std::vector<Crossing> crossings;
  int region_passes = 0;
  int strand_crossings = 0;
  int link_intersections = 0;  // 2 * region_passes + strand_crossings
  bool primeness_violation_shape = false;      // one pass, no strand crossings
  bool twist_reduced_violation_shape = false;  // two passes in distinct regions, no crossings
};
ProjectionDescriptor project_curve(const NormalCurve& c);

// Complexity tuple: arc counts per interior face, upper polyhedron's faces
// first, then the lower's, in face order.
struct ComplexityTuple {
  std::vector<int> counts;
  bool operator==(const ComplexityTuple&) const = default;
};
// -1, 0, +1 for <, =, >; nullopt when incomparable.
std::optional<int> compare(const ComplexityTuple& a, const ComplexityTuple& b);

struct CurveInstance {
  int polyhedron = 0;  // 0 = P, 1 = P'
  NormalCurve curve;
};
ComplexityTuple complexity(const std::vector<CurveInstance>& system, const Decomposition& dec);

// --- Surface assembly and combinatorial Gauss-Bonnet ---------------------

struct ArcRef {
  int disk = -1;
  int arc = -1;
};

struct SurfaceAssembly {
  const Decomposition* dec = nullptr;
  std::vector<CurveInstance> disks;
  std::vector<std::pair<ArcRef, ArcRef>> pairings;  // glued interior-face arcs
};

struct GaussBonnetResult {
  AreaValue total_area;
  Rational chi;             // -area / 2pi, exact
  bool complete = false;    // every interior-face arc is glued
  long long cells_v = 0, cells_e = 0, cells_f = 0;
  Rational cell_chi;        // V - E + F of the assembled complex
};

// Sums disk areas and converts by area(H) = -2*pi*chi(H). Validates pairings
// against the decomposition's face gluings (identity on white faces, the
// even/odd shaded convention) and, for complete assemblies, cross-checks chi
// against V - E + F of the assembled cell structure.
GaussBonnetResult gauss_bonnet(const SurfaceAssembly& assembly);

}  // namespace auglink
