#pragma once

#include "auglink/normal.hpp"

namespace auglink {

// Interpretation of a verifier counterexample in the projection plane.
// Crossing-circle boundary-face visits (of any segment kind, including the
// disk passes made of two triangle arcs) translate to cuts through the twist
// region, each meeting the link twice; knot-face visits cross a strand once.
struct WitnessInterpretation {
  int circle_visits = 0;
  int knot_visits = 0;
  int link_intersections = 0;
  std::vector<int> regions;  // regions visited, in curve order
};

struct Counterexample {
  NormalCurve curve;
  WitnessInterpretation interpretation;
};

struct LemmaEvidence {
  std::string lemma_id;
  std::string universe;  // enumeration constraints searched
  std::vector<Counterexample> counterexamples;
  bool verified() const { return counterexamples.empty(); }
};

WitnessInterpretation interpret_witness(const NormalCurve& c);

// No normal curve avoids all shaded faces and all boundary faces: every side
// of every white face borders a shaded face.
LemmaEvidence verify_must_meet_circle(const BoundaryComplex& bc);

// Every normal curve of surface type meeting exactly one crossing-circle
// boundary face also meets a knot-strand boundary face. Counterexamples on
// non-prime diagrams project to loops meeting the link twice.
LemmaEvidence verify_one_cusp_forces_K(const BoundaryComplex& bc);

// No normal curve of surface type carries s-parallel segments in exactly two
// distinct crossing-circle cusps while avoiding knot cusps and shaded faces.
// Counterexamples project to loops meeting the link four times and exhibit a
// twist-reducedness failure.
LemmaEvidence verify_three_circles(const BoundaryComplex& bc);

enum class SurfaceClass { Closed, Meridional };

struct BoundaryCountResult {
  SurfaceClass cls;
  int b_min = 0;           // closed: 12 for knots, 6 for links
  std::vector<int> cases;  // meridional: {0, 2, 4, 6} (6 standing for >= 6)
};
BoundaryCountResult min_boundary_count(bool is_knot, SurfaceClass cls);

// Exact Euler characteristic upper bounds. Closed: 5 - h for links,
// 10 - 2h for knots. Meridional by boundary count: b = 2 gives 1 - h,
// b = 4 gives 3 - h, b >= 6 gives 5 - h.
Rational chi_bound(int h, bool is_knot, SurfaceClass cls, int b_case = 6);

// Smallest genus g with 2 - 2g - punctures <= chi. Orientable surfaces only.
int genus_bound(const Rational& chi, int punctures, bool orientable = true);

struct SphereDescriptor {
  enum Kind { StrandCollar, FaceCycle } kind = FaceCycle;
  std::vector<int> edges;  // diagram edges crossed, 1-based
  std::vector<int> faces;  // faces traversed (FaceCycle)
  int punctures = 0;
  bool inessential_candidate = false;  // punctures == 2
};

// Simple closed curves in the projection plane meeting the link transversely
// away from all twist regions: collars of single external edges plus simple
// cycles in the graph whose nodes are non-bigon faces and whose edges are
// external edges.
std::vector<SphereDescriptor> visible_meridional_spheres(const Diagram& d);

struct BoundCertificate {
  std::string pd;
  HypothesisReport hypotheses;
  bool is_knot = false;

  bool decomposed = false;
  std::string failure_reason;  // when not decomposed
  ValidationReport validation;
  std::vector<LemmaEvidence> evidence;

  int b_closed = 0;
  Rational chi_closed;
  int genus_closed = 0;

  struct MeridionalCase {
    int b = 0;
    std::optional<Rational> chi;  // absent for the sphere alternative b = 0
  };
  std::vector<MeridionalCase> meridional;
  std::vector<SphereDescriptor> visible_spheres;

  bool binding = false;
};

// Runs the whole pipeline: hypotheses, decomposition, validation, the three
// lemma verifiers and the bound formulas. Always returns a certificate;
// binding only when every hypothesis holds and every lemma verified.
BoundCertificate certify(const Diagram& d);

}  // namespace auglink
