#pragma once

#include <optional>

#include "auglink/diagram.hpp"

namespace auglink {

// Equivalence class of crossings joined by consecutive bigons.
// For a linear chain of n crossings the four external legs (darts whose slot
// is not consumed by a chain bigon) are stored in boundary-walk order
// legs[0], legs[1] at the first chain crossing, legs[2], legs[3] at the last:
//
//        legs[0]  legs[1]            band sides: left  = {legs[0], legs[3]}
//           \      /                              right = {legs[1], legs[2]}
//          [ chain  ]                band ends:  top    = {legs[0], legs[1]}
//           /      \                             bottom = {legs[2], legs[3]}
//        legs[3]  legs[2]
//
// Cyclic chains (the whole diagram is a (2,n) torus pattern, t = 1) have no
// legs and are flagged.
struct TwistRegion {
  std::vector<int> chain;       // crossings in chain order
  std::vector<int> bigon_faces; // face ids of the chain's bigons
  int n = 0;                    // crossing count
  bool alternating = true;      // over/under flips across every chain bigon
  bool cyclic = false;
  int handedness = +1;          // chirality convention at the first chain crossing
  std::array<Dart, 4> legs{-1, -1, -1, -1};
};

struct TwistAnalysis {
  std::vector<TwistRegion> regions;
  std::vector<int> crossing_region;  // crossing -> region index
  int t = 0;                         // number of regions
  int h = 0;                         // min crossing count over regions
  bool all_alternating = true;
};

TwistAnalysis twist_regions(const Diagram& d);

struct PrimeWitness {
  enum Kind { TwoEdgeCut, NugatoryCrossing } kind;
  // TwoEdgeCut: edges e1,e2 share both faces f,g; side_a holds the crossings
  // on one side of the cut.
  int e1 = -1, e2 = -1, f = -1, g = -1;
  std::vector<int> side_a;
  // NugatoryCrossing: face f occupies the corners (corner, corner+2) of
  // crossing c.
  int crossing = -1, corner = -1;
};

struct PrimeResult {
  bool prime = false;
  std::optional<PrimeWitness> witness;
};

// A diagram is prime when no simple closed curve meets it in two edge points
// with crossings on both sides. Combinatorially: no pair of edges shares both
// of its faces (a 2-edge cut of the projection graph), and no crossing is
// nugatory (a face reaching two opposite corners of it, which supports a
// separating curve through the crossing point).
PrimeResult is_prime(const Diagram& d);

struct FlypeWitness {
  int c1 = -1, c2 = -1;      // crossings in distinct twist regions
  int corner1 = -1, corner2 = -1;
  int f = -1, g = -1;        // the two faces carried by the curve
};

struct TwistReducedResult {
  bool reduced = false;
  std::optional<FlypeWitness> witness;
};

// Twist-reduced: every simple closed curve through exactly two crossings has
// both crossings in one twist region. A curve through crossings c1, c2 exists
// iff some face f meets a corner of each while a second face g meets the two
// opposite corners.
TwistReducedResult is_twist_reduced(const Diagram& d, const TwistAnalysis& ta);
TwistReducedResult is_twist_reduced(const Diagram& d);

struct HypothesisReport {
  bool connected = false;
  bool prime = false;
  bool twist_reduced = false;
  bool is_knot = false;
  bool regions_alternating = false;
  int t = 0;
  int h = 0;
  bool hypotheses_met = false;  // connected && prime && twist_reduced && t >= 2 && h >= 6
  std::optional<PrimeWitness> prime_witness;
  std::optional<FlypeWitness> flype_witness;
};

HypothesisReport check_hypotheses(const Diagram& d);

}  // namespace auglink
