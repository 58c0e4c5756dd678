#pragma once

#include "auglink/twist.hpp"

namespace auglink {

struct AugmentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One crossing circle per twist region. The Dehn filling slope recovering the
// original link is homologous to w + n*s on the circle's cusp torus, recorded
// as the pair (1, n) in the (w, s) basis.
struct CrossingCircle {
  int region = -1;
  int n = 0;          // crossings in the region
  int handedness = +1;
  std::pair<int, int> filling_slope() const { return {1, n}; }
};

struct AugmentedStructure {
  Diagram base;
  TwistAnalysis twist;
  std::vector<CrossingCircle> circles;
  bool flat = false;
  std::vector<int> parity;              // per region, crossing count mod 2 (flat only)
  std::vector<int> removed_full_twists; // per region, signed by handedness (flat only)
};

// Adds one crossing circle per twist region. Requires a connected diagram
// whose twist regions are all alternating.
AugmentedStructure augment(const Diagram& d);

// Removes full twists: each region keeps n mod 2 crossings. Idempotent.
AugmentedStructure flatten(const AugmentedStructure& a);

}  // namespace auglink
