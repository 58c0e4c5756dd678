#include "auglink/augment.hpp"

namespace auglink {

AugmentedStructure augment(const Diagram& d) {
  if (!d.connected) throw AugmentError("cannot augment a disconnected diagram");
  AugmentedStructure a;
  a.base = d;
  a.twist = twist_regions(d);
  if (a.twist.t == 0) throw AugmentError("no twist regions to augment");
  for (int i = 0; i < a.twist.t; ++i) {
    const TwistRegion& region = a.twist.regions[i];
    if (!region.alternating)
      throw AugmentError("twist region " + std::to_string(i) +
                         " is not alternating; augmentation is undefined for it");
    CrossingCircle c;
    c.region = i;
    c.n = region.n;
    c.handedness = region.handedness;
    a.circles.push_back(c);
  }
  return a;
}

AugmentedStructure flatten(const AugmentedStructure& a) {
  if (a.flat) return a;
  AugmentedStructure f = a;
  f.flat = true;
  f.parity.assign(f.circles.size(), 0);
  f.removed_full_twists.assign(f.circles.size(), 0);
  for (size_t i = 0; i < f.circles.size(); ++i) {
    f.parity[i] = f.circles[i].n % 2;
    f.removed_full_twists[i] = f.circles[i].handedness * (f.circles[i].n / 2);
  }
  return f;
}

}  // namespace auglink
