#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "auglink/diagram.hpp"
#include "auglink/normal.hpp"
#include "auglink/twist.hpp"

// Brute-force reference implementations, kept independent of the library's
// algorithms: faces by clockwise tracing, cuts by edge deletion and flood
// fill, nugatory crossings by stub connectivity, regions by a fresh closure,
// and curve enumeration by an unpruned walk filtered through check_normal.
namespace oracles {

using namespace auglink;

// Face count from the opposite turning convention; orbit count must agree
// with the library's.
inline int face_count_reversed(const Diagram& d) {
  std::vector<char> seen(d.num_darts(), 0);
  int faces = 0;
  for (Dart start = 0; start < d.num_darts(); ++start) {
    if (seen[start]) continue;
    faces++;
    Dart cur = start;
    do {
      seen[cur] = 1;
      cur = d.sigma_inv(d.alpha(cur));
    } while (cur != start);
  }
  return faces;
}

inline bool connected_without(const Diagram& d, int e1, int e2) {
  std::vector<char> seen(d.num_crossings(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    for (int s = 0; s < 4; ++s) {
      int e = d.crossings[c][s];
      if (e == e1 || e == e2) continue;
      int other = dart_crossing(d.alpha(make_dart(c, s)));
      if (!seen[other]) {
        seen[other] = 1;
        reached++;
        stack.push_back(other);
      }
    }
  }
  return reached == d.num_crossings();
}

// Nugatory via stub connectivity: the curve through the crossing point
// separates two cyclically adjacent stub pairs lying in different components
// of the diagram with the crossing removed.
inline bool nugatory_by_connectivity(const Diagram& d, int c) {
  // Components of darts when crossing c is deleted: flood over crossings
  // != c, tracking which stubs of c each component touches.
  std::vector<int> comp(d.num_crossings(), -1);
  int nc = 0;
  for (int start = 0; start < d.num_crossings(); ++start) {
    if (start == c || comp[start] >= 0) continue;
    std::vector<int> stack{start};
    comp[start] = nc;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int s = 0; s < 4; ++s) {
        int other = dart_crossing(d.alpha(make_dart(x, s)));
        if (other == c || comp[other] >= 0) continue;
        comp[other] = nc;
        stack.push_back(other);
      }
    }
    nc++;
  }
  // Component of each stub (slot of c): the far end's component, or a fresh
  // symbol for edges looping straight back to c.
  std::array<int, 4> stub{};
  for (int s = 0; s < 4; ++s) {
    int other = dart_crossing(d.alpha(make_dart(c, s)));
    stub[s] = other == c ? 100 + dart_slot(d.alpha(make_dart(c, s))) : comp[other];
  }
  // Loop edges at c connect their own two stubs.
  std::map<int, std::set<int>> joined;
  for (int s = 0; s < 4; ++s) {
    Dart other = d.alpha(make_dart(c, s));
    if (dart_crossing(other) == c) {
      int a = std::min(s, dart_slot(other)), b = std::max(s, dart_slot(other));
      stub[a] = stub[b] = 200 + 4 * a + b;
    }
  }
  for (int j = 0; j < 2; ++j) {
    // Split {j+1, j+2} | {j+3, j}: realizable when no connection joins the
    // two sides away from c.
    std::set<int> side1{stub[(j + 1) & 3], stub[(j + 2) & 3]};
    std::set<int> side2{stub[(j + 3) & 3], stub[j & 3]};
    bool meet = false;
    for (int x : side1) meet = meet || side2.count(x);
    if (!meet) return true;
  }
  return false;
}

inline bool prime_bruteforce(const Diagram& d) {
  if (!d.connected) return false;
  for (int c = 0; c < d.num_crossings(); ++c)
    if (nugatory_by_connectivity(d, c)) return false;
  for (int e1 = 1; e1 <= d.num_edges; ++e1)
    for (int e2 = e1 + 1; e2 <= d.num_edges; ++e2)
      if (!connected_without(d, e1, e2)) return false;
  return true;
}

// Crossing regions by re-deriving the bigon relation from scratch.
inline std::vector<int> regions_bruteforce(const Diagram& d) {
  std::vector<int> reg(d.num_crossings());
  for (int i = 0; i < d.num_crossings(); ++i) reg[i] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& f : d.faces) {
      if (f.degree() != 2) continue;
      int a = dart_crossing(f.darts[0]), b = dart_crossing(f.darts[1]);
      if (reg[a] != reg[b]) {
        int lo = std::min(reg[a], reg[b]);
        int hi = std::max(reg[a], reg[b]);
        for (auto& r : reg)
          if (r == hi) r = lo;
        changed = true;
      }
    }
  }
  return reg;
}

inline bool twist_reduced_bruteforce(const Diagram& d) {
  auto reg = regions_bruteforce(d);
  // All curves through exactly two crossings: re-derive corner faces from a
  // fresh clockwise trace.
  std::vector<int> dart_face(d.num_darts(), -1);
  int nf = 0;
  for (Dart start = 0; start < d.num_darts(); ++start) {
    if (dart_face[start] >= 0) continue;
    Dart cur = start;
    do {
      dart_face[cur] = nf;
      cur = d.sigma_inv(d.alpha(cur));
    } while (cur != start);
    nf++;
  }
  // With clockwise tracing the face in the corner (c, j..j+1) is the orbit
  // of dart (c, j).
  auto corner = [&](int c, int j) { return dart_face[make_dart(c, (j & 3))]; };
  for (int c1 = 0; c1 < d.num_crossings(); ++c1)
    for (int c2 = 0; c2 < d.num_crossings(); ++c2) {
      if (c1 == c2 || reg[c1] == reg[c2]) continue;
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
          int f = corner(c1, j), g = corner(c1, j + 2);
          if (f == g) continue;
          if (corner(c2, k) == f && corner(c2, k + 2) == g) return false;
        }
    }
  return true;
}

// Unpruned curve enumeration: every closed walk over cells within the raw
// caps, filtered by check_normal + constraints afterwards.
std::vector<NormalCurve> enumerate_bruteforce(const BoundaryComplex& bc,
                                              const EnumerationConstraints& cons);

inline std::set<std::string> curve_words(const std::vector<NormalCurve>& cs) {
  std::set<std::string> out;
  for (const auto& c : cs) out.insert(c.word());
  return out;
}

}  // namespace oracles
