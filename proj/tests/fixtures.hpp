#pragma once

#include <string>
#include <vector>

#include "auglink/diagram.hpp"

// Shared diagram fixtures. Twist bands are generated with a uniform tuple
// pattern: the strands swap sides at each crossing, so the under strand
// always arrives at the same rotational position and every band is an
// alternating twist region.
namespace fixtures {

inline std::string trefoil() { return "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"; }

inline std::string figure8() { return "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"; }

// One-crossing unknot curl (nugatory crossing).
inline std::string curl() { return "X[1,2,2,1]"; }

inline std::string split_two_trefoils() {
  return trefoil() + " X[7,10,8,11] X[9,12,10,7] X[11,8,12,9]";
}

// Granny knot: trefoil # trefoil, spliced along one edge of each.
inline std::string granny() {
  return "X[1,4,2,5] X[3,6,4,1] X[5,2,12,3] X[7,10,8,11] X[9,12,10,7] X[11,8,6,9]";
}

// Borromean rings in the three-circle position: six crossings, no bigons.
inline std::string borromean() {
  return "X[4,1,3,2] X[7,5,8,6] X[1,10,6,9] X[2,12,5,11] X[12,3,9,8] X[10,4,11,7]";
}

// Figure-eight diagram with an extra ring clasping the waist of its vertical
// twist region, splitting that region in two. Prime and alternating but not
// twist-reduced: the two split crossings co-bound the flank faces at
// opposite corners.
inline std::string ring_fig8() {
  return "X[2,3,4,1] X[5,6,7,2] X[3,7,8,9] X[10,11,9,8] X[6,5,12,10] X[13,14,11,12] "
         "X[14,15,16,4] X[15,13,1,16]";
}

// Double twist link D(a,b): a vertical band of a crossings clasped with a
// horizontal band of b crossings, figure-eight style (D(2,2) is the standard
// figure eight shape).
inline std::string double_twist(int a, int b) {
  int next = 5;
  auto ne = [&] { return next++; };
  const int e1 = 1, e2 = 2, e3 = 3, e4 = 4;
  std::string out;
  auto emit = [&](int p, int q, int r, int s) {
    if (!out.empty()) out += ' ';
    out += "X[" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + "," +
           std::to_string(s) + "]";
  };
  int left = e3, right = e1;
  for (int c = 0; c < a; ++c) {
    int ol = (c == a - 1) ? e4 : ne();
    int orr = (c == a - 1) ? e2 : ne();
    emit(left, ol, orr, right);  // vertical: (tl, bl, br, tr)
    left = ol;
    right = orr;
  }
  int lt = e1, lb = e2;
  for (int c = 0; c < b; ++c) {
    int rt = (c == b - 1) ? e3 : ne();
    int rb = (c == b - 1) ? e4 : ne();
    emit(lt, lb, rb, rt);  // horizontal: (lt, lb, rb, rt)
    lt = rt;
    lb = rb;
  }
  return out;
}

// Pretzel link P(n_1, ..., n_k), k >= 3: vertical bands joined in a cycle.
// (With k = 2 the closure arcs create extra bigons and everything merges
// into a single twist region, so two-region diagrams use double_twist.)
inline std::string pretzel(const std::vector<int>& bands) {
  const int k = static_cast<int>(bands.size());
  int next_edge = 1;
  std::vector<int> top(k), bottom(k);
  for (int i = 0; i < k; ++i) top[i] = next_edge++;
  for (int i = 0; i < k; ++i) bottom[i] = next_edge++;
  std::string out;
  for (int i = 0; i < k; ++i) {
    const int n = bands[i];
    int left = top[(i + k - 1) % k];
    int right = top[i];
    for (int c = 0; c < n; ++c) {
      int out_left = (c == n - 1) ? bottom[(i + k - 1) % k] : next_edge++;
      int out_right = (c == n - 1) ? bottom[i] : next_edge++;
      if (!out.empty()) out += ' ';
      out += "X[" + std::to_string(left) + "," + std::to_string(out_left) + "," +
             std::to_string(out_right) + "," + std::to_string(right) + "]";
      left = out_left;
      right = out_right;
    }
  }
  return out;
}

inline std::string dt22() { return double_twist(2, 2); }
inline std::string dt23() { return double_twist(2, 3); }
inline std::string dt67() { return double_twist(6, 7); }  // binding: h = 6, knot
inline std::string dt66() { return double_twist(6, 6); }
inline std::string p222() { return pretzel({2, 2, 2}); }
inline std::string p333() { return pretzel({3, 3, 3}); }
inline std::string p234() { return pretzel({2, 3, 4}); }
inline std::string p2222() { return pretzel({2, 2, 2, 2}); }
inline std::string p666() { return pretzel({6, 6, 6}); }  // binding-height link

}  // namespace fixtures
