#include "auglink/twist.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace auglink {

namespace {

// Slots of crossing c consumed by bigon face f. The bigon's boundary has one
// dart at each crossing; together with the arriving end of the other edge it
// occupies an adjacent slot pair.
std::array<int, 2> bigon_slots_at(const Diagram& d, const Face& f, int c) {
  for (Dart dd : f.darts) {
    if (dart_crossing(dd) == c) {
      int s = dart_slot(dd);
      return {(s + 3) & 3, s};  // arriving slot of the other bigon edge, then s
    }
  }
  return {-1, -1};
}

}  // namespace

TwistAnalysis twist_regions(const Diagram& d) {
  const int v = d.num_crossings();
  TwistAnalysis ta;
  ta.crossing_region.assign(v, -1);

  // Union crossings over bigon faces.
  std::vector<int> parent(v);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  std::vector<std::vector<int>> bigons_at(v);  // crossing -> incident bigon face ids
  for (size_t fi = 0; fi < d.faces.size(); ++fi) {
    const Face& f = d.faces[fi];
    if (!f.is_bigon()) continue;
    int c1 = dart_crossing(f.darts[0]);
    int c2 = dart_crossing(f.darts[1]);
    if (c1 == c2) continue;  // self-bigon (isolated curl component); no join
    parent[find(c1)] = find(c2);
    bigons_at[c1].push_back(static_cast<int>(fi));
    bigons_at[c2].push_back(static_cast<int>(fi));
  }

  std::map<int, int> root_region;
  for (int c = 0; c < v; ++c) {
    int r = find(c);
    auto it = root_region.find(r);
    if (it == root_region.end()) {
      it = root_region.emplace(r, static_cast<int>(ta.regions.size())).first;
      ta.regions.emplace_back();
    }
    ta.crossing_region[c] = it->second;
    ta.regions[it->second].n++;
  }

  for (auto& region : ta.regions) region.chain.reserve(region.n);

  // Build each chain: walk from an end crossing (one incident bigon) along
  // bigon adjacency. A region whose crossings all have two bigons is cyclic.
  std::vector<std::vector<int>> members(ta.regions.size());
  for (int c = 0; c < v; ++c) members[ta.crossing_region[c]].push_back(c);

  for (size_t ri = 0; ri < ta.regions.size(); ++ri) {
    TwistRegion& region = ta.regions[ri];
    const auto& crossings = members[ri];
    if (region.n == 1) {
      region.chain = crossings;
      region.legs = {make_dart(crossings[0], 0), make_dart(crossings[0], 1),
                     make_dart(crossings[0], 2), make_dart(crossings[0], 3)};
      continue;
    }
    int start = -1;
    for (int c : crossings)
      if (bigons_at[c].size() == 1) {
        start = c;
        break;
      }
    if (start < 0) {
      region.cyclic = true;
      region.chain = crossings;
      for (int c : crossings)
        for (int f : bigons_at[c]) region.bigon_faces.push_back(f);
      std::sort(region.bigon_faces.begin(), region.bigon_faces.end());
      region.bigon_faces.erase(
          std::unique(region.bigon_faces.begin(), region.bigon_faces.end()),
          region.bigon_faces.end());
    } else {
      int prev_face = -1;
      int cur = start;
      while (true) {
        region.chain.push_back(cur);
        int next_face = -1;
        for (int f : bigons_at[cur])
          if (f != prev_face) next_face = f;
        if (next_face < 0) break;
        region.bigon_faces.push_back(next_face);
        const Face& bf = d.faces[next_face];
        int other = dart_crossing(bf.darts[0]) == cur ? dart_crossing(bf.darts[1])
                                                      : dart_crossing(bf.darts[0]);
        prev_face = next_face;
        cur = other;
      }
      // Legs: at each chain end, the two slots not used by the end's bigon.
      int c_first = region.chain.front();
      int c_last = region.chain.back();
      auto first_slots = bigon_slots_at(d, d.faces[region.bigon_faces.front()], c_first);
      int p = first_slots[0];  // bigon occupies slots (p, p+1); legs at (p+2, p+3)
      region.legs[0] = make_dart(c_first, (p + 2) & 3);
      region.legs[1] = make_dart(c_first, (p + 3) & 3);
      // Walk the region boundary from legs[1] to order the far end's legs.
      auto region_of = [&](Dart dd) { return ta.crossing_region[dart_crossing(dd)]; };
      auto is_internal = [&](Dart dd) {
        if (region_of(dd) != static_cast<int>(ri)) return false;
        int face_a = d.dart_face[dd];
        int face_b = d.dart_face[d.alpha(dd)];
        auto in_bigons = [&](int f) {
          return std::find(region.bigon_faces.begin(), region.bigon_faces.end(), f) !=
                 region.bigon_faces.end();
        };
        return in_bigons(face_a) || in_bigons(face_b);
      };
      Dart walk = d.sigma(region.legs[1]);
      while (is_internal(walk)) walk = d.sigma(d.alpha(walk));
      region.legs[2] = walk;
      walk = d.sigma(region.legs[2]);
      while (is_internal(walk)) walk = d.sigma(d.alpha(walk));
      region.legs[3] = walk;
      if (dart_crossing(region.legs[2]) != c_last || dart_crossing(region.legs[3]) != c_last)
        throw std::runtime_error("twist region boundary walk did not reach the chain end");
    }
    // Alternation: each bigon edge must be under at one end, over at the other.
    for (int f : region.bigon_faces) {
      for (Dart dd : d.faces[f].darts) {
        if (d.under_at(dd) == d.under_at(d.alpha(dd))) region.alternating = false;
      }
    }
    // Handedness convention: at the minimal chain crossing, whether the under
    // slot of the first bigon pair precedes the over slot counterclockwise.
    if (!region.bigon_faces.empty()) {
      int c0 = region.chain.front();
      auto slots = bigon_slots_at(d, d.faces[region.bigon_faces.front()], c0);
      region.handedness = (slots[0] % 2 == 0) ? +1 : -1;
    }
  }

  ta.t = static_cast<int>(ta.regions.size());
  ta.h = 0;
  for (const auto& region : ta.regions) {
    ta.h = ta.h == 0 ? region.n : std::min(ta.h, region.n);
    if (!region.alternating) ta.all_alternating = false;
  }
  return ta;
}

PrimeResult is_prime(const Diagram& d) {
  // Nugatory crossings: a face meeting two opposite corners.
  for (int c = 0; c < d.num_crossings(); ++c) {
    for (int j = 0; j < 2; ++j) {
      if (d.face_of_corner(c, j) == d.face_of_corner(c, j + 2)) {
        PrimeWitness w;
        w.kind = PrimeWitness::NugatoryCrossing;
        w.crossing = c;
        w.corner = j;
        w.f = d.face_of_corner(c, j);
        return {false, w};
      }
    }
  }
  // Two-edge cuts: edges sharing both side faces.
  for (int e1 = 1; e1 <= d.num_edges; ++e1) {
    auto s1 = d.edge_sides(e1);
    if (s1[0] == s1[1]) continue;  // bridge; cannot occur in a 4-valent graph
    for (int e2 = e1 + 1; e2 <= d.num_edges; ++e2) {
      auto s2 = d.edge_sides(e2);
      bool match = (s1[0] == s2[0] && s1[1] == s2[1]) || (s1[0] == s2[1] && s1[1] == s2[0]);
      if (!match) continue;
      PrimeWitness w;
      w.kind = PrimeWitness::TwoEdgeCut;
      w.e1 = e1;
      w.e2 = e2;
      w.f = s1[0];
      w.g = s1[1];
      // Crossings on one side: flood from e1's first endpoint without using e1, e2.
      std::vector<char> seen(d.num_crossings(), 0);
      std::vector<int> stack{dart_crossing(d.edge_darts[e1 - 1][0])};
      seen[stack[0]] = 1;
      while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        w.side_a.push_back(c);
        for (int s = 0; s < 4; ++s) {
          int e = d.crossings[c][s];
          if (e == e1 || e == e2) continue;
          int other = dart_crossing(d.alpha(make_dart(c, s)));
          if (!seen[other]) {
            seen[other] = 1;
            stack.push_back(other);
          }
        }
      }
      std::sort(w.side_a.begin(), w.side_a.end());
      return {false, w};
    }
  }
  return {true, std::nullopt};
}

TwistReducedResult is_twist_reduced(const Diagram& d, const TwistAnalysis& ta) {
  for (int c1 = 0; c1 < d.num_crossings(); ++c1) {
    for (int c2 = c1 + 1; c2 < d.num_crossings(); ++c2) {
      if (ta.crossing_region[c1] == ta.crossing_region[c2]) continue;
      for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
          int f = d.face_of_corner(c1, j);
          int g = d.face_of_corner(c1, j + 2);
          if (f == g) continue;  // nugatory configuration, reported by is_prime
          if (d.face_of_corner(c2, k) == f && d.face_of_corner(c2, k + 2) == g) {
            FlypeWitness w;
            w.c1 = c1;
            w.c2 = c2;
            w.corner1 = j;
            w.corner2 = k;
            w.f = f;
            w.g = g;
            return {false, w};
          }
        }
      }
    }
  }
  return {true, std::nullopt};
}

TwistReducedResult is_twist_reduced(const Diagram& d) {
  return is_twist_reduced(d, twist_regions(d));
}

HypothesisReport check_hypotheses(const Diagram& d) {
  HypothesisReport r;
  r.connected = d.connected;
  r.is_knot = d.is_knot();
  TwistAnalysis ta = twist_regions(d);
  r.t = ta.t;
  r.h = ta.h;
  r.regions_alternating = ta.all_alternating;
  PrimeResult pr = is_prime(d);
  r.prime = pr.prime;
  r.prime_witness = pr.witness;
  TwistReducedResult tr = is_twist_reduced(d, ta);
  r.twist_reduced = tr.reduced;
  r.flype_witness = tr.witness;
  r.hypotheses_met = r.connected && r.prime && r.twist_reduced && r.t >= 2 && r.h >= 6;
  return r;
}

}  // namespace auglink
