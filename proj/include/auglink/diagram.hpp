#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace auglink {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A dart is one of the four edge-ends at a crossing, encoded as
// 4*crossing + slot. Slots follow the PD convention: tuples list edge ids
// counterclockwise starting from the incoming under-strand, so slots 0 and 2
// carry the under-strand and slots 1 and 3 the over-strand.
using Dart = int;

inline int dart_crossing(Dart d) { return d >> 2; }
inline int dart_slot(Dart d) { return d & 3; }
inline Dart make_dart(int crossing, int slot) { return crossing * 4 + slot; }

struct Face {
  std::vector<Dart> darts;  // boundary cycle in trace order
  int degree() const { return static_cast<int>(darts.size()); }
  bool is_bigon() const { return darts.size() == 2; }
};

// A connected 4-valent planar link projection with rotation system.
// Immutable after construction; all derived tables are built by parse_pd
// (or attach_combinatorics for programmatic construction).
struct Diagram {
  std::vector<std::array<int, 4>> crossings;  // edge ids, 1-based
  int num_edges = 0;                          // == 2 * crossings.size()

  std::vector<Face> faces;
  std::vector<int> dart_face;                  // dart -> face index
  std::vector<std::array<Dart, 2>> edge_darts; // edge (0-based) -> its two darts
  std::vector<int> edge_component;             // edge (0-based) -> component id
  int num_components = 0;
  bool connected = false;

  int num_crossings() const { return static_cast<int>(crossings.size()); }
  int num_darts() const { return 4 * num_crossings(); }

  int edge_at(Dart d) const { return crossings[dart_crossing(d)][dart_slot(d)]; }
  // The other dart of the edge at d.
  Dart alpha(Dart d) const {
    const auto& pair = edge_darts[edge_at(d) - 1];
    return pair[0] == d ? pair[1] : pair[0];
  }
  Dart sigma(Dart d) const { return make_dart(dart_crossing(d), (dart_slot(d) + 1) & 3); }
  Dart sigma_inv(Dart d) const { return make_dart(dart_crossing(d), (dart_slot(d) + 3) & 3); }
  // Face traversal successor: cross the edge, then turn to the next slot.
  Dart face_next(Dart d) const { return sigma(alpha(d)); }

  bool under_at(Dart d) const { return (dart_slot(d) & 1) == 0; }

  // Face occupying the corner of crossing c between slots j and j+1.
  int face_of_corner(int c, int j) const { return dart_face[make_dart(c, (j + 1) & 3)]; }

  // The two faces on the sides of an edge.
  std::array<int, 2> edge_sides(int edge) const {
    const auto& pair = edge_darts[edge - 1];
    return {dart_face[pair[0]], dart_face[pair[1]]};
  }

  bool is_knot() const { return num_components == 1; }
};

// Parses PD text of the form "X[1,4,2,3] X[3,6,4,5] X[5,2,6,1]".
// Checks: tuple arity, every edge id in 1..2V appearing exactly twice, and
// that the rotation system is spherical (V - E + F = 2). A disconnected
// diagram parses fine and is merely flagged.
Diagram parse_pd(const std::string& text);

// Builds the derived tables of a programmatically constructed diagram.
// Same validation as parse_pd.
void attach_combinatorics(Diagram& d);

// Canonical PD serialization; parse_pd(serialize_pd(d)) reproduces d exactly.
std::string serialize_pd(const Diagram& d);

}  // namespace auglink
