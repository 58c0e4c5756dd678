#include "auglink/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace auglink {

namespace {

// Iterative union-find, path halving.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<std::array<int, 4>> tokenize(const std::string& text) {
  std::vector<std::array<int, 4>> out;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    char c = text[i];
    if (c != 'X' && c != 'x')
      throw ParseError("malformed token at position " + std::to_string(i) +
                       ": expected 'X', got '" + std::string(1, c) + "'");
    ++i;
    skip_ws();
    if (i >= text.size() || (text[i] != '[' && text[i] != '('))
      throw ParseError("malformed token: expected '[' after 'X'");
    char close = text[i] == '[' ? ']' : ')';
    ++i;
    std::array<int, 4> tuple{};
    int count = 0;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == close) {
        ++i;
        break;
      }
      if (i >= text.size()) throw ParseError("malformed token: unterminated tuple");
      size_t start = i;
      while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '-'))
        ++i;
      if (start == i) throw ParseError("malformed token: expected integer");
      int value = std::stoi(text.substr(start, i - start));
      if (count >= 4) throw ParseError("tuple arity: crossing tuple has more than 4 entries");
      tuple[count++] = value;
    }
    if (count != 4)
      throw ParseError("tuple arity: crossing tuple has " + std::to_string(count) + " entries");
    out.push_back(tuple);
    skip_ws();
  }
  return out;
}

}  // namespace

void attach_combinatorics(Diagram& d) {
  const int v = d.num_crossings();
  if (v == 0) throw ParseError("no crossings");
  d.num_edges = 2 * v;

  d.edge_darts.assign(d.num_edges, {-1, -1});
  for (int c = 0; c < v; ++c) {
    for (int s = 0; s < 4; ++s) {
      int e = d.crossings[c][s];
      if (e < 1 || e > d.num_edges)
        throw ParseError("edge id " + std::to_string(e) + " out of range 1.." +
                         std::to_string(d.num_edges));
      auto& pair = d.edge_darts[e - 1];
      if (pair[0] < 0)
        pair[0] = make_dart(c, s);
      else if (pair[1] < 0)
        pair[1] = make_dart(c, s);
      else
        throw ParseError("edge " + std::to_string(e) + " appears more than twice");
    }
  }
  for (int e = 0; e < d.num_edges; ++e)
    if (d.edge_darts[e][1] < 0)
      throw ParseError("edge " + std::to_string(e + 1) + " appears " +
                       std::string(d.edge_darts[e][0] < 0 ? "zero times" : "once"));

  // Connectivity of the 4-valent graph (a disconnected diagram is legal,
  // just flagged; each piece must embed in its own sphere).
  int graph_components = 0;
  {
    UnionFind uf(v);
    for (int e = 0; e < d.num_edges; ++e)
      uf.unite(dart_crossing(d.edge_darts[e][0]), dart_crossing(d.edge_darts[e][1]));
    std::vector<char> seen(v, 0);
    for (int c = 0; c < v; ++c) {
      int r = uf.find(c);
      if (!seen[r]) {
        seen[r] = 1;
        graph_components++;
      }
    }
    d.connected = graph_components == 1;
  }

  // Trace faces as orbits of sigma(alpha(.)).
  d.faces.clear();
  d.dart_face.assign(d.num_darts(), -1);
  for (Dart start = 0; start < d.num_darts(); ++start) {
    if (d.dart_face[start] >= 0) continue;
    Face f;
    Dart cur = start;
    do {
      d.dart_face[cur] = static_cast<int>(d.faces.size());
      f.darts.push_back(cur);
      cur = d.face_next(cur);
    } while (cur != start);
    d.faces.push_back(std::move(f));
  }
  int euler = v - d.num_edges + static_cast<int>(d.faces.size());
  if (euler != 2 * graph_components)
    throw ParseError("non-planar rotation system: V - E + F = " + std::to_string(euler));

  // Link components: edges joined through a crossing when they form the
  // under-strand (slots 0,2) or the over-strand (slots 1,3).
  {
    UnionFind uf(d.num_edges);
    for (int c = 0; c < v; ++c) {
      uf.unite(d.crossings[c][0] - 1, d.crossings[c][2] - 1);
      uf.unite(d.crossings[c][1] - 1, d.crossings[c][3] - 1);
    }
    d.edge_component.assign(d.num_edges, -1);
    int next = 0;
    for (int e = 0; e < d.num_edges; ++e) {
      int r = uf.find(e);
      if (d.edge_component[r] < 0) d.edge_component[r] = next++;
      d.edge_component[e] = d.edge_component[r];
    }
    d.num_components = next;
  }
}

Diagram parse_pd(const std::string& text) {
  Diagram d;
  d.crossings = tokenize(text);
  if (d.crossings.empty()) throw ParseError("no crossings");
  attach_combinatorics(d);
  return d;
}

std::string serialize_pd(const Diagram& d) {
  std::ostringstream out;
  for (size_t c = 0; c < d.crossings.size(); ++c) {
    if (c) out << ' ';
    out << "X[" << d.crossings[c][0] << ',' << d.crossings[c][1] << ',' << d.crossings[c][2]
        << ',' << d.crossings[c][3] << ']';
  }
  return out.str();
}

}  // namespace auglink
