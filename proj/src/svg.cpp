#include "auglink/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace auglink {

namespace {

struct Pt {
  double x = 0, y = 0;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v + 0.0);  // normalize -0
  return buf;
}

}  // namespace

std::string render_svg(const Diagram& d, const SvgOverlays& overlays) {
  TwistAnalysis ta = twist_regions(d);
  for (int r : overlays.region_ids)
    if (r < 0 || r >= ta.t)
      throw std::invalid_argument("overlay references unknown twist region " + std::to_string(r));

  const int V = d.num_crossings();
  // Outer face: largest, ties to the smallest id.
  int outer = 0;
  for (size_t f = 1; f < d.faces.size(); ++f)
    if (d.faces[f].degree() > d.faces[outer].degree()) outer = static_cast<int>(f);

  std::vector<Pt> pos(V);
  std::vector<char> fixed(V, 0);
  std::vector<int> rim;
  for (Dart dd : d.faces[outer].darts) {
    int c = dart_crossing(dd);
    if (!fixed[c]) {
      fixed[c] = 1;
      rim.push_back(c);
    }
  }
  const double R = 200.0, CX = 256.0, CY = 256.0;
  for (size_t i = 0; i < rim.size(); ++i) {
    double ang = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(rim.size());
    pos[rim[i]] = {CX + R * std::cos(ang), CY + R * std::sin(ang)};
  }
  for (int c = 0; c < V; ++c)
    if (!fixed[c]) pos[c] = {CX, CY};
  // Barycentric relaxation; deterministic fixed iteration count.
  for (int iter = 0; iter < 400; ++iter) {
    for (int c = 0; c < V; ++c) {
      if (fixed[c]) continue;
      double sx = 0, sy = 0;
      int k = 0;
      for (int s = 0; s < 4; ++s) {
        int other = dart_crossing(d.alpha(make_dart(c, s)));
        if (other == c) continue;
        sx += pos[other].x;
        sy += pos[other].y;
        k++;
      }
      if (k) pos[c] = {sx / k, sy / k};
    }
  }

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" "
         "viewBox=\"0 0 512 512\">\n";
  svg << "<rect width=\"512\" height=\"512\" fill=\"white\"/>\n";

  // Overlay: twist-region hulls behind the strands.
  auto want_region = [&](int r) {
    if (!overlays.twist_regions && overlays.region_ids.empty() && !overlays.crossing_circles)
      return false;
    if (!overlays.region_ids.empty())
      return std::find(overlays.region_ids.begin(), overlays.region_ids.end(), r) !=
             overlays.region_ids.end();
    return overlays.twist_regions || overlays.crossing_circles;
  };
  for (int r = 0; r < ta.t; ++r) {
    if (!want_region(r)) continue;
    double cx = 0, cy = 0;
    double rad = 18.0;
    for (int c : ta.regions[r].chain) {
      cx += pos[c].x;
      cy += pos[c].y;
    }
    cx /= ta.regions[r].n;
    cy /= ta.regions[r].n;
    for (int c : ta.regions[r].chain)
      rad = std::max(rad, 14.0 + std::hypot(pos[c].x - cx, pos[c].y - cy));
    if (overlays.twist_regions || !overlays.region_ids.empty())
      svg << "<circle class=\"twist-region\" id=\"region" << r << "\" cx=\"" << num(cx)
          << "\" cy=\"" << num(cy) << "\" r=\"" << num(rad)
          << "\" fill=\"#fce8b2\" stroke=\"#c90\" stroke-dasharray=\"4 3\"/>\n";
    if (overlays.crossing_circles)
      svg << "<ellipse class=\"crossing-circle\" id=\"circle" << r << "\" cx=\"" << num(cx)
          << "\" cy=\"" << num(cy) << "\" rx=\"" << num(rad * 0.9) << "\" ry=\""
          << num(rad * 0.35) << "\" fill=\"none\" stroke=\"#c00\" stroke-width=\"2\"/>\n";
  }

  // Strands: each edge as a curve bulging toward the midpoint of its two
  // endpoints, retreating from the crossing on under-strand ends.
  for (int e = 1; e <= d.num_edges; ++e) {
    Dart d0 = d.edge_darts[e - 1][0], d1 = d.edge_darts[e - 1][1];
    Pt a = pos[dart_crossing(d0)], b = pos[dart_crossing(d1)];
    double dx = b.x - a.x, dy = b.y - a.y;
    double len = std::max(1.0, std::hypot(dx, dy));
    // Loops and parallel edges get a visible bow.
    double bow = (dart_crossing(d0) == dart_crossing(d1)) ? 60.0 : 18.0 * ((e % 3) - 1);
    Pt m{(a.x + b.x) / 2 - dy / len * bow, (a.y + b.y) / 2 + dx / len * bow};
    auto retreat = [&](Pt p, Pt toward, bool under) {
      if (!under) return p;
      double ux = toward.x - p.x, uy = toward.y - p.y;
      double ul = std::max(1.0, std::hypot(ux, uy));
      return Pt{p.x + ux / ul * 10.0, p.y + uy / ul * 10.0};
    };
    Pt a2 = retreat(a, m, d.under_at(d0));
    Pt b2 = retreat(b, m, d.under_at(d1));
    svg << "<path class=\"strand\" id=\"edge" << e << "\" d=\"M " << num(a2.x) << ' '
        << num(a2.y) << " Q " << num(m.x) << ' ' << num(m.y) << ' ' << num(b2.x) << ' '
        << num(b2.y) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2.5\"/>\n";
  }
  for (int c = 0; c < V; ++c)
    svg << "<circle class=\"crossing\" id=\"crossing" << c << "\" cx=\"" << num(pos[c].x)
        << "\" cy=\"" << num(pos[c].y) << "\" r=\"2\" fill=\"#666\"/>\n";

  // Projected curves: polylines through region centers and strand midpoints.
  int curve_id = 0;
  for (const auto& pc : overlays.projected_curves) {
    std::ostringstream pts;
    for (const auto& x : pc.crossings) {
      double cx = 0, cy = 0;
      if (x.kind == ProjectionDescriptor::Crossing::RegionPass) {
        if (x.region < 0 || x.region >= ta.t)
          throw std::invalid_argument("projected curve references unknown region " +
                                      std::to_string(x.region));
        for (int c : ta.regions[x.region].chain) {
          cx += pos[c].x;
          cy += pos[c].y;
        }
        cx /= ta.regions[x.region].n;
        cy /= ta.regions[x.region].n;
      } else {
        Dart d0 = d.edge_darts[x.strand_edge - 1][0], d1 = d.edge_darts[x.strand_edge - 1][1];
        cx = (pos[dart_crossing(d0)].x + pos[dart_crossing(d1)].x) / 2;
        cy = (pos[dart_crossing(d0)].y + pos[dart_crossing(d1)].y) / 2;
      }
      pts << num(cx) << ',' << num(cy) << ' ';
    }
    svg << "<polygon class=\"projected-curve\" id=\"curve" << curve_id++ << "\" points=\""
        << pts.str() << "\" fill=\"none\" stroke=\"#06c\" stroke-width=\"1.5\" "
           "stroke-dasharray=\"6 3\"/>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace auglink
