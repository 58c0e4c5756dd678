#include "auglink/bounds.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace auglink {

WitnessInterpretation interpret_witness(const NormalCurve& c) {
  WitnessInterpretation w;
  for (const auto& s : c.cusp_segments()) {
    if (s.cls == CuspClass::CrossingCircle) {
      w.circle_visits++;
      w.regions.push_back(s.region);
    } else {
      w.knot_visits++;
    }
  }
  w.link_intersections = 2 * w.circle_visits + w.knot_visits;
  return w;
}

LemmaEvidence verify_must_meet_circle(const BoundaryComplex& bc) {
  LemmaEvidence ev;
  ev.lemma_id = "surface_meets_a_crossing_circle";
  ev.universe =
      "all embedded normal curves avoiding every shaded face and every boundary face";
  EnumerationConstraints cons;
  cons.shaded = EnumerationConstraints::ShadedPolicy::Forbid;
  cons.allow_knot_cusps = false;
  cons.allow_circle_cusps = false;
  for (auto& c : enumerate_normal_curves(bc, cons))
    ev.counterexamples.push_back({c, interpret_witness(c)});
  return ev;
}

LemmaEvidence verify_one_cusp_forces_K(const BoundaryComplex& bc) {
  LemmaEvidence ev;
  ev.lemma_id = "one_circle_cusp_forces_knot_cusp";
  ev.universe =
      "embedded normal curves of surface type (shaded arcs run circle corner to opposite "
      "edge) with exactly one crossing-circle visit and no knot-strand visit";
  EnumerationConstraints cons;
  cons.shaded = EnumerationConstraints::ShadedPolicy::DiskType;
  cons.allow_knot_cusps = false;
  cons.allow_circle_cusps = true;
  cons.max_boundary_visits = 1;
  for (auto& c : enumerate_normal_curves(bc, cons)) {
    auto w = interpret_witness(c);
    if (w.circle_visits == 1 && w.knot_visits == 0)
      ev.counterexamples.push_back({c, w});
  }
  return ev;
}

LemmaEvidence verify_three_circles(const BoundaryComplex& bc) {
  LemmaEvidence ev;
  ev.lemma_id = "surface_meets_three_crossing_circles";
  ev.universe =
      "embedded normal curves avoiding shaded faces and knot cusps with s-parallel "
      "segments in exactly two distinct crossing-circle cusps";
  EnumerationConstraints cons;
  cons.shaded = EnumerationConstraints::ShadedPolicy::Forbid;
  cons.allow_knot_cusps = false;
  cons.allow_circle_cusps = true;
  cons.max_boundary_visits = 2;
  for (auto& c : enumerate_normal_curves(bc, cons)) {
    auto segs = c.cusp_segments();
    if (segs.size() != 2) continue;
    bool both_s = segs[0].kind == SegmentKind::SParallel && segs[1].kind == SegmentKind::SParallel;
    if (!both_s) continue;
    if (segs[0].region == segs[1].region) continue;
    ev.counterexamples.push_back({c, interpret_witness(c)});
  }
  return ev;
}

BoundaryCountResult min_boundary_count(bool is_knot, SurfaceClass cls) {
  BoundaryCountResult r;
  r.cls = cls;
  if (cls == SurfaceClass::Closed) {
    r.b_min = is_knot ? 12 : 6;
  } else {
    r.cases = {0, 2, 4, 6};
    r.b_min = 0;
  }
  return r;
}

Rational chi_bound(int h, bool is_knot, SurfaceClass cls, int b_case) {
  if (h < 1) throw std::invalid_argument("chi_bound requires h >= 1");
  if (cls == SurfaceClass::Closed)
    return is_knot ? Rational(10 - 2 * h) : Rational(5 - h);
  if (b_case == 2) return Rational(1 - h);
  if (b_case == 4) return Rational(3 - h);
  if (b_case >= 6) return Rational(5 - h);
  throw std::invalid_argument("no Euler characteristic bound for meridional b = " +
                              std::to_string(b_case) + "; that case is the visible sphere");
}

int genus_bound(const Rational& chi, int punctures, bool orientable) {
  if (!orientable)
    throw std::invalid_argument("genus bounds for non-orientable surfaces are unsupported");
  // Smallest integer g with 2 - 2g - punctures <= chi.
  Rational need = (Rational(2 - punctures) - chi) / Rational(2);
  long long g = need.numerator() / need.denominator();
  if (Rational(g) < need) g += 1;
  return static_cast<int>(std::max(0LL, g));
}

std::vector<SphereDescriptor> visible_meridional_spheres(const Diagram& d) {
  if (!d.connected)
    throw std::invalid_argument("visible sphere search requires a connected diagram");
  TwistAnalysis ta = twist_regions(d);

  std::vector<char> internal_edge(d.num_edges + 1, 0);
  for (const auto& region : ta.regions)
    for (int f : region.bigon_faces)
      for (Dart dd : d.faces[f].darts) internal_edge[d.edge_at(dd)] = 1;

  std::vector<SphereDescriptor> out;
  std::vector<int> external;
  for (int e = 1; e <= d.num_edges; ++e)
    if (!internal_edge[e]) external.push_back(e);

  for (int e : external) {
    SphereDescriptor s;
    s.kind = SphereDescriptor::StrandCollar;
    s.edges = {e};
    s.punctures = 2;
    s.inessential_candidate = true;
    out.push_back(s);
  }

  // Simple cycles in (non-bigon faces, external edges).
  std::set<std::vector<int>> seen;
  std::vector<int> edge_path, face_path;
  std::vector<char> edge_used(d.num_edges + 1, 0), face_used(d.faces.size(), 0);

  auto canonical_cycle = [](std::vector<int> edges) {
    std::vector<int> best = edges;
    auto consider = [&](std::vector<int> w) {
      for (size_t r = 0; r < w.size(); ++r) {
        if (w < best) best = w;
        std::rotate(w.begin(), w.begin() + 1, w.end());
      }
    };
    consider(edges);
    std::reverse(edges.begin(), edges.end());
    consider(edges);
    return best;
  };

  std::function<void(int, int)> dfs = [&](int start_face, int face) {
    for (int e : external) {
      if (edge_used[e]) continue;
      auto sides = d.edge_sides(e);
      int next = sides[0] == face ? sides[1] : (sides[1] == face ? sides[0] : -1);
      if (next < 0) continue;
      if (next == start_face && edge_path.size() >= 1) {
        std::vector<int> cycle = edge_path;
        cycle.push_back(e);
        if (cycle.size() >= 2) {
          auto canon = canonical_cycle(cycle);
          if (seen.insert(canon).second) {
            SphereDescriptor s;
            s.kind = SphereDescriptor::FaceCycle;
            s.edges = cycle;
            s.faces = face_path;
            s.punctures = static_cast<int>(cycle.size());
            s.inessential_candidate = s.punctures == 2;
            out.push_back(s);
          }
        }
        continue;
      }
      if (face_used[next]) continue;
      edge_used[e] = 1;
      face_used[next] = 1;
      edge_path.push_back(e);
      face_path.push_back(next);
      dfs(start_face, next);
      edge_path.pop_back();
      face_path.pop_back();
      face_used[next] = 0;
      edge_used[e] = 0;
    }
  };
  for (size_t f = 0; f < d.faces.size(); ++f) {
    if (d.faces[f].is_bigon()) continue;
    face_used[f] = 1;
    face_path.assign(1, static_cast<int>(f));
    dfs(static_cast<int>(f), static_cast<int>(f));
    face_used[f] = 0;
  }
  return out;
}

BoundCertificate certify(const Diagram& d) {
  BoundCertificate cert;
  cert.pd = serialize_pd(d);
  cert.hypotheses = check_hypotheses(d);
  cert.is_knot = d.is_knot();

  try {
    AugmentedStructure aug = augment(d);
    AugmentedStructure flat = flatten(aug);
    Decomposition dec = decompose(flat);
    cert.decomposed = true;
    cert.validation = validate(dec);
    BoundaryComplex bc = boundary_complex(dec.P);
    cert.evidence.push_back(verify_must_meet_circle(bc));
    cert.evidence.push_back(verify_one_cusp_forces_K(bc));
    cert.evidence.push_back(verify_three_circles(bc));
  } catch (const std::exception& ex) {
    cert.decomposed = false;
    cert.failure_reason = ex.what();
  }

  const int h = std::max(1, cert.hypotheses.h);
  cert.b_closed = min_boundary_count(cert.is_knot, SurfaceClass::Closed).b_min;
  cert.chi_closed = Rational(cert.b_closed, 6) * Rational(5 - h);
  cert.genus_closed = genus_bound(cert.chi_closed, 0);
  for (int b : min_boundary_count(cert.is_knot, SurfaceClass::Meridional).cases) {
    BoundCertificate::MeridionalCase mc;
    mc.b = b;
    if (b > 0) mc.chi = chi_bound(h, cert.is_knot, SurfaceClass::Meridional, b);
    cert.meridional.push_back(mc);
  }
  if (d.connected) cert.visible_spheres = visible_meridional_spheres(d);

  bool lemmas_ok = true;
  for (const auto& ev : cert.evidence) lemmas_ok = lemmas_ok && ev.verified();
  cert.binding = cert.hypotheses.hypotheses_met && cert.decomposed &&
                 cert.validation.all_pass && lemmas_ok && !cert.evidence.empty();
  return cert;
}

}  // namespace auglink
