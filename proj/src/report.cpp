#include "auglink/report.hpp"

// vendor single-header nlohmann/json

namespace auglink::report {

std::string rational_str(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Json diagram_json(const Diagram& d) {
  Json j;
  j["pd"] = serialize_pd(d);
  j["crossings"] = d.num_crossings();
  j["edges"] = d.num_edges;
  j["faces"] = d.faces.size();
  j["components"] = d.num_components;
  j["connected"] = d.connected;
  Json degs = Json::array();
  for (const auto& f : d.faces) degs.push_back(f.degree());
  j["face_degrees"] = degs;
  return j;
}

Json twist_json(const TwistAnalysis& ta) {
  Json j;
  j["t"] = ta.t;
  j["h"] = ta.h;
  j["all_alternating"] = ta.all_alternating;
  Json regions = Json::array();
  for (const auto& r : ta.regions) {
    Json jr;
    jr["n"] = r.n;
    jr["crossings"] = r.chain;
    jr["alternating"] = r.alternating;
    jr["cyclic"] = r.cyclic;
    jr["handedness"] = r.handedness;
    regions.push_back(jr);
  }
  j["regions"] = regions;
  return j;
}

Json hypotheses_json(const HypothesisReport& r) {
  Json j;
  j["connected"] = r.connected;
  j["prime"] = r.prime;
  j["twist_reduced"] = r.twist_reduced;
  j["is_knot"] = r.is_knot;
  j["regions_alternating"] = r.regions_alternating;
  j["t"] = r.t;
  j["h"] = r.h;
  j["hypotheses_met"] = r.hypotheses_met;
  if (r.prime_witness) {
    Json w;
    if (r.prime_witness->kind == PrimeWitness::TwoEdgeCut) {
      w["kind"] = "two_edge_cut";
      w["edges"] = {r.prime_witness->e1, r.prime_witness->e2};
      w["faces"] = {r.prime_witness->f, r.prime_witness->g};
      w["side_crossings"] = r.prime_witness->side_a;
    } else {
      w["kind"] = "nugatory_crossing";
      w["crossing"] = r.prime_witness->crossing;
      w["corner"] = r.prime_witness->corner;
    }
    j["prime_witness"] = w;
  }
  if (r.flype_witness) {
    Json w;
    w["crossings"] = {r.flype_witness->c1, r.flype_witness->c2};
    w["corners"] = {r.flype_witness->corner1, r.flype_witness->corner2};
    w["faces"] = {r.flype_witness->f, r.flype_witness->g};
    j["flype_witness"] = w;
  }
  return j;
}

Json augmented_json(const AugmentedStructure& a) {
  Json j;
  j["flat"] = a.flat;
  Json circles = Json::array();
  for (size_t i = 0; i < a.circles.size(); ++i) {
    const auto& c = a.circles[i];
    Json jc;
    jc["region"] = c.region;
    jc["n"] = c.n;
    jc["handedness"] = c.handedness;
    jc["filling_slope"] = {c.filling_slope().first, c.filling_slope().second};
    if (a.flat) {
      jc["parity"] = a.parity[i];
      jc["removed_full_twists"] = a.removed_full_twists[i];
    }
    circles.push_back(jc);
  }
  j["circles"] = circles;
  return j;
}

Json polyhedron_json(const Polyhedron& p) {
  Json j;
  j["mirrored"] = p.mirrored;
  Json vs = Json::array();
  for (const auto& v : p.vertices) {
    Json jv;
    jv["cusp"] = v.cls == CuspClass::CrossingCircle ? "circle" : "knot";
    if (v.cls == CuspClass::CrossingCircle)
      jv["region"] = v.region;
    else
      jv["strand_edge"] = v.strand_edge;
    vs.push_back(jv);
  }
  j["vertices"] = vs;
  Json es = Json::array();
  for (const auto& e : p.edges) {
    Json je;
    je["v"] = {e.v0, e.v1};
    je["kind"] = e.kind == PolyEdge::Spoke ? "spoke" : "opposite";
    je["region"] = e.region;
    je["end"] = e.end;
    es.push_back(je);
  }
  j["edges"] = es;
  Json fs = Json::array();
  for (const auto& f : p.faces) {
    Json jf;
    jf["color"] = f.color == FaceColor::White ? "white" : "shaded";
    jf["edges"] = f.edges;
    jf["corners"] = f.corners;
    if (f.color == FaceColor::Shaded) {
      jf["region"] = f.region;
      jf["end"] = f.end;
    } else {
      jf["diagram_face"] = f.diagram_face;
    }
    fs.push_back(jf);
  }
  j["faces"] = fs;
  return j;
}

Json decomposition_json(const Decomposition& dec) {
  Json j;
  j["polyhedron"] = polyhedron_json(dec.P);
  j["mirror_identical"] = true;
  Json gluings = Json::array();
  for (const auto& g : dec.shaded_gluings) {
    Json jg;
    jg["region"] = g.region;
    jg["twisted"] = g.twisted;
    gluings.push_back(jg);
  }
  j["shaded_gluings"] = gluings;
  j["white_gluing"] = "identity";
  j["non_prime_flagged"] = dec.non_prime_flagged;
  return j;
}

Json validation_json(const ValidationReport& r) {
  Json j;
  j["all_pass"] = r.all_pass;
  Json items = Json::array();
  for (const auto& item : r.items) {
    Json ji;
    ji["name"] = item.name;
    ji["pass"] = item.pass;
    if (!item.detail.empty()) ji["detail"] = item.detail;
    items.push_back(ji);
  }
  j["checks"] = items;
  return j;
}

Json curve_json(const NormalCurve& c) {
  Json j;
  j["word"] = c.word();
  j["edge_crossings"] = c.interior_edge_crossings();
  j["boundary_visits"] = c.boundary_face_visits();
  j["area_half_pi"] = area(c).half_pi_units;
  Json segs = Json::array();
  for (const auto& s : c.cusp_segments()) {
    Json js;
    js["cusp"] = s.cls == CuspClass::CrossingCircle ? "circle" : "knot";
    js["kind"] = s.kind == SegmentKind::SParallel
                     ? "s"
                     : (s.kind == SegmentKind::Diagonal ? "diagonal" : "w");
    if (s.region >= 0) js["region"] = s.region;
    segs.push_back(js);
  }
  j["cusp_segments"] = segs;
  if (c.circle_segment_count() > 0) {
    j["length_pi"] = rational_str(comb_length(c).front().pi_multiple);
  }
  return j;
}

Json enumeration_json(const std::vector<NormalCurve>& curves) {
  Json j = Json::array();
  for (const auto& c : curves) j.push_back(curve_json(c));
  return j;
}

Json evidence_json(const LemmaEvidence& ev) {
  Json j;
  j["lemma"] = ev.lemma_id;
  j["universe"] = ev.universe;
  j["verified"] = ev.verified();
  Json cex = Json::array();
  for (const auto& c : ev.counterexamples) {
    Json jc;
    jc["curve"] = curve_json(c.curve);
    jc["circle_visits"] = c.interpretation.circle_visits;
    jc["knot_visits"] = c.interpretation.knot_visits;
    jc["link_intersections"] = c.interpretation.link_intersections;
    jc["regions"] = c.interpretation.regions;
    cex.push_back(jc);
  }
  j["counterexamples"] = cex;
  return j;
}

Json spheres_json(const std::vector<SphereDescriptor>& spheres) {
  Json j = Json::array();
  for (const auto& s : spheres) {
    Json js;
    js["kind"] = s.kind == SphereDescriptor::StrandCollar ? "strand_collar" : "face_cycle";
    js["edges"] = s.edges;
    if (!s.faces.empty()) js["faces"] = s.faces;
    js["punctures"] = s.punctures;
    js["inessential_candidate"] = s.inessential_candidate;
    j.push_back(js);
  }
  return j;
}

Json certificate_json(const BoundCertificate& cert) {
  Json j;
  j["pd"] = cert.pd;
  j["hypotheses"] = hypotheses_json(cert.hypotheses);
  j["is_knot"] = cert.is_knot;
  j["decomposed"] = cert.decomposed;
  if (!cert.decomposed) j["failure_reason"] = cert.failure_reason;
  if (cert.decomposed) j["validation"] = validation_json(cert.validation);
  Json ev = Json::array();
  for (const auto& e : cert.evidence) ev.push_back(evidence_json(e));
  j["evidence"] = ev;
  Json closed;
  closed["surface_class"] = "closed";
  closed["b_min"] = cert.b_closed;
  closed["chi_bound"] = rational_str(cert.chi_closed);
  closed["genus_bound"] = cert.genus_closed;
  j["closed"] = closed;
  Json mer;
  mer["surface_class"] = "meridional";
  Json cases = Json::array();
  for (const auto& mc : cert.meridional) {
    Json jc;
    jc["b"] = mc.b == 6 ? Json(">=6") : Json(mc.b);
    if (mc.chi)
      jc["chi_bound"] = rational_str(*mc.chi);
    else
      jc["alternative"] = "sphere visible in the projection plane";
    cases.push_back(jc);
  }
  mer["cases"] = cases;
  mer["visible_spheres"] = spheres_json(cert.visible_spheres);
  j["meridional"] = mer;
  j["binding"] = cert.binding;
  return j;
}

Json envelope(const std::string& command, Json body) {
  Json j;
  j["format_version"] = 1;
  j["tool"] = "auglink";
  j["command"] = command;
  j["result"] = std::move(body);
  return j;
}

}  // namespace auglink::report
