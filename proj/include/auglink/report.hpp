#pragma once

#include <json.hpp>

#include "auglink/bounds.hpp"

// Structured report format, version 1. All reports are deterministic:
// insertion-ordered keys, exact integers and rational strings, no floats.
namespace auglink::report {

using Json = nlohmann::ordered_json;

Json diagram_json(const Diagram& d);
Json twist_json(const TwistAnalysis& ta);
Json hypotheses_json(const HypothesisReport& r);
Json augmented_json(const AugmentedStructure& a);
Json polyhedron_json(const Polyhedron& p);
Json decomposition_json(const Decomposition& dec);
Json validation_json(const ValidationReport& r);
Json curve_json(const NormalCurve& c);
Json enumeration_json(const std::vector<NormalCurve>& curves);
Json evidence_json(const LemmaEvidence& ev);
Json spheres_json(const std::vector<SphereDescriptor>& spheres);
Json certificate_json(const BoundCertificate& cert);

std::string rational_str(const Rational& r);

// Top-level envelope with the mandatory version field.
Json envelope(const std::string& command, Json body);

}  // namespace auglink::report
