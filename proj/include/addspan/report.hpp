#pragma once

#include <string>

#include <json.hpp>

#include "addspan/dissociation.hpp"
#include "addspan/embedding.hpp"
#include "addspan/fourier.hpp"
#include "addspan/peeling.hpp"
#include "addspan/setops.hpp"
#include "addspan/structure.hpp"

namespace addspan {

using nlohmann::json;

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolName = "addspan";
inline constexpr const char* kToolVersion = "0.1.0";

// Exact quantities are integers or {num, den} pairs; Fourier-side floats
// travel with the tolerance used to judge them.
json to_json(const Element& e);
json to_json(const GSet& a);
json to_json(const Rational& r);
json to_json(const SignVector& sv);
json to_json(const EnergyCertificate& cert);
json to_json(const DissociationVerdict& v);
json to_json(const MarginReport& m);
json to_json(const LogConvexityReport& r);
json to_json(const HausdorffYoungReport& r);
json to_json(const RudinStats& s);
json to_json(const PeelingTrace& t);
json to_json(const PeelErrorNorm& e);
json to_json(const TorusEmbedding& e);
json to_json(const Thm1Thresholds& t);
json to_json(const StructureReport& r);
json to_json(const CoverReport& r);
json to_json(const Thm2Chain& c);

const char* to_string(SearchMode mode);

}  // namespace addspan
