#pragma once

#include <string>

#include "json.hpp"
#include "polyent/classify.hpp"
#include "polyent/fixstruct.hpp"
#include "polyent/horseshoe.hpp"
#include "polyent/plmap.hpp"
#include "polyent/seporacle.hpp"

namespace polyent {

// All rational coordinates serialize as canonical "p/q" strings ("p" when the
// denominator is 1), so files round-trip exactly.

nlohmann::json plmap_to_json(const PLMap& f);
/// Throws ParseError on malformed documents; breakpoint validation (monotone
/// x spanning [0,1], y within range) is the PLMap constructor's.
PLMap plmap_from_json(const nlohmann::json& j);

// Certificate format: {"iterate": k, "intervals": [["a","b"], ...],
// "witness": "p/q"} plus an optional "escape": {"steps": t, "period": p}
// block for maps whose witness needs an explicit eventually-periodic tail.
nlohmann::json certificate_to_json(const HorseshoeCertificate& cert);
HorseshoeCertificate certificate_from_json(const nlohmann::json& j);

// Fixed components, essential intervals with orientation and source, orbit
// far ends, covering edges, and the longest chain, all exact.
nlohmann::json structure_to_json(const PLMap& f, const Budget& budget = {});

nlohmann::json entropy_report_to_json(const EntropyReport& rep);

nlohmann::json slope_to_json(const SlopeEstimate& est);
nlohmann::json sep_table_to_json(const SepTable& table);
std::string sep_table_csv(const SepTable& table);

PLMap load_plmap(const std::string& path);
HorseshoeCertificate load_certificate(const std::string& path);
nlohmann::json load_json(const std::string& path);

}  // namespace polyent
