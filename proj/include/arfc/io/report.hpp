#pragma once

// Serialization of pipeline results: JSON, plain text and DOT.

#include <string>
#include <vector>

#include <json.hpp>

#include "arfc/io/pipeline.hpp"

namespace arfc::io {

using Vars = std::vector<std::string>;

nlohmann::json element_json(const CurveElement& e, const Vars& vars);
nlohmann::json curve_json(const Parametrization& p, const Vars& vars);
nlohmann::json tree_json(const PipelineResult& r);
nlohmann::json presentation_json(const ClosurePresentation& pres, const Vars& vars);
nlohmann::json bound_json(const BoundReport& b, const Parametrization& truncated, const Vars& vars);
nlohmann::json trace_json(const LipmanSequence& seq, const Vars& vars);

/// The documented output object: sequences, ram, conductor, small_elements,
/// presentation, bound, arf_check.
nlohmann::json closure_json(const PipelineResult& r, const Vars& vars);

std::string tree_text(const PipelineResult& r);
std::string closure_text(const PipelineResult& r, const Vars& vars);
std::string bound_text(const BoundReport& b, const Parametrization& truncated, const Vars& vars);
std::string trace_text(const LipmanSequence& seq, const Vars& vars);

/// Multiplicity tree as a directed graph; with a minimal tree the node
/// elements are added to the labels.
std::string tree_dot(const MultiplicityTree& t, const MinimalTree* mt, const Vars& vars);

}  // namespace arfc::io
