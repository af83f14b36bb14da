#ifndef VCSS_REPORT_HPP
#define VCSS_REPORT_HPP

// JSON report emission (schema 1) and DOT snapshots.

#include <string>

#include "json.hpp"
#include "vcss/canonical.hpp"
#include "vcss/credits.hpp"
#include "vcss/gadget.hpp"
#include "vcss/pipeline.hpp"
#include "vcss/structure.hpp"

namespace vcss {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);
Json structure_report_json(const StructureReport& rep);
Json ledger_json(const CreditLedger& ledger);
Json gadget_map_json(const ReducedHost& rh);
Json canonical_trace_json(const std::vector<RewriteStep>& trace);
Json reduce_trace_json(const std::vector<ReduceStep>& trace);
Json pipeline_report_json(const Multigraph& g, const PipelineResult& result);

// Graphviz snapshot; cover edges drawn solid, the rest dotted.
std::string to_dot(const Multigraph& g, const EdgeSet* cover = nullptr);
void write_text_file(const std::string& path, const std::string& content);

} // namespace vcss

#endif
