#pragma once

// JSON file formats for configurations, blow-up centers and resolution
// graphs, plus machine-readable renderings of diagnostics and
// per-stratum reports.

#include <string>

#include "micc/blowup.hpp"
#include "micc/milnor.hpp"
#include "micc/motive.hpp"

namespace micc {

Configuration config_from_json(const std::string& text);
std::string config_to_json(const Configuration& config);

BlowupCenter center_from_json(const std::string& text);
std::string center_to_json(const BlowupCenter& center);

ResolutionGraph graph_from_json(const std::string& text);
std::string graph_to_json(const ResolutionGraph& g);

std::string diagnostics_to_json(const std::vector<Diagnostic>& diags);
std::string terms_to_json(const std::vector<StratumTerm>& terms);
std::string invariance_report_to_json(const InvarianceReport& rep);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace micc
