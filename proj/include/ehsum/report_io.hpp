#pragma once

#include <map>
#include <string>
#include <vector>

#include "ehsum/verifier.hpp"

namespace ehsum {

// Ordered key/value echo of the run configuration, stored verbatim in the
// JSON header.
using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

// JSON layout: {"version": ..., "config": {...}, "reports": [...]}.
// Residuals and tolerances are decimal strings, never binary floats, so
// archived reports compare byte-for-byte across platforms.  When
// omit_timing is set every wall_time_ms field is written as 0, making two
// equally-seeded runs byte-identical.
std::string reports_to_json(const std::vector<VerificationReport>& reports,
                            const ConfigEcho& config, bool omit_timing = false);

std::string reports_to_text(const std::vector<VerificationReport>& reports);

std::string report_line(const VerificationReport& r);

}  // namespace ehsum
