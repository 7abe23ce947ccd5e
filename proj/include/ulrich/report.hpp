#pragma once

#include <string>
#include <vector>

#include "ulrich/engine.hpp"

namespace ulrich {

inline constexpr int kReportSchema = 1;

/// {schema, case, checks: [{id, anchor, status, witness}], seed, elapsed_ms}.
/// elapsed_ms is written as 0 unless `timing` is set, so that reports are
/// byte-for-byte reproducible.
Json report_json(const Report& r, bool timing = false);

/// {schema, reports: [...]} for several cases.
Json reports_json(const std::vector<Report>& rs, bool timing = false);

/// One line per check: "[PASS] case/id (anchor)".
std::string human_summary(const Report& r);

}  // namespace ulrich
