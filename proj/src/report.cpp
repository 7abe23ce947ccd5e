#include "ulrich/report.hpp"

#include <sstream>

namespace ulrich {

Json report_json(const Report& r, bool timing) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"id", c.id},
                          {"anchor", c.anchor},
                          {"status", c.passed ? "pass" : "fail"},
                          {"witness", c.witness}});
  }
  return Json{{"schema", kReportSchema},
              {"case", r.case_name},
              {"checks", checks},
              {"seed", r.seed},
              {"elapsed_ms", timing ? r.elapsed_ms : 0L}};
}

Json reports_json(const std::vector<Report>& rs, bool timing) {
  Json all = Json::array();
  for (const auto& r : rs) all.push_back(report_json(r, timing));
  return Json{{"schema", kReportSchema}, {"reports", all}};
}

std::string human_summary(const Report& r) {
  std::ostringstream out;
  for (const auto& c : r.checks) {
    out << (c.passed ? "[PASS] " : "[FAIL] ") << r.case_name << '/' << c.id << " (" << c.anchor
        << ")\n";
  }
  return out.str();
}

}  // namespace ulrich
