#include "ehsum/report_io.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace ehsum {

namespace {

nlohmann::ordered_json shape_json(const Shape& s) {
  nlohmann::ordered_json j;
  j["n"] = s.n;
  if (!s.m.empty())
    j["m"] = s.m;
  else
    j["N"] = s.N;
  return j;
}

nlohmann::ordered_json report_json(const VerificationReport& r, bool omit_timing) {
  nlohmann::ordered_json j;
  j["descriptor_id"] = r.descriptor_id;
  j["shape"] = shape_json(r.shape);
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["precision_bits"] = r.precision_bits;
  j["tolerance"] = r.tolerance.decimal();
  j["max_residual"] = r.max_residual.decimal();
  j["passed"] = r.passed;
  j["nome_mode"] = r.p_zero ? "zero" : "random";
  j["wall_time_ms"] = omit_timing ? 0 : static_cast<long>(std::llround(r.wall_ms));
  j["errors"] = r.errors;
  return j;
}

}  // namespace

std::string reports_to_json(const std::vector<VerificationReport>& reports,
                            const ConfigEcho& config, bool omit_timing) {
  nlohmann::ordered_json top;
  top["version"] = 1;
  nlohmann::ordered_json cfg;
  for (const auto& [k, v] : config) cfg[k] = v;
  top["config"] = std::move(cfg);
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_json(r, omit_timing));
  top["reports"] = std::move(arr);
  return top.dump(2) + "\n";
}

std::string report_line(const VerificationReport& r) {
  std::ostringstream os;
  os << (r.passed ? "[PASS] " : "[FAIL] ") << r.descriptor_id;
  for (std::size_t i = r.descriptor_id.size(); i < 28; ++i) os << ' ';
  os << ' ' << r.shape.str() << (r.p_zero ? " p=0" : "") << "  trials=" << r.trials
     << "  max_residual=" << r.max_residual.decimal() << "  tolerance=" << r.tolerance.decimal()
     << "  " << static_cast<long>(std::llround(r.wall_ms)) << "ms";
  for (const std::string& e : r.errors) os << "\n       error: " << e;
  return os.str();
}

std::string reports_to_text(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  int passed = 0;
  for (const auto& r : reports) {
    os << report_line(r) << "\n";
    if (r.passed) ++passed;
  }
  os << passed << "/" << reports.size() << " reports passed\n";
  return os.str();
}

}  // namespace ehsum
