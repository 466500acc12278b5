#include "psik/report_io.hpp"

#include <iomanip>
#include <sstream>

namespace psik {

namespace {

std::string num(const PrecReal& x) { return to_string(x, kReportDigits); }

std::string params_text(const RelationReport& r) {
  std::string s;
  for (const auto& [k, v] : r.params) {
    if (!s.empty()) s += ';';
    s += k + "=" + v;
  }
  return s;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string seconds(double t) {
  std::ostringstream os;
  os << std::setprecision(6) << t;
  return os.str();
}

}  // namespace

nlohmann::ordered_json to_json(const RelationReport& r) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["params"] = params;
  j["lhs"] = num(r.lhs);
  j["rhs"] = num(r.rhs);
  j["abs_residual"] = to_string(r.abs_residual, 6);
  j["rel_residual"] = to_string(r.rel_residual, 6);
  j["error_budget"] = to_string(r.error_budget, 6);
  j["pass"] = r.pass;
  j["precision_bits"] = r.precision_bits;
  j["wall_time_s"] = r.wall_time_s;
  return j;
}

nlohmann::ordered_json to_json(const std::vector<RelationReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

std::string csv_header() {
  return "name,params,lhs,rhs,abs_residual,rel_residual,error_budget,pass,precision_bits,wall_time_s";
}

std::string csv_row(const RelationReport& r) {
  std::ostringstream os;
  os << csv_escape(r.name) << ',' << csv_escape(params_text(r)) << ',' << num(r.lhs) << ',' << num(r.rhs) << ','
     << to_string(r.abs_residual, 6) << ',' << to_string(r.rel_residual, 6) << ',' << to_string(r.error_budget, 6)
     << ',' << (r.pass ? "true" : "false") << ',' << r.precision_bits << ',' << seconds(r.wall_time_s);
  return os.str();
}

void write_csv(std::ostream& out, const std::vector<RelationReport>& reports) {
  out << csv_header() << '\n';
  for (const auto& r : reports) out << csv_row(r) << '\n';
}

std::string summary_line(const RelationReport& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS " : "FAIL ") << r.name;
  if (!r.params.empty()) os << " [" << params_text(r) << "]";
  os << " residual=" << to_string(r.abs_residual, 3) << " budget=" << to_string(r.error_budget, 3);
  if (!r.note.empty()) os << " (" << r.note << ")";
  return os.str();
}

}  // namespace psik
