#include "vnum/report.hpp"

#include <map>
#include <sstream>

namespace vnum {

nlohmann::ordered_json to_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["name"] = v.name;
  j["status"] = to_string(v.status);
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (!v.witness.empty()) {
    nlohmann::ordered_json w = nlohmann::ordered_json::object();
    for (const auto& [key, value] : v.witness) w[key] = value;
    j["witness"] = w;
  }
  return j;
}

nlohmann::ordered_json to_json(const QuasiLinearFit& fit) {
  nlohmann::ordered_json j;
  j["slope"] = to_string(fit.slope);
  j["period"] = fit.period;
  j["k_min"] = fit.k_min;
  auto& b = j["intercepts"] = nlohmann::ordered_json::array();
  for (const auto& q : fit.intercepts) b.push_back(to_string(q));
  return j;
}

nlohmann::ordered_json to_json(const FiltrationReport& r) {
  nlohmann::ordered_json j;
  j["instance"] = r.instance;
  j["power"] = to_string(r.type);
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& v : r.checks) checks.push_back(to_json(v));
  auto& seq = j["sequences"] = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    nlohmann::ordered_json x;
    x["k"] = row.k;
    x["alpha"] = row.alpha;
    x["v"] = row.v;
    x["reg"] = row.reg ? nlohmann::ordered_json(*row.reg) : nlohmann::ordered_json(nullptr);
    seq.push_back(x);
  }
  j["fit"] = r.fit ? to_json(*r.fit) : nlohmann::ordered_json(nullptr);
  return j;
}

std::string render_json(const std::string& suite, const std::vector<FiltrationReport>& reports) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["suite"] = suite;
  std::map<std::string, std::size_t> counts;
  for (auto s : {Status::Pass, Status::TrendPass, Status::Fail, Status::Skip, Status::Inconclusive}) counts[to_string(s)] = 0;
  for (const auto& r : reports)
    for (const auto& c : r.checks) ++counts[to_string(c.status)];
  nlohmann::ordered_json summary;
  summary["instances"] = reports.size();
  for (const auto& [k, n] : counts) summary[k] = n;
  j["summary"] = summary;
  auto& arr = j["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return j.dump(2) + "\n";
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const std::vector<FiltrationReport>& reports) {
  std::ostringstream os;
  os << "instance,power,k,alpha,v,reg\n";
  for (const auto& r : reports)
    for (const auto& row : r.rows)
      os << csv_escape(r.instance) << ',' << to_string(r.type) << ',' << row.k << ',' << row.alpha << ',' << row.v << ','
         << (row.reg ? std::to_string(*row.reg) : "") << '\n';
  bool header = false;
  for (const auto& r : reports)
    for (const auto& c : r.checks) {
      if (!header) {
        os << "\ninstance,check,status,reason\n";
        header = true;
      }
      os << csv_escape(r.instance) << ',' << c.name << ',' << to_string(c.status) << ',' << csv_escape(c.reason) << '\n';
    }
  return os.str();
}

}  // namespace vnum
