#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "vnum/checks.hpp"

namespace vnum {

inline constexpr const char* kReportSchema = "vnum-report/1";

nlohmann::ordered_json to_json(const Verdict& v);
nlohmann::ordered_json to_json(const QuasiLinearFit& fit);
nlohmann::ordered_json to_json(const FiltrationReport& r);

/// {schema, suite, summary, reports: [...]}; byte-identical for identical input.
std::string render_json(const std::string& suite, const std::vector<FiltrationReport>& reports);

/// One row per (instance, k) with alpha, v, reg, followed by one row per check.
std::string render_csv(const std::vector<FiltrationReport>& reports);

std::string csv_escape(const std::string& field);

}  // namespace vnum
