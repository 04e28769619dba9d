#pragma once

#include "suq/classifier.hpp"
#include "suq/orbit.hpp"
#include "suq/paper_props.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace suq {

nlohmann::json to_json(const Weight& w);
nlohmann::json to_json(const WeightSystem& ws);
nlohmann::json to_json(const Hyperplane& h);
nlohmann::json to_json(const Certificate& cert);
nlohmann::json to_json(const Report& rep);
nlohmann::json to_json(const CounterexampleRecord& rec);

Weight weight_from_json(const nlohmann::json& j);
Certificate certificate_from_json(const nlohmann::json& j);
Report report_from_json(const nlohmann::json& j);

// CSV table: rank, weight, delta, verdict, mechanism, margin, orbit, dim.
std::string sweep_csv(const std::vector<Report>& reports);
std::string report_csv_row(const Report& rep);

} // namespace suq
