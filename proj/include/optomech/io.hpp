#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "optomech/params.hpp"

namespace optomech {

struct RunConfig {
  SystemParams params;
  DriveConfig drive;
  nlohmann::json options = nlohmann::json::object();  // every non-parameter key
};

RunConfig parse_config(const nlohmann::json& j);
// Accepts a JSON file or a CSV produced by write_csv.
RunConfig load_config(const std::string& path);

nlohmann::json params_to_json(const SystemParams& p, const DriveConfig& d);
nlohmann::json config_to_json(const RunConfig& c);

std::string format_double(double v);

struct CsvTable {
  nlohmann::json header;
  std::vector<std::string> names;
  std::vector<std::vector<double>> columns;
};

void write_csv(const std::string& path, const CsvTable& t);
CsvTable read_csv(const std::string& path);

void write_json(const std::string& path, const nlohmann::json& j);

}  // namespace optomech
