#pragma once

#include "dhl/dynamics.hpp"
#include "dhl/params.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace dhl {

enum class OutputFormat { json, csv };

// Settings for the simulate/validate/dump commands. JSON layout:
//   {"model": {"a": "53/3", "b": "34/3", "c": "1/6", "N": 6},
//    "source": [0, 0],
//    "times": ["0", "1/1", "2/1", "3pi", 0.25],
//    "output": {"format": "csv", "path": "out.csv"},
//    "tol": 1e-6}
// Only "model" is required.
struct RunConfig {
  ModelParams params;
  std::vector<Time> times;
  Site source{0, 0};
  OutputFormat format = OutputFormat::csv;
  std::string output_path;  // empty: stdout
  double tol = 1e-6;
};

// Throws std::invalid_argument on schema or value errors.
RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RunConfig& c);

// Throws std::runtime_error (with the path) if the file cannot be read.
RunConfig load_config(const std::filesystem::path& path);

OutputFormat parse_format(const std::string& text);

}  // namespace dhl
