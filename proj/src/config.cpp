#include "dhl/config.hpp"

#include <fstream>
#include <stdexcept>

namespace dhl {

namespace {

std::string rational_field(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw std::invalid_argument(std::string("model.") + key + " must be a rational string like \"53/3\"");
}

Time time_field(const nlohmann::json& v) {
  if (v.is_string()) return Time::parse(v.get<std::string>());
  if (v.is_number()) return Time::real(v.get<double>());
  throw std::invalid_argument("times entries must be strings or numbers");
}

}  // namespace

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown output format '" + text + "' (expected csv or json)");
}

RunConfig config_from_json(const nlohmann::json& j) {
  RunConfig c;
  try {
    const auto& model = j.at("model");
    c.params = ModelParams::parse(rational_field(model, "a"), rational_field(model, "b"),
                                  rational_field(model, "c"), model.at("N").get<int>());
    if (j.contains("source")) {
      c.source = {j["source"].at(0).get<int>(), j["source"].at(1).get<int>()};
    }
    if (j.contains("times")) {
      for (const auto& t : j["times"]) c.times.push_back(time_field(t));
    }
    if (j.contains("output")) {
      const auto& out = j["output"];
      if (out.contains("format")) c.format = parse_format(out["format"].get<std::string>());
      if (out.contains("path")) c.output_path = out["path"].get<std::string>();
    }
    if (j.contains("tol")) c.tol = j["tol"].get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  return c;
}

nlohmann::json to_json(const RunConfig& c) {
  auto times = nlohmann::json::array();
  for (const auto& t : c.times) times.push_back(t.label());
  return {{"model",
           {{"a", to_string(c.params.a)},
            {"b", to_string(c.params.b)},
            {"c", to_string(c.params.c)},
            {"N", c.params.N}}},
          {"source", {c.source.i, c.source.j}},
          {"times", std::move(times)},
          {"output", {{"format", c.format == OutputFormat::csv ? "csv" : "json"}, {"path", c.output_path}}},
          {"tol", c.tol}};
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("config " + path.string() + ": " + e.what());
  }
  return config_from_json(j);
}

}  // namespace dhl
