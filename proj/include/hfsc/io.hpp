#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hfsc/model.hpp"

namespace hfsc {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string int_array(const std::vector<Count>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

template <typename T>
T required(const nlohmann::json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw FormatError(std::string("missing key '") + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad value for '") + key + "': " + e.what());
  }
}

inline nlohmann::json parse(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace detail

// One demand row per line so files stay diffable.
inline std::string instance_to_json(const Instance& inst) {
  std::string out = "{\n";
  out += "  \"name\": " + nlohmann::json(inst.name).dump() + ",\n";
  out += "  \"l_ub\": " + std::to_string(inst.bed_length) + ",\n";
  out += "  \"h_ub\": " + std::to_string(inst.bed_height) + ",\n";
  out += "  \"lengths\": " + detail::int_array(inst.lengths) + ",\n";
  out += "  \"demand\": [";
  for (std::size_t i = 0; i < inst.demand.size(); ++i) {
    out += i ? ",\n    " : "\n    ";
    out += detail::int_array(inst.demand[i]);
  }
  out += inst.demand.empty() ? "]\n" : "\n  ]\n";
  return out + "}\n";
}

inline Instance instance_from_json(const std::string& text) {
  const nlohmann::json doc = detail::parse(text);
  Instance inst;
  inst.name = detail::required<std::string>(doc, "name");
  inst.bed_length = detail::required<Count>(doc, "l_ub");
  inst.bed_height = detail::required<Count>(doc, "h_ub");
  inst.lengths = detail::required<std::vector<Count>>(doc, "lengths");
  inst.demand = detail::required<Matrix>(doc, "demand");
  return inst;
}

inline std::string plan_to_json(const CuttingPlan& plan) {
  std::string out = "{\n";
  out += "  \"instance\": " + nlohmann::json(plan.instance).dump() + ",\n";
  out += "  \"k\": " + std::to_string(plan.k) + ",\n";
  out += "  \"mean_ur\": " + nlohmann::json(plan.mean_ur).dump() + ",\n";
  out += "  \"lays\": [";
  for (std::size_t k = 0; k < plan.lays.size(); ++k) {
    out += k ? ",\n    " : "\n    ";
    out += "{\"heights\": " + detail::int_array(plan.lays[k].heights) +
           ", \"counts\": " + detail::int_array(plan.lays[k].counts) + "}";
  }
  out += plan.lays.empty() ? "]\n" : "\n  ]\n";
  return out + "}\n";
}

inline CuttingPlan plan_from_json(const std::string& text) {
  const nlohmann::json doc = detail::parse(text);
  CuttingPlan plan;
  plan.instance = detail::required<std::string>(doc, "instance");
  plan.k = detail::required<std::size_t>(doc, "k");
  plan.mean_ur = detail::required<double>(doc, "mean_ur");
  const auto lays = detail::required<nlohmann::json>(doc, "lays");
  if (!lays.is_array()) throw FormatError("'lays' must be an array");
  for (const auto& entry : lays) {
    Lay lay;
    lay.heights = detail::required<std::vector<Count>>(entry, "heights");
    lay.counts = detail::required<std::vector<Count>>(entry, "counts");
    plan.lays.push_back(std::move(lay));
  }
  return plan;
}

inline Instance load_instance(const std::filesystem::path& path) { return instance_from_json(detail::read_file(path)); }
inline CuttingPlan load_plan(const std::filesystem::path& path) { return plan_from_json(detail::read_file(path)); }
inline void save_instance(const Instance& inst, const std::filesystem::path& path) {
  detail::write_file(path, instance_to_json(inst));
}
inline void save_plan(const CuttingPlan& plan, const std::filesystem::path& path) {
  detail::write_file(path, plan_to_json(plan));
}

}  // namespace hfsc
