#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ucon/connectivity.hpp"
#include "ucon/instance.hpp"

namespace ucon {

/// Malformed document or unreadable file.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json point_to_json(Point2 p);
Point2 point_from_json(const nlohmann::json& j);

nlohmann::json region_to_json(const Region& r);
Region region_from_json(const nlohmann::json& j);

nlohmann::json instance_to_json(const Instance& inst);
/// Parses and validates; schema problems raise IoError, invariant violations std::invalid_argument.
Instance instance_from_json(const nlohmann::json& j);

nlohmann::json selection_to_json(const Selection& sel);
Selection selection_from_json(const nlohmann::json& j);

nlohmann::json solution_to_json(const SpanningSolution& s);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Serialized form used for files and reports.
std::string dump(const nlohmann::json& j);

}  // namespace ucon
