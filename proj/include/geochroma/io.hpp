// JSON interchange for configurations, designs and decompositions.
#pragma once

#include <string>

#include <json.hpp>

#include "geochroma/chroma.hpp"
#include "geochroma/decomposition.hpp"
#include "geochroma/designs.hpp"
#include "geochroma/planecut.hpp"

namespace geochroma {

/// Malformed or inconsistent input document.
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

void to_json(nlohmann::json& j, const Point& p);
void to_json(nlohmann::json& j, const Configuration& c);
void from_json(const nlohmann::json& j, Configuration& c);
void to_json(nlohmann::json& j, const CutLine& l);
void to_json(nlohmann::json& j, const RegionAssignment& r);
void to_json(nlohmann::json& j, const BlockDesign& d);
void from_json(const nlohmann::json& j, BlockDesign& d);
void to_json(nlohmann::json& j, const DifferenceTripleTable& t);
void to_json(nlohmann::json& j, const Decomposition& d);
void from_json(const nlohmann::json& j, Decomposition& d);
void to_json(nlohmann::json& j, const TriangleCensus& c);

nlohmann::json read_json_file(const std::string& path);
/// Two-space indented JSON with a trailing newline.
void write_text_file(const std::string& path, const std::string& text);
std::string dump(const nlohmann::json& j);

Decomposition read_decomposition(const std::string& path);
Configuration read_configuration(const std::string& path);

/// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

}  // namespace geochroma
