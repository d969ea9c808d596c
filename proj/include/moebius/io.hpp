#pragma once

// Configuration documents (schema-versioned JSON), point-cloud exporters
// (CSV and ascii PLY) and the config hash embedded in reports.

#include <string>
#include <vector>

#include "moebius/config.hpp"

namespace moebius::io {

constexpr int kSchemaVersion = 1;

std::string toJson(const config::SphereConfiguration& cfg);
config::SphereConfiguration fromJson(const std::string& text);

void writeConfigFile(const config::SphereConfiguration& cfg, const std::string& path);
config::SphereConfiguration readConfigFile(const std::string& path);

// FNV-1a over the canonical document text
uint64_t configHash(const config::SphereConfiguration& cfg);

void writeCsv(const std::vector<Point>& points, const std::vector<double>& weights,
              const std::string& path);
void writePly(const std::vector<Point>& points, const std::string& path);

}  // namespace moebius::io
