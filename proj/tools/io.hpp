#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rctree/metric.hpp"

namespace rcio {

// Failure with a machine-readable kind; "parse" for malformed input,
// "io" for filesystem trouble.
struct CliError : std::runtime_error {
  std::string kind;
  CliError(std::string k, const std::string& msg)
      : std::runtime_error(msg), kind(std::move(k)) {}
};

std::string read_file(const std::string& path);
void write_output(const std::string& out_path, const std::string& text);

// Point files start with a "d n" header line; anything else is treated as a
// comma-separated distance matrix.
bool looks_like_point_file(const std::string& text);
rctree::PointSet parse_points(const std::string& text);
std::vector<std::vector<double>> parse_csv_matrix(const std::string& text);
std::vector<double> parse_value_list(const std::string& text);

// Deterministic serialization: sorted keys, 12 significant digits, two-space
// indentation. Identical values in, identical bytes out.
std::string dump_canonical(const nlohmann::json& j);

std::string format_real(double v);

void print_error(const std::string& kind, const std::string& message);

}  // namespace rcio
