#pragma once

// Serialization of samples and reports: CSV, SVG, JSON, atomic writes.

#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "berezin/analysis.hpp"
#include "berezin/closed_form.hpp"
#include "berezin/geometry.hpp"
#include "berezin/inequality.hpp"

namespace berezin {

inline constexpr int kJsonSchemaVersion = 1;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes to a sibling temporary file and renames it over `path`; no
/// partial file is left behind on failure.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// Header `r,theta,re,im`; one row per grid point, r-major.
std::string range_csv(const RangeSample& sample);

/// 800x800 scatter plot over [-1.1, 1.1]^2 with axes and the unit circle.
std::string range_svg(const RangeSample& sample,
                      std::span<const PlanarPoint> hull = {},
                      const std::string& title = "");

nlohmann::json to_json(const ConvexityReport& report);
nlohmann::json to_json(const TrialReport& report);
nlohmann::json to_json(const SweepEntry& entry);

/// Pretty-printed with a trailing newline.
std::string dump(const nlohmann::json& j);

std::string format_double(double v);

}  // namespace berezin
