#include "berezin/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <system_error>
#include <unistd.h>

namespace berezin {

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("write failed: " + path.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw IoError("cannot rename onto " + path.string() + ": " + ec.message());
  }
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string range_csv(const RangeSample& sample) {
  std::string out = "r,theta,re,im\n";
  out.reserve(out.size() + sample.grid.size() * 80);
  char buf[128];
  for (std::size_t i = 0; i < sample.grid.r_values.size(); ++i) {
    for (std::size_t j = 0; j < sample.grid.theta_values.size(); ++j) {
      const Complex v = sample.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", sample.grid.r_values[i],
                    sample.grid.theta_values[j], v.real(), v.imag());
      out += buf;
    }
  }
  return out;
}

namespace {

constexpr double kSvgSize = 800.0;
constexpr double kViewHalfWidth = 1.1;

double to_px(double x) { return (x + kViewHalfWidth) / (2.0 * kViewHalfWidth) * kSvgSize; }
double to_py(double y) { return (kViewHalfWidth - y) / (2.0 * kViewHalfWidth) * kSvgSize; }

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string range_svg(const RangeSample& sample, std::span<const PlanarPoint> hull,
                      const std::string& title) {
  std::string out;
  char buf[256];
  out +=
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
      "viewBox=\"0 0 800 800\">\n";
  out += "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  std::snprintf(buf, sizeof(buf),
                "<line x1=\"0\" y1=\"%.2f\" x2=\"800\" y2=\"%.2f\" stroke=\"#888\" stroke-width=\"1\"/>\n"
                "<line x1=\"%.2f\" y1=\"0\" x2=\"%.2f\" y2=\"800\" stroke=\"#888\" stroke-width=\"1\"/>\n",
                to_py(0.0), to_py(0.0), to_px(0.0), to_px(0.0));
  out += buf;
  std::snprintf(buf, sizeof(buf),
                "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" fill=\"none\" stroke=\"#bbb\" "
                "stroke-dasharray=\"4 4\"/>\n",
                to_px(0.0), to_py(0.0), to_px(1.0) - to_px(0.0));
  out += buf;
  if (!title.empty()) {
    out += "<text x=\"10\" y=\"20\" font-family=\"monospace\" font-size=\"14\">" +
           xml_escape(title) + "</text>\n";
  }
  if (hull.size() >= 2) {
    out += "<polygon fill=\"none\" stroke=\"#d62728\" stroke-width=\"1\" points=\"";
    for (const auto& p : hull) {
      std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", to_px(p.x), to_py(p.y));
      out += buf;
    }
    out += "\"/>\n";
  }
  // One dot per half-pixel cell keeps dense samples small.
  std::set<std::pair<long, long>> seen;
  out += "<g fill=\"#1f77b4\">\n";
  for (const auto& p : sample.points()) {
    const double px = to_px(p.x);
    const double py = to_py(p.y);
    if (!seen.emplace(std::lround(px * 2.0), std::lround(py * 2.0)).second) continue;
    std::snprintf(buf, sizeof(buf), "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"1\"/>\n", px, py);
    out += buf;
  }
  out += "</g>\n</svg>\n";
  return out;
}

nlohmann::json to_json(const ConvexityReport& report) {
  nlohmann::json hull = nlohmann::json::array();
  for (const auto& p : report.shape.hull) hull.push_back({p.x, p.y});
  nlohmann::json j = {
      {"schema", kJsonSchemaVersion},
      {"shape", std::string(to_string(report.shape.tag))},
      {"verdict", std::string(to_string(report.verdict))},
      {"coverage_ratio", report.coverage_ratio},
      {"max_gap", report.max_gap},
      {"tolerance", report.tolerance},
      {"sample_count", report.sample_count},
      {"exact_finite_mode", report.exact_finite_mode},
      {"hull", hull},
      {"area", report.shape.area},
      {"diameter", report.shape.diameter},
  };
  if (report.mesh_coverage) j["mesh_coverage"] = *report.mesh_coverage;
  return j;
}

nlohmann::json to_json(const TrialReport& report) {
  return {
      {"schema", kJsonSchemaVersion},
      {"seed", report.seed},
      {"dims", {report.dim_min, report.dim_max}},
      {"function", report.function},
      {"map", report.map},
      {"check", report.check},
      {"trials", report.trials},
      {"min_slack", report.min_slack},
      {"argmin_trial", report.argmin_trial},
      {"condition18_pass_rate", report.condition18_pass_rate},
      {"max_mapping_error", report.max_mapping_error},
      {"tolerance", report.tolerance},
      {"passed", report.passed},
  };
}

nlohmann::json to_json(const SweepEntry& entry) {
  nlohmann::json j = {
      {"alpha", {entry.parameter.real(), entry.parameter.imag()}},
      {"verdict", std::string(to_string(entry.report.verdict))},
      {"shape", std::string(to_string(entry.report.shape.tag))},
      {"coverage_ratio", entry.report.coverage_ratio},
      {"max_gap", entry.report.max_gap},
      {"tolerance", entry.report.tolerance},
  };
  if (entry.expected) {
    j["expected"] = std::string(to_string(*entry.expected));
    j["match"] = *entry.expected == entry.report.verdict;
  } else {
    j["expected"] = nullptr;
  }
  return j;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace berezin
