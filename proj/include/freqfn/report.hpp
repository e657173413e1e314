#pragma once

#include "freqfn/analysis.hpp"
#include "freqfn/profile.hpp"

#include <filesystem>
#include <ostream>
#include <string>

namespace freqfn {

// CSV output: a header row, exact rationals, aggregates as trailing
// "# key=value" lines.
void write_profile_csv(std::ostream& out, const Profile& p);
void write_scan_csv(std::ostream& out, const ScanReport& report);
void write_density_csv(std::ostream& out, const DensityTrend& trend);
void write_discontinuities_csv(std::ostream& out,
                               const std::vector<DiscontinuityCertificate>& certs);

enum class PlotKind { Line, Density };

/// Standalone SVG plus a sibling .csv next to it. Line plots show Mf and Tf
/// in two stacked panels over the scan variable. Throws std::invalid_argument
/// for an empty report and std::runtime_error if a file cannot be written.
void emit_plot(const ScanReport& report, const std::filesystem::path& path, PlotKind kind);
void emit_plot(const DensityTrend& trend, const std::filesystem::path& path);

std::string render_scan_svg(const ScanReport& report, PlotKind kind);
std::string render_density_svg(const DensityTrend& trend);

}  // namespace freqfn
