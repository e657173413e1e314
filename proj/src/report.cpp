#include "freqfn/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace freqfn {

void write_profile_csv(std::ostream& out, const Profile& p) {
  out << "segment_index,r_lo,r_hi,alpha,beta\n";
  for (std::size_t i = 0; i < p.segments.size(); ++i) {
    const auto hi = p.segment_hi(i);
    out << i << ',' << to_string(p.segment_lo(i)) << ',' << (hi ? to_string(*hi) : "inf") << ','
        << to_string(p.segments[i].alpha) << ',' << to_string(p.segments[i].beta) << '\n';
  }
  out << "# center=" << to_string(p.center) << '\n';
  out << "# tail_mass=" << to_string(p.tail_mass) << '\n';
}

void write_scan_csv(std::ostream& out, const ScanReport& report) {
  out << "x,maximal,frequency,selected\n";
  for (const ScanEntry& e : report.entries)
    out << to_string(e.x) << ',' << to_string(e.maximal) << ',' << to_string(e.frequency) << ','
        << (e.selected ? 1 : 0) << '\n';
  out << "# domain_bound=" << to_string(report.domain_bound) << '\n';
  out << "# grid_step=" << to_string(report.grid_step) << '\n';
  for (const auto& [key, value] : report.aggregates) out << "# " << key << '=' << to_string(value) << '\n';
}

void write_density_csv(std::ostream& out, const DensityTrend& trend) {
  out << "N,count,measure,density\n";
  for (const DensityPoint& p : trend.points)
    out << to_string(p.N) << ',' << p.count << ',' << to_string(p.measure) << ','
        << to_string(p.density) << '\n';
  out << "# C=" << to_string(trend.C) << '\n';
  out << "# grid_step=" << to_string(trend.grid_step) << '\n';
  out << "# non_increasing=" << (trend.non_increasing_with_slack() ? 1 : 0) << '\n';
}

void write_discontinuities_csv(std::ostream& out,
                               const std::vector<DiscontinuityCertificate>& certs) {
  out << "point,maximal_at,side_value,jump_lower_bound\n";
  for (const auto& c : certs)
    out << to_string(c.point) << ',' << to_string(c.maximal_at) << ',' << to_string(c.side_value)
        << ',' << to_string(c.jump_lower_bound) << '\n';
  out << "# count=" << certs.size() << '\n';
}

namespace {

struct Panel {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::string render_panels(const std::vector<Panel>& panels, const std::string& x_label) {
  constexpr double width = 640, panel_h = 240, margin_l = 70, margin_r = 20, margin_t = 30,
                   margin_b = 40;
  const double height = margin_t + static_cast<double>(panels.size()) * (panel_h + margin_b);
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t k = 0; k < panels.size(); ++k) {
    const Panel& panel = panels[k];
    double x_min = panel.points.front().first, x_max = x_min;
    double y_min = 0, y_max = 0;
    for (const auto& [x, y] : panel.points) {
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
    if (x_max == x_min) x_max = x_min + 1;
    if (y_max == y_min) y_max = y_min + 1;
    const double top = margin_t + static_cast<double>(k) * (panel_h + margin_b);
    const double plot_w = width - margin_l - margin_r;
    auto px = [&](double x) { return margin_l + (x - x_min) / (x_max - x_min) * plot_w; };
    auto py = [&](double y) { return top + panel_h - (y - y_min) / (y_max - y_min) * panel_h; };

    svg << "<g>\n";
    svg << "<rect x=\"" << num(margin_l) << "\" y=\"" << num(top) << "\" width=\"" << num(plot_w)
        << "\" height=\"" << num(panel_h) << "\" fill=\"none\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << num(margin_l) << "\" y=\"" << num(top - 8)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << panel.label << "</text>\n";
    svg << "<text x=\"" << num(margin_l + plot_w / 2) << "\" y=\"" << num(top + panel_h + 28)
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" << x_label
        << "</text>\n";
    for (const auto& [value, anchor] :
         {std::pair{x_min, "start"}, std::pair{x_max, "end"}})
      svg << "<text x=\"" << num(px(value)) << "\" y=\"" << num(top + panel_h + 14)
          << "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"" << anchor << "\">"
          << num(value) << "</text>\n";
    for (double value : {y_min, y_max})
      svg << "<text x=\"" << num(margin_l - 6) << "\" y=\"" << num(py(value) + 4)
          << "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"end\">" << num(value)
          << "</text>\n";
    svg << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.2\" points=\"";
    for (std::size_t i = 0; i < panel.points.size(); ++i)
      svg << (i ? " " : "") << num(px(panel.points[i].first)) << ',' << num(py(panel.points[i].second));
    svg << "\"/>\n</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::filesystem::path sibling_csv(const std::filesystem::path& path) {
  std::filesystem::path csv = path;
  csv.replace_extension(".csv");
  return csv;
}

}  // namespace

std::string render_scan_svg(const ScanReport& report, PlotKind kind) {
  if (report.entries.empty()) throw std::invalid_argument("cannot plot an empty report");
  if (kind == PlotKind::Line) {
    Panel m{"maximal function", {}}, t{"frequency function", {}};
    for (const ScanEntry& e : report.entries) {
      m.points.emplace_back(to_double(e.x), to_double(e.maximal));
      t.points.emplace_back(to_double(e.x), to_double(e.frequency));
    }
    return render_panels({m, t}, "x");
  }
  // Running density: selected measure within |x| <= a, divided by a.
  std::vector<std::pair<Rat, bool>> by_radius;
  for (const ScanEntry& e : report.entries) by_radius.emplace_back(abs_rat(e.x), e.selected);
  std::stable_sort(by_radius.begin(), by_radius.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  Panel d{"density of selected set", {}};
  std::size_t count = 0;
  for (const auto& [a, selected] : by_radius) {
    if (selected) ++count;
    if (a == 0) continue;
    const Rat ratio = Rat(BigInt(std::to_string(count))) * report.grid_step / a;
    d.points.emplace_back(to_double(a), to_double(ratio));
  }
  if (d.points.empty()) throw std::invalid_argument("density plot needs a nonzero grid point");
  return render_panels({d}, "|x|");
}

std::string render_density_svg(const DensityTrend& trend) {
  if (trend.points.empty()) throw std::invalid_argument("cannot plot an empty density trend");
  Panel d{"level-set density", {}};
  for (const DensityPoint& p : trend.points) d.points.emplace_back(to_double(p.N), to_double(p.density));
  return render_panels({d}, "N");
}

void emit_plot(const ScanReport& report, const std::filesystem::path& path, PlotKind kind) {
  const std::string svg = render_scan_svg(report, kind);
  std::ostringstream csv;
  write_scan_csv(csv, report);
  write_file(path, svg);
  write_file(sibling_csv(path), csv.str());
}

void emit_plot(const DensityTrend& trend, const std::filesystem::path& path) {
  const std::string svg = render_density_svg(trend);
  std::ostringstream csv;
  write_density_csv(csv, trend);
  write_file(path, svg);
  write_file(sibling_csv(path), csv.str());
}

}  // namespace freqfn
