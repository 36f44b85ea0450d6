#include "uavvlc/report_io.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <ostream>

#include <json.hpp>

namespace uavvlc {

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

void write_power_grid_csv(std::ostream& out, const PowerGrid& grid) {
  out << "x,y,power_w\n";
  for (std::size_t i = 0; i < grid.values.size(); ++i) {
    out << format_number(grid.points[i].x) << ',' << format_number(grid.points[i].y) << ','
        << format_number(grid.values[i]) << '\n';
  }
}

namespace {

void summary_header(std::ostream& out) { out << "algorithm,f1,f2,f3,area_m2,hypervolume\n"; }

void summary_line(std::ostream& out, Algorithm a, const ObjectiveVector& f, double area,
                  double hv) {
  out << algorithm_name(a) << ',' << format_number(f[0]) << ',' << format_number(f[1]) << ','
      << format_number(f[2]) << ',' << format_number(area) << ',' << format_number(hv) << '\n';
}

nlohmann::json entry_json(const Individual& ind, const ObjectiveVector& f) {
  return {{"genes", std::vector<double>(ind.genes().begin(), ind.genes().end())},
          {"f", {f[0], f[1], f[2]}}};
}

} // namespace

void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows) {
  summary_header(out);
  for (const SummaryRow& r : rows) {
    summary_line(out, r.algorithm, r.mean_knee, r.mean_area_m2, r.mean_hypervolume);
  }
}

void write_report_csv(std::ostream& out, const RunReport& report) {
  summary_header(out);
  summary_line(out, report.algorithm, report.knee, report.area_m2, report.hypervolume);
}

void write_metrics_csv(std::ostream& out, std::span<const IterationMetrics> metrics) {
  out << "iteration,ideal_f1,ideal_f2,ideal_f3,archive_size,mean_f1,mean_f2,mean_f3\n";
  for (const IterationMetrics& m : metrics) {
    out << m.iteration;
    for (std::size_t k = 0; k < kObjectiveCount; ++k) {
      out << ',' << format_number(m.ideal[k]);
    }
    out << ',' << m.archive_size;
    for (std::size_t k = 0; k < kObjectiveCount; ++k) {
      out << ',' << format_number(m.mean[k]);
    }
    out << '\n';
  }
}

void write_archive_json(std::ostream& out, const ParetoArchive& archive) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& e : archive.entries()) {
    doc.push_back(entry_json(e.solution, e.objectives));
  }
  out << doc.dump(1) << '\n';
}

void write_population_json(std::ostream& out, std::span<const Individual> population,
                           std::span<const ObjectiveVector> fitness) {
  nlohmann::json doc = nlohmann::json::array();
  for (std::size_t i = 0; i < population.size(); ++i) {
    doc.push_back(entry_json(population[i], i < fitness.size() ? fitness[i] : ObjectiveVector{}));
  }
  out << doc.dump(1) << '\n';
}

namespace {

// Blue (low) to yellow (high).
std::string shade(double t) {
  t = std::clamp(t, 0.0, 1.0);
  const int r = static_cast<int>(30 + 225 * t);
  const int g = static_cast<int>(60 + 170 * t);
  const int b = static_cast<int>(200 - 170 * t);
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

} // namespace

void write_heatmap_svg(std::ostream& out, const PowerGrid& grid, const Individual& deployment,
                       const Region& region) {
  constexpr double size = 480.0;
  const double sx = size / region.width();
  const double sy = size / region.height();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (double v : grid.values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const double span = hi > lo ? hi - lo : 1.0;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  const double w = grid.cell_width * sx;
  const double h = grid.cell_height * sy;
  for (std::size_t i = 0; i < grid.values.size(); ++i) {
    // Lattice points are spread over the full extent; centre a cell on each.
    const double fx = grid.nx > 1 ? static_cast<double>(i % grid.nx) / static_cast<double>(grid.nx)
                                  : 0.0;
    const double fy = grid.ny > 1 ? static_cast<double>(i / grid.nx) / static_cast<double>(grid.ny)
                                  : 0.0;
    out << "<rect x=\"" << format_number(fx * size) << "\" y=\""
        << format_number(size - fy * size - h) << "\" width=\"" << format_number(w)
        << "\" height=\"" << format_number(h) << "\" fill=\""
        << shade((grid.values[i] - lo) / span) << "\"/>\n";
  }
  for (std::size_t u = 0; u < deployment.uav_count(); ++u) {
    const double cx = (deployment.x()[u] - region.x_min) * sx;
    const double cy = size - (deployment.y()[u] - region.y_min) * sy;
    out << "<circle cx=\"" << format_number(cx) << "\" cy=\"" << format_number(cy)
        << "\" r=\"5\" fill=\"none\" stroke=\"#000\" stroke-width=\"2\"/>\n";
  }
  out << "</svg>\n";
}

void write_front_svg(std::ostream& out, const ParetoArchive& archive) {
  constexpr double size = 480.0;
  constexpr double pad = 30.0;
  const Normalization n = Normalization::fit(archive.objectives());
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  out << "<rect x=\"" << pad << "\" y=\"" << pad << "\" width=\"" << size - 2 * pad
      << "\" height=\"" << size - 2 * pad << "\" fill=\"none\" stroke=\"#444\"/>\n";
  out << "<text x=\"" << size / 2 << "\" y=\"" << size - 8 << "\" font-size=\"12\">f1</text>\n";
  out << "<text x=\"6\" y=\"" << size / 2 << "\" font-size=\"12\">f2</text>\n";
  for (const auto& e : archive.entries()) {
    const ObjectiveVector v = n.apply(e.objectives);
    const double cx = pad + std::clamp(v[0], 0.0, 1.0) * (size - 2 * pad);
    const double cy = size - pad - std::clamp(v[1], 0.0, 1.0) * (size - 2 * pad);
    out << "<circle cx=\"" << format_number(cx) << "\" cy=\"" << format_number(cy)
        << "\" r=\"3\" fill=\"" << shade(v[2]) << "\"/>\n";
  }
  out << "</svg>\n";
}

} // namespace uavvlc
