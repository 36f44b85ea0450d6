#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "uavvlc/bench.hpp"

namespace uavvlc {

/// `%.9g` rendering used for every numeric CSV field.
std::string format_number(double value);

/// Header `x,y,power_w`, one row per receiver in row-major lattice order.
void write_power_grid_csv(std::ostream& out, const PowerGrid& grid);

/// Header `algorithm,f1,f2,f3,area_m2,hypervolume`, one row per algorithm.
void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows);

/// Same columns as the summary, one row for a single run.
void write_report_csv(std::ostream& out, const RunReport& report);

/// Header `iteration,ideal_f1,ideal_f2,ideal_f3,archive_size,mean_f1,mean_f2,mean_f3`.
void write_metrics_csv(std::ostream& out, std::span<const IterationMetrics> metrics);

/// JSON array of {"genes": [...], "f": [f1, f2, f3]}.
void write_archive_json(std::ostream& out, const ParetoArchive& archive);

/// Same schema as the archive, for an arbitrary population.
void write_population_json(std::ostream& out, std::span<const Individual> population,
                           std::span<const ObjectiveVector> fitness);

/// Received-power heatmap with UAV hover points overlaid.
void write_heatmap_svg(std::ostream& out, const PowerGrid& grid, const Individual& deployment,
                       const Region& region);

/// f1-f2 scatter of an archive, marker shade encoding f3.
void write_front_svg(std::ostream& out, const ParetoArchive& archive);

} // namespace uavvlc
