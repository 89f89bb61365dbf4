#pragma once

#include <string>
#include <vector>

#include "quadlip/analysis.hpp"
#include "quadlip/trajectory.hpp"

namespace quadlip::io {

/// CSV exports. Output is deterministic: identical inputs produce
/// byte-identical files, numbers carry 17 significant digits and parse back
/// to the exact double.

std::string format_samples_csv(const std::vector<GaitSample<double>>& samples);
std::string format_events_csv(const std::vector<GaitEvent<double>>& ev);
std::string format_sweep_csv(const std::vector<SweepRow<double>>& rows);

void export_samples(const std::vector<GaitSample<double>>& samples, const std::string& path);
void export_events(const std::vector<GaitEvent<double>>& ev, const std::string& path);
void export_sweep(const std::vector<SweepRow<double>>& rows, const std::string& path);

/// Line-oriented feasibility report: one `name PASS|FAIL margin=<value>` line
/// per check plus a final OVERALL line.
std::string format_report(const FeasibilityReport<double>& rep);

}  // namespace quadlip::io
