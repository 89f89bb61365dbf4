#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "quadlip/analysis.hpp"
#include "quadlip/trajectory.hpp"

namespace quadlip::io {

/// Static SVG renderings of a run. Data curves are the only <polyline>
/// elements in the output (axes and ticks are <line>/<rect>), so structural
/// assertions can count curves directly.
enum class PlotKind {
    Transverse,    ///< CoM x-y paths (fore, hind, quadruped)
    Frontal,       ///< CoM y-z paths
    Sagittal,      ///< CoM x-z paths
    CorXVsTime,    ///< anteroposterior CoR trajectories of the four feet
    SweepStrategy, ///< step length and width versus velocity
    SweepFroude,   ///< both Froude conventions versus velocity, with band lines
};

/// Maps the CLI spelling (transverse, frontal, sagittal, cor-x-vs-t,
/// sweep-strategy, sweep-froude) to a kind; throws std::invalid_argument for
/// unknown names.
PlotKind parse_plot_kind(std::string_view name);
const char* plot_kind_name(PlotKind kind);

/// True for the kinds drawn from a sampled trajectory (as opposed to a sweep
/// table).
bool plot_wants_samples(PlotKind kind);

std::string render_plot(const std::vector<GaitSample<double>>& samples, PlotKind kind);
std::string render_plot(const std::vector<SweepRow<double>>& rows, PlotKind kind);

void write_plot(const std::vector<GaitSample<double>>& samples, PlotKind kind,
                const std::string& path);
void write_plot(const std::vector<SweepRow<double>>& rows, PlotKind kind,
                const std::string& path);

}  // namespace quadlip::io
