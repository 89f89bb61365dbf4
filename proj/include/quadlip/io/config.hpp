#pragma once

#include <istream>
#include <string>

#include "quadlip/morphology.hpp"
#include "quadlip/trajectory.hpp"
#include "quadlip/types.hpp"

namespace quadlip::io {

/// Full run description: morphology, phasing, and generation controls.
/// Defaults describe the reference machine walking at 1 m/s.
struct RunConfig {
    MorphologyConfig<double> morphology{};
    PhaseConfig<double> phases{};
    double velocity = 1.0;
    int n_steps = 4;
    double dt = 0.005;
    SwingProfile swing_profile = SwingProfile::Sine;
    FroudeConvention froude_convention = FroudeConvention::Sqrt;
    bool permissive = false;
};

/// Parses the flat `key = value` config format ('#' starts a comment).
/// Unknown and duplicate keys are rejected with <origin>:<line> context;
/// missing keys keep their defaults. x0_CoM_F is derived as
/// x0_CoM_H + D_AP, so the rigid-spine constraint holds by construction.
RunConfig parse_config(std::istream& in, const std::string& origin);

/// Loads and validates a config file. Throws std::runtime_error when the
/// file cannot be read and std::invalid_argument on parse/validation errors.
RunConfig load_config(const std::string& path);

}  // namespace quadlip::io
