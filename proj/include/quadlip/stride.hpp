#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "quadlip/errors.hpp"
#include "quadlip/morphology.hpp"
#include "quadlip/types.hpp"

namespace quadlip {

/// All velocity-derived quantities of one steady gait.
template <class Scalar>
struct StrideParameters {
    Scalar velocity = Scalar(0);           ///< v_w [m/s]
    Scalar step_length = Scalar(0);        ///< d_SL [m]
    Scalar step_width = Scalar(0);         ///< d_SW [m]
    Scalar cadence = Scalar(0);            ///< omega_S [steps/s], v_w = cadence * step_length
    Scalar lateral_amplitude = Scalar(0);  ///< A_y [m], CoM sway about the midline
    Scalar vertical_amplitude = Scalar(0); ///< A_z [m], CoM height oscillation
    Scalar apex_height = Scalar(0);        ///< z_max [m], peak CoM height
    Scalar natural_frequency = Scalar(0);  ///< omega_n = sqrt(g/l) [rad/s]
    /// Set when the requested speed is below the minimum and the lateral
    /// amplitude was clamped to half the step width (permissive mode). In
    /// this regime the CoM touches the support line at every sway extremum
    /// and the swing-foot projection becomes near-singular there.
    bool lateral_clamped = false;
};

using StrideParametersd = StrideParameters<double>;

template <class Scalar>
struct Amplitudes {
    Scalar lateral;  ///< A_y
    Scalar vertical; ///< A_z
    Scalar apex;     ///< z_max
};

template <class Scalar>
struct SpeedRange {
    Scalar min; ///< smallest velocity with A_y <= d_SW/2; equals 1/pi
    Scalar max; ///< omega_n * d_SL_max
};

template <class Scalar>
Scalar natural_frequency(const MorphologyConfig<Scalar>& cfg) {
    return std::sqrt(cfg.gravity / cfg.pendulum_length);
}

template <class Scalar>
Scalar max_velocity(const MorphologyConfig<Scalar>& cfg) {
    return natural_frequency(cfg) * cfg.step_length_max;
}

/// The minimum velocity keeping the CoM sway inside the feet. A_y <= d_SW/2
/// with A_y = d_SW/(2 pi v_w) reduces to v_w >= 1/pi regardless of the step
/// width, so the bound is morphology-independent.
template <class Scalar>
constexpr Scalar min_velocity() {
    return Scalar(1) / std::numbers::pi_v<Scalar>;
}

namespace detail {

/// Step-length strategy without the admissible-range check: linear ramp from
/// d_SL_min, reaching d_SL_max at 80% of the top speed and clamped there.
template <class Scalar>
Scalar step_length_raw(Scalar v_w, const MorphologyConfig<Scalar>& cfg) {
    const Scalar ramp = v_w / (Scalar(0.8) * max_velocity(cfg));
    const Scalar raw = cfg.step_length_min + (cfg.step_length_max - cfg.step_length_min) * ramp;
    return std::min(raw, cfg.step_length_max);
}

template <class Scalar>
Scalar lateral_amplitude_raw(Scalar v_w, Scalar d_sw) {
    return d_sw / (Scalar(2) * std::numbers::pi_v<Scalar> * v_w);
}

/// z_max and A_z for a given (possibly clamped) lateral amplitude.
template <class Scalar>
Amplitudes<Scalar> amplitudes_for(Scalar lateral, Scalar d_sw, Scalar d_sl,
                                  const MorphologyConfig<Scalar>& cfg) {
    const Scalar half_width = Scalar(0.5) * d_sw;
    const Scalar l = cfg.pendulum_length;
    const Scalar L = cfg.leg_extension_max;

    const Scalar offset = half_width - lateral;
    const Scalar apex_sq = l * l - offset * offset;
    if (apex_sq < Scalar(0))
        throw infeasibility_error("pendulum_height",
                                  "l < |d_SW/2 - A_y|: CoM apex height is imaginary (l=" +
                                      std::to_string(double(l)) + ")");
    const Scalar apex = std::sqrt(apex_sq);

    const Scalar reach_sq = L * L - half_width * half_width - d_sl * d_sl;
    if (reach_sq < Scalar(0))
        throw infeasibility_error("leg_reach",
                                  "L^2 < (d_SW/2)^2 + d_SL^2: leg cannot span the stance (L=" +
                                      std::to_string(double(L)) + ")");
    const Scalar vertical = apex - std::sqrt(reach_sq);
    if (vertical < Scalar(0))
        throw infeasibility_error("vertical_amplitude",
                                  "A_z < 0: leg reach exceeds the pendulum apex, the CoM would "
                                  "have to rise above z_max");
    return {lateral, vertical, apex};
}

}  // namespace detail

/// Step-width strategy: d_SW = m_sw * v_w + d_SW_max, floored at d_SW_min,
/// with d_SW_max = 1.2 * D_ML, d_SW_min = D_ML/2 and
/// m_sw = (d_SW_min - d_SW_max)/2. Non-increasing in v_w.
template <class Scalar>
Scalar step_width(Scalar v_w, const MorphologyConfig<Scalar>& cfg) {
    if (!(v_w >= Scalar(0))) throw std::invalid_argument("step_width: v_w must be >= 0");
    const Scalar widest = Scalar(1.2) * cfg.hip_separation;
    const Scalar narrowest = Scalar(0.5) * cfg.hip_separation;
    const Scalar slope = Scalar(0.5) * (narrowest - widest);
    return std::max(slope * v_w + widest, narrowest);
}

/// Step-length strategy: d_SL = m_SL * v_w + d_SL_min with
/// m_SL = (d_SL_max - d_SL_min) / (0.8 * v_max). The line reaches d_SL_max at
/// 0.8 * v_max and is clamped there for the last 20% of the speed range.
template <class Scalar>
Scalar step_length(Scalar v_w, const MorphologyConfig<Scalar>& cfg) {
    if (!(v_w >= Scalar(0))) throw std::invalid_argument("step_length: v_w must be >= 0");
    if (v_w > max_velocity(cfg))
        throw std::out_of_range("step_length: v_w exceeds the top speed omega_n * d_SL_max");
    return detail::step_length_raw(v_w, cfg);
}

/// Step frequency omega_S = v_w / d_SL [steps/s].
template <class Scalar>
Scalar cadence(Scalar v_w, Scalar d_sl) {
    if (!(d_sl > Scalar(0))) throw std::invalid_argument("cadence: d_SL must be > 0");
    if (!(v_w > Scalar(0))) throw std::invalid_argument("cadence: v_w must be > 0");
    return v_w / d_sl;
}

/// CoM oscillation amplitudes for one stride:
///   A_y   = d_SW / (2 pi v_w)
///   z_max = sqrt(l^2 - (d_SW/2 - A_y)^2)
///   A_z   = z_max - sqrt(L^2 - (d_SW/2)^2 - d_SL^2)
/// Throws infeasibility_error naming the violated constraint when either
/// square root is imaginary or A_z comes out negative.
template <class Scalar>
Amplitudes<Scalar> amplitudes(Scalar v_w, Scalar d_sw, Scalar d_sl,
                              const MorphologyConfig<Scalar>& cfg) {
    if (!(v_w > Scalar(0))) throw std::invalid_argument("amplitudes: v_w must be > 0");
    return detail::amplitudes_for(detail::lateral_amplitude_raw(v_w, d_sw), d_sw, d_sl, cfg);
}

/// Admissible steady-walking velocities: [1/pi, omega_n * d_SL_max].
template <class Scalar>
SpeedRange<Scalar> speed_range(const MorphologyConfig<Scalar>& cfg) {
    cfg.validate();
    return {min_velocity<Scalar>(), max_velocity(cfg)};
}

/// Dimensionless Froude number of a walking speed.
template <class Scalar>
Scalar froude(Scalar v_w, const MorphologyConfig<Scalar>& cfg,
              FroudeConvention convention = FroudeConvention::Sqrt) {
    if (!(v_w >= Scalar(0))) throw std::invalid_argument("froude: v_w must be >= 0");
    const Scalar gl = cfg.gravity * cfg.pendulum_length;
    return convention == FroudeConvention::Squared ? v_w * v_w / gl : v_w / std::sqrt(gl);
}

/// All gait parameters for walking at v_w. With permissive=false the velocity
/// must lie in [1/pi, v_max]. With permissive=true, speeds below the minimum
/// are accepted: the lateral amplitude is clamped to d_SW/2 and
/// `lateral_clamped` is set on the result.
template <class Scalar>
StrideParameters<Scalar> stride_parameters(Scalar v_w, const MorphologyConfig<Scalar>& cfg,
                                           bool permissive = false) {
    cfg.validate();
    if (!(v_w > Scalar(0))) throw std::invalid_argument("stride_parameters: v_w must be > 0");
    const Scalar v_max = max_velocity(cfg);
    if (v_w > v_max)
        throw std::out_of_range("stride_parameters: v_w = " + std::to_string(double(v_w)) +
                                " exceeds v_max = " + std::to_string(double(v_max)));
    if (!permissive && v_w < min_velocity<Scalar>())
        throw std::out_of_range("stride_parameters: v_w = " + std::to_string(double(v_w)) +
                                " is below the minimum 1/pi; enable permissive mode to clamp "
                                "the lateral amplitude instead");

    StrideParameters<Scalar> sp;
    sp.velocity = v_w;
    sp.step_width = step_width(v_w, cfg);
    sp.step_length = detail::step_length_raw(v_w, cfg);
    sp.cadence = cadence(v_w, sp.step_length);
    sp.natural_frequency = natural_frequency(cfg);

    Scalar lateral = detail::lateral_amplitude_raw(v_w, sp.step_width);
    const Scalar half_width = Scalar(0.5) * sp.step_width;
    if (lateral > half_width) {
        lateral = half_width;
        sp.lateral_clamped = true;
    }
    const auto amp = detail::amplitudes_for(lateral, sp.step_width, sp.step_length, cfg);
    sp.lateral_amplitude = amp.lateral;
    sp.vertical_amplitude = amp.vertical;
    sp.apex_height = amp.apex;

    if (!(sp.apex_height - Scalar(2) * sp.vertical_amplitude > Scalar(0)))
        throw infeasibility_error("height_band",
                                  "z_max - 2*A_z <= 0: the CoM would dip to the ground");
    for (Scalar q : {sp.step_length, sp.step_width, sp.cadence, sp.lateral_amplitude,
                     sp.vertical_amplitude, sp.apex_height, sp.natural_frequency})
        if (!std::isfinite(q))
            throw infeasibility_error("non_finite", "stride parameter is not finite");
    return sp;
}

}  // namespace quadlip
