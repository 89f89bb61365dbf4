#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace quadlip {

/// Physical constants of the quadruped. All lengths in meters, gravity in
/// m/s^2. Defaults describe an ANYmal-scale machine; the pendulum length of
/// 0.41 m pairs with the default step-length bounds to give a top walking
/// speed of about 1.71 m/s.
template <class Scalar>
struct MorphologyConfig {
    Scalar pendulum_length = Scalar(0.41);   ///< l: nominal CoM height over the support point
    Scalar leg_extension_max = Scalar(0.50); ///< L: maximum extension achievable by a leg
    Scalar hip_separation = Scalar(0.30);    ///< D_ML: mediolateral distance between hip joints
    Scalar spine_length = Scalar(0.60);      ///< D_AP: distance between fore and hind biped CoMs
    Scalar swing_clearance = Scalar(0.05);   ///< z_c: desired vertical clearance during swing
    Scalar gravity = Scalar(9.81);           ///< g
    Scalar step_length_min = Scalar(0.10);   ///< d_SL_min
    Scalar step_length_max = Scalar(0.35);   ///< d_SL_max

    /// Throws std::invalid_argument naming the offending field.
    void validate() const {
        auto require = [](bool ok, const char* what) {
            if (!ok) throw std::invalid_argument(std::string("MorphologyConfig: ") + what);
        };
        require(pendulum_length > Scalar(0), "l (pendulum_length) must be > 0");
        require(leg_extension_max > Scalar(0), "L (leg_extension_max) must be > 0");
        require(hip_separation > Scalar(0), "D_ML (hip_separation) must be > 0");
        require(spine_length > Scalar(0), "D_AP (spine_length) must be > 0");
        require(swing_clearance > Scalar(0), "z_c (swing_clearance) must be > 0");
        require(gravity > Scalar(0), "g (gravity) must be > 0: natural frequency undefined otherwise");
        require(step_length_min > Scalar(0), "d_SL_min must be > 0");
        require(step_length_max > step_length_min, "d_SL_max must exceed d_SL_min");
        require(leg_extension_max > pendulum_length, "L must exceed l");
        // Vertical amplitude must be real at the widest stance (d_SW_max/2 =
        // 0.6 * D_ML) combined with the longest step.
        const Scalar half_widest = Scalar(0.6) * hip_separation;
        require(leg_extension_max * leg_extension_max >
                    half_widest * half_widest + step_length_max * step_length_max,
                "L^2 must exceed (0.6*D_ML)^2 + d_SL_max^2");
        require(std::isfinite(pendulum_length) && std::isfinite(leg_extension_max) &&
                    std::isfinite(hip_separation) && std::isfinite(spine_length) &&
                    std::isfinite(swing_clearance) && std::isfinite(gravity) &&
                    std::isfinite(step_length_min) && std::isfinite(step_length_max),
                "all fields must be finite");
    }
};

using MorphologyConfigd = MorphologyConfig<double>;

}  // namespace quadlip
