#pragma once

#include <Eigen/Core>

#include <array>

namespace quadlip {

template <class Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;

using Vec3d = Vec3<double>;
using Vec3f = Vec3<float>;

/// The quadruped decomposes into a fore and a hind inverted-pendulum biped.
enum class Biped { Fore, Hind };

/// Lateral side of a biped. +y is Left.
enum class Side { Left, Right };

/// The four feet, indexed FL, FR, HL, HR. Used to address GaitSample::foot
/// and GaitSample::support.
enum class Foot : int { ForeLeft = 0, ForeRight = 1, HindLeft = 2, HindRight = 3 };

inline constexpr std::array<Foot, 4> kAllFeet = {Foot::ForeLeft, Foot::ForeRight,
                                                 Foot::HindLeft, Foot::HindRight};

constexpr int foot_index(Foot f) { return static_cast<int>(f); }

constexpr Foot make_foot(Biped b, Side s) {
    const int i = (b == Biped::Fore ? 0 : 2) + (s == Side::Left ? 0 : 1);
    return static_cast<Foot>(i);
}

constexpr Biped foot_biped(Foot f) {
    return foot_index(f) < 2 ? Biped::Fore : Biped::Hind;
}

constexpr Side foot_side(Foot f) {
    return foot_index(f) % 2 == 0 ? Side::Left : Side::Right;
}

constexpr const char* foot_name(Foot f) {
    constexpr const char* names[4] = {"FL", "FR", "HL", "HR"};
    return names[foot_index(f)];
}

/// Vertical profile of the swing foot.
///  - Sine (default): z_c * sin(pi * s), s in [0,1]; vanishes at lift-off and
///    touchdown and peaks at the configured clearance mid-swing.
///  - Cosine: z_c * cos(omega_S * t + phi); a raw cosine of the step frequency
///    that does not vanish at the swing boundaries. Kept selectable for
///    side-by-side comparison.
enum class SwingProfile { Sine, Cosine };

/// Froude number convention. Sqrt (default): v / sqrt(g*l).
/// Squared: v^2 / (g*l).
enum class FroudeConvention { Sqrt, Squared };

}  // namespace quadlip
