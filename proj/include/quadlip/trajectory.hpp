#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "quadlip/errors.hpp"
#include "quadlip/morphology.hpp"
#include "quadlip/stride.hpp"
#include "quadlip/types.hpp"

namespace quadlip {

/// Starting phases and initial anteroposterior CoM coordinates of the two
/// bipeds. The fore CoM leads the hind CoM by exactly the spine length.
template <class Scalar>
struct PhaseConfig {
    Scalar phase_fore = Scalar(0);   ///< phi_F [rad], in [0, 2*pi)
    Scalar phase_hind = Scalar(0);   ///< phi_H [rad], in [0, 2*pi)
    Scalar x0_com_fore = Scalar(0.6); ///< initial fore CoM x [m]
    Scalar x0_com_hind = Scalar(0);   ///< initial hind CoM x [m]

    /// Builds a configuration whose CoM offsets satisfy the spine constraint
    /// by construction.
    static PhaseConfig aligned(const MorphologyConfig<Scalar>& cfg, Scalar phi_fore = Scalar(0),
                               Scalar phi_hind = Scalar(0), Scalar x0_hind = Scalar(0)) {
        PhaseConfig pc;
        pc.phase_fore = phi_fore;
        pc.phase_hind = phi_hind;
        pc.x0_com_hind = x0_hind;
        pc.x0_com_fore = x0_hind + cfg.spine_length;
        return pc;
    }

    void validate(const MorphologyConfig<Scalar>& cfg) const {
        constexpr Scalar two_pi = Scalar(2) * std::numbers::pi_v<Scalar>;
        if (!(phase_fore >= Scalar(0)) || phase_fore >= two_pi)
            throw std::invalid_argument("PhaseConfig: phi_F must lie in [0, 2*pi)");
        if (!(phase_hind >= Scalar(0)) || phase_hind >= two_pi)
            throw std::invalid_argument("PhaseConfig: phi_H must lie in [0, 2*pi)");
        if (x0_com_fore != x0_com_hind + cfg.spine_length)
            throw std::invalid_argument(
                "PhaseConfig: x0_CoM_F must equal x0_CoM_H + D_AP (rigid spine)");
    }
};

using PhaseConfigd = PhaseConfig<double>;

/// One time-stamped snapshot of the gait. Feet are CoR (ground contact)
/// positions; lateral foot coordinates are pinned at +/- d_SW/2.
template <class Scalar>
struct GaitSample {
    Scalar t = Scalar(0);
    Vec3<Scalar> com_fore = Vec3<Scalar>::Zero();
    Vec3<Scalar> com_hind = Vec3<Scalar>::Zero();
    Vec3<Scalar> com_quad = Vec3<Scalar>::Zero(); ///< midpoint of the biped CoMs, exactly
    std::array<Vec3<Scalar>, 4> foot = {};        ///< indexed by Foot (FL, FR, HL, HR)
    std::array<bool, 4> support = {};             ///< true = support, false = swing
};

using GaitSampled = GaitSample<double>;

enum class EventKind { LiftOff, TouchDown };

template <class Scalar>
struct GaitEvent {
    Scalar t = Scalar(0);
    Foot foot = Foot::ForeLeft;
    EventKind kind = EventKind::LiftOff;
    Vec3<Scalar> position = Vec3<Scalar>::Zero();
};

using GaitEventd = GaitEvent<double>;

struct GenerateOptions {
    SwingProfile swing_profile = SwingProfile::Sine;
    bool permissive = false;
};

/// Closed-form CoM position of one biped:
///   x = v_w t + x0
///   y = A_y cos(pi omega_S t + phi)
///   z = (z_max - A_z) + A_z cos(2 pi omega_S t + 2 phi)
template <class Scalar>
Vec3<Scalar> com_position(Scalar t, Biped biped, const StrideParameters<Scalar>& sp,
                          const PhaseConfig<Scalar>& pc) {
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    const Scalar phase = biped == Biped::Fore ? pc.phase_fore : pc.phase_hind;
    const Scalar x0 = biped == Biped::Fore ? pc.x0_com_fore : pc.x0_com_hind;
    return {sp.velocity * t + x0,
            sp.lateral_amplitude * std::cos(pi * sp.cadence * t + phase),
            (sp.apex_height - sp.vertical_amplitude) +
                sp.vertical_amplitude * std::cos(Scalar(2) * pi * sp.cadence * t + Scalar(2) * phase)};
}

/// Quadruped CoM: componentwise midpoint of the two biped CoMs.
template <class DerivedA, class DerivedB>
auto quad_com(const Eigen::MatrixBase<DerivedA>& com_fore,
              const Eigen::MatrixBase<DerivedB>& com_hind) {
    using Scalar = typename DerivedA::Scalar;
    return ((com_fore + com_hind) * Scalar(0.5)).eval();
}

namespace detail {

/// Index of the support interval containing time t. Interval m covers the
/// half lateral-sway period centred on extremum m (boundaries are the zero
/// crossings of y_CoM); even intervals support Left, odd Right. An exact
/// boundary instant belongs to the incoming interval.
template <class Scalar>
std::int64_t stride_interval(Scalar t, Scalar cadence, Scalar phase_turns) {
    return static_cast<std::int64_t>(std::floor(cadence * t + phase_turns + Scalar(0.5)));
}

template <class Scalar>
Side interval_side(std::int64_t m) {
    return m % 2 == 0 ? Side::Left : Side::Right;
}

/// Foothold of support interval m: the CoM x at the interval midpoint, so the
/// pendulum pivots symmetrically about the foot.
template <class Scalar>
Scalar foothold_x(std::int64_t m, Scalar x0, Scalar phase_turns, Scalar d_sl) {
    return x0 + (Scalar(m) - phase_turns) * d_sl;
}

}  // namespace detail

/// Side currently providing support: the side of the lateral CoM displacement
/// (+y is Left). Transfers are instantaneous at the zero crossings of y_CoM;
/// the foot entering support owns the exact crossing instant.
template <class Scalar>
Side support_side(Scalar t, Scalar cadence, Scalar phase) {
    return detail::interval_side<Scalar>(
        detail::stride_interval(t, cadence, phase / std::numbers::pi_v<Scalar>));
}

/// Anteroposterior coordinate of the swing foot: the line through the support
/// CoR and the CoM, extended to the swing foot's lateral line y_swing.
/// When the CoM sits exactly above the support CoR in x the segment is
/// vertical (the slope form degenerates) and the result is the support x.
template <class Scalar>
Scalar swing_x(const Vec3<Scalar>& com, const Vec3<Scalar>& support_cor, Scalar y_swing) {
    const Scalar dx = com.x() - support_cor.x();
    if (dx == Scalar(0)) return support_cor.x();
    const Scalar dy = com.y() - support_cor.y();
    if (dy == Scalar(0))
        throw singular_geometry_error(
            "swing_x: CoM lies on the support foot's lateral line; the projection is undefined "
            "(reachable only at the minimum-velocity boundary)");
    return support_cor.x() + (y_swing - support_cor.y()) * dx / dy;
}

/// Swing-foot height at time t within a swing window [t_liftoff,
/// t_liftoff + swing_duration]. See SwingProfile for the two shapes; the
/// Cosine profile needs the biped's phase.
template <class Scalar>
Scalar swing_z(Scalar t, Scalar t_liftoff, Scalar swing_duration, Scalar clearance,
               SwingProfile profile = SwingProfile::Sine, Scalar phase = Scalar(0)) {
    if (!(swing_duration > Scalar(0)))
        throw std::invalid_argument("swing_z: swing_duration must be > 0");
    const Scalar s = (t - t_liftoff) / swing_duration;
    constexpr Scalar slack = Scalar(1e-9); // tolerate boundary rounding from closed-form lift-off times
    if (!(s >= -slack) || s > Scalar(1) + slack)
        throw std::invalid_argument("swing_z: t outside the swing window");
    if (profile == SwingProfile::Sine) {
        const Scalar sc = std::clamp(s, Scalar(0), Scalar(1));
        return clearance * std::sin(std::numbers::pi_v<Scalar> * sc);
    }
    // Cosine: clearance * cos(omega_S t + phi) with omega_S = 1/swing_duration steps/s.
    return clearance * std::cos(t / swing_duration + phase);
}

/// Snapshot of the full gait state at an arbitrary instant.
template <class Scalar>
GaitSample<Scalar> sample_at(Scalar t, const MorphologyConfig<Scalar>& cfg,
                             const PhaseConfig<Scalar>& pc, const StrideParameters<Scalar>& sp,
                             SwingProfile profile = SwingProfile::Sine) {
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    GaitSample<Scalar> s;
    s.t = t;
    s.com_fore = com_position(t, Biped::Fore, sp, pc);
    s.com_hind = com_position(t, Biped::Hind, sp, pc);
    s.com_quad = quad_com(s.com_fore, s.com_hind);

    const Scalar half_width = Scalar(0.5) * sp.step_width;
    const Scalar step_period = Scalar(1) / sp.cadence;

    for (Biped biped : {Biped::Fore, Biped::Hind}) {
        const bool fore = biped == Biped::Fore;
        const Scalar phase = fore ? pc.phase_fore : pc.phase_hind;
        const Scalar x0 = fore ? pc.x0_com_fore : pc.x0_com_hind;
        const Vec3<Scalar>& com = fore ? s.com_fore : s.com_hind;

        const Scalar phase_turns = phase / pi;
        const std::int64_t m = detail::stride_interval(t, sp.cadence, phase_turns);
        const Side sup_side = detail::interval_side<Scalar>(m);
        const Side swg_side = sup_side == Side::Left ? Side::Right : Side::Left;

        const Scalar y_sup = sup_side == Side::Left ? half_width : -half_width;
        const Vec3<Scalar> sup_pos(detail::foothold_x(m, x0, phase_turns, sp.step_length), y_sup,
                                   Scalar(0));

        const Scalar y_swg = -y_sup;
        const Scalar t_liftoff = (Scalar(m) - Scalar(0.5) - phase_turns) / sp.cadence;
        const Vec3<Scalar> swg_pos(swing_x(com, sup_pos, y_swg), y_swg,
                                   swing_z(t, t_liftoff, step_period, cfg.swing_clearance,
                                           profile, phase));

        s.foot[foot_index(make_foot(biped, sup_side))] = sup_pos;
        s.foot[foot_index(make_foot(biped, swg_side))] = swg_pos;
        s.support[foot_index(make_foot(biped, sup_side))] = true;
        s.support[foot_index(make_foot(biped, swg_side))] = false;
    }
    return s;
}

/// Uniformly sampled trajectory over t in [0, n_steps/omega_S] at spacing dt.
template <class Scalar>
std::vector<GaitSample<Scalar>> generate(const MorphologyConfig<Scalar>& cfg,
                                         const PhaseConfig<Scalar>& pc, Scalar v_w, int n_steps,
                                         Scalar dt, const GenerateOptions& opt = {}) {
    cfg.validate();
    pc.validate(cfg);
    if (n_steps < 1) throw std::invalid_argument("generate: n_steps must be >= 1");
    const auto sp = stride_parameters(v_w, cfg, opt.permissive);
    const Scalar step_period = Scalar(1) / sp.cadence;
    if (!(dt > Scalar(0)) || dt >= step_period)
        throw std::invalid_argument("generate: dt must lie in (0, 1/omega_S)");

    const Scalar t_end = Scalar(n_steps) / sp.cadence;
    const auto last = static_cast<std::int64_t>(std::floor(t_end / dt));
    std::vector<GaitSample<Scalar>> out;
    out.reserve(static_cast<std::size_t>(last) + 1);
    for (std::int64_t k = 0; k <= last; ++k)
        out.push_back(sample_at(Scalar(k) * dt, cfg, pc, sp, opt.swing_profile));
    return out;
}

/// Lift-off / touchdown schedule over t in [0, n_steps/omega_S],
/// chronologically sorted. At every support transfer the outgoing foot lifts
/// off and the opposite foot touches down at the next foothold; consecutive
/// events of one foot are spaced 1/omega_S apart.
template <class Scalar>
std::vector<GaitEvent<Scalar>> events(const MorphologyConfig<Scalar>& cfg,
                                      const PhaseConfig<Scalar>& pc, Scalar v_w, int n_steps,
                                      const GenerateOptions& opt = {}) {
    cfg.validate();
    pc.validate(cfg);
    if (n_steps < 1) throw std::invalid_argument("events: n_steps must be >= 1");
    const auto sp = stride_parameters(v_w, cfg, opt.permissive);
    const Scalar t_end = Scalar(n_steps) / sp.cadence;
    const Scalar half_width = Scalar(0.5) * sp.step_width;
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;

    std::vector<GaitEvent<Scalar>> out;
    for (Biped biped : {Biped::Fore, Biped::Hind}) {
        const bool fore = biped == Biped::Fore;
        const Scalar phase_turns = (fore ? pc.phase_fore : pc.phase_hind) / pi;
        const Scalar x0 = fore ? pc.x0_com_fore : pc.x0_com_hind;

        // Transition ending interval m happens at t = (m + 1/2 - phi/pi)/omega_S.
        for (std::int64_t m = static_cast<std::int64_t>(std::floor(phase_turns - Scalar(0.5))) - 1;;
             ++m) {
            const Scalar t = (Scalar(m) + Scalar(0.5) - phase_turns) / sp.cadence;
            if (t < Scalar(0)) continue;
            if (t > t_end) break;
            const Side out_side = detail::interval_side<Scalar>(m);
            const Side in_side = out_side == Side::Left ? Side::Right : Side::Left;
            const Scalar y_out = out_side == Side::Left ? half_width : -half_width;
            out.push_back({t, make_foot(biped, out_side), EventKind::LiftOff,
                           {detail::foothold_x(m, x0, phase_turns, sp.step_length), y_out,
                            Scalar(0)}});
            out.push_back({t, make_foot(biped, in_side), EventKind::TouchDown,
                           {detail::foothold_x(m + 1, x0, phase_turns, sp.step_length), -y_out,
                            Scalar(0)}});
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.t != b.t) return a.t < b.t;
        if (a.kind != b.kind) return a.kind == EventKind::LiftOff;
        return foot_index(a.foot) < foot_index(b.foot);
    });
    return out;
}

}  // namespace quadlip
