#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "quadlip/morphology.hpp"
#include "quadlip/stride.hpp"
#include "quadlip/trajectory.hpp"
#include "quadlip/types.hpp"

namespace quadlip {

/// Froude-number gait bands of dogs: walking on [0.10, 0.40), gait/canter on
/// [0.40, 4.00].
enum class GaitBand { BelowWalk, Walk, GaitCanter, AboveCanter };

constexpr const char* band_name(GaitBand b) {
    constexpr const char* names[4] = {"below-walk", "walk", "gait-canter", "above-canter"};
    return names[static_cast<int>(b)];
}

template <class Scalar>
struct GaitClass {
    GaitBand band;
    Scalar froude;
};

/// One feasibility constraint with its slack: margin >= 0 means satisfied,
/// and |margin| is the distance to the boundary (meters for the geometric
/// checks, m/s for the velocity check).
template <class Scalar>
struct FeasibilityCheck {
    std::string name;
    bool pass;
    Scalar margin;
};

template <class Scalar>
struct FeasibilityReport {
    Scalar velocity;
    std::vector<FeasibilityCheck<Scalar>> checks;
    bool overall; ///< conjunction of all checks
};

using FeasibilityReportd = FeasibilityReport<double>;

/// Model-artifact metrics measured on a generated trajectory.
template <class Scalar>
struct AuditMetrics {
    Scalar max_leg_extension = Scalar(0);       ///< max support-CoR to biped-CoM distance
    Scalar max_swing_x_jump = Scalar(0);        ///< largest foot-x change across a lift-off sample pair
    Scalar com_speed_error = Scalar(0);         ///< max |finite-difference forward speed - v_w|
    Scalar intercom_distance_range = Scalar(0); ///< spread of the fore-hind CoM distance
    Scalar swing_peak_clearance = Scalar(0);    ///< highest swing-foot z observed
};

using AuditMetricsd = AuditMetrics<double>;

template <class Scalar>
struct SweepRow {
    Scalar velocity;
    Scalar step_length;
    Scalar step_width;
    Scalar cadence;
    Scalar lateral_amplitude;
    Scalar vertical_amplitude; ///< NaN when the gait geometry is imaginary at this speed
    Scalar apex_height;        ///< NaN when the CoM apex is imaginary at this speed
    Scalar froude_sqrt;
    Scalar froude_squared;
    GaitBand band; ///< classified from the sqrt-convention Froude number
    bool feasible;
};

using SweepRowd = SweepRow<double>;

template <class Scalar>
GaitClass<Scalar> classify_gait(Scalar fn) {
    if (!(fn >= Scalar(0)))
        throw std::invalid_argument("classify_gait: Froude number must be >= 0");
    const GaitBand band = fn < Scalar(0.10)    ? GaitBand::BelowWalk
                          : fn < Scalar(0.40)  ? GaitBand::Walk
                          : fn <= Scalar(4.00) ? GaitBand::GaitCanter
                                               : GaitBand::AboveCanter;
    return {band, fn};
}

/// Evaluates the five kinematic feasibility constraints at one velocity.
/// Failures are report entries, never exceptions; every margin is finite.
///   lateral_amplitude:  A_y <= d_SW/2      (CoM sway inside the feet)
///   leg_reach:          L >= hypot of the stance span (A_z square root real)
///   pendulum_height:    l >= |d_SW/2 - A_y| (z_max square root real)
///   vertical_amplitude: A_z >= 0
///   velocity_range:     v_w <= omega_n * d_SL_max
template <class Scalar>
FeasibilityReport<Scalar> feasibility_check(Scalar v_w, const MorphologyConfig<Scalar>& cfg) {
    cfg.validate();
    if (!(v_w > Scalar(0))) throw std::invalid_argument("feasibility_check: v_w must be > 0");

    const Scalar width = step_width(v_w, cfg);
    const Scalar length = detail::step_length_raw(v_w, cfg);
    const Scalar lateral = detail::lateral_amplitude_raw(v_w, width);
    const Scalar half_width = Scalar(0.5) * width;
    const Scalar l = cfg.pendulum_length;
    const Scalar L = cfg.leg_extension_max;

    FeasibilityReport<Scalar> rep;
    rep.velocity = v_w;
    auto add = [&rep](const char* name, Scalar margin) {
        rep.checks.push_back({name, margin >= Scalar(0), margin});
    };

    add("lateral_amplitude", half_width - lateral);
    const Scalar reach_margin =
        L - std::sqrt(half_width * half_width + length * length);
    add("leg_reach", reach_margin);
    const Scalar height_margin = l - std::abs(half_width - lateral);
    add("pendulum_height", height_margin);
    if (reach_margin >= Scalar(0) && height_margin >= Scalar(0)) {
        const Scalar offset = half_width - lateral;
        const Scalar apex = std::sqrt(l * l - offset * offset);
        const Scalar reach = std::sqrt(L * L - half_width * half_width - length * length);
        add("vertical_amplitude", apex - reach);
    } else {
        // A_z is not computable; carry the binding prerequisite's deficit.
        add("vertical_amplitude", std::min(reach_margin, height_margin));
    }
    add("velocity_range", max_velocity(cfg) - v_w);

    rep.overall = true;
    for (const auto& c : rep.checks) rep.overall = rep.overall && c.pass;
    return rep;
}

/// Measures model artifacts over a sampled trajectory.
template <class Scalar>
AuditMetrics<Scalar> audit(const std::vector<GaitSample<Scalar>>& samples,
                           const MorphologyConfig<Scalar>& cfg,
                           const StrideParameters<Scalar>& sp) {
    cfg.validate();
    if (samples.size() < 2) throw std::invalid_argument("audit: need at least 2 samples");

    AuditMetrics<Scalar> m;
    Scalar inter_min = std::numeric_limits<Scalar>::infinity();
    Scalar inter_max = Scalar(0);

    for (std::size_t k = 0; k < samples.size(); ++k) {
        const auto& s = samples[k];
        for (Foot f : kAllFeet) {
            const int i = foot_index(f);
            const Vec3<Scalar>& com = foot_biped(f) == Biped::Fore ? s.com_fore : s.com_hind;
            if (s.support[i])
                m.max_leg_extension = std::max(m.max_leg_extension, (com - s.foot[i]).norm());
            else
                m.swing_peak_clearance = std::max(m.swing_peak_clearance, s.foot[i].z());
        }
        const Scalar inter = (s.com_fore - s.com_hind).norm();
        inter_min = std::min(inter_min, inter);
        inter_max = std::max(inter_max, inter);

        if (k == 0) continue;
        const auto& p = samples[k - 1];
        const Scalar dt = s.t - p.t;
        if (dt > Scalar(0)) {
            for (const auto member : {&GaitSample<Scalar>::com_fore, &GaitSample<Scalar>::com_hind}) {
                const Scalar speed = ((s.*member).x() - (p.*member).x()) / dt;
                m.com_speed_error = std::max(m.com_speed_error, std::abs(speed - sp.velocity));
            }
        }
        for (Foot f : kAllFeet) {
            const int i = foot_index(f);
            if (p.support[i] && !s.support[i])
                m.max_swing_x_jump =
                    std::max(m.max_swing_x_jump, std::abs(s.foot[i].x() - p.foot[i].x()));
        }
    }
    m.intercom_distance_range = inter_max - inter_min;
    return m;
}

/// One row per grid velocity; infeasible speeds are flagged, not omitted, so
/// the constraint boundaries themselves stay visible in the table. Feasible
/// rows carry exactly the stride_parameters values; infeasible rows fall back
/// to the raw strategy formulas (imaginary quantities become NaN).
template <class Scalar>
std::vector<SweepRow<Scalar>> sweep(const MorphologyConfig<Scalar>& cfg,
                                    const std::vector<Scalar>& v_grid) {
    cfg.validate();
    if (v_grid.empty()) throw std::invalid_argument("sweep: empty velocity grid");
    for (std::size_t i = 0; i < v_grid.size(); ++i) {
        if (!(v_grid[i] > Scalar(0)))
            throw std::invalid_argument("sweep: grid velocities must be > 0");
        if (i > 0 && !(v_grid[i] > v_grid[i - 1]))
            throw std::invalid_argument("sweep: grid must be strictly ascending");
    }

    std::vector<SweepRow<Scalar>> rows;
    rows.reserve(v_grid.size());
    for (const Scalar v : v_grid) {
        SweepRow<Scalar> r;
        r.velocity = v;
        r.froude_sqrt = froude(v, cfg, FroudeConvention::Sqrt);
        r.froude_squared = froude(v, cfg, FroudeConvention::Squared);
        r.band = classify_gait(r.froude_sqrt).band;
        r.feasible = feasibility_check(v, cfg).overall;
        try {
            const auto sp = stride_parameters(v, cfg);
            r.step_length = sp.step_length;
            r.step_width = sp.step_width;
            r.cadence = sp.cadence;
            r.lateral_amplitude = sp.lateral_amplitude;
            r.vertical_amplitude = sp.vertical_amplitude;
            r.apex_height = sp.apex_height;
        } catch (const std::exception&) {
            constexpr Scalar nan = std::numeric_limits<Scalar>::quiet_NaN();
            r.step_width = step_width(v, cfg);
            r.step_length = detail::step_length_raw(v, cfg);
            r.cadence = v / r.step_length;
            r.lateral_amplitude = detail::lateral_amplitude_raw(v, r.step_width);
            const Scalar half_width = Scalar(0.5) * r.step_width;
            const Scalar offset = half_width - r.lateral_amplitude;
            const Scalar apex_sq = cfg.pendulum_length * cfg.pendulum_length - offset * offset;
            const Scalar reach_sq = cfg.leg_extension_max * cfg.leg_extension_max -
                                    half_width * half_width - r.step_length * r.step_length;
            r.apex_height = apex_sq >= Scalar(0) ? std::sqrt(apex_sq) : nan;
            r.vertical_amplitude = (apex_sq >= Scalar(0) && reach_sq >= Scalar(0))
                                       ? r.apex_height - std::sqrt(reach_sq)
                                       : nan;
        }
        rows.push_back(r);
    }
    return rows;
}

}  // namespace quadlip
