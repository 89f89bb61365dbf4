#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "quadlip/errors.hpp"
#include "quadlip/trajectory.hpp"
#include "support/oracle.hpp"

using namespace quadlip;

namespace {

const MorphologyConfig<double> kDefaults{};
constexpr double kVMin = 0.3183098861837907;

MorphologyConfig<double> short_leg_config() {
    MorphologyConfig<double> cfg;
    cfg.leg_extension_max = 0.46;
    return cfg;
}

StrideParameters<double> sp_at_one() { return stride_parameters(1.0, kDefaults); }

}  // namespace

TEST_CASE("phase config validation") {
    PhaseConfig<double> pc;
    CHECK_NOTHROW(pc.validate(kDefaults));

    const auto shifted = PhaseConfig<double>::aligned(kDefaults, 1.0, 2.5, 0.1);
    CHECK_NOTHROW(shifted.validate(kDefaults));
    CHECK(shifted.x0_com_fore == 0.1 + kDefaults.spine_length);

    pc.phase_fore = -0.1;
    CHECK_THROWS_AS(pc.validate(kDefaults), std::invalid_argument);
    pc = {};
    pc.phase_hind = 2.0 * oracle::kPi;
    CHECK_THROWS_AS(pc.validate(kDefaults), std::invalid_argument);
    pc = {};
    pc.x0_com_fore = 0.59;  // breaks the rigid-spine offset
    CHECK_THROWS_AS(pc.validate(kDefaults), std::invalid_argument);
}

TEST_CASE("com position closed form") {
    const auto sp = sp_at_one();
    PhaseConfig<double> pc;
    pc.x0_com_fore = kDefaults.spine_length;
    pc.x0_com_hind = 0.0;

    SUBCASE("start: sway extremum at peak height") {
        const auto p = com_position(0.0, Biped::Hind, sp, pc);
        CHECK(p.x() == 0.0);
        CHECK(p.y() == sp.lateral_amplitude);
        CHECK(p.z() == doctest::Approx(sp.apex_height).epsilon(1e-14));
    }
    SUBCASE("one step later: advanced one step length, sway mirrored") {
        const double t = 1.0 / sp.cadence;
        const auto p = com_position(t, Biped::Hind, sp, pc);
        CHECK(p.x() == doctest::Approx(sp.step_length).epsilon(1e-12));
        CHECK(p.y() == doctest::Approx(-sp.lateral_amplitude).epsilon(1e-12));
        CHECK(p.z() == doctest::Approx(sp.apex_height).epsilon(1e-12));
    }
    SUBCASE("mid-step: centred laterally at the lowest point") {
        const double t = 0.5 / sp.cadence;
        const auto p = com_position(t, Biped::Hind, sp, pc);
        CHECK(std::abs(p.y()) <= 1e-12);
        CHECK(p.z() ==
              doctest::Approx(sp.apex_height - 2.0 * sp.vertical_amplitude).epsilon(1e-12));
    }
    SUBCASE("fore biped leads by the spine length") {
        const auto f = com_position(0.3, Biped::Fore, sp, pc);
        const auto h = com_position(0.3, Biped::Hind, sp, pc);
        CHECK(f.x() - h.x() == doctest::Approx(kDefaults.spine_length).epsilon(1e-12));
        CHECK(f.y() == h.y());  // same phase, identical sway
        CHECK(f.z() == h.z());
    }
}

TEST_CASE("com periodicity") {
    const auto sp = sp_at_one();
    PhaseConfig<double> pc;
    const double stride = 2.0 / sp.cadence;
    for (int i = 0; i <= 400; ++i) {
        const double t = stride * double(i) / 400.0;
        const auto a = com_position(t, Biped::Fore, sp, pc);
        const auto b = com_position(t + stride, Biped::Fore, sp, pc);
        const auto c = com_position(t + 0.5 * stride, Biped::Fore, sp, pc);
        CHECK(std::abs(a.y() - b.y()) < 1e-9);  // lateral period: two steps
        CHECK(std::abs(a.z() - c.z()) < 1e-9);  // vertical period: one step
    }
}

TEST_CASE("quadruped com is the exact midpoint") {
    const Vec3d a(0.0, 0.0, 0.0), b(1.0, 0.0, 0.0);
    CHECK(quad_com(a, b) == Vec3d(0.5, 0.0, 0.0));
    const Vec3d p(0.123, -4.5, 0.77);
    CHECK(quad_com(p, p) == p);
}

TEST_CASE("support side follows the lateral sway") {
    const double om = 3.0;
    CHECK(support_side(0.0, om, 0.0) == Side::Left);
    CHECK(support_side(0.5 / om + 1e-9, om, 0.0) == Side::Right);
    CHECK(support_side(0.0, om, oracle::kPi) == Side::Right);  // mirrored biped
    // an exact zero crossing belongs to the incoming side
    CHECK(support_side(0.0, 1.0, oracle::kPi / 2.0) == Side::Right);
    CHECK(support_side(0.0, 1.0, 3.0 * oracle::kPi / 2.0) == Side::Left);
}

TEST_CASE("swing foot projection") {
    SUBCASE("reference point") {
        const Vec3d support(0.0, -0.1275, 0.0);
        const Vec3d com(0.05, -0.02, 0.40);
        CHECK(swing_x(com, support, 0.1275) ==
              doctest::Approx(0.1186046511627907).epsilon(1e-12));
    }
    SUBCASE("vertical segment maps to the support x") {
        const Vec3d support(0.7, -0.1, 0.0);
        const Vec3d com(0.7, 0.02, 0.41);
        CHECK(swing_x(com, support, 0.1) == 0.7);
    }
    SUBCASE("mirror symmetry in y") {
        std::mt19937 rng(5);
        std::uniform_real_distribution<double> u(-0.5, 0.5);
        for (int i = 0; i < 200; ++i) {
            const Vec3d support(u(rng), -0.2 + 0.05 * u(rng), 0.0);
            const Vec3d com(u(rng), 0.1 * u(rng), 0.4);
            const double y_swing = -support.y();
            const Vec3d support_m(support.x(), -support.y(), 0.0);
            const Vec3d com_m(com.x(), -com.y(), com.z());
            CHECK(swing_x(com, support, y_swing) ==
                  doctest::Approx(swing_x(com_m, support_m, -y_swing)).epsilon(1e-13));
        }
    }
    SUBCASE("com on the support lateral line is singular") {
        const Vec3d support(0.0, 0.15, 0.0);
        const Vec3d com(0.25, 0.15, 0.41);
        CHECK_THROWS_AS(swing_x(com, support, -0.15), singular_geometry_error);
    }
}

TEST_CASE("swing height profiles") {
    SUBCASE("sine vanishes at both ends and peaks at the clearance") {
        CHECK(swing_z(2.0, 2.0, 0.25, 0.05) == 0.0);
        CHECK(swing_z(2.125, 2.0, 0.25, 0.05) == 0.05);
        CHECK(std::abs(swing_z(2.25, 2.0, 0.25, 0.05)) <= 1e-15);
        CHECK(swing_z(2.0625, 2.0, 0.25, 0.05) ==
              doctest::Approx(0.05 * std::sin(oracle::kPi * 0.25)).epsilon(1e-12));
    }
    SUBCASE("outside the window") {
        CHECK_THROWS_AS(swing_z(1.99, 2.0, 0.25, 0.05), std::invalid_argument);
        CHECK_THROWS_AS(swing_z(2.26, 2.0, 0.25, 0.05), std::invalid_argument);
        CHECK_THROWS_AS(swing_z(2.1, 2.0, 0.0, 0.05), std::invalid_argument);
    }
    SUBCASE("cosine profile is the raw cosine of the step frequency") {
        // does not vanish at lift-off: starts at full clearance for phase 0
        CHECK(swing_z(0.0, 0.0, 0.25, 0.05, SwingProfile::Cosine) == 0.05);
        const double t = 0.1, T = 0.25, phi = 0.7;
        CHECK(swing_z(t, 0.0, T, 0.05, SwingProfile::Cosine, phi) ==
              doctest::Approx(0.05 * std::cos(t / T + phi)).epsilon(1e-12));
    }
}

TEST_CASE("generated trajectory invariants") {
    const auto sp = sp_at_one();
    PhaseConfig<double> pc;
    const double dt = 0.005;
    const auto samples = generate(kDefaults, pc, 1.0, 4, dt);

    // floor(T/dt) + 1 uniform samples over [0, 4/omega_S]
    const double t_end = 4.0 / sp.cadence;
    CHECK(samples.size() == static_cast<std::size_t>(std::floor(t_end / dt)) + 1);
    CHECK(samples.front().t == 0.0);
    CHECK(samples.back().t <= t_end);

    const double half_width = 0.5 * sp.step_width;
    double max_quad_dev = 0.0;
    std::map<int, std::vector<double>> holds[4];  // foot -> interval -> support xs

    for (std::size_t k = 0; k < samples.size(); ++k) {
        const auto& s = samples[k];
        // exact midpoint composition
        const Vec3d mid = (s.com_fore + s.com_hind) * 0.5;
        max_quad_dev = std::max(max_quad_dev, (s.com_quad - mid).cwiseAbs().maxCoeff());

        // per biped exactly one support foot
        CHECK(int(s.support[0]) + int(s.support[1]) == 1);
        CHECK(int(s.support[2]) + int(s.support[3]) == 1);

        // height band
        for (const auto* com : {&s.com_fore, &s.com_hind}) {
            CHECK(com->z() <= sp.apex_height + 1e-12);
            CHECK(com->z() >= sp.apex_height - 2.0 * sp.vertical_amplitude - 1e-12);
        }

        for (Foot f : kAllFeet) {
            const int i = foot_index(f);
            // lateral pinning at +/- d_SW/2
            CHECK(std::abs(s.foot[i].y()) == half_width);
            CHECK((foot_side(f) == Side::Left) == (s.foot[i].y() > 0.0));
            const Vec3d& com = foot_biped(f) == Biped::Fore ? s.com_fore : s.com_hind;
            if (s.support[i]) {
                CHECK(s.foot[i].z() == 0.0);
                // support leg never exceeds the leg extension bound
                CHECK((com - s.foot[i]).norm() <= kDefaults.leg_extension_max + 1e-9);
                // swing-x denominator stays away from zero
                CHECK(std::abs(com.y() - s.foot[i].y()) >=
                      half_width - sp.lateral_amplitude - 1e-12);
                const int interval =
                    static_cast<int>(std::floor(sp.cadence * s.t + 0.5));
                holds[i][interval].push_back(s.foot[i].x());
            } else {
                CHECK(s.foot[i].z() >= -1e-15);
                CHECK(s.foot[i].z() <= kDefaults.swing_clearance + 1e-12);
            }
        }

        if (k > 0) {
            const auto& p = samples[k - 1];
            const double dti = s.t - p.t;
            CHECK(std::abs((s.com_fore.x() - p.com_fore.x()) / dti - 1.0) <= 1e-9);
            CHECK(std::abs((s.com_hind.x() - p.com_hind.x()) / dti - 1.0) <= 1e-9);
        }
    }
    CHECK(max_quad_dev == 0.0);

    // support CoR stationarity: every hold is bit-identical within an interval
    for (const auto& per_foot : holds)
        for (const auto& [interval, xs] : per_foot)
            for (const double x : xs) CHECK(x == xs.front());

    // forward span: n_steps * d_SL up to the sampling quantization
    const double span = samples.back().com_quad.x() - samples.front().com_quad.x();
    CHECK(span == doctest::Approx(1.13).epsilon(1e-9));

    // swing clearance peak reached within one dt of the apex
    double peak = 0.0;
    for (const auto& s : samples)
        for (Foot f : kAllFeet)
            if (!s.support[foot_index(f)]) peak = std::max(peak, s.foot[foot_index(f)].z());
    CHECK(peak >= kDefaults.swing_clearance * (1.0 - 2e-3));
    CHECK(peak <= kDefaults.swing_clearance + 1e-12);
}

TEST_CASE("generation preconditions") {
    PhaseConfig<double> pc;
    CHECK_THROWS_AS(generate(kDefaults, pc, 1.0, 0, 0.005), std::invalid_argument);
    CHECK_THROWS_AS(generate(kDefaults, pc, 1.0, 4, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(generate(kDefaults, pc, 1.0, 4, -0.1), std::invalid_argument);
    const auto sp = sp_at_one();
    CHECK_THROWS_AS(generate(kDefaults, pc, 1.0, 4, 1.0 / sp.cadence), std::invalid_argument);
    CHECK_THROWS_AS(generate(kDefaults, pc, 0.25, 4, 0.005), std::out_of_range);
    PhaseConfig<double> bad;
    bad.x0_com_fore = 0.0;
    CHECK_THROWS_AS(generate(kDefaults, bad, 1.0, 4, 0.005), std::invalid_argument);
}

TEST_CASE("permissive generation below the minimum speed") {
    const auto cfg = short_leg_config();
    PhaseConfig<double> pc;
    GenerateOptions opt;
    opt.permissive = true;
    const auto samples = generate(cfg, pc, 0.25, 2, 0.01, opt);
    CHECK(samples.size() > 100);
    const auto& s0 = samples.front();
    // at the sway extremum the CoM rides exactly above the support line and
    // the swing foot projects onto the support x
    CHECK(s0.com_fore.y() == s0.foot[foot_index(Foot::ForeLeft)].y());
    CHECK(s0.foot[foot_index(Foot::ForeRight)].x() ==
          s0.foot[foot_index(Foot::ForeLeft)].x());
    for (const auto& s : samples) CHECK(std::isfinite(s.foot[1].x()));
}

TEST_CASE("cosine swing profile stays within the clearance") {
    PhaseConfig<double> pc;
    GenerateOptions opt;
    opt.swing_profile = SwingProfile::Cosine;
    const auto samples = generate(kDefaults, pc, 1.0, 2, 0.005, opt);
    double z0 = -1.0;
    for (const auto& s : samples)
        for (Foot f : kAllFeet)
            if (!s.support[foot_index(f)]) {
                if (z0 < 0.0) z0 = s.foot[foot_index(f)].z();
                CHECK(std::abs(s.foot[foot_index(f)].z()) <= kDefaults.swing_clearance + 1e-12);
            }
    CHECK(z0 == doctest::Approx(0.05).epsilon(1e-9));  // nonzero at the window start
}

TEST_CASE("event schedule") {
    PhaseConfig<double> pc;
    const auto sp = sp_at_one();
    const auto ev = events(kDefaults, pc, 1.0, 2);

    // two transfers per biped in two steps, two events per transfer
    CHECK(ev.size() == 8);
    CHECK(std::is_sorted(ev.begin(), ev.end(),
                         [](const auto& a, const auto& b) { return a.t < b.t; }));
    CHECK(ev.front().t == doctest::Approx(0.1412660818772295).epsilon(1e-12));

    std::map<int, std::vector<GaitEvent<double>>> per_foot;
    for (const auto& e : ev) {
        per_foot[foot_index(e.foot)].push_back(e);
        if (e.kind == EventKind::TouchDown) CHECK(e.position.z() == 0.0);
        CHECK(std::abs(e.position.y()) == 0.5 * sp.step_width);
    }
    for (const auto& [foot, list] : per_foot) {
        for (std::size_t i = 1; i < list.size(); ++i) {
            CHECK(list[i].kind != list[i - 1].kind);  // alternating kinds
            CHECK(list[i].t - list[i - 1].t ==
                  doctest::Approx(1.0 / sp.cadence).epsilon(1e-12));
        }
    }

    // left feet lift first (support at t=0), right feet touch down then
    CHECK(ev[0].kind == EventKind::LiftOff);
    CHECK(foot_side(ev[0].foot) == Side::Left);

    // consecutive footholds of one biped advance by one step length
    const auto td_fl = std::find_if(ev.begin(), ev.end(), [](const auto& e) {
        return e.foot == Foot::ForeRight && e.kind == EventKind::TouchDown;
    });
    REQUIRE(td_fl != ev.end());
    CHECK(td_fl->position.x() ==
          doctest::Approx(pc.x0_com_fore + sp.step_length).epsilon(1e-12));
}

TEST_CASE("phase offsets shift the hind schedule") {
    const auto sp = sp_at_one();
    const double half_step = 0.5 / sp.cadence;

    auto times_of = [](const std::vector<GaitEvent<double>>& ev, Biped b) {
        std::vector<double> ts;
        for (const auto& e : ev)
            if (foot_biped(e.foot) == b && e.kind == EventKind::TouchDown) ts.push_back(e.t);
        return ts;
    };

    SUBCASE("quarter-cycle offset interleaves the transfers midway") {
        const auto pc = PhaseConfig<double>::aligned(kDefaults, 0.0, oracle::kPi / 2.0);
        const auto ev = events(kDefaults, pc, 1.0, 3);
        const auto fore = times_of(ev, Biped::Fore);
        const auto hind = times_of(ev, Biped::Hind);
        REQUIRE(!fore.empty());
        REQUIRE(!hind.empty());
        for (const double th : hind) {
            double best = 1e9;
            for (const double tf : fore) best = std::min(best, std::abs(th - tf));
            CHECK(best == doctest::Approx(half_step).epsilon(1e-9));
        }
    }
    SUBCASE("half-cycle offset keeps the transfer instants, swapping sides") {
        const auto pc = PhaseConfig<double>::aligned(kDefaults, 0.0, oracle::kPi);
        const auto ev = events(kDefaults, pc, 1.0, 3);
        const auto fore = times_of(ev, Biped::Fore);
        const auto hind = times_of(ev, Biped::Hind);
        REQUIRE(fore.size() == hind.size());
        for (std::size_t i = 0; i < fore.size(); ++i)
            CHECK(hind[i] == doctest::Approx(fore[i]).epsilon(1e-12));
        // sides are mirrored at the shared instants
        for (const auto& e : ev)
            if (e.kind == EventKind::TouchDown && e.t == ev.front().t) {
                // first transfer: fore touches Right, hind touches Left
                if (foot_biped(e.foot) == Biped::Fore) CHECK(foot_side(e.foot) == Side::Right);
                else CHECK(foot_side(e.foot) == Side::Left);
            }
    }
}

TEST_CASE("events preconditions") {
    PhaseConfig<double> pc;
    CHECK_THROWS_AS(events(kDefaults, pc, 1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(events(kDefaults, pc, 2.0, 2), std::out_of_range);
}

TEST_CASE("sampling exactly at a transfer instant hands support to the incoming foot") {
    const auto sp = sp_at_one();
    // phase pi/2 puts the transfer exactly at t = 0 (the phase-to-turns
    // division is exact, so the interval index lands on its boundary)
    const auto pc = PhaseConfig<double>::aligned(kDefaults, oracle::kPi / 2.0,
                                                 oracle::kPi / 2.0);
    const auto s = sample_at(0.0, kDefaults, pc, sp);
    // the incoming (right) feet own the instant
    CHECK(s.support[foot_index(Foot::ForeRight)]);
    CHECK(s.support[foot_index(Foot::HindRight)]);
    CHECK_FALSE(s.support[foot_index(Foot::ForeLeft)]);
    // the outgoing foot starts its swing at ground level
    CHECK(s.foot[foot_index(Foot::ForeLeft)].z() == 0.0);
    // footholds straddle the CoM half a step either side
    CHECK(s.foot[foot_index(Foot::ForeRight)].x() ==
          doctest::Approx(pc.x0_com_fore + 0.5 * sp.step_length).epsilon(1e-12));
    CHECK(s.foot[foot_index(Foot::ForeLeft)].x() ==
          doctest::Approx(pc.x0_com_fore - 0.5 * sp.step_length).epsilon(1e-9));
}

TEST_CASE("sample_at agrees with the reference formulas at arbitrary instants") {
    const auto sp = sp_at_one();
    PhaseConfig<double> pc;
    oracle::Morph m;
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> ut(0.0, 3.0 / sp.cadence);
    for (int i = 0; i < 300; ++i) {
        const double t = ut(rng);
        const auto s = sample_at(t, kDefaults, pc, sp);
        CHECK(s.com_hind.x() == doctest::Approx(oracle::com_x(1.0, t, 0.0)).epsilon(1e-12));
        CHECK(s.com_hind.y() ==
              doctest::Approx(oracle::com_y(sp.lateral_amplitude, sp.cadence, t, 0.0))
                  .epsilon(1e-12));
        CHECK(s.com_hind.z() ==
              doctest::Approx(oracle::com_z(sp.apex_height, sp.vertical_amplitude, sp.cadence,
                                            t, 0.0))
                  .epsilon(1e-12));
    }
}
