#include "quadlip/io/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace quadlip::io {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& what) {
    throw std::invalid_argument(origin + ":" + std::to_string(line) + ": " + what);
}

double parse_number(const std::string& origin, int line, const std::string& key,
                    const std::string& value) {
    double out = 0;
    const char* first = value.data();
    const char* last = value.data() + value.size();
    const auto res = std::from_chars(first, last, out);
    if (res.ec != std::errc() || res.ptr != last)
        fail(origin, line, "invalid number for '" + key + "': '" + value + "'");
    return out;
}

int parse_count(const std::string& origin, int line, const std::string& key,
                const std::string& value) {
    int out = 0;
    const char* first = value.data();
    const char* last = value.data() + value.size();
    const auto res = std::from_chars(first, last, out);
    if (res.ec != std::errc() || res.ptr != last)
        fail(origin, line, "invalid integer for '" + key + "': '" + value + "'");
    return out;
}

bool parse_bool(const std::string& origin, int line, const std::string& key,
                const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    fail(origin, line, "invalid boolean for '" + key + "': '" + value + "' (use true/false)");
}

}  // namespace

RunConfig parse_config(std::istream& in, const std::string& origin) {
    RunConfig rc;
    double x0_com_hind = 0.0;

    std::map<std::string, int> seen; // key -> line of first occurrence
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        const std::string stripped = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (stripped.empty()) continue;

        const auto eq = stripped.find('=');
        if (eq == std::string::npos) fail(origin, line, "expected 'key = value'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty()) fail(origin, line, "missing key before '='");
        if (value.empty()) fail(origin, line, "missing value for '" + key + "'");

        if (const auto [it, fresh] = seen.emplace(key, line); !fresh)
            fail(origin, line,
                 "duplicate key '" + key + "' (first set on line " + std::to_string(it->second) +
                     ")");

        auto num = [&] { return parse_number(origin, line, key, value); };
        if (key == "l") rc.morphology.pendulum_length = num();
        else if (key == "L") rc.morphology.leg_extension_max = num();
        else if (key == "D_ML") rc.morphology.hip_separation = num();
        else if (key == "D_AP") rc.morphology.spine_length = num();
        else if (key == "z_c") rc.morphology.swing_clearance = num();
        else if (key == "g") rc.morphology.gravity = num();
        else if (key == "d_SL_min") rc.morphology.step_length_min = num();
        else if (key == "d_SL_max") rc.morphology.step_length_max = num();
        else if (key == "phi_F") rc.phases.phase_fore = num();
        else if (key == "phi_H") rc.phases.phase_hind = num();
        else if (key == "x0_CoM_H") x0_com_hind = num();
        else if (key == "v_w") rc.velocity = num();
        else if (key == "n_steps") rc.n_steps = parse_count(origin, line, key, value);
        else if (key == "dt") rc.dt = num();
        else if (key == "swing_profile") {
            if (value == "sine") rc.swing_profile = SwingProfile::Sine;
            else if (value == "cosine") rc.swing_profile = SwingProfile::Cosine;
            else fail(origin, line, "swing_profile must be 'sine' or 'cosine'");
        } else if (key == "froude_convention") {
            if (value == "sqrt") rc.froude_convention = FroudeConvention::Sqrt;
            else if (value == "squared") rc.froude_convention = FroudeConvention::Squared;
            else fail(origin, line, "froude_convention must be 'sqrt' or 'squared'");
        } else if (key == "permissive") {
            rc.permissive = parse_bool(origin, line, key, value);
        } else if (key == "x0_CoM_F") {
            fail(origin, line, "unknown key 'x0_CoM_F' (derived as x0_CoM_H + D_AP)");
        } else {
            fail(origin, line, "unknown key '" + key + "'");
        }
    }

    rc.morphology.validate();
    rc.phases = PhaseConfig<double>::aligned(rc.morphology, rc.phases.phase_fore,
                                             rc.phases.phase_hind, x0_com_hind);
    rc.phases.validate(rc.morphology);
    if (!(rc.velocity > 0.0)) throw std::invalid_argument(origin + ": v_w must be > 0");
    if (rc.n_steps < 1) throw std::invalid_argument(origin + ": n_steps must be >= 1");
    if (!(rc.dt > 0.0)) throw std::invalid_argument(origin + ": dt must be > 0");
    return rc;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file '" + path + "'");
    return parse_config(in, path);
}

}  // namespace quadlip::io
