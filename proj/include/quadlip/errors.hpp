#pragma once

#include <stdexcept>
#include <string>

namespace quadlip {

/// A requested gait violates the kinematic model. `constraint()` names the
/// violated quantity (e.g. "leg_reach", "vertical_amplitude").
class infeasibility_error : public std::domain_error {
public:
    infeasibility_error(std::string constraint, const std::string& detail)
        : std::domain_error(constraint + ": " + detail), constraint_(std::move(constraint)) {}

    const std::string& constraint() const noexcept { return constraint_; }

private:
    std::string constraint_;
};

/// The swing-foot projection is undefined: the CoM sits exactly on the
/// support foot's lateral line. Only reachable at the minimum-velocity
/// boundary, where the lateral sway amplitude equals half the step width.
class singular_geometry_error : public std::domain_error {
public:
    explicit singular_geometry_error(const std::string& detail) : std::domain_error(detail) {}
};

}  // namespace quadlip
