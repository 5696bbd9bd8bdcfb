#pragma once

#include "sim/types.hpp"

namespace lanemeta::sim {

// Intelligent driver model acceleration for a follower at speed `v` behind a
// leader at speed `v_lead` with bumper-to-bumper gap `gap` (> 0). Free flow is
// encoded as gap = kNoLeaderGap with v_lead = v. The result is clamped to
// [-2 * b_comfort, a_max]. Throws std::invalid_argument("invalid kinematics")
// on non-finite input.
double idm_accel(double v, double v_lead, double gap, const IdmParams& p);

}  // namespace lanemeta::sim
