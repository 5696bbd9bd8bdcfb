#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace lanemeta::sim {

constexpr int kObsDim = 21;
constexpr int kActionCount = 6;
constexpr double kNoLeaderGap = 1e9;  // sentinel: free flow, no leader ahead

struct IdmParams {
  double v0 = 33.3;           // desired speed [m/s]
  double s0 = 2.0;            // minimum gap [m]
  double time_headway = 1.5;  // [s]
  double a_max = 2.0;         // [m/s^2]
  double b_comfort = 3.0;     // comfortable deceleration [m/s^2]
  double delta = 4.0;         // acceleration exponent
};

struct VehicleState {
  int id = 0;
  int lane = 0;
  double long_pos = 0.0;  // [m] from segment start
  double lat_pos = 0.0;   // [m] offset from lane-0 centerline
  double speed = 0.0;     // [m/s], never negative
  double accel = 0.0;     // [m/s^2]
};

enum class LcPhase { kNone, kChanging, kAborting };

struct EgoState {
  VehicleState base;
  int target_lane = 0;  // the exit lane the episode must reach
  LcPhase lc_phase = LcPhase::kNone;
  double lc_progress = 0.0;  // 0 = source centerline, 1 = destination
  int lc_from_lane = 0;      // maneuver endpoints, valid while lc_phase != kNone
  int lc_to_lane = 0;
  double prev_accel = 0.0;      // for longitudinal jerk
  double prev_lat_speed = 0.0;  // for lateral jerk
};

struct TrafficTask {
  double release_prob = 0.0;  // probability of one vehicle release per second
  uint64_t seed = 0;
};

enum class Terminal { kRunning, kSuccess, kCollision, kExitMissed };

struct EnvState {
  EgoState ego;
  std::vector<VehicleState> others;
  double sim_time = 0.0;
  int64_t step_count = 0;
  Terminal terminal = Terminal::kRunning;
};

using Observation = std::array<double, kObsDim>;

// Factorized action: lateral = index / 2 in {keep, change, abort},
// longitudinal = index % 2 in {follow current-lane leader, follow
// target-lane leader}.
struct JointAction {
  int index = 0;
  int lateral() const { return index / 2; }
  int longitudinal() const { return index % 2; }
  static JointAction from_parts(int lateral, int longitudinal) {
    return JointAction{lateral * 2 + longitudinal};
  }
};

// Neighbor roles used by the reward table and the shield.
enum NeighborSlot {
  kC0 = 0,  // current lane leader
  kC1 = 1,  // target lane leader
  kC2 = 2,  // current lane follower
  kC3 = 3,  // target lane follower
};

struct NeighborSet {
  // C0..C3 plus the far-lane leader/follower pair.
  std::array<std::optional<VehicleState>, 4> c;
  std::optional<VehicleState> far_leader;
  std::optional<VehicleState> far_follower;
};

// Per-step byproducts consumed by the reward and the logs.
struct StepEvents {
  bool collision = false;
  double long_jerk = 0.0;  // [m/s^3]
  double lat_jerk = 0.0;
  int lateral_row = 0;  // effective lateral row for the near-collision table
  // Center-to-center longitudinal distances |P_y,e - P_y,i| to C0..C3 in the
  // post-step state; infinity where the slot is empty.
  std::array<double, 4> c_dist = {std::numeric_limits<double>::infinity(),
                                  std::numeric_limits<double>::infinity(),
                                  std::numeric_limits<double>::infinity(),
                                  std::numeric_limits<double>::infinity()};
  std::array<bool, 4> c_present = {false, false, false, false};
};

struct ScenarioParams {
  int lanes = 3;
  double lane_width = 3.75;       // [m]
  double segment_length = 800.0;  // [m] distance to the ramp exit
  double dt = 0.1;                // [s]
  double lane_change_duration = 3.0;  // [s] full lane traversal
  double vehicle_length = 5.0;
  double vehicle_width = 2.0;
  double v_max = 33.3;
  int ego_start_lane = 2;
  int target_lane = 0;
  double ego_init_speed = 25.0;
  int64_t max_episode_steps = 1200;
  double despawn_margin = 100.0;  // vehicles removed past segment + margin
  double entry_clear = 15.0;      // entry cell considered blocked within this
  bool warm_start = true;
  double warm_start_min_pos = 60.0;
  IdmParams idm;

  double road_width() const { return lanes * lane_width; }
  double centerline(int lane) const { return lane * lane_width; }
};

}  // namespace lanemeta::sim
