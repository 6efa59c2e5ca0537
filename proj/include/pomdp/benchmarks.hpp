#pragma once

#include <array>
#include <vector>

#include "pomdp/model.hpp"

namespace pomdp {

/// Walls adjacent to the agent, relative to its heading.
struct WallConfig {
    bool front = false;
    bool right = false;
    bool back = false;
    bool left = false;
};

/// The classic two-state Tiger problem, episodic-reset formulation:
/// states {tiger-left, tiger-right}, actions {listen, open-left,
/// open-right}, observations {hear-left, hear-right}. Listening preserves
/// the state and reports it correctly with probability 0.85 at cost -1;
/// opening yields +10 (correct) or -100 (tiger) and resets the state
/// uniformly. Discount 0.95, no terminal states. Parameters follow the
/// standard literature formulation.
PomdpModel build_tiger();

/// Distribution over the 16 wall-sensor observations for one wall layout.
/// Each of the four sensors fires independently: probability 0.9 given an
/// adjacent wall, 0.05 given none. Observation index packs the fired bits
/// as front*8 + right*4 + back*2 + left*1.
std::array<double, 16> sensor_observation_distribution(const WallConfig& cfg);

/// Hallway2 goal states: the four orientations of the goal square
/// (1-based display numbers 69..72), as internal 0-based indices.
std::vector<int> hallway2_goal_states();

// Hallway2 layout helpers. The map is a 5x7 grid of square rooms, 23 of
// them occupied; each room contributes four states, one per heading, in the
// order north, east, south, west (state = 4*block + heading). Block order
// is reading order over the grid.

inline constexpr int kHallway2Blocks = 23;
inline constexpr int kHallway2States = 92;
inline constexpr int kHallway2GoalObservation = 16;

struct GridPos {
    int row = 0;
    int col = 0;
};

/// Occupied grid cells, indexed by block.
const std::vector<GridPos>& hallway2_blocks();

/// Block index at (row, col), or -1 for an empty cell.
int hallway2_block_at(int row, int col);

/// Relative wall layout for a state (block * 4 + heading).
WallConfig hallway2_wall_config(int state);

}  // namespace pomdp
