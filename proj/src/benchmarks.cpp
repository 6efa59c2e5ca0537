#include "pomdp/benchmarks.hpp"

#include <stdexcept>

namespace pomdp {

PomdpModel build_tiger() {
    constexpr int kListen = 0, kOpenLeft = 1, kOpenRight = 2;
    constexpr int kTigerLeft = 0, kTigerRight = 1;
    constexpr int kHearLeft = 0, kHearRight = 1;

    PomdpModel m = PomdpModel::with_dimensions(2, 3, 2);
    m.discount = 0.95;
    m.state_names = {"tiger-left", "tiger-right"};
    m.action_names = {"listen", "open-left", "open-right"};
    m.observation_names = {"hear-left", "hear-right"};

    auto set_t = [&m](int a, int s, int s2, double p) {
        m.transition[(static_cast<size_t>(a) * 2 + s) * 2 + s2] = p;
    };
    auto set_o = [&m](int a, int s2, int o, double p) {
        m.observation[(static_cast<size_t>(a) * 2 + s2) * 2 + o] = p;
    };
    auto set_r = [&m](int s, int a, int s2, double v) {
        m.reward[(static_cast<size_t>(a) * 2 + s) * 2 + s2] = v;
    };

    // Listening leaves the tiger where it is; opening resets uniformly.
    set_t(kListen, kTigerLeft, kTigerLeft, 1.0);
    set_t(kListen, kTigerRight, kTigerRight, 1.0);
    for (int a : {kOpenLeft, kOpenRight}) {
        for (int s = 0; s < 2; ++s) {
            set_t(a, s, kTigerLeft, 0.5);
            set_t(a, s, kTigerRight, 0.5);
        }
    }

    set_o(kListen, kTigerLeft, kHearLeft, 0.85);
    set_o(kListen, kTigerLeft, kHearRight, 0.15);
    set_o(kListen, kTigerRight, kHearLeft, 0.15);
    set_o(kListen, kTigerRight, kHearRight, 0.85);
    for (int a : {kOpenLeft, kOpenRight}) {
        for (int s2 = 0; s2 < 2; ++s2) {
            set_o(a, s2, kHearLeft, 0.5);
            set_o(a, s2, kHearRight, 0.5);
        }
    }

    for (int s2 = 0; s2 < 2; ++s2) {
        set_r(kTigerLeft, kListen, s2, -1.0);
        set_r(kTigerRight, kListen, s2, -1.0);
        set_r(kTigerLeft, kOpenLeft, s2, -100.0);
        set_r(kTigerRight, kOpenLeft, s2, 10.0);
        set_r(kTigerLeft, kOpenRight, s2, 10.0);
        set_r(kTigerRight, kOpenRight, s2, -100.0);
    }
    return m;
}

std::array<double, 16> sensor_observation_distribution(const WallConfig& cfg) {
    constexpr double kSenseGivenWall = 0.9;
    constexpr double kSenseGivenNoWall = 0.05;

    const bool walls[4] = {cfg.front, cfg.right, cfg.back, cfg.left};
    std::array<double, 16> dist{};
    for (int pattern = 0; pattern < 16; ++pattern) {
        double p = 1.0;
        for (int side = 0; side < 4; ++side) {
            const bool sensed = (pattern >> (3 - side)) & 1;
            const double p_sense = walls[side] ? kSenseGivenWall : kSenseGivenNoWall;
            p *= sensed ? p_sense : (1.0 - p_sense);
        }
        dist[pattern] = p;
    }
    return dist;
}

std::vector<int> hallway2_goal_states() {
    // Goal square is block 17 (display numbers 69..72).
    return {68, 69, 70, 71};
}

namespace {

// 5x7 occupancy grid; '.' is empty. Reading order assigns block indices.
constexpr int kRows = 5;
constexpr int kCols = 7;
constexpr const char* kGrid[kRows] = {
    ".#####.",
    "##.#.##",
    ".#.#.#.",
    "##.#.##",
    ".#####.",
};

std::vector<GridPos> make_blocks() {
    std::vector<GridPos> blocks;
    for (int r = 0; r < kRows; ++r) {
        for (int c = 0; c < kCols; ++c) {
            if (kGrid[r][c] == '#') blocks.push_back({r, c});
        }
    }
    return blocks;
}

}  // namespace

const std::vector<GridPos>& hallway2_blocks() {
    static const std::vector<GridPos> blocks = make_blocks();
    return blocks;
}

int hallway2_block_at(int row, int col) {
    if (row < 0 || row >= kRows || col < 0 || col >= kCols) return -1;
    if (kGrid[row][col] != '#') return -1;
    int idx = 0;
    for (int r = 0; r < kRows; ++r) {
        for (int c = 0; c < kCols; ++c) {
            if (kGrid[r][c] != '#') continue;
            if (r == row && c == col) return idx;
            ++idx;
        }
    }
    return -1;
}

WallConfig hallway2_wall_config(int state) {
    if (state < 0 || state >= kHallway2States) {
        throw std::out_of_range("hallway2 state index out of range");
    }
    const int block = state / 4;
    const int heading = state % 4;
    const GridPos pos = hallway2_blocks()[block];

    // Absolute walls in compass order north, east, south, west.
    const int dr[4] = {-1, 0, 1, 0};
    const int dc[4] = {0, 1, 0, -1};
    bool wall[4];
    for (int dir = 0; dir < 4; ++dir) {
        wall[dir] = hallway2_block_at(pos.row + dr[dir], pos.col + dc[dir]) < 0;
    }

    WallConfig cfg;
    cfg.front = wall[heading];
    cfg.right = wall[(heading + 1) % 4];
    cfg.back = wall[(heading + 2) % 4];
    cfg.left = wall[(heading + 3) % 4];
    return cfg;
}

}  // namespace pomdp
