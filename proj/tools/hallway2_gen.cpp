// Generates data/hallway2.POMDP: the 92-state office-navigation benchmark
// (23 rooms x 4 headings, 5 noisy actions, 16 wall-sensor observations plus
// a deterministic goal marker). Layout and sensor model follow the
// published benchmark description; see data/README.md for provenance notes.
//
// Dynamics written here:
//   - actions: forward, turn-left, turn-right, turn-around, stay
//   - each action achieves its intended effect with probability 0.8 and
//     each of the other four outcomes with probability 0.05; a blocked
//     forward outcome collapses onto staying put
//   - goal square (display states 69..72): any action restarts uniformly
//     over the 88 non-goal states; entering the square pays +1
//   - observations depend on the arrived-at state only: the four-sensor
//     product model for non-goal states, the goal marker deterministically
//     in the goal square
//   - discount 0.95, start uniform over all 92 states

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "pomdp/benchmarks.hpp"
#include "pomdp/format.hpp"

namespace {

using pomdp::GridPos;

enum Action { kForward = 0, kTurnLeft, kTurnRight, kTurnAround, kStay, kNumActions };

const char* kActionNames[kNumActions] = {"forward", "turn-left", "turn-right", "turn-around",
                                         "stay"};

constexpr double kIntended = 0.8;
constexpr double kSlip = 0.05;

std::string state_name(int s) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "s%02d", s + 1);  // display numbers are 1-based
    return std::string(buf);
}

std::string observation_name(int o) {
    if (o == pomdp::kHallway2GoalObservation) return "goal";
    std::string name = "o";
    for (int bit = 3; bit >= 0; --bit) name.push_back(((o >> bit) & 1) ? '1' : '0');
    return name;
}

// Pose reached from `state` by a nominal outcome (0..4 = the five actions'
// intended effects). Forward against a wall stays put.
int outcome_state(int state, int outcome) {
    const int block = state / 4;
    const int heading = state % 4;
    const GridPos pos = pomdp::hallway2_blocks()[block];
    switch (outcome) {
        case kForward: {
            const int dr[4] = {-1, 0, 1, 0};
            const int dc[4] = {0, 1, 0, -1};
            const int dest = pomdp::hallway2_block_at(pos.row + dr[heading], pos.col + dc[heading]);
            return dest < 0 ? state : dest * 4 + heading;
        }
        case kTurnLeft:
            return block * 4 + (heading + 3) % 4;
        case kTurnRight:
            return block * 4 + (heading + 1) % 4;
        case kTurnAround:
            return block * 4 + (heading + 2) % 4;
        default:
            return state;
    }
}

std::map<int, double> transition_row(int state, int action) {
    std::map<int, double> row;
    for (int outcome = 0; outcome < kNumActions; ++outcome) {
        const double p = (outcome == action) ? kIntended : kSlip;
        row[outcome_state(state, outcome)] += p;
    }
    return row;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string out_path = argc > 1 ? argv[1] : "data/hallway2.POMDP";
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
        std::cerr << "cannot open " << out_path << " for writing\n";
        return 1;
    }

    const auto goals = pomdp::hallway2_goal_states();
    auto is_goal = [&goals](int s) {
        for (int g : goals)
            if (g == s) return true;
        return false;
    };

    out << "# Hallway2: 23-room office navigation, 92 states (4 headings per\n"
           "# room), 5 noisy actions, 16 wall-sensor observations plus a\n"
           "# deterministic goal marker. Generated by tools/hallway2_gen; see\n"
           "# data/README.md for the layout and dynamics conventions.\n"
           "# State names carry the 1-based display numbers; the goal square\n"
           "# is s69..s72 and restarts uniformly over non-goal states.\n\n";

    out << "discount: 0.95\n";
    out << "values: reward\n";

    out << "states:";
    for (int s = 0; s < pomdp::kHallway2States; ++s) out << ' ' << state_name(s);
    out << "\n";

    out << "actions:";
    for (const char* name : kActionNames) out << ' ' << name;
    out << "\n";

    out << "observations:";
    for (int o = 0; o <= pomdp::kHallway2GoalObservation; ++o) out << ' ' << observation_name(o);
    out << "\n\n";

    out << "start: uniform\n\n";

    // Transitions: sparse scalar entries for the non-goal states, a full
    // row (uniform restart over non-goal states) for each goal state.
    for (int a = 0; a < kNumActions; ++a) {
        for (int s = 0; s < pomdp::kHallway2States; ++s) {
            if (is_goal(s)) continue;
            for (const auto& [s2, p] : transition_row(s, a)) {
                out << "T: " << kActionNames[a] << " : " << state_name(s) << " : "
                    << state_name(s2) << ' ' << pomdp::format_double(p) << "\n";
            }
        }
        out << "\n";
    }
    const int non_goal = pomdp::kHallway2States - static_cast<int>(goals.size());
    const double restart_p = 1.0 / non_goal;
    for (int g : goals) {
        out << "T: * : " << state_name(g) << "\n";
        for (int s2 = 0; s2 < pomdp::kHallway2States; ++s2) {
            if (s2 > 0) out << ' ';
            out << (is_goal(s2) ? "0" : pomdp::format_double(restart_p));
        }
        out << "\n";
    }
    out << "\n";

    // Observations depend only on the arrived-at state.
    for (int s2 = 0; s2 < pomdp::kHallway2States; ++s2) {
        out << "O: * : " << state_name(s2) << "\n";
        if (is_goal(s2)) {
            for (int o = 0; o <= pomdp::kHallway2GoalObservation; ++o) {
                if (o > 0) out << ' ';
                out << (o == pomdp::kHallway2GoalObservation ? "1" : "0");
            }
        } else {
            const auto dist = pomdp::sensor_observation_distribution(pomdp::hallway2_wall_config(s2));
            for (int o = 0; o < 16; ++o) {
                if (o > 0) out << ' ';
                out << pomdp::format_double(dist[o]);
            }
            out << " 0";
        }
        out << "\n";
    }
    out << "\n";

    // +1 for entering the goal square.
    for (int g : goals) {
        out << "R: * : * : " << state_name(g) << " : * 1\n";
    }

    out.close();
    if (!out) {
        std::cerr << "write failed for " << out_path << "\n";
        return 1;
    }
    std::cout << "wrote " << out_path << "\n";
    return 0;
}
