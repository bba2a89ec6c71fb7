#pragma once

#include <string>

#include "tcgre/model.hpp"

// JSON serialization of instances and solutions.
//
// Instance schema:
//   {
//     "nodes": 4,
//     "edges": [[0,1,10.0], [0,2,1.0]],
//     "risky": [{"edge": [0,1], "reduced": 2.0, "support": [2]}],
//     "coord_cost": 1.0,
//     "robots": [{"start": 0, "goal": 1}, {"start": 3, "goal": 3}],
//     "horizon": 4            // optional
//   }
//
// Solution schema mirrors the Solution type:
//   {
//     "paths": [[{"node": 0, "cost": 0.0}, {"node": 1, "cost": 3.0}], ...],
//     "events": [{"t": 0, "receiver": 0, "supporter": 1,
//                 "edge": [0, 1], "support": 2}],
//     "robot_costs": [3.0, 2.0],
//     "total_cost": 5.0,      // null when the solver produced no schedule
//     "stats": {"visited": 7, "expanded": 30,
//               "wall_time": 0.001, "timed_out": false}
//   }
//
// Serialization is deterministic: identical values produce identical bytes.

namespace tcgre {

// Parses an instance from JSON text. Throws std::runtime_error with the
// offending field on malformed input and with the first violation when the
// parsed instance fails validate_instance.
ProblemInstance load_instance(const std::string& text);
ProblemInstance load_instance_file(const std::string& path);

std::string serialize_instance(const ProblemInstance& inst);

Solution load_solution(const std::string& text);
std::string serialize_solution(const Solution& sol);

}  // namespace tcgre
