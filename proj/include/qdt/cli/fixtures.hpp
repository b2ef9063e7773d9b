#pragma once

// Built-in problems used by the demos and pinned by the tests.

#include <string>

#include "qdt/cli/problem_file.hpp"

namespace qdt::cli::fixtures {

/// Adding an egg to a five-egg omelette, with the given plausibility of a
/// fresh and of a rotten egg.
inline std::string omelette_json(Level fresh, Level rotten) {
    return R"({
  "states": [
    {"name": "fresh", "pi": )" + std::to_string(fresh) + R"(},
    {"name": "rotten", "pi": )" + std::to_string(rotten) + R"(}
  ],
  "consequences": [
    {"name": "nothing-to-eat", "rank": 1},
    {"name": "5-eggs-1-spoiled", "rank": 2},
    {"name": "5-eggs-cup-to-wash", "rank": 3},
    {"name": "5-eggs", "rank": 4},
    {"name": "6-eggs-cup-to-wash", "rank": 5},
    {"name": "6-eggs", "rank": 6}
  ],
  "acts": [
    {"name": "BIO", "outcomes": {"fresh": "6-eggs", "rotten": "nothing-to-eat"}},
    {"name": "BAC", "outcomes": {"fresh": "6-eggs-cup-to-wash", "rotten": "5-eggs-cup-to-wash"}},
    {"name": "TA", "outcomes": {"fresh": "5-eggs-1-spoiled", "rotten": "5-eggs"}}
  ]
}
)";
}

inline ProblemFile omelette(Level fresh, Level rotten) { return parse_problem(omelette_json(fresh, rotten)); }

/// Six states with probabilities 2/9,1/9,1/9,2/9,1/9,2/9 and three acts
/// whose utilities are used only through their order.
inline std::string condorcet_json() {
    return R"({
  "states": [
    {"name": "s1", "weight": "2/9"},
    {"name": "s2", "weight": "1/9"},
    {"name": "s3", "weight": "1/9"},
    {"name": "s4", "weight": "2/9"},
    {"name": "s5", "weight": "1/9"},
    {"name": "s6", "weight": "2/9"}
  ],
  "consequences": [
    {"name": "-40", "rank": 0},
    {"name": "-25", "rank": 1},
    {"name": "-15", "rank": 2},
    {"name": "-10", "rank": 3},
    {"name": "0", "rank": 4},
    {"name": "5", "rank": 5},
    {"name": "10", "rank": 6},
    {"name": "20", "rank": 7},
    {"name": "40", "rank": 8},
    {"name": "100", "rank": 9}
  ],
  "acts": [
    {"name": "f", "outcomes": {"s1": "5", "s2": "100", "s3": "0", "s4": "0", "s5": "-10", "s6": "-10"}},
    {"name": "g", "outcomes": {"s1": "0", "s2": "-15", "s3": "100", "s4": "-10", "s5": "0", "s6": "10"}},
    {"name": "h", "outcomes": {"s1": "-25", "s2": "0", "s3": "-40", "s4": "20", "s5": "40", "s6": "0"}}
  ]
}
)";
}

inline ProblemFile condorcet() { return parse_problem(condorcet_json()); }

} // namespace qdt::cli::fixtures
