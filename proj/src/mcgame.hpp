#pragma once

#include <cstdint>
#include <string>

#include "closure.hpp"
#include "errors.hpp"
#include "model.hpp"
#include "paritygame.hpp"
#include "zielonka.hpp"

namespace mucheck {

struct McGame {
  ParityGame game;   // entry = position of (state, root formula)
  uint64_t pairs = 0;  // (state, closure-node) positions, excluding subgames
};

// Builds the model-checking parity game reachable from (state, cl.root).
// Boolean and fixpoint connectives follow the standard game table; modal
// positions open logic-specific subgames:
//   - diamond/box: direct moves to the successor pairs;
//   - monotone: pick a neighborhood, then the opponent picks an element;
//   - graded <g n>/[g n]: layered counting subgame over the successor list,
//     counter saturating at n+1;
//   - probabilistic: the row and threshold are scaled by the lcm of all
//     denominators to integers, then the graded counting subgame is reused;
//   - coalition: the coalition commits a joint move, the opponent completes.
McGame build_mc_game(const CoalgebraModel& m, const ClosureGraph& cl,
                     const std::string& state, const Deadline& deadline = {});

struct GameCheckResult {
  bool holds = false;
  uint64_t game_positions = 0;
};

GameCheckResult check_game(const CoalgebraModel& m, const std::string& state,
                           const Formula& phi, const Deadline& deadline = {});

}  // namespace mucheck
