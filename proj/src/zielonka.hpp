#pragma once

#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "paritygame.hpp"

namespace mucheck {

// Winning regions with history-free winning strategies. strat_e is defined
// on exists-owned positions inside win_e (likewise strat_a); -1 elsewhere.
struct GameSolution {
  Bits win_e, win_a;
  std::vector<int64_t> strat_e, strat_a;
};

// Zielonka's recursive algorithm. Deadlocks lose for their owner. Attractor
// computation is breadth-first, lowest position index first, and the first
// discovered move is recorded as the strategy.
GameSolution solve_zielonka(const ParityGame& g, const Deadline& deadline = {});

}  // namespace mucheck
