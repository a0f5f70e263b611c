#pragma once

#include <string>
#include <vector>

#include "ast.hpp"
#include "model.hpp"
#include "paritygame.hpp"

namespace mucheck {

enum class Lift { none, monotone, graded, probabilistic };

std::string lift_name(Lift l);
Lift lift_from_name(const std::string& name);

// Deterministic parity game families. `size2` is only used by the
// Jurdzinski family (levels x blocks); passing 0 reuses `size`.
//
//   clique(n)       n positions, priority i, owner i mod 2, moves to all
//                   other positions
//   ladder(n)       2n positions, owner/priority i mod 2, moves to i+1, i+2
//                   (mod 2n)
//   jurdzinski(d,w) a lattice of two-cycle gadgets with priorities 2i-1/2i
//                   per level, chained within levels and across them
//   hanoi(n)        the Towers of Hanoi move graph on 3^n configurations,
//                   existential reachability of the all-on-peg-2
//                   configuration (even self-loop there, priority 1
//                   elsewhere)
//   langincl(n)     a fair-simulation game between two n-state Buechi
//                   automata over {a,b} (documented reconstruction)
ParityGame gen_parity(const std::string& family, uint64_t size,
                      uint64_t size2 = 0);

// Re-interprets a parity game as a coalgebra with atoms prio_<i>, owner_e,
// owner_a. Positions without moves first get a self-loop.
//   none            powerset, successors = moves
//   monotone        minimal two-step outcome neighborhoods of each owner
//   graded          multiset, weight ceil(10 / deg(v)) per move
//   probabilistic   uniform distribution over the moves
CoalgebraModel lift_game(const ParityGame& g, Lift lift);

// Prepends an existential choice between the original entry and a fresh
// priority-0 self-loop; adds exactly 2 positions.
ParityGame make_lazy(const ParityGame& g);

// The formula whose truth at a game position coincides with the existential
// player winning it, with modalities chosen per lift. k is padded to odd.
Formula chi_formula(uint32_t k, Lift lift);

// Concurrent game over positions p_0..p_9: each agent picks a number in
// {1..m}; the sum advances the position index mod 10.
CoalgebraModel gen_modulo(uint32_t agents, uint32_t moves);
// phi1: the coalition can reach every position; phi2: the displayed Buechi
// formula over p_0 and p_5.
std::pair<Formula, Formula> modulo_formulas(
    const std::vector<std::string>& coalition);

// The castle game: n knights with h health points each; concurrent
// attack/defend/rest rounds over the full state space (ready, hp)^n.
CoalgebraModel gen_castle(uint32_t castles, uint32_t hp);
std::string castle_initial_state(uint32_t castles, uint32_t hp);
// One safety formula per knight followed by one elimination formula per
// coalition size (coalitions are prefixes k1..ks).
std::vector<Formula> castle_formulas(uint32_t castles);

}  // namespace mucheck
