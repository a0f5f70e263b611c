#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ast.hpp"
#include "bits.hpp"
#include "rational.hpp"

namespace mucheck {

// A finite coalgebra for one of the five supported functors, plus an atom
// valuation. Immutable after construction/parsing; safe for concurrent reads.
struct CoalgebraModel {
  Functor functor = Functor::powerset;
  std::vector<std::string> states;                    // index order
  std::map<std::string, uint32_t> state_index;
  std::map<std::string, std::vector<uint32_t>> valuation;  // sorted indices

  // powerset: successor sets, sorted
  std::vector<std::vector<uint32_t>> successors;
  // multiset: (successor, multiplicity >= 1), sorted by successor
  std::vector<std::vector<std::pair<uint32_t, uint64_t>>> weights;
  // distribution: (successor, probability > 0), sorted; rows sum to 1
  std::vector<std::vector<std::pair<uint32_t, Rational>>> rows;
  // monotone: families of neighborhoods (each sorted; family sorted)
  std::vector<std::vector<std::vector<uint32_t>>> neighborhoods;
  // game
  std::vector<std::string> agents;
  // moves[s][a]: sorted move names, nonempty
  std::vector<std::vector<std::vector<std::string>>> moves;
  // delta[s]: successor per joint move, mixed-radix indexed with agent 0
  // as the most significant digit
  std::vector<std::vector<uint32_t>> delta;

  uint32_t n_states() const { return uint32_t(states.size()); }
  uint32_t index_of(const std::string& state) const;
  bool has_atom_at(const std::string& atom, uint32_t state) const;
  Bits atom_set(const std::string& atom) const;

  // mixed-radix index of a joint move at state s
  size_t joint_index(uint32_t s, const std::vector<uint32_t>& mv) const;

  void validate() const;
};

CoalgebraModel parse_model(const std::string& text);
std::string serialize_model(const CoalgebraModel& m);

// True iff xi(state) lies in the lifting of op applied to predicate D.
// Throws FunctorMismatchError when op's functor class differs from the
// model's functor (or the coalition is not a subset of the agents).
bool lift(const ModalOp& op, const CoalgebraModel& m, uint32_t state,
          const Bits& D);

// The states a lifting at `state` can depend on: successors, multiset or
// distribution support, union of neighborhoods, or image of the joint-move
// table. Sorted.
std::vector<uint32_t> modal_base(const CoalgebraModel& m, uint32_t state);

}  // namespace mucheck
