#pragma once

#include <cstdint>
#include <string>

#include "closure.hpp"
#include "errors.hpp"
#include "model.hpp"
#include "region.hpp"

namespace mucheck {

struct LocalStats {
  bool holds = false;
  uint64_t explored = 0;  // product pairs expanded before the verdict
  uint64_t total = 0;     // |states| * |cl|
  uint64_t solver_passes = 0;
};

// One-step evaluation of a single closure node against X, restricted to
// scope: the returned column contains state c iff the node's local condition
// holds at (c, node) with operand pairs read from X.
Bits eval_node(const ClosureGraph& cl, uint32_t node, const ProductRegion& X,
               const ProductRegion& scope, const CoalgebraModel& m);

// Winning region of the existential player over the pairs in scope, computed
// as the nested fixpoint mu X_k. nu X_{k-1}. ... nu X_0 of the one-step
// evaluation (k = max priority, padded odd; mu at odd, nu at even indices)
// by naive Kleene iteration with full inner resets.
ProductRegion solve_nested(const CoalgebraModel& m, const ClosureGraph& cl,
                           const ProductRegion& scope,
                           const Deadline& deadline = {},
                           uint64_t* passes = nullptr);

// Model checks phi at a state. Eager mode solves over the full product;
// lazy mode explores dependencies breadth-first from the root pair and
// re-solves at exploration sizes 1, 2, 4, 8, ... and at exhaustion, stopping
// as soon as the root pair is decided either way.
LocalStats check_local(const CoalgebraModel& m, const std::string& state,
                       const Formula& phi, bool lazy,
                       const Deadline& deadline = {});

Rational exploration_quotient(const LocalStats& stats);

}  // namespace mucheck
