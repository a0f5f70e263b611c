#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ast.hpp"

namespace mucheck {

enum class NodeOp : uint8_t {
  top,
  bot,
  atom,
  neg_atom,
  conj,
  disj,
  modal,
  fix,
};

struct ClosureNode {
  NodeOp op = NodeOp::top;
  bool is_mu = false;        // fix only
  std::string name;          // atom / neg_atom / binder variable
  ModalOp modal;             // modal only
  uint32_t child0 = 0;       // fix: unfolding, modal: argument, conj/disj: left
  uint32_t child1 = 0;       // conj/disj: right
  uint32_t priority = 0;     // even for nu, odd for mu, 0 otherwise
  std::string text;          // printed subformula
};

// Graph form of the Fischer-Ladner closure: one node per element, with
// variable occurrences resolved back to their binding fixpoint node.
struct ClosureGraph {
  std::vector<ClosureNode> nodes;
  uint32_t root = 0;
  unsigned ad = 0;
  uint32_t max_priority = 0;

  size_t size() const { return nodes.size(); }
};

// Builds the closure of a closed formula, including priorities.
ClosureGraph closure(const Formula& phi);

// Builds the closure without priorities; assign_priorities completes it.
ClosureGraph closure_raw(const Formula& phi);

// Assigns to each fixpoint node the least priority of the correct parity
// (even for nu, odd for mu, both >= 1) that dominates the priority of every
// fixpoint node inside its body depending on it; non-fixpoint nodes get 0.
void assign_priorities(ClosureGraph& cl, const Formula& phi);

// Number of dependent mu/nu alternations; 0 for fixpoint-free formulas.
unsigned alternation_depth(const Formula& phi);

// Closure of negated(phi) with node indices aligned one-to-one with
// closure(phi): node i of the result is the dual of node i of the input.
ClosureGraph dual_closure(const Formula& phi);

}  // namespace mucheck
