#include "local.hpp"

#include <algorithm>
#include <deque>

namespace mucheck {

Bits eval_node(const ClosureGraph& cl, uint32_t node, const ProductRegion& X,
               const ProductRegion& scope, const CoalgebraModel& m) {
  const ClosureNode& n = cl.nodes[node];
  const Bits& here = scope.column(node);
  Bits out(here.size());
  switch (n.op) {
    case NodeOp::top: out = here; break;
    case NodeOp::bot: break;
    case NodeOp::atom:
      out = m.atom_set(n.name);
      out &= here;
      break;
    case NodeOp::neg_atom:
      out = m.atom_set(n.name).complement();
      out &= here;
      break;
    case NodeOp::conj:
      out = X.column(n.child0);
      out &= X.column(n.child1);
      out &= here;
      break;
    case NodeOp::disj:
      out = X.column(n.child0);
      out |= X.column(n.child1);
      out &= here;
      break;
    case NodeOp::fix:
      out = X.column(n.child0);
      out &= here;
      break;
    case NodeOp::modal: {
      const Bits& D = X.column(n.child0);
      here.for_each_set([&](size_t c) {
        if (lift(n.modal, m, uint32_t(c), D)) out.set(c);
      });
      break;
    }
  }
  return out;
}

namespace {

struct NestedSolver {
  const CoalgebraModel& m;
  const ClosureGraph& cl;
  const ProductRegion& scope;
  const Deadline& deadline;
  uint32_t k;  // outermost variable index, odd
  std::vector<ProductRegion> x;
  uint64_t passes = 0;

  // One application of the one-step function: every node evaluated against
  // the variable selected by its own priority.
  ProductRegion apply() {
    ++passes;
    deadline.check();
    ProductRegion out(scope.n_states(), scope.n_nodes());
    for (uint32_t j = 0; j < cl.nodes.size(); ++j)
      out.column(j) = eval_node(cl, j, x[cl.nodes[j].priority], scope, m);
    return out;
  }

  // Fixpoint of variable `level` with all outer variables held fixed; inner
  // variables are reset and recomputed on every update.
  ProductRegion solve(uint32_t level) {
    bool is_mu = level % 2 == 1;
    x[level] =
        is_mu ? ProductRegion(scope.n_states(), scope.n_nodes()) : scope;
    for (;;) {
      ProductRegion next = level == 0 ? apply() : solve(level - 1);
      if (next == x[level]) return next;
      x[level] = std::move(next);
    }
  }

  ProductRegion run() {
    k = cl.max_priority;
    if (k % 2 == 0) ++k;  // pad with an unused priority so mu is outermost
    x.assign(k + 1, ProductRegion(scope.n_states(), scope.n_nodes()));
    return solve(k);
  }
};

// Dependencies of a pair: the pairs its one-step evaluation can read.
// Deterministic order: state index, then closure node index.
void dependencies(const ClosureGraph& cl, const CoalgebraModel& m, uint32_t s,
                  uint32_t j, std::vector<std::pair<uint32_t, uint32_t>>& out) {
  out.clear();
  const ClosureNode& n = cl.nodes[j];
  switch (n.op) {
    case NodeOp::conj:
    case NodeOp::disj: {
      uint32_t a = std::min(n.child0, n.child1);
      uint32_t b = std::max(n.child0, n.child1);
      out.emplace_back(s, a);
      if (b != a) out.emplace_back(s, b);
      break;
    }
    case NodeOp::fix: out.emplace_back(s, n.child0); break;
    case NodeOp::modal:
      for (uint32_t d : modal_base(m, s)) out.emplace_back(d, n.child0);
      break;
    default: break;
  }
}

}  // namespace

ProductRegion solve_nested(const CoalgebraModel& m, const ClosureGraph& cl,
                           const ProductRegion& scope, const Deadline& deadline,
                           uint64_t* passes) {
  NestedSolver solver{m, cl, scope, deadline};
  ProductRegion r = solver.run();
  if (passes) *passes = solver.passes;
  return r;
}

LocalStats check_local(const CoalgebraModel& m, const std::string& state,
                       const Formula& phi, bool lazy, const Deadline& deadline) {
  uint32_t root_state = m.index_of(state);
  ClosureGraph pos = closure(phi);
  ClosureGraph neg = dual_closure(phi);
  uint32_t n = uint32_t(pos.size());

  LocalStats stats;
  stats.total = uint64_t(m.n_states()) * n;

  if (!lazy) {
    ProductRegion scope = ProductRegion::full(m.n_states(), n);
    uint64_t p1 = 0, p2 = 0;
    ProductRegion we = solve_nested(m, pos, scope, deadline, &p1);
    ProductRegion wa = solve_nested(m, neg, scope, deadline, &p2);
    stats.solver_passes = p1 + p2;
    bool holds = we.test(root_state, pos.root);
    bool fails = wa.test(root_state, neg.root);
    if (holds == fails)
      throw std::logic_error("determinacy violated at the root pair");
    stats.holds = holds;
    stats.explored = stats.total;
    return stats;
  }

  // Lazy mode: breadth-first dependency exploration from the root pair with
  // re-solves over the explored region at exponentially growing checkpoints.
  // Both partial regions are sound lower bounds, so the first hit decides.
  ProductRegion explored(m.n_states(), n);
  ProductRegion seen(m.n_states(), n);
  std::deque<std::pair<uint32_t, uint32_t>> frontier;
  std::vector<std::pair<uint32_t, uint32_t>> deps;
  frontier.emplace_back(root_state, pos.root);
  seen.set(root_state, pos.root);
  uint64_t expanded = 0;
  uint64_t checkpoint = 1;

  for (;;) {
    deadline.check();
    bool exhausted = frontier.empty();
    if (!exhausted) {
      auto [s, j] = frontier.front();
      frontier.pop_front();
      explored.set(s, j);
      ++expanded;
      dependencies(pos, m, s, j, deps);
      for (auto [ds, dj] : deps) {
        if (!seen.test(ds, dj)) {
          seen.set(ds, dj);
          frontier.emplace_back(ds, dj);
        }
      }
    }
    if (expanded >= checkpoint || exhausted) {
      while (checkpoint <= expanded) checkpoint *= 2;
      uint64_t p1 = 0, p2 = 0;
      ProductRegion we = solve_nested(m, pos, explored, deadline, &p1);
      stats.solver_passes += p1;
      if (we.test(root_state, pos.root)) {
        stats.holds = true;
        stats.explored = expanded;
        return stats;
      }
      ProductRegion wa = solve_nested(m, neg, explored, deadline, &p2);
      stats.solver_passes += p2;
      if (wa.test(root_state, neg.root)) {
        stats.holds = false;
        stats.explored = expanded;
        return stats;
      }
      if (exhausted)
        throw std::logic_error(
            "exploration exhausted without deciding the root pair");
    }
  }
}

Rational exploration_quotient(const LocalStats& stats) {
  if (stats.total == 0) return Rational(0);
  return Rational(BigInt(stats.explored), BigInt(stats.total));
}

}  // namespace mucheck
