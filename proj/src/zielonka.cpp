#include "zielonka.hpp"

#include <deque>

namespace mucheck {

namespace {

struct Solver {
  // Totalized copy of the input: deadlocks get a move to a losing sink so
  // every play is infinite; sinks are stripped from the results.
  ParityGame g;
  uint32_t n_orig;
  const Deadline& deadline;
  std::vector<std::vector<uint32_t>> preds;
  std::vector<int64_t> strat_e, strat_a;
  std::vector<int64_t> cnt;

  explicit Solver(const ParityGame& in, const Deadline& dl)
      : g(in), n_orig(in.size()), deadline(dl) {
    int64_t sink_e = -1, sink_a = -1;
    for (uint32_t v = 0; v < n_orig; ++v) {
      if (!g.positions[v].moves.empty()) continue;
      if (g.positions[v].owner == Owner::exists) {
        if (sink_e < 0) {
          sink_e = g.add(Owner::exists, 1, "!sink_e");
          g.positions[sink_e].moves.push_back(uint32_t(sink_e));
        }
        g.positions[v].moves.push_back(uint32_t(sink_e));
      } else {
        if (sink_a < 0) {
          sink_a = g.add(Owner::forall, 0, "!sink_a");
          g.positions[sink_a].moves.push_back(uint32_t(sink_a));
        }
        g.positions[v].moves.push_back(uint32_t(sink_a));
      }
    }
    preds.resize(g.size());
    for (uint32_t u = 0; u < g.size(); ++u)
      for (uint32_t v : g.positions[u].moves) preds[v].push_back(u);
    strat_e.assign(g.size(), -1);
    strat_a.assign(g.size(), -1);
    cnt.assign(g.size(), 0);
  }

  std::vector<int64_t>& strat(Owner o) {
    return o == Owner::exists ? strat_e : strat_a;
  }

  // sigma-attractor of target within S, breadth-first with lowest position
  // index first; records sigma's attracting move on first discovery.
  Bits attr(Owner sigma, const Bits& target, const Bits& S) {
    deadline.check();
    Bits A = target;
    A &= S;
    S.for_each_set([&](size_t u) {
      cnt[u] = 0;
      for (uint32_t v : g.positions[u].moves)
        if (S.test(v)) ++cnt[u];
    });
    std::deque<uint32_t> queue;
    A.for_each_set([&](size_t v) { queue.push_back(uint32_t(v)); });
    auto& st = strat(sigma);
    while (!queue.empty()) {
      uint32_t v = queue.front();
      queue.pop_front();
      for (uint32_t u : preds[v]) {
        if (!S.test(u)) continue;
        if (g.positions[u].owner == sigma) {
          if (!A.test(u)) {
            A.set(u);
            st[u] = v;
            queue.push_back(u);
          }
        } else {
          if (--cnt[u] == 0 && !A.test(u)) {
            A.set(u);
            queue.push_back(u);
          }
        }
      }
    }
    return A;
  }

  // Returns (win_e, win_a) within S. The second recursive call of the
  // classic formulation runs as a loop so recursion depth is bounded by the
  // number of distinct priorities.
  std::pair<Bits, Bits> solve(Bits S) {
    Bits acc_e(g.size()), acc_a(g.size());
    for (;;) {
      deadline.check();
      if (S.none()) return {acc_e, acc_a};

      uint32_t p = 0;
      S.for_each_set(
          [&](size_t v) { p = std::max(p, g.positions[v].priority); });
      Owner sigma = p % 2 == 0 ? Owner::exists : Owner::forall;

      Bits T(g.size());
      S.for_each_set([&](size_t v) {
        if (g.positions[v].priority == p) T.set(v);
      });

      Bits A = attr(sigma, T, S);
      Bits rest = S;
      rest.subtract(A);
      auto [we, wa] = solve(rest);
      Bits& wopp = sigma == Owner::exists ? wa : we;

      if (wopp.none()) {
        // sigma wins everywhere in S; top-priority positions may play any
        // move that stays inside S.
        auto& st = strat(sigma);
        T.for_each_set([&](size_t v) {
          if (g.positions[v].owner != sigma) return;
          for (uint32_t t : g.positions[v].moves)
            if (S.test(t)) {
              st[v] = t;
              break;
            }
        });
        (sigma == Owner::exists ? acc_e : acc_a) |= S;
        return {acc_e, acc_a};
      }

      Bits B = attr(opponent(sigma), wopp, S);
      (sigma == Owner::exists ? acc_a : acc_e) |= B;
      S.subtract(B);
    }
  }
};

}  // namespace

GameSolution solve_zielonka(const ParityGame& g, const Deadline& deadline) {
  g.validate();
  Solver solver(g, deadline);
  Bits all(solver.g.size());
  all.fill();
  auto [we, wa] = solver.solve(std::move(all));

  GameSolution out;
  out.win_e = Bits(g.size());
  out.win_a = Bits(g.size());
  out.strat_e.assign(g.size(), -1);
  out.strat_a.assign(g.size(), -1);
  for (uint32_t v = 0; v < g.size(); ++v) {
    if (we.test(v)) out.win_e.set(v);
    if (wa.test(v)) out.win_a.set(v);
    const auto& pos = g.positions[v];
    if (pos.owner == Owner::exists && we.test(v) && !pos.moves.empty())
      out.strat_e[v] = solver.strat_e[v];
    if (pos.owner == Owner::forall && wa.test(v) && !pos.moves.empty())
      out.strat_a[v] = solver.strat_a[v];
  }
  return out;
}

}  // namespace mucheck
