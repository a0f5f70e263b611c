#include "mcgame.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace mucheck {

namespace {

struct GameBuilder {
  const CoalgebraModel& m;
  const ClosureGraph& cl;
  const Deadline& deadline;

  ParityGame g;
  std::map<std::pair<uint32_t, uint32_t>, uint32_t> pair_pos;
  std::deque<std::pair<uint32_t, uint32_t>> todo;
  uint64_t pairs = 0;

  // g.positions may reallocate while computing a target, so targets are
  // always materialized before touching the source position.
  void add_move(uint32_t from, uint32_t to) {
    g.positions[from].moves.push_back(to);
  }

  uint32_t pair_index(uint32_t s, uint32_t j) {
    auto key = std::make_pair(s, j);
    if (auto it = pair_pos.find(key); it != pair_pos.end()) return it->second;
    const ClosureNode& n = cl.nodes[j];
    Owner owner = Owner::exists;
    switch (n.op) {
      case NodeOp::top: owner = Owner::forall; break;
      case NodeOp::bot: owner = Owner::exists; break;
      case NodeOp::atom:
        owner = m.has_atom_at(n.name, s) ? Owner::forall : Owner::exists;
        break;
      case NodeOp::neg_atom:
        owner = m.has_atom_at(n.name, s) ? Owner::exists : Owner::forall;
        break;
      case NodeOp::conj: owner = Owner::forall; break;
      case NodeOp::disj: owner = Owner::exists; break;
      case NodeOp::fix: owner = Owner::exists; break;
      case NodeOp::modal:
        owner = n.modal.is_existential() ? Owner::exists : Owner::forall;
        break;
    }
    uint32_t idx = g.add(owner, n.priority, m.states[s] + "|" + n.text);
    pair_pos.emplace(key, idx);
    todo.emplace_back(s, j);
    ++pairs;
    return idx;
  }

  // Successors of a modal position in layer order (lexicographic state ids)
  // with their weights; used by the counting subgames.
  struct Layered {
    std::vector<uint32_t> states;
    std::vector<uint64_t> weights;
  };

  Layered graded_layers(uint32_t s) {
    std::vector<std::pair<std::string, std::pair<uint32_t, uint64_t>>> tmp;
    for (const auto& [d, w] : m.weights[s])
      tmp.push_back({m.states[d], {d, w}});
    std::sort(tmp.begin(), tmp.end());
    Layered l;
    for (auto& [name, dw] : tmp) {
      l.states.push_back(dw.first);
      l.weights.push_back(dw.second);
    }
    return l;
  }

  // Scales the distribution row and the threshold p by the lcm of all
  // denominators involved; exact by construction.
  Layered prob_layers(uint32_t s, const Rational& p, uint64_t& bound) {
    BigInt L = p.den();
    for (const auto& [d, pr] : m.rows[s]) L = lcm(L, pr.den());
    std::vector<std::pair<std::string, std::pair<uint32_t, BigInt>>> tmp;
    for (const auto& [d, pr] : m.rows[s])
      tmp.push_back({m.states[d], {d, pr.num() * (L / pr.den())}});
    std::sort(tmp.begin(), tmp.end());
    BigInt t = p.num() * (L / p.den());
    if (t > BigInt(10'000'000))
      throw ValidationError(
          "probabilistic subgame threshold too large after scaling (" +
          t.str() + ")");
    bound = t.convert_to<uint64_t>();
    Layered l;
    for (auto& [name, dw] : tmp) {
      l.states.push_back(dw.second.first);
      l.weights.push_back(dw.second.second.convert_to<uint64_t>());
    }
    return l;
  }

  // Layered counting subgame entered at `entry` (the modal position itself,
  // acting as layer 1 with counter 0). The includer picks successors layer
  // by layer, the responder challenges each pick or accepts it into the
  // counter, which saturates at bound+1. Existential flavour: the includer
  // is the existential player collecting claimed psi-successors; universal
  // flavour: roles swapped, collecting claimed psi-failures.
  void counting_subgame(uint32_t entry, bool existential, uint64_t bound,
                        const Layered& l, uint32_t arg_node,
                        const std::string& tag) {
    size_t mcount = l.states.size();
    if (mcount == 0) return;  // entry stays a deadlock for the includer
    if (bound > 10'000'000)
      throw ValidationError("grade too large for game construction (" +
                            std::to_string(bound) + ")");
    if ((bound + 2) * (mcount + 1) > 50'000'000)
      throw ValidationError("counting subgame too large (bound " +
                            std::to_string(bound) + ")");
    Owner incl = existential ? Owner::exists : Owner::forall;
    Owner resp = opponent(incl);

    uint64_t sat = bound + 1;
    auto key = [&](uint64_t layer, uint64_t cnt) {
      return layer * (sat + 1) + cnt;
    };
    std::map<uint64_t, uint32_t> epos, apos;
    std::deque<std::pair<uint64_t, uint64_t>> work;

    // Leaving the final layer with a low counter deadlocks the includer;
    // a saturated counter deadlocks the responder.
    uint32_t exit_low = UINT32_MAX, exit_sat = UINT32_MAX;

    auto e_of = [&](uint64_t layer, uint64_t cnt) -> uint32_t {
      if (cnt == sat) {
        if (exit_sat == UINT32_MAX) exit_sat = g.add(resp, 0, tag + "|hit");
        return exit_sat;
      }
      if (layer == mcount + 1) {
        if (exit_low == UINT32_MAX) exit_low = g.add(incl, 0, tag + "|miss");
        return exit_low;
      }
      auto [it, fresh] = epos.emplace(key(layer, cnt), 0);
      if (fresh) {
        it->second = (layer == 1 && cnt == 0)
                         ? entry
                         : g.add(incl, 0,
                                 tag + "|l" + std::to_string(layer) + ",c" +
                                     std::to_string(cnt));
        work.emplace_back(layer, cnt);
      }
      return it->second;
    };

    e_of(1, 0);
    while (!work.empty()) {
      auto [layer, cnt] = work.front();
      work.pop_front();
      uint32_t self = epos.at(key(layer, cnt));
      uint64_t cnt2 = std::min(cnt + l.weights[layer - 1], sat);

      uint32_t a;
      auto [it, fresh] = apos.emplace(key(layer, cnt2), 0);
      if (fresh) {
        it->second = g.add(resp, 0,
                           tag + "|a" + std::to_string(layer) + ",c" +
                               std::to_string(cnt2));
        a = it->second;
        uint32_t challenge = pair_index(l.states[layer - 1], arg_node);
        add_move(a, challenge);
        uint32_t accept = e_of(layer + 1, cnt2);
        add_move(a, accept);
      } else {
        a = it->second;
      }
      add_move(self, a);
      uint32_t skip = e_of(layer + 1, cnt);
      add_move(self, skip);
    }
  }

  void expand_modal(uint32_t s, uint32_t j, uint32_t self) {
    const ClosureNode& n = cl.nodes[j];
    uint32_t arg = n.child0;
    const std::string tag = g.positions[self].label;
    using K = ModalOp::Kind;
    if (n.modal.functor_class() != m.functor)
      throw FunctorMismatchError("modality " + n.modal.str() +
                                 " does not match functor " +
                                 functor_name(m.functor));
    switch (n.modal.kind) {
      case K::diamond:
      case K::box:
        for (uint32_t d : m.successors[s]) {
          uint32_t t = pair_index(d, arg);
          add_move(self, t);
        }
        break;
      case K::mon_dia:
      case K::mon_box: {
        Owner picker = g.positions[self].owner;
        for (size_t ni = 0; ni < m.neighborhoods[s].size(); ++ni) {
          uint32_t np =
              g.add(opponent(picker), 0, tag + "|nb" + std::to_string(ni));
          for (uint32_t d : m.neighborhoods[s][ni]) {
            uint32_t t = pair_index(d, arg);
            add_move(np, t);
          }
          add_move(self, np);
        }
        break;
      }
      case K::graded_dia:
      case K::graded_box:
        counting_subgame(self, n.modal.kind == K::graded_dia, n.modal.grade,
                         graded_layers(s), arg, tag);
        break;
      case K::prob_dia:
      case K::prob_box: {
        uint64_t bound = 0;
        Layered l = prob_layers(s, n.modal.prob, bound);
        counting_subgame(self, n.modal.kind == K::prob_dia, bound, l, arg,
                         tag);
        break;
      }
      case K::coal_dia:
      case K::coal_box: {
        Owner picker = g.positions[self].owner;
        std::vector<size_t> cidx, oidx;
        for (const auto& a : n.modal.agents) {
          auto it = std::find(m.agents.begin(), m.agents.end(), a);
          if (it == m.agents.end())
            throw FunctorMismatchError("coalition agent '" + a +
                                       "' is not an agent of the model");
          cidx.push_back(size_t(it - m.agents.begin()));
        }
        for (size_t a = 0; a < m.agents.size(); ++a)
          if (std::find(cidx.begin(), cidx.end(), a) == cidx.end())
            oidx.push_back(a);

        std::vector<uint32_t> mv(m.agents.size(), 0);
        auto enumerate = [&](const std::vector<size_t>& idx, auto&& rec,
                             size_t k, auto&& leaf) -> void {
          if (k == idx.size()) {
            leaf();
            return;
          }
          for (uint32_t i = 0; i < m.moves[s][idx[k]].size(); ++i) {
            mv[idx[k]] = i;
            rec(idx, rec, k + 1, leaf);
          }
        };
        size_t ci = 0;
        enumerate(cidx, enumerate, 0, [&] {
          std::vector<uint32_t> outcomes;
          enumerate(oidx, enumerate, 0, [&] {
            uint32_t t = m.delta[s][m.joint_index(s, mv)];
            uint32_t tp = pair_index(t, arg);
            if (std::find(outcomes.begin(), outcomes.end(), tp) ==
                outcomes.end())
              outcomes.push_back(tp);
          });
          uint32_t rp =
              g.add(opponent(picker), 0, tag + "|jm" + std::to_string(ci++));
          for (uint32_t t : outcomes) add_move(rp, t);
          add_move(self, rp);
        });
        break;
      }
    }
  }

  McGame run(uint32_t root_state) {
    uint32_t root = pair_index(root_state, cl.root);
    while (!todo.empty()) {
      deadline.check();
      auto [s, j] = todo.front();
      todo.pop_front();
      uint32_t self = pair_pos.at({s, j});
      const ClosureNode& n = cl.nodes[j];
      switch (n.op) {
        case NodeOp::top:
        case NodeOp::bot:
        case NodeOp::atom:
        case NodeOp::neg_atom: break;  // deadlock decided by the valuation
        case NodeOp::conj:
        case NodeOp::disj: {
          uint32_t a = pair_index(s, n.child0);
          add_move(self, a);
          uint32_t b = pair_index(s, n.child1);
          add_move(self, b);
          break;
        }
        case NodeOp::fix: {
          uint32_t t = pair_index(s, n.child0);
          add_move(self, t);
          break;
        }
        case NodeOp::modal: expand_modal(s, j, self); break;
      }
    }
    McGame out;
    out.game = std::move(g);
    out.game.entry = root;
    out.pairs = pairs;
    return out;
  }
};

}  // namespace

McGame build_mc_game(const CoalgebraModel& m, const ClosureGraph& cl,
                     const std::string& state, const Deadline& deadline) {
  GameBuilder b{m, cl, deadline};
  return b.run(m.index_of(state));
}

GameCheckResult check_game(const CoalgebraModel& m, const std::string& state,
                           const Formula& phi, const Deadline& deadline) {
  ClosureGraph cl = closure(phi);
  McGame mc = build_mc_game(m, cl, state, deadline);
  GameSolution sol = solve_zielonka(mc.game, deadline);
  GameCheckResult r;
  r.holds = sol.win_e.test(mc.game.entry);
  r.game_positions = mc.game.size();
  return r;
}

}  // namespace mucheck
