// Test-only oracles, independent of the solver paths they check.
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ast.hpp"
#include "bits.hpp"
#include "closure.hpp"
#include "model.hpp"
#include "paritygame.hpp"

namespace mucheck::oracle {

// ---- Fischer-Ladner closure by textbook expansion ----
// Smallest set containing phi and closed under: operands of conjunction and
// disjunction, modal arguments, and fixpoint unfoldings (substitution of the
// binder into its body). Elements are compared by printed form.

inline Formula substitute(const Formula& f, const std::string& x,
                          const Formula& repl) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::var: return f.name() == x ? repl : f;
    case K::conj:
      return Formula::conj(substitute(f.left(), x, repl),
                           substitute(f.right(), x, repl));
    case K::disj:
      return Formula::disj(substitute(f.left(), x, repl),
                           substitute(f.right(), x, repl));
    case K::modal:
      return Formula::modal(f.op(), substitute(f.arg(), x, repl));
    case K::mu:
    case K::nu: {
      if (f.name() == x) return f;  // shadowed (cannot happen when renamed)
      Formula body = substitute(f.arg(), x, repl);
      return f.kind() == K::mu ? Formula::mu(f.name(), body)
                               : Formula::nu(f.name(), body);
    }
    default: return f;
  }
}

inline std::set<std::string> fl_closure(const Formula& phi) {
  std::set<std::string> seen;
  std::vector<Formula> work{phi};
  while (!work.empty()) {
    Formula f = work.back();
    work.pop_back();
    if (!seen.insert(f.str()).second) continue;
    switch (f.kind()) {
      case Formula::Kind::conj:
      case Formula::Kind::disj:
        work.push_back(f.left());
        work.push_back(f.right());
        break;
      case Formula::Kind::modal: work.push_back(f.arg()); break;
      case Formula::Kind::mu:
      case Formula::Kind::nu:
        work.push_back(substitute(f.arg(), f.name(), f));
        break;
      default: break;
    }
  }
  return seen;
}

// ---- denotational semantics ----
// Recursive set semantics with explicit Kleene iteration per fixpoint
// subformula; shares only the one-step lifting with the implementation.

inline Bits denot(const Formula& f, const CoalgebraModel& m,
                  std::map<std::string, Bits>& env) {
  uint32_t n = m.n_states();
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::top: {
      Bits b(n);
      b.fill();
      return b;
    }
    case K::bot: return Bits(n);
    case K::atom: return m.atom_set(f.name());
    case K::neg_atom: return m.atom_set(f.name()).complement();
    case K::conj: return denot(f.left(), m, env) & denot(f.right(), m, env);
    case K::disj: return denot(f.left(), m, env) | denot(f.right(), m, env);
    case K::var: return env.at(f.name());
    case K::modal: {
      Bits arg = denot(f.arg(), m, env);
      Bits out(n);
      for (uint32_t c = 0; c < n; ++c)
        if (lift(f.op(), m, c, arg)) out.set(c);
      return out;
    }
    case K::mu:
    case K::nu: {
      Bits cur(n);
      if (f.kind() == K::nu) cur.fill();
      for (;;) {
        env[f.name()] = cur;
        Bits next = denot(f.arg(), m, env);
        if (next == cur) break;
        cur = next;
      }
      env.erase(f.name());
      return cur;
    }
  }
  return Bits(n);
}

inline Bits denot(const Formula& f, const CoalgebraModel& m) {
  std::map<std::string, Bits> env;
  return denot(f, m, env);
}

// ---- exhaustive parity game solving by strategy enumeration ----
// Sound for history-free determinacy; only usable on tiny games.

inline Bits enumerate_winners(const ParityGame& g) {
  uint32_t n = g.size();
  std::vector<uint32_t> echoice, achoice;
  std::vector<uint32_t> epos, apos;
  for (uint32_t v = 0; v < n; ++v) {
    if (g.positions[v].moves.empty()) continue;
    (g.positions[v].owner == Owner::exists ? epos : apos).push_back(v);
  }

  // winner of the unique play from v under fixed positional strategies
  auto play = [&](uint32_t v, const std::vector<int64_t>& next) -> Owner {
    std::vector<int> at(n, -1);
    std::vector<uint32_t> path;
    for (int step = 0;; ++step) {
      if (next[v] < 0)
        return g.positions[v].owner == Owner::exists ? Owner::forall
                                                     : Owner::exists;
      if (at[v] >= 0) {
        uint32_t top = 0;
        for (size_t i = size_t(at[v]); i < path.size(); ++i)
          top = std::max(top, g.positions[path[i]].priority);
        return top % 2 == 0 ? Owner::exists : Owner::forall;
      }
      at[v] = int(path.size());
      path.push_back(v);
      v = uint32_t(next[v]);
    }
  };

  auto strategies = [&](const std::vector<uint32_t>& owned) {
    std::vector<std::vector<int64_t>> all;
    std::vector<uint32_t> counter(owned.size(), 0);
    for (;;) {
      std::vector<int64_t> s(n, -1);
      for (size_t i = 0; i < owned.size(); ++i)
        s[owned[i]] = g.positions[owned[i]].moves[counter[i]];
      all.push_back(std::move(s));
      size_t i = 0;
      for (; i < owned.size(); ++i) {
        if (++counter[i] < g.positions[owned[i]].moves.size()) break;
        counter[i] = 0;
      }
      if (i == owned.size()) break;
      if (owned.empty()) break;
    }
    return all;
  };

  auto es = strategies(epos);
  auto as = strategies(apos);
  Bits win(n);
  for (uint32_t v = 0; v < n; ++v) {
    bool ewins = false;
    for (const auto& se : es) {
      bool all = true;
      for (const auto& sa : as) {
        std::vector<int64_t> next(n, -1);
        for (uint32_t u = 0; u < n; ++u)
          next[u] = g.positions[u].owner == Owner::exists ? se[u] : sa[u];
        if (play(v, next) != Owner::exists) {
          all = false;
          break;
        }
      }
      if (all) {
        ewins = true;
        break;
      }
    }
    if (ewins) win.set(v);
  }
  return win;
}

// ---- deterministic pseudo-random helpers ----
// Raw engine arithmetic only, so sequences are identical everywhere.

struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  uint64_t next() {
    // xorshift* variant
    state ^= state >> 12;
    state ^= state << 25;
    state ^= state >> 27;
    return state * 0x2545F4914F6CDD1Dull;
  }
  uint64_t below(uint64_t bound) { return bound ? next() % bound : 0; }
  bool flip() { return next() & 1; }
};

inline ParityGame random_game(Rng& rng, uint32_t max_positions,
                              uint32_t max_priority) {
  ParityGame g;
  uint32_t n = 1 + uint32_t(rng.below(max_positions));
  for (uint32_t v = 0; v < n; ++v)
    g.add(rng.flip() ? Owner::exists : Owner::forall,
          uint32_t(rng.below(max_priority + 1)), "n" + std::to_string(v));
  for (uint32_t v = 0; v < n; ++v) {
    uint32_t deg = 1 + uint32_t(rng.below(3));
    std::set<uint32_t> succ;
    while (succ.size() < deg) succ.insert(uint32_t(rng.below(n)));
    g.positions[v].moves.assign(succ.begin(), succ.end());
  }
  return g;
}

inline CoalgebraModel random_powerset_model(Rng& rng, uint32_t max_states) {
  CoalgebraModel m;
  m.functor = Functor::powerset;
  uint32_t n = 1 + uint32_t(rng.below(max_states));
  for (uint32_t s = 0; s < n; ++s) {
    m.states.push_back("s" + std::to_string(s));
    m.state_index.emplace(m.states.back(), s);
  }
  for (const char* atom : {"p", "q"}) {
    std::vector<uint32_t> held;
    for (uint32_t s = 0; s < n; ++s)
      if (rng.flip()) held.push_back(s);
    m.valuation[atom] = held;
  }
  for (uint32_t s = 0; s < n; ++s) {
    std::vector<uint32_t> succ;
    for (uint32_t d = 0; d < n; ++d)
      if (rng.below(100) < 40) succ.push_back(d);
    m.successors.push_back(std::move(succ));
  }
  m.validate();
  return m;
}

inline Formula random_formula_at(Rng& rng, uint32_t budget,
                                 std::vector<std::string>& bound,
                                 uint32_t& counter) {
  uint64_t pick = rng.below(budget <= 1 ? 5 : 10);
  switch (pick) {
    case 0: return Formula::top();
    case 1: return Formula::bot();
    case 2: return Formula::atom(rng.flip() ? "p" : "q");
    case 3: return Formula::neg_atom(rng.flip() ? "p" : "q");
    case 4:
      if (!bound.empty())
        return Formula::var(bound[rng.below(bound.size())]);
      return Formula::atom("p");
    case 5:
    case 6: {
      uint32_t half = budget / 2;
      Formula l = random_formula_at(rng, half, bound, counter);
      Formula r = random_formula_at(rng, budget - 1 - half, bound, counter);
      return pick == 5 ? Formula::conj(l, r) : Formula::disj(l, r);
    }
    case 7:
      return Formula::modal(rng.flip() ? ModalOp::diamond() : ModalOp::box(),
                            random_formula_at(rng, budget - 1, bound, counter));
    default: {
      std::string x = "Z" + std::to_string(counter++);
      bound.push_back(x);
      Formula body = random_formula_at(rng, budget - 1, bound, counter);
      bound.pop_back();
      return pick == 8 ? Formula::mu(x, body) : Formula::nu(x, body);
    }
  }
}

// Random closed NNF formula over atoms p and q with diamonds/boxes only,
// bounded syntactic size and alternation depth.
inline Formula random_formula(Rng& rng, uint32_t max_nodes, uint32_t max_ad) {
  for (;;) {
    std::vector<std::string> bound;
    uint32_t counter = 0;
    Formula f = random_formula_at(rng, max_nodes, bound, counter);
    if (f.size() <= max_nodes && alternation_depth(f) <= max_ad) return f;
  }
}

}  // namespace mucheck::oracle
