#include "benchgen.hpp"

#include <algorithm>
#include <cassert>

#include "errors.hpp"
#include "parser.hpp"

namespace mucheck {

std::string lift_name(Lift l) {
  switch (l) {
    case Lift::none: return "none";
    case Lift::monotone: return "monotone";
    case Lift::graded: return "graded";
    case Lift::probabilistic: return "probabilistic";
  }
  return "?";
}

Lift lift_from_name(const std::string& name) {
  if (name == "none") return Lift::none;
  if (name == "monotone") return Lift::monotone;
  if (name == "graded") return Lift::graded;
  if (name == "probabilistic") return Lift::probabilistic;
  throw ValidationError("unknown lift '" + name + "'");
}

namespace {

ParityGame gen_clique(uint64_t n) {
  if (n < 1) throw ValidationError("clique size must be >= 1");
  ParityGame g;
  for (uint64_t i = 0; i < n; ++i)
    g.add(i % 2 == 0 ? Owner::exists : Owner::forall, uint32_t(i),
          "n" + std::to_string(i));
  for (uint64_t i = 0; i < n; ++i)
    for (uint64_t j = 0; j < n; ++j)
      if (j != i) g.positions[i].moves.push_back(uint32_t(j));
  return g;
}

ParityGame gen_ladder(uint64_t n) {
  if (n < 1) throw ValidationError("ladder size must be >= 1");
  ParityGame g;
  uint64_t total = 2 * n;
  for (uint64_t i = 0; i < total; ++i)
    g.add(i % 2 == 0 ? Owner::exists : Owner::forall, uint32_t(i % 2),
          "n" + std::to_string(i));
  for (uint64_t i = 0; i < total; ++i) {
    g.positions[i].moves.push_back(uint32_t((i + 1) % total));
    g.positions[i].moves.push_back(uint32_t((i + 2) % total));
  }
  return g;
}

// A lattice of d levels with w two-cycle gadgets each: the universal node of
// a gadget carries odd priority 2i+1, its existential partner 2i+2; both
// lanes chain through the level and wrap into the next, closing a cycle at
// the end.
ParityGame gen_jurdzinski(uint64_t d, uint64_t w) {
  if (d < 1 || w < 1) throw ValidationError("jurdzinski sizes must be >= 1");
  ParityGame g;
  auto s_of = [&](uint64_t i, uint64_t j) { return uint32_t(2 * (i * w + j)); };
  auto c_of = [&](uint64_t i, uint64_t j) {
    return uint32_t(2 * (i * w + j) + 1);
  };
  for (uint64_t i = 0; i < d; ++i)
    for (uint64_t j = 0; j < w; ++j) {
      g.add(Owner::forall, uint32_t(2 * i + 1),
            "n" + std::to_string(s_of(i, j)));
      g.add(Owner::exists, uint32_t(2 * i + 2),
            "n" + std::to_string(c_of(i, j)));
    }
  for (uint64_t i = 0; i < d; ++i)
    for (uint64_t j = 0; j < w; ++j) {
      uint64_t ni = j + 1 < w ? i : (i + 1 < d ? i + 1 : 0);
      uint64_t nj = j + 1 < w ? j + 1 : 0;
      g.positions[s_of(i, j)].moves = {c_of(i, j), s_of(ni, nj)};
      g.positions[c_of(i, j)].moves = {s_of(i, j), c_of(ni, nj)};
    }
  return g;
}

ParityGame gen_hanoi(uint64_t n) {
  if (n < 1 || n > 13) throw ValidationError("hanoi size must be in 1..13");
  uint64_t total = 1;
  for (uint64_t i = 0; i < n; ++i) total *= 3;
  ParityGame g;
  uint64_t target = total - 1;  // every disk on peg 2
  for (uint64_t c = 0; c < total; ++c)
    g.add(Owner::exists, c == target ? 0 : 1, "n" + std::to_string(c));

  std::vector<uint32_t> peg(n);
  for (uint64_t c = 0; c < total; ++c) {
    uint64_t rest = c;
    for (uint64_t i = 0; i < n; ++i) {
      peg[i] = rest % 3;
      rest /= 3;
    }
    // Smallest disk on each peg is the movable one.
    int top[3] = {-1, -1, -1};
    for (uint64_t i = n; i-- > 0;) top[peg[i]] = int(i);
    std::vector<uint32_t> succ;
    uint64_t pow3 = 1;
    std::vector<uint64_t> powers(n);
    for (uint64_t i = 0; i < n; ++i) {
      powers[i] = pow3;
      pow3 *= 3;
    }
    for (int from = 0; from < 3; ++from) {
      if (top[from] < 0) continue;
      for (int to = 0; to < 3; ++to) {
        if (to == from) continue;
        if (top[to] >= 0 && top[to] < top[from]) continue;
        succ.push_back(
            uint32_t(c + (uint64_t(to) - peg[top[from]]) * powers[top[from]]));
      }
    }
    if (c == target) succ.push_back(uint32_t(target));
    std::sort(succ.begin(), succ.end());
    g.positions[c].moves = std::move(succ);
  }
  return g;
}

// Fair-simulation game between two deterministic Buechi automata over {a,b}:
// the spoiler's automaton cycles on 'a' and restarts on 'b', the duplicator's
// cycles on 'a' and stalls on 'b'; both accept at state 0. Spoiler positions
// get priority 1 when the spoiler just visited an accepting state, 2 when the
// duplicator did, 0 otherwise.
ParityGame gen_langincl(uint64_t n) {
  if (n < 1) throw ValidationError("langincl size must be >= 1");
  ParityGame g;
  auto p_of = [&](uint64_t i, uint64_t j) { return uint32_t(i * n + j); };
  auto q_of = [&](uint64_t i, uint64_t j, uint64_t x) {
    return uint32_t(n * n + (i * n + j) * 2 + x);
  };
  for (uint64_t i = 0; i < n; ++i)
    for (uint64_t j = 0; j < n; ++j) {
      uint32_t prio = j == 0 ? 2 : (i == 0 ? 1 : 0);
      g.add(Owner::forall, prio, "n" + std::to_string(p_of(i, j)));
    }
  for (uint64_t i = 0; i < n; ++i)
    for (uint64_t j = 0; j < n; ++j)
      for (uint64_t x = 0; x < 2; ++x)
        g.add(Owner::exists, 0, "n" + std::to_string(q_of(i, j, x)));
  for (uint64_t i = 0; i < n; ++i)
    for (uint64_t j = 0; j < n; ++j) {
      g.positions[p_of(i, j)].moves = {q_of((i + 1) % n, j, 0),
                                       q_of(0, j, 1)};
      for (uint64_t x = 0; x < 2; ++x)
        g.positions[q_of(i, j, x)].moves = {
            x == 0 ? p_of(i, (j + 1) % n) : p_of(i, j)};
    }
  return g;
}

}  // namespace

ParityGame gen_parity(const std::string& family, uint64_t size,
                      uint64_t size2) {
  if (family == "clique") return gen_clique(size);
  if (family == "ladder") return gen_ladder(size);
  if (family == "jurdzinski")
    return gen_jurdzinski(size, size2 ? size2 : size);
  if (family == "hanoi") return gen_hanoi(size);
  if (family == "langincl") return gen_langincl(size);
  throw ValidationError("unknown game family '" + family + "'");
}

CoalgebraModel lift_game(const ParityGame& g, Lift lift) {
  ParityGame base = g;
  for (auto& v : base.positions)
    if (v.moves.empty()) v.moves.push_back(uint32_t(&v - base.positions.data()));

  CoalgebraModel m;
  m.functor = lift == Lift::none         ? Functor::powerset
              : lift == Lift::monotone   ? Functor::monotone
              : lift == Lift::graded     ? Functor::multiset
                                         : Functor::distribution;
  for (uint32_t v = 0; v < base.size(); ++v) {
    m.states.push_back("v" + std::to_string(v));
    m.state_index.emplace(m.states.back(), v);
  }
  for (uint32_t v = 0; v < base.size(); ++v) {
    const auto& pos = base.positions[v];
    m.valuation["prio_" + std::to_string(pos.priority)].push_back(v);
    m.valuation[pos.owner == Owner::exists ? "owner_e" : "owner_a"].push_back(
        v);
  }
  for (auto& [atom, sts] : m.valuation) std::sort(sts.begin(), sts.end());

  auto distinct_succ = [&](uint32_t v) {
    std::vector<uint32_t> s = base.positions[v].moves;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  };

  switch (lift) {
    case Lift::none:
      for (uint32_t v = 0; v < base.size(); ++v)
        m.successors.push_back(distinct_succ(v));
      break;
    case Lift::graded:
      for (uint32_t v = 0; v < base.size(); ++v) {
        auto succ = distinct_succ(v);
        uint64_t weight = (10 + succ.size() - 1) / succ.size();
        std::vector<std::pair<uint32_t, uint64_t>> row;
        for (uint32_t d : succ) row.emplace_back(d, weight);
        m.weights.push_back(std::move(row));
      }
      break;
    case Lift::probabilistic:
      for (uint32_t v = 0; v < base.size(); ++v) {
        auto succ = distinct_succ(v);
        Rational p(BigInt(1), BigInt(succ.size()));
        std::vector<std::pair<uint32_t, Rational>> row;
        for (uint32_t d : succ) row.emplace_back(d, p);
        m.rows.push_back(std::move(row));
      }
      break;
    case Lift::monotone:
      // Outcome sets of two-step strategies of the position's owner: a
      // singleton per second step the owner controls, the whole successor
      // set where the opponent does; then inclusion-minimized.
      for (uint32_t v = 0; v < base.size(); ++v) {
        std::vector<std::vector<uint32_t>> nbhs;
        for (uint32_t u : distinct_succ(v)) {
          if (base.positions[u].owner == base.positions[v].owner) {
            for (uint32_t w : distinct_succ(u))
              nbhs.push_back({w});
          } else {
            nbhs.push_back(distinct_succ(u));
          }
        }
        std::sort(nbhs.begin(), nbhs.end());
        nbhs.erase(std::unique(nbhs.begin(), nbhs.end()), nbhs.end());
        std::vector<std::vector<uint32_t>> minimal;
        for (const auto& nb : nbhs) {
          bool dominated = false;
          for (const auto& other : nbhs)
            if (other != nb &&
                std::includes(nb.begin(), nb.end(), other.begin(),
                              other.end())) {
              dominated = true;
              break;
            }
          if (!dominated) minimal.push_back(nb);
        }
        m.neighborhoods.push_back(std::move(minimal));
      }
      break;
  }
  m.validate();
  return m;
}

ParityGame make_lazy(const ParityGame& g) {
  if (g.positions.empty()) throw ValidationError("cannot lazify an empty game");
  ParityGame out = g;
  uint32_t root = out.add(Owner::exists, 0, "n" + std::to_string(out.size()));
  uint32_t sink = out.add(Owner::exists, 0, "n" + std::to_string(out.size()));
  out.positions[root].moves = {g.entry, sink};
  out.positions[sink].moves = {sink};
  out.entry = root;
  return out;
}

Formula chi_formula(uint32_t k, Lift lift) {
  if (k % 2 == 0) ++k;
  std::string dia, box;
  switch (lift) {
    case Lift::none: dia = "<>", box = "[]"; break;
    case Lift::monotone: dia = "<m>", box = "[m]"; break;
    case Lift::graded: dia = "<g 5>", box = "[g 5]"; break;
    case Lift::probabilistic: dia = "<p 1/2>", box = "[p 1/2]"; break;
  }
  std::string text;
  for (uint32_t i = k + 1; i-- > 0;)
    text += std::string(i % 2 == 1 ? "mu" : "nu") + " X" + std::to_string(i) +
            ". ";
  for (uint32_t i = 0; i <= k; ++i) {
    if (i) text += " | ";
    std::string x = "X" + std::to_string(i);
    text += "(prio_" + std::to_string(i) + " & ((owner_e & " + dia + " " + x +
            ") | (owner_a & " + box + " " + x + ")))";
  }
  return parse_formula(text);
}

CoalgebraModel gen_modulo(uint32_t agents, uint32_t moves) {
  if (agents < 1 || moves < 1)
    throw ValidationError("modulo game needs agents >= 1 and moves >= 1");
  CoalgebraModel m;
  m.functor = Functor::game;
  for (uint32_t i = 0; i < 10; ++i) {
    m.states.push_back("p" + std::to_string(i));
    m.state_index.emplace(m.states.back(), i);
    m.valuation["p" + std::to_string(i)] = {i};
  }
  for (uint32_t a = 1; a <= agents; ++a)
    m.agents.push_back("a" + std::to_string(a));

  std::vector<std::string> names;
  for (uint32_t v = 1; v <= moves; ++v) names.push_back(std::to_string(v));
  std::sort(names.begin(), names.end());

  m.moves.assign(10, std::vector<std::vector<std::string>>(agents, names));
  m.delta.assign(10, {});
  size_t total = 1;
  for (uint32_t a = 0; a < agents; ++a) total *= moves;
  for (uint32_t j = 0; j < 10; ++j) {
    m.delta[j].resize(total);
    std::vector<uint32_t> mv(agents, 0);
    for (size_t ji = 0; ji < total; ++ji) {
      uint64_t sum = 0;
      for (uint32_t a = 0; a < agents; ++a)
        sum += std::stoull(names[mv[a]]);
      m.delta[j][m.joint_index(j, mv)] = uint32_t((j + sum) % 10);
      for (uint32_t a = agents; a-- > 0;) {
        if (++mv[a] < moves) break;
        mv[a] = 0;
      }
    }
  }
  m.validate();
  return m;
}

std::pair<Formula, Formula> modulo_formulas(
    const std::vector<std::string>& coalition) {
  Formula phi1;
  for (uint32_t i = 0; i < 10; ++i) {
    std::string x = "X" + std::to_string(i);
    Formula part = Formula::mu(
        x, Formula::disj(Formula::atom("p" + std::to_string(i)),
                         Formula::modal(ModalOp::coal_dia(coalition),
                                        Formula::var(x))));
    phi1 = i == 0 ? part : Formula::conj(phi1, part);
  }
  Formula phi2 = Formula::nu(
      "X",
      Formula::mu(
          "Y",
          Formula::conj(
              Formula::conj(
                  Formula::var("X"),
                  Formula::disj(Formula::atom("p0"),
                                Formula::modal(ModalOp::coal_dia(coalition),
                                               Formula::var("Y")))),
              Formula::disj(Formula::atom("p5"),
                            Formula::modal(ModalOp::coal_dia(coalition),
                                           Formula::var("Y"))))));
  return {phi1, phi2};
}

namespace {

struct CastleSpace {
  uint32_t n, h;
  uint32_t locals;  // 2 * (h + 1) per castle

  uint64_t states() const {
    uint64_t t = 1;
    for (uint32_t i = 0; i < n; ++i) t *= locals;
    return t;
  }
  // local value: ready * (h+1) + hp
  std::string id(const std::vector<uint32_t>& ready,
                 const std::vector<uint32_t>& hp) const {
    std::string s;
    for (uint32_t i = 0; i < n; ++i)
      s += (ready[i] ? "t" : "f") + std::to_string(hp[i]);
    return s;
  }
  void decode(uint64_t idx, std::vector<uint32_t>& ready,
              std::vector<uint32_t>& hp) const {
    for (uint32_t i = n; i-- > 0;) {
      uint32_t local = idx % locals;
      idx /= locals;
      ready[i] = local / (h + 1);
      hp[i] = local % (h + 1);
    }
  }
  uint64_t encode(const std::vector<uint32_t>& ready,
                  const std::vector<uint32_t>& hp) const {
    uint64_t idx = 0;
    for (uint32_t i = 0; i < n; ++i)
      idx = idx * locals + ready[i] * (h + 1) + hp[i];
    return idx;
  }
};

}  // namespace

CoalgebraModel gen_castle(uint32_t castles, uint32_t hp) {
  if (castles < 2 || hp < 1)
    throw ValidationError("castle game needs castles >= 2 and hp >= 1");
  CastleSpace sp{castles, hp, 2 * (hp + 1)};
  uint64_t total = sp.states();
  if (total > 2'000'000) throw ValidationError("castle state space too large");

  CoalgebraModel m;
  m.functor = Functor::game;
  for (uint32_t a = 1; a <= castles; ++a)
    m.agents.push_back("k" + std::to_string(a));

  std::vector<uint32_t> ready(castles), cur_hp(castles);
  for (uint64_t idx = 0; idx < total; ++idx) {
    sp.decode(idx, ready, cur_hp);
    m.states.push_back(sp.id(ready, cur_hp));
    m.state_index.emplace(m.states.back(), uint32_t(idx));
  }
  for (uint32_t a = 0; a < castles; ++a) {
    std::vector<uint32_t>& lost = m.valuation["lost_" + m.agents[a]];
    for (uint64_t idx = 0; idx < total; ++idx) {
      sp.decode(idx, ready, cur_hp);
      if (cur_hp[a] == 0) lost.push_back(uint32_t(idx));
    }
  }

  m.moves.resize(total);
  m.delta.resize(total);
  std::vector<uint32_t> nready(castles), nhp(castles);
  for (uint64_t idx = 0; idx < total; ++idx) {
    sp.decode(idx, ready, cur_hp);
    auto& per_agent = m.moves[idx];
    per_agent.resize(castles);
    for (uint32_t a = 0; a < castles; ++a) {
      std::vector<std::string>& mv = per_agent[a];
      if (cur_hp[a] == 0) {
        mv = {"dead"};
      } else if (ready[a]) {
        for (uint32_t b = 0; b < castles; ++b)
          if (b != a) mv.push_back("attack_" + m.agents[b]);
        mv.push_back("defend");
        std::sort(mv.begin(), mv.end());
      } else {
        mv = {"rest"};
      }
    }
    size_t joint = 1;
    for (uint32_t a = 0; a < castles; ++a) joint *= per_agent[a].size();
    m.delta[idx].resize(joint);
    std::vector<uint32_t> pick(castles, 0);
    for (size_t ji = 0; ji < joint; ++ji) {
      std::vector<int> attackers(castles, 0);
      for (uint32_t a = 0; a < castles; ++a) {
        const std::string& mv = per_agent[a][pick[a]];
        if (mv.rfind("attack_", 0) == 0) {
          const std::string target = mv.substr(7);
          for (uint32_t b = 0; b < castles; ++b)
            if (m.agents[b] == target) ++attackers[b];
        }
      }
      for (uint32_t a = 0; a < castles; ++a) {
        const std::string& mv = per_agent[a][pick[a]];
        bool blocks = mv == "defend" || mv == "rest";
        int damage = std::max(0, attackers[a] - (blocks ? 1 : 0));
        nhp[a] = uint32_t(std::max(0, int(cur_hp[a]) - damage));
        if (mv.rfind("attack_", 0) == 0)
          nready[a] = 0;
        else if (mv == "rest")
          nready[a] = 1;
        else
          nready[a] = ready[a];
      }
      m.delta[idx][ji] = uint32_t(sp.encode(nready, nhp));
      for (uint32_t a = castles; a-- > 0;) {
        if (++pick[a] < per_agent[a].size()) break;
        pick[a] = 0;
      }
    }
  }
  m.validate();
  return m;
}

std::string castle_initial_state(uint32_t castles, uint32_t hp) {
  std::string s;
  for (uint32_t i = 0; i < castles; ++i) s += "t" + std::to_string(hp);
  return s;
}

std::vector<Formula> castle_formulas(uint32_t castles) {
  std::vector<Formula> out;
  for (uint32_t a = 1; a <= castles; ++a) {
    std::string knight = "k" + std::to_string(a);
    out.push_back(Formula::nu(
        "X", Formula::conj(Formula::neg_atom("lost_" + knight),
                           Formula::modal(ModalOp::coal_dia({knight}),
                                          Formula::var("X")))));
  }
  for (uint32_t s = 1; s <= castles; ++s) {
    std::vector<std::string> coalition;
    for (uint32_t a = 1; a <= s; ++a)
      coalition.push_back("k" + std::to_string(a));
    Formula body;
    bool first = true;
    for (uint32_t a = 1; a <= castles; ++a) {
      std::string atom = "lost_k" + std::to_string(a);
      Formula lit =
          a <= s ? Formula::neg_atom(atom) : Formula::atom(atom);
      body = first ? lit : Formula::conj(body, lit);
      first = false;
    }
    out.push_back(Formula::mu(
        "X", Formula::disj(body, Formula::modal(ModalOp::coal_dia(coalition),
                                                Formula::var("X")))));
  }
  return out;
}

}  // namespace mucheck
