#include "model.hpp"

#include <algorithm>
#include <json.hpp>
#include <set>

#include "errors.hpp"

namespace mucheck {

using nlohmann::json;

uint32_t CoalgebraModel::index_of(const std::string& state) const {
  auto it = state_index.find(state);
  if (it == state_index.end())
    throw ValidationError("unknown state '" + state + "'");
  return it->second;
}

bool CoalgebraModel::has_atom_at(const std::string& atom,
                                 uint32_t state) const {
  auto it = valuation.find(atom);
  if (it == valuation.end()) return false;
  return std::binary_search(it->second.begin(), it->second.end(), state);
}

Bits CoalgebraModel::atom_set(const std::string& atom) const {
  Bits b(n_states());
  auto it = valuation.find(atom);
  if (it != valuation.end())
    for (uint32_t s : it->second) b.set(s);
  return b;
}

size_t CoalgebraModel::joint_index(uint32_t s,
                                   const std::vector<uint32_t>& mv) const {
  size_t idx = 0;
  for (size_t a = 0; a < agents.size(); ++a)
    idx = idx * moves[s][a].size() + mv[a];
  return idx;
}

void CoalgebraModel::validate() const {
  std::set<std::string> seen;
  for (const auto& s : states)
    if (!seen.insert(s).second)
      throw ValidationError("duplicate state '" + s + "'");
  for (const auto& [atom, sts] : valuation)
    for (uint32_t s : sts)
      if (s >= n_states())
        throw ValidationError("valuation of '" + atom +
                              "' references a missing state");
  auto need_rows = [&](size_t have, const char* what) {
    if (have != states.size())
      throw ValidationError(std::string("transitions must cover every state (") +
                            what + ")");
  };
  switch (functor) {
    case Functor::powerset: need_rows(successors.size(), "powerset"); break;
    case Functor::multiset:
      need_rows(weights.size(), "multiset");
      for (const auto& row : weights)
        for (const auto& [d, w] : row)
          if (w < 1) throw ValidationError("multiplicity must be >= 1");
      break;
    case Functor::distribution: {
      need_rows(rows.size(), "distribution");
      for (size_t s = 0; s < rows.size(); ++s) {
        Rational sum(0);
        for (const auto& [d, p] : rows[s]) {
          if (p <= Rational(0))
            throw ValidationError("distribution entries must be positive");
          sum = sum + p;
        }
        if (sum != Rational(1))
          throw ValidationError("distribution row of '" + states[s] +
                                "' sums to " + sum.str() + ", not 1");
      }
      break;
    }
    case Functor::monotone: need_rows(neighborhoods.size(), "monotone"); break;
    case Functor::game: {
      if (agents.empty()) throw ValidationError("game model needs agents");
      need_rows(moves.size(), "moves");
      need_rows(delta.size(), "delta");
      for (uint32_t s = 0; s < n_states(); ++s) {
        size_t total = 1;
        for (size_t a = 0; a < agents.size(); ++a) {
          if (moves[s][a].empty())
            throw ValidationError("agent '" + agents[a] +
                                  "' has no moves at state '" + states[s] +
                                  "'");
          total *= moves[s][a].size();
        }
        if (delta[s].size() != total)
          throw ValidationError("missing joint-move transition at state '" +
                                states[s] + "'");
        for (uint32_t t : delta[s])
          if (t >= n_states())
            throw ValidationError("dangling transition target at state '" +
                                  states[s] + "'");
      }
      break;
    }
  }
}

namespace {

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw ValidationError(std::string("missing key '") + key + "'");
  return *it;
}

std::vector<uint32_t> state_list(const CoalgebraModel& m, const json& arr,
                                 const char* what) {
  if (!arr.is_array())
    throw ValidationError(std::string(what) + " must be an array of states");
  std::vector<uint32_t> out;
  for (const auto& v : arr) {
    if (!v.is_string())
      throw ValidationError(std::string(what) + " must contain state names");
    auto it = m.state_index.find(v.get<std::string>());
    if (it == m.state_index.end())
      throw ValidationError(std::string(what) + " references missing state '" +
                            v.get<std::string>() + "'");
    out.push_back(it->second);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

CoalgebraModel parse_model(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed model document: ") +
                          e.what());
  }
  if (!j.is_object()) throw ValidationError("model document must be an object");

  static const std::set<std::string> known = {"functor", "states", "valuation",
                                              "agents", "transitions"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!known.count(it.key()))
      throw ValidationError("unknown key '" + it.key() + "'");

  CoalgebraModel m;
  m.functor = functor_from_name(field(j, "functor").get<std::string>());

  for (const auto& s : field(j, "states")) {
    if (!s.is_string()) throw ValidationError("states must be strings");
    if (!m.state_index.emplace(s.get<std::string>(), m.states.size()).second)
      throw ValidationError("duplicate state '" + s.get<std::string>() + "'");
    m.states.push_back(s.get<std::string>());
  }

  if (auto it = j.find("valuation"); it != j.end())
    for (auto v = it->begin(); v != it->end(); ++v)
      m.valuation[v.key()] = state_list(m, v.value(), "valuation");

  if (m.functor == Functor::game) {
    for (const auto& a : field(j, "agents"))
      m.agents.push_back(a.get<std::string>());
    if (m.agents.empty()) throw ValidationError("game model needs agents");
  } else if (j.count("agents")) {
    throw ValidationError("'agents' is only valid for the game functor");
  }

  const json& tr = field(j, "transitions");
  auto row_of = [&](const std::string& state) -> const json& {
    auto it = tr.find(state);
    if (it == tr.end())
      throw ValidationError("no transitions for state '" + state + "'");
    return *it;
  };

  switch (m.functor) {
    case Functor::powerset:
      for (const auto& s : m.states)
        m.successors.push_back(state_list(m, row_of(s), "successors"));
      break;
    case Functor::multiset:
      for (const auto& s : m.states) {
        std::vector<std::pair<uint32_t, uint64_t>> row;
        for (auto e = row_of(s).begin(); e != row_of(s).end(); ++e) {
          if (!e.value().is_number_unsigned() || e.value().get<uint64_t>() < 1)
            throw ValidationError("multiplicity at '" + s +
                                  "' must be a positive integer");
          row.emplace_back(m.index_of(e.key()), e.value().get<uint64_t>());
        }
        std::sort(row.begin(), row.end());
        m.weights.push_back(std::move(row));
      }
      break;
    case Functor::distribution:
      for (const auto& s : m.states) {
        std::vector<std::pair<uint32_t, Rational>> row;
        for (auto e = row_of(s).begin(); e != row_of(s).end(); ++e) {
          if (!e.value().is_string())
            throw ValidationError("probability at '" + s +
                                  "' must be a rational string");
          row.emplace_back(m.index_of(e.key()),
                           Rational::parse(e.value().get<std::string>()));
        }
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        m.rows.push_back(std::move(row));
      }
      break;
    case Functor::monotone:
      for (const auto& s : m.states) {
        const json& fam = row_of(s);
        if (!fam.is_array())
          throw ValidationError("monotone row of '" + s +
                                "' must be an array of neighborhoods");
        std::vector<std::vector<uint32_t>> nbhs;
        for (const auto& nb : fam)
          nbhs.push_back(state_list(m, nb, "neighborhood"));
        std::sort(nbhs.begin(), nbhs.end());
        nbhs.erase(std::unique(nbhs.begin(), nbhs.end()), nbhs.end());
        m.neighborhoods.push_back(std::move(nbhs));
      }
      break;
    case Functor::game: {
      const json& mv = field(tr, "moves");
      for (const auto& s : m.states) {
        auto it = mv.find(s);
        if (it == mv.end())
          throw ValidationError("no moves for state '" + s + "'");
        std::vector<std::vector<std::string>> per_agent;
        for (const auto& a : m.agents) {
          auto ma = it->find(a);
          if (ma == it->end())
            throw ValidationError("no moves for agent '" + a + "' at state '" +
                                  s + "'");
          std::vector<std::string> names;
          for (const auto& n : *ma) names.push_back(n.get<std::string>());
          std::sort(names.begin(), names.end());
          names.erase(std::unique(names.begin(), names.end()), names.end());
          if (names.empty())
            throw ValidationError("agent '" + a + "' has no moves at state '" +
                                  s + "'");
          per_agent.push_back(std::move(names));
        }
        m.moves.push_back(std::move(per_agent));
      }
      m.delta.resize(m.states.size());
      for (uint32_t s = 0; s < m.n_states(); ++s) {
        size_t total = 1;
        for (const auto& ms : m.moves[s]) total *= ms.size();
        m.delta[s].assign(total, UINT32_MAX);
      }
      for (const auto& rec : field(tr, "delta")) {
        uint32_t s = m.index_of(field(rec, "state").get<std::string>());
        const json& mvj = field(rec, "move");
        std::vector<uint32_t> mvidx(m.agents.size());
        for (size_t a = 0; a < m.agents.size(); ++a) {
          auto it = mvj.find(m.agents[a]);
          if (it == mvj.end())
            throw ValidationError("delta record misses agent '" + m.agents[a] +
                                  "'");
          const auto& names = m.moves[s][a];
          auto pos = std::find(names.begin(), names.end(),
                               it->get<std::string>());
          if (pos == names.end())
            throw ValidationError("unknown move '" + it->get<std::string>() +
                                  "' of agent '" + m.agents[a] +
                                  "' at state '" + m.states[s] + "'");
          mvidx[a] = uint32_t(pos - names.begin());
        }
        size_t ji = m.joint_index(s, mvidx);
        if (m.delta[s][ji] != UINT32_MAX)
          throw ValidationError("duplicate delta record at state '" +
                                m.states[s] + "'");
        m.delta[s][ji] = m.index_of(field(rec, "target").get<std::string>());
      }
      for (uint32_t s = 0; s < m.n_states(); ++s)
        for (uint32_t t : m.delta[s])
          if (t == UINT32_MAX)
            throw ValidationError("missing joint-move transition at state '" +
                                  m.states[s] + "'");
      break;
    }
  }
  m.validate();
  return m;
}

std::string serialize_model(const CoalgebraModel& m) {
  json j;
  j["functor"] = functor_name(m.functor);
  j["states"] = m.states;
  json val = json::object();
  for (const auto& [atom, sts] : m.valuation) {
    json arr = json::array();
    for (uint32_t s : sts) arr.push_back(m.states[s]);
    val[atom] = arr;
  }
  j["valuation"] = val;

  json tr = json::object();
  switch (m.functor) {
    case Functor::powerset:
      for (uint32_t s = 0; s < m.n_states(); ++s) {
        json arr = json::array();
        for (uint32_t d : m.successors[s]) arr.push_back(m.states[d]);
        tr[m.states[s]] = arr;
      }
      break;
    case Functor::multiset:
      for (uint32_t s = 0; s < m.n_states(); ++s) {
        json row = json::object();
        for (const auto& [d, w] : m.weights[s]) row[m.states[d]] = w;
        tr[m.states[s]] = row;
      }
      break;
    case Functor::distribution:
      for (uint32_t s = 0; s < m.n_states(); ++s) {
        json row = json::object();
        for (const auto& [d, p] : m.rows[s]) row[m.states[d]] = p.str();
        tr[m.states[s]] = row;
      }
      break;
    case Functor::monotone:
      for (uint32_t s = 0; s < m.n_states(); ++s) {
        json fam = json::array();
        for (const auto& nb : m.neighborhoods[s]) {
          json arr = json::array();
          for (uint32_t d : nb) arr.push_back(m.states[d]);
          fam.push_back(arr);
        }
        tr[m.states[s]] = fam;
      }
      break;
    case Functor::game: {
      j["agents"] = m.agents;
      json mv = json::object();
      for (uint32_t s = 0; s < m.n_states(); ++s) {
        json per = json::object();
        for (size_t a = 0; a < m.agents.size(); ++a)
          per[m.agents[a]] = m.moves[s][a];
        mv[m.states[s]] = per;
      }
      json del = json::array();
      for (uint32_t s = 0; s < m.n_states(); ++s) {
        std::vector<uint32_t> mvidx(m.agents.size(), 0);
        for (size_t ji = 0; ji < m.delta[s].size(); ++ji) {
          json rec;
          rec["state"] = m.states[s];
          json mj = json::object();
          for (size_t a = 0; a < m.agents.size(); ++a)
            mj[m.agents[a]] = m.moves[s][a][mvidx[a]];
          rec["move"] = mj;
          rec["target"] = m.states[m.delta[s][ji]];
          del.push_back(rec);
          for (size_t a = m.agents.size(); a-- > 0;) {
            if (++mvidx[a] < m.moves[s][a].size()) break;
            mvidx[a] = 0;
          }
        }
      }
      tr["moves"] = mv;
      tr["delta"] = del;
      break;
    }
  }
  j["transitions"] = tr;
  return j.dump(2) + "\n";
}

bool lift(const ModalOp& op, const CoalgebraModel& m, uint32_t state,
          const Bits& D) {
  if (op.functor_class() != m.functor)
    throw FunctorMismatchError("modality " + op.str() +
                               " does not match functor " +
                               functor_name(m.functor));
  using K = ModalOp::Kind;
  switch (op.kind) {
    case K::diamond:
      for (uint32_t d : m.successors[state])
        if (D.test(d)) return true;
      return false;
    case K::box:
      for (uint32_t d : m.successors[state])
        if (!D.test(d)) return false;
      return true;
    case K::graded_dia: {
      BigInt sum = 0;
      for (const auto& [d, w] : m.weights[state])
        if (D.test(d)) sum += w;
      return sum > op.grade;
    }
    case K::graded_box: {
      BigInt sum = 0;
      for (const auto& [d, w] : m.weights[state])
        if (!D.test(d)) sum += w;
      return sum <= op.grade;
    }
    case K::prob_dia: {
      Rational mass(0);
      for (const auto& [d, p] : m.rows[state])
        if (D.test(d)) mass = mass + p;
      return mass > op.prob;
    }
    case K::prob_box: {
      Rational mass(0);
      for (const auto& [d, p] : m.rows[state])
        if (D.test(d)) mass = mass + p;
      return mass >= Rational(1) - op.prob;
    }
    case K::mon_dia:
      for (const auto& nb : m.neighborhoods[state]) {
        bool inside = true;
        for (uint32_t d : nb)
          if (!D.test(d)) {
            inside = false;
            break;
          }
        if (inside) return true;
      }
      return false;
    case K::mon_box:
      for (const auto& nb : m.neighborhoods[state]) {
        bool meets = false;
        for (uint32_t d : nb)
          if (D.test(d)) {
            meets = true;
            break;
          }
        if (!meets) return false;
      }
      return true;
    case K::coal_dia:
    case K::coal_box: {
      // Split agents into the coalition and the rest, then quantify
      // exists-forall (coal_dia) or forall-exists (coal_box).
      std::vector<size_t> cidx, oidx;
      for (const auto& a : op.agents) {
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
      auto enumerate = [&](const std::vector<size_t>& idx, auto&& self,
                           size_t k, auto&& leaf) -> bool {
        if (k == idx.size()) return leaf();
        for (uint32_t i = 0; i < m.moves[state][idx[k]].size(); ++i) {
          mv[idx[k]] = i;
          if (self(idx, self, k + 1, leaf)) return true;
        }
        return false;
      };
      bool dia = op.kind == K::coal_dia;
      auto others_all_in_D = [&] {
        // true iff no completion escapes D
        return !enumerate(oidx, enumerate, 0, [&] {
          return !D.test(m.delta[state][m.joint_index(state, mv)]);
        });
      };
      auto others_some_in_D = [&] {
        return enumerate(oidx, enumerate, 0, [&] {
          return D.test(m.delta[state][m.joint_index(state, mv)]);
        });
      };
      if (dia) {
        return enumerate(cidx, enumerate, 0, others_all_in_D);
      }
      // coal_box: for all coalition moves, some completion reaches D
      return !enumerate(cidx, enumerate, 0, [&] {
        return !others_some_in_D();
      });
    }
  }
  return false;
}

std::vector<uint32_t> modal_base(const CoalgebraModel& m, uint32_t state) {
  std::vector<uint32_t> out;
  switch (m.functor) {
    case Functor::powerset: out = m.successors[state]; break;
    case Functor::multiset:
      for (const auto& [d, w] : m.weights[state]) out.push_back(d);
      break;
    case Functor::distribution:
      for (const auto& [d, p] : m.rows[state]) out.push_back(d);
      break;
    case Functor::monotone:
      for (const auto& nb : m.neighborhoods[state])
        out.insert(out.end(), nb.begin(), nb.end());
      break;
    case Functor::game:
      out.insert(out.end(), m.delta[state].begin(), m.delta[state].end());
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace mucheck
