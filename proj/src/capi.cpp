#include "mucheck/mucheck.h"

#include <cstring>

#include "benchgen.hpp"
#include "closure.hpp"
#include "errors.hpp"
#include "local.hpp"
#include "mcgame.hpp"
#include "model.hpp"
#include "parser.hpp"
#include "paritygame.hpp"
#include "zielonka.hpp"

using namespace mucheck;

struct mc_model {
  CoalgebraModel m;
};
struct mc_formula {
  Formula f;
};
struct mc_game {
  ParityGame g;
};

namespace {

thread_local std::string g_last_error;

char* owned(const std::string& s) {
  char* out = static_cast<char*>(malloc(s.size() + 1));
  if (out) memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
mc_status guard(F&& body) {
  try {
    body();
    return MC_OK;
  } catch (const ParseError& e) {
    g_last_error = e.what();
    return MC_ERR_PARSE;
  } catch (const FunctorMismatchError& e) {
    g_last_error = e.what();
    return MC_ERR_MISMATCH;
  } catch (const TimeoutError& e) {
    g_last_error = e.what();
    return MC_ERR_TIMEOUT;
  } catch (const ValidationError& e) {
    g_last_error = e.what();
    return MC_ERR_INVALID;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return MC_ERR_INTERNAL;
  }
}

template <typename F>
char* guard_str(F&& body) {
  char* out = nullptr;
  if (guard([&] { out = owned(body()); }) != MC_OK) return nullptr;
  return out;
}

Deadline deadline_of(double seconds) {
  return seconds > 0 ? Deadline::after(seconds) : Deadline();
}

}  // namespace

extern "C" {

const char* mc_last_error(void) { return g_last_error.c_str(); }

void mc_string_free(char* s) { free(s); }

mc_status mc_model_parse(const char* text, mc_model** out) {
  return guard([&] { *out = new mc_model{parse_model(text)}; });
}

char* mc_model_serialize(const mc_model* m) {
  return guard_str([&] { return serialize_model(m->m); });
}

void mc_model_free(mc_model* m) { delete m; }

int64_t mc_model_state_count(const mc_model* m) { return m->m.n_states(); }

char* mc_model_state_name(const mc_model* m, int64_t index) {
  if (index < 0 || index >= int64_t(m->m.n_states())) {
    g_last_error = "state index out of range";
    return nullptr;
  }
  return owned(m->m.states[size_t(index)]);
}

char* mc_model_functor(const mc_model* m) {
  return owned(functor_name(m->m.functor));
}

mc_status mc_formula_parse(const char* text, mc_formula** out) {
  return guard([&] { *out = new mc_formula{parse_formula(text)}; });
}

char* mc_formula_print(const mc_formula* f) {
  return guard_str([&] { return f->f.str(); });
}

mc_status mc_formula_negate(const mc_formula* f, mc_formula** out) {
  return guard([&] { *out = new mc_formula{f->f.negated()}; });
}

void mc_formula_free(mc_formula* f) { delete f; }

int64_t mc_formula_closure_size(const mc_formula* f) {
  int64_t n = -1;
  guard([&] { n = int64_t(closure(f->f).size()); });
  return n;
}

int64_t mc_formula_alternation_depth(const mc_formula* f) {
  int64_t n = -1;
  guard([&] { n = int64_t(alternation_depth(f->f)); });
  return n;
}

mc_status mc_check(const mc_model* m, const mc_formula* f, const char* state,
                   mc_engine engine, double timeout_seconds,
                   mc_check_result* out) {
  return guard([&] {
    Deadline dl = deadline_of(timeout_seconds);
    mc_check_result r{};
    r.game_positions = -1;
    if (engine == MC_ENGINE_GAME) {
      GameCheckResult gr = check_game(m->m, state, f->f, dl);
      r.verdict = gr.holds ? 1 : 0;
      r.explored = -1;
      r.total = -1;
      r.quotient = -1.0;
      r.game_positions = int64_t(gr.game_positions);
    } else {
      LocalStats st =
          check_local(m->m, state, f->f, engine == MC_ENGINE_LAZY, dl);
      r.verdict = st.holds ? 1 : 0;
      r.explored = int64_t(st.explored);
      r.total = int64_t(st.total);
      r.quotient = exploration_quotient(st).to_double();
    }
    *out = r;
  });
}

mc_status mc_game_import(const char* text, mc_game** out) {
  return guard([&] { *out = new mc_game{import_pgsolver(text)}; });
}

char* mc_game_export(const mc_game* g) {
  return guard_str([&] { return export_pgsolver(g->g); });
}

void mc_game_free(mc_game* g) { delete g; }

int64_t mc_game_size(const mc_game* g) { return g->g.size(); }

int64_t mc_game_entry(const mc_game* g) { return g->g.entry; }

int64_t mc_game_max_priority(const mc_game* g) { return g->g.max_priority(); }

mc_status mc_game_of_check(const mc_model* m, const mc_formula* f,
                           const char* state, mc_game** out) {
  return guard([&] {
    ClosureGraph cl = closure(f->f);
    McGame mc = build_mc_game(m->m, cl, state);
    *out = new mc_game{std::move(mc.game)};
  });
}

mc_status mc_game_winner(const mc_game* g, int64_t position, int* exists_wins) {
  return guard([&] {
    if (position < 0 || position >= int64_t(g->g.size()))
      throw ValidationError("position index out of range");
    GameSolution sol = solve_zielonka(g->g);
    *exists_wins = sol.win_e.test(size_t(position)) ? 1 : 0;
  });
}

mc_status mc_gen_parity(const char* family, int64_t size, int64_t size2,
                        mc_game** out) {
  return guard([&] {
    if (size < 1) throw ValidationError("size must be >= 1");
    *out = new mc_game{
        gen_parity(family, uint64_t(size), size2 > 0 ? uint64_t(size2) : 0)};
  });
}

mc_status mc_game_make_lazy(const mc_game* g, mc_game** out) {
  return guard([&] { *out = new mc_game{make_lazy(g->g)}; });
}

mc_status mc_game_lift(const mc_game* g, const char* lift, mc_model** out) {
  return guard(
      [&] { *out = new mc_model{lift_game(g->g, lift_from_name(lift))}; });
}

char* mc_chi_formula(int64_t max_priority, const char* lift) {
  return guard_str([&] {
    if (max_priority < 0) throw ValidationError("negative priority");
    return chi_formula(uint32_t(max_priority), lift_from_name(lift)).str();
  });
}

mc_status mc_gen_modulo(int64_t agents, int64_t moves, mc_model** out) {
  return guard([&] {
    if (agents < 1 || moves < 1)
      throw ValidationError("agents and moves must be >= 1");
    *out = new mc_model{gen_modulo(uint32_t(agents), uint32_t(moves))};
  });
}

char* mc_modulo_formula(int which, int64_t agents, int64_t coalition_size) {
  return guard_str([&] {
    if (coalition_size < 0 || coalition_size > agents)
      throw ValidationError("coalition size out of range");
    std::vector<std::string> coalition;
    for (int64_t a = 1; a <= coalition_size; ++a)
      coalition.push_back("a" + std::to_string(a));
    auto [phi1, phi2] = modulo_formulas(coalition);
    if (which == 1) return phi1.str();
    if (which == 2) return phi2.str();
    throw ValidationError("formula selector must be 1 or 2");
  });
}

mc_status mc_gen_castle(int64_t castles, int64_t hp, mc_model** out) {
  return guard([&] {
    if (castles < 2 || hp < 1)
      throw ValidationError("castles must be >= 2 and hp >= 1");
    *out = new mc_model{gen_castle(uint32_t(castles), uint32_t(hp))};
  });
}

char* mc_castle_initial_state(int64_t castles, int64_t hp) {
  return guard_str(
      [&] { return castle_initial_state(uint32_t(castles), uint32_t(hp)); });
}

char* mc_castle_formula(int64_t castles, int kind, int64_t index) {
  return guard_str([&] {
    auto formulas = castle_formulas(uint32_t(castles));
    if (index < 1 || index > castles)
      throw ValidationError("formula index out of range");
    size_t at = kind == 0 ? size_t(index - 1) : size_t(castles + index - 1);
    if (kind != 0 && kind != 1)
      throw ValidationError("formula kind must be 0 or 1");
    return formulas[at].str();
  });
}

}  // extern "C"
