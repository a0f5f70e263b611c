#include "closure.hpp"

#include <cassert>
#include <map>
#include <set>

#include "errors.hpp"

namespace mucheck {

namespace {

struct Builder {
  ClosureGraph g;
  std::map<std::string, uint32_t> index;           // printed formula -> node
  std::map<std::string, uint32_t> binders;         // variable -> binder node

  uint32_t build(const Formula& f) {
    using K = Formula::Kind;
    if (f.kind() == K::var) {
      auto it = binders.find(f.name());
      assert(it != binders.end());
      return it->second;
    }
    std::string key = f.str();
    if (auto it = index.find(key); it != index.end()) return it->second;

    uint32_t idx = uint32_t(g.nodes.size());
    g.nodes.emplace_back();
    index.emplace(std::move(key), idx);
    g.nodes[idx].text = f.str();

    switch (f.kind()) {
      case K::top: g.nodes[idx].op = NodeOp::top; break;
      case K::bot: g.nodes[idx].op = NodeOp::bot; break;
      case K::atom:
        g.nodes[idx].op = NodeOp::atom;
        g.nodes[idx].name = f.name();
        break;
      case K::neg_atom:
        g.nodes[idx].op = NodeOp::neg_atom;
        g.nodes[idx].name = f.name();
        break;
      case K::conj:
      case K::disj: {
        g.nodes[idx].op = f.kind() == K::conj ? NodeOp::conj : NodeOp::disj;
        uint32_t l = build(f.left());
        uint32_t r = build(f.right());
        g.nodes[idx].child0 = l;
        g.nodes[idx].child1 = r;
        break;
      }
      case K::modal: {
        g.nodes[idx].op = NodeOp::modal;
        g.nodes[idx].modal = f.op();
        g.nodes[idx].child0 = build(f.arg());
        break;
      }
      case K::mu:
      case K::nu: {
        g.nodes[idx].op = NodeOp::fix;
        g.nodes[idx].is_mu = f.kind() == K::mu;
        g.nodes[idx].name = f.name();
        binders[f.name()] = idx;
        g.nodes[idx].child0 = build(f.arg());
        break;
      }
      case K::var: break;  // handled above
    }
    return idx;
  }
};

struct BinderInfo {
  bool is_mu = false;
  uint32_t priority = 0;
  unsigned level = 0;                      // alternation level
  std::set<std::string> free;              // free variables of the subtree
  std::vector<std::string> inner;          // binders anywhere inside the body
};

// Collects, per binder, its free variables and all binders nested inside.
void scan(const Formula& f, std::map<std::string, BinderInfo>& info,
          std::vector<std::string>& enclosing) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::var:
      // The occurrence is free in every enclosing binder nested strictly
      // inside its own binder.
      for (auto it = enclosing.rbegin(); it != enclosing.rend(); ++it) {
        if (*it == f.name()) break;
        info[*it].free.insert(f.name());
      }
      break;
    case K::conj:
    case K::disj:
      scan(f.left(), info, enclosing);
      scan(f.right(), info, enclosing);
      break;
    case K::modal: scan(f.arg(), info, enclosing); break;
    case K::mu:
    case K::nu: {
      BinderInfo& bi = info[f.name()];
      bi.is_mu = f.kind() == K::mu;
      for (const auto& b : enclosing) info[b].inner.push_back(f.name());
      enclosing.push_back(f.name());
      scan(f.arg(), info, enclosing);
      enclosing.pop_back();
      break;
    }
    default: break;
  }
}

std::map<std::string, BinderInfo> analyze(const Formula& phi) {
  std::map<std::string, BinderInfo> info;
  std::vector<std::string> enclosing;
  scan(phi, info, enclosing);

  // Bottom-up over nesting: a binder's inner binders are scanned after it,
  // so iterating binders by decreasing nesting order works; the `inner`
  // lists give the order implicitly. Process by repeated passes until
  // stable (binder count is tiny).
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [name, bi] : info) {
      uint32_t need = 0;
      unsigned lvl = 1;
      for (const auto& in : bi.inner) {
        const BinderInfo& ib = info[in];
        if (!ib.free.count(name)) continue;  // independent of this binder
        need = std::max(need, ib.priority);
        lvl = std::max(lvl, ib.level + (ib.is_mu != bi.is_mu ? 1 : 0));
      }
      uint32_t p = std::max<uint32_t>(need, 1);
      if (bi.is_mu) {
        if (p % 2 == 0) ++p;
      } else {
        if (p % 2 == 1) ++p;
      }
      if (p != bi.priority || lvl != bi.level) {
        bi.priority = p;
        bi.level = lvl;
        changed = true;
      }
    }
  }
  return info;
}

}  // namespace

ClosureGraph closure_raw(const Formula& phi) {
  if (!phi.closed())
    throw ValidationError("closure requires a closed formula");
  Builder b;
  b.g.root = b.build(phi);
  return std::move(b.g);
}

void assign_priorities(ClosureGraph& cl, const Formula& phi) {
  auto info = analyze(phi);
  cl.max_priority = 0;
  cl.ad = 0;
  for (auto& n : cl.nodes) {
    if (n.op == NodeOp::fix) {
      n.priority = info.at(n.name).priority;
      cl.max_priority = std::max(cl.max_priority, n.priority);
    } else {
      n.priority = 0;
    }
  }
  for (const auto& [name, bi] : info) cl.ad = std::max(cl.ad, bi.level);
}

ClosureGraph closure(const Formula& phi) {
  ClosureGraph g = closure_raw(phi);
  assign_priorities(g, phi);
  return g;
}

unsigned alternation_depth(const Formula& phi) {
  if (!phi.closed())
    throw ValidationError("alternation depth requires a closed formula");
  unsigned ad = 0;
  for (const auto& [name, bi] : analyze(phi)) ad = std::max(ad, bi.level);
  return ad;
}

ClosureGraph dual_closure(const Formula& phi) {
  ClosureGraph d = closure(phi.negated());
  assert(d.size() == closure_raw(phi).size());
  return d;
}

}  // namespace mucheck
