#include "ast.hpp"

#include <algorithm>
#include <cassert>

#include "errors.hpp"

namespace mucheck {

std::string functor_name(Functor f) {
  switch (f) {
    case Functor::powerset: return "powerset";
    case Functor::multiset: return "multiset";
    case Functor::distribution: return "distribution";
    case Functor::monotone: return "monotone";
    case Functor::game: return "game";
  }
  return "?";
}

Functor functor_from_name(const std::string& name) {
  if (name == "powerset") return Functor::powerset;
  if (name == "multiset") return Functor::multiset;
  if (name == "distribution") return Functor::distribution;
  if (name == "monotone") return Functor::monotone;
  if (name == "game") return Functor::game;
  throw ValidationError("unknown functor tag '" + name + "'");
}

ModalOp ModalOp::prob_dia(Rational p) {
  if (p < Rational(0) || p > Rational(1))
    throw ValidationError("probability threshold " + p.str() +
                          " outside [0,1]");
  ModalOp op{Kind::prob_dia};
  op.prob = p;
  return op;
}

ModalOp ModalOp::prob_box(Rational p) {
  ModalOp op = prob_dia(p);
  op.kind = Kind::prob_box;
  return op;
}

ModalOp ModalOp::coal_dia(std::vector<std::string> agents) {
  std::sort(agents.begin(), agents.end());
  agents.erase(std::unique(agents.begin(), agents.end()), agents.end());
  ModalOp op{Kind::coal_dia};
  op.agents = std::move(agents);
  return op;
}

ModalOp ModalOp::coal_box(std::vector<std::string> agents) {
  ModalOp op = coal_dia(std::move(agents));
  op.kind = Kind::coal_box;
  return op;
}

ModalOp ModalOp::dual() const {
  ModalOp d = *this;
  switch (kind) {
    case Kind::diamond: d.kind = Kind::box; break;
    case Kind::box: d.kind = Kind::diamond; break;
    case Kind::graded_dia: d.kind = Kind::graded_box; break;
    case Kind::graded_box: d.kind = Kind::graded_dia; break;
    case Kind::prob_dia: d.kind = Kind::prob_box; break;
    case Kind::prob_box: d.kind = Kind::prob_dia; break;
    case Kind::mon_dia: d.kind = Kind::mon_box; break;
    case Kind::mon_box: d.kind = Kind::mon_dia; break;
    case Kind::coal_dia: d.kind = Kind::coal_box; break;
    case Kind::coal_box: d.kind = Kind::coal_dia; break;
  }
  return d;
}

Functor ModalOp::functor_class() const {
  switch (kind) {
    case Kind::diamond:
    case Kind::box: return Functor::powerset;
    case Kind::graded_dia:
    case Kind::graded_box: return Functor::multiset;
    case Kind::prob_dia:
    case Kind::prob_box: return Functor::distribution;
    case Kind::mon_dia:
    case Kind::mon_box: return Functor::monotone;
    case Kind::coal_dia:
    case Kind::coal_box: return Functor::game;
  }
  return Functor::powerset;
}

bool ModalOp::is_existential() const {
  switch (kind) {
    case Kind::diamond:
    case Kind::graded_dia:
    case Kind::prob_dia:
    case Kind::mon_dia:
    case Kind::coal_dia: return true;
    default: return false;
  }
}

std::string ModalOp::str() const {
  auto coalition = [this] {
    std::string s;
    for (size_t i = 0; i < agents.size(); ++i) {
      if (i) s += ",";
      s += agents[i];
    }
    return s;
  };
  switch (kind) {
    case Kind::diamond: return "<>";
    case Kind::box: return "[]";
    case Kind::graded_dia: return "<g " + std::to_string(grade) + ">";
    case Kind::graded_box: return "[g " + std::to_string(grade) + "]";
    case Kind::prob_dia: return "<p " + prob.str() + ">";
    case Kind::prob_box: return "[p " + prob.str() + "]";
    case Kind::mon_dia: return "<m>";
    case Kind::mon_box: return "[m]";
    case Kind::coal_dia: return "<{" + coalition() + "}>";
    case Kind::coal_box: return "[{" + coalition() + "}]";
  }
  return "?";
}

bool ModalOp::operator==(const ModalOp& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::graded_dia:
    case Kind::graded_box: return grade == o.grade;
    case Kind::prob_dia:
    case Kind::prob_box: return prob == o.prob;
    case Kind::coal_dia:
    case Kind::coal_box: return agents == o.agents;
    default: return true;
  }
}

struct Formula::Node {
  Kind kind;
  std::string name;
  ModalOp op;
  std::vector<Formula> kids;
};

Formula Formula::top() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::top;
  return Formula(std::move(n));
}
Formula Formula::bot() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::bot;
  return Formula(std::move(n));
}
Formula Formula::atom(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::atom;
  n->name = std::move(name);
  return Formula(std::move(n));
}
Formula Formula::neg_atom(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::neg_atom;
  n->name = std::move(name);
  return Formula(std::move(n));
}
Formula Formula::conj(Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::conj;
  n->kids = {std::move(l), std::move(r)};
  return Formula(std::move(n));
}
Formula Formula::disj(Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::disj;
  n->kids = {std::move(l), std::move(r)};
  return Formula(std::move(n));
}
Formula Formula::modal(ModalOp op, Formula arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::modal;
  n->op = std::move(op);
  n->kids = {std::move(arg)};
  return Formula(std::move(n));
}
Formula Formula::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::var;
  n->name = std::move(name);
  return Formula(std::move(n));
}
Formula Formula::mu(std::string name, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::mu;
  n->name = std::move(name);
  n->kids = {std::move(body)};
  return Formula(std::move(n));
}
Formula Formula::nu(std::string name, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::nu;
  n->name = std::move(name);
  n->kids = {std::move(body)};
  return Formula(std::move(n));
}

Formula::Kind Formula::kind() const { return n_->kind; }
const std::string& Formula::name() const { return n_->name; }
const ModalOp& Formula::op() const { return n_->op; }
const Formula& Formula::left() const { return n_->kids[0]; }
const Formula& Formula::right() const { return n_->kids[1]; }
const Formula& Formula::arg() const { return n_->kids[0]; }

size_t Formula::size() const {
  size_t s = 1;
  for (const Formula& k : n_->kids) s += k.size();
  return s;
}

bool Formula::operator==(const Formula& o) const {
  if (n_ == o.n_) return true;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case Kind::top:
    case Kind::bot: return true;
    case Kind::atom:
    case Kind::neg_atom:
    case Kind::var: return name() == o.name();
    case Kind::conj:
    case Kind::disj: return left() == o.left() && right() == o.right();
    case Kind::modal: return op() == o.op() && arg() == o.arg();
    case Kind::mu:
    case Kind::nu: return name() == o.name() && arg() == o.arg();
  }
  return false;
}

namespace {

// Precedence levels for printing: 0 fixpoint, 1 disjunction, 2 conjunction,
// 3 unary (modal / negated atom). A child below the required level gets
// parenthesized; right operands of binary nodes require one level more so
// that reparsing restores the original left-associated shape.
void print(const Formula& f, int level, std::string& out) {
  auto wrap = [&](int mine, auto body) {
    bool parens = mine < level;
    if (parens) out += "(";
    body();
    if (parens) out += ")";
  };
  switch (f.kind()) {
    case Formula::Kind::top: out += "true"; break;
    case Formula::Kind::bot: out += "false"; break;
    case Formula::Kind::atom: out += f.name(); break;
    case Formula::Kind::var: out += f.name(); break;
    case Formula::Kind::neg_atom:
      wrap(3, [&] { out += "! " + f.name(); });
      break;
    case Formula::Kind::conj:
      wrap(2, [&] {
        print(f.left(), 2, out);
        out += " & ";
        print(f.right(), 3, out);
      });
      break;
    case Formula::Kind::disj:
      wrap(1, [&] {
        print(f.left(), 1, out);
        out += " | ";
        print(f.right(), 2, out);
      });
      break;
    case Formula::Kind::modal:
      wrap(3, [&] {
        out += f.op().str() + " ";
        print(f.arg(), 3, out);
      });
      break;
    case Formula::Kind::mu:
    case Formula::Kind::nu:
      wrap(0, [&] {
        out +=
            (f.kind() == Formula::Kind::mu ? "mu " : "nu ") + f.name() + ". ";
        print(f.arg(), 0, out);
      });
      break;
  }
}

void collect_free(const Formula& f, std::set<std::string>& bound,
                  std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::var:
      if (!bound.count(f.name())) out.insert(f.name());
      break;
    case Formula::Kind::conj:
    case Formula::Kind::disj:
      collect_free(f.left(), bound, out);
      collect_free(f.right(), bound, out);
      break;
    case Formula::Kind::modal: collect_free(f.arg(), bound, out); break;
    case Formula::Kind::mu:
    case Formula::Kind::nu: {
      bool fresh = bound.insert(f.name()).second;
      collect_free(f.arg(), bound, out);
      if (fresh) bound.erase(f.name());
      break;
    }
    default: break;
  }
}

void collect_idents(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::atom:
    case Formula::Kind::neg_atom:
    case Formula::Kind::var: out.insert(f.name()); break;
    case Formula::Kind::conj:
    case Formula::Kind::disj:
      collect_idents(f.left(), out);
      collect_idents(f.right(), out);
      break;
    case Formula::Kind::modal: collect_idents(f.arg(), out); break;
    case Formula::Kind::mu:
    case Formula::Kind::nu:
      out.insert(f.name());
      collect_idents(f.arg(), out);
      break;
    default: break;
  }
}

// NNF dualization. Bound variables are left in place: their polarity flips
// together with the binder, so mu X. phi dualizes to nu X. dual(phi).
Formula dualize(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::top: return Formula::bot();
    case K::bot: return Formula::top();
    case K::atom: return Formula::neg_atom(f.name());
    case K::neg_atom: return Formula::atom(f.name());
    case K::var: return f;
    case K::conj: return Formula::disj(dualize(f.left()), dualize(f.right()));
    case K::disj: return Formula::conj(dualize(f.left()), dualize(f.right()));
    case K::modal: return Formula::modal(f.op().dual(), dualize(f.arg()));
    case K::mu: return Formula::nu(f.name(), dualize(f.arg()));
    case K::nu: return Formula::mu(f.name(), dualize(f.arg()));
  }
  return f;
}

}  // namespace

std::string Formula::str() const {
  std::string out;
  print(*this, 0, out);
  return out;
}

std::set<std::string> Formula::free_vars() const {
  std::set<std::string> bound, out;
  collect_free(*this, bound, out);
  return out;
}

std::set<std::string> Formula::all_idents() const {
  std::set<std::string> out;
  collect_idents(*this, out);
  return out;
}

Formula Formula::negated() const {
  if (!closed())
    throw ValidationError(
        "negation applied to a formula with free fixpoint variables");
  return dualize(*this);
}

}  // namespace mucheck
