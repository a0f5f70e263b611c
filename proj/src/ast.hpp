#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "rational.hpp"

namespace mucheck {

enum class Functor { powerset, multiset, distribution, monotone, game };

std::string functor_name(Functor f);
Functor functor_from_name(const std::string& name);

// A modality together with its parameter (grade, probability threshold, or
// coalition). Every operator has a dual with dual(dual(op)) == op.
struct ModalOp {
  enum class Kind {
    diamond,
    box,
    graded_dia,
    graded_box,
    prob_dia,
    prob_box,
    mon_dia,
    mon_box,
    coal_dia,
    coal_box,
  };

  Kind kind = Kind::diamond;
  unsigned long long grade = 0;       // graded_dia / graded_box
  Rational prob;                      // prob_dia / prob_box, in [0,1]
  std::vector<std::string> agents;    // coal_dia / coal_box, sorted

  static ModalOp diamond() { return {Kind::diamond}; }
  static ModalOp box() { return {Kind::box}; }
  static ModalOp graded_dia(unsigned long long n) {
    return {Kind::graded_dia, n};
  }
  static ModalOp graded_box(unsigned long long n) {
    return {Kind::graded_box, n};
  }
  static ModalOp prob_dia(Rational p);
  static ModalOp prob_box(Rational p);
  static ModalOp mon_dia() { return {Kind::mon_dia}; }
  static ModalOp mon_box() { return {Kind::mon_box}; }
  static ModalOp coal_dia(std::vector<std::string> agents);
  static ModalOp coal_box(std::vector<std::string> agents);

  ModalOp dual() const;
  Functor functor_class() const;
  bool is_existential() const;  // diamond-like half of the dual pair
  std::string str() const;
  bool operator==(const ModalOp& o) const;
};

// Immutable formula tree in negation normal form. Values are cheap to copy
// (shared subtrees).
class Formula {
 public:
  enum class Kind { top, bot, atom, neg_atom, conj, disj, modal, var, mu, nu };

  Formula() : Formula(top()) {}

  static Formula top();
  static Formula bot();
  static Formula atom(std::string name);
  static Formula neg_atom(std::string name);
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula modal(ModalOp op, Formula arg);
  static Formula var(std::string name);
  static Formula mu(std::string name, Formula body);
  static Formula nu(std::string name, Formula body);

  Kind kind() const;
  const std::string& name() const;  // atom / neg_atom / var / mu / nu
  const ModalOp& op() const;        // modal
  const Formula& left() const;      // conj / disj
  const Formula& right() const;     // conj / disj
  const Formula& arg() const;       // modal argument or fixpoint body

  bool is_fixpoint() const { return kind() == Kind::mu || kind() == Kind::nu; }

  // Syntactic size: one per AST node (variables included).
  size_t size() const;
  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }

  std::string str() const;

  std::set<std::string> free_vars() const;
  bool closed() const { return free_vars().empty(); }
  // Every identifier appearing anywhere (atoms, variables, binders).
  std::set<std::string> all_idents() const;

  // Dualizes connectives, constants, fixpoints, atoms and modalities.
  // Precondition: closed formula.
  Formula negated() const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

}  // namespace mucheck
