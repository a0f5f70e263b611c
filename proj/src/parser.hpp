#pragma once

#include <string_view>

#include "ast.hpp"

namespace mucheck {

// Parses the surface syntax:
//
//   formula  := "mu" IDENT "." formula | "nu" IDENT "." formula | disj
//   disj     := conj ("|" conj)*
//   conj     := unary ("&" unary)*
//   unary    := "!" unary | modal unary | atomexpr
//   modal    := "<>" | "[]" | "<g" NAT ">" | "[g" NAT "]" | "<p" RAT ">"
//             | "[p" RAT "]" | "<m>" | "[m]"
//             | "<{" IDENT ("," IDENT)* "}>" | "[{" IDENT ("," IDENT)* "}]"
//   atomexpr := "true" | "false" | IDENT | "(" formula ")"
//   RAT      := NAT "/" NAT | NAT
//
// Modal operators and "!" bind tightest, then "&", then "|"; fixpoint scope
// extends maximally to the right. The result is in negation normal form
// ("!" is pushed to atoms by dualizing everything underneath) and bound
// variables are renamed apart.
Formula parse_formula(std::string_view text);

}  // namespace mucheck
