#pragma once

#include <string>
#include <vector>

#include "hop/expr.hpp"

namespace hop {

// Differentiation behaviour of a formal function symbol.
enum class FuncRule {
    plain, // derivatives stay formal (p, p', p'', ...)
    exp,   // d f = f * d(argument)
    sin,   // d sin = cos, paired with a cos symbol of the same name
    cos,   // d cos = -sin
    custom // derivative in each dependency is a stored expression
};

// One symbol of the computation: either a jet variable u^i_(s) or a formal
// function of field variables.  Atoms are interned; all code passes AtomId.
struct Atom {
    bool is_jet = true;
    int component = 0; // 1-based field index (jet atoms)
    int order = 0;     // jet order (jet atoms)

    std::string name;       // function atoms
    FuncRule rule = FuncRule::plain;
    std::vector<int> deps;  // sorted field components the function depends on
    std::vector<int> deriv; // accumulated derivative counts, parallel to deps
    // when nonempty, the function is evaluated at these expressions rather
    // than at the plain fields in deps (composition under substitution)
    std::vector<DiffExpr> args;
    // rule == custom: d(atom)/d(dep[k]) as an expression, parallel to deps
    std::vector<DiffExpr> custom_derivs;
};

AtomId intern(const Atom& a);
const Atom& atom(AtomId id);

AtomId jet_atom(int component, int order);
AtomId func_atom(const std::string& name, std::vector<int> deps,
                 FuncRule rule = FuncRule::plain);

// the same symbol with one more derivative in dependency `dep`
AtomId bump_deriv(AtomId id, int dep);
// sin/cos partner carrying identical name/deps/deriv/args
AtomId trig_partner(AtomId id);

std::string atom_key(AtomId id); // canonical text, unique per atom

} // namespace hop
