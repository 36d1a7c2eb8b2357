#pragma once

#include <map>
#include <string>

#include "hop/calc.hpp"

namespace hop {

struct FuncDecl {
    std::string name;
    std::vector<int> deps;
    FuncRule rule = FuncRule::plain;
};

struct SymbolTable {
    std::map<std::string, FuncDecl> funcs;
    void declare(const std::string& name, std::vector<int> deps,
                 FuncRule rule = FuncRule::plain) {
        funcs[name] = FuncDecl{name, std::move(deps), rule};
    }
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// grammar: jets u1..u9 with suffixes _x/_xx/_xxx/_{k}; declared functions as
// p, p', p'' or D(F,u2,u3); rational literals; + - * / ^; parentheses; `i`
DiffExpr parse_expr(const std::string& text, const SymbolTable& symbols = {});

std::string print_expr(const DiffExpr& e);
std::string print_poly(const Poly& p);
std::string print_atom(AtomId id);

} // namespace hop
