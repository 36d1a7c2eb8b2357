#include "hop/parse.hpp"

#include <cctype>
#include <sstream>

namespace hop {

// ---------------------------------------------------------------- printing

std::string print_atom(AtomId id) {
    const Atom& a = atom(id);
    std::ostringstream os;
    if (a.is_jet) {
        os << 'u' << a.component;
        switch (a.order) {
            case 0: break;
            case 1: os << "_x"; break;
            case 2: os << "_xx"; break;
            case 3: os << "_xxx"; break;
            default: os << "_{" << a.order << "}"; break;
        }
        return os.str();
    }
    int total_deriv = 0;
    for (int d : a.deriv) total_deriv += d;
    if (a.deps.size() == 1 && a.args.empty()) {
        os << a.name;
        for (int k = 0; k < total_deriv; ++k) os << '\'';
        return os.str();
    }
    if (total_deriv > 0 && a.args.empty()) {
        os << "D(" << a.name;
        for (size_t k = 0; k < a.deps.size(); ++k)
            for (int d = 0; d < a.deriv[k]; ++d) os << ",u" << a.deps[k];
        os << ')';
        return os.str();
    }
    os << a.name;
    if (!a.args.empty()) {
        // composite symbols fall outside the file grammar; printed for reports
        os << '(';
        for (size_t k = 0; k < a.args.size(); ++k) {
            if (k) os << ',';
            os << print_expr(a.args[k]);
        }
        os << ')';
        for (int k = 0; k < total_deriv; ++k) os << '\'';
    }
    return os.str();
}

namespace {

std::string print_scalar(const Scalar& c, bool* needs_parens) {
    *needs_parens = false;
    std::ostringstream os;
    if (c.im == 0) {
        if (boost::multiprecision::denominator(c.re) == 1) os << numerator(c.re);
        else { os << numerator(c.re) << '/' << denominator(c.re); *needs_parens = true; }
        return os.str();
    }
    auto part = [&os](const Rat& r, bool lead) {
        if (!lead && r > 0) os << '+';
        if (denominator(r) == 1) os << numerator(r);
        else os << numerator(r) << '/' << denominator(r);
    };
    if (c.re == 0) {
        if (c.im == 1) { os << 'i'; return os.str(); }
        if (c.im == -1) { os << "-i"; *needs_parens = true; return os.str(); }
        part(c.im, true);
        os << "*i";
        *needs_parens = true;
        return os.str();
    }
    part(c.re, true);
    if (c.im == 1) os << "+i";
    else if (c.im == -1) os << "-i";
    else { part(c.im, false); os << "*i"; }
    *needs_parens = true;
    return os.str();
}

} // namespace

std::string print_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : p.terms) {
        Scalar coeff = c;
        bool neg = coeff.im == 0 && coeff.re < 0;
        if (first) {
            if (neg) { os << '-'; coeff = -coeff; }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) coeff = -coeff;
        }
        first = false;
        bool parens = false;
        std::string cs = print_scalar(coeff, &parens);
        bool coeff_shown = !(coeff.is_one() && !m.empty());
        if (coeff_shown) {
            if (parens && !m.empty()) os << '(' << cs << ')';
            else os << cs;
        }
        bool need_star = coeff_shown;
        for (auto& [a, e] : m.factors) {
            if (need_star) os << '*';
            os << print_atom(a);
            if (e != 1) os << '^' << e;
            need_star = true;
        }
    }
    return os.str();
}

std::string print_expr(const DiffExpr& e) {
    if (e.den.is_one()) return print_poly(e.num);
    return "(" + print_poly(e.num) + ") / (" + print_poly(e.den) + ")";
}

// ----------------------------------------------------------------- parsing

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    explicit Lexer(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char get() {
        skip_ws();
        return pos < s.size() ? s[pos++] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) { ++pos; return true; }
        return false;
    }
};

struct Parser {
    Lexer lex;
    const SymbolTable& sym;

    Parser(const std::string& text, const SymbolTable& symbols)
        : lex(text), sym(symbols) {}

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " near position " + std::to_string(lex.pos) +
                         " in: " + lex.s);
    }

    DiffExpr parse() {
        DiffExpr e = expr();
        if (lex.peek() != '\0') fail("trailing input");
        return e;
    }

    DiffExpr expr() {
        DiffExpr e = term();
        for (;;) {
            char c = lex.peek();
            if (c == '+') { lex.get(); e = e + term(); }
            else if (c == '-') { lex.get(); e = e - term(); }
            else break;
        }
        return e;
    }

    DiffExpr term() {
        DiffExpr e = factor();
        for (;;) {
            char c = lex.peek();
            if (c == '*') { lex.get(); e = e * factor(); }
            else if (c == '/') { lex.get(); e = e / factor(); }
            else break;
        }
        return e;
    }

    DiffExpr factor() {
        if (lex.eat('-')) return -factor();
        if (lex.eat('+')) return factor();
        DiffExpr base = atom_factor();
        if (lex.eat('^')) {
            bool neg = lex.eat('-');
            long e = integer();
            return expr_pow(base, int(neg ? -e : e));
        }
        return base;
    }

    long integer() {
        lex.skip_ws();
        if (lex.pos >= lex.s.size() || !std::isdigit((unsigned char)lex.s[lex.pos]))
            fail("expected integer");
        long v = 0;
        while (lex.pos < lex.s.size() && std::isdigit((unsigned char)lex.s[lex.pos]))
            v = v * 10 + (lex.s[lex.pos++] - '0');
        return v;
    }

    DiffExpr atom_factor() {
        char c = lex.peek();
        if (c == '(') {
            lex.get();
            DiffExpr e = expr();
            if (!lex.eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit((unsigned char)c)) {
            Int v = 0;
            while (lex.pos < lex.s.size() && std::isdigit((unsigned char)lex.s[lex.pos]))
                v = v * 10 + (lex.s[lex.pos++] - '0');
            return DiffExpr(Scalar(Rat(v)));
        }
        if (std::isalpha((unsigned char)c)) return identifier();
        fail("unexpected character");
    }

    // a jet name like u3, u3_x, u3_{5}; returns component or 0
    int try_jet(std::string* suffix_err, int* order) {
        size_t save = lex.pos;
        lex.skip_ws();
        if (lex.pos + 1 >= lex.s.size() || lex.s[lex.pos] != 'u' ||
            !std::isdigit((unsigned char)lex.s[lex.pos + 1])) {
            lex.pos = save;
            return 0;
        }
        // a longer identifier starting with u<digit> is not a jet
        if (lex.pos + 2 < lex.s.size() &&
            (std::isalnum((unsigned char)lex.s[lex.pos + 2])) &&
            lex.s[lex.pos + 2] != '_' ) {
            lex.pos = save;
            return 0;
        }
        int comp = lex.s[lex.pos + 1] - '0';
        lex.pos += 2;
        *order = 0;
        if (lex.pos < lex.s.size() && lex.s[lex.pos] == '_') {
            ++lex.pos;
            if (lex.pos < lex.s.size() && lex.s[lex.pos] == '{') {
                ++lex.pos;
                *order = int(integer());
                if (!lex.eat('}')) { *suffix_err = "expected '}'"; return -1; }
            } else {
                int n = 0;
                while (lex.pos < lex.s.size() && lex.s[lex.pos] == 'x') { ++n; ++lex.pos; }
                if (n < 1 || n > 3) { *suffix_err = "bad jet suffix"; return -1; }
                *order = n;
            }
        }
        return comp;
    }

    DiffExpr identifier() {
        std::string err;
        int order = 0;
        int comp = try_jet(&err, &order);
        if (comp < 0) fail(err);
        if (comp > 0) return jet(comp, order);

        std::string name;
        while (lex.pos < lex.s.size() &&
               (std::isalnum((unsigned char)lex.s[lex.pos]) || lex.s[lex.pos] == '_'))
            name += lex.s[lex.pos++];
        if (name == "i") return DiffExpr(Scalar::i());
        if (name == "D") return mixed_derivative();
        auto it = sym.funcs.find(name);
        if (it == sym.funcs.end()) fail("undeclared symbol '" + name + "'");
        const FuncDecl& f = it->second;
        AtomId id = func_atom(f.name, f.deps, f.rule);
        while (lex.pos < lex.s.size() && lex.s[lex.pos] == '\'') {
            ++lex.pos;
            if (f.deps.size() != 1) fail("prime derivative needs a single dependency");
            if (f.rule == FuncRule::plain) id = bump_deriv(id, f.deps[0]);
            else fail("prime derivative on a rewrite-rule symbol; use D()");
        }
        return DiffExpr::from_poly(Poly::atom(id));
    }

    DiffExpr mixed_derivative() {
        if (!lex.eat('(')) fail("expected '(' after D");
        std::string name;
        lex.skip_ws();
        while (lex.pos < lex.s.size() &&
               (std::isalnum((unsigned char)lex.s[lex.pos]) || lex.s[lex.pos] == '_'))
            name += lex.s[lex.pos++];
        auto it = sym.funcs.find(name);
        if (it == sym.funcs.end()) fail("undeclared symbol '" + name + "'");
        DiffExpr e = func(it->second.name, it->second.deps, it->second.rule);
        while (lex.eat(',')) {
            std::string err;
            int order = 0;
            int comp = try_jet(&err, &order);
            if (comp <= 0 || order != 0) fail("expected a field name in D()");
            e = partial_jet(e, comp, 0);
        }
        if (!lex.eat(')')) fail("expected ')'");
        return e;
    }
};

} // namespace

DiffExpr parse_expr(const std::string& text, const SymbolTable& symbols) {
    Parser p(text, symbols);
    return p.parse();
}

} // namespace hop
