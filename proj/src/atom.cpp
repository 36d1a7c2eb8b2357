#include "hop/atom.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hop {

namespace {

struct Registry {
    // Deque so that references handed out by atom() stay valid while
    // intern() appends new entries (derivative bumps happen mid-traversal).
    std::deque<Atom> atoms;
    std::vector<std::string> keys;
    std::map<std::string, AtomId> index;
};

Registry& reg() {
    static Registry r;
    return r;
}

void serialise_poly(std::ostream& os, const Poly& p) {
    for (auto& [m, c] : p.terms) {
        os << '+' << c.str();
        for (auto& [a, e] : m.factors) os << '.' << a << '^' << e;
    }
}

std::string make_key(const Atom& a) {
    std::ostringstream os;
    if (a.is_jet) {
        os << "J:" << a.component << ':' << a.order;
        return os.str();
    }
    os << "F:" << a.name << ':' << int(a.rule) << ":d";
    for (size_t i = 0; i < a.deps.size(); ++i)
        os << a.deps[i] << '^' << a.deriv[i] << ',';
    if (!a.args.empty()) {
        os << ":a";
        for (auto& e : a.args) {
            os << '[';
            serialise_poly(os, e.num);
            os << '/';
            serialise_poly(os, e.den);
            os << ']';
        }
    }
    if (!a.custom_derivs.empty()) {
        os << ":c";
        for (auto& e : a.custom_derivs) {
            os << '[';
            serialise_poly(os, e.num);
            os << '/';
            serialise_poly(os, e.den);
            os << ']';
        }
    }
    return os.str();
}

} // namespace

AtomId intern(const Atom& a) {
    std::string key = make_key(a);
    auto& r = reg();
    auto it = r.index.find(key);
    if (it != r.index.end()) return it->second;
    AtomId id = static_cast<AtomId>(r.atoms.size());
    r.atoms.push_back(a);
    r.keys.push_back(key);
    r.index.emplace(std::move(key), id);
    return id;
}

const Atom& atom(AtomId id) { return reg().atoms.at(id); }

std::string atom_key(AtomId id) { return reg().keys.at(id); }

AtomId jet_atom(int component, int order) {
    Atom a;
    a.is_jet = true;
    a.component = component;
    a.order = order;
    return intern(a);
}

AtomId func_atom(const std::string& name, std::vector<int> deps, FuncRule rule) {
    Atom a;
    a.is_jet = false;
    a.name = name;
    a.rule = rule;
    std::sort(deps.begin(), deps.end());
    a.deps = std::move(deps);
    a.deriv.assign(a.deps.size(), 0);
    return intern(a);
}

AtomId bump_deriv(AtomId id, int dep) {
    Atom a = atom(id);
    if (a.is_jet) throw std::logic_error("bump_deriv on a jet variable");
    auto it = std::find(a.deps.begin(), a.deps.end(), dep);
    if (it == a.deps.end()) throw std::logic_error("bump_deriv: unknown dependency");
    a.deriv[it - a.deps.begin()] += 1;
    return intern(a);
}

AtomId trig_partner(AtomId id) {
    Atom a = atom(id);
    if (a.rule == FuncRule::sin) a.rule = FuncRule::cos;
    else if (a.rule == FuncRule::cos) a.rule = FuncRule::sin;
    else throw std::logic_error("trig_partner: not a trig symbol");
    return intern(a);
}

int atom_cmp(AtomId a, AtomId b) {
    if (a == b) return 0;
    const Atom& x = atom(a);
    const Atom& y = atom(b);
    if (x.is_jet != y.is_jet) return x.is_jet ? -1 : 1;
    if (x.is_jet) {
        if (x.component != y.component) return x.component < y.component ? -1 : 1;
        if (x.order != y.order) return x.order < y.order ? -1 : 1;
        return 0;
    }
    const std::string &ka = atom_key(a), &kb = atom_key(b);
    if (x.name != y.name) return x.name < y.name ? -1 : 1;
    return ka < kb ? -1 : 1;
}

std::string Scalar::str() const {
    std::ostringstream os;
    if (im == 0) os << re;
    else if (re == 0) os << im << "*i";
    else os << re << (im > 0 ? "+" : "") << im << "*i";
    return os.str();
}

} // namespace hop
