#include "hop/calc.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "hop/config.hpp"

namespace hop {

DiffExpr jet(int component, int order) {
    return DiffExpr::from_poly(Poly::atom(jet_atom(component, order)));
}

DiffExpr func(const std::string& name, std::vector<int> deps, FuncRule rule) {
    return DiffExpr::from_poly(Poly::atom(func_atom(name, std::move(deps), rule)));
}

DiffExpr func_d(const std::string& name, std::vector<int> deps,
                const std::vector<int>& diff_by, FuncRule rule) {
    AtomId id = func_atom(name, std::move(deps), rule);
    for (int d : diff_by) id = bump_deriv(id, d);
    return DiffExpr::from_poly(Poly::atom(id));
}

namespace {

DiffExpr atom_expr(AtomId id) { return DiffExpr::from_poly(Poly::atom(id)); }

// args of a function atom, with the implicit defaults u^dep filled in
std::vector<DiffExpr> effective_args(const Atom& a) {
    if (!a.args.empty()) return a.args;
    std::vector<DiffExpr> out;
    out.reserve(a.deps.size());
    for (int d : a.deps) out.push_back(jet(d, 0));
    return out;
}

// derivative of one atom in the k-th dependency slot (not yet multiplied by
// the derivative of the slot's argument)
DiffExpr slot_derivative(AtomId id, size_t k) {
    const Atom& a = atom(id);
    switch (a.rule) {
        case FuncRule::plain:
            return atom_expr(bump_deriv(id, a.deps[k]));
        case FuncRule::exp:
            return atom_expr(id);
        case FuncRule::sin:
            return atom_expr(trig_partner(id));
        case FuncRule::cos:
            return -atom_expr(trig_partner(id));
        case FuncRule::custom:
            return a.custom_derivs.at(k);
    }
    throw std::logic_error("slot_derivative: bad rule");
}

DiffExpr d_atom_dx(AtomId id) {
    const Atom& a = atom(id);
    if (a.is_jet) {
        if (a.order + 1 > config().max_jet)
            throw CapError("jet order cap exceeded in total derivative");
        return jet(a.component, a.order + 1);
    }
    auto args = effective_args(a);
    DiffExpr r;
    for (size_t k = 0; k < a.deps.size(); ++k)
        r = r + slot_derivative(id, k) * total_x(args[k]);
    return r;
}

DiffExpr poly_total_x(const Poly& p) {
    DiffExpr r;
    for (AtomId a : poly_atoms(p))
        r = r + DiffExpr::from_poly(poly_partial_atom(p, a)) * d_atom_dx(a);
    return r;
}

} // namespace

DiffExpr total_x(const DiffExpr& e) {
    DiffExpr dn = poly_total_x(e.num);
    if (e.den.is_one()) return dn;
    DiffExpr dd = poly_total_x(e.den);
    DiffExpr den = DiffExpr::from_poly(e.den);
    return dn / den - DiffExpr::from_poly(e.num) * dd / (den * den);
}

DiffExpr total_x(const DiffExpr& e, int times) {
    DiffExpr r = e;
    for (int i = 0; i < times; ++i) r = total_x(r);
    return r;
}

namespace {

// d atom / d u^c_(s) as an expression
DiffExpr atom_partial(AtomId id, int component, int order) {
    const Atom& a = atom(id);
    if (a.is_jet)
        return (a.component == component && a.order == order) ? DiffExpr(1)
                                                              : DiffExpr();
    auto args = effective_args(a);
    DiffExpr r;
    for (size_t k = 0; k < a.deps.size(); ++k) {
        DiffExpr da = partial_jet(args[k], component, order);
        if (!da.is_zero()) r = r + slot_derivative(id, k) * da;
    }
    return r;
}

DiffExpr poly_partial(const Poly& p, int component, int order) {
    DiffExpr r;
    for (AtomId a : poly_atoms(p)) {
        DiffExpr da = atom_partial(a, component, order);
        if (!da.is_zero())
            r = r + DiffExpr::from_poly(poly_partial_atom(p, a)) * da;
    }
    return r;
}

} // namespace

DiffExpr partial_jet(const DiffExpr& e, int component, int order) {
    DiffExpr dn = poly_partial(e.num, component, order);
    if (e.den.is_one()) return dn;
    DiffExpr dd = poly_partial(e.den, component, order);
    DiffExpr den = DiffExpr::from_poly(e.den);
    return dn / den - DiffExpr::from_poly(e.num) * dd / (den * den);
}

namespace {

int atom_max_jet(AtomId id, std::map<AtomId, int>& memo) {
    auto it = memo.find(id);
    if (it != memo.end()) return it->second;
    const Atom& a = atom(id);
    int m = 0;
    if (a.is_jet) m = a.order;
    else {
        for (auto& arg : a.args)
            for (AtomId b : poly_atoms(arg.num))
                m = std::max(m, atom_max_jet(b, memo));
        for (auto& arg : a.args)
            for (AtomId b : poly_atoms(arg.den))
                m = std::max(m, atom_max_jet(b, memo));
    }
    memo[id] = m;
    return m;
}

std::optional<int> atom_degree(AtomId id) {
    const Atom& a = atom(id);
    if (a.is_jet) return a.order;
    // a formal function of degree-0 arguments has degree 0; composites with
    // jet content in arguments have no well-defined grading slot
    for (auto& arg : a.args) {
        auto d = homogeneous_degree(arg);
        if (!d || *d != 0) return std::nullopt;
    }
    return 0;
}

std::optional<int> poly_degree(const Poly& p) {
    if (p.is_zero()) return 0;
    std::optional<int> deg;
    for (auto& [m, c] : p.terms) {
        int d = 0;
        for (auto& [a, e] : m.factors) {
            auto da = atom_degree(a);
            if (!da) return std::nullopt;
            d += *da * e;
        }
        if (!deg) deg = d;
        else if (*deg != d) return std::nullopt;
    }
    return deg;
}

} // namespace

int max_jet_order(const DiffExpr& e) {
    std::map<AtomId, int> memo;
    int m = 0;
    for (AtomId a : poly_atoms(e.num)) m = std::max(m, atom_max_jet(a, memo));
    for (AtomId a : poly_atoms(e.den)) m = std::max(m, atom_max_jet(a, memo));
    return m;
}

std::optional<int> homogeneous_degree(const DiffExpr& e) {
    if (e.is_zero()) return 0;
    auto dn = poly_degree(e.num);
    auto dd = poly_degree(e.den);
    if (!dn || !dd) return std::nullopt;
    return *dn - *dd;
}

namespace {

Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 7);
    return Rat(num(rng), den(rng));
}

struct EvalCtx {
    unsigned seed;
    int salt;
    std::map<AtomId, Scalar> cache;
};

Scalar eval_poly(const Poly& p, EvalCtx& ctx);
Scalar eval_expr(const DiffExpr& e, EvalCtx& ctx);

Scalar eval_atom(AtomId id, EvalCtx& ctx) {
    auto it = ctx.cache.find(id);
    if (it != ctx.cache.end()) return it->second;
    const Atom& a = atom(id);
    Scalar v;
    if (a.rule == FuncRule::sin || a.rule == FuncRule::cos) {
        // both symbols of a pair sample the same rational circle point
        Atom base = a;
        base.rule = FuncRule::sin;
        std::string key = atom_key(intern(base));
        std::seed_seq sq{(unsigned)std::hash<std::string>{}(key), ctx.seed,
                         (unsigned)ctx.salt, 77u};
        std::mt19937_64 rng(sq);
        Rat t = random_rat(rng);
        Rat d = 1 + t * t;
        v = (a.rule == FuncRule::sin) ? Scalar(2 * t / d) : Scalar((1 - t * t) / d);
    } else {
        std::string key = atom_key(id);
        std::seed_seq sq{(unsigned)std::hash<std::string>{}(key), ctx.seed,
                         (unsigned)ctx.salt, 13u};
        std::mt19937_64 rng(sq);
        v = Scalar(random_rat(rng));
        if (a.rule == FuncRule::exp && v.is_zero()) v = Scalar(Rat(1, 3));
    }
    // composite symbols stay formal: the value is keyed to the full atom,
    // including its arguments, via atom_key above
    ctx.cache.emplace(id, v);
    return v;
}

Scalar eval_poly(const Poly& p, EvalCtx& ctx) {
    Scalar r;
    for (auto& [m, c] : p.terms) {
        Scalar t = c;
        for (auto& [a, e] : m.factors) {
            Scalar va = eval_atom(a, ctx);
            for (int k = 0; k < e; ++k) t *= va;
        }
        r += t;
    }
    return r;
}

Scalar eval_expr(const DiffExpr& e, EvalCtx& ctx) {
    Scalar d = eval_poly(e.den, ctx);
    if (d.is_zero()) throw std::domain_error("denominator vanished");
    return eval_poly(e.num, ctx) / d;
}

} // namespace

Scalar eval_random(const DiffExpr& e, unsigned seed, int retries) {
    for (int salt = 0; salt < retries; ++salt) {
        EvalCtx ctx{seed, salt, {}};
        try {
            return eval_expr(e, ctx);
        } catch (const std::domain_error&) {
            // resample and retry
        }
    }
    throw std::runtime_error("eval_random: denominator vanished at every sample");
}

namespace {

bool is_plain_field(const DiffExpr& e, int* component) {
    if (!e.den.is_one() || e.num.terms.size() != 1) return false;
    auto& [m, c] = e.num.terms[0];
    if (!c.is_one() || m.factors.size() != 1 || m.factors[0].second != 1)
        return false;
    const Atom& a = atom(m.factors[0].first);
    if (!a.is_jet || a.order != 0) return false;
    *component = a.component;
    return true;
}

DiffExpr subst_atom(AtomId id, const std::map<int, DiffExpr>& exprs) {
    const Atom& a = atom(id);
    if (a.is_jet) {
        auto it = exprs.find(a.component);
        if (it == exprs.end()) return atom_expr(id);
        return total_x(it->second, a.order);
    }
    auto args = effective_args(a);
    bool touched = false;
    for (auto& arg : args) {
        DiffExpr s = substitute(arg, exprs);
        if (s != arg) touched = true;
        arg = std::move(s);
    }
    Atom n = a;
    if (!n.custom_derivs.empty()) {
        for (auto& cd : n.custom_derivs) {
            DiffExpr s = substitute(cd, exprs);
            if (s != cd) touched = true;
            cd = std::move(s);
        }
    }
    if (!touched) return atom_expr(id);
    // if every argument is again a distinct bare field, relabel dependencies
    std::vector<int> comps(args.size());
    bool bare = true;
    for (size_t k = 0; k < args.size(); ++k)
        if (!is_plain_field(args[k], &comps[k])) { bare = false; break; }
    if (bare) {
        std::vector<int> uniq = comps;
        std::sort(uniq.begin(), uniq.end());
        if (std::adjacent_find(uniq.begin(), uniq.end()) == uniq.end()) {
            std::vector<size_t> order(comps.size());
            for (size_t k = 0; k < order.size(); ++k) order[k] = k;
            std::sort(order.begin(), order.end(),
                      [&](size_t x, size_t y) { return comps[x] < comps[y]; });
            Atom relab = n;
            relab.args.clear();
            relab.deps.resize(comps.size());
            relab.deriv.resize(comps.size());
            if (!n.custom_derivs.empty()) relab.custom_derivs.resize(comps.size());
            for (size_t k = 0; k < order.size(); ++k) {
                relab.deps[k] = comps[order[k]];
                relab.deriv[k] = a.deriv[order[k]];
                if (!n.custom_derivs.empty())
                    relab.custom_derivs[k] = n.custom_derivs[order[k]];
            }
            return atom_expr(intern(relab));
        }
    }
    n.args = std::move(args);
    return atom_expr(intern(n));
}

} // namespace

DiffExpr substitute(const DiffExpr& e, const std::map<int, DiffExpr>& exprs) {
    auto subst_poly = [&](const Poly& p) {
        DiffExpr r;
        for (auto& [m, c] : p.terms) {
            DiffExpr t(c);
            for (auto& [a, ex] : m.factors)
                t = t * expr_pow(subst_atom(a, exprs), ex);
            r = r + t;
        }
        return r;
    };
    DiffExpr n = subst_poly(e.num);
    if (e.den.is_one()) return n;
    return n / subst_poly(e.den);
}

namespace {

Poly trig_reduce_poly(const Poly& p) {
    Poly r = p;
    bool changed = true;
    while (changed) {
        changed = false;
        for (AtomId a : poly_atoms(r)) {
            if (atom(a).rule != FuncRule::cos) continue;
            // cos^2 -> 1 - sin^2, applied while any square remains
            Poly next;
            bool any = false;
            for (auto& [m, coeff] : r.terms) {
                if (m.exponent_of(a) >= 2) {
                    any = true;
                    Monomial rest = monomial_div(m, Monomial{{{a, 2}}});
                    Poly t;
                    t.terms.push_back({rest, coeff});
                    AtomId s = trig_partner(a);
                    next = next + t * (Poly(Scalar(1)) - Poly::atom(s) * Poly::atom(s));
                } else {
                    Poly t;
                    t.terms.push_back({m, coeff});
                    next = next + t;
                }
            }
            if (any) {
                r = std::move(next);
                changed = true;
                break;
            }
        }
    }
    return r;
}

} // namespace

DiffExpr trig_reduce(const DiffExpr& e) {
    return DiffExpr(trig_reduce_poly(e.num), trig_reduce_poly(e.den));
}

} // namespace hop
