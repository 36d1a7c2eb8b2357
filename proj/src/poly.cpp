#include "hop/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hop/config.hpp"

namespace hop {

int monomial_cmp(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    size_t i = 0;
    for (; i < a.factors.size() && i < b.factors.size(); ++i) {
        int c = atom_cmp(a.factors[i].first, b.factors[i].first);
        if (c != 0) return -c; // smaller atom first in the product => larger monomial
        if (a.factors[i].second != b.factors[i].second)
            return a.factors[i].second > b.factors[i].second ? 1 : -1;
    }
    if (i < a.factors.size()) return 1;
    if (i < b.factors.size()) return -1;
    return 0;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        int c = atom_cmp(a.factors[i].first, b.factors[j].first);
        if (c < 0) r.factors.push_back(a.factors[i++]);
        else if (c > 0) r.factors.push_back(b.factors[j++]);
        else {
            r.factors.push_back({a.factors[i].first,
                                 a.factors[i].second + b.factors[j].second});
            ++i; ++j;
        }
    }
    while (i < a.factors.size()) r.factors.push_back(a.factors[i++]);
    while (j < b.factors.size()) r.factors.push_back(b.factors[j++]);
    return r;
}

bool monomial_divides(const Monomial& b, const Monomial& a) {
    size_t i = 0;
    for (auto& [atom, e] : b.factors) {
        while (i < a.factors.size() && atom_cmp(a.factors[i].first, atom) < 0) ++i;
        if (i >= a.factors.size() || a.factors[i].first != atom ||
            a.factors[i].second < e)
            return false;
    }
    return true;
}

Monomial monomial_div(const Monomial& a, const Monomial& b) {
    Monomial r;
    size_t j = 0;
    for (auto& [atom, e] : a.factors) {
        int sub = 0;
        if (j < b.factors.size() && b.factors[j].first == atom) {
            sub = b.factors[j].second;
            ++j;
        }
        if (e - sub < 0) throw std::logic_error("monomial_div: not divisible");
        if (e - sub > 0) r.factors.push_back({atom, e - sub});
    }
    if (j != b.factors.size()) throw std::logic_error("monomial_div: not divisible");
    return r;
}

Monomial monomial_gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        int c = atom_cmp(a.factors[i].first, b.factors[j].first);
        if (c < 0) ++i;
        else if (c > 0) ++j;
        else {
            r.factors.push_back({a.factors[i].first,
                                 std::min(a.factors[i].second, b.factors[j].second)});
            ++i; ++j;
        }
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (terms.size() != o.terms.size()) return false;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].second != o.terms[i].second) return false;
        if (monomial_cmp(terms[i].first, o.terms[i].first) != 0) return false;
    }
    return true;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        int c = monomial_cmp(a.terms[i].first, b.terms[j].first);
        if (c > 0) r.terms.push_back(a.terms[i++]);
        else if (c < 0) r.terms.push_back(b.terms[j++]);
        else {
            Scalar s = a.terms[i].second + b.terms[j].second;
            if (!s.is_zero()) r.terms.push_back({a.terms[i].first, std::move(s)});
            ++i; ++j;
        }
    }
    while (i < a.terms.size()) r.terms.push_back(a.terms[i++]);
    while (j < b.terms.size()) r.terms.push_back(b.terms[j++]);
    return r;
}

Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& t : r.terms) t.second = -t.second;
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Scalar& c) {
    if (c.is_zero()) return Poly();
    Poly r = a;
    for (auto& t : r.terms) t.second *= c;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    if ((long)a.terms.size() * (long)b.terms.size() > config().max_terms)
        throw CapError("polynomial product exceeds term budget");
    // collect into a map keyed by monomial, then emit sorted
    struct MonoLess {
        bool operator()(const Monomial& x, const Monomial& y) const {
            return monomial_cmp(x, y) > 0;
        }
    };
    std::map<Monomial, Scalar, MonoLess> acc;
    for (auto& [ma, ca] : a.terms)
        for (auto& [mb, cb] : b.terms) {
            Monomial m = monomial_mul(ma, mb);
            auto it = acc.find(m);
            if (it == acc.end()) acc.emplace(std::move(m), ca * cb);
            else it->second += ca * cb;
        }
    Poly r;
    r.terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.terms.push_back({m, c});
    return r;
}

Poly poly_pow(const Poly& a, int e) {
    if (e < 0) throw std::logic_error("poly_pow: negative exponent");
    Poly r(Scalar(1));
    Poly base = a;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

bool poly_divide_exact(const Poly& a, const Poly& b, Poly* quotient) {
    if (b.is_zero()) return false;
    Poly rem = a, q;
    const Monomial& lm = b.terms[0].first;
    const Scalar& lc = b.terms[0].second;
    while (!rem.is_zero()) {
        if (!monomial_divides(lm, rem.terms[0].first)) return false;
        Monomial m = monomial_div(rem.terms[0].first, lm);
        Scalar c = rem.terms[0].second / lc;
        Poly t;
        t.terms.push_back({std::move(m), std::move(c)});
        q = q + t;
        rem = rem - t * b;
    }
    if (quotient) *quotient = std::move(q);
    return true;
}

std::vector<AtomId> poly_atoms(const Poly& p) {
    std::vector<AtomId> out;
    for (auto& [m, c] : p.terms)
        for (auto& [a, e] : m.factors) out.push_back(a);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Poly poly_partial_atom(const Poly& p, AtomId a) {
    Poly r;
    for (auto& [m, c] : p.terms) {
        int e = m.exponent_of(a);
        if (e == 0) continue;
        Monomial dm;
        for (auto& [b, k] : m.factors) {
            int nk = (b == a) ? k - 1 : k;
            if (nk > 0) dm.factors.push_back({b, nk});
        }
        Poly t;
        t.terms.push_back({std::move(dm), c * Scalar(e)});
        r = r + t;
    }
    return r;
}

namespace {

// univariate view of p in the atom x: exponent -> coefficient poly
std::map<int, Poly> univariate(const Poly& p, AtomId x) {
    std::map<int, Poly> out;
    for (auto& [m, c] : p.terms) {
        int e = m.exponent_of(x);
        Monomial rest;
        for (auto& [a, k] : m.factors)
            if (a != x) rest.factors.push_back({a, k});
        Poly t;
        t.terms.push_back({std::move(rest), c});
        out[e] = out[e] + t;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

Poly from_univariate(const std::map<int, Poly>& u, AtomId x) {
    Poly r;
    for (auto& [e, coef] : u) {
        Poly xe;
        if (e == 0) xe = Poly(Scalar(1));
        else {
            Monomial m;
            m.factors.push_back({x, e});
            xe.terms.push_back({std::move(m), Scalar(1)});
        }
        r = r + coef * xe;
    }
    return r;
}

int uni_deg(const std::map<int, Poly>& u) {
    return u.empty() ? -1 : u.rbegin()->first;
}

// pseudo-remainder of a by b in variable x
std::map<int, Poly> pseudo_rem(std::map<int, Poly> a, const std::map<int, Poly>& b,
                               AtomId x) {
    int db = uni_deg(b);
    const Poly& lb = b.rbegin()->second;
    while (uni_deg(a) >= db) {
        int da = uni_deg(a);
        Poly la = a.rbegin()->second;
        // a := lb * a - la * x^(da-db) * b
        std::map<int, Poly> next;
        for (auto& [e, c] : a) next[e] = c * lb;
        for (auto& [e, c] : b) {
            int te = e + da - db;
            next[te] = (next.count(te) ? next[te] : Poly()) - c * la;
        }
        for (auto it = next.begin(); it != next.end();)
            it = it->second.is_zero() ? next.erase(it) : std::next(it);
        if (uni_deg(next) >= da)
            throw std::logic_error("pseudo_rem: degree did not drop");
        a = std::move(next);
    }
    return a;
}

Poly content_of(const std::map<int, Poly>& u) {
    Poly g;
    for (auto& [e, c] : u) g = poly_gcd(g, c);
    return g;
}

std::map<int, Poly> divide_uni(const std::map<int, Poly>& u, const Poly& d) {
    std::map<int, Poly> out;
    for (auto& [e, c] : u) {
        Poly q;
        if (!poly_divide_exact(c, d, &q))
            throw std::logic_error("divide_uni: not divisible");
        out[e] = std::move(q);
    }
    return out;
}

} // namespace

Poly poly_gcd(Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    auto normalise = [](Poly p) {
        if (!p.is_zero()) {
            Scalar lc = p.terms[0].second;
            for (auto& t : p.terms) t.second = t.second / lc;
        }
        return p;
    };
    if (a.is_zero()) return normalise(b);
    if (b.is_zero()) return normalise(a);

    // common monomial factor
    Monomial mg = a.terms[0].first;
    for (auto& [m, c] : a.terms) mg = monomial_gcd(mg, m);
    for (auto& [m, c] : b.terms) mg = monomial_gcd(mg, m);

    if (a.is_constant() || b.is_constant()) {
        Poly r;
        r.terms.push_back({mg, Scalar(1)});
        return r;
    }

    // pick a variable common to both; if none, gcd is the monomial part
    auto va = poly_atoms(a), vb = poly_atoms(b);
    AtomId x = 0;
    bool found = false;
    for (AtomId ca : va)
        if (std::find(vb.begin(), vb.end(), ca) != vb.end()) { x = ca; found = true; break; }
    if (!found) {
        Poly r;
        r.terms.push_back({mg, Scalar(1)});
        return r;
    }

    auto ua = univariate(a, x), ub = univariate(b, x);
    Poly ca = content_of(ua), cb = content_of(ub);
    Poly gc = poly_gcd(ca, cb);
    auto pa = divide_uni(ua, ca), pb = divide_uni(ub, cb);
    if (uni_deg(pa) < uni_deg(pb)) std::swap(pa, pb);
    // primitive polynomial remainder sequence
    while (uni_deg(pb) >= 0) {
        auto r = pseudo_rem(pa, pb, x);
        pa = std::move(pb);
        if (r.empty()) { pb = {}; break; }
        Poly cr = content_of(r);
        pb = divide_uni(r, cr);
    }
    Poly cand = from_univariate(pa, x) * gc;
    // guard: confirm divisibility, fall back to the safe monomial gcd
    if (!poly_divide_exact(a, cand, nullptr) || !poly_divide_exact(b, cand, nullptr)) {
        Poly r;
        r.terms.push_back({mg, Scalar(1)});
        return r;
    }
    return normalise(cand);
}

int poly_cmp(const Poly& a, const Poly& b) {
    if (a.terms.size() != b.terms.size())
        return a.terms.size() < b.terms.size() ? -1 : 1;
    for (size_t i = 0; i < a.terms.size(); ++i) {
        int c = monomial_cmp(a.terms[i].first, b.terms[i].first);
        if (c != 0) return c;
        if (a.terms[i].second != b.terms[i].second)
            return a.terms[i].second < b.terms[i].second ? -1 : 1;
    }
    return 0;
}

} // namespace hop
