#include "hop/expr.hpp"

#include <stdexcept>

namespace hop {

namespace {

// Cancel the common factors of n and d using only the square-free factors
// of the denominator.  A full multivariate gcd of a large numerator is
// prohibitively expensive (the PRS content recursion explodes), while the
// denominators that actually occur are small structured polynomials whose
// factors are cheap to peel off and cheap to divide out exactly.
void cancel_common(Poly& n, Poly& d) {
    if (d.terms.size() > 256) return;
    std::vector<Poly> cand;
    Poly dd = d;
    int guard = 0;
    while (!dd.is_constant() && guard++ < 64) {
        Poly dp;
        bool have = false;
        for (AtomId v : poly_atoms(dd)) {
            dp = poly_partial_atom(dd, v);
            if (!dp.is_zero()) {
                have = true;
                break;
            }
        }
        if (!have) break;
        Poly g = poly_gcd(dd, dp);
        Poly sq;
        if (!poly_divide_exact(dd, g, &sq)) break;
        if (!sq.is_constant()) cand.push_back(std::move(sq));
        if (g.is_constant()) break;
        dd = std::move(g);
    }
    for (const Poly& f : cand) {
        for (;;) {
            Poly qn, qd;
            if (poly_divide_exact(d, f, &qd) &&
                poly_divide_exact(n, f, &qn)) {
                n = std::move(qn);
                d = std::move(qd);
            } else {
                break;
            }
        }
    }
}

} // namespace

DiffExpr::DiffExpr(Poly n, Poly d) {
    if (d.is_zero()) throw std::domain_error("DiffExpr: zero denominator");
    if (n.is_zero()) {
        den = Poly(Scalar(1));
        return;
    }
    if (!d.is_one()) {
        cancel_common(n, d);
        Scalar lc = d.terms[0].second;
        if (!lc.is_one()) {
            n = n * lc.inv();
            d = d * lc.inv();
        }
    }
    num = std::move(n);
    den = std::move(d);
}

DiffExpr operator+(const DiffExpr& a, const DiffExpr& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den == b.den) return DiffExpr(a.num + b.num, a.den);
    return DiffExpr(a.num * b.den + b.num * a.den, a.den * b.den);
}

DiffExpr operator-(const DiffExpr& a) {
    DiffExpr r = a;
    r.num = -r.num;
    return r;
}

DiffExpr operator-(const DiffExpr& a, const DiffExpr& b) { return a + (-b); }

DiffExpr operator*(const DiffExpr& a, const DiffExpr& b) {
    if (a.is_zero() || b.is_zero()) return DiffExpr();
    // cross-reduce before multiplying to keep intermediates small
    DiffExpr x(a.num, b.den), y(b.num, a.den);
    DiffExpr r;
    r.num = x.num * y.num;
    r.den = x.den * y.den;
    return r;
}

DiffExpr operator/(const DiffExpr& a, const DiffExpr& b) {
    if (b.is_zero()) throw std::domain_error("DiffExpr: division by zero");
    return a * expr_inv(b);
}

DiffExpr expr_inv(const DiffExpr& a) {
    if (a.is_zero()) throw std::domain_error("DiffExpr: inverse of zero");
    return DiffExpr(a.den, a.num);
}

DiffExpr expr_pow(const DiffExpr& a, int e) {
    if (e < 0) return expr_inv(expr_pow(a, -e));
    DiffExpr r(1);
    DiffExpr base = a;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

int expr_cmp(const DiffExpr& a, const DiffExpr& b) {
    int c = poly_cmp(a.num, b.num);
    if (c != 0) return c;
    return poly_cmp(a.den, b.den);
}

} // namespace hop
