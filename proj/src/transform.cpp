#include "hop/transform.hpp"

#include <stdexcept>

namespace hop {

namespace {

std::map<int, DiffExpr> as_map(const std::vector<DiffExpr>& v) {
    std::map<int, DiffExpr> m;
    for (size_t i = 0; i < v.size(); ++i) m.emplace(int(i + 1), v[i]);
    return m;
}

} // namespace

DiffExpr to_new(const CoordChange& ch, const DiffExpr& e) {
    return substitute(e, as_map(ch.inv));
}

DiffExpr to_old(const CoordChange& ch, const DiffExpr& e) {
    return substitute(e, as_map(ch.fwd));
}

Matrix jacobian(const CoordChange& ch) {
    Matrix j(ch.n, std::vector<DiffExpr>(ch.n));
    for (int i = 1; i <= ch.n; ++i)
        for (int a = 1; a <= ch.n; ++a)
            j[i - 1][a - 1] = to_new(ch, partial_jet(ch.fwd[i - 1], a, 0));
    return j;
}

Matrix inv_jacobian(const CoordChange& ch) {
    Matrix k(ch.n, std::vector<DiffExpr>(ch.n));
    for (int a = 1; a <= ch.n; ++a)
        for (int s = 1; s <= ch.n; ++s)
            k[a - 1][s - 1] = partial_jet(ch.inv[a - 1], s, 0);
    return k;
}

void check_consistent(const CoordChange& ch) {
    // round trip of the fields themselves
    for (int i = 1; i <= ch.n; ++i) {
        DiffExpr rt = to_new(ch, to_old(ch, jet(i)));
        if (!(trig_reduce(rt) - jet(i)).is_zero())
            throw std::invalid_argument("CoordChange: inv is not inverse of map");
    }
    Matrix j = jacobian(ch), k = inv_jacobian(ch);
    for (int i = 0; i < ch.n; ++i)
        for (int s = 0; s < ch.n; ++s) {
            DiffExpr acc;
            for (int a = 0; a < ch.n; ++a) acc = acc + j[i][a] * k[a][s];
            DiffExpr want = (i == s) ? DiffExpr(1) : DiffExpr();
            if (!(trig_reduce(acc) - want).is_zero())
                throw std::invalid_argument("CoordChange: J K != id");
        }
}

Tensor push_metric(const HydroOp& op, const CoordChange& ch) {
    Matrix j = jacobian(ch);
    Tensor out(ch.n, 2);
    for (int l = 1; l <= ch.n; ++l)
        for (int r = 1; r <= ch.n; ++r) {
            DiffExpr acc;
            for (int a = 1; a <= ch.n; ++a)
                for (int b = 1; b <= ch.n; ++b) {
                    const DiffExpr& g = op.g(a, b);
                    if (g.is_zero()) continue;
                    acc = acc + j[l - 1][a - 1] * j[r - 1][b - 1] * to_new(ch, g);
                }
            out(l, r) = trig_reduce(acc);
        }
    return out;
}

Tensor nontensorial_part(const HydroOp& op, const CoordChange& ch) {
    Matrix j = jacobian(ch);
    Matrix k = inv_jacobian(ch);
    // second derivatives of the forward map, re-expressed in the new chart
    Tensor h(ch.n, 3); // h(r, a, b) = d^2 new^r / d old^a d old^b
    for (int r = 1; r <= ch.n; ++r)
        for (int a = 1; a <= ch.n; ++a)
            for (int b = 1; b <= ch.n; ++b)
                h(r, a, b) = to_new(
                    ch, partial_jet(partial_jet(ch.fwd[r - 1], a, 0), b, 0));
    Tensor out(ch.n, 3);
    for (int l = 1; l <= ch.n; ++l)
        for (int r = 1; r <= ch.n; ++r)
            for (int s = 1; s <= ch.n; ++s) {
                DiffExpr acc;
                for (int a = 1; a <= ch.n; ++a)
                    for (int b = 1; b <= ch.n; ++b) {
                        const DiffExpr& g = op.g(a, b);
                        if (g.is_zero()) continue;
                        for (int c = 1; c <= ch.n; ++c)
                            acc = acc + j[l - 1][a - 1] * h(r, b, c) *
                                            k[c - 1][s - 1] * to_new(ch, g);
                    }
                out(l, r, s) = trig_reduce(acc);
            }
    return out;
}

Tensor push_b(const HydroOp& op, const CoordChange& ch) {
    Matrix j = jacobian(ch);
    Matrix k = inv_jacobian(ch);
    Tensor out = nontensorial_part(op, ch);
    for (int l = 1; l <= ch.n; ++l)
        for (int r = 1; r <= ch.n; ++r)
            for (int s = 1; s <= ch.n; ++s) {
                DiffExpr acc = out(l, r, s);
                for (int a = 1; a <= ch.n; ++a)
                    for (int b = 1; b <= ch.n; ++b)
                        for (int c = 1; c <= ch.n; ++c) {
                            const DiffExpr& bb = op.b(a, b, c);
                            if (bb.is_zero()) continue;
                            acc = acc + j[l - 1][a - 1] * j[r - 1][b - 1] *
                                            k[c - 1][s - 1] * to_new(ch, bb);
                        }
                out(l, r, s) = trig_reduce(acc);
            }
    return out;
}

HydroOp push_hydro(const HydroOp& op, const CoordChange& ch) {
    HydroOp out(ch.n);
    out.g = push_metric(op, ch);
    out.b = push_b(op, ch);
    return out;
}

bool is_admissible(const HydroOp& op, const CoordChange& ch) {
    Tensor g = push_metric(op, ch);
    for (int i = 1; i <= ch.n; ++i)
        for (int j = 1; j <= ch.n; ++j)
            if (!(g(i, j) - op.g(i, j)).is_zero()) return false;
    return true;
}

bool is_restricted_admissible(const HydroOp& op, const CoordChange& ch) {
    if (!is_admissible(op, ch)) return false;
    Tensor nt = nontensorial_part(op, ch);
    for (auto& e : nt.v)
        if (!e.is_zero()) return false;
    return true;
}

BiOperator push_bivector(const BiOperator& p, const CoordChange& ch) {
    // the Jacobian in the old chart, for composing with old-chart coefficients
    Matrix jold(ch.n, std::vector<DiffExpr>(ch.n));
    for (int i = 1; i <= ch.n; ++i)
        for (int a = 1; a <= ch.n; ++a)
            jold[i - 1][a - 1] = partial_jet(ch.fwd[i - 1], a, 0);
    BiOperator out(ch.n);
    for (int i = 1; i <= ch.n; ++i)
        for (int jj = 1; jj <= ch.n; ++jj) {
            BiDist acc;
            for (int a = 1; a <= ch.n; ++a)
                for (int b = 1; b <= ch.n; ++b) {
                    const BiDist& d = p.at(a, b);
                    if (d.is_zero()) continue;
                    if (jold[i - 1][a - 1].is_zero() ||
                        jold[jj - 1][b - 1].is_zero())
                        continue;
                    BiDist t = mul_at_y(jold[jj - 1][b - 1], d);
                    acc = acc + t * jold[i - 1][a - 1];
                }
            BiDist res;
            for (auto& [m, c] : acc.coeffs)
                res.add(m, trig_reduce(to_new(ch, c)));
            out.at(i, jj) = res;
        }
    return out;
}

} // namespace hop
