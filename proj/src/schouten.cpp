#include "hop/schouten.hpp"

namespace hop {

namespace {

int max_jet_in(const BiDist& d) {
    int m = 0;
    for (auto& [o, c] : d.coeffs) m = std::max(m, max_jet_order(c));
    return m;
}

BiDist dx_pow(BiDist d, int s) {
    for (int k = 0; k < s; ++k) d = dx(d);
    return d;
}

// One of the six structural blocks: the first factor F^{ab} lives on the
// point pair (p,q), the second factor runs over components B^{lc} attached
// at the differentiation point and ending at r.  Contributes
//   sum_{l,s} dF^{ab}/du^l_(s)(p) d_p^s B^{lc}_{p,r}
// + sum_{l,s} dF^{ab}/du^l_(s)(q) d_q^s B^{lc}_{q,r}.
void block(TriDist& out, const BiOperator& F, const BiOperator& B, int a,
           int b, int c, Pt p, Pt q, Pt r) {
    const BiDist& f = F.at(a, b);
    auto half = [&](const BiDist& fform, Pt attach) {
        int smax = max_jet_in(fform);
        for (int l = 1; l <= F.n; ++l) {
            for (int s = 0; s <= smax; ++s) {
                // derivative of every F coefficient in u^l_(s)
                std::map<int, DiffExpr> dcoeffs;
                bool any = false;
                for (auto& [m, fc] : fform.coeffs) {
                    DiffExpr d = partial_jet(fc, l, s);
                    if (!d.is_zero()) { dcoeffs[m] = std::move(d); any = true; }
                }
                if (!any) continue;
                BiDist bd = dx_pow(B.at(l, c), s);
                for (auto& [m, fc] : dcoeffs)
                    for (auto& [nn, bc] : bd.coeffs) {
                        RawTri t;
                        t.coeff = fc * bc;
                        t.at = attach;
                        t.o1 = m; t.a1 = p; t.b1 = q;
                        t.o2 = nn; t.a2 = attach; t.b2 = r;
                        out = out + normalize(t);
                    }
            }
        }
    };
    half(f, p);
    half(to_second_point(f), q);
}

} // namespace

TriOperator schouten(const BiOperator& P, const BiOperator& Q) {
    if (P.n != Q.n) throw std::invalid_argument("schouten: dimension mismatch");
    TriOperator out(P.n);
    for (int i = 1; i <= P.n; ++i)
        for (int j = 1; j <= P.n; ++j)
            for (int k = 1; k <= P.n; ++k) {
                TriDist& t = out.at(i, j, k);
                block(t, P, Q, i, j, k, Pt::X, Pt::Y, Pt::Z);
                block(t, Q, P, i, j, k, Pt::X, Pt::Y, Pt::Z);
                block(t, P, Q, k, i, j, Pt::Z, Pt::X, Pt::Y);
                block(t, Q, P, k, i, j, Pt::Z, Pt::X, Pt::Y);
                block(t, P, Q, j, k, i, Pt::Y, Pt::Z, Pt::X);
                block(t, Q, P, j, k, i, Pt::Y, Pt::Z, Pt::X);
            }
    return out;
}

TriOperator jacobi_defect(const BiOperator& P) { return schouten(P, P); }

TriOperator order2_residual(const BiOperator& P0, const BiOperator& P1,
                            const BiOperator& P2) {
    return schouten(P0, P2) * Scalar(2) + schouten(P1, P1);
}

BiOperator lie_derivative(const VectorField& xi, const BiOperator& P) {
    if (xi.n != P.n)
        throw std::invalid_argument("lie_derivative: dimension mismatch");
    BiOperator out(P.n);
    for (int i = 1; i <= P.n; ++i)
        for (int j = 1; j <= P.n; ++j) {
            BiDist acc;
            const BiDist& a = P.at(i, j);
            // transport term: d_x^s xi^k times dA^{ij}/du^k_(s)
            for (auto& [m, c] : a.coeffs) {
                int smax = max_jet_order(c);
                DiffExpr t;
                for (int k = 1; k <= P.n; ++k)
                    for (int s = 0; s <= smax; ++s) {
                        DiffExpr d = partial_jet(c, k, s);
                        if (!d.is_zero()) t = t + total_x(xi.at(k), s) * d;
                    }
                acc.add(m, t);
            }
            // Jacobian contraction at x
            for (int k = 1; k <= P.n; ++k) {
                int smax = max_jet_order(xi.at(i));
                for (int s = 0; s <= smax; ++s) {
                    DiffExpr d = partial_jet(xi.at(i), k, s);
                    if (d.is_zero()) continue;
                    BiDist kd = P.at(k, j);
                    for (int q = 0; q < s; ++q) kd = dx(kd);
                    acc = acc - kd * d;
                }
            }
            // Jacobian contraction at y
            for (int k = 1; k <= P.n; ++k) {
                int smax = max_jet_order(xi.at(j));
                for (int s = 0; s <= smax; ++s) {
                    DiffExpr d = partial_jet(xi.at(j), k, s);
                    if (d.is_zero()) continue;
                    BiDist kd = P.at(i, k);
                    for (int q = 0; q < s; ++q) kd = dy(kd);
                    acc = acc - mul_at_y(d, kd);
                }
            }
            out.at(i, j) = acc;
        }
    return out;
}

TriOperator operator+(const TriOperator& a, const TriOperator& b) {
    TriOperator r(a.n);
    for (size_t k = 0; k < r.comp.size(); ++k) r.comp[k] = a.comp[k] + b.comp[k];
    return r;
}

TriOperator operator-(const TriOperator& a, const TriOperator& b) {
    TriOperator r(a.n);
    for (size_t k = 0; k < r.comp.size(); ++k) r.comp[k] = a.comp[k] - b.comp[k];
    return r;
}

TriOperator operator*(const TriOperator& a, const Scalar& c) {
    TriOperator r(a.n);
    for (size_t k = 0; k < r.comp.size(); ++k) {
        for (auto& [mn, e] : a.comp[k].coeffs)
            r.comp[k].add(mn.first, mn.second, e * DiffExpr(c));
    }
    return r;
}

} // namespace hop
