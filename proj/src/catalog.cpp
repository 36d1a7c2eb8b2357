#include "hop/catalog.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "hop/calc.hpp"
#include "hop/grinberg.hpp"
#include "hop/parse.hpp"

namespace hop {

namespace {

DiffExpr U(int c, int o = 0) { return jet(c, o); }
DiffExpr dk(const DiffExpr& e, int k) { return partial_jet(e, k, 0); }
DiffExpr fr(long a, long b) { return DiffExpr(Scalar(Rat(a, b))); }

DiffExpr P(const std::string& s) { return parse_expr(s); }

// matrix display of a homogeneous bivector; slot (i,j,m) holds the
// coefficient of delta^(m)
struct Display {
    int n, degree;
    std::vector<DiffExpr> e;

    Display(int n_, int d) : n(n_), degree(d), e(size_t(n_) * n_ * (d + 2)) {}

    DiffExpr& at(int i, int j, int m) {
        return e[(size_t(i - 1) * n + (j - 1)) * (degree + 2) + m];
    }
    BiOperator op() const {
        int nn = n, dd = degree;
        const auto& v = e;
        DeformBivector p = from_matrix(nn, dd, [nn, dd, &v](int i, int j, int m) {
            return v[(size_t(i - 1) * nn + (j - 1)) * (dd + 2) + m];
        });
        return to_bidist(p);
    }
};

void set_pair(HydroOp& h, int i, int j, int k, const DiffExpr& e) {
    h.b(i, j, k) = e;
    h.b(j, i, k) = DiffExpr(0) - e;
}

// ---------------------------------------------------------------- order 0

HydroOp hyd_p1_0() {
    HydroOp h(2);
    h.g(1, 1) = DiffExpr(1);
    return h;
}

HydroOp hyd_p2_0() {
    HydroOp h(2);
    h.g(1, 1) = DiffExpr(1);
    set_pair(h, 1, 2, 2, P("-1/u1"));
    return h;
}

HydroOp hyd_rank0() {
    HydroOp h(3);
    set_pair(h, 1, 2, 3, DiffExpr(1));
    return h;
}

HydroOp hyd_rank1_1() {
    HydroOp h(3);
    h.g(1, 1) = DiffExpr(1);
    return h;
}

HydroOp hyd_rank1_2() {
    HydroOp h = hyd_rank1_1();
    set_pair(h, 1, 2, 3, DiffExpr(1));
    return h;
}

HydroOp hyd_rank1_3() {
    HydroOp h = hyd_rank1_1();
    set_pair(h, 1, 3, 3, P("-1/u1"));
    return h;
}

HydroOp hyd_rank1_4() {
    HydroOp h = hyd_rank1_1();
    set_pair(h, 1, 2, 2, P("-1/u1"));
    set_pair(h, 1, 3, 3, P("-1/u1"));
    return h;
}

HydroOp hyd_rank2_base() {
    HydroOp h(3);
    h.g(1, 2) = h.g(2, 1) = DiffExpr(1);
    return h;
}

HydroOp hyd_rank2_1() { return hyd_rank2_base(); }

HydroOp hyd_rank2_2() {
    HydroOp h = hyd_rank2_base();
    set_pair(h, 1, 3, 3, P("-1/u2"));
    return h;
}

HydroOp hyd_rank2_3() {
    HydroOp h = hyd_rank2_base();
    set_pair(h, 1, 3, 3, P("1/(u3*u1-u2)"));
    set_pair(h, 2, 3, 3, P("-u3/(u3*u1-u2)"));
    return h;
}

HydroOp hyd_rank2c_base() {
    HydroOp h(3);
    h.g(1, 1) = h.g(2, 2) = DiffExpr(1);
    return h;
}

HydroOp hyd_rank2c_1() { return hyd_rank2c_base(); }

HydroOp hyd_rank2c_2() {
    HydroOp h = hyd_rank2c_base();
    set_pair(h, 2, 3, 3, P("-1/u2"));
    return h;
}

HydroOp hyd_rank2c_3() {
    HydroOp h = hyd_rank2c_base();
    set_pair(h, 1, 3, 3, P("-u3/(u3*u1-u2)"));
    set_pair(h, 2, 3, 3, P("1/(u3*u1-u2)"));
    return h;
}

// mass / entropy / velocity densities; the pressure stays a formal
// two-variable function, no thermodynamic relation is imposed
HydroOp hyd_gas() {
    HydroOp h(3);
    h.g(1, 2) = h.g(2, 1) = DiffExpr(-1);
    set_pair(h, 1, 3, 3, P("1/u2"));
    return h;
}

} // namespace

// ------------------------------------------------- deformation families

BiOperator build_def1_p1(const DiffExpr& p, const DiffExpr& q,
                         const DiffExpr& r) {
    Display d(2, 1);
    DiffExpr g21 = p * U(2, 2) + q * U(2, 1) * U(2, 1);
    d.at(1, 2, 0) = DiffExpr(0) - g21;
    d.at(2, 1, 0) = g21;
    d.at(2, 2, 1) = r * U(2, 1);
    d.at(2, 2, 0) = total_x(r * U(2, 1)) * fr(1, 2);
    return d.op();
}

BiOperator build_def1_p1_general(const DiffExpr& A, const DiffExpr& B112,
                                 const DiffExpr& B212, const DiffExpr& p,
                                 const DiffExpr& q, const DiffExpr& r) {
    Display d(2, 1);
    DiffExpr u1x = U(1, 1), u2x = U(2, 1), u2xx = U(2, 2);
    d.at(1, 2, 2) = DiffExpr(0) - A;
    d.at(2, 1, 2) = A;
    d.at(1, 1, 1) = B112 * u2x;
    d.at(1, 2, 1) = (B212 - dk(A, 2)) * u2x - total_x(A);
    d.at(2, 1, 1) = dk(A, 1) * u1x + B212 * u2x;
    d.at(2, 2, 1) = r * u2x;
    d.at(1, 1, 0) = total_x(B112 * u2x) * fr(1, 2);
    d.at(1, 2, 0) =
        total_x((B212 - dk(A, 2)) * u2x) - p * u2xx - q * u2x * u2x;
    d.at(2, 1, 0) = p * u2xx + q * u2x * u2x;
    d.at(2, 2, 0) = total_x(r * u2x) * fr(1, 2);
    return d.op();
}

BiOperator build_def1_p2(const DiffExpr& e, const DiffExpr& g,
                         const DiffExpr& h, const DiffExpr& l,
                         const DiffExpr& m, const DiffExpr& n,
                         const DiffExpr& p, const DiffExpr& q) {
    Display d(2, 2);
    DiffExpr u1 = U(1), u1x = U(1, 1);
    DiffExpr u2x = U(2, 1), u2xx = U(2, 2), u2xxx = U(2, 3);
    DiffExpr ep = dk(e, 2);
    d.at(2, 2, 3) = e;
    d.at(2, 2, 2) = fr(3, 2) * ep * u2x;
    DiffExpr gam22 = g * u2xx + h * u2x * u2x;
    d.at(2, 2, 1) = gam22;
    DiffExpr eta12 = (2 * p * p * u1 - l) * u2xxx + p * q * u1x * u2x * u2x +
                     p * p * u1x * u2xx +
                     (2 * u1 * (p * dk(q, 2) + q * q) - n) * expr_pow(u2x, 3) +
                     (2 * p * u1 * (3 * q + dk(p, 2)) - m) * u2x * u2xx;
    d.at(1, 2, 0) = eta12;
    d.at(2, 1, 0) = DiffExpr(0) - eta12;
    d.at(2, 2, 0) =
        total_x(gam22) * fr(1, 2) - total_x(total_x(ep * u2x)) * fr(1, 4);
    return d.op();
}

BiOperator build_def1_p2_swapped(const DiffExpr& e, const DiffExpr& g,
                                 const DiffExpr& h, const DiffExpr& l,
                                 const DiffExpr& m, const DiffExpr& n,
                                 const DiffExpr& p, const DiffExpr& q) {
    // the rejected reading of the (2,2) d-coefficient: quadratic and
    // second-derivative slots exchanged, delta^0 slot kept as displayed
    Display d(2, 2);
    DiffExpr u1 = U(1), u1x = U(1, 1);
    DiffExpr u2x = U(2, 1), u2xx = U(2, 2), u2xxx = U(2, 3);
    DiffExpr ep = dk(e, 2);
    d.at(2, 2, 3) = e;
    d.at(2, 2, 2) = fr(3, 2) * ep * u2x;
    d.at(2, 2, 1) = h * u2xx + g * u2x * u2x;
    DiffExpr eta12 = (2 * p * p * u1 - l) * u2xxx + p * q * u1x * u2x * u2x +
                     p * p * u1x * u2xx +
                     (2 * u1 * (p * dk(q, 2) + q * q) - n) * expr_pow(u2x, 3) +
                     (2 * p * u1 * (3 * q + dk(p, 2)) - m) * u2x * u2xx;
    d.at(1, 2, 0) = eta12;
    d.at(2, 1, 0) = DiffExpr(0) - eta12;
    d.at(2, 2, 0) = (g * fr(1, 2) - ep * fr(1, 4)) * u2xxx +
                    (dk(g, 2) * fr(1, 2) + h - fr(3, 4) * dk(ep, 2)) * u2x * u2xx +
                    (dk(h, 2) * fr(1, 2) - fr(1, 4) * dk(dk(ep, 2), 2)) *
                        expr_pow(u2x, 3);
    return d.op();
}

BiOperator build_def2_p1(const DiffExpr& r, const DiffExpr& s) {
    Display d(2, 1);
    DiffExpr i3 = expr_pow(U(1), -3);
    DiffExpr u2x = U(2, 1);
    DiffExpr w = r * i3 * u2x;
    d.at(2, 2, 1) = w;
    d.at(2, 2, 0) = total_x(w) * fr(1, 2);
    DiffExpr g12 = s * i3 * u2x * u2x;
    d.at(1, 2, 0) = DiffExpr(0) - g12;
    d.at(2, 1, 0) = g12;
    return d.op();
}

BiOperator build_def2_p1_general(const DiffExpr& A, const DiffExpr& B112,
                                 const DiffExpr& B212, const DiffExpr& r,
                                 const DiffExpr& s) {
    Display d(2, 1);
    DiffExpr u1 = U(1), u1x = U(1, 1), u1xx = U(1, 2);
    DiffExpr u2x = U(2, 1), u2xx = U(2, 2);
    DiffExpr i3 = expr_pow(u1, -3);
    d.at(1, 2, 2) = DiffExpr(0) - A;
    d.at(2, 1, 2) = A;
    d.at(1, 1, 1) = B112 * u2x;
    d.at(1, 2, 1) = DiffExpr(0) - dk(A, 1) * u1x + (B212 - 2 * dk(A, 2)) * u2x;
    d.at(2, 1, 1) = dk(A, 1) * u1x + B212 * u2x;
    d.at(2, 2, 1) = (r * i3 - 2 * A / u1) * u2x;
    d.at(1, 1, 0) = (B112 * u2xx + dk(B112, 1) * u1x * u2x +
                     dk(B112, 2) * u2x * u2x) *
                    fr(1, 2);
    d.at(1, 2, 0) = dk(A, 1) / u1 * u1x * u1x +
                    (dk(B212, 1) - dk(dk(A, 1), 2) + B212 / u1) * u1x * u2x +
                    A / u1 * u1xx + (B212 - dk(A, 2)) * u2xx +
                    (dk(B212, 2) - dk(dk(A, 2), 2) - B112 / (2 * u1) - s * i3) *
                        u2x * u2x;
    d.at(2, 1, 0) = (B112 / (2 * u1) + s * i3) * u2x * u2x -
                    dk(A, 1) / u1 * u1x * u1x - B212 / u1 * u1x * u2x -
                    A / u1 * u1xx;
    d.at(2, 2, 0) =
        (A * expr_pow(u1, -2) - dk(A, 1) / u1 -
         3 * r / (2 * expr_pow(u1, 4))) *
            u1x * u2x +
        (r * i3 * fr(1, 2) - A / u1) * u2xx +
        (dk(r, 2) * i3 * fr(1, 2) - dk(A, 2) / u1) * u2x * u2x;
    return d.op();
}

BiOperator build_def2_p2(const DiffExpr& r, const DiffExpr& s,
                         const DiffExpr& p) {
    Display d(2, 2);
    DiffExpr u1 = U(1), u1x = U(1, 1), u1xx = U(1, 2), u1xxx = U(1, 3);
    DiffExpr u2x = U(2, 1), u2xx = U(2, 2), u2xxx = U(2, 3);
    DiffExpr r1 = dk(r, 2), r2 = dk(r1, 2), r3 = dk(r2, 2);
    DiffExpr s1 = dk(s, 2), p1 = dk(p, 2);
    DiffExpr i4 = expr_pow(u1, -4), i5 = expr_pow(u1, -5);
    DiffExpr i6 = expr_pow(u1, -6), i7 = expr_pow(u1, -7);
    d.at(2, 2, 3) = r * r * i4 * fr(1, 2);
    d.at(2, 2, 2) = fr(3, 2) * r * r1 * i4 * u2x - 3 * r * r * i5 * u1x;
    DiffExpr g12 = fr(19, 6) * s * r * i5 * (u1 * u2xx - u1x * u2x);
    d.at(1, 2, 1) = g12;
    d.at(2, 1, 1) = g12;
    d.at(2, 2, 1) = fr(15, 2) * r * r * i6 * u1x * u1x -
                    2 * r * r * i5 * u1xx -
                    (fr(9, 2) * r * r1 + p) * i5 * u1x * u2x + p * i4 * u2xx;
    d.at(1, 2, 0) = fr(5, 2) * s * r * i4 * u2xxx -
                    fr(5, 2) * s * r * i5 * u1xx * u2x -
                    fr(32, 3) * s * r * i5 * u1x * u2xx +
                    (3 * s * r1 + s1 * r) * i4 * u2x * u2xx +
                    fr(32, 3) * s * r * i6 * u1x * u1x * u2x -
                    (3 * s * r1 + s1 * r) * i5 * u1x * u2x * u2x -
                    2 * s * s * i5 * expr_pow(u2x, 3);
    d.at(2, 1, 0) = fr(2, 3) * s * r * i4 * u2xxx -
                    fr(2, 3) * s * r * i5 * u1xx * u2x -
                    fr(31, 6) * s * r * i5 * u1x * u2xx +
                    fr(1, 6) * (13 * s1 * r + s * r1) * i4 * u2x * u2xx +
                    fr(31, 6) * s * r * i6 * u1x * u1x * u2x -
                    fr(1, 6) * (13 * s1 * r + s * r1) * i5 * u1x * u2x * u2x +
                    2 * s * s * i5 * expr_pow(u2x, 3);
    d.at(2, 2, 0) =
        fr(1, 2) * i5 * (fr(3, 2) * r * r1 - 5 * p) * u1x * u2xx -
        fr(15, 2) * r * r * i7 * expr_pow(u1x, 3) -
        fr(1, 2) * i5 * (fr(5, 2) * r * r1 + p) * u1xx * u2x +
        fr(1, 2) * i4 * (p1 - fr(3, 2) * (r1 * r1 + r * r2)) * u2x * u2xx +
        fr(5, 2) * i6 * (fr(3, 2) * r * r1 + p) * u1x * u1x * u2x +
        fr(1, 2) * i4 * (p - fr(1, 2) * r * r1) * u2xxx -
        fr(1, 2) * r * r * i5 * u1xxx -
        fr(1, 4) * i4 * (3 * r1 * r2 + r * r3) * expr_pow(u2x, 3) +
        5 * r * r * i6 * u1x * u1xx -
        fr(1, 2) * i5 * (p1 - fr(3, 2) * (r1 * r1 + r * r2)) * u1x * u2x *
            u2x;
    return d.op();
}

BiOperator build_def3_p1(const DiffExpr& a, const DiffExpr& r,
                         const DiffExpr& s, const DiffExpr& b112,
                         const DiffExpr& b212, const DiffExpr& b221) {
    Display d(3, 1);
    DiffExpr u1x = U(1, 1), u2x = U(2, 1), u3x = U(3, 1);
    DiffExpr u1xx = U(1, 2), u2xx = U(2, 2), u3xx = U(3, 2);
    d.at(1, 2, 2) = DiffExpr(0) - a;
    d.at(2, 1, 2) = a;
    DiffExpr b13 = (b212 + dk(s, 2) + dk(r, 2)) * fr(1, 2) * u3x;
    DiffExpr b23 = DiffExpr(0) - (dk(s, 1) + dk(r, 1) * fr(1, 2)) * u3x;
    d.at(1, 1, 1) = (2 * dk(a, 2) - b212 - dk(s, 2) - dk(r, 2)) * u1x +
                    b112 * u2x;
    d.at(1, 2, 1) = (dk(s, 1) - 2 * dk(a, 1)) * u1x +
                    (b212 - 2 * dk(a, 2)) * u2x - 2 * dk(a, 3) * u3x;
    d.at(1, 3, 1) = b13;
    d.at(2, 1, 1) = dk(s, 1) * u1x + b212 * u2x;
    d.at(2, 2, 1) = b221 * u1x + dk(r, 1) * u2x;
    d.at(2, 3, 1) = b23;
    d.at(3, 1, 1) = b13;
    d.at(3, 2, 1) = b23;
    d.at(1, 1, 0) =
        (dk(a, 2) - (b212 + dk(s, 2) + dk(r, 2)) * fr(1, 2)) * u1xx +
        (dk(dk(a, 2), 1) -
         (dk(b212, 1) + dk(dk(s, 2), 1) + dk(dk(r, 2), 1)) * fr(1, 2)) *
            u1x * u1x +
        (dk(dk(a, 2), 3) -
         (dk(b212, 3) + dk(dk(s, 2), 3) + dk(dk(r, 2), 3)) * fr(1, 2)) *
            u1x * u3x +
        dk(b112, 3) * fr(1, 2) * u2x * u3x + b112 * fr(1, 2) * u2xx +
        (dk(dk(a, 2), 2) -
         (dk(b212, 2) + dk(dk(r, 2), 2) + dk(dk(s, 2), 2) - dk(b112, 1)) *
             fr(1, 2)) *
            u1x * u2x +
        dk(b112, 2) * fr(1, 2) * u2x * u2x;
    d.at(1, 2, 0) =
        ((dk(dk(s, 2), 2) + dk(dk(r, 2), 2) + 3 * dk(b212, 2) -
          dk(b112, 1)) *
             fr(1, 4) -
         dk(dk(a, 2), 2) * fr(1, 2)) *
            u2x * u2x +
        (dk(dk(s, 1), 3) - 2 * dk(dk(a, 1), 3)) * u1x * u3x +
        ((3 * dk(b212, 1) + 3 * dk(dk(s, 1), 2)) * fr(1, 2) +
         dk(dk(r, 1), 2) - 2 * dk(dk(a, 1), 2)) *
            u1x * u2x +
        (dk(b212, 3) - dk(dk(a, 2), 3)) * u2x * u3x +
        (fr(3, 2) * dk(dk(s, 1), 1) +
         (dk(b221, 2) + dk(dk(r, 1), 1)) * fr(1, 4) - dk(dk(a, 1), 1)) *
            u1x * u1x +
        (b212 - dk(a, 2)) * u2xx - dk(a, 3) * u3xx +
        (dk(s, 1) - dk(a, 1)) * u1xx - dk(dk(a, 3), 3) * u3x * u3x;
    d.at(1, 3, 0) =
        (dk(s, 2) + dk(r, 2)) * u3xx +
        (dk(b212, 1) - dk(dk(s, 1), 2)) * fr(1, 2) * u1x * u3x +
        (dk(b212, 3) + dk(dk(s, 2), 3) + dk(dk(r, 2), 3)) * fr(1, 2) * u3x *
            u3x;
    d.at(2, 1, 0) =
        ((dk(b212, 2) + dk(b112, 1) - dk(dk(s, 2), 2) - dk(dk(r, 2), 2)) *
             fr(1, 4) -
         dk(dk(a, 2), 2) * fr(1, 2)) *
            u2x * u2x -
        ((dk(b221, 2) + dk(dk(r, 1), 1)) * fr(1, 4) +
         dk(dk(s, 1), 1) * fr(1, 2)) *
            u1x * u1x -
        ((dk(b212, 1) + dk(dk(s, 1), 2)) * fr(1, 2) + dk(dk(r, 1), 2)) * u1x *
            u2x -
        dk(dk(a, 2), 3) * u2x * u3x;
    d.at(2, 2, 0) =
        b221 * fr(1, 2) * u1xx + dk(r, 1) * fr(1, 2) * u2xx +
        dk(b221, 3) * fr(1, 2) * u1x * u3x +
        (dk(b221, 2) + dk(dk(r, 1), 1)) * fr(1, 2) * u1x * u2x +
        dk(dk(r, 1), 3) * fr(1, 2) * u2x * u3x +
        dk(b221, 1) * fr(1, 2) * u1x * u1x +
        dk(dk(r, 1), 2) * fr(1, 2) * u2x * u2x;
    d.at(2, 3, 0) =
        (dk(b212, 1) - dk(dk(s, 1), 2)) * fr(1, 2) * u2x * u3x -
        (dk(dk(s, 1), 3) + dk(dk(r, 1), 3) * fr(1, 2)) * u3x * u3x -
        (dk(s, 1) + dk(r, 1)) * u3xx;
    d.at(3, 1, 0) =
        (b212 - dk(s, 2) - dk(r, 2)) * fr(1, 2) * u3xx +
        (dk(dk(s, 1), 2) + dk(dk(r, 1), 2) * fr(1, 2)) * u1x * u3x +
        (dk(b212, 2) + dk(dk(s, 2), 2) + dk(dk(r, 2), 2)) * fr(1, 2) * u2x *
            u3x;
    d.at(3, 2, 0) =
        dk(r, 1) * fr(1, 2) * u3xx -
        (dk(dk(s, 1), 1) + dk(dk(r, 1), 1) * fr(1, 2)) * u1x * u3x -
        (dk(b212, 1) + dk(dk(s, 1), 2) + dk(dk(r, 1), 2)) * fr(1, 2) * u2x *
            u3x;
    return d.op();
}

namespace {

BiOperator build_def4_p1() {
    auto f = [](const std::string& nm) { return func(nm, {2, 3}); };
    DiffExpr a = f("a");
    DiffExpr u2x = U(2, 1), u3x = U(3, 1);
    DiffExpr u2xx = U(2, 2), u3xx = U(3, 2);
    auto beta = [&](int i, int j) {
        std::string ij = std::to_string(i) + std::to_string(j);
        return f("b" + ij + "_2") * u2x + f("b" + ij + "_3") * u3x;
    };
    auto gamma = [&](int i, int j) {
        std::string ij = std::to_string(i) + std::to_string(j);
        return f("c" + ij + "_2") * u2xx + f("c" + ij + "_3") * u3xx +
               f("e" + ij + "_22") * u2x * u2x +
               f("e" + ij + "_23") * u2x * u3x +
               f("e" + ij + "_33") * u3x * u3x;
    };
    Display d(3, 1);
    d.at(2, 3, 2) = DiffExpr(0) - a;
    d.at(3, 2, 2) = a;
    DiffExpr be22 = beta(2, 2), be32 = beta(3, 2), be33 = beta(3, 3);
    DiffExpr be23 = be32 - 2 * total_x(a);
    d.at(2, 2, 1) = be22;
    d.at(2, 3, 1) = be23;
    d.at(3, 2, 1) = be32;
    d.at(3, 3, 1) = be33;
    DiffExpr g21 = gamma(2, 1), g31 = gamma(3, 1), g32 = gamma(3, 2);
    DiffExpr g23 = total_x(be32) - total_x(total_x(a)) - g32;
    d.at(1, 2, 0) = DiffExpr(0) - g21;
    d.at(1, 3, 0) = DiffExpr(0) - g31;
    d.at(2, 1, 0) = g21;
    d.at(3, 1, 0) = g31;
    d.at(2, 3, 0) = g23;
    d.at(3, 2, 0) = g32;
    d.at(2, 2, 0) = total_x(be22) * fr(1, 2);
    d.at(3, 3, 0) = total_x(be33) * fr(1, 2);
    return d.op();
}

} // namespace

BiOperator build_def5_p1(const DiffExpr& b, const DiffExpr& c21,
                         const DiffExpr& c31, const DiffExpr& c32,
                         const DiffExpr& e21, const DiffExpr& e31,
                         const DiffExpr& e32) {
    Display d(3, 1);
    DiffExpr u3x = U(3, 1), u3xx = U(3, 2);
    DiffExpr be = b * u3x;
    d.at(3, 3, 1) = be;
    d.at(3, 3, 0) = total_x(be) * fr(1, 2);
    auto gamma = [&](const DiffExpr& e_, const DiffExpr& c_) {
        return e_ * u3x * u3x + c_ * u3xx;
    };
    DiffExpr g21 = gamma(e21, c21), g31 = gamma(e31, c31),
             g32 = gamma(e32, c32);
    d.at(1, 2, 0) = DiffExpr(0) - g21;
    d.at(2, 1, 0) = g21;
    d.at(1, 3, 0) = DiffExpr(0) - g31;
    d.at(3, 1, 0) = g31;
    d.at(2, 3, 0) = DiffExpr(0) - g32;
    d.at(3, 2, 0) = g32;
    return d.op();
}

// -------------------------------------------------------------- registry

namespace {

struct Maker {
    int n = 0, order = 0;
    std::string base, note;
    std::function<HydroOp()> hyd;
    std::function<BiOperator()> biv;
    std::function<BiOperator()> partner;
};

DiffExpr f2(const std::string& nm) { return func(nm, {2}); }
DiffExpr f3(const std::string& nm) { return func(nm, {3}); }
DiffExpr f12(const std::string& nm) { return func(nm, {1, 2}); }
DiffExpr f123(const std::string& nm) { return func(nm, {1, 2, 3}); }

std::map<std::string, Maker> build_makers() {
    std::map<std::string, Maker> m;
    auto hydro = [&](const std::string& name, const std::string& note,
                     std::function<HydroOp()> h, int n) {
        Maker mk;
        mk.n = n;
        mk.order = 0;
        mk.note = note;
        mk.hyd = std::move(h);
        m[name] = std::move(mk);
    };
    hydro("P1_0", "rank-1 two-component constant form", hyd_p1_0, 2);
    hydro("P2_0", "rank-1 two-component form with b = -1/u1", hyd_p2_0, 2);
    hydro("RANK0", "rank-0 three-component form", hyd_rank0, 3);
    hydro("RANK1_1", "rank-1 constant form", hyd_rank1_1, 3);
    hydro("RANK1_2", "rank-1 form with constant b", hyd_rank1_2, 3);
    hydro("RANK1_3", "rank-1 form with b133 = -1/u1", hyd_rank1_3, 3);
    hydro("RANK1_4", "rank-1 form with b122 = b133 = -1/u1", hyd_rank1_4, 3);
    hydro("RANK2_1", "rank-2 antidiagonal constant form", hyd_rank2_1, 3);
    hydro("RANK2_2", "rank-2 form with b133 = -1/u2", hyd_rank2_2, 3);
    hydro("RANK2_3", "rank-2 form with b = 1/(u3 u1 - u2) entries",
          hyd_rank2_3, 3);
    hydro("RANK2_COMPLEX_1", "rank-2 diagonal constant form", hyd_rank2c_1, 3);
    hydro("RANK2_COMPLEX_2", "rank-2 diagonal form with b233 = -1/u2",
          hyd_rank2c_2, 3);
    hydro("RANK2_COMPLEX_3",
          "rank-2 diagonal form with b = 1/(u3 u1 - u2) entries", hyd_rank2c_3,
          3);
    hydro("P3_0", "base structure of the rank-0 deformation family",
          hyd_rank0, 3);
    hydro("P4_0", "base structure of the rank-1 deformation family",
          hyd_rank1_1, 3);
    hydro("P5_0", "base structure of the rank-2 deformation family",
          hyd_rank2c_1, 3);
    hydro("GAS_DYNAMICS", "one-dimensional gas dynamics operator", hyd_gas, 3);

    Maker mk;

    mk = Maker{};
    mk.n = 2;
    mk.order = 1;
    mk.base = "P1_0";
    mk.note = "reduced first-order deformation of P1_0; parameters p,q,r";
    mk.biv = [] { return build_def1_p1(f2("p"), f2("q"), f2("r")); };
    m["DEF1_P1"] = mk;

    mk = Maker{};
    mk.n = 2;
    mk.order = 1;
    mk.base = "P1_0";
    mk.note = "first-order deformation of P1_0 before the vector-field "
              "reduction; extra parameters A, B112, B212";
    mk.biv = [] {
        return build_def1_p1_general(f12("A"), f12("B112"), f12("B212"),
                                     f2("p"), f2("q"), f2("r"));
    };
    m["DEF1_P1_GENERAL"] = mk;

    mk = Maker{};
    mk.n = 2;
    mk.order = 2;
    mk.base = "P1_0";
    mk.note = "reduced second-order deformation of P1_0; the first-order "
              "partner carries r = 0";
    mk.biv = [] {
        return build_def1_p2(f2("e"), f2("g"), f2("h"), f2("l"), f2("m"),
                             f2("n"), f2("p"), f2("q"));
    };
    mk.partner = [] { return build_def1_p1(f2("p"), f2("q"), DiffExpr(0)); };
    m["DEF1_P2"] = mk;

    mk = Maker{};
    mk.n = 2;
    mk.order = 2;
    mk.base = "P1_0";
    mk.note = "second-order deformation of P1_0 before the residual "
              "vector-field reduction; V shifts the m and n slots";
    mk.biv = [] {
        DiffExpr p = f2("p"), q = f2("q"), V = f2("V");
        DiffExpr V1 = dk(V, 2), V2 = dk(dk(V, 2), 2);
        return build_def1_p2(f2("e"), f2("g"), f2("h"), f2("l"),
                             f2("m") - 2 * p * V1, f2("n") - p * V2 - q * V1,
                             p, q);
    };
    mk.partner = [] { return build_def1_p1(f2("p"), f2("q"), DiffExpr(0)); };
    m["DEF1_P2_GENERAL"] = mk;

    mk = Maker{};
    mk.n = 2;
    mk.order = 1;
    mk.base = "P2_0";
    mk.note = "reduced first-order deformation of P2_0; parameters r,s";
    mk.biv = [] { return build_def2_p1(f2("r"), f2("s")); };
    m["DEF2_P1"] = mk;

    mk = Maker{};
    mk.n = 2;
    mk.order = 1;
    mk.base = "P2_0";
    mk.note = "first-order deformation of P2_0 before the vector-field "
              "reduction; extra parameters A, B112, B212";
    mk.biv = [] {
        return build_def2_p1_general(f12("A"), f12("B112"), f12("B212"),
                                     f2("r"), f2("s"));
    };
    m["DEF2_P1_GENERAL"] = mk;

    mk = Maker{};
    mk.n = 2;
    mk.order = 2;
    mk.base = "P2_0";
    mk.note = "reduced second-order deformation of P2_0; parameters r,s,p";
    mk.biv = [] { return build_def2_p2(f2("r"), f2("s"), f2("p")); };
    mk.partner = [] { return build_def2_p1(f2("r"), f2("s")); };
    m["DEF2_P2"] = mk;

    mk = Maker{};
    mk.n = 3;
    mk.order = 1;
    mk.base = "P3_0";
    mk.note = "reduced first-order deformation of the rank-0 structure";
    mk.biv = [] {
        return build_def3_p1(f123("a"), f123("r"), f123("s"), f123("b112"),
                             f123("b212"), f123("b221"));
    };
    m["DEF3_P1"] = mk;

    mk = Maker{};
    mk.n = 3;
    mk.order = 1;
    mk.base = "P4_0";
    mk.note = "reduced first-order deformation of the rank-1 structure";
    mk.biv = build_def4_p1;
    m["DEF4_P1"] = mk;

    mk = Maker{};
    mk.n = 3;
    mk.order = 1;
    mk.base = "P5_0";
    mk.note = "reduced first-order deformation of the rank-2 structure";
    mk.biv = [] {
        return build_def5_p1(f3("b"), f3("c21"), f3("c31"), f3("c32"),
                             f3("e21"), f3("e31"), f3("e32"));
    };
    m["DEF5_P1"] = mk;

    return m;
}

const std::map<std::string, Maker>& makers() {
    static const std::map<std::string, Maker> m = build_makers();
    return m;
}

const Maker& maker(const std::string& name) {
    auto it = makers().find(name);
    if (it == makers().end())
        throw std::invalid_argument("unknown catalog entry: " + name);
    return it->second;
}

} // namespace

// --------------------------------------------------------------- queries

std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (auto& [k, v] : makers()) out.push_back(k);
    return out;
}

bool catalog_has(const std::string& name) { return makers().count(name) > 0; }

CatalogEntry catalog_entry(const std::string& name) {
    const Maker& mk = maker(name);
    CatalogEntry e;
    e.name = name;
    e.n = mk.n;
    e.order = mk.order;
    e.base = mk.base;
    e.note = mk.note;
    e.op = mk.order == 0 ? to_bidist(mk.hyd()) : mk.biv();
    return e;
}

std::optional<HydroOp> catalog_hydro(const std::string& name) {
    const Maker& mk = maker(name);
    if (mk.order != 0) return std::nullopt;
    return mk.hyd();
}

std::optional<BiOperator> catalog_partner(const std::string& name) {
    const Maker& mk = maker(name);
    if (!mk.partner) return std::nullopt;
    return mk.partner();
}

std::vector<std::string> catalog_parameters(const std::string& name) {
    CatalogEntry e = catalog_entry(name);
    std::set<std::string> seen;
    auto scan = [&](const Poly& p) {
        for (AtomId id : poly_atoms(p)) {
            const Atom& a = atom(id);
            if (!a.is_jet) seen.insert(a.name);
        }
    };
    for (const BiDist& d : e.op.comp)
        for (auto& [ord, c] : d.coeffs) {
            scan(c.num);
            scan(c.den);
        }
    return {seen.begin(), seen.end()};
}

DeformBivector extract_deform(const BiOperator& p, int degree) {
    return from_matrix(p.n, degree, [&p](int i, int j, int m) {
        auto it = p.at(i, j).coeffs.find(m);
        return it == p.at(i, j).coeffs.end() ? DiffExpr(0) : it->second;
    });
}

// --------------------------------------------------------- verification

CheckReport verify_entry(const std::string& name) {
    const Maker& mk = maker(name);
    CheckReport rep;
    if (mk.order == 0) {
        HydroOp h = mk.hyd();
        BiOperator op = to_bidist(h);
        rep.add(name + ": skew", is_zero(skew_defect(op)));
        rep.add(name + ": jacobi", jacobi_defect(op).is_zero());
        rep.add(name + ": flatness conditions", grinberg_holds(h));
        return rep;
    }
    BiOperator op = mk.biv();
    BiOperator p0 = to_bidist(maker(mk.base).hyd());
    rep.add(name + ": skew", is_zero(skew_defect(op)));
    if (mk.order == 1) {
        rep.add(name + ": first-order compatibility",
                schouten(p0, op).is_zero());
    } else {
        rep.add(name + ": second-order residual",
                order2_residual(p0, mk.partner(), op).is_zero());
    }
    return rep;
}

CheckReport verify_all_entries() {
    CheckReport rep;
    for (auto& [name, mk] : makers()) rep.merge(verify_entry(name));
    return rep;
}

namespace {

bool same_op(const BiOperator& a, const BiOperator& b) {
    return is_zero(a - b);
}

bool same_hydro(const HydroOp& a, const HydroOp& b) {
    if (a.n != b.n) return false;
    for (int i = 1; i <= a.n; ++i)
        for (int j = 1; j <= a.n; ++j) {
            if (!trig_reduce(a.g(i, j) - b.g(i, j)).is_zero()) return false;
            for (int k = 1; k <= a.n; ++k)
                if (!trig_reduce(a.b(i, j, k) - b.b(i, j, k)).is_zero())
                    return false;
        }
    return true;
}

} // namespace

CheckReport verify_reductions() {
    CheckReport rep;

    // order-1 reduction over the rank-1 two-component structure: a generic
    // degree-1 vector field absorbs the A, B112, B212 part of the family
    {
        DiffExpr X11 = f12("X11"), X12 = f12("X12");
        DiffExpr X21 = f12("X21"), X22 = f12("X22");
        VectorField X(2);
        X.at(1) = X11 * U(1, 1) + X12 * U(2, 1);
        X.at(2) = X21 * U(1, 1) + X22 * U(2, 1);
        BiOperator p0 = to_bidist(hyd_p1_0());
        DiffExpr p = f2("p"), q = f2("q"), r = f2("r");
        BiOperator gen = build_def1_p1_general(
            DiffExpr(0) - X21, 2 * (dk(X11, 2) - dk(X12, 1)),
            DiffExpr(0) - dk(X22, 1), p, q, r);
        rep.add("order-1 reduction over P1_0",
                same_op(gen - lie_derivative(X, p0), build_def1_p1(p, q, r)));
        VectorField Z0(2);
        rep.add("zero field leaves the family unchanged",
                same_op(gen - lie_derivative(Z0, p0), gen));
    }

    // order-1 reduction over the 1/u1 two-component structure
    {
        DiffExpr X11 = f12("X11"), X12 = f12("X12");
        DiffExpr X21 = f12("X21"), X22 = f12("X22");
        VectorField X(2);
        X.at(1) = X11 * U(1, 1) + X12 * U(2, 1);
        X.at(2) = X21 * U(1, 1) + X22 * U(2, 1);
        BiOperator p0 = to_bidist(hyd_p2_0());
        DiffExpr r = f2("r"), s = f2("s");
        DiffExpr u1 = U(1);
        BiOperator gen = build_def2_p1_general(
            DiffExpr(0) - X21, 2 * (dk(X11, 2) - dk(X12, 1) - X12 / u1),
            (X11 - X22) / u1 - dk(X22, 1), r, s);
        rep.add("order-1 reduction over P2_0",
                same_op(gen - lie_derivative(X, p0), build_def2_p1(r, s)));
    }

    // order-2 reduction over P1_0: the field pair (Y, Z) with Lie_Y P0 = 0
    // shifts the m and n parameters of the reduced second-order family
    {
        BiOperator p0 = to_bidist(hyd_p1_0());
        DiffExpr p = f2("p"), q = f2("q"), V = f2("V");
        DiffExpr e = f2("e"), g = f2("g"), h = f2("h"), l = f2("l");
        DiffExpr mm = f2("m"), nn = f2("n");
        DiffExpr V1 = dk(V, 2), V2 = dk(V1, 2);
        VectorField Y(2);
        Y.at(2) = V * U(2, 1);
        rep.add("the shift field preserves P1_0",
                is_zero(lie_derivative(Y, p0)));
        VectorField Z(2);
        Z.at(2) = DiffExpr(0) - p * V * U(1) * U(2, 2) -
                  q * V * U(1) * U(2, 1) * U(2, 1);
        BiOperator p1 = build_def1_p1(p, q, DiffExpr(0));
        BiOperator act = lie_derivative(Y, p1) + lie_derivative(Z, p0);
        BiOperator gen = build_def1_p2(e, g, h, l, mm - 2 * p * V1,
                                       nn - p * V2 - q * V1, p, q);
        rep.add("order-2 shift over P1_0",
                same_op(gen, build_def1_p2(e, g, h, l, mm, nn, p, q) - act));
        // picking V' = m/(2p) kills the m slot exactly
        Atom va;
        va.is_jet = false;
        va.name = "Vm";
        va.deps = {2};
        va.deriv = {0};
        va.rule = FuncRule::custom;
        va.custom_derivs = {mm / (2 * p)};
        DiffExpr Vm = DiffExpr::from_poly(Poly::atom(intern(va)));
        DiffExpr m_eff = mm - 2 * p * dk(Vm, 2);
        rep.add("V with V' = m/(2p) removes the m slot", m_eff.is_zero());
        DiffExpr n_eff = nn - p * dk(dk(Vm, 2), 2) - q * dk(Vm, 2);
        VectorField Ym(2), Zm(2);
        Ym.at(2) = Vm * U(2, 1);
        Zm.at(2) = DiffExpr(0) - p * Vm * U(1) * U(2, 2) -
                   q * Vm * U(1) * U(2, 1) * U(2, 1);
        BiOperator actm = lie_derivative(Ym, p1) + lie_derivative(Zm, p0);
        rep.add("m-elimination over P1_0",
                same_op(build_def1_p2(e, g, h, l, mm, nn, p, q) - actm,
                        build_def1_p2(e, g, h, l, DiffExpr(0), n_eff, p, q)));
    }

    // order-2 shift over P2_0: a degree-2 field regenerates the n slot that
    // the reduced family drops
    {
        BiOperator p0 = to_bidist(hyd_p2_0());
        DiffExpr r = f2("r"), s = f2("s"), p = f2("p"), nn = f2("n");
        VectorField Z(2);
        Z.at(1) = DiffExpr(0) - nn * expr_pow(U(1), -2) * U(2, 1) * U(2, 1);
        BiOperator L = lie_derivative(Z, p0);
        BiOperator fam = build_def2_p2(r, s, p);
        BiOperator withn = fam - L;
        DeformBivector d0 = extract_deform(fam, 2);
        DeformBivector d1 = extract_deform(withn, 2);
        rep.add("n-slot regeneration over P2_0",
                (d1.N(2, 1, 2, 2, 2) - d0.N(2, 1, 2, 2, 2) -
                 nn * expr_pow(U(1), -4))
                    .is_zero());
        rep.add("n-shifted family still closes",
                order2_residual(p0, build_def2_p1(r, s), withn).is_zero());
    }

    // three-component eliminations: the generic degree-1 field reproduces
    // exactly the family slots that the reduced statements drop
    {
        VectorField X(3);
        std::vector<std::vector<DiffExpr>> Xc(4, std::vector<DiffExpr>(4));
        for (int i = 1; i <= 3; ++i) {
            DiffExpr xi;
            for (int k = 1; k <= 3; ++k) {
                Xc[i][k] =
                    f123("X" + std::to_string(i) + std::to_string(k));
                xi = xi + Xc[i][k] * U(k, 1);
            }
            X.at(i) = xi;
        }
        {
            BiOperator q = lie_derivative(X, to_bidist(hyd_rank0()));
            DeformBivector d = extract_deform(q, 1);
            CheckReport sub;
            sub.add("B113", (d.B(1, 1, 3) - 2 * Xc[1][2]).is_zero());
            sub.add("B213", (d.B(2, 1, 3) - (Xc[2][2] - Xc[1][1])).is_zero());
            sub.add("B223", (d.B(2, 2, 3) + 2 * Xc[2][1]).is_zero());
            sub.add("C211", (d.C(2, 1, 1) + Xc[3][1]).is_zero());
            sub.add("C212", (d.C(2, 1, 2) + Xc[3][2]).is_zero());
            sub.add("C213", (d.C(2, 1, 3) - (Xc[2][2] - Xc[3][3])).is_zero());
            sub.add("D2133", (d.D(2, 1, 3, 3) -
                              (dk(Xc[1][3], 1) + dk(Xc[2][3], 2) -
                               dk(Xc[1][1], 3) - dk(Xc[3][3], 3)))
                                 .is_zero());
            sub.add("D3133", (d.D(3, 1, 3, 3) - dk(Xc[3][3], 2)).is_zero());
            rep.add("rank-0 elimination slots", sub.pass());
        }
        {
            BiOperator q = lie_derivative(X, to_bidist(hyd_rank1_1()));
            DeformBivector d = extract_deform(q, 1);
            CheckReport sub;
            sub.add("A21", (d.A(2, 1) + Xc[2][1]).is_zero());
            sub.add("A31", (d.A(3, 1) + Xc[3][1]).is_zero());
            for (int i = 2; i <= 3; ++i)
                for (int k = 2; k <= 3; ++k)
                    sub.add("Bi1k",
                            (d.B(i, 1, k) + dk(Xc[i][k], 1)).is_zero());
            for (int k = 2; k <= 3; ++k)
                sub.add("B11k", (d.B(1, 1, k) -
                                 2 * (dk(Xc[1][1], k) - dk(Xc[1][k], 1)))
                                    .is_zero());
            rep.add("rank-1 elimination slots", sub.pass());
        }
    }

    // rank-2 family: the rotation-like field with f(u3) removes one of the
    // (2,1) slots
    {
        BiOperator p0 = to_bidist(hyd_rank2c_1());
        DiffExpr f = f3("f");
        VectorField X(3);
        X.at(1) = DiffExpr(0) - f * U(2) * U(3, 1);
        X.at(2) = f * U(1) * U(3, 1);
        BiOperator L = lie_derivative(X, p0);
        Display want(3, 1);
        DiffExpr w = dk(f, 3) * U(3, 1) * U(3, 1) + f * U(3, 2);
        want.at(1, 2, 0) = DiffExpr(0) - w;
        want.at(2, 1, 0) = w;
        rep.add("f-field action over the rank-2 structure",
                same_op(L, want.op()));
        DiffExpr b = f3("b"), c21 = f3("c21"), c31 = f3("c31");
        DiffExpr c32 = f3("c32"), e21 = f3("e21"), e31 = f3("e31");
        DiffExpr e32 = f3("e32");
        VectorField Xc21(3);
        Xc21.at(1) = DiffExpr(0) - c21 * U(2) * U(3, 1);
        Xc21.at(2) = c21 * U(1) * U(3, 1);
        rep.add("c21 elimination in the rank-2 family",
                same_op(build_def5_p1(b, c21, c31, c32, e21, e31, e32) -
                            lie_derivative(Xc21, p0),
                        build_def5_p1(b, DiffExpr(0), c31, c32,
                                      e21 - dk(c21, 3), e31, e32)));
    }

    return rep;
}

CheckReport verify_equivalences() {
    CheckReport rep;

    // exp rescale removes the constant antidiagonal-metric torsion
    {
        HydroOp src(3);
        src.g(1, 2) = src.g(2, 1) = DiffExpr(1);
        set_pair(src, 1, 2, 3, DiffExpr(1));
        DiffExpr E = func("E", {3}, FuncRule::exp);
        CoordChange ch(3);
        ch.fwd = {E * U(1), U(2) / E, U(3)};
        ch.inv = {U(1) / E, E * U(2), U(3)};
        check_consistent(ch);
        rep.add("exp rescale to the constant rank-2 form",
                same_hydro(push_hydro(src, ch), hyd_rank2_1()));
        rep.add("exp rescale is admissible", is_admissible(src, ch));
    }

    // rotation removes the constant diagonal-metric torsion
    {
        HydroOp src(3);
        src.g(1, 1) = src.g(2, 2) = DiffExpr(1);
        set_pair(src, 1, 2, 3, DiffExpr(1));
        DiffExpr c = func("w", {3}, FuncRule::cos);
        DiffExpr s = func("w", {3}, FuncRule::sin);
        CoordChange ch(3);
        ch.fwd = {c * U(1) + s * U(2), s * U(1) - c * U(2), U(3)};
        ch.inv = ch.fwd;
        check_consistent(ch);
        rep.add("rotation to the constant diagonal form",
                same_hydro(push_hydro(src, ch), hyd_rank2c_1()));
    }

    // a Gaussian-rational linear map exchanges the diagonal and
    // antidiagonal constant metrics
    {
        DiffExpr i = DiffExpr(Scalar::i());
        CoordChange ch(3);
        ch.fwd = {U(1) + i * U(2), (U(1) - i * U(2)) * fr(1, 2), U(3)};
        ch.inv = {(U(1) + 2 * U(2)) * fr(1, 2),
                  DiffExpr(0) - i * (U(1) - 2 * U(2)) * fr(1, 2), U(3)};
        check_consistent(ch);
        rep.add("complex rescale links the two rank-2 normal forms",
                same_hydro(push_hydro(hyd_rank2c_1(), ch), hyd_rank2_1()));
    }

    // shift reductions of the generic flat solutions
    {
        DiffExpr f = f2("f");
        HydroOp src(2);
        src.g(1, 1) = DiffExpr(1);
        set_pair(src, 1, 2, 2, expr_inv(f - U(1)));
        rep.add("generic two-component solution is flat",
                grinberg_holds(src));
        CoordChange ch(2);
        ch.fwd = {U(1) - f, U(2)};
        ch.inv = {U(1) + f, U(2)};
        check_consistent(ch);
        rep.add("shift to the 1/u1 two-component form",
                same_hydro(push_hydro(src, ch), hyd_p2_0()));
    }
    {
        DiffExpr F = func("F", {2, 3});
        HydroOp src(3);
        src.g(1, 1) = DiffExpr(1);
        set_pair(src, 1, 2, 2, expr_inv(F - U(1)));
        set_pair(src, 1, 3, 3, expr_inv(F - U(1)));
        CoordChange ch(3);
        ch.fwd = {U(1) - F, U(2), U(3)};
        ch.inv = {U(1) + F, U(2), U(3)};
        check_consistent(ch);
        rep.add("shift to the rank-1 1/u1 form",
                same_hydro(push_hydro(src, ch), hyd_rank1_4()));
    }
    {
        // rank-2 generic solution with vanishing third slot
        DiffExpr F = f3("F");
        DiffExpr den = expr_inv(F - U(2));
        HydroOp src(3);
        src.g(1, 2) = src.g(2, 1) = DiffExpr(1);
        set_pair(src, 1, 2, 3, dk(F, 3) * den);
        set_pair(src, 1, 3, 3, den);
        CoordChange ch(3);
        ch.fwd = {U(1), U(2) - F, U(3)};
        ch.inv = {U(1), U(2) + F, U(3)};
        check_consistent(ch);
        rep.add("shift to the rank-2 1/u2 form",
                same_hydro(push_hydro(src, ch), hyd_rank2_2()));
    }
    {
        // rank-2 generic solution with all three slots active, taken at the
        // identity reparametrization of u3
        DiffExpr V = f3("V"), F = f3("F");
        DiffExpr R = V + 2 * U(3) * dk(V, 3) + dk(F, 3);
        DiffExpr W = U(3) * V + F;
        DiffExpr den = expr_inv(U(3) * U(1) + F - U(2));
        HydroOp src(3);
        src.g(1, 2) = src.g(2, 1) = DiffExpr(1);
        set_pair(src, 1, 2, 3, R * den);
        set_pair(src, 1, 3, 3, den);
        set_pair(src, 2, 3, 3, DiffExpr(0) - U(3) * den);
        CoordChange ch(3);
        ch.fwd = {U(1) - V, U(2) - W, U(3)};
        ch.inv = {U(1) + V, U(2) + W, U(3)};
        check_consistent(ch);
        rep.add("shift to the rank-2 1/(u3 u1 - u2) form",
                same_hydro(push_hydro(src, ch), hyd_rank2_3()));
    }

    // parameter transport of the two-component deformation families under
    // a reparametrization of u2 (checked at a concrete rational map)
    {
        CoordChange ch(2);
        ch.fwd = {U(1), U(2) / (1 + U(2))};
        ch.inv = {U(1), U(2) / (1 - U(2))};
        check_consistent(ch);
        DiffExpr om = U(2) / (1 - U(2));
        DiffExpr om1 = expr_pow(1 - U(2), -2);
        DiffExpr om2 = 2 * expr_pow(1 - U(2), -3);
        auto comp = [&](const DiffExpr& f) {
            return substitute(f, {{2, om}});
        };
        DiffExpr p = f2("p"), q = f2("q"), r = f2("r"), s = f2("s");
        rep.add("parameter transport of the P1_0 family",
                same_op(push_bivector(build_def1_p1(p, q, r), ch),
                        build_def1_p1(comp(p),
                                      comp(p) * om2 / om1 + comp(q) * om1,
                                      comp(r) / om1)));
        rep.add("parameter transport of the P2_0 family",
                same_op(push_bivector(build_def2_p1(r, s), ch),
                        build_def2_p1(comp(r) / om1, comp(s) * om1)));
    }

    // parameter transport of the rank-2 family under a reparametrization
    // of u3
    {
        CoordChange ch(3);
        ch.fwd = {U(1), U(2), U(3) / (1 + U(3))};
        ch.inv = {U(1), U(2), U(3) / (1 - U(3))};
        check_consistent(ch);
        DiffExpr ph = U(3) / (1 - U(3));
        DiffExpr ph1 = expr_pow(1 - U(3), -2);
        DiffExpr ph2 = 2 * expr_pow(1 - U(3), -3);
        auto comp = [&](const DiffExpr& f) {
            return substitute(f, {{3, ph}});
        };
        DiffExpr b = f3("b"), c21 = f3("c21"), c31 = f3("c31");
        DiffExpr c32 = f3("c32"), e21 = f3("e21"), e31 = f3("e31");
        DiffExpr e32 = f3("e32");
        rep.add(
            "parameter transport of the P5_0 family",
            same_op(push_bivector(
                        build_def5_p1(b, c21, c31, c32, e21, e31, e32), ch),
                    build_def5_p1(
                        comp(b) / ph1, comp(c21) * ph1, comp(c31),
                        comp(c32),
                        comp(e21) * ph1 * ph1 + comp(c21) * ph2,
                        (comp(e31) * ph1 * ph1 + comp(c31) * ph2) / ph1,
                        (comp(e32) * ph1 * ph1 + comp(c32) * ph2) / ph1)));
    }

    // non-tensorial correction of the symbol under a product/quotient map
    {
        CoordChange ch(3);
        ch.fwd = {U(3) * U(1), U(2) / U(3), U(3)};
        ch.inv = {U(1) / U(3), U(2) * U(3), U(3)};
        check_consistent(ch);
        Tensor nt = nontensorial_part(hyd_rank2_1(), ch);
        rep.add("non-tensorial correction entry",
                (nt(2, 1, 3) - expr_inv(U(3))).is_zero());
    }

    return rep;
}

} // namespace hop
