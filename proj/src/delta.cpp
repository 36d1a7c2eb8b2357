#include "hop/delta.hpp"

#include "hop/config.hpp"

namespace hop {

Scalar binomial(int n, int k) {
    if (k < 0 || k > n) return Scalar(0);
    Int r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return Scalar(Rat(r));
}

bool BiDist::is_zero() const {
    for (auto& [m, c] : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

BiDist& BiDist::add(int order, const DiffExpr& c) {
    if (c.is_zero()) return *this;
    if (order > config().max_delta) throw CapError("delta order cap exceeded");
    auto it = coeffs.find(order);
    if (it == coeffs.end()) coeffs.emplace(order, c);
    else {
        it->second = it->second + c;
        if (it->second.is_zero()) coeffs.erase(it);
    }
    return *this;
}

bool BiDist::operator==(const BiDist& o) const {
    BiDist d = *this - o;
    return d.is_zero();
}

BiDist operator+(const BiDist& a, const BiDist& b) {
    BiDist r = a;
    for (auto& [m, c] : b.coeffs) r.add(m, c);
    return r;
}

BiDist operator-(const BiDist& a) {
    BiDist r;
    for (auto& [m, c] : a.coeffs) r.coeffs.emplace(m, -c);
    return r;
}

BiDist operator-(const BiDist& a, const BiDist& b) { return a + (-b); }

BiDist operator*(const BiDist& a, const DiffExpr& f) {
    BiDist r;
    for (auto& [m, c] : a.coeffs) r.add(m, c * f);
    return r;
}

BiDist mul_at_y(const DiffExpr& f, int s) {
    BiDist r;
    DiffExpr df = f;
    for (int m = 0; m <= s; ++m) {
        r.add(s - m, binomial(s, m) * df);
        if (m < s) df = total_x(df);
    }
    return r;
}

BiDist mul_at_y(const DiffExpr& f, const BiDist& d) {
    BiDist r;
    for (auto& [s, c] : d.coeffs) {
        BiDist t = mul_at_y(f, s);
        for (auto& [m, tc] : t.coeffs) r.add(m, tc * c);
    }
    return r;
}

BiDist to_second_point(const BiDist& d) {
    BiDist r;
    for (auto& [m, c] : d.coeffs) {
        DiffExpr dc = c;
        for (int k = 0; k <= m; ++k) {
            Scalar sign = (k % 2) ? Scalar(-1) : Scalar(1);
            r.add(m - k, DiffExpr(sign) * binomial(m, k) * dc);
            if (k < m) dc = total_x(dc);
        }
    }
    return r;
}

BiDist flip(const BiDist& d) {
    BiDist r;
    for (auto& [m, c] : d.coeffs) {
        DiffExpr signed_c = (m % 2) ? -c : c;
        r = r + mul_at_y(signed_c, m);
    }
    return r;
}

BiDist dx(const BiDist& d) {
    BiDist r;
    for (auto& [m, c] : d.coeffs) {
        r.add(m, total_x(c));
        r.add(m + 1, c);
    }
    return r;
}

BiDist dy(const BiDist& d) {
    BiDist r;
    for (auto& [m, c] : d.coeffs) r.add(m + 1, -c);
    return r;
}

bool TriDist::is_zero() const {
    for (auto& [mn, c] : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

TriDist& TriDist::add(int m, int n, const DiffExpr& c) {
    if (c.is_zero()) return *this;
    if (m > config().max_delta || n > config().max_delta)
        throw CapError("delta order cap exceeded");
    auto key = std::make_pair(m, n);
    auto it = coeffs.find(key);
    if (it == coeffs.end()) coeffs.emplace(key, c);
    else {
        it->second = it->second + c;
        if (it->second.is_zero()) coeffs.erase(it);
    }
    return *this;
}

TriDist operator+(const TriDist& a, const TriDist& b) {
    TriDist r = a;
    for (auto& [mn, c] : b.coeffs) r.add(mn.first, mn.second, c);
    return r;
}

TriDist operator-(const TriDist& a, const TriDist& b) {
    TriDist r = a;
    for (auto& [mn, c] : b.coeffs) r.add(mn.first, mn.second, -c);
    return r;
}

namespace {

struct DFac {
    int ord;
    Pt a, b; // delta^(ord)(a - b)
};

// orient so that the earlier point (X < Y < Z) comes first
void orient(DFac& f, Scalar& sign) {
    if (int(f.a) > int(f.b)) {
        std::swap(f.a, f.b);
        if (f.ord % 2) sign = -sign;
    }
}

bool is_pair(const DFac& f, Pt a, Pt b) { return f.a == a && f.b == b; }

} // namespace

TriDist normalize(const RawTri& t) {
    TriDist out;
    if (t.coeff.is_zero()) return out;
    Scalar sign(1);
    DFac f1{t.o1, t.a1, t.b1}, f2{t.o2, t.a2, t.b2};
    orient(f1, sign);
    orient(f2, sign);

    // stage 1: eliminate any delta(y - z) factor against the other one
    // d^(a)(y-z) d^(m)(x-y) = sum_k C(m,k) d^(a+k)(x-z) d^(m-k)(x-y)
    // d^(a)(y-z) d^(n)(x-z) = (-1)^a sum_k C(n,k) d^(a+k)(x-y) d^(n-k)(x-z)
    std::vector<std::tuple<Scalar, int, int>> pieces; // (scale, ord_xy, ord_xz)
    auto push_stage2 = [&](Scalar sc, const DFac& u, const DFac& v) {
        // u, v are (X,Y) and (X,Z) in some order
        int mxy = -1, mxz = -1;
        for (const DFac* d : {&u, &v}) {
            if (is_pair(*d, Pt::X, Pt::Y)) mxy = d->ord;
            else if (is_pair(*d, Pt::X, Pt::Z)) mxz = d->ord;
        }
        if (mxy < 0 || mxz < 0)
            throw std::logic_error("normalize: unexpected delta pairing");
        pieces.push_back({sc, mxy, mxz});
    };

    DFac* yz = nullptr;
    DFac* other = nullptr;
    if (is_pair(f1, Pt::Y, Pt::Z)) { yz = &f1; other = &f2; }
    else if (is_pair(f2, Pt::Y, Pt::Z)) { yz = &f2; other = &f1; }

    if (!yz) {
        push_stage2(sign, f1, f2);
    } else if (is_pair(*other, Pt::X, Pt::Y)) {
        int a = yz->ord, m = other->ord;
        for (int k = 0; k <= m; ++k)
            push_stage2(sign * binomial(m, k), DFac{a + k, Pt::X, Pt::Z},
                        DFac{m - k, Pt::X, Pt::Y});
    } else if (is_pair(*other, Pt::X, Pt::Z)) {
        int a = yz->ord, n = other->ord;
        Scalar sa = (a % 2) ? Scalar(-1) : Scalar(1);
        for (int k = 0; k <= n; ++k)
            push_stage2(sign * sa * binomial(n, k), DFac{a + k, Pt::X, Pt::Y},
                        DFac{n - k, Pt::X, Pt::Z});
    } else {
        throw std::logic_error("normalize: two diagonal y-z factors");
    }

    // stage 2: move the coefficient to x through the matching delta factor
    for (auto& [sc, mxy, mxz] : pieces) {
        if (t.at == Pt::X) {
            out.add(mxy, mxz, DiffExpr(sc) * t.coeff);
        } else if (t.at == Pt::Y) {
            DiffExpr df = t.coeff;
            for (int k = 0; k <= mxy; ++k) {
                out.add(mxy - k, mxz, DiffExpr(sc) * binomial(mxy, k) * df);
                if (k < mxy) df = total_x(df);
            }
        } else {
            DiffExpr df = t.coeff;
            for (int k = 0; k <= mxz; ++k) {
                out.add(mxy, mxz - k, DiffExpr(sc) * binomial(mxz, k) * df);
                if (k < mxz) df = total_x(df);
            }
        }
    }
    return out;
}

Scalar pair_with_test(const BiDist& d, const DiffExpr& phi_of_x, unsigned seed) {
    DiffExpr acc;
    for (auto& [m, c] : d.coeffs) acc = acc + c * total_x(phi_of_x, m);
    return eval_random(acc, seed);
}

} // namespace hop
