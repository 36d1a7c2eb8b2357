// End-to-end acceptance suite.  Each numbered block prints exactly one
// pass/fail line; the process exits 0 iff every block passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>

#include "hop/catalog.hpp"
#include "hop/grinberg.hpp"
#include "hop/parse.hpp"

using namespace hop;

namespace {

bool all_ok = true;

void line(const std::string& label, bool ok, long ms) {
    std::printf("%s %s (%ld ms)\n", ok ? "pass" : "FAIL", label.c_str(), ms);
    std::fflush(stdout);
    if (!ok) all_ok = false;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 =
        std::chrono::steady_clock::now();
    long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

bool passed(const CheckReport& r) { return r.pass(); }

// deterministic small integers for random structure slots
struct Lcg {
    unsigned long state;
    explicit Lcg(unsigned long s) : state(s) {}
    long next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return long((state >> 33) % 7) - 3; // -3..3
    }
};

DiffExpr rnd_coeff(Lcg& g, int n) {
    DiffExpr e(g.next());
    for (int c = 1; c <= n; ++c)
        if (g.next() > 1) e = e + DiffExpr(g.next()) * jet(c);
    return e;
}

DeformBivector rnd_bivector(Lcg& g, int n, int degree) {
    DeformBivector p(n, degree);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            p.A(i, j) = rnd_coeff(g, n);
            for (int k = 1; k <= n; ++k) {
                p.B(i, j, k) = rnd_coeff(g, n);
                p.C(i, j, k) = rnd_coeff(g, n);
                for (int r = k; r <= n; ++r) {
                    DiffExpr d = rnd_coeff(g, n);
                    p.D(i, j, k, r) = d;
                    p.D(i, j, r, k) = d;
                }
                if (degree == 2) {
                    p.L(i, j, k) = rnd_coeff(g, n);
                    for (int r = 1; r <= n; ++r) p.M(i, j, k, r) = rnd_coeff(g, n);
                    for (int r = k; r <= n; ++r)
                        for (int s = r; s <= n; ++s) {
                            DiffExpr v = rnd_coeff(g, n);
                            int perm[3] = {k, r, s};
                            std::sort(perm, perm + 3);
                            do
                                p.N(i, j, perm[0], perm[1], perm[2]) = v;
                            while (std::next_permutation(perm, perm + 3));
                        }
                }
            }
        }
    return p;
}

bool closed_skew(const DeformBivector& p) {
    for (auto& r : skew_conditions_closed(p))
        if (!r.is_zero()) return false;
    return true;
}

} // namespace

int main() {
    // 1. classification suite: every canonical two- and three-component form
    {
        Timer t;
        bool ok = true;
        for (const char* name :
             {"P1_0", "P2_0", "RANK0", "RANK1_1", "RANK1_2", "RANK1_3",
              "RANK1_4", "RANK2_1", "RANK2_2", "RANK2_3", "RANK2_COMPLEX_1",
              "RANK2_COMPLEX_2", "RANK2_COMPLEX_3"}) {
            if (!passed(verify_entry(name))) ok = false;
            // the two verdicts of the flatness system and the bracket agree
            HydroOp op = *catalog_hydro(name);
            bool g = grinberg_holds(op);
            bool j = jacobi_defect(to_bidist(op)).is_zero() &&
                     is_zero(skew_defect(to_bidist(op)));
            if (g != j || !g) ok = false;
        }
        line("1. classification suite (13 canonical forms)", ok, t.ms());
    }

    // 2. the gas-dynamics operator
    {
        Timer t;
        bool ok = passed(verify_entry("GAS_DYNAMICS"));
        line("2. gas dynamics operator", ok, t.ms());
    }

    // 3. coefficient counting
    {
        Timer t;
        bool ok = coefficient_count(2, 1) + coefficient_count(2, 2) == 104 &&
                  coefficient_count(3, 1) + coefficient_count(3, 2) == 432 &&
                  free_coefficient_count(2, 1) == 12 &&
                  free_coefficient_count(2, 2) == 30;
        line("3. coefficient counts (104 / 432, free 12 + 30)", ok, t.ms());
    }

    // 4. first-order deformation families
    {
        Timer t;
        bool ok = true;
        for (const char* name :
             {"DEF1_P1", "DEF1_P1_GENERAL", "DEF2_P1", "DEF2_P1_GENERAL",
              "DEF3_P1", "DEF4_P1", "DEF5_P1"})
            if (!passed(verify_entry(name))) ok = false;
        line("4. first-order deformation families", ok, t.ms());
    }

    // 5. second-order deformation families
    {
        Timer t;
        bool ok = true;
        for (const char* name : {"DEF1_P2", "DEF1_P2_GENERAL", "DEF2_P2"})
            if (!passed(verify_entry(name))) ok = false;
        line("5. second-order deformation families", ok, t.ms());
    }

    // 6. vector-field eliminations behind the reduced statements
    {
        Timer t;
        bool ok = passed(verify_reductions());
        line("6. Miura reductions", ok, t.ms());
    }

    // 7. coordinate equivalences and parameter transport
    {
        Timer t;
        bool ok = passed(verify_equivalences());
        line("7. equivalence maps and parameter transport", ok, t.ms());
    }

    // 8. cross-engine agreement
    {
        Timer t;
        bool ok = true;
        // closed-form skew conditions against the delta-flip defect
        for (int n : {2, 3})
            for (int degree : {1, 2}) {
                Lcg g(1000 * n + degree);
                for (int trial = 0; trial < 20; ++trial) {
                    DeformBivector p = rnd_bivector(g, n, degree);
                    if (closed_skew(p) !=
                        is_zero(skew_defect(to_bidist(p))))
                        ok = false;
                }
                // a certified skew point of the same dimensions
                DeformBivector s = generic_skew(
                    n, degree, "w" + std::to_string(10 * n + degree));
                if (!closed_skew(s) || !is_zero(skew_defect(to_bidist(s))))
                    ok = false;
            }
        // bracket symmetry and bilinearity on random pairs
        for (int trial = 0; trial < 10; ++trial) {
            Lcg g(50 + trial);
            BiOperator a = to_bidist(rnd_bivector(g, 2, 1));
            BiOperator b = to_bidist(rnd_bivector(g, 2, 1));
            BiOperator c = to_bidist(rnd_bivector(g, 2, 1));
            if (!(schouten(a, b) - schouten(b, a)).is_zero()) ok = false;
            if (!(schouten(a + c, b) - schouten(a, b) - schouten(c, b))
                     .is_zero())
                ok = false;
        }
        // canonical zero test against numeric evaluation on 50 seeds: a
        // symbolically zero residual must vanish at every sample point,
        // while a nonzero one may only hit a root at isolated seeds
        TriOperator zero_res =
            jacobi_defect(to_bidist(*catalog_hydro("GAS_DYNAMICS")));
        HydroOp bad(2);
        bad.g(1, 1) = DiffExpr(1);
        bad.b(1, 2, 2) = DiffExpr(3);
        bad.b(2, 1, 2) = DiffExpr(-3);
        TriOperator bad_res = jacobi_defect(to_bidist(bad));
        for (unsigned seed = 1; seed <= 50 && ok; ++seed)
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j)
                    for (int k = 1; k <= 3; ++k)
                        for (auto& [mn, c] : zero_res.at(i, j, k).coeffs)
                            if (!eval_random(c, seed).is_zero()) ok = false;
        for (int i = 1; i <= 2 && ok; ++i)
            for (int j = 1; j <= 2; ++j)
                for (int k = 1; k <= 2; ++k)
                    for (auto& [mn, c] : bad_res.at(i, j, k).coeffs) {
                        if (c.is_zero()) continue;
                        int hits = 0;
                        for (unsigned seed = 1; seed <= 50; ++seed)
                            if (!eval_random(c, seed).is_zero()) ++hits;
                        if (hits < 40) ok = false;
                    }
        line("8. cross-engine properties (skew, bracket, eval)", ok, t.ms());
    }

    // 9. negative controls
    {
        Timer t;
        bool ok = true;
        HydroOp bad(2);
        bad.g(1, 1) = DiffExpr(1);
        bad.b(1, 2, 2) = DiffExpr(3);
        bad.b(2, 1, 2) = DiffExpr(-3);
        bool g4 = false;
        for (auto& r : grinberg_residuals(bad))
            if (r.condition == "G4" && r.value == DiffExpr(-9)) g4 = true;
        if (!g4) ok = false;
        if (jacobi_defect(to_bidist(bad)).is_zero()) ok = false;

        DiffExpr p = func("p", {2}), q = func("q", {2}), r = func("r", {2});
        BiOperator p0 = to_bidist(*catalog_hydro("P1_0"));
        if (schouten(p0, build_def1_p1(p * jet(1), q, r)).is_zero()) ok = false;
        line("9. negative controls", ok, t.ms());
    }

    return all_ok ? 0 : 1;
}
