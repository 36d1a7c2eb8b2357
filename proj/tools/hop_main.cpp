#include <chrono>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "hop/catalog.hpp"
#include "hop/config.hpp"
#include "hop/hopfile.hpp"
#include "hop/report.hpp"

using namespace hop;

namespace {

struct Options {
    std::string format = "text";
    bool complex_ok = false;
    unsigned seed = 1;
};

struct Timer {
    std::chrono::steady_clock::time_point t0 =
        std::chrono::steady_clock::now();
    long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

int emit(const Options& opt, Report& rep, const Timer& t) {
    rep.seed = opt.seed;
    rep.elapsed_ms = t.ms();
    std::cout << (opt.format == "json" ? to_json(rep) : to_text(rep));
    return rep.pass ? 0 : 1;
}

// informational line: shown in the text report but never fails the check
void info(Report& rep, std::vector<int> idx, const std::string& label,
          const DiffExpr& value) {
    rep.components.push_back(
        {std::move(idx), label, print_expr(value), true});
}

// the full bivector described by a file: hydrodynamic part plus any
// deformation blocks
BiOperator file_bivector(const ProblemFile& pf) {
    bool have = false;
    BiOperator p(pf.n);
    if (pf.hydro) { p = to_bidist(*pf.hydro); have = true; }
    if (pf.deform1) { p = have ? p + to_bidist(*pf.deform1)
                               : to_bidist(*pf.deform1); have = true; }
    if (pf.deform2) { p = have ? p + to_bidist(*pf.deform2)
                               : to_bidist(*pf.deform2); have = true; }
    if (!have) throw ParseError("file describes no operator");
    return p;
}

// eval_random agreement with the symbolic zero decisions, appended as an
// extra component
template <typename Op>
void cross_check(Report& rep, const Op& r, unsigned seed) {
    bool ok = true;
    auto probe = [&](const DiffExpr& c) {
        bool sym = c.is_zero();
        bool num = eval_random(c, seed).is_zero();
        if (sym != num) ok = false;
    };
    if constexpr (std::is_same_v<Op, BiOperator>) {
        for (int i = 1; i <= r.n; ++i)
            for (int j = 1; j <= r.n; ++j)
                for (auto& [m, c] : r.at(i, j).coeffs) probe(c);
    } else {
        for (int i = 1; i <= r.n; ++i)
            for (int j = 1; j <= r.n; ++j)
                for (int k = 1; k <= r.n; ++k)
                    for (auto& [mn, c] : r.at(i, j, k).coeffs) probe(c);
    }
    rep.components.push_back({{}, "cross-check(eval)", "", ok});
    finish(rep);
}

int cmd_check(const Options& opt, const std::string& kind,
              const std::string& path) {
    Timer t;
    ProblemFile pf = read_problem(path, opt.complex_ok);
    Report rep;
    rep.check = "check " + kind;
    rep.case_name = path;
    if (kind == "grinberg") {
        if (!pf.hydro)
            throw ParseError(path + ": grinberg check needs a metric section");
        auto res = grinberg_residuals(*pf.hydro, true);
        add_components(rep, res);
        bool ok = true;
        for (auto& g : res)
            if (g.value.is_zero() != eval_random(g.value, opt.seed).is_zero())
                ok = false;
        rep.components.push_back({{}, "cross-check(eval)", "", ok});
        finish(rep);
    } else if (kind == "jacobi") {
        TriOperator r = jacobi_defect(file_bivector(pf));
        add_components(rep, r);
        cross_check(rep, r, opt.seed);
    } else if (kind == "skew") {
        BiOperator r = skew_defect(file_bivector(pf));
        add_components(rep, r);
        cross_check(rep, r, opt.seed);
    }
    return emit(opt, rep, t);
}

int cmd_bracket(const Options& opt, const std::string& pa,
                const std::string& pb) {
    Timer t;
    BiOperator P = file_bivector(read_problem(pa, opt.complex_ok));
    BiOperator Q = file_bivector(read_problem(pb, opt.complex_ok));
    if (P.n != Q.n) throw ParseError("operands have different dimensions");
    Report rep;
    rep.check = "bracket";
    rep.case_name = pa + " , " + pb;
    TriOperator r = schouten(P, Q);
    add_components(rep, r);
    cross_check(rep, r, opt.seed);
    return emit(opt, rep, t);
}

int cmd_lie(const Options& opt, const std::string& field_path,
            const std::string& op_path) {
    Timer t;
    ProblemFile ff = read_problem(field_path, opt.complex_ok);
    if (!ff.vfield)
        throw ParseError(field_path + ": lie needs a vfield section");
    BiOperator P = file_bivector(read_problem(op_path, opt.complex_ok));
    if (ff.n != P.n) throw ParseError("operands have different dimensions");
    Report rep;
    rep.check = "lie";
    rep.case_name = field_path + " , " + op_path;
    BiOperator r = lie_derivative(*ff.vfield, P);
    // the derivative itself is the output, not a residual: report entries
    for (int i = 1; i <= r.n; ++i)
        for (int j = 1; j <= r.n; ++j)
            for (auto& [m, c] : r.at(i, j).coeffs)
                if (!c.is_zero())
                    info(rep, {i, j}, "d^" + std::to_string(m), c);
    finish(rep);
    return emit(opt, rep, t);
}

int cmd_transform(const Options& opt, const std::string& map_path,
                  const std::string& op_path) {
    Timer t;
    ProblemFile mf = read_problem(map_path, opt.complex_ok);
    if (!mf.change)
        throw ParseError(map_path + ": transform needs map/inv sections");
    check_consistent(*mf.change);
    ProblemFile pf = read_problem(op_path, opt.complex_ok);
    if (mf.n != pf.n) throw ParseError("operands have different dimensions");
    Report rep;
    rep.check = "transform";
    rep.case_name = map_path + " , " + op_path;
    if (pf.hydro && !pf.deform1 && !pf.deform2) {
        HydroOp pushed = push_hydro(*pf.hydro, *mf.change);
        for (int i = 1; i <= pf.n; ++i)
            for (int j = 1; j <= pf.n; ++j)
                if (!pushed.g(i, j).is_zero())
                    info(rep, {i, j}, "g", pushed.g(i, j));
        for (int i = 1; i <= pf.n; ++i)
            for (int j = 1; j <= pf.n; ++j)
                for (int k = 1; k <= pf.n; ++k)
                    if (!pushed.b(i, j, k).is_zero())
                        info(rep, {i, j, k}, "b", pushed.b(i, j, k));
        Tensor nt = nontensorial_part(*pf.hydro, *mf.change);
        for (int l = 1; l <= pf.n; ++l)
            for (int r = 1; r <= pf.n; ++r)
                for (int s = 1; s <= pf.n; ++s)
                    if (!nt(l, r, s).is_zero())
                        info(rep, {l, r, s}, "nontensorial", nt(l, r, s));
    } else {
        BiOperator pushed = push_bivector(file_bivector(pf), *mf.change);
        for (int i = 1; i <= pf.n; ++i)
            for (int j = 1; j <= pf.n; ++j)
                for (auto& [m, c] : pushed.at(i, j).coeffs)
                    if (!c.is_zero())
                        info(rep, {i, j}, "d^" + std::to_string(m), c);
    }
    finish(rep);
    return emit(opt, rep, t);
}

int cmd_catalog(const Options& opt, const std::string& action,
                const std::string& which) {
    Timer t;
    Report rep;
    rep.check = "catalog " + action;
    if (action == "list") {
        for (const std::string& name : catalog_names())
            rep.components.push_back(
                {{}, name, catalog_entry(name).note, true});
        finish(rep);
        return emit(opt, rep, t);
    }
    CheckReport cr;
    if (!which.empty()) {
        if (!catalog_has(which)) throw ParseError("no catalog case " + which);
        rep.case_name = which;
        cr = verify_entry(which);
    } else {
        cr = verify_all_entries();
        cr.merge(verify_reductions());
        cr.merge(verify_equivalences());
    }
    for (auto& l : cr.lines) add_line(rep, l.label, l.pass);
    return emit(opt, rep, t);
}

int cmd_count(const Options& opt, int n, int degree) {
    Timer t;
    Report rep;
    rep.check = "count";
    rep.case_name = "n=" + std::to_string(n) +
                    " degree=" + std::to_string(degree);
    long cum = 0;
    for (int d = 1; d <= degree; ++d) cum += coefficient_count(n, d);
    rep.components.push_back(
        {{}, "coefficients", std::to_string(coefficient_count(n, degree)),
         true});
    rep.components.push_back(
        {{}, "cumulative", std::to_string(cum), true});
    rep.components.push_back(
        {{}, "free after skew",
         std::to_string(free_coefficient_count(n, degree)), true});
    finish(rep);
    return emit(opt, rep, t);
}

int env_cap(const char* name, int fallback) {
    const char* v = std::getenv(name);
    return v ? std::atoi(v) : fallback;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checks for hydrodynamic-type Poisson operators"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    int max_jet = env_cap("HOP_MAX_JET", config().max_jet);
    int max_delta = env_cap("HOP_MAX_DELTA", config().max_delta);
    app.add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--complex", opt.complex_ok,
                 "allow Gaussian-rational coefficients in input files");
    app.add_option("--seed", opt.seed, "seed for the numeric cross-check");
    app.add_option("--max-jet", max_jet, "highest jet order allowed");
    app.add_option("--max-delta", max_delta,
                   "highest delta-derivative order allowed");

    std::string kind, file_a, file_b, cat_case;
    int n = 2, degree = 1;

    auto* check = app.add_subcommand("check", "residuals of one condition");
    check->add_option("kind", kind, "grinberg, jacobi or skew")
        ->required()
        ->check(CLI::IsMember({"grinberg", "jacobi", "skew"}));
    check->add_option("file", file_a, "problem file")->required();

    auto* bracket = app.add_subcommand("bracket", "bracket of two operators");
    bracket->add_option("fileP", file_a)->required();
    bracket->add_option("fileQ", file_b)->required();

    auto* lie = app.add_subcommand("lie", "derivative along a vector field");
    lie->add_option("field", file_a)->required();
    lie->add_option("operator", file_b)->required();

    auto* transform =
        app.add_subcommand("transform", "push an operator through a map");
    transform->add_option("map", file_a)->required();
    transform->add_option("operator", file_b)->required();

    auto* catalog = app.add_subcommand("catalog", "stored structures");
    catalog->add_option("action", kind, "list or verify")
        ->required()
        ->check(CLI::IsMember({"list", "verify"}));
    catalog->add_option("--case", cat_case, "verify a single case");

    auto* count =
        app.add_subcommand("count", "coefficient counts of a generic bivector");
    count->add_option("--n", n, "number of components")->required();
    count->add_option("--degree", degree, "homogeneity degree")->required();

    // global flags may follow the subcommand
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    config().max_jet = max_jet;
    config().max_delta = max_delta;

    try {
        if (*check) return cmd_check(opt, kind, file_a);
        if (*bracket) return cmd_bracket(opt, file_a, file_b);
        if (*lie) return cmd_lie(opt, file_a, file_b);
        if (*transform) return cmd_transform(opt, file_a, file_b);
        if (*catalog) return cmd_catalog(opt, kind, cat_case);
        if (*count) return cmd_count(opt, n, degree);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
