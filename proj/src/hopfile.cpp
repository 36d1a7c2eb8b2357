#include "hop/hopfile.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

namespace hop {

namespace {

enum class Section { none, metric, b, deform1, deform2, vfield, map, inv };

const std::map<std::string, Section> section_names = {
    {"metric", Section::metric},   {"b", Section::b},
    {"deform1", Section::deform1}, {"deform2", Section::deform2},
    {"vfield", Section::vfield},   {"map", Section::map},
    {"inv", Section::inv},
};

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

FuncRule rule_from_name(const std::string& name, int line) {
    if (name == "plain") return FuncRule::plain;
    if (name == "exp") return FuncRule::exp;
    if (name == "sin") return FuncRule::sin;
    if (name == "cos") return FuncRule::cos;
    fail(line, "unknown rule '" + name + "'");
}

std::string rule_name(FuncRule r) {
    switch (r) {
    case FuncRule::plain: return "plain";
    case FuncRule::exp: return "exp";
    case FuncRule::sin: return "sin";
    case FuncRule::cos: return "cos";
    default: throw std::logic_error("rule has no file syntax");
    }
}

bool all_real(const Poly& p) {
    return std::all_of(p.terms.begin(), p.terms.end(),
                       [](auto& t) { return t.second.is_real(); });
}

struct Parser {
    ProblemFile pf;
    bool allow_complex = true;
    Section section = Section::none;
    int line = 0;

    void need_n() {
        if (pf.n == 0) fail(line, "dimension must be declared first (n = ...)");
    }

    int index_in_range(const std::string& text) {
        int v = std::stoi(text);
        if (v < 1 || v > pf.n)
            fail(line, "index " + text + " outside 1.." + std::to_string(pf.n));
        return v;
    }

    DiffExpr expr(const std::string& text) {
        DiffExpr e;
        try {
            e = parse_expr(text, pf.symbols);
        } catch (const std::exception& ex) {
            fail(line, std::string(ex.what()) + " in '" + text + "'");
        }
        if (!allow_complex && !(all_real(e.num) && all_real(e.den)))
            fail(line, "complex coefficients need --complex: '" + text + "'");
        return e;
    }

    void header_statement(const std::string& st) {
        static const std::regex dim_re(R"(^n\s*=\s*(\d+)$)");
        static const std::regex func_re(
            R"(^func\s+([A-Za-z_]\w*)\s*\(([^()]*)\)(?:\s+rule\s+(\w+))?$)");
        std::smatch m;
        if (std::regex_match(st, m, dim_re)) {
            if (pf.n != 0) fail(line, "dimension declared twice");
            int v = std::stoi(m[1]);
            if (v < 1 || v > 9) fail(line, "n must be in 1..9");
            pf.n = v;
            return;
        }
        if (std::regex_match(st, m, func_re)) {
            need_n();
            std::string name = m[1];
            if (pf.symbols.funcs.count(name))
                fail(line, "function '" + name + "' declared twice");
            std::vector<int> deps;
            static const std::regex dep_re(R"(u([1-9]))");
            std::string args = m[2];
            for (std::sregex_iterator it(args.begin(), args.end(), dep_re), e;
                 it != e; ++it)
                deps.push_back(index_in_range((*it)[1]));
            std::sort(deps.begin(), deps.end());
            deps.erase(std::unique(deps.begin(), deps.end()), deps.end());
            if (deps.empty()) fail(line, "function needs field arguments");
            FuncRule rule = m[3].matched ? rule_from_name(m[3], line)
                                         : FuncRule::plain;
            pf.symbols.declare(name, deps, rule);
            pf.func_order.push_back(FuncDecl{name, deps, rule});
            return;
        }
        fail(line, "expected 'n = ...' or 'func ...' before the sections");
    }

    HydroOp& hydro() {
        if (!pf.hydro) pf.hydro.emplace(pf.n);
        return *pf.hydro;
    }

    DeformBivector& deform(int degree) {
        auto& slot = degree == 1 ? pf.deform1 : pf.deform2;
        if (!slot) slot.emplace(pf.n, degree);
        return *slot;
    }

    void tensor_entry(const std::string& name, const std::vector<int>& idx,
                      const DiffExpr& value) {
        auto arity = [&](size_t k) {
            if (idx.size() != k)
                fail(line, name + " takes " + std::to_string(k) + " indices");
        };
        switch (section) {
        case Section::metric: {
            if (name != "g") fail(line, "metric section lists g entries");
            arity(2);
            if (idx[0] > idx[1])
                fail(line, "give symmetric g with ascending indices");
            hydro().g(idx[0], idx[1]) = value;
            hydro().g(idx[1], idx[0]) = value;
            return;
        }
        case Section::b: {
            if (name != "b") fail(line, "b section lists b entries");
            arity(3);
            hydro().b(idx[0], idx[1], idx[2]) = value;
            return;
        }
        case Section::deform1:
        case Section::deform2: {
            int degree = section == Section::deform1 ? 1 : 2;
            DeformBivector& p = deform(degree);
            if (name == "A") {
                arity(2);
                p.A(idx[0], idx[1]) = value;
            } else if (name == "B" || name == "C") {
                arity(3);
                (name == "B" ? p.B : p.C)(idx[0], idx[1], idx[2]) = value;
            } else if (name == "D") {
                arity(4);
                if (idx[2] > idx[3])
                    fail(line, "give symmetric D with ascending indices");
                p.D(idx[0], idx[1], idx[2], idx[3]) = value;
                p.D(idx[0], idx[1], idx[3], idx[2]) = value;
            } else if (degree == 2 && name == "L") {
                arity(3);
                p.L(idx[0], idx[1], idx[2]) = value;
            } else if (degree == 2 && name == "M") {
                arity(4);
                p.M(idx[0], idx[1], idx[2], idx[3]) = value;
            } else if (degree == 2 && name == "N") {
                arity(5);
                if (!(idx[2] <= idx[3] && idx[3] <= idx[4]))
                    fail(line, "give symmetric N with ascending indices");
                std::array<int, 3> s{idx[2], idx[3], idx[4]};
                std::sort(s.begin(), s.end());
                do
                    p.N(idx[0], idx[1], s[0], s[1], s[2]) = value;
                while (std::next_permutation(s.begin(), s.end()));
            } else {
                fail(line, "unknown tensor '" + name + "' in a deform section");
            }
            return;
        }
        case Section::vfield: {
            if (name != "X") fail(line, "vfield section lists X entries");
            arity(1);
            if (!pf.vfield) pf.vfield.emplace(pf.n);
            pf.vfield->at(idx[0]) = value;
            return;
        }
        default:
            fail(line, "tensor entry outside a tensor section");
        }
    }

    void change_entry(const std::string& lhs, const DiffExpr& value) {
        static const std::regex coord_re(R"(^([uv])([1-9])$)");
        std::smatch m;
        if (!std::regex_match(lhs, m, coord_re))
            fail(line, "expected v<i> (map) or u<i> (inv), got '" + lhs + "'");
        bool is_map = section == Section::map;
        if ((m[1] == "v") != is_map)
            fail(line, is_map ? "map section assigns v<i>"
                              : "inv section assigns u<i>");
        int i = index_in_range(m[2]);
        if (!pf.change) pf.change.emplace(pf.n);
        (is_map ? pf.change->fwd : pf.change->inv)[i - 1] = value;
    }

    void statement(std::string st) {
        auto trim = [](std::string& s) {
            size_t a = s.find_first_not_of(" \t\r");
            size_t b = s.find_last_not_of(" \t\r");
            s = a == std::string::npos ? "" : s.substr(a, b - a + 1);
        };
        trim(st);
        if (st.empty()) return;

        static const std::regex head_re(R"(^(\w+)\s*:(.*)$)");
        std::smatch m;
        if (std::regex_match(st, m, head_re)) {
            auto it = section_names.find(m[1]);
            if (it == section_names.end())
                fail(line, "unknown section '" + std::string(m[1]) + "'");
            need_n();
            section = it->second;
            // an empty section still declares the (zero) object
            switch (section) {
            case Section::metric:
            case Section::b: hydro(); break;
            case Section::deform1: deform(1); break;
            case Section::deform2: deform(2); break;
            case Section::vfield:
                if (!pf.vfield) pf.vfield.emplace(pf.n);
                break;
            default: break;
            }
            statement(m[2]);
            return;
        }

        if (section == Section::none) {
            header_statement(st);
            return;
        }

        static const std::regex entry_re(
            R"(^([A-Za-z_]\w*)\s*((?:\[\s*\d+\s*\])*)\s*=\s*(.*)$)");
        if (!std::regex_match(st, m, entry_re))
            fail(line, "expected '<slot> = <expression>', got '" + st + "'");
        std::string name = m[1], brackets = m[2], rhs = m[3];
        if (rhs.empty()) fail(line, "empty right-hand side");
        DiffExpr value = expr(rhs);

        if (section == Section::map || section == Section::inv) {
            if (!brackets.empty())
                fail(line, "coordinate assignments take no indices");
            change_entry(name, value);
            return;
        }
        std::vector<int> idx;
        static const std::regex idx_re(R"(\d+)");
        for (std::sregex_iterator it(brackets.begin(), brackets.end(), idx_re),
             e; it != e; ++it)
            idx.push_back(index_in_range(it->str()));
        tensor_entry(name, idx, value);
    }

    void run(const std::string& text) {
        std::istringstream in(text);
        std::string raw;
        while (std::getline(in, raw)) {
            ++line;
            if (auto hash = raw.find('#'); hash != std::string::npos)
                raw.erase(hash);
            size_t start = 0;
            for (;;) {
                size_t semi = raw.find(';', start);
                statement(raw.substr(start, semi - start));
                if (semi == std::string::npos) break;
                start = semi + 1;
            }
        }
        if (pf.n == 0) fail(line, "missing dimension declaration");
        if (pf.change) {
            line = 0;
            for (int i = 1; i <= pf.n; ++i) {
                if (pf.change->fwd[i - 1].is_zero())
                    fail(line, "map section misses v" + std::to_string(i));
                if (pf.change->inv[i - 1].is_zero())
                    fail(line, "inv section misses u" + std::to_string(i));
            }
        }
    }
};

void print_entries(std::ostream& os, const std::string& name, const Tensor& t,
                   int sym_tail) {
    // sym_tail: number of trailing indices the slot is symmetric in;
    // only ascending representatives are printed
    int n = t.n, rank = t.rank;
    std::vector<int> idx(rank, 1);
    for (;;) {
        bool ascending = true;
        for (int k = rank - sym_tail; k + 1 < rank; ++k)
            if (idx[k] > idx[k + 1]) ascending = false;
        if (ascending) {
            const DiffExpr* e = nullptr;
            switch (rank) {
            case 1: e = &t(idx[0]); break;
            case 2: e = &t(idx[0], idx[1]); break;
            case 3: e = &t(idx[0], idx[1], idx[2]); break;
            case 4: e = &t(idx[0], idx[1], idx[2], idx[3]); break;
            default: e = &t(idx[0], idx[1], idx[2], idx[3], idx[4]); break;
            }
            if (!e->is_zero()) {
                os << name;
                for (int v : idx) os << '[' << v << ']';
                os << " = " << print_expr(*e) << "\n";
            }
        }
        int k = rank - 1;
        while (k >= 0 && idx[k] == n) idx[k--] = 1;
        if (k < 0) break;
        ++idx[k];
    }
}

} // namespace

ProblemFile parse_problem(const std::string& text, bool allow_complex) {
    Parser p;
    p.allow_complex = allow_complex;
    p.run(text);
    return std::move(p.pf);
}

ProblemFile read_problem(const std::string& path, bool allow_complex) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str(), allow_complex);
}

std::string print_problem(const ProblemFile& pf) {
    std::ostringstream os;
    os << "n = " << pf.n << "\n";
    for (const FuncDecl& f : pf.func_order) {
        os << "func " << f.name << "(";
        for (size_t k = 0; k < f.deps.size(); ++k)
            os << (k ? "," : "") << "u" << f.deps[k];
        os << ")";
        if (f.rule != FuncRule::plain) os << " rule " << rule_name(f.rule);
        os << ";\n";
    }
    if (pf.hydro) {
        os << "metric:\n";
        print_entries(os, "g", pf.hydro->g, 2);
        os << "b:\n";
        print_entries(os, "b", pf.hydro->b, 0);
    }
    for (int degree : {1, 2}) {
        const auto& slot = degree == 1 ? pf.deform1 : pf.deform2;
        if (!slot) continue;
        os << "deform" << degree << ":\n";
        print_entries(os, "A", slot->A, 0);
        print_entries(os, "B", slot->B, 0);
        print_entries(os, "C", slot->C, 0);
        print_entries(os, "D", slot->D, 2);
        if (degree == 2) {
            print_entries(os, "L", slot->L, 0);
            print_entries(os, "M", slot->M, 0);
            print_entries(os, "N", slot->N, 3);
        }
    }
    if (pf.vfield) {
        os << "vfield:\n";
        for (int i = 1; i <= pf.n; ++i)
            if (!pf.vfield->at(i).is_zero())
                os << "X[" << i << "] = " << print_expr(pf.vfield->at(i))
                   << "\n";
    }
    if (pf.change) {
        os << "map:\n";
        for (int i = 1; i <= pf.n; ++i)
            os << "v" << i << " = " << print_expr(pf.change->fwd[i - 1])
               << "\n";
        os << "inv:\n";
        for (int i = 1; i <= pf.n; ++i)
            os << "u" << i << " = " << print_expr(pf.change->inv[i - 1])
               << "\n";
    }
    return os.str();
}

} // namespace hop
