#include "psyq/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace psyq {

std::string flavor_name(Flavor f) {
    return f == Flavor::psyquandle ? "psyquandle" : "biquandle";
}

std::optional<Op> op_from_name(std::string_view name) {
    static const std::pair<std::string_view, Op> names[] = {
        {"ul", Op::under_tri},     {"ol", Op::over_tri},
        {"ub", Op::under_dot},     {"ob", Op::over_dot},
        {"ul_inv", Op::under_tri_inv}, {"ol_inv", Op::over_tri_inv},
        {"ub_inv", Op::under_dot_inv}, {"ob_inv", Op::over_dot_inv},
    };
    for (auto& [k, v] : names)
        if (k == name) return v;
    return std::nullopt;
}

std::string op_name(Op op) {
    static const char* names[] = {"ul", "ol", "ub", "ob",
                                  "ul_inv", "ol_inv", "ub_inv", "ob_inv"};
    return names[static_cast<int>(op)];
}

std::optional<int> OperationTable::non_bijective_column() const {
    std::vector<char> seen(static_cast<std::size_t>(n) + 1);
    for (int y = 1; y <= n; ++y) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int x = 1; x <= n; ++x) {
            if (seen[at(x, y)]) return y;
            seen[at(x, y)] = 1;
        }
    }
    return std::nullopt;
}

OperationTable OperationTable::column_inverse() const {
    OperationTable r;
    r.n = n;
    r.cells.assign(cells.size(), 0);
    for (int y = 1; y <= n; ++y)
        for (int x = 1; x <= n; ++x)
            r.set(at(x, y), y, x);
    return r;
}

bool ValidationReport::has(std::string_view axiom) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const AxiomViolation& v) { return v.axiom == axiom; });
}

FiniteAlgebra::FiniteAlgebra(Flavor flavor, std::array<OperationTable, 4> tables)
    : flavor_(flavor), tables_(std::move(tables)) {
    n_ = tables_[0].n;
    derive();
}

void FiniteAlgebra::derive() {
    for (int i = 0; i < 4; ++i) {
        column_ok_[i] = false;
        inverses_[i] = OperationTable{};
        if (tables_[i].empty()) continue;
        if (!tables_[i].non_bijective_column()) {
            column_ok_[i] = true;
            inverses_[i] = tables_[i].column_inverse();
        }
    }
    for (int fam = 0; fam < 2; ++fam) {
        pair_inv_[fam].clear();
        const OperationTable& a = tables_[2 * fam];
        const OperationTable& b = tables_[2 * fam + 1];
        if (a.empty() || b.empty()) continue;
        std::vector<int> inv(static_cast<std::size_t>(n_) * n_, -1);
        bool ok = true;
        for (int x = 1; x <= n_ && ok; ++x)
            for (int y = 1; y <= n_; ++y) {
                int u = b.at(y, x); // y op^ x
                int v = a.at(x, y); // x op_ y
                int& slot = inv[static_cast<std::size_t>(u - 1) * n_ + (v - 1)];
                if (slot != -1) { ok = false; break; }
                slot = (x - 1) * n_ + (y - 1);
            }
        if (ok) pair_inv_[fam] = std::move(inv);
    }
    pi_adequate_ = false;
    if (flavor_ == Flavor::psyquandle && !tables_[2].empty() && !tables_[3].empty()) {
        pi_adequate_ = true;
        for (int x = 1; x <= n_; ++x)
            if (tables_[2].at(x, x) != tables_[3].at(x, x)) { pi_adequate_ = false; break; }
    }
}

const OperationTable& FiniteAlgebra::table(Op op) const {
    return tables_[static_cast<int>(op) & 3];
}

bool FiniteAlgebra::has_op(Op op) const {
    int base = static_cast<int>(op) & 3;
    return base < op_count();
}

int FiniteAlgebra::apply(Op op, int x, int y) const {
    if (!has_op(op))
        throw std::domain_error("operation " + op_name(op) + " not available for a " +
                                flavor_name(flavor_));
    int base = static_cast<int>(op) & 3;
    if (static_cast<int>(op) < 4) return tables_[base].at(x, y);
    if (!column_ok_[base])
        throw std::domain_error("inverse of " + op_name(static_cast<Op>(base)) +
                                " undefined: a column is not a permutation");
    return inverses_[base].at(x, y);
}

std::pair<int, int> FiniteAlgebra::pair_map(int family, int x, int y) const {
    const OperationTable& a = tables_[2 * family];
    const OperationTable& b = tables_[2 * family + 1];
    return {b.at(y, x), a.at(x, y)};
}

std::pair<int, int> FiniteAlgebra::pair_map_inverse(int family, int u, int v) const {
    int enc = pair_inv_[family][static_cast<std::size_t>(u - 1) * n_ + (v - 1)];
    return {enc / n_ + 1, enc % n_ + 1};
}

// --- parsing ------------------------------------------------------------

namespace {

struct Token {
    std::string text;
    int line;
    int col;
};

// '#' comments run to end of line; '|' is whitespace.
std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    int line = 1, col = 0;
    std::string cur;
    int tl = 0, tc = 0;
    bool comment = false;
    auto flush = [&] {
        if (!cur.empty()) {
            out.push_back({cur, tl, tc});
            cur.clear();
        }
    };
    for (char c : text) {
        ++col;
        if (c == '\n') {
            flush();
            comment = false;
            ++line;
            col = 0;
            continue;
        }
        if (comment) continue;
        if (c == '#') { flush(); comment = true; continue; }
        if (std::isspace(static_cast<unsigned char>(c)) || c == '|') { flush(); continue; }
        if (cur.empty()) { tl = line; tc = col; }
        cur.push_back(c);
    }
    flush();
    return out;
}

int parse_int(const Token& t, int lo, int hi, const std::string& what) {
    int v = 0;
    bool any = false;
    for (char c : t.text) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError(t.line, t.col, what + ": expected integer, got '" + t.text + "'");
        v = v * 10 + (c - '0');
        any = true;
        if (v > hi + 1000) break;
    }
    if (!any || v < lo || v > hi)
        throw ParseError(t.line, t.col,
                         what + ": value '" + t.text + "' out of range [" +
                             std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return v;
}

} // namespace

FiniteAlgebra parse_algebra(std::string_view text) {
    std::vector<Token> toks = tokenize(text);
    if (toks.empty()) throw ParseError(1, 1, "empty algebra file");
    std::size_t i = 0;
    Flavor flavor;
    if (toks[i].text == "psyquandle") flavor = Flavor::psyquandle;
    else if (toks[i].text == "biquandle") flavor = Flavor::biquandle;
    else
        throw ParseError(toks[i].line, toks[i].col,
                         "expected flavor 'psyquandle' or 'biquandle', got '" + toks[i].text + "'");
    ++i;
    if (i >= toks.size()) throw ParseError(toks[0].line, toks[0].col, "missing carrier size");
    int n = parse_int(toks[i], 1, 255, "carrier size");
    ++i;

    int blocks = flavor == Flavor::psyquandle ? 4 : 2;
    std::array<OperationTable, 4> tables{};
    for (int b = 0; b < blocks; ++b) {
        tables[b].n = n;
        tables[b].cells.assign(static_cast<std::size_t>(n) * n, 0);
    }
    // Rows list the blocks left to right: row x = [ul row | ol row | ...].
    for (int x = 1; x <= n; ++x)
        for (int b = 0; b < blocks; ++b)
            for (int y = 1; y <= n; ++y) {
                if (i >= toks.size()) {
                    const Token& last = toks.back();
                    throw ParseError(last.line, last.col,
                                     "table truncated: expected " +
                                         std::to_string(n * n * blocks) + " entries");
                }
                tables[b].set(x, y, parse_int(toks[i], 1, n, "table entry"));
                ++i;
            }
    if (i < toks.size())
        throw ParseError(toks[i].line, toks[i].col,
                         "trailing data after " + std::to_string(n * n * blocks) + " entries");
    return FiniteAlgebra(flavor, std::move(tables));
}

std::string serialize_algebra(const FiniteAlgebra& alg) {
    std::ostringstream os;
    os << flavor_name(alg.flavor()) << ' ' << alg.size() << '\n';
    int n = alg.size();
    for (int x = 1; x <= n; ++x) {
        bool first = true;
        for (int b = 0; b < alg.op_count(); ++b)
            for (int y = 1; y <= n; ++y) {
                if (!first) os << ' ';
                os << alg.table(static_cast<Op>(b)).at(x, y);
                first = false;
            }
        os << '\n';
    }
    return os.str();
}

// --- axioms ---------------------------------------------------------------

namespace {

// Equation evaluators, shared by validate() and eval_axiom_equation().
// Family ops are looked up through apply() so inverse ops resolve uniformly.

int ev(const FiniteAlgebra& a, Op op, int x, int y) { return a.apply(op, x, y); }

constexpr Op UL = Op::under_tri;
constexpr Op OL = Op::over_tri;
constexpr Op UB = Op::under_dot;
constexpr Op OB = Op::over_dot;
constexpr Op UBi = Op::under_dot_inv;

std::pair<int, int> axiom_i(const FiniteAlgebra& a, int x) {
    return {ev(a, UL, x, x), ev(a, OL, x, x)};
}

std::pair<int, int> axiom_iii(const FiniteAlgebra& a, int eq, int x, int y, int z) {
    switch (eq) {
    case 1:
        return {ev(a, UL, ev(a, UL, x, y), ev(a, UL, z, y)),
                ev(a, UL, ev(a, UL, x, z), ev(a, OL, y, x))};
    case 2:
        return {ev(a, OL, ev(a, UL, x, y), ev(a, UL, z, y)),
                ev(a, UL, ev(a, OL, x, z), ev(a, OL, y, x))};
    default:
        return {ev(a, OL, ev(a, OL, x, y), ev(a, OL, z, y)),
                ev(a, OL, ev(a, OL, x, z), ev(a, UL, y, x))};
    }
}

// Axiom (iv): a strand slides past a negatively-oriented vertex. The two
// mixed conditions state that crossing both lower edges and then passing
// the vertex equals passing the vertex and then crossing both upper edges,
// with the vertex relations read through the dot-inverse tables. Equation 1
// is the strand-under form, equation 2 the strand-over form; the witness is
// the triple (w, a, b) of incoming colors and the reported sides are the
// first output pair that disagrees.
//
// vertex with inverse reading: a_out = a_in ub^-1 b_in, b_out = b_in ob a_out
std::array<int, 3> vertex_pass(const FiniteAlgebra& alg, int variant, int w, int a, int b,
                               bool vertex_first) {
    auto vert = [&](int a_in, int b_in) -> std::pair<int, int> {
        int a_out = ev(alg, UBi, a_in, b_in);
        int b_out = ev(alg, OB, b_in, a_out);
        return {a_out, b_out};
    };
    // classical crossing of the sliding strand w with an edge strand e;
    // variant 1: w under, sign -;  variant 2: w over, sign +.
    auto cross = [&](int w_in, int e_in) -> std::pair<int, int> {
        if (variant == 1) {
            int w_out = ev(alg, Op::under_tri_inv, w_in, e_in); // w_in = w_out ul e_in
            int e_out = ev(alg, OL, e_in, w_out);
            return {w_out, e_out};
        }
        int w_out = ev(alg, Op::over_tri_inv, w_in, e_in); // w_in = w_out ol e_in
        int e_out = ev(alg, UL, e_in, w_out);
        return {w_out, e_out};
    };
    if (!vertex_first) {
        auto [w1, a1] = cross(w, a);
        auto [w2, b1] = cross(w1, b);
        auto [a2, b2] = vert(a1, b1);
        return {w2, a2, b2};
    }
    auto [a1, b1] = vert(a, b);
    auto [w1, b2] = cross(w, b1);
    auto [w2, a2] = cross(w1, a1);
    return {w2, a2, b2};
}

std::pair<int, int> axiom_iv(const FiniteAlgebra& a, int eq, int w, int x, int y) {
    // eq encodes (variant, output slot): 1..3 = strand-under w/a/b outputs,
    // 4..6 = strand-over outputs.
    int variant = eq <= 3 ? 1 : 2;
    int slot = (eq - 1) % 3;
    auto lhs = vertex_pass(a, variant, w, x, y, false);
    auto rhs = vertex_pass(a, variant, w, x, y, true);
    return {lhs[slot], rhs[slot]};
}

std::pair<int, int> axiom_v(const FiniteAlgebra& a, int eq, int x, int y, int z) {
    switch (eq) {
    case 1:
        return {ev(a, OL, ev(a, OL, x, y), ev(a, OB, z, y)),
                ev(a, OL, ev(a, OL, x, z), ev(a, UB, y, z))};
    case 2:
        return {ev(a, UL, ev(a, UL, x, y), ev(a, OB, z, y)),
                ev(a, UL, ev(a, UL, x, z), ev(a, UB, y, z))};
    case 3:
        return {ev(a, OB, ev(a, OL, x, y), ev(a, OL, z, y)),
                ev(a, OL, ev(a, OB, x, z), ev(a, UL, y, z))};
    case 4:
        return {ev(a, UB, ev(a, UL, x, y), ev(a, UL, z, y)),
                ev(a, UL, ev(a, UB, x, z), ev(a, OL, y, z))};
    case 5:
        return {ev(a, UB, ev(a, OL, x, y), ev(a, OL, z, y)),
                ev(a, OL, ev(a, UB, x, z), ev(a, UL, y, z))};
    default:
        return {ev(a, OB, ev(a, UL, x, y), ev(a, UL, z, y)),
                ev(a, UL, ev(a, OB, x, z), ev(a, OL, y, z))};
    }
}

std::pair<int, int> axiom_vi(const FiniteAlgebra& a, int x) {
    return {ev(a, UB, x, x), ev(a, OB, x, x)};
}

} // namespace

ValidationReport validate(const FiniteAlgebra& alg) {
    ValidationReport rep;
    rep.flavor = alg.flavor();
    const int n = alg.size();
    const int ops = alg.op_count();
    const bool psy = alg.flavor() == Flavor::psyquandle;

    // (0) right-invertibility: every column of every table is a permutation.
    for (int o = 0; o < ops; ++o) {
        Op op = static_cast<Op>(o);
        if (auto bad = alg.table(op).non_bijective_column()) {
            AxiomViolation v;
            v.axiom = "0";
            v.op = op;
            v.witness = {*bad};
            v.detail = "column " + std::to_string(*bad) + " of " + op_name(op) +
                       " is not a permutation";
            rep.violations.push_back(std::move(v));
        }
    }

    // (i) matching triangle diagonals.
    for (int x = 1; x <= n; ++x) {
        auto [l, r] = axiom_i(alg, x);
        if (l != r)
            rep.violations.push_back({"i", 0, UL, {x}, l, r, ""});
    }

    // (ii) the pair maps S (and S' for psyquandles) are bijections.
    int families = psy ? 2 : 1;
    for (int fam = 0; fam < families; ++fam) {
        if (alg.pair_map_invertible(fam)) continue;
        // locate one collision for the report
        std::vector<int> seen(static_cast<std::size_t>(n) * n, 0);
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y) {
                auto [u, v] = alg.pair_map(fam, x, y);
                int& slot = seen[static_cast<std::size_t>(u - 1) * n + (v - 1)];
                if (slot) {
                    AxiomViolation viol;
                    viol.axiom = "ii";
                    viol.equation = fam + 1;
                    viol.witness = {(slot - 1) / n + 1, (slot - 1) % n + 1, x, y};
                    viol.lhs = u;
                    viol.rhs = v;
                    viol.detail = std::string(fam == 0 ? "S" : "S'") + " is not injective";
                    rep.violations.push_back(std::move(viol));
                    goto next_family;
                }
                slot = (x - 1) * n + (y - 1) + 1;
            }
    next_family:;
    }

    // (iii) exchange laws.
    for (int eq = 1; eq <= 3; ++eq)
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y)
                for (int z = 1; z <= n; ++z) {
                    auto [l, r] = axiom_iii(alg, eq, x, y, z);
                    if (l != r)
                        rep.violations.push_back({"iii", eq, UL, {x, y, z}, l, r, ""});
                }

    if (psy) {
        // (iv) mixed slide conditions; they need the derived inverse tables,
        // so skip when axiom 0 already failed.
        if (alg.column_invertible(UL) && alg.column_invertible(OL) &&
            alg.column_invertible(UB) && alg.column_invertible(OB)) {
            for (int variant = 1; variant <= 2; ++variant)
                for (int w = 1; w <= n; ++w)
                    for (int x = 1; x <= n; ++x)
                        for (int y = 1; y <= n; ++y) {
                            auto lhs = vertex_pass(alg, variant, w, x, y, false);
                            auto rhs = vertex_pass(alg, variant, w, x, y, true);
                            for (int slot = 0; slot < 3; ++slot)
                                if (lhs[slot] != rhs[slot])
                                    rep.violations.push_back({"iv", (variant - 1) * 3 + slot + 1,
                                                              UL, {w, x, y}, lhs[slot], rhs[slot],
                                                              ""});
                        }
        }

        // (v) six triangle/dot interchange equations.
        for (int eq = 1; eq <= 6; ++eq)
            for (int x = 1; x <= n; ++x)
                for (int y = 1; y <= n; ++y)
                    for (int z = 1; z <= n; ++z) {
                        auto [l, r] = axiom_v(alg, eq, x, y, z);
                        if (l != r)
                            rep.violations.push_back({"v", eq, UL, {x, y, z}, l, r, ""});
                    }

        // (vi) pI-adequacy is recorded, not required.
        for (int x = 1; x <= n; ++x) {
            auto [l, r] = axiom_vi(alg, x);
            if (l != r)
                rep.violations.push_back({"vi", 0, UB, {x}, l, r, ""});
        }
        rep.pi_adequate = alg.pi_adequate();
    }

    rep.valid = std::none_of(rep.violations.begin(), rep.violations.end(),
                             [](const AxiomViolation& v) { return v.axiom != "vi"; });
    return rep;
}

std::pair<int, int> eval_axiom_equation(const FiniteAlgebra& alg, std::string_view axiom,
                                        int equation, const std::vector<int>& witness) {
    if (axiom == "i") return axiom_i(alg, witness.at(0));
    if (axiom == "iii") return axiom_iii(alg, equation, witness.at(0), witness.at(1), witness.at(2));
    if (axiom == "iv") return axiom_iv(alg, equation, witness.at(0), witness.at(1), witness.at(2));
    if (axiom == "v") return axiom_v(alg, equation, witness.at(0), witness.at(1), witness.at(2));
    if (axiom == "vi") return axiom_vi(alg, witness.at(0));
    throw std::invalid_argument("axiom " + std::string(axiom) + " has no equation form");
}

// --- modular constructors ---------------------------------------------

namespace {

int mod_unit_check(int n, int v, const char* what) {
    int r = ((v % n) + n) % n;
    if (std::gcd(r, n) != 1)
        throw std::invalid_argument(std::string(what) + " = " + std::to_string(v) +
                                    " is not a unit mod " + std::to_string(n));
    return r;
}

int mod_inverse(int a, int n) {
    for (int x = 1; x < n; ++x)
        if (a * x % n == 1) return x;
    throw std::invalid_argument("no inverse");
}

OperationTable linear_table(int n, int cx, int cy) {
    OperationTable t;
    t.n = n;
    t.cells.assign(static_cast<std::size_t>(n) * n, 0);
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            t.set(x, y, (cx * (x - 1) + cy * (y - 1)) % n + 1);
    return t;
}

} // namespace

FiniteAlgebra make_alexander_biquandle(int n, int t, int s) {
    if (n < 1) throw std::invalid_argument("modulus must be positive");
    int tm = mod_unit_check(n, t, "t");
    int sm = mod_unit_check(n, s, "s");
    int st = ((sm - tm) % n + n) % n;
    std::array<OperationTable, 4> tabs{};
    tabs[0] = linear_table(n, tm, st); // x ul y = t x + (s-t) y
    tabs[1] = linear_table(n, sm, 0);  // x ol y = s x
    return FiniteAlgebra(Flavor::biquandle, std::move(tabs));
}

FiniteAlgebra make_jablan_psyquandle(int n, int t, int s) {
    if (n < 1) throw std::invalid_argument("modulus must be positive");
    if (n % 2 == 0) throw std::invalid_argument("modulus must be odd (2 must be invertible)");
    int tm = mod_unit_check(n, t, "t");
    int sm = mod_unit_check(n, s, "s");
    // The dot ops scale x by (s+t)/2; right-invertibility needs that to be
    // a unit as well.
    mod_unit_check(n, sm + tm, "s+t");
    int inv2 = mod_inverse(2 % n, n);
    int half_sum = (sm + tm) % n * inv2 % n;
    int half_diff = ((sm - tm) % n + n) % n * inv2 % n;
    int st = ((sm - tm) % n + n) % n;
    std::array<OperationTable, 4> tabs{};
    tabs[0] = linear_table(n, tm, st);
    tabs[1] = linear_table(n, sm, 0);
    tabs[2] = linear_table(n, half_sum, half_diff);
    tabs[3] = linear_table(n, half_sum, half_diff);
    return FiniteAlgebra(Flavor::psyquandle, std::move(tabs));
}

} // namespace psyq
