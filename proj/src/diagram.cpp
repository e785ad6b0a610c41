#include "psyq/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <sstream>

namespace psyq {

std::string diagram_kind_name(DiagramKind k) {
    switch (k) {
    case DiagramKind::classical: return "classical";
    case DiagramKind::virtual_: return "virtual";
    case DiagramKind::singular: return "singular";
    case DiagramKind::pseudo: return "pseudo";
    default: return "mixed";
    }
}

DiagramKind DiagramCode::kind() const {
    bool sing = has_kind(PassKind::singular);
    bool pre = has_kind(PassKind::pre);
    if (sing && pre) return DiagramKind::mixed;
    if (pre) return DiagramKind::pseudo;
    if (sing) return DiagramKind::singular;
    if (has_kind(PassKind::virtual_)) return DiagramKind::virtual_;
    return DiagramKind::classical;
}

bool DiagramCode::has_kind(PassKind k) const {
    for (const auto& comp : components)
        for (const auto& p : comp)
            if (p.kind == k) return true;
    return false;
}

int DiagramCode::max_crossing_id() const {
    int m = 0;
    for (const auto& comp : components)
        for (const auto& p : comp)
            m = std::max(m, p.crossing_id);
    return m;
}

namespace {

struct PassRef {
    int component;
    int position;
    const CrossingPass* pass;
};

// Structural validation shared by the parser and perturb; throws ParseError
// with line 0 when no source position is available.
void check_structure(const DiagramCode& d, int line = 0) {
    if (d.components.empty()) throw ParseError(line, 1, "no components");
    std::map<int, std::vector<PassRef>> by_id;
    for (int c = 0; c < static_cast<int>(d.components.size()); ++c)
        for (int i = 0; i < static_cast<int>(d.components[c].size()); ++i) {
            const CrossingPass& p = d.components[c][i];
            if (p.crossing_id <= 0)
                throw ParseError(line, 1, "crossing ids must be positive");
            by_id[p.crossing_id].push_back({c, i, &p});
        }
    for (auto& [id, refs] : by_id) {
        if (refs.size() != 2)
            throw ParseError(line, 1, "crossing " + std::to_string(id) + " appears " +
                                          std::to_string(refs.size()) + " times, expected 2");
        const CrossingPass& p = *refs[0].pass;
        const CrossingPass& q = *refs[1].pass;
        auto base = [](PassKind k) {
            return k == PassKind::classical_over ? PassKind::classical_under : k;
        };
        if (base(p.kind) != base(q.kind))
            throw ParseError(line, 1, "crossing " + std::to_string(id) +
                                          " mixes incompatible pass kinds");
        switch (p.kind) {
        case PassKind::classical_over:
        case PassKind::classical_under:
            if (p.kind == q.kind)
                throw ParseError(line, 1, "classical crossing " + std::to_string(id) +
                                              " needs one over and one under pass");
            if (p.sign != q.sign)
                throw ParseError(line, 1, "crossing " + std::to_string(id) +
                                              " has mismatched signs");
            break;
        case PassKind::singular:
        case PassKind::pre:
            if (p.role == q.role)
                throw ParseError(line, 1, "crossing " + std::to_string(id) +
                                              " needs one role-a and one role-b pass");
            if (p.sign != q.sign)
                throw ParseError(line, 1, "crossing " + std::to_string(id) +
                                              " has mismatched signs");
            break;
        case PassKind::virtual_:
            break;
        }
    }
}

} // namespace

DiagramCode parse_diagram(std::string_view text) {
    DiagramCode d;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);

        std::vector<CrossingPass> comp;
        bool placeholder = false;
        std::size_t i = 0;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) { ++i; continue; }
            int col = static_cast<int>(i) + 1;
            std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::string_view tok = line.substr(start, i - start);

            if (tok == ".") { placeholder = true; continue; }

            CrossingPass p{};
            std::size_t k = 0;
            if (tok[0] == 'O') { p.kind = PassKind::classical_over; p.role = Role::none; k = 1; }
            else if (tok[0] == 'U') { p.kind = PassKind::classical_under; p.role = Role::none; k = 1; }
            else if (tok[0] == 'V') { p.kind = PassKind::virtual_; p.role = Role::none; k = 1; }
            else if (tok.substr(0, 2) == "Sa") { p.kind = PassKind::singular; p.role = Role::a; k = 2; }
            else if (tok.substr(0, 2) == "Sb") { p.kind = PassKind::singular; p.role = Role::b; k = 2; }
            else if (tok.substr(0, 2) == "Pa") { p.kind = PassKind::pre; p.role = Role::a; k = 2; }
            else if (tok.substr(0, 2) == "Pb") { p.kind = PassKind::pre; p.role = Role::b; k = 2; }
            else
                throw ParseError(line_no, col, "unknown token '" + std::string(tok) + "'");

            std::size_t dstart = k;
            while (k < tok.size() && std::isdigit(static_cast<unsigned char>(tok[k]))) ++k;
            if (k == dstart)
                throw ParseError(line_no, col, "missing crossing id in '" + std::string(tok) + "'");
            p.crossing_id = 0;
            for (std::size_t j = dstart; j < k; ++j) p.crossing_id = p.crossing_id * 10 + (tok[j] - '0');

            if (p.kind == PassKind::virtual_) {
                p.sign = 0;
                if (k != tok.size())
                    throw ParseError(line_no, col, "virtual pass takes no sign: '" + std::string(tok) + "'");
            } else if (k == tok.size()) {
                if (p.kind == PassKind::classical_over || p.kind == PassKind::classical_under)
                    throw ParseError(line_no, col,
                                     "classical pass needs an explicit sign: '" + std::string(tok) + "'");
                p.sign = +1; // singular/pre default
            } else if (k + 1 == tok.size() && (tok[k] == '+' || tok[k] == '-')) {
                p.sign = tok[k] == '+' ? +1 : -1;
            } else {
                throw ParseError(line_no, col, "bad sign suffix in '" + std::string(tok) + "'");
            }
            comp.push_back(p);
        }
        if (!comp.empty() && placeholder)
            throw ParseError(line_no, 1, "'.' cannot be combined with passes");
        if (!comp.empty() || placeholder) d.components.push_back(std::move(comp));
    }
    check_structure(d, 1);
    return d;
}

std::string serialize_diagram(const DiagramCode& d) {
    std::ostringstream os;
    for (const auto& comp : d.components) {
        if (comp.empty()) { os << ".\n"; continue; }
        bool first = true;
        for (const auto& p : comp) {
            if (!first) os << ' ';
            first = false;
            switch (p.kind) {
            case PassKind::classical_over: os << 'O'; break;
            case PassKind::classical_under: os << 'U'; break;
            case PassKind::singular: os << (p.role == Role::a ? "Sa" : "Sb"); break;
            case PassKind::pre: os << (p.role == Role::a ? "Pa" : "Pb"); break;
            case PassKind::virtual_: os << 'V'; break;
            }
            os << p.crossing_id;
            if (p.kind != PassKind::virtual_) os << (p.sign > 0 ? '+' : '-');
        }
        os << '\n';
    }
    return os.str();
}

std::vector<Semiarc> semiarcs(const DiagramCode& d) {
    std::vector<Semiarc> out;
    for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
        const auto& comp = d.components[c];
        bool any = false;
        for (int i = 0; i < static_cast<int>(comp.size()); ++i) {
            if (comp[i].is_virtual()) continue;
            any = true;
            // ends at the next non-virtual pass (cyclically)
            int j = i;
            do { j = (j + 1) % static_cast<int>(comp.size()); } while (comp[j].is_virtual());
            out.push_back({static_cast<int>(out.size()), c, i, j});
        }
        if (!any) out.push_back({static_cast<int>(out.size()), c, -1, -1});
    }
    return out;
}

int semiarc_count(const DiagramCode& d) { return static_cast<int>(semiarcs(d).size()); }

std::vector<CrossingConstraint> crossing_constraints(const DiagramCode& d) {
    // Semiarc leaving the k-th non-virtual pass of component c has global
    // index base[c] + k; the semiarc entering it is the previous one.
    std::vector<int> base(d.components.size() + 1, 0);
    std::vector<int> nv_count(d.components.size(), 0);
    for (std::size_t c = 0; c < d.components.size(); ++c) {
        int m = 0;
        for (const auto& p : d.components[c])
            if (!p.is_virtual()) ++m;
        nv_count[c] = m;
        base[c + 1] = base[c] + std::max(m, 1);
    }

    struct Side {
        int in = -1, out = -1;
        bool set = false;
        Role role = Role::none;
        PassKind kind{};
        int sign = 0;
    };
    std::map<int, std::pair<Side, Side>> sides; // first = occurrence order

    for (std::size_t c = 0; c < d.components.size(); ++c) {
        int k = 0;
        int m = nv_count[c];
        for (const auto& p : d.components[c]) {
            if (p.is_virtual()) continue;
            Side s;
            s.set = true;
            s.in = base[c] + (k - 1 + m) % m;
            s.out = base[c] + k;
            s.role = p.role;
            s.kind = p.kind;
            s.sign = p.sign;
            auto& pr = sides[p.crossing_id];
            if (!pr.first.set) pr.first = s; else pr.second = s;
            ++k;
        }
    }

    std::vector<CrossingConstraint> out;
    for (auto& [id, pr] : sides) {
        const Side& s1 = pr.first;
        const Side& s2 = pr.second;
        CrossingConstraint cc{};
        cc.crossing_id = id;
        cc.sign = s1.sign;
        const Side* a;
        const Side* b;
        if (s1.kind == PassKind::classical_over || s1.kind == PassKind::classical_under) {
            cc.kind = CrossingKind::classical;
            a = s1.kind == PassKind::classical_under ? &s1 : &s2;
            b = s1.kind == PassKind::classical_under ? &s2 : &s1;
        } else {
            cc.kind = s1.kind == PassKind::singular ? CrossingKind::singular : CrossingKind::pre;
            a = s1.role == Role::a ? &s1 : &s2;
            b = s1.role == Role::a ? &s2 : &s1;
        }
        cc.in_a = a->in;
        cc.out_a = a->out;
        cc.in_b = b->in;
        cc.out_b = b->out;
        out.push_back(cc);
    }
    return out;
}

Move move_from_name(std::string_view name) {
    if (name == "r1+") return Move::r1_plus;
    if (name == "r1-") return Move::r1_minus;
    if (name == "r2") return Move::r2;
    throw std::invalid_argument("unknown move '" + std::string(name) + "' (want r1+, r1-, r2)");
}

std::string move_name(Move m) {
    switch (m) {
    case Move::r1_plus: return "r1+";
    case Move::r1_minus: return "r1-";
    default: return "r2";
    }
}

DiagramCode perturb(const DiagramCode& d, std::span<const Move> moves, std::uint64_t seed) {
    DiagramCode out = d;
    std::mt19937_64 rng(seed);
    auto pick_point = [&]() -> std::pair<int, int> {
        // uniform over all insertion positions across components
        std::size_t total = 0;
        for (const auto& comp : out.components) total += comp.size() + 1;
        std::uniform_int_distribution<std::size_t> dist(0, total - 1);
        std::size_t r = dist(rng);
        for (int c = 0;; ++c) {
            if (r <= out.components[c].size()) return {c, static_cast<int>(r)};
            r -= out.components[c].size() + 1;
        }
    };
    auto insert_at = [&](int c, int pos, std::vector<CrossingPass> passes) {
        auto& comp = out.components[c];
        comp.insert(comp.begin() + pos, passes.begin(), passes.end());
    };

    for (Move m : moves) {
        int id = out.max_crossing_id() + 1;
        if (m == Move::r1_plus || m == Move::r1_minus) {
            int sign = m == Move::r1_plus ? +1 : -1;
            auto [c, pos] = pick_point();
            insert_at(c, pos,
                      {{PassKind::classical_over, id, sign, Role::none},
                       {PassKind::classical_under, id, sign, Role::none}});
        } else {
            int id2 = id + 1;
            auto p1 = pick_point();
            auto p2 = pick_point();
            std::vector<CrossingPass> over = {{PassKind::classical_over, id, +1, Role::none},
                                              {PassKind::classical_over, id2, -1, Role::none}};
            std::vector<CrossingPass> under = {{PassKind::classical_under, id, +1, Role::none},
                                               {PassKind::classical_under, id2, -1, Role::none}};
            if (p1 == p2) {
                // same spot: nest the pairs (two successive kinks)
                insert_at(p1.first, p1.second,
                          {over[0], over[1], under[1], under[0]});
            } else {
                // insert the later point first so positions stay valid
                if (p1.first == p2.first && p1.second < p2.second) std::swap(p1, p2);
                insert_at(p1.first, p1.second, over);
                insert_at(p2.first, p2.second, under);
            }
        }
    }
    check_structure(out);
    return out;
}

} // namespace psyq
