#include "psyq/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace psyq {

int ColoringSet::index_of(const std::vector<int>& values) const {
    Coloring key{values};
    auto it = std::lower_bound(colorings.begin(), colorings.end(), key);
    if (it == colorings.end() || !(*it == key)) return -1;
    return static_cast<int>(it - colorings.begin());
}

namespace {

// The constraint of one crossing in pair-map form: (u, v) = S_fam(x, y),
// i.e. u = y op^ x and v = x op_ y over the crossing's operation family.
struct Quad {
    int fam; // 0 = triangle ops, 1 = dot ops
    int x, y, u, v; // semiarc indices
};

struct Instance {
    const FiniteAlgebra* alg;
    int n = 0;
    int semiarc_total = 0;
    std::vector<Quad> quads;
    std::vector<std::vector<int>> adj; // semiarc -> quad indices
};

void check_gating(const FiniteAlgebra& alg, const DiagramCode& d) {
    bool sing = d.has_kind(PassKind::singular);
    bool pre = d.has_kind(PassKind::pre);
    if ((sing || pre) && alg.flavor() != Flavor::psyquandle)
        throw std::invalid_argument("diagram has singular/pre crossings; dot operations "
                                    "are absent from a biquandle");
    if (pre && !alg.pi_adequate())
        throw std::invalid_argument("diagram has pre-crossings; the psyquandle must be "
                                    "pI-adequate to color it");
    bool fams[2] = {false, false};
    for (const auto& cc : crossing_constraints(d))
        fams[cc.kind == CrossingKind::classical ? 0 : 1] = true;
    for (int fam = 0; fam < 2; ++fam) {
        if (!fams[fam]) continue;
        Op a = static_cast<Op>(2 * fam);
        Op b = static_cast<Op>(2 * fam + 1);
        if (!alg.column_invertible(a) || !alg.column_invertible(b) ||
            !alg.pair_map_invertible(fam))
            throw std::invalid_argument("algebra is not valid (right-invertibility or pair "
                                        "map fails) for the " +
                                        std::string(fam == 0 ? "triangle" : "dot") +
                                        " operations the diagram needs");
    }
}

Instance build_instance(const FiniteAlgebra& alg, const DiagramCode& d) {
    Instance inst;
    inst.alg = &alg;
    inst.n = alg.size();
    inst.semiarc_total = semiarc_count(d);
    for (const auto& cc : crossing_constraints(d)) {
        Quad q;
        q.fam = cc.kind == CrossingKind::classical ? 0 : 1;
        if (cc.sign >= 0) {
            q.x = cc.in_a; q.y = cc.out_b; q.u = cc.in_b; q.v = cc.out_a;
        } else {
            q.x = cc.out_a; q.y = cc.in_b; q.u = cc.out_b; q.v = cc.in_a;
        }
        inst.quads.push_back(q);
    }
    inst.adj.assign(inst.semiarc_total, {});
    for (int qi = 0; qi < static_cast<int>(inst.quads.size()); ++qi) {
        const Quad& q = inst.quads[qi];
        for (int s : {q.x, q.y, q.u, q.v}) {
            auto& lst = inst.adj[s];
            if (lst.empty() || lst.back() != qi) lst.push_back(qi);
        }
    }
    return inst;
}

class Solver {
public:
    explicit Solver(const Instance& inst)
        : inst_(inst), values_(inst.semiarc_total, 0) {}

    ColoringSet run() {
        ColoringSet out;
        dfs(out);
        return out;
    }

private:
    const Instance& inst_;
    std::vector<int> values_;
    std::vector<int> trail_;

    bool set(int s, int v) {
        if (values_[s] != 0) return values_[s] == v;
        values_[s] = v;
        trail_.push_back(s);
        return true;
    }

    // Re-derive whatever the quad's relations force from its known slots.
    // Returns false on conflict; appends newly assigned semiarcs via set().
    bool propagate(const Quad& q) {
        const FiniteAlgebra& a = *inst_.alg;
        int under = 2 * q.fam, over = 2 * q.fam + 1;
        int x = values_[q.x], y = values_[q.y], u = values_[q.u], v = values_[q.v];
        if (x && y)
            return set(q.u, a.fwd(over, y, x)) && set(q.v, a.fwd(under, x, y));
        if (u && v) {
            auto [nx, ny] = a.pair_map_inverse(q.fam, u, v);
            return set(q.x, nx) && set(q.y, ny);
        }
        if (x && u) {
            int ny = a.inv(over, u, x); // y with y op^ x = u
            return set(q.y, ny) && set(q.v, a.fwd(under, x, ny));
        }
        if (y && v) {
            int nx = a.inv(under, v, y); // x with x op_ y = v
            return set(q.x, nx) && set(q.u, a.fwd(over, y, nx));
        }
        return true; // 0 or 1 known, or an (x,v)/(y,u) pair: branch later
    }

    bool closure(std::size_t from) {
        // process every semiarc assigned since `from`, fixpoint style
        for (std::size_t i = from; i < trail_.size(); ++i)
            for (int qi : inst_.adj[trail_[i]])
                if (!propagate(inst_.quads[qi])) return false;
        return true;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            values_[trail_.back()] = 0;
            trail_.pop_back();
        }
    }

    void dfs(ColoringSet& out) {
        int s = -1;
        for (int i = 0; i < inst_.semiarc_total; ++i)
            if (values_[i] == 0) { s = i; break; }
        if (s == -1) {
            out.colorings.push_back({values_});
            return;
        }
        for (int v = 1; v <= inst_.n; ++v) {
            std::size_t mark = trail_.size();
            if (set(s, v) && closure(mark)) dfs(out);
            undo(mark);
        }
    }
};

} // namespace

ColoringSet enumerate_colorings(const FiniteAlgebra& alg, const DiagramCode& d) {
    check_gating(alg, d);
    Instance inst = build_instance(alg, d);
    return Solver(inst).run();
}

long counting_invariant(const FiniteAlgebra& alg, const DiagramCode& d) {
    return static_cast<long>(enumerate_colorings(alg, d).count());
}

ColoringSet brute_force_colorings(const FiniteAlgebra& alg, const DiagramCode& d) {
    check_gating(alg, d);
    Instance inst = build_instance(alg, d);
    double work = std::pow(static_cast<double>(inst.n), inst.semiarc_total);
    if (work > 1e7)
        throw std::invalid_argument("instance too large for the brute-force oracle");

    ColoringSet out;
    std::vector<int> vals(inst.semiarc_total, 1);
    const FiniteAlgebra& a = alg;
    for (;;) {
        bool ok = true;
        for (const Quad& q : inst.quads) {
            if (vals[q.u] != a.fwd(2 * q.fam + 1, vals[q.y], vals[q.x]) ||
                vals[q.v] != a.fwd(2 * q.fam, vals[q.x], vals[q.y])) {
                ok = false;
                break;
            }
        }
        if (ok) out.colorings.push_back({vals});
        int i = inst.semiarc_total - 1;
        while (i >= 0 && vals[i] == inst.n) vals[i--] = 1;
        if (i < 0) break;
        ++vals[i];
    }
    return out;
}

} // namespace psyq
