#include "psyq/quiver.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace psyq {

std::vector<long> Quiver::in_degrees() const {
    std::vector<long> deg(vertices.count(), 0);
    for (const QuiverEdge& e : edges) ++deg[e.target];
    return deg;
}

Quiver build_quiver(const ColoringSet& colorings, const EndoSet& endos) {
    Quiver q;
    q.vertices = colorings;
    q.endo_count = static_cast<int>(endos.count());
    for (int f = 0; f < static_cast<int>(colorings.count()); ++f) {
        const std::vector<int>& vals = colorings.colorings[f].values;
        for (int e = 0; e < q.endo_count; ++e) {
            const EndoMap& phi = endos.maps[e];
            std::vector<int> img(vals.size());
            for (std::size_t i = 0; i < vals.size(); ++i) img[i] = phi(vals[i]);
            int tgt = colorings.index_of(img);
            if (tgt < 0)
                throw std::logic_error("endomorphism image of a coloring is not a coloring; "
                                       "upstream algebra or solver defect");
            q.edges.push_back({f, tgt, e});
        }
    }
    return q;
}

InDegreePolynomial in_degree_polynomial(const Quiver& q) {
    InDegreePolynomial p;
    for (long d : q.in_degrees()) p.add_term(d, 1);
    return p;
}

namespace {

std::string tuple_label(const Coloring& c) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < c.values.size(); ++i) {
        if (i) os << ", ";
        os << c.values[i];
    }
    os << ')';
    return os.str();
}

} // namespace

std::string export_dot(const Quiver& q) {
    std::ostringstream os;
    os << "digraph coloring_quiver {\n";
    for (const Coloring& c : q.vertices.colorings)
        os << "  \"" << tuple_label(c) << "\";\n";
    for (const QuiverEdge& e : q.edges)
        os << "  \"" << tuple_label(q.vertices.colorings[e.source]) << "\" -> \""
           << tuple_label(q.vertices.colorings[e.target]) << "\" [label=\"" << e.endo
           << "\"];\n";
    os << "}\n";
    return os.str();
}

namespace {

// multiplicity matrix m[i][j] = number of edges i -> j
std::vector<std::vector<int>> mult_matrix(const Quiver& q) {
    std::size_t n = q.vertices.count();
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (const QuiverEdge& e : q.edges) ++m[e.source][e.target];
    return m;
}

// per-vertex invariant used to prune the bijection search
struct VertexKey {
    long in = 0, out = 0, loops = 0;
    std::vector<int> out_profile; // sorted multiplicities
    std::vector<int> in_profile;
    bool operator==(const VertexKey&) const = default;
    auto operator<=>(const VertexKey&) const = default;
};

std::vector<VertexKey> vertex_keys(const std::vector<std::vector<int>>& m) {
    std::size_t n = m.size();
    std::vector<VertexKey> keys(n);
    for (std::size_t i = 0; i < n; ++i) {
        VertexKey& k = keys[i];
        k.loops = m[i][i];
        for (std::size_t j = 0; j < n; ++j) {
            k.out += m[i][j];
            k.in += m[j][i];
            if (m[i][j]) k.out_profile.push_back(m[i][j]);
            if (m[j][i]) k.in_profile.push_back(m[j][i]);
        }
        std::sort(k.out_profile.begin(), k.out_profile.end());
        std::sort(k.in_profile.begin(), k.in_profile.end());
    }
    return keys;
}

bool extend(const std::vector<std::vector<int>>& ma, const std::vector<std::vector<int>>& mb,
            const std::vector<VertexKey>& ka, const std::vector<VertexKey>& kb,
            std::vector<int>& map, std::vector<char>& used, std::size_t i) {
    std::size_t n = ma.size();
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
        if (used[j] || !(ka[i] == kb[j])) continue;
        bool ok = true;
        for (std::size_t p = 0; p < i && ok; ++p)
            ok = ma[i][p] == mb[j][map[p]] && ma[p][i] == mb[map[p]][j];
        if (ok && ma[i][i] == mb[j][j]) {
            map[i] = static_cast<int>(j);
            used[j] = 1;
            if (extend(ma, mb, ka, kb, map, used, i + 1)) return true;
            used[j] = 0;
        }
    }
    return false;
}

} // namespace

bool quivers_isomorphic(const Quiver& a, const Quiver& b) {
    if (a.vertices.count() > 12 || b.vertices.count() > 12)
        throw std::invalid_argument("isomorphism search is bounded to 12 vertices");
    if (a.vertices.count() != b.vertices.count() || a.edges.size() != b.edges.size())
        return false;
    auto ma = mult_matrix(a), mb = mult_matrix(b);
    auto ka = vertex_keys(ma), kb = vertex_keys(mb);
    auto ska = ka, skb = kb;
    std::sort(ska.begin(), ska.end());
    std::sort(skb.begin(), skb.end());
    if (ska != skb) return false;
    std::vector<int> map(ma.size(), -1);
    std::vector<char> used(ma.size(), 0);
    return extend(ma, mb, ka, kb, map, used, 0);
}

} // namespace psyq
