#include "psyq/endo.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace psyq {

EndoMap identity_endo(int n) {
    EndoMap f;
    f.images.resize(n);
    for (int i = 0; i < n; ++i) f.images[i] = i + 1;
    return f;
}

EndoMap compose(const EndoMap& f, const EndoMap& g) {
    EndoMap h;
    h.images.resize(g.images.size());
    for (std::size_t i = 0; i < g.images.size(); ++i) h.images[i] = f(g.images[i]);
    return h;
}

std::optional<EndoViolation> endo_violation(const FiniteAlgebra& alg,
                                            const std::vector<int>& images) {
    int n = alg.size();
    for (int o = 0; o < alg.op_count(); ++o) {
        Op op = static_cast<Op>(o);
        const OperationTable& t = alg.table(op);
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y)
                if (images[t.at(x, y) - 1] != t.at(images[x - 1], images[y - 1]))
                    return EndoViolation{op, x, y};
    }
    return std::nullopt;
}

bool is_endomorphism(const FiniteAlgebra& alg, const std::vector<int>& images) {
    return !endo_violation(alg, images);
}

int EndoSet::index_of(const EndoMap& f) const {
    auto it = std::lower_bound(maps.begin(), maps.end(), f);
    if (it == maps.end() || !(*it == f)) return -1;
    return static_cast<int>(it - maps.begin());
}

namespace {

bool check_closure(const FiniteAlgebra& alg, std::vector<EndoMap>& maps) {
    (void)alg;
    for (const EndoMap& f : maps)
        for (const EndoMap& g : maps) {
            EndoMap h = compose(f, g);
            if (!std::binary_search(maps.begin(), maps.end(), h)) return false;
        }
    return true;
}

// Backtracking enumeration: assign f(1), f(2), ... and check every pair
// whose operation result already has an assigned image.
void enum_rec(const FiniteAlgebra& alg, std::vector<int>& images, int v,
              std::vector<EndoMap>& out) {
    int n = alg.size();
    if (v > n) {
        out.push_back({images});
        return;
    }
    for (int img = 1; img <= n; ++img) {
        images[v - 1] = img;
        bool ok = true;
        for (int o = 0; o < alg.op_count() && ok; ++o) {
            const OperationTable& t = alg.table(static_cast<Op>(o));
            for (int x = 1; x <= v && ok; ++x)
                for (int y = 1; y <= v; ++y) {
                    int z = t.at(x, y);
                    if (z <= v && images[z - 1] != t.at(images[x - 1], images[y - 1])) {
                        ok = false;
                        break;
                    }
                }
        }
        if (ok) enum_rec(alg, images, v + 1, out);
    }
    images[v - 1] = 0;
}

} // namespace

EndoSet enumerate_endomorphisms(const FiniteAlgebra& alg) {
    if (alg.size() > 12)
        throw std::invalid_argument("endomorphism enumeration is bounded to n <= 12");
    EndoSet s;
    std::vector<int> images(alg.size(), 0);
    enum_rec(alg, images, 1, s.maps);
    // ascending assignment order already yields lexicographic order
    s.closed_under_composition = check_closure(alg, s.maps);
    return s;
}

EndoSet parse_endo_set(const FiniteAlgebra& alg, std::string_view text) {
    EndoSet s;
    int n = alg.size();
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string line(text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                        : eol - pos));
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::istringstream is(line);
        std::vector<int> images;
        int v;
        while (is >> v) images.push_back(v);
        if (images.empty()) continue;
        if (static_cast<int>(images.size()) != n)
            throw ParseError(line_no, 1, "expected " + std::to_string(n) + " images, got " +
                                             std::to_string(images.size()));
        for (int img : images)
            if (img < 1 || img > n)
                throw ParseError(line_no, 1, "image " + std::to_string(img) + " out of range");
        if (auto viol = endo_violation(alg, images))
            throw ParseError(line_no, 1,
                             "not an endomorphism: fails " + op_name(viol->op) + " at (x, y) = (" +
                                 std::to_string(viol->x) + ", " + std::to_string(viol->y) + ")");
        s.maps.push_back({std::move(images)});
    }
    std::sort(s.maps.begin(), s.maps.end());
    s.maps.erase(std::unique(s.maps.begin(), s.maps.end()), s.maps.end());
    s.closed_under_composition = check_closure(alg, s.maps);
    return s;
}

std::string serialize_endo_set(const EndoSet& s) {
    std::ostringstream os;
    for (const EndoMap& f : s.maps) {
        for (std::size_t i = 0; i < f.images.size(); ++i)
            os << (i ? " " : "") << f.images[i];
        os << '\n';
    }
    return os.str();
}

EndoSet singleton_endo_set(const FiniteAlgebra& alg, EndoMap f) {
    if (auto viol = endo_violation(alg, f.images))
        throw std::invalid_argument("map is not an endomorphism: fails " + op_name(viol->op));
    EndoSet s;
    s.maps.push_back(std::move(f));
    s.closed_under_composition = check_closure(alg, s.maps);
    return s;
}

} // namespace psyq
