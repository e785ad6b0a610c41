#pragma once

#include <string>
#include <vector>

#include "psyq/coloring.hpp"
#include "psyq/endo.hpp"
#include "psyq/polynomial.hpp"

namespace psyq {

// Directed multigraph edge: vertex indices into the coloring set, plus the
// index of the endomorphism that induced it.
struct QuiverEdge {
    int source;
    int target;
    int endo;
    bool operator==(const QuiverEdge&) const = default;
};

// Coloring quiver: a vertex per coloring (canonical order), an edge
// f -> phi(f) per (coloring, endomorphism) pair. Loops and parallel edges
// count; out-degree of every vertex equals |S|.
struct Quiver {
    ColoringSet vertices;
    std::vector<QuiverEdge> edges;
    int endo_count = 0;

    std::vector<long> in_degrees() const;
};

// Throws std::logic_error if some phi(f) is not itself a coloring (that
// would mean an upstream algebra/solver defect, the theory rules it out).
Quiver build_quiver(const ColoringSet& colorings, const EndoSet& endos);

// Loops count 1 toward in-degree.
InDegreePolynomial in_degree_polynomial(const Quiver& q);

// Deterministic DOT rendering: vertices labeled with their coloring tuple
// in canonical order, one edge statement per edge, endo index as label.
std::string export_dot(const Quiver& q);

// Exact directed-multigraph isomorphism with degree-partition pruning.
// Both quivers must have at most 12 vertices (throws otherwise).
bool quivers_isomorphic(const Quiver& a, const Quiver& b);

} // namespace psyq
