#pragma once

#include <vector>

#include "psyq/algebra.hpp"
#include "psyq/diagram.hpp"

namespace psyq {

// One coloring: algebra elements indexed by global semiarc order.
struct Coloring {
    std::vector<int> values;
    bool operator==(const Coloring&) const = default;
    auto operator<=>(const Coloring&) const = default;
};

// Complete, duplicate-free, lexicographically sorted coloring list.
struct ColoringSet {
    std::vector<Coloring> colorings;

    std::size_t count() const { return colorings.size(); }
    // index in canonical order, or -1
    int index_of(const std::vector<int>& values) const;
    bool operator==(const ColoringSet&) const = default;
};

// Exact enumeration of all colorings: depth-first assignment in semiarc
// order, with outputs forced through table lookups as soon as a crossing
// has enough assigned slots. Result equals the brute-force filter of all
// n^(#semiarcs) assignments.
//
// Gating: pre passes require a pI-adequate psyquandle, singular passes a
// psyquandle; the algebra's tables must be right-invertible with bijective
// pair maps for the operation families the diagram uses (throws
// std::invalid_argument otherwise).
ColoringSet enumerate_colorings(const FiniteAlgebra& alg, const DiagramCode& d);

long counting_invariant(const FiniteAlgebra& alg, const DiagramCode& d);

// Test oracle: filters every assignment against every constraint using
// forward table lookups only. Requires n^(#semiarcs) <= 10^7.
ColoringSet brute_force_colorings(const FiniteAlgebra& alg, const DiagramCode& d);

} // namespace psyq
