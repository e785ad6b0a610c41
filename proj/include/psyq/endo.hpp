#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psyq/algebra.hpp"

namespace psyq {

// A self-map of the carrier, images[x-1] = f(x).
struct EndoMap {
    std::vector<int> images;

    int operator()(int x) const { return images[x - 1]; }
    bool operator==(const EndoMap&) const = default;
    auto operator<=>(const EndoMap&) const = default;
};

EndoMap identity_endo(int n);
EndoMap compose(const EndoMap& f, const EndoMap& g); // x -> f(g(x))

// First violated instance when a map fails f(x op y) = f(x) op f(y).
struct EndoViolation {
    Op op;
    int x, y;
};

// Exhaustive check over every declared operation and pair.
std::optional<EndoViolation> endo_violation(const FiniteAlgebra& alg,
                                            const std::vector<int>& images);
bool is_endomorphism(const FiniteAlgebra& alg, const std::vector<int>& images);

struct EndoSet {
    std::vector<EndoMap> maps; // lexicographically sorted, duplicate-free
    bool closed_under_composition = false;

    std::size_t count() const { return maps.size(); }
    int index_of(const EndoMap& f) const;
};

// Complete enumeration of Hom(X, X) by backtracking over images with
// incremental homomorphism checks; equals the brute-force filter of all
// n^n maps. Guarded to n <= 12.
EndoSet enumerate_endomorphisms(const FiniteAlgebra& alg);

// Endo-set file: one map per line, n whitespace-separated images; '#'
// comments allowed. Every line must pass the endomorphism check.
EndoSet parse_endo_set(const FiniteAlgebra& alg, std::string_view text);
std::string serialize_endo_set(const EndoSet& s);

EndoSet singleton_endo_set(const FiniteAlgebra& alg, EndoMap f);

} // namespace psyq
