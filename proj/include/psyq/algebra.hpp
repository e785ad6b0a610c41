#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psyq/parse_error.hpp"

namespace psyq {

enum class Flavor { biquandle, psyquandle };

std::string flavor_name(Flavor f);

// The four binary operations of a psyquandle, in block order. A biquandle
// only carries the first two. Inverse ids refer to the derived column
// inverses (inverse in the first argument).
enum class Op : int {
    under_tri = 0, // x  |>_  y   (strand passing under / role a)
    over_tri  = 1, // x  |>^  y   (strand passing over  / role b)
    under_dot = 2, // x  o_   y   (singular/pre, role a)
    over_dot  = 3, // x  o^   y   (singular/pre, role b)
    under_tri_inv = 4,
    over_tri_inv  = 5,
    under_dot_inv = 6,
    over_dot_inv  = 7,
};

// CLI-facing names: ul, ol, ub, ob, ul_inv, ol_inv, ub_inv, ob_inv.
std::optional<Op> op_from_name(std::string_view name);
std::string op_name(Op op);

// An n x n table over the carrier {1..n}; entry(x, y) = x op y.
struct OperationTable {
    int n = 0;
    std::vector<std::uint8_t> cells; // row-major, values 1..n

    int at(int x, int y) const { return cells[static_cast<std::size_t>(x - 1) * n + (y - 1)]; }
    void set(int x, int y, int v) { cells[static_cast<std::size_t>(x - 1) * n + (y - 1)] = static_cast<std::uint8_t>(v); }
    bool empty() const { return cells.empty(); }

    // Every column map x -> x op y must be a bijection for the table to be
    // right-invertible. Returns the first offending column, if any.
    std::optional<int> non_bijective_column() const;

    // Column-inverse table: result.at(z, y) = x  with  x op y = z.
    // Only meaningful when all columns are bijective.
    OperationTable column_inverse() const;

    bool operator==(const OperationTable&) const = default;
};

// One failed axiom instance. `axiom` is one of {0,i,ii,iii,iv,v,vi};
// `equation` disambiguates multi-equation axioms (1-based), 0 otherwise.
// For equational axioms lhs/rhs are the two evaluated sides at `witness`.
struct AxiomViolation {
    std::string axiom;
    int equation = 0;
    Op op = Op::under_tri;   // which table, for axiom 0 column failures
    std::vector<int> witness; // elements involved
    int lhs = 0;
    int rhs = 0;
    std::string detail;
};

struct ValidationReport {
    bool valid = false;
    Flavor flavor = Flavor::biquandle;
    bool pi_adequate = false;
    std::vector<AxiomViolation> violations;

    bool has(std::string_view axiom) const;
};

// A finite psyquandle or biquandle given by explicit operation tables,
// together with the derived data the solver needs: column inverses and the
// pair maps S (triangle ops) and S' (dot ops), S(x,y) = (y ol x, x ul y).
class FiniteAlgebra {
public:
    FiniteAlgebra() = default;
    FiniteAlgebra(Flavor flavor, std::array<OperationTable, 4> tables);

    Flavor flavor() const { return flavor_; }
    int size() const { return n_; }
    int op_count() const { return flavor_ == Flavor::psyquandle ? 4 : 2; }

    const OperationTable& table(Op op) const;
    bool has_op(Op op) const;

    // Raw table application; inverse ops go through the derived tables.
    // Throws std::domain_error if the op is absent for this flavor or the
    // inverse is undefined (axiom 0 failure).
    int apply(Op op, int x, int y) const;

    // Fast unchecked lookups for the solver hot path.
    int fwd(int op_index, int x, int y) const { return tables_[op_index].at(x, y); }
    int inv(int op_index, int x, int y) const { return inverses_[op_index].at(x, y); }

    bool column_invertible(Op op) const { return column_ok_[static_cast<int>(op) & 3]; }

    // Pair map S over the triangle ops (family 0) or S' over the dot ops
    // (family 1): family_pair_map(fam, x, y) = (y op1 x, x op0 y).
    std::pair<int, int> pair_map(int family, int x, int y) const;
    bool pair_map_invertible(int family) const { return !pair_inv_[family].empty(); }
    std::pair<int, int> pair_map_inverse(int family, int u, int v) const;

    // pI-adequacy: diag(ub) == diag(ob). Always false for biquandles.
    bool pi_adequate() const { return pi_adequate_; }

    bool operator==(const FiniteAlgebra& other) const {
        return flavor_ == other.flavor_ && tables_ == other.tables_;
    }

private:
    void derive();

    Flavor flavor_ = Flavor::biquandle;
    int n_ = 0;
    std::array<OperationTable, 4> tables_{};
    std::array<OperationTable, 4> inverses_{};
    std::array<bool, 4> column_ok_{};
    // pair_inv_[fam][(u-1)*n + (v-1)] = encoded (x-1)*n + (y-1), or empty if
    // the pair map is not a bijection.
    std::array<std::vector<int>, 2> pair_inv_{};
    bool pi_adequate_ = false;
};

// --- file format ------------------------------------------------------
//
// line 1:  <flavor> <n>     flavor in {psyquandle, biquandle}
// then n rows of 4n (psyquandle) or 2n (biquandle) integers in 1..n,
// blocks left to right: ul, ol, ub, ob. '#' starts a comment; '|' is
// ignored so printed block matrices paste directly.

FiniteAlgebra parse_algebra(std::string_view text);
std::string serialize_algebra(const FiniteAlgebra& alg);

// Exhaustive axiom check; never throws, failures are reported.
ValidationReport validate(const FiniteAlgebra& alg);

// Re-evaluate one equational axiom instance against the tables; used to
// confirm reported violations. Returns (lhs, rhs).
std::pair<int, int> eval_axiom_equation(const FiniteAlgebra& alg, std::string_view axiom,
                                        int equation, const std::vector<int>& witness);

// Alexander biquandle on Z_n: x ul y = t*x + (s-t)*y, x ol y = s*x, with the
// carrier 1..n standing for residues 0..n-1 (element k <-> residue k-1).
// Requires t, s units mod n.
FiniteAlgebra make_alexander_biquandle(int n, int t, int s);

// Jablan psyquandle on Z_n (n odd): triangle ops as Alexander, and both dot
// ops equal to ((s+t)/2)x + ((s-t)/2)y. Requires t, s and s+t units mod n;
// the s+t condition is what makes the dot ops right-invertible.
FiniteAlgebra make_jablan_psyquandle(int n, int t, int s);

} // namespace psyq
