#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "psyq/parse_error.hpp"

namespace psyq {

enum class PassKind { classical_over, classical_under, singular, pre, virtual_ };
enum class Role { none, a, b };

// One crossing passage along a strand. sign is +1/-1 (0 for virtual passes);
// role is set for singular/pre passes only.
struct CrossingPass {
    PassKind kind;
    int crossing_id;
    int sign;
    Role role;

    bool is_virtual() const { return kind == PassKind::virtual_; }
    bool operator==(const CrossingPass&) const = default;
};

enum class DiagramKind { classical, virtual_, singular, pseudo, mixed };

std::string diagram_kind_name(DiagramKind k);

// An oriented combinatorial diagram: cyclic pass sequences, one per
// component. Crossingless components are allowed (empty pass list).
struct DiagramCode {
    std::vector<std::vector<CrossingPass>> components;

    // classical < virtual < singular/pseudo; mixed when both singular and
    // pre crossings occur. Virtual passes do not affect the
    // singular/pseudo classification (they are transparent to coloring).
    DiagramKind kind() const;

    bool has_kind(PassKind k) const;
    int max_crossing_id() const;

    bool operator==(const DiagramCode&) const = default;
};

// The arc between two consecutive non-virtual passes of a component.
// Semiarc k of a component starts at (leaves) its k-th non-virtual pass;
// global order is component order, then traversal order. A crossingless
// component contributes one semiarc with from_pass = to_pass = -1.
struct Semiarc {
    int index;
    int component;
    int from_pass; // component-local position of the starting pass
    int to_pass;   // component-local position of the ending pass
};

enum class CrossingKind { classical, singular, pre };

// Per-crossing coloring constraint. Side a is the under strand (classical)
// or the role-a strand (singular/pre); side b the over / role-b strand.
// in_* are the semiarcs oriented into the crossing, out_* out of it.
//
// Consumed by the solver with the sideways-map semantics
//   sign +:  in_b = out_b op^ in_a   and   out_a = in_a op_ out_b
//   sign -:  in_a = out_a op_ in_b   and   out_b = in_b op^ out_a
// over the triangle ops for classical crossings and the dot ops for
// singular/pre ones. Both forms say the pair map S of the family carries
// (in_a, out_b) to (in_b, out_a), resp. (out_a, in_b) to (out_b, in_a),
// which is what makes the counting invariant stable under the moves.
struct CrossingConstraint {
    int crossing_id;
    CrossingKind kind;
    int sign;
    int in_a, in_b, out_a, out_b;
};

// --- file format ------------------------------------------------------
//
// One line per component; '#' starts a comment. Tokens:
//   O<id><sign>  U<id><sign>          classical over/under pass
//   Sa<id>[sign] Sb<id>[sign]         singular pass, roles a/b
//   Pa<id>[sign] Pb<id>[sign]         pre-crossing pass, roles a/b
//   V<id>                             virtual pass
//   .                                 crossingless component
// sign is '+' or '-'; singular/pre default to '+' when omitted.

DiagramCode parse_diagram(std::string_view text);
std::string serialize_diagram(const DiagramCode& d);

std::vector<Semiarc> semiarcs(const DiagramCode& d);
int semiarc_count(const DiagramCode& d);
std::vector<CrossingConstraint> crossing_constraints(const DiagramCode& d);

enum class Move { r1_plus, r1_minus, r2 };

Move move_from_name(std::string_view name); // "r1+", "r1-", "r2"
std::string move_name(Move m);

// Insert Reidemeister I kinks / II pokes at seed-determined positions.
// The result is a diagram of the same (virtual) link type, so every
// coloring-derived invariant must agree with the input's.
DiagramCode perturb(const DiagramCode& d, std::span<const Move> moves, std::uint64_t seed);

} // namespace psyq
