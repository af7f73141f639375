#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tempest/time_model.hpp"

// Interval relations over sets of temporal entities.  An operand is either a
// set of instants or a set of intervals; interval operands may be
// "disjoint-ordered" (the shape of state results, enabling the linear
// two-pointer join for `before`) or general (possibly overlapping, the shape
// of dynamic-phenomenon results).
//
// Relation results are interval sets that need not be disjoint.  Evaluation
// is relative to a query time: entities whose ends are not yet known (open
// intervals, or the absence of a future partner) yield incomplete intervals
// describing what is still plausible, which drive retention upstream.

namespace tempest {

enum class RelationKind { Before, Meets, Overlaps, Finishes, Starts, Equals, Contains };

const char* relation_name(RelationKind k);

// One known operand entity.  An instant is stored as start == end; an open
// interval as end == kInfinity.  Interval entities always have start < end.
struct Entity {
    Time start = 0;
    Time end = 0;

    bool is_instant() const { return start == end; }
    bool right_open() const { return end == kInfinity; }

    friend bool operator==(const Entity&, const Entity&) = default;
    friend auto operator<=>(const Entity&, const Entity&) = default;
};

enum class EntityShape {
    Instants,           // every entity degenerate, strictly ascending
    DisjointIntervals,  // intervals, pairwise disjoint and non-touching, ordered
    Intervals,          // intervals, ordered by (start, end), may overlap
};

// An operand whose own evaluation may be partially unknown: `pending` are
// started-but-unfinished results of a nested relation (known start, end
// somewhere in [domain_lo, inf)).
struct PendingEntity {
    Time start = 0;
    Time domain_lo = 0;
};

struct EntitySet {
    EntityShape shape = EntityShape::Intervals;
    std::vector<Entity> items;
    std::vector<PendingEntity> pending;

    static EntitySet instants(const InstantSet& ts);
    static EntitySet disjoint(const IntervalSet& ivs);
    static EntitySet general(const IntervalSet& ivs);
};

// Thrown when an operand shape violates the relation's typing rule (e.g.
// instants on either side of `meets`).  The language front end rejects such
// programs statically; this guards direct library use.
struct IllegalOperandKind : std::invalid_argument {
    explicit IllegalOperandKind(const std::string& what) : std::invalid_argument(what) {}
};

// A complete result: span plus the operand indices that produced it
// (indices into EntitySet::items of each side).
struct RelationHit {
    Interval span;
    std::int32_t left = -1;
    std::int32_t right = -1;
};

// A started-but-undecided result.  `left`/`right` identify contributing
// known entities (-1 when absent); `left_pending`/`right_pending` identify
// contributing pending operand entities (-1 when absent).
struct RelationIncomplete {
    IncompleteInterval inc;
    std::int32_t left = -1;
    std::int32_t right = -1;
    std::int32_t left_pending = -1;
    std::int32_t right_pending = -1;
};

struct RelationOutcome {
    std::vector<RelationHit> hits;
    std::vector<RelationIncomplete> incompletes;
};

// Full evaluation at query time `tq`: complete pairs, the paper rules for
// unknown status (missing future partner, open-ended operands), and
// feasibility screening of pending operand entities against known blockers.
RelationOutcome evaluate_relation(RelationKind kind, const EntitySet& left, const EntitySet& right,
                                  Time tq);

// Spec-surface wrappers returning plain sets (hits deduplicated and ordered).
std::pair<IntervalSet, IncompleteIntervalSet> rel_before(const EntitySet& left,
                                                         const EntitySet& right, Time tq);
std::pair<IntervalSet, IncompleteIntervalSet> rel_allen(RelationKind kind, const EntitySet& left,
                                                        const EntitySet& right, Time tq);

}  // namespace tempest
