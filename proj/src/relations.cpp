#include "tempest/relations.hpp"

#include <algorithm>
#include <cassert>

namespace tempest {

const char* relation_name(RelationKind k) {
    switch (k) {
        case RelationKind::Before: return "before";
        case RelationKind::Meets: return "meets";
        case RelationKind::Overlaps: return "overlaps";
        case RelationKind::Finishes: return "finishes";
        case RelationKind::Starts: return "starts";
        case RelationKind::Equals: return "equals";
        case RelationKind::Contains: return "contains";
    }
    return "?";
}

EntitySet EntitySet::instants(const InstantSet& ts) {
    EntitySet s;
    s.shape = EntityShape::Instants;
    s.items.reserve(ts.size());
    for (Time t : ts) s.items.push_back({t, t});
    return s;
}

EntitySet EntitySet::disjoint(const IntervalSet& ivs) {
    EntitySet s;
    s.shape = EntityShape::DisjointIntervals;
    s.items.reserve(ivs.size());
    for (const Interval& iv : ivs) s.items.push_back({iv.start, iv.end});
    return s;
}

EntitySet EntitySet::general(const IntervalSet& ivs) {
    EntitySet s;
    s.shape = EntityShape::Intervals;
    s.items.reserve(ivs.size());
    for (const Interval& iv : ivs) s.items.push_back({iv.start, iv.end});
    return s;
}

namespace {

bool open_interval(const Entity& e) { return e.right_open() && !e.is_instant(); }

void check_operands(RelationKind kind, const EntitySet& l, const EntitySet& r) {
    bool li = l.shape == EntityShape::Instants;
    bool ri = r.shape == EntityShape::Instants;
    auto reject = [&](const char* side) {
        throw IllegalOperandKind(std::string(relation_name(kind)) +
                                 ": instant-typed operand not allowed on " + side + " side");
    };
    switch (kind) {
        case RelationKind::Before:
            return;  // all four operand combinations admitted
        case RelationKind::Meets:
        case RelationKind::Overlaps:
        case RelationKind::Equals:
            if (li) reject("left");
            if (ri) reject("right");
            return;
        case RelationKind::Finishes:
        case RelationKind::Starts:
            if (ri) reject("right");  // left may be instants
            return;
        case RelationKind::Contains:
            if (li) reject("left");  // right may be instants
            return;
    }
}

// Sorted blocker values for the before-contiguity test: the pairing
// (l, r) is void if any left entity ends, or any right entity starts,
// strictly inside (a, b).
struct BlockerIndex {
    std::vector<Time> left_ends;     // finite ends (instants count as ends)
    std::vector<Time> right_starts;  // starts (instants count as starts)

    BlockerIndex(const EntitySet& l, const EntitySet& r) {
        for (const Entity& e : l.items)
            if (!open_interval(e)) left_ends.push_back(e.end);
        for (const Entity& e : r.items) right_starts.push_back(e.start);
        std::sort(left_ends.begin(), left_ends.end());
        std::sort(right_starts.begin(), right_starts.end());
    }

    static bool none_inside(const std::vector<Time>& v, Time a, Time b) {
        auto it = std::upper_bound(v.begin(), v.end(), a);
        return it == v.end() || *it >= b;
    }

    bool clear(Time a, Time b) const {
        return none_inside(left_ends, a, b) && none_inside(right_starts, a, b);
    }
};

void add_rule4_open_left(const EntitySet& l, Time tq, RelationOutcome& out) {
    // An open-ended left operand entity leaves the relation undecided until
    // the end shows up; the earliest instant that can decide it is two past
    // the query time (the partner still needs room to the right).
    for (std::size_t i = 0; i < l.items.size(); ++i) {
        if (!open_interval(l.items[i])) continue;
        out.incompletes.push_back(
            {IncompleteInterval{l.items[i].start, {tq + 2, kInfinity}},
             static_cast<std::int32_t>(i), -1, -1, -1});
    }
}

void add_rule1_missing_partner(const EntitySet& l, const EntitySet& r, RelationOutcome& out) {
    // Entities sharing the latest *finite* end have no partner yet iff no
    // right entity starts later.  Open-ended left entities are excluded:
    // their end is not known to be latest and they never block a future
    // pairing of an earlier entity, so they are covered by the open-operand
    // rule instead.
    Time t_last = -1;
    for (const Entity& e : l.items)
        if (!open_interval(e)) t_last = std::max(t_last, e.end);
    if (t_last < 0) return;
    for (const Entity& e : r.items)
        if (e.start > t_last) return;
    for (std::size_t i = 0; i < l.items.size(); ++i) {
        const Entity& e = l.items[i];
        if (open_interval(e) || e.end != t_last) continue;
        out.incompletes.push_back({IncompleteInterval{e.start, {t_last + 2, kInfinity}},
                                   static_cast<std::int32_t>(i), -1, -1, -1});
    }
}

RelationOutcome before_two_pointer(const EntitySet& l, const EntitySet& r, Time tq) {
    // Linear join over two sequential operands (instants or disjoint-ordered
    // intervals): ends and starts are both ascending, so a single forward
    // pass enumerates exactly the unblocked pairs.
    RelationOutcome out;
    const auto& L = l.items;
    const auto& R = r.items;
    std::size_t i = 0, y = 0;
    while (i < L.size()) {
        if (open_interval(L[i])) {
            // Only reachable as the trailing entity of a disjoint set.
            add_rule4_open_left(l, tq, out);
            return out;
        }
        while (y < R.size() && R[y].start <= L[i].end) ++y;
        if (y == R.size()) {
            // Nothing starts after L[i].end, hence after any later end either:
            // the last finite-ending entity is missing its partner.
            add_rule1_missing_partner(l, r, out);
            add_rule4_open_left(l, tq, out);
            return out;
        }
        // Slide to the last entity still ending before the partner: any
        // earlier one is blocked by that end sitting strictly in between.
        while (i + 1 < L.size() && L[i + 1].end < R[y].start) ++i;
        out.hits.push_back({Interval{L[i].start, R[y].end}, static_cast<std::int32_t>(i),
                            static_cast<std::int32_t>(y)});
        ++i;
    }
    return out;
}

RelationOutcome before_general(const EntitySet& l, const EntitySet& r, Time tq) {
    RelationOutcome out;
    BlockerIndex blockers(l, r);
    for (std::size_t i = 0; i < l.items.size(); ++i) {
        const Entity& le = l.items[i];
        if (open_interval(le)) continue;
        for (std::size_t j = 0; j < r.items.size(); ++j) {
            const Entity& re = r.items[j];
            if (le.end >= re.start) continue;
            if (!blockers.clear(le.end, re.start)) continue;
            out.hits.push_back({Interval{le.start, re.end}, static_cast<std::int32_t>(i),
                                static_cast<std::int32_t>(j)});
        }
    }
    add_rule1_missing_partner(l, r, out);
    add_rule4_open_left(l, tq, out);
    return out;
}

RelationOutcome allen_general(RelationKind kind, const EntitySet& l, const EntitySet& r,
                              Time tq) {
    RelationOutcome out;
    auto hit = [&out](Time s, Time e, std::size_t i, std::size_t j) {
        out.hits.push_back(
            {Interval{s, e}, static_cast<std::int32_t>(i), static_cast<std::int32_t>(j)});
    };
    for (std::size_t i = 0; i < l.items.size(); ++i) {
        const Entity& le = l.items[i];
        bool le_open = open_interval(le);
        bool saw_closed_witness = false;  // contains bookkeeping
        std::size_t open_witnesses = 0;
        for (std::size_t j = 0; j < r.items.size(); ++j) {
            const Entity& re = r.items[j];
            bool re_open = open_interval(re);
            switch (kind) {
                case RelationKind::Meets:
                    if (!le_open && le.end == re.start) hit(le.start, re.end, i, j);
                    break;
                case RelationKind::Overlaps:
                    if (!le_open && le.start < re.start && re.start < le.end && le.end < re.end)
                        hit(le.start, re.end, i, j);
                    break;
                case RelationKind::Finishes:
                    // An open right side cannot be finished by anything known:
                    // its eventual end exceeds the query time and hence every
                    // known end.
                    if (re_open) break;
                    if (le.is_instant() && le.end == re.end) hit(re.start, re.end, i, j);
                    if (!le.is_instant() && !le_open && le.end == re.end && re.start < le.start)
                        hit(re.start, re.end, i, j);
                    break;
                case RelationKind::Starts:
                    if (le.is_instant() && le.start == re.start) hit(re.start, re.end, i, j);
                    if (!le.is_instant() && !le_open && le.start == re.start && le.end < re.end)
                        hit(re.start, re.end, i, j);
                    if (!le.is_instant() && le_open && re_open && le.start == re.start)
                        out.incompletes.push_back(
                            {IncompleteInterval{le.start, {tq + 1, kInfinity}},
                             static_cast<std::int32_t>(i), static_cast<std::int32_t>(j), -1, -1});
                    break;
                case RelationKind::Equals:
                    if (!le_open && !re_open && le.start == re.start && le.end == re.end)
                        hit(le.start, le.end, i, j);
                    if (le_open && re_open && le.start == re.start)
                        out.incompletes.push_back(
                            {IncompleteInterval{le.start, {tq + 1, kInfinity}},
                             static_cast<std::int32_t>(i), static_cast<std::int32_t>(j), -1, -1});
                    break;
                case RelationKind::Contains: {
                    if (le.start >= re.start) break;  // witness must start strictly inside
                    bool witness_closed = re.is_instant() || !re_open;
                    if (!le_open) {
                        if (witness_closed && re.end < le.end) hit(le.start, le.end, i, j);
                        // A closed container cannot contain an open witness.
                    } else {
                        if (witness_closed) {
                            hit(le.start, kInfinity, i, j);
                            saw_closed_witness = true;
                        } else {
                            ++open_witnesses;
                        }
                    }
                    break;
                }
                case RelationKind::Before:
                    assert(false && "before handled separately");
                    break;
            }
        }
        if (kind == RelationKind::Contains && le_open && !saw_closed_witness) {
            // Open container, nothing definitely inside yet: undecided until
            // either a closed witness or the container's own end arrives.
            if (open_witnesses > 0) {
                for (std::size_t j = 0; j < r.items.size(); ++j) {
                    const Entity& re = r.items[j];
                    if (open_interval(re) && re.start > le.start)
                        out.incompletes.push_back(
                            {IncompleteInterval{le.start, {tq + 1, kInfinity}},
                             static_cast<std::int32_t>(i), static_cast<std::int32_t>(j), -1, -1});
                }
            } else {
                out.incompletes.push_back({IncompleteInterval{le.start, {tq + 1, kInfinity}},
                                           static_cast<std::int32_t>(i), -1, -1, -1});
            }
        }
    }
    if (kind == RelationKind::Meets || kind == RelationKind::Overlaps ||
        kind == RelationKind::Finishes)
        add_rule4_open_left(l, tq, out);
    return out;
}

// Can a known left entity still pair with a pending right-hand entity whose
// end is only known to lie in [domain_lo, inf)?  Checks the order constraints
// on the known values; existentially satisfiable constraints on the unknown
// end count as feasible.
bool pending_pair_feasible(RelationKind kind, const Entity& le, const PendingEntity& u,
                           const BlockerIndex* blockers) {
    bool le_iv = !le.is_instant();
    if (open_interval(le)) {
        // Open left entities are already covered by their own incomplete
        // record; a pending partner adds nothing sharper.
        return kind == RelationKind::Contains && le.start < u.start;
    }
    switch (kind) {
        case RelationKind::Before:
            return le.end < u.start && blockers && blockers->clear(le.end, u.start);
        case RelationKind::Meets:
            return le_iv && le.end == u.start;
        case RelationKind::Overlaps:
            return le_iv && le.start < u.start && u.start < le.end;
        case RelationKind::Finishes:
            return le.is_instant() ? (u.start < le.end && le.end >= u.domain_lo)
                                   : (u.start < le.start && le.end >= u.domain_lo);
        case RelationKind::Starts:
            // The unknown end only needs to exceed le.end; its domain is
            // unbounded above, so the start equality decides feasibility.
            return le.start == u.start;
        case RelationKind::Equals:
            return le_iv && le.start == u.start && le.end >= u.domain_lo;
        case RelationKind::Contains:
            return le_iv && le.start < u.start && u.domain_lo < le.end;
    }
    return false;
}

Time pending_span_start(RelationKind kind, const Entity& le, const PendingEntity& u) {
    switch (kind) {
        case RelationKind::Before:
        case RelationKind::Meets:
        case RelationKind::Overlaps:
        case RelationKind::Contains:
            return le.start;
        case RelationKind::Finishes:
        case RelationKind::Starts:
        case RelationKind::Equals:
            return u.start;  // the result takes the right-hand interval's start
    }
    return le.start;
}

void add_pending_incompletes(RelationKind kind, const EntitySet& l, const EntitySet& r, Time tq,
                             RelationOutcome& out) {
    // A pending left operand can always be completed by entities that are
    // still in the future (future values are never blocked by known ones),
    // so it propagates unconditionally.
    for (std::size_t pi = 0; pi < l.pending.size(); ++pi) {
        const PendingEntity& u = l.pending[pi];
        out.incompletes.push_back(
            {IncompleteInterval{u.start, {std::max(u.domain_lo, tq + 1), kInfinity}}, -1, -1,
             static_cast<std::int32_t>(pi), -1});
    }
    if (r.pending.empty()) return;
    BlockerIndex blockers(l, r);
    for (std::size_t pj = 0; pj < r.pending.size(); ++pj) {
        const PendingEntity& u = r.pending[pj];
        for (std::size_t i = 0; i < l.items.size(); ++i) {
            const Entity& le = l.items[i];
            if (!pending_pair_feasible(kind, le, u, &blockers)) continue;
            Time s = pending_span_start(kind, le, u);
            out.incompletes.push_back(
                {IncompleteInterval{s, {std::max(u.domain_lo, tq + 1), kInfinity}},
                 static_cast<std::int32_t>(i), -1, -1, static_cast<std::int32_t>(pj)});
        }
    }
}

}  // namespace

RelationOutcome evaluate_relation(RelationKind kind, const EntitySet& left,
                                  const EntitySet& right, Time tq) {
    check_operands(kind, left, right);
    RelationOutcome out;
    if (kind == RelationKind::Before) {
        bool sequential = left.shape != EntityShape::Intervals &&
                          right.shape != EntityShape::Intervals;
        out = sequential ? before_two_pointer(left, right, tq)
                         : before_general(left, right, tq);
    } else {
        out = allen_general(kind, left, right, tq);
    }
    add_pending_incompletes(kind, left, right, tq, out);
    return out;
}

namespace {

std::pair<IntervalSet, IncompleteIntervalSet> collect(const RelationOutcome& out) {
    IntervalSet ivs;
    ivs.reserve(out.hits.size());
    for (const RelationHit& h : out.hits) ivs.push_back(h.span);
    std::sort(ivs.begin(), ivs.end());
    ivs.erase(std::unique(ivs.begin(), ivs.end()), ivs.end());
    IncompleteIntervalSet incs;
    incs.reserve(out.incompletes.size());
    for (const RelationIncomplete& ri : out.incompletes) incs.push_back(ri.inc);
    std::sort(incs.begin(), incs.end());
    incs.erase(std::unique(incs.begin(), incs.end()), incs.end());
    return {std::move(ivs), std::move(incs)};
}

}  // namespace

std::pair<IntervalSet, IncompleteIntervalSet> rel_before(const EntitySet& left,
                                                         const EntitySet& right, Time tq) {
    return collect(evaluate_relation(RelationKind::Before, left, right, tq));
}

std::pair<IntervalSet, IncompleteIntervalSet> rel_allen(RelationKind kind, const EntitySet& left,
                                                        const EntitySet& right, Time tq) {
    if (kind == RelationKind::Before) return rel_before(left, right, tq);
    return collect(evaluate_relation(kind, left, right, tq));
}

}  // namespace tempest
