#pragma once

#include <cstddef>
#include <utility>

#include "tempest/time_model.hpp"

// Instant and interval operations.  All functions are pure; inputs are
// expected in canonical form (ascending instants, ordered interval sets) and
// outputs are canonical as well.  Interval-operation outputs (union,
// intersection, complement, maximal range) are disjoint and non-touching.

namespace tempest {

// ---- instant operations ------------------------------------------------

InstantSet instant_and(const InstantSet& a, const InstantSet& b);
InstantSet instant_or(const InstantSet& a, const InstantSet& b);

// Complement of `a` within the evaluation window's instants.
InstantSet instant_not(const InstantSet& a, const InstantSet& window_instants);

// Starts of every interval; ends of every finite interval.  An open interval
// contributes no end instant.
InstantSet start_instants(const IntervalSet& s);
InstantSet end_instants(const IntervalSet& s);

// ---- maximal range -----------------------------------------------------

// One maximal interval reported by the scan, with the index range
// [first_triple, last_triple] of the input rows it consumed.  Callers that
// track per-instant metadata (e.g. provenance) fold it over that range.
struct RangeHit {
    Interval span;
    std::size_t first_triple = 0;
    std::size_t last_triple = 0;
};

// Single left-to-right scan over merged (t, phi, psi) rows, ascending in t.
// An interval opens at the first phi-instant while none is pending and closes
// at the next instant where psi holds and phi does not.  A pending interval
// still open when the input is exhausted is reported as [start, inf) by the
// law of inertia.
std::vector<RangeHit> maximal_range_scan(const std::vector<RangeTriple>& rows);

// Convenience wrapper returning only the intervals.
IntervalSet maximal_range(const std::vector<RangeTriple>& rows);

// Merge two instant sets into scan rows (phi := membership in `phi`,
// psi := membership in `psi`).
std::vector<RangeTriple> make_range_rows(const InstantSet& phi, const InstantSet& psi);

// ---- interval operations -----------------------------------------------

// Temporal union: coalesces overlapping *and* touching intervals.  Inputs are
// each disjoint-ordered; the result is disjoint and non-touching.
IntervalSet coalesce_union(const IntervalSet& a, const IntervalSet& b);

// One intersection fragment together with the indices of the operand
// intervals that produced it.
struct PairHit {
    Interval span;
    std::size_t a_index = 0;
    std::size_t b_index = 0;
};

std::vector<PairHit> intersection_scan(const IntervalSet& a, const IntervalSet& b);
IntervalSet intersection(const IntervalSet& a, const IntervalSet& b);

// One remainder fragment of a \ b: the piece of a[a_index] that survives,
// plus the half-open index range [b_first, b_first+b_count) of b-intervals
// overlapping a[a_index] (the evidence that shaped the fragment).
struct CutHit {
    Interval span;
    std::size_t a_index = 0;
    std::size_t b_first = 0;
    std::size_t b_count = 0;
};

// Temporal complement a \ b.  Subtracts the open interior of every
// b-interval, so shared endpoints survive: {[0,2],[3,5]} \ {[1,4]} is
// {[0,1],[4,5]}.
std::vector<CutHit> complement_scan(const IntervalSet& a, const IntervalSet& b);
IntervalSet complement(const IntervalSet& a, const IntervalSet& b);

}  // namespace tempest
