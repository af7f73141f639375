#pragma once

// Independent reference implementations used only by tests.  Everything here
// trades speed for obviousness: interval operations are computed by
// rasterizing onto a half-instant grid, relations and maximal ranges by
// directly transliterating their declarative definitions with explicit
// quantifier loops.  Inputs are confined to a small horizon so exhaustive
// enumeration stays cheap.

#include <algorithm>
#include <vector>

#include "tempest/relations.hpp"
#include "tempest/time_model.hpp"

namespace oracle {

using tempest::Entity;
using tempest::EntitySet;
using tempest::IncompleteInterval;
using tempest::IncompleteIntervalSet;
using tempest::Interval;
using tempest::IntervalSet;
using tempest::kInfinity;
using tempest::RangeTriple;
using tempest::Time;

// ---- rasterization ------------------------------------------------------
//
// Intervals are closed segments of the real line.  Sampling at every half
// instant of [0, horizon] captures interiors exactly for integer endpoints:
// cell k represents the point k/2.  Open intervals are drawn up to the
// horizon, which callers choose strictly greater than every finite endpoint
// + 1 so that a run touching the horizon is unambiguously open.

struct Raster {
    std::vector<char> cells;  // index k == point k/2
    Time horizon;
};

inline Raster rasterize(const IntervalSet& s, Time horizon) {
    Raster r{std::vector<char>(static_cast<std::size_t>(2 * horizon + 1), 0), horizon};
    for (const Interval& iv : s) {
        Time hi = iv.right_open() ? horizon : iv.end;
        for (Time k = 2 * iv.start; k <= 2 * hi; ++k) r.cells[static_cast<std::size_t>(k)] = 1;
    }
    return r;
}

// Extract maximal runs and close them back onto integer endpoints.  A run
// reaching the horizon comes from an open interval and maps back to inf.
inline IntervalSet derasterize(const Raster& r) {
    IntervalSet out;
    const auto& c = r.cells;
    std::size_t n = c.size();
    std::size_t k = 0;
    while (k < n) {
        if (!c[k]) {
            ++k;
            continue;
        }
        std::size_t j = k;
        while (j + 1 < n && c[j + 1]) ++j;
        // close the run onto the integer grid: floor the start, ceil the end
        Time start = static_cast<Time>(k) / 2;
        Time end = static_cast<Time>(j + 1) / 2;
        if (j == n - 1) end = kInfinity;  // touched the horizon: open
        if (end > start) out.push_back({start, end});
        k = j + 1;
    }
    return out;
}

enum class SetOp { Union, Intersect, Subtract };

// A cell is interior to the covered set if its immediate neighbours are
// covered too; the horizon cell of an open interval counts as covered on the
// right.  Subtraction removes interiors only, so shared endpoints survive.
inline bool interior(const Raster& r, std::size_t k) {
    bool left = k > 0 && r.cells[k - 1];
    bool right = (k + 1 < r.cells.size() && r.cells[k + 1]) ||
                 (k == r.cells.size() - 1);  // horizon cell of an open interval
    return left && right;
}

inline IntervalSet interval_op(SetOp op, const IntervalSet& a, const IntervalSet& b,
                               Time horizon) {
    Raster ra = rasterize(a, horizon), rb = rasterize(b, horizon);
    Raster out{std::vector<char>(ra.cells.size(), 0), horizon};
    for (std::size_t k = 0; k < ra.cells.size(); ++k) {
        switch (op) {
            case SetOp::Union: out.cells[k] = ra.cells[k] || rb.cells[k]; break;
            case SetOp::Intersect: out.cells[k] = ra.cells[k] && rb.cells[k]; break;
            case SetOp::Subtract:
                out.cells[k] = ra.cells[k] && !(rb.cells[k] && interior(rb, k));
                break;
        }
    }
    return derasterize(out);
}

// ---- maximal range ------------------------------------------------------
//
// Enumerate every candidate [ts, te] (and [ts, inf)) over the instants that
// occur in the input and keep those satisfying the four defining conditions:
// the opening formula holds at ts, the closing one (without the opener) at
// te, every earlier opening instant was already closed before ts, and no
// closing instant lies strictly inside (ts, te).

inline bool phi_at(const std::vector<RangeTriple>& rows, Time t) {
    for (const RangeTriple& r : rows)
        if (r.t == t) return r.phi_true;
    return false;
}

inline bool closes_at(const std::vector<RangeTriple>& rows, Time t) {
    for (const RangeTriple& r : rows)
        if (r.t == t) return r.psi_true && !r.phi_true;
    return false;
}

inline IntervalSet maximal_range_reference(const std::vector<RangeTriple>& rows) {
    std::vector<Time> instants;
    for (const RangeTriple& r : rows) instants.push_back(r.t);
    auto earlier_starts_closed = [&](Time ts) {
        for (Time u : instants) {
            if (u >= ts || !phi_at(rows, u)) continue;
            bool closed = false;
            for (Time v : instants)
                if (v > u && v < ts && closes_at(rows, v)) closed = true;
            if (!closed) return false;
        }
        return true;
    };
    auto no_close_inside = [&](Time ts, Time te) {
        for (Time v : instants)
            if (v > ts && v < te && closes_at(rows, v)) return false;
        return true;
    };
    IntervalSet out;
    for (Time ts : instants) {
        if (!phi_at(rows, ts) || !earlier_starts_closed(ts)) continue;
        for (Time te : instants)
            if (te > ts && closes_at(rows, te) && no_close_inside(ts, te))
                out.push_back({ts, te});
        bool any_close_after = false;
        for (Time v : instants)
            if (v > ts && closes_at(rows, v)) any_close_after = true;
        if (!any_close_after) out.push_back({ts, kInfinity});
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---- relations ----------------------------------------------------------
//
// Literal pairwise checks.  Only *complete* results are produced here; the
// incomplete-evaluation rules have their own dedicated example tests.

inline bool entity_open(const Entity& e) { return e.right_open() && !e.is_instant(); }

inline bool before_pair_holds(const EntitySet& l, const EntitySet& r, const Entity& a,
                              const Entity& b) {
    if (entity_open(a)) return false;
    if (a.end >= b.start) return false;
    for (const Entity& x : l.items)  // a left entity ends strictly in between
        if (!entity_open(x) && x.end > a.end && x.end < b.start) return false;
    for (const Entity& y : r.items)  // a right entity starts strictly in between
        if (y.start > a.end && y.start < b.start) return false;
    return true;
}

inline IntervalSet relation_reference(tempest::RelationKind kind, const EntitySet& l,
                                      const EntitySet& r) {
    using tempest::RelationKind;
    IntervalSet out;
    for (const Entity& a : l.items) {
        for (const Entity& b : r.items) {
            bool a_open = entity_open(a), b_open = entity_open(b);
            bool a_inst = a.is_instant(), b_inst = b.is_instant();
            switch (kind) {
                case RelationKind::Before:
                    if (before_pair_holds(l, r, a, b)) out.push_back({a.start, b.end});
                    break;
                case RelationKind::Meets:
                    if (!a_inst && !a_open && !b_inst && a.end == b.start)
                        out.push_back({a.start, b.end});
                    break;
                case RelationKind::Overlaps:
                    if (!a_inst && !a_open && !b_inst && a.start < b.start && b.start < a.end &&
                        a.end < b.end)
                        out.push_back({a.start, b.end});
                    break;
                case RelationKind::Finishes:
                    if (b_inst || b_open) break;
                    if (a_inst && a.end == b.end) out.push_back({b.start, b.end});
                    if (!a_inst && !a_open && a.end == b.end && b.start < a.start)
                        out.push_back({b.start, b.end});
                    break;
                case RelationKind::Starts:
                    if (b_inst) break;
                    if (a_inst && a.start == b.start) out.push_back({b.start, b.end});
                    if (!a_inst && !a_open && a.start == b.start && a.end < b.end)
                        out.push_back({b.start, b.end});
                    break;
                case RelationKind::Equals:
                    if (!a_inst && !b_inst && !a_open && !b_open && a.start == b.start &&
                        a.end == b.end)
                        out.push_back({a.start, a.end});
                    break;
                case RelationKind::Contains:
                    if (a_inst) break;
                    if (b_inst && a.start < b.start && b.end < a.end)
                        out.push_back({a.start, a.end});
                    if (!b_inst && !b_open && a.start < b.start && b.end < a.end)
                        out.push_back({a.start, a.end});
                    break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace oracle
