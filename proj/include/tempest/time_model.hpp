#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <vector>

// Discrete time model shared by every layer of the engine.
//
// Time is the non-negative integers. An interval is either [start, end] with
// start < end, or right-open [start, inf). Degenerate single-instant
// "intervals" are not representable on purpose: phenomena that hold at a
// single instant are instants, not intervals.

namespace tempest {

using Time = std::int64_t;

// Sentinel for a right-open interval end ("inf" in the stream syntax).
// Greater than every admissible instant.
inline constexpr Time kInfinity = std::numeric_limits<Time>::max();

struct Interval {
    Time start = 0;
    Time end = kInfinity;

    bool right_open() const { return end == kInfinity; }
    bool valid() const { return start >= 0 && start < end; }

    friend bool operator==(const Interval&, const Interval&) = default;
    // (start, end) lexicographic order; the canonical order for interval sets.
    friend auto operator<=>(const Interval&, const Interval&) = default;
};

// Strictly ascending instants.
using InstantSet = std::vector<Time>;

// Ordered by (start, end). Results of interval *operations* are additionally
// disjoint and non-touching; results of interval *relations* need not be.
using IntervalSet = std::vector<Interval>;

// An interval whose start is known but whose end has not been observed yet.
// end_domain is the set of instants the end may still take, always of the
// form [lo, inf).
struct IncompleteInterval {
    Time start = 0;
    Interval end_domain{0, kInfinity};

    bool valid() const { return end_domain.start > start; }

    friend bool operator==(const IncompleteInterval&, const IncompleteInterval&) = default;
    friend auto operator<=>(const IncompleteInterval&, const IncompleteInterval&) = default;
};

using IncompleteIntervalSet = std::vector<IncompleteInterval>;

// One instant of the merged input to the maximal-range scan: whether the
// opening formula and/or the closing formula holds at t.  At least one flag
// is set (instants where neither holds are never materialized).
struct RangeTriple {
    Time t = 0;
    bool phi_true = false;
    bool psi_true = false;

    friend bool operator==(const RangeTriple&, const RangeTriple&) = default;
};

// ---- validation helpers (used by tests and debug assertions) ----

inline bool strictly_ascending(const InstantSet& s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] >= s[i]) return false;
    return true;
}

inline bool ordered_by_start_end(const IntervalSet& s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!(s[i - 1] < s[i])) return false;
    return true;
}

// Disjoint and non-touching: every interval ends strictly before the next
// one starts.  This is the shape invariant of all state-valued results.
inline bool disjoint_non_touching(const IntervalSet& s) {
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i - 1].right_open()) return false;  // nothing may follow an open interval
        if (s[i - 1].end >= s[i].start) return false;
    }
    return true;
}

inline std::ostream& operator<<(std::ostream& os, const Interval& iv) {
    os << '[' << iv.start << ',';
    if (iv.right_open())
        os << "inf)";
    else
        os << iv.end << ']';
    return os;
}

inline std::ostream& operator<<(std::ostream& os, const IncompleteInterval& inc) {
    os << '[' << inc.start << ",?) end in [" << inc.end_domain.start << ",inf)";
    return os;
}

}  // namespace tempest
