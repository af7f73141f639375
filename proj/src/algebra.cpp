#include "tempest/algebra.hpp"

#include <algorithm>
#include <cassert>

namespace tempest {

InstantSet instant_and(const InstantSet& a, const InstantSet& b) {
    InstantSet out;
    out.reserve(std::min(a.size(), b.size()));
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

InstantSet instant_or(const InstantSet& a, const InstantSet& b) {
    InstantSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

InstantSet instant_not(const InstantSet& a, const InstantSet& window_instants) {
    InstantSet out;
    out.reserve(window_instants.size());
    std::set_difference(window_instants.begin(), window_instants.end(), a.begin(), a.end(),
                        std::back_inserter(out));
    return out;
}

InstantSet start_instants(const IntervalSet& s) {
    InstantSet out;
    out.reserve(s.size());
    for (const Interval& iv : s) out.push_back(iv.start);
    // Interval sets ordered by (start, end) may repeat a start; instants are a set.
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

InstantSet end_instants(const IntervalSet& s) {
    InstantSet out;
    out.reserve(s.size());
    for (const Interval& iv : s)
        if (!iv.right_open()) out.push_back(iv.end);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<RangeHit> maximal_range_scan(const std::vector<RangeTriple>& rows) {
    std::vector<RangeHit> out;
    bool open = false;
    Time started = 0;
    std::size_t started_at = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const RangeTriple& r = rows[i];
        if (r.phi_true && !open) {
            open = true;
            started = r.t;
            started_at = i;
        } else if (r.psi_true && !r.phi_true && open) {
            out.push_back({Interval{started, r.t}, started_at, i});
            open = false;
        }
        // psi without a pending start, or phi while already open: no effect.
    }
    if (open)  // still holding at the end of known time: open interval
        out.push_back({Interval{started, kInfinity}, started_at, rows.empty() ? 0 : rows.size() - 1});
    return out;
}

IntervalSet maximal_range(const std::vector<RangeTriple>& rows) {
    IntervalSet out;
    for (const RangeHit& h : maximal_range_scan(rows)) out.push_back(h.span);
    return out;
}

std::vector<RangeTriple> make_range_rows(const InstantSet& phi, const InstantSet& psi) {
    std::vector<RangeTriple> rows;
    rows.reserve(phi.size() + psi.size());
    std::size_t i = 0, j = 0;
    while (i < phi.size() || j < psi.size()) {
        Time tp = i < phi.size() ? phi[i] : kInfinity;
        Time tq = j < psi.size() ? psi[j] : kInfinity;
        Time t = std::min(tp, tq);
        rows.push_back({t, tp == t, tq == t});
        if (tp == t) ++i;
        if (tq == t) ++j;
    }
    return rows;
}

IntervalSet coalesce_union(const IntervalSet& a, const IntervalSet& b) {
    // Sweep over start/end instants with running counters.  A block closes
    // only when every start seen so far is matched by an end, so overlapping
    // and touching intervals fuse.  Open intervals contribute a start but no
    // end; an unmatched start at exhaustion yields an open result.
    struct Ev {
        Time t;
        bool is_start;
    };
    std::vector<Ev> evs;
    evs.reserve(2 * (a.size() + b.size()));
    for (const IntervalSet* s : {&a, &b}) {
        for (const Interval& iv : *s) {
            evs.push_back({iv.start, true});
            if (!iv.right_open()) evs.push_back({iv.end, false});
        }
    }
    std::sort(evs.begin(), evs.end(), [](const Ev& x, const Ev& y) { return x.t < y.t; });

    IntervalSet out;
    long long started_total = 0, ended_total = 0;
    Time block_start = 0;
    for (std::size_t k = 0; k < evs.size();) {
        Time t = evs[k].t;
        int starts = 0, ends = 0;
        for (; k < evs.size() && evs[k].t == t; ++k) (evs[k].is_start ? starts : ends)++;
        if (started_total == ended_total && starts > 0) block_start = t;
        started_total += starts;
        ended_total += ends;
        if (started_total == ended_total) out.push_back({block_start, t});
    }
    if (started_total != ended_total)  // unmatched starts: open tail
        out.push_back({block_start, kInfinity});
    return out;
}

std::vector<PairHit> intersection_scan(const IntervalSet& a, const IntervalSet& b) {
    std::vector<PairHit> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        Time lo = std::max(a[i].start, b[j].start);
        Time hi = std::min(a[i].end, b[j].end);
        if (lo < hi) out.push_back({Interval{lo, hi}, i, j});
        // Advance whichever interval ends first; both on a tie.
        if (a[i].end == b[j].end) {
            ++i;
            ++j;
        } else if (a[i].end < b[j].end) {
            ++i;
        } else {
            ++j;
        }
    }
    return out;
}

IntervalSet intersection(const IntervalSet& a, const IntervalSet& b) {
    IntervalSet out;
    for (const PairHit& h : intersection_scan(a, b)) out.push_back(h.span);
    return out;
}

std::vector<CutHit> complement_scan(const IntervalSet& a, const IntervalSet& b) {
    std::vector<CutHit> out;
    std::size_t j0 = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Interval& av = a[i];
        // Skip b-intervals entirely before av (they can never overlap again
        // since both sets are ordered and disjoint).
        while (j0 < b.size() && b[j0].end < av.start) ++j0;
        Time cur = av.start;
        std::size_t j = j0;
        std::size_t b_first = j0, b_count = 0;
        for (; j < b.size() && b[j].start < av.end; ++j) {
            if (b[j].end < av.start) continue;  // touching-at-start handled below
            if (b_count == 0) b_first = j;
            ++b_count;
            if (cur < b[j].start) out.push_back({Interval{cur, b[j].start}, i, b_first, b_count});
            cur = std::max(cur, b[j].end);
            if (cur >= av.end) break;
        }
        if (cur < av.end) out.push_back({Interval{cur, av.end}, i, b_first, b_count});
        // Fragments emitted before later cuts were known carry a provisional
        // b-range; widen them to the final count for this a-interval.
        for (auto it = out.rbegin(); it != out.rend() && it->a_index == i; ++it) {
            it->b_first = b_first;
            it->b_count = b_count;
        }
    }
    return out;
}

IntervalSet complement(const IntervalSet& a, const IntervalSet& b) {
    IntervalSet out;
    for (const CutHit& h : complement_scan(a, b)) out.push_back(h.span);
    return out;
}

}  // namespace tempest
