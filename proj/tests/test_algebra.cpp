#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tempest/algebra.hpp"

using namespace tempest;

namespace {

IntervalSet ivs(std::initializer_list<Interval> l) { return IntervalSet(l); }

// Random disjoint, non-touching interval set within [0, horizon]; the last
// interval may be right-open.
IntervalSet random_disjoint(std::mt19937_64& rng, Time horizon, bool allow_open = true) {
    IntervalSet out;
    Time t = static_cast<Time>(rng() % 4);
    while (t + 1 < horizon) {
        Time len = 1 + static_cast<Time>(rng() % 6);
        Time end = std::min<Time>(t + len, horizon);
        if (end <= t) break;
        if (allow_open && rng() % 16 == 0) {
            out.push_back({t, kInfinity});
            return out;
        }
        out.push_back({t, end});
        t = end + 1 + static_cast<Time>(rng() % 5);  // gap >= 1: non-touching
    }
    if (rng() % 12 == 0) out.clear();  // exercise the empty-operand paths too
    return out;
}

}  // namespace

TEST_CASE("instant operations") {
    InstantSet a{1, 3, 5, 7}, b{3, 4, 7, 9};
    CHECK(instant_and(a, b) == InstantSet{3, 7});
    CHECK(instant_or(a, b) == InstantSet{1, 3, 4, 5, 7, 9});
    InstantSet window{2, 3, 4, 5, 6};
    CHECK(instant_not(a, window) == InstantSet{2, 4, 6});
    CHECK(instant_and(a, {}) == InstantSet{});
    CHECK(instant_or({}, {}) == InstantSet{});
}

TEST_CASE("starts and ends of interval sets") {
    IntervalSet s = ivs({{1, 3}, {5, kInfinity}});
    CHECK(start_instants(s) == InstantSet{1, 5});
    // the open interval contributes no end
    CHECK(end_instants(s) == InstantSet{3});
    CHECK(start_instants({}) == InstantSet{});
}

TEST_CASE("maximal range: basic alternation") {
    std::vector<RangeTriple> rows{{1, true, false}, {3, false, true}, {5, true, false},
                                  {7, false, true}};
    CHECK(maximal_range(rows) == ivs({{1, 3}, {5, 7}}));
}

TEST_CASE("maximal range: repeated opener does not restart, closer needs pending start") {
    std::vector<RangeTriple> rows{{1, true, true}, {2, true, true}, {4, false, true}};
    CHECK(maximal_range(rows) == ivs({{1, 4}}));
}

TEST_CASE("maximal range: unclosed start stays open by inertia") {
    std::vector<RangeTriple> rows{{10, true, false}};
    CHECK(maximal_range(rows) == ivs({{10, kInfinity}}));
}

TEST_CASE("maximal range: closer with nothing pending is ignored") {
    std::vector<RangeTriple> rows{{2, false, true}, {5, true, false}, {9, false, true}};
    CHECK(maximal_range(rows) == ivs({{5, 9}}));
}

TEST_CASE("temporal union coalesces overlap and touch") {
    CHECK(coalesce_union(ivs({{0, 2}, {3, 5}}), ivs({{1, 4}})) == ivs({{0, 5}}));
    CHECK(coalesce_union(ivs({{1, 2}}), ivs({{2, 3}})) == ivs({{1, 3}}));
    CHECK(coalesce_union({}, ivs({{1, 2}})) == ivs({{1, 2}}));
    CHECK(coalesce_union({}, {}) == IntervalSet{});
    // surplus start at exhaustion: open result
    CHECK(coalesce_union(ivs({{1, kInfinity}}), ivs({{4, 6}})) == ivs({{1, kInfinity}}));
    CHECK(coalesce_union(ivs({{1, 3}}), ivs({{5, kInfinity}})) ==
          ivs({{1, 3}, {5, kInfinity}}));
}

TEST_CASE("temporal intersection") {
    CHECK(intersection(ivs({{0, 2}, {3, 5}}), ivs({{1, 4}})) == ivs({{1, 2}, {3, 4}}));
    // touching intervals share only a point, which is not an interval
    CHECK(intersection(ivs({{1, 3}}), ivs({{3, 5}})) == IntervalSet{});
    CHECK(intersection(ivs({{2, kInfinity}}), ivs({{5, 9}})) == ivs({{5, 9}}));
    CHECK(intersection(ivs({{2, kInfinity}}), ivs({{5, kInfinity}})) == ivs({{5, kInfinity}}));
    CHECK(intersection({}, ivs({{1, 5}})) == IntervalSet{});
}

TEST_CASE("temporal complement subtracts interiors, keeps shared endpoints") {
    CHECK(complement(ivs({{0, 2}, {3, 5}}), ivs({{1, 4}})) == ivs({{0, 1}, {4, 5}}));
    CHECK(complement(ivs({{1, 9}}), ivs({{3, 4}, {6, 7}})) == ivs({{1, 3}, {4, 6}, {7, 9}}));
    CHECK(complement(ivs({{1, 5}}), {}) == ivs({{1, 5}}));
    CHECK(complement(ivs({{1, 5}}), ivs({{1, 5}})) == IntervalSet{});
    // an open left interval survives as a new open remainder
    CHECK(complement(ivs({{2, kInfinity}}), ivs({{5, 9}})) == ivs({{2, 5}, {9, kInfinity}}));
    CHECK(complement(ivs({{1, 9}}), ivs({{5, kInfinity}})) == ivs({{1, 5}}));
}

TEST_CASE("operation results are disjoint, non-touching, ordered") {
    std::mt19937_64 rng(7);
    for (int n = 0; n < 500; ++n) {
        IntervalSet a = random_disjoint(rng, 40), b = random_disjoint(rng, 40);
        for (const IntervalSet& res :
             {coalesce_union(a, b), intersection(a, b), complement(a, b)}) {
            CAPTURE(n);
            CHECK(disjoint_non_touching(res));
            CHECK(ordered_by_start_end(res));
        }
    }
}

TEST_CASE("interval operations agree with the rasterization reference") {
    std::mt19937_64 rng(42);
    const Time horizon = 48;  // > max finite endpoint + 1
    for (int n = 0; n < 2000; ++n) {
        IntervalSet a = random_disjoint(rng, 40), b = random_disjoint(rng, 40);
        CAPTURE(n);
        CHECK(coalesce_union(a, b) == oracle::interval_op(oracle::SetOp::Union, a, b, horizon));
        CHECK(intersection(a, b) ==
              oracle::interval_op(oracle::SetOp::Intersect, a, b, horizon));
        CHECK(complement(a, b) == oracle::interval_op(oracle::SetOp::Subtract, a, b, horizon));
    }
}

TEST_CASE("maximal range agrees with the declarative reference") {
    std::mt19937_64 rng(43);
    for (int n = 0; n < 2000; ++n) {
        InstantSet phi, psi;
        for (Time t = 0; t < 30; ++t) {
            if (rng() % 3 == 0) phi.push_back(t);
            if (rng() % 3 == 0) psi.push_back(t);
        }
        auto rows = make_range_rows(phi, psi);
        CAPTURE(n);
        CHECK(maximal_range(rows) == oracle::maximal_range_reference(rows));
    }
}
