#include "fixlab/picard.hpp"

#include <algorithm>

namespace fixlab {

PicardResult picard_orbit(const OrderedMetricSpace& space, const SelfMap& map, PointId start) {
    require_point(space, start);
    if (space.size() != map.size()) throw Error::bad_instance("space and map sizes differ");

    const std::size_t n = space.size();
    PicardResult r;
    r.start = start;
    std::vector<std::size_t> seen_at(n, n + 1);

    PointId x = start;
    while (seen_at[x] > n) {
        seen_at[x] = r.orbit.size();
        r.orbit.push_back(x);
        x = map(x);
    }
    const std::size_t entry = seen_at[x];  // index of the first repeated point
    if (entry == r.orbit.size() - 1) {
        r.fixed_limit = x;  // T(z) = z
        r.reached_fixed_point = true;
        r.steps_to_limit = entry;
    } else {
        r.cycle.assign(r.orbit.begin() + static_cast<std::ptrdiff_t>(entry), r.orbit.end());
        r.steps_to_limit = entry;
    }

    r.ascending = true;
    for (std::size_t k = 0; k + 1 < r.orbit.size(); ++k)
        if (!space.leq(r.orbit[k], r.orbit[k + 1])) r.ascending = false;
    // closing step of the eventually periodic tail
    if (!space.leq(r.orbit.back(), x)) r.ascending = false;

    if (r.fixed_limit) {
        r.limit_dominates = true;
        for (PointId p : r.orbit)
            if (!space.leq(p, *r.fixed_limit)) r.limit_dominates = false;
        r.limit_attained_in_orbit = true;
    }
    return r;
}

std::vector<PointId> fixed_points(const SelfMap& map) {
    std::vector<PointId> out;
    for (PointId x = 0; x < map.size(); ++x)
        if (map(x) == x) out.push_back(x);
    return out;
}

namespace {

OperatorClassification classify_impl(const OrderedMetricSpace& space, const SelfMap& map) {
    const std::size_t n = space.size();
    OperatorClassification c;
    c.fixed_points = fixed_points(map);

    for (PointId x = 0; x < n; ++x) {
        if (space.leq(x, map(x))) c.x_leq.push_back(x);
        if (comparable(space, x, map(x))) c.x_comp.push_back(x);
    }

    // plain sense: every start converges and Fix(T) is a singleton
    bool all_converge = true;
    std::vector<PicardResult> orbits;
    orbits.reserve(n);
    for (PointId x = 0; x < n; ++x) {
        orbits.push_back(picard_orbit(space, map, x));
        if (!orbits.back().reached_fixed_point) {
            all_converge = false;
            c.witnesses.push_back({"orbit ends in a cycle", x, orbits.back().cycle.front()});
        }
    }
    if (c.fixed_points.size() != 1)
        c.witnesses.push_back({"Fix(T) has " + std::to_string(c.fixed_points.size()) +
                                   " elements, not 1",
                               c.fixed_points.empty() ? 0 : c.fixed_points.front(),
                               c.fixed_points.size() > 1 ? c.fixed_points[1] : 0});
    c.picard_plain = all_converge && c.fixed_points.size() == 1;

    // (<=)-singleton: comparable fixed points coincide
    c.leq_singleton = true;
    for (PointId z : c.fixed_points)
        for (PointId w : c.fixed_points)
            if (z != w && space.leq(z, w)) {
                c.leq_singleton = false;
                c.witnesses.push_back({"distinct comparable fixed points", z, w});
            }

    // ordered sense: every x in X(T,<=) is a Picard point modulo (<=)
    bool picard_points_ok = true;
    for (PointId x : c.x_leq) {
        const PicardResult& orb = orbits[x];
        if (!orb.reached_fixed_point) {
            picard_points_ok = false;
            c.witnesses.push_back({"ascending start has no fixed limit", x, orb.cycle.front()});
            continue;
        }
        if (!orb.limit_dominates) {
            picard_points_ok = false;
            c.witnesses.push_back({"limit does not dominate the orbit", x, *orb.fixed_limit});
        }
    }
    c.picard_ordered = picard_points_ok && c.leq_singleton;

    // maximality: a fixed point below some u in X(T,<=) must absorb it
    c.maximality_ok = true;
    for (PointId z : c.fixed_points)
        for (PointId u : c.x_leq)
            if (space.leq(z, u) && !space.leq(u, z)) {
                c.maximality_ok = false;
                c.witnesses.push_back({"fixed point not (<=)-maximal in X(T,<=)", z, u});
            }
    return c;
}

}  // namespace

OperatorClassification classify_plain(const OrderedMetricSpace& space, const SelfMap& map) {
    return classify_impl(space, map);
}

OperatorClassification classify_ordered(const OrderedMetricSpace& space, const SelfMap& map) {
    return classify_impl(space, map);
}

AoSelfClosedReport check_ao_self_closed(const OrderedMetricSpace& space, const SelfMap& map) {
    AoSelfClosedReport report;
    for (PointId x = 0; x < space.size(); ++x) {
        const PicardResult orb = picard_orbit(space, map, x);
        if (!orb.ascending) continue;
        ++report.ascending_orbits;
        if (!orb.reached_fixed_point) continue;  // never converges, premise empty
        for (PointId p : orb.orbit) {
            if (!space.leq(p, *orb.fixed_limit)) {
                report.verdict = false;
                report.witnesses.push_back({"ascending orbit term above its limit", p,
                                            *orb.fixed_limit});
            }
        }
    }
    return report;
}

A06Report check_a06(const OrderedMetricSpace& space,
                    const std::vector<std::vector<PointId>>& sequences) {
    A06Report report;
    report.note = "auto-satisfied (finite space): convergent sequences are eventually "
                  "constant and the constant tail is the comparable subsequence";
    for (const auto& seq : sequences) {
        if (seq.empty()) continue;
        for (PointId p : seq) require_point(space, p);
        ++report.sequences_checked;
        // the constant tail's value is trivially comparable to itself
        const PointId tail = seq.back();
        if (!comparable(space, tail, tail)) report.verdict = false;  // unreachable: <> reflexive
    }
    return report;
}

}  // namespace fixlab
