#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgds/turn.hpp"

namespace sgds {

/// Closed arc [lo,hi] traversed counterclockwise from lo to hi.
/// When hi < lo the arc wraps through 0.
struct Arc {
    Turn lo;
    Turn hi;
    friend bool operator==(const Arc&, const Arc&) = default;
};

/// Exact closed subset of the circle: empty, full, or a canonical finite
/// union of isolated rational-turn points and closed rational-endpoint arcs.
///
/// Canonical form: arcs pairwise disjoint and non-adjacent, sorted by lo;
/// no isolated point lies on an arc; arcs never cover the whole circle
/// (that normalizes to Full). Equality of canonical forms is set equality.
class CircleSet {
public:
    enum class Kind { Empty, Full, Finite };

    CircleSet() : kind_(Kind::Empty) {}

    static CircleSet empty() { return CircleSet(); }
    static CircleSet full() {
        CircleSet s;
        s.kind_ = Kind::Full;
        return s;
    }
    /// Canonicalizes an arbitrary finite union of points and closed arcs.
    static CircleSet finite(std::vector<Turn> points, std::vector<Arc> arcs);
    static CircleSet point(Turn t) { return finite({t}, {}); }
    static CircleSet arc(Turn lo, Turn hi) { return finite({}, {Arc{lo, hi}}); }

    Kind kind() const { return kind_; }
    bool is_empty() const { return kind_ == Kind::Empty; }
    bool is_full() const { return kind_ == Kind::Full; }
    /// True when the set is a nonempty finite set of points (no arcs).
    bool is_finite_points() const {
        return kind_ == Kind::Finite && arcs_.empty();
    }
    const std::vector<Turn>& points() const { return points_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    bool contains(const Turn& t) const;

    friend CircleSet set_union(const CircleSet& a, const CircleSet& b);
    friend CircleSet set_intersect(const CircleSet& a, const CircleSet& b);
    /// a is a subset of b.
    friend bool set_subset(const CircleSet& a, const CircleSet& b);

    CircleSet rotate(const Turn& by) const;
    bool is_rotation_invariant(std::int64_t p) const;
    /// Smallest superset invariant under rotation by 1/p.
    CircleSet zeta_saturate(std::int64_t p) const;

    friend bool operator==(const CircleSet&, const CircleSet&) = default;

    std::string str() const;
    /// Parses the fiber syntax: "full", "empty", "points t1 t2 ...",
    /// "arcs a1 b1 , a2 b2 ...".
    static CircleSet parse(const std::string& text);

private:
    Kind kind_;
    std::vector<Turn> points_;  // sorted, outside all arcs
    std::vector<Arc> arcs_;     // sorted by lo
};

CircleSet set_union(const CircleSet& a, const CircleSet& b);
CircleSet set_intersect(const CircleSet& a, const CircleSet& b);
bool set_subset(const CircleSet& a, const CircleSet& b);

}  // namespace sgds
