#include "sgds/circle_set.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace sgds {

Turn Turn::parse(const std::string& s) {
    auto pos = s.find('/');
    try {
        if (pos == std::string::npos) {
            size_t used = 0;
            std::int64_t n = std::stoll(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return Turn(n, 1);
        }
        size_t un = 0, ud = 0;
        std::string ns = s.substr(0, pos), ds = s.substr(pos + 1);
        std::int64_t n = std::stoll(ns, &un);
        std::int64_t d = std::stoll(ds, &ud);
        if (un != ns.size() || ud != ds.size()) throw std::invalid_argument(s);
        return Turn(n, d);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad turn: '" + s + "' (expected p/q)");
    }
}

namespace {

bool raw_arc_contains(const Arc& a, const Turn& t) {
    if (a.lo == a.hi) return t == a.lo;
    if (a.lo < a.hi || a.lo == a.hi) return a.lo <= t && t <= a.hi;
    return a.lo <= t || t <= a.hi;  // wraps through 0
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

}  // namespace

// Canonicalization samples membership on the grid k/(2L), where L is the lcm
// of all component denominators. Every boundary point lies on the even
// sub-grid k/L, so membership is constant on each open segment between
// consecutive grid samples; scanning maximal circular runs of "in" samples
// recovers the canonical points and arcs exactly.
CircleSet CircleSet::finite(std::vector<Turn> points, std::vector<Arc> arcs) {
    std::int64_t L = 1;
    for (const auto& p : points) L = lcm64(L, p.den);
    for (const auto& a : arcs) {
        L = lcm64(L, a.lo.den);
        L = lcm64(L, a.hi.den);
    }
    auto member = [&](const Turn& t) {
        for (const auto& p : points)
            if (p == t) return true;
        for (const auto& a : arcs)
            if (raw_arc_contains(a, t)) return true;
        return false;
    };

    std::int64_t G = 2 * L;
    std::vector<char> in(G);
    bool all = true, none = true;
    for (std::int64_t k = 0; k < G; ++k) {
        in[k] = member(Turn(k, G));
        all = all && in[k];
        none = none && !in[k];
    }
    if (none) return CircleSet();
    if (all) return full();

    CircleSet out;
    out.kind_ = Kind::Finite;
    // Maximal circular runs of consecutive "in" samples.
    std::int64_t start = 0;
    while (in[start]) ++start;  // some sample is out
    for (std::int64_t k = 0; k < G;) {
        std::int64_t i = (start + k) % G;
        if (!in[i]) { ++k; continue; }
        std::int64_t len = 0;
        while (len < G && in[(i + len) % G]) ++len;
        std::int64_t j = (i + len - 1) % G;
        if (len == 1) {
            out.points_.push_back(Turn(i, G));
        } else {
            out.arcs_.push_back(Arc{Turn(i, G), Turn(j, G)});
        }
        k += len + 1;
    }
    std::sort(out.points_.begin(), out.points_.end());
    std::sort(out.arcs_.begin(), out.arcs_.end(),
              [](const Arc& a, const Arc& b) { return a.lo < b.lo; });
    return out;
}

bool CircleSet::contains(const Turn& t) const {
    switch (kind_) {
        case Kind::Empty: return false;
        case Kind::Full: return true;
        case Kind::Finite: break;
    }
    for (const auto& p : points_)
        if (p == t) return true;
    for (const auto& a : arcs_)
        if (raw_arc_contains(a, t)) return true;
    return false;
}

CircleSet set_union(const CircleSet& a, const CircleSet& b) {
    if (a.is_full() || b.is_full()) return CircleSet::full();
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    std::vector<Turn> pts = a.points_;
    pts.insert(pts.end(), b.points_.begin(), b.points_.end());
    std::vector<Arc> arcs = a.arcs_;
    arcs.insert(arcs.end(), b.arcs_.begin(), b.arcs_.end());
    return CircleSet::finite(std::move(pts), std::move(arcs));
}

CircleSet set_intersect(const CircleSet& a, const CircleSet& b) {
    if (a.is_empty() || b.is_empty()) return CircleSet::empty();
    if (a.is_full()) return b;
    if (b.is_full()) return a;
    // The intersection's boundary lies on the union of both grids, so
    // re-sampling with the joint predicate is exact.
    std::int64_t L = 1;
    auto absorb = [&](const CircleSet& s) {
        for (const auto& p : s.points_) L = lcm64(L, p.den);
        for (const auto& q : s.arcs_) {
            L = lcm64(L, q.lo.den);
            L = lcm64(L, q.hi.den);
        }
    };
    absorb(a);
    absorb(b);
    std::int64_t G = 2 * L;
    std::vector<Turn> pts;
    std::vector<Arc> arcs;
    for (std::int64_t k = 0; k < G; ++k) {
        Turn t(k, G);
        if (a.contains(t) && b.contains(t)) {
            if (k % 2 == 0)
                pts.push_back(t);
            else  // open segment midpoint: keep the whole closed segment
                arcs.push_back(Arc{Turn(k - 1, G), Turn((k + 1) % G, G)});
        }
    }
    return CircleSet::finite(std::move(pts), std::move(arcs));
}

bool set_subset(const CircleSet& a, const CircleSet& b) {
    return set_intersect(a, b) == a;
}

CircleSet CircleSet::rotate(const Turn& by) const {
    if (kind_ != Kind::Finite) return *this;
    std::vector<Turn> pts;
    std::vector<Arc> arcs;
    for (const auto& p : points_) pts.push_back(p + by);
    for (const auto& a : arcs_) arcs.push_back(Arc{a.lo + by, a.hi + by});
    return finite(std::move(pts), std::move(arcs));
}

bool CircleSet::is_rotation_invariant(std::int64_t p) const {
    return rotate(Turn(1, p)) == *this;
}

CircleSet CircleSet::zeta_saturate(std::int64_t p) const {
    if (kind_ != Kind::Finite) return *this;
    CircleSet out = *this;
    for (std::int64_t k = 1; k < p; ++k) out = set_union(out, rotate(Turn(k, p)));
    return out;
}

std::string CircleSet::str() const {
    if (is_empty()) return "empty";
    if (is_full()) return "full";
    std::ostringstream os;
    if (arcs_.empty()) {
        os << "points";
        for (const auto& p : points_) os << ' ' << p.str();
        return os.str();
    }
    if (points_.empty()) {
        os << "arcs";
        bool first = true;
        for (const auto& a : arcs_) {
            if (!first) os << " ,";
            first = false;
            os << ' ' << a.lo.str() << ' ' << a.hi.str();
        }
        return os.str();
    }
    // Mixed sets round-trip through the arcs syntax with degenerate arcs.
    os << "arcs";
    bool first = true;
    for (const auto& a : arcs_) {
        if (!first) os << " ,";
        first = false;
        os << ' ' << a.lo.str() << ' ' << a.hi.str();
    }
    for (const auto& p : points_) os << " , " << p.str() << ' ' << p.str();
    return os.str();
}

CircleSet CircleSet::parse(const std::string& text) {
    std::istringstream is(text);
    std::string head;
    if (!(is >> head)) throw std::invalid_argument("empty circle-set");
    if (head == "empty") return CircleSet::empty();
    if (head == "full") return CircleSet::full();
    if (head == "points") {
        std::vector<Turn> pts;
        std::string tok;
        while (is >> tok) pts.push_back(Turn::parse(tok));
        if (pts.empty()) throw std::invalid_argument("points: no turns given");
        return finite(std::move(pts), {});
    }
    if (head == "arcs") {
        std::vector<Arc> arcs;
        std::string lo, hi, sep;
        while (true) {
            if (!(is >> lo)) break;
            if (!(is >> hi)) throw std::invalid_argument("arcs: dangling endpoint");
            arcs.push_back(Arc{Turn::parse(lo), Turn::parse(hi)});
            if (!(is >> sep)) break;
            if (sep != ",") throw std::invalid_argument("arcs: expected ','");
        }
        if (arcs.empty()) throw std::invalid_argument("arcs: no arcs given");
        return finite({}, std::move(arcs));
    }
    throw std::invalid_argument("bad circle-set: '" + text + "'");
}

}  // namespace sgds
