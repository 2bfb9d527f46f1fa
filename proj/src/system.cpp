#include "sgds/system.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgds {

SgdsMap::SgdsMap(std::vector<std::string> points,
                 std::vector<std::pair<std::string, std::string>> successor)
    : names_(std::move(points)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        auto [it, fresh] = index_.emplace(names_[i], static_cast<int>(i));
        if (!fresh) throw std::invalid_argument("duplicate point: " + names_[i]);
    }
    succ_.assign(names_.size(), std::nullopt);
    for (const auto& [src, dst] : successor) {
        int s = index(src), d = index(dst);
        if (succ_[s].has_value())
            throw std::invalid_argument("duplicate map source: " + src);
        succ_[s] = d;
    }
}

int SgdsMap::index(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw std::invalid_argument("unknown point: " + id);
    return it->second;
}

std::optional<int> SgdsMap::iterate(int i, std::int64_t n) const {
    int cur = i;
    for (std::int64_t k = 0; k < n; ++k) {
        if (!succ_[cur]) return std::nullopt;
        cur = *succ_[cur];
    }
    return cur;
}

std::vector<int> SgdsMap::domain() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < succ_.size(); ++i)
        if (succ_[i]) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> SgdsMap::preimages(int x) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < succ_.size(); ++i)
        if (succ_[i] && *succ_[i] == x) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> SgdsMap::preimages_n(int x, std::int64_t n) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < succ_.size(); ++i)
        if (iterate(static_cast<int>(i), n) == std::optional<int>(x))
            out.push_back(static_cast<int>(i));
    return out;
}

PointDynamics dynamics(const SgdsMap& sys, int x) {
    if (x < 0 || static_cast<std::size_t>(x) >= sys.size())
        throw std::invalid_argument("unknown point index");
    PointDynamics d;
    d.point = x;
    // Forward path; repeats within |X|+1 steps or leaves the domain.
    std::vector<int> path{x};
    std::vector<int> seen_at(sys.size(), -1);
    seen_at[x] = 0;
    int cur = x;
    while (sys.in_domain(cur)) {
        cur = sys.successor(cur);
        if (seen_at[cur] >= 0) {
            std::int64_t tail = seen_at[cur];
            d.tail = tail;
            d.period = static_cast<std::int64_t>(path.size()) - tail;
            d.eventual_cycle.assign(path.begin() + tail, path.end());
            return d;
        }
        seen_at[cur] = static_cast<int>(path.size());
        path.push_back(cur);
    }
    return d;  // exits the domain: tail = period = infinity
}

PointDynamics dynamics(const SgdsMap& sys, const std::string& id) {
    return dynamics(sys, sys.index(id));
}

namespace {

// Orbit key: two points are orbit-equivalent iff their forward paths merge,
// i.e. share the same terminal point (path exits the domain) or the same
// cycle (identified by its smallest member).
int orbit_key(const SgdsMap& sys, int x) {
    PointDynamics d = dynamics(sys, x);
    if (d.periodic())
        return *std::min_element(d.eventual_cycle.begin(), d.eventual_cycle.end());
    int cur = x;
    while (sys.in_domain(cur)) cur = sys.successor(cur);
    return cur;
}

std::vector<int> class_members(const SgdsMap& sys, int key) {
    std::vector<int> out;
    for (std::size_t i = 0; i < sys.size(); ++i)
        if (orbit_key(sys, static_cast<int>(i)) == key)
            out.push_back(static_cast<int>(i));
    return out;
}

}  // namespace

std::vector<int> orbit(const SgdsMap& sys, int x) {
    if (x < 0 || static_cast<std::size_t>(x) >= sys.size())
        throw std::invalid_argument("unknown point index");
    return class_members(sys, orbit_key(sys, x));
}

OrbitPartition orbit_partition(const SgdsMap& sys) {
    OrbitPartition part;
    part.class_of.assign(sys.size(), -1);
    for (std::size_t i = 0; i < sys.size(); ++i) {
        if (part.class_of[i] >= 0) continue;
        OrbitClass cls;
        cls.members = orbit(sys, static_cast<int>(i));
        cls.period = dynamics(sys, static_cast<int>(i)).period;
        int id = static_cast<int>(part.classes.size());
        for (int m : cls.members) part.class_of[m] = id;
        part.classes.push_back(std::move(cls));
    }
    return part;
}

std::vector<int> per_points(const SgdsMap& sys) {
    std::vector<int> out;
    for (std::size_t i = 0; i < sys.size(); ++i) {
        PointDynamics d = dynamics(sys, static_cast<int>(i));
        if (d.periodic() && *d.tail == 0) out.push_back(static_cast<int>(i));
    }
    return out;
}

bool is_invariant(const SgdsMap& sys, const std::vector<int>& s) {
    std::vector<char> in(sys.size(), 0);
    for (int i : s) in.at(i) = 1;
    for (std::size_t i = 0; i < sys.size(); ++i)
        if (sys.in_domain(static_cast<int>(i)) &&
            in[i] != in[sys.successor(static_cast<int>(i))])
            return false;
    return true;
}

std::vector<std::vector<int>> invariant_sets(const SgdsMap& sys,
                                             std::size_t max_points) {
    if (sys.size() > max_points)
        throw std::invalid_argument("invariant_sets: enumeration bound exceeded");
    OrbitPartition part = orbit_partition(sys);
    std::size_t nc = part.classes.size();
    // Invariant sets are exactly unions of orbit classes (tested against
    // the brute-force definition by the oracle suite).
    std::vector<std::uint64_t> class_mask(nc, 0);
    for (std::size_t c = 0; c < nc; ++c)
        for (int m : part.classes[c].members)
            class_mask[c] |= std::uint64_t(1) << m;
    std::vector<std::uint64_t> masks;
    for (std::uint64_t sel = 0; sel < (std::uint64_t(1) << nc); ++sel) {
        std::uint64_t m = 0;
        for (std::size_t c = 0; c < nc; ++c)
            if (sel & (std::uint64_t(1) << c)) m |= class_mask[c];
        masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end());
    std::vector<std::vector<int>> out;
    for (std::uint64_t m : masks) {
        std::vector<int> s;
        for (std::size_t i = 0; i < sys.size(); ++i)
            if (m & (std::uint64_t(1) << i)) s.push_back(static_cast<int>(i));
        out.push_back(std::move(s));
    }
    return out;
}

bool is_irreducible(const SgdsMap& sys, const std::vector<int>& s) {
    if (!is_invariant(sys, s))
        throw std::invalid_argument("is_irreducible: set is not invariant");
    if (s.empty()) return false;
    // Decomposition search over invariant subsets of s.
    OrbitPartition part = orbit_partition(sys);
    std::vector<char> in(sys.size(), 0);
    for (int i : s) in[i] = 1;
    std::vector<int> inner_classes;
    for (std::size_t c = 0; c < part.classes.size(); ++c)
        if (in[part.classes[c].members.front()])
            inner_classes.push_back(static_cast<int>(c));
    std::size_t nc = inner_classes.size();
    // Every invariant subset of s is a union of the classes inside s;
    // scan all pairs for a covering by two proper subsets.
    std::uint64_t all = (std::uint64_t(1) << nc) - 1;
    for (std::uint64_t s1 = 0; s1 <= all; ++s1) {
        if (s1 == all) continue;
        for (std::uint64_t s2 = 0; s2 <= all; ++s2) {
            if (s2 == all) continue;
            if ((s1 | s2) == all) return false;
        }
    }
    return true;
}

std::vector<std::vector<int>> a_sets(const SgdsMap& sys) {
    std::vector<std::vector<int>> out;
    OrbitPartition part = orbit_partition(sys);
    for (const auto& cls : part.classes)
        if (!cls.periodic() && is_irreducible(sys, cls.members))
            out.push_back(cls.members);
    return out;
}

bool is_essentially_free(const SgdsMap& sys, const std::vector<int>& s) {
    for (int i : s) {
        PointDynamics d = dynamics(sys, i);
        if (d.periodic() && *d.tail == 0) return false;
    }
    return true;
}

SgdsMap restrict(const SgdsMap& sys, const std::vector<int>& s) {
    if (!is_invariant(sys, s))
        throw std::invalid_argument("restrict: set is not invariant");
    std::vector<char> in(sys.size(), 0);
    for (int i : s) in[i] = 1;
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> succ;
    for (std::size_t i = 0; i < sys.size(); ++i) {
        if (!in[i]) continue;
        names.push_back(sys.name(static_cast<int>(i)));
        if (sys.in_domain(static_cast<int>(i)))
            succ.emplace_back(sys.name(static_cast<int>(i)),
                              sys.name(sys.successor(static_cast<int>(i))));
    }
    return SgdsMap(std::move(names), std::move(succ));
}

}  // namespace sgds
