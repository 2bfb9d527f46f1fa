#include "sgds/oracle.hpp"

#include <algorithm>
#include <sstream>

namespace sgds::oracle {

PointDynamics brute_dynamics(const SgdsMap& sys, int x) {
    PointDynamics d;
    d.point = x;
    // Tabulate sigma^k(x), k = 0 .. |X|+1 (or until the path leaves U).
    std::vector<int> path{x};
    while (path.size() <= sys.size() + 1) {
        auto nxt = sys.step(path.back());
        if (!nxt) break;
        path.push_back(*nxt);
    }
    // First repeat, scanned over all index pairs (k, k+n) in (k, n) order.
    for (std::size_t k = 0; k < path.size(); ++k)
        for (std::size_t m = k + 1; m < path.size(); ++m)
            if (path[k] == path[m] && !d.period) {
                d.tail = static_cast<std::int64_t>(k);
                d.period = static_cast<std::int64_t>(m - k);
                for (std::size_t j = k; j < m; ++j) d.eventual_cycle.push_back(path[j]);
            }
    return d;
}

namespace {

std::vector<int> unpack(std::uint64_t mask, std::size_t n) {
    std::vector<int> out;
    for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) out.push_back(static_cast<int>(i));
    return out;
}

bool mask_invariant(const SgdsMap& sys, std::uint64_t mask) {
    for (std::size_t i = 0; i < sys.size(); ++i) {
        if (!sys.in_domain(static_cast<int>(i))) continue;
        bool in_x = mask >> i & 1;
        bool in_sx = mask >> sys.successor(static_cast<int>(i)) & 1;
        if (in_x != in_sx) return false;
    }
    return true;
}

std::uint64_t to_mask(const std::vector<int>& s) {
    std::uint64_t m = 0;
    for (int i : s) m |= std::uint64_t(1) << i;
    return m;
}

}  // namespace

std::vector<std::vector<int>> brute_invariant_sets(const SgdsMap& sys) {
    std::vector<std::vector<int>> out;
    std::uint64_t top = std::uint64_t(1) << sys.size();
    for (std::uint64_t mask = 0; mask < top; ++mask)
        if (mask_invariant(sys, mask)) out.push_back(unpack(mask, sys.size()));
    return out;
}

bool brute_irreducible(const SgdsMap& sys, const std::vector<int>& s) {
    if (s.empty()) return false;
    std::uint64_t sm = to_mask(s);
    // Proper invariant subsets of s, then all covering pairs.
    std::vector<std::uint64_t> subs;
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << sys.size()); ++m)
        if ((m & sm) == m && m != sm && mask_invariant(sys, m)) subs.push_back(m);
    for (std::uint64_t a : subs)
        for (std::uint64_t b : subs)
            if ((a | b) == sm) return false;
    return true;
}

std::vector<std::vector<int>> brute_irreducible_sets(const SgdsMap& sys) {
    std::vector<std::vector<int>> out;
    for (const auto& s : brute_invariant_sets(sys))
        if (brute_irreducible(sys, s)) out.push_back(s);
    return out;
}

std::vector<std::vector<int>> brute_aperiodic_irreducible_sets(const SgdsMap& sys) {
    std::vector<std::vector<int>> out;
    for (const auto& s : brute_irreducible_sets(sys)) {
        bool periodic = false;
        for (int x : s)
            if (brute_dynamics(sys, x).periodic()) periodic = true;
        if (!periodic) out.push_back(s);
    }
    return out;
}

std::vector<AdmissibleFamily> brute_admissible_enum(
    const SgdsMap& sys, const std::vector<CircleSet>& alphabet) {
    std::vector<AdmissibleFamily> out;
    std::size_t n = sys.size();
    std::vector<std::size_t> choice(n, 0);
    while (true) {
        AdmissibleFamily fam;
        fam.fibers.reserve(n);
        for (std::size_t i = 0; i < n; ++i) fam.fibers.push_back(alphabet[choice[i]]);

        bool ok = true;
        // Fibers constant along the map.
        for (std::size_t i = 0; i < n && ok; ++i)
            if (sys.in_domain(static_cast<int>(i)) &&
                !(fam.fibers[i] == fam.fibers[sys.successor(static_cast<int>(i))]))
                ok = false;
        // Proper fibers only over periodic points, closed under rotation
        // by one period step.
        for (std::size_t i = 0; i < n && ok; ++i) {
            const CircleSet& f = fam.fibers[i];
            if (f.is_empty() || f.is_full()) continue;
            PointDynamics d = brute_dynamics(sys, static_cast<int>(i));
            if (!d.periodic()) {
                ok = false;
                break;
            }
            Turn step(1, *d.period);
            for (const Turn& t : f.points())
                if (!f.contains(t + step)) ok = false;
            for (const Arc& a : f.arcs())
                if (!f.contains(a.lo + step) || !f.contains(a.hi + step)) ok = false;
        }
        if (ok) out.push_back(std::move(fam));

        std::size_t pos = 0;
        while (pos < n && ++choice[pos] == alphabet.size()) choice[pos++] = 0;
        if (pos == n) break;
    }
    return out;
}

SgdsMap random_system(std::mt19937_64& rng, int max_points) {
    int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_points));
    std::vector<std::string> pts;
    for (int i = 0; i < n; ++i) pts.push_back("x" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> succ;
    for (int i = 0; i < n; ++i) {
        if (rng() % 3 == 0) continue;  // outside the domain
        int dst = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        succ.emplace_back(pts[i], pts[dst]);
    }
    return SgdsMap(std::move(pts), std::move(succ));
}

namespace {

std::string describe(const SgdsMap& sys) {
    std::ostringstream os;
    for (std::size_t i = 0; i < sys.size(); ++i) {
        os << sys.name(static_cast<int>(i));
        if (sys.in_domain(static_cast<int>(i)))
            os << "->" << sys.name(sys.successor(static_cast<int>(i)));
        os << " ";
    }
    return os.str();
}

}  // namespace

FuzzReport fuzz_suite(const FuzzConfig& cfg) {
    FuzzReport r;
    std::mt19937_64 rng(cfg.seed);
    auto fail = [&](const SgdsMap& sys, const std::string& what) {
        ++r.disagreements;
        if (r.first_failure.empty())
            r.first_failure = what + " on [" + describe(sys) + "]";
    };
    for (int t = 0; t < cfg.trials; ++t) {
        SgdsMap sys = random_system(rng, cfg.max_points);
        ++r.trials;

        for (std::size_t i = 0; i < sys.size(); ++i) {
            PointDynamics a = dynamics(sys, static_cast<int>(i));
            PointDynamics b = brute_dynamics(sys, static_cast<int>(i));
            if (a.period != b.period || a.tail != b.tail ||
                a.eventual_cycle != b.eventual_cycle)
                fail(sys, "dynamics(" + sys.name(static_cast<int>(i)) + ")");
        }

        auto main_inv = invariant_sets(sys);
        auto brute_inv = brute_invariant_sets(sys);
        std::sort(main_inv.begin(), main_inv.end());
        std::sort(brute_inv.begin(), brute_inv.end());
        if (main_inv != brute_inv) fail(sys, "invariant_sets");
        std::size_t nclasses = orbit_partition(sys).classes.size();
        if (brute_inv.size() != (std::size_t(1) << nclasses))
            fail(sys, "invariant-set count vs 2^classes");

        for (const auto& s : brute_inv)
            if (is_irreducible(sys, s) != brute_irreducible(sys, s))
                fail(sys, "is_irreducible");

        auto main_a = a_sets(sys);
        auto brute_a = brute_aperiodic_irreducible_sets(sys);
        std::sort(main_a.begin(), main_a.end());
        std::sort(brute_a.begin(), brute_a.end());
        if (main_a != brute_a) fail(sys, "a_sets");

        // Prime catalog classes = brute irreducible sets.
        auto catalog = prime_catalog(sys, cfg.denominator_bound);
        std::vector<std::vector<int>> catalog_classes;
        OrbitPartition part = orbit_partition(sys);
        for (const auto& [key, fam] : catalog) {
            std::vector<int> cls = part.classes.at(key.class_id).members;
            if (std::find(catalog_classes.begin(), catalog_classes.end(), cls) ==
                catalog_classes.end())
                catalog_classes.push_back(cls);
        }
        auto brute_irr = brute_irreducible_sets(sys);
        std::sort(catalog_classes.begin(), catalog_classes.end());
        std::sort(brute_irr.begin(), brute_irr.end());
        if (catalog_classes != brute_irr) fail(sys, "prime catalog classes");

        // Admissibility clauses vs the brute clause scan, small alphabet.
        if (sys.size() <= 4) {
            std::vector<CircleSet> alphabet{CircleSet::empty(), CircleSet::full(),
                                            CircleSet::point(Turn(0, 1))};
            auto brute_adm = brute_admissible_enum(sys, alphabet);
            int main_count = 0;
            std::vector<std::size_t> choice(sys.size(), 0);
            while (true) {
                AdmissibleFamily fam;
                for (std::size_t i = 0; i < sys.size(); ++i)
                    fam.fibers.push_back(alphabet[choice[i]]);
                if (is_admissible(sys, fam).admissible) ++main_count;
                std::size_t pos = 0;
                while (pos < sys.size() && ++choice[pos] == alphabet.size())
                    choice[pos++] = 0;
                if (pos == sys.size()) break;
            }
            if (static_cast<std::size_t>(main_count) != brute_adm.size())
                fail(sys, "admissible enumeration count");
        }
    }
    return r;
}

}  // namespace sgds::oracle
