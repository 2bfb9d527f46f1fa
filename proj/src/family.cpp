#include "sgds/family.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgds {

AdmissibilityReport is_admissible(const SgdsMap& sys, const AdmissibleFamily& y) {
    AdmissibilityReport r;
    if (y.fibers.size() != sys.size()) {
        r.admissible = false;
        r.clause = 1;
        r.message = "fiber map is not total on X";
        return r;
    }
    // (ii) fibers constant along sigma
    for (std::size_t i = 0; i < sys.size(); ++i) {
        int x = static_cast<int>(i);
        if (!sys.in_domain(x)) continue;
        if (y.fiber(x) != y.fiber(sys.successor(x))) {
            r.admissible = false;
            r.clause = 2;
            r.point = x;
            r.message = "fiber(" + sys.name(x) + ") != fiber(sigma(" + sys.name(x) + "))";
            return r;
        }
    }
    // (iii) proper fibers only over periodic points, zeta_p-invariant
    for (std::size_t i = 0; i < sys.size(); ++i) {
        int x = static_cast<int>(i);
        const CircleSet& f = y.fiber(x);
        if (f.is_empty() || f.is_full()) continue;
        PointDynamics d = dynamics(sys, x);
        if (!d.periodic()) {
            r.admissible = false;
            r.clause = 3;
            r.point = x;
            r.message = "proper fiber over aperiodic point " + sys.name(x);
            return r;
        }
        if (!f.is_rotation_invariant(*d.period)) {
            r.admissible = false;
            r.clause = 3;
            r.point = x;
            r.message = "fiber over " + sys.name(x) + " not invariant under rotation by 1/" +
                        std::to_string(*d.period);
            return r;
        }
    }
    return r;
}

AdmissibleFamily from_invariant_set(const SgdsMap& sys, const std::vector<int>& s) {
    if (!is_invariant(sys, s))
        throw std::invalid_argument("from_invariant_set: set is not invariant");
    AdmissibleFamily y;
    y.fibers.assign(sys.size(), CircleSet::empty());
    for (int i : s) y.fibers.at(i) = CircleSet::full();
    return y;
}

std::vector<int> support(const AdmissibleFamily& y) {
    std::vector<int> out;
    for (std::size_t i = 0; i < y.fibers.size(); ++i)
        if (!y.fibers[i].is_empty()) out.push_back(static_cast<int>(i));
    return out;
}

AdmissibleFamily meet(const AdmissibleFamily& y1, const AdmissibleFamily& y2) {
    AdmissibleFamily out;
    out.fibers.reserve(y1.fibers.size());
    for (std::size_t i = 0; i < y1.fibers.size(); ++i)
        out.fibers.push_back(set_union(y1.fibers[i], y2.fibers[i]));
    return out;
}

AdmissibleFamily join(const AdmissibleFamily& y1, const AdmissibleFamily& y2) {
    AdmissibleFamily out;
    out.fibers.reserve(y1.fibers.size());
    for (std::size_t i = 0; i < y1.fibers.size(); ++i)
        out.fibers.push_back(set_intersect(y1.fibers[i], y2.fibers[i]));
    return out;
}

bool leq(const AdmissibleFamily& y1, const AdmissibleFamily& y2) {
    for (std::size_t i = 0; i < y1.fibers.size(); ++i)
        if (!set_subset(y2.fibers[i], y1.fibers[i])) return false;
    return true;
}

std::vector<Turn> rational_turns_below(const Turn& limit, std::int64_t max_den) {
    std::vector<Turn> out;
    for (std::int64_t d = 1; d <= max_den; ++d)
        for (std::int64_t n = 0; n < d; ++n) {
            if (std::gcd(n, d) != 1 && !(n == 0 && d == 1)) continue;
            Turn t(n, d);
            if (limit == Turn(1, 1) || t < limit) {
                if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<PrimeKey, AdmissibleFamily>> prime_catalog(
    const SgdsMap& sys, std::int64_t max_denominator) {
    OrbitPartition part = orbit_partition(sys);
    std::vector<std::pair<PrimeKey, AdmissibleFamily>> out;
    for (std::size_t c = 0; c < part.classes.size(); ++c) {
        const OrbitClass& cls = part.classes[c];
        if (!cls.periodic()) {
            PrimeKey key;
            key.variant = PrimeKey::Variant::AperiodicGauge;
            key.class_id = static_cast<int>(c);
            AdmissibleFamily fam;
            fam.fibers.assign(sys.size(), CircleSet::empty());
            for (int m : cls.members) fam.fibers[m] = CircleSet::full();
            out.emplace_back(key, std::move(fam));
            continue;
        }
        std::int64_t p = *cls.period;
        for (const Turn& t : rational_turns_below(Turn(1, p), max_denominator)) {
            PrimeKey key;
            key.variant = PrimeKey::Variant::CyclePoint;
            key.class_id = static_cast<int>(c);
            key.turn = t;
            CircleSet coset = CircleSet::point(t).zeta_saturate(p);
            AdmissibleFamily fam;
            fam.fibers.assign(sys.size(), CircleSet::empty());
            for (int m : cls.members) fam.fibers[m] = coset;
            out.emplace_back(key, std::move(fam));
        }
    }
    return out;
}

PrimeKey canonical_prime_key(const SgdsMap& sys, int x, const Turn& gamma) {
    OrbitPartition part = orbit_partition(sys);
    int c = part.class_of.at(x);
    PrimeKey key;
    key.class_id = c;
    if (!part.classes[c].periodic()) {
        key.variant = PrimeKey::Variant::AperiodicGauge;
        return key;
    }
    key.variant = PrimeKey::Variant::CyclePoint;
    std::int64_t p = *part.classes[c].period;
    // gamma reduced mod 1/p: subtract floor(gamma*p)/p
    std::int64_t k = gamma.num * p / gamma.den;
    key.turn = gamma - Turn(k, p);
    return key;
}

AdmissibleFamily admissible_closure(const SgdsMap& sys,
                                    const std::map<int, CircleSet>& seed) {
    OrbitPartition part = orbit_partition(sys);
    AdmissibleFamily out;
    out.fibers.assign(sys.size(), CircleSet::empty());
    for (const auto& cls : part.classes) {
        CircleSet f = CircleSet::empty();
        for (int m : cls.members) {
            auto it = seed.find(m);
            if (it != seed.end()) f = set_union(f, it->second);
        }
        if (f.is_empty()) continue;
        if (!cls.periodic())
            f = CircleSet::full();
        else if (!f.is_full())
            f = f.zeta_saturate(*cls.period);
        for (int m : cls.members) out.fibers[m] = f;
    }
    return out;
}

}  // namespace sgds
