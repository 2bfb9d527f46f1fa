#pragma once

#include <map>
#include <string>
#include <vector>

#include "sgds/circle_set.hpp"
#include "sgds/system.hpp"

namespace sgds {

/// Assignment of a circle fiber Y_x to every point, representing an ideal
/// through its admissible set Y = {(x, gamma) : gamma in fiber(x)}.
///
/// Ordering convention: ideals are ordered by reverse fiber inclusion —
/// a larger ideal has a smaller Y. leq below follows that convention.
struct AdmissibleFamily {
    std::vector<CircleSet> fibers;  // indexed by point

    const CircleSet& fiber(int x) const { return fibers.at(x); }
    friend bool operator==(const AdmissibleFamily&, const AdmissibleFamily&) = default;
};

struct AdmissibilityReport {
    bool admissible = true;
    int clause = 0;        // 1, 2 or 3 when violated
    int point = -1;        // first offending point
    std::string message;
};

/// Canonical label of a prime ideal.
struct PrimeKey {
    enum class Variant { AperiodicGauge, CyclePoint };
    Variant variant = Variant::AperiodicGauge;
    int class_id = -1;  // index into orbit_partition(sys).classes
    Turn turn;          // CyclePoint only; 0 <= turn < 1/p

    friend bool operator==(const PrimeKey&, const PrimeKey&) = default;
};

/// Clause checks of the admissibility definition. Clause (i), closedness,
/// is automatic for CircleSet values; clause (iii)'s neighborhood condition
/// is vacuous in the discrete topology, leaving periodicity and
/// zeta_p-invariance of proper fibers.
AdmissibilityReport is_admissible(const SgdsMap& sys, const AdmissibleFamily& y);

/// Gauge-invariant ideal of an invariant set: Full on s, Empty off s.
AdmissibleFamily from_invariant_set(const SgdsMap& sys, const std::vector<int>& s);

/// {x : fiber(x) nonempty}; always sigma-invariant.
std::vector<int> support(const AdmissibleFamily& y);

/// Ideal intersection: fiberwise union.
AdmissibleFamily meet(const AdmissibleFamily& y1, const AdmissibleFamily& y2);
/// Ideal sum: fiberwise intersection.
AdmissibleFamily join(const AdmissibleFamily& y1, const AdmissibleFamily& y2);
/// y1 <= y2 under the ideal ordering: y2's fibers contained in y1's.
bool leq(const AdmissibleFamily& y1, const AdmissibleFamily& y2);

/// Prime catalog: one gauge entry per aperiodic irreducible class, and one
/// CyclePoint entry per (periodic class, reduced turn in [0,1/p) with
/// denominator <= max_denominator). The continuous parameter family is
/// truncated to rational turns; reports carry the symbolic range.
std::vector<std::pair<PrimeKey, AdmissibleFamily>> prime_catalog(
    const SgdsMap& sys, std::int64_t max_denominator = 12);

/// Reduces (x, gamma) to the canonical key of its primitive ideal.
PrimeKey canonical_prime_key(const SgdsMap& sys, int x, const Turn& gamma);

/// Smallest admissible family whose fibers contain the seed fibers.
AdmissibleFamily admissible_closure(const SgdsMap& sys,
                                    const std::map<int, CircleSet>& seed);

/// All reduced turns num/den with value < limit and den <= max_den,
/// ascending. limit = Turn(1,1) is read as the whole circle [0,1).
std::vector<Turn> rational_turns_below(const Turn& limit, std::int64_t max_den);

}  // namespace sgds
