#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sgds {

/// Finite singly generated dynamical system: an ordered point set X,
/// a domain U of the partial successor map, and the map itself.
/// Point identifiers are strings; the canonical ordering is input order
/// and every derived output is reported in that ordering.
class SgdsMap {
public:
    SgdsMap() = default;
    /// points: all identifiers in canonical order; successor: pairs
    /// (src, dst) whose sources define the domain U.
    SgdsMap(std::vector<std::string> points,
            std::vector<std::pair<std::string, std::string>> successor);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_.at(i); }
    int index(const std::string& id) const;

    bool in_domain(int i) const { return succ_[i].has_value(); }
    int successor(int i) const { return succ_[i].value(); }
    /// Successor as an optional: empty when i is outside the domain.
    std::optional<int> step(int i) const { return succ_[i]; }
    /// n-fold iterate; empty when the path exits the domain first.
    std::optional<int> iterate(int i, std::int64_t n) const;

    std::vector<int> domain() const;
    std::vector<int> preimages(int x) const;
    /// Points y with sigma^n(y) = x (all intermediate iterates defined).
    std::vector<int> preimages_n(int x, std::int64_t n) const;

private:
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
    std::vector<std::optional<int>> succ_;
};

/// Tail/period data of one point. Infinite tail and period (aperiodic
/// point whose forward path leaves the domain) are explicit empty
/// optionals, never sentinel integers.
struct PointDynamics {
    int point = 0;
    std::optional<std::int64_t> period;  // p(x), empty = infinite
    std::optional<std::int64_t> tail;    // l(x), empty = infinite
    std::vector<int> eventual_cycle;     // empty when aperiodic

    bool periodic() const { return period.has_value(); }
};

struct OrbitClass {
    std::vector<int> members;            // sorted point indices
    std::optional<std::int64_t> period;  // empty = aperiodic class
    bool periodic() const { return period.has_value(); }
};

struct OrbitPartition {
    std::vector<OrbitClass> classes;  // ordered by smallest member
    /// class index of each point
    std::vector<int> class_of;
};

PointDynamics dynamics(const SgdsMap& sys, int x);
PointDynamics dynamics(const SgdsMap& sys, const std::string& id);

/// Orbit-equivalence class of x: {y : sigma^n(y) = sigma^m(x)}.
std::vector<int> orbit(const SgdsMap& sys, int x);

OrbitPartition orbit_partition(const SgdsMap& sys);

/// Per(Sigma): periodic points with tail 0 (every point is isolated in the
/// discrete topology, so the isolation clause is vacuous here).
std::vector<int> per_points(const SgdsMap& sys);

bool is_invariant(const SgdsMap& sys, const std::vector<int>& s);

/// All sigma-invariant subsets in canonical (bitmask-ascending) order.
/// Throws when the class-union enumeration bound is exceeded.
std::vector<std::vector<int>> invariant_sets(const SgdsMap& sys,
                                             std::size_t max_points = 20);

/// True iff s is nonempty and is not the union of two proper invariant
/// subsets; decided by decomposition search, not by assuming the
/// single-orbit-class characterization. Throws when s is not invariant.
bool is_irreducible(const SgdsMap& sys, const std::vector<int>& s);

/// A(Sigma): irreducible invariant sets whose class is aperiodic.
std::vector<std::vector<int>> a_sets(const SgdsMap& sys);

/// Essentially free in the discrete topology: no point of s on a cycle.
bool is_essentially_free(const SgdsMap& sys, const std::vector<int>& s);

/// Sub-system on the invariant set s with domain s intersect U.
SgdsMap restrict(const SgdsMap& sys, const std::vector<int>& s);

}  // namespace sgds
