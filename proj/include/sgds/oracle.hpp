#pragma once

#include <random>
#include <string>
#include <vector>

#include "sgds/family.hpp"
#include "sgds/system.hpp"

namespace sgds::oracle {

/// Deterministic fuzzing parameters; the same seed always yields the same
/// stream of systems and checks.
struct FuzzConfig {
    std::uint64_t seed = 1;
    int max_points = 8;
    int trials = 100;
    std::int64_t denominator_bound = 6;
};

/// Period/tail by naive tabulation of sigma^k(x), k <= |X|+1, scanning all
/// (k, n) pairs for the first repeat.
PointDynamics brute_dynamics(const SgdsMap& sys, int x);

/// All subsets passing the literal membership test
/// "x in s iff sigma(x) in s" over every domain point, by 2^|X| scan.
std::vector<std::vector<int>> brute_invariant_sets(const SgdsMap& sys);

/// True iff s is nonempty and no pair of proper invariant subsets of s
/// covers s. Scans all subset pairs directly.
bool brute_irreducible(const SgdsMap& sys, const std::vector<int>& s);

/// Invariant sets that are irreducible, and those that additionally
/// contain no periodic point.
std::vector<std::vector<int>> brute_irreducible_sets(const SgdsMap& sys);
std::vector<std::vector<int>> brute_aperiodic_irreducible_sets(const SgdsMap& sys);

/// All fiber assignments drawn from the alphabet that satisfy the
/// admissibility clauses, each checked by its own plain loop.
std::vector<AdmissibleFamily> brute_admissible_enum(
    const SgdsMap& sys, const std::vector<CircleSet>& alphabet);

/// Random system on 1..max_points points with ~2/3 domain density.
SgdsMap random_system(std::mt19937_64& rng, int max_points);

struct FuzzReport {
    int trials = 0;
    int disagreements = 0;
    std::string first_failure;

    bool pass() const { return disagreements == 0; }
};

/// Runs the oracle-vs-main comparison suite: dynamics on every point,
/// invariant-set lists, irreducibility of every invariant set, the
/// aperiodic irreducible collection, prime-catalog class structure, and
/// admissibility over a small coset alphabet.
FuzzReport fuzz_suite(const FuzzConfig& cfg);

}  // namespace sgds::oracle
