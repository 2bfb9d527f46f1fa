#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "sgds/family.hpp"
#include "sgds/rep.hpp"

namespace sgds {

/// Cycle set W with the restricted homeomorphism sigma_W; sigma_W^N = id
/// for N = lcm of the periods on W.
struct CycleSet {
    std::vector<int> points;       // cycle points, in sigma order per cycle
    std::vector<int> cycle_index;  // position within its cycle
    std::vector<int> cycle_start;  // start offset of each cycle in points
    std::int64_t order = 1;        // N with sigma_W^N = id

    bool contains(int x) const;
    /// sigma_W^n(x) for any integer n (negative allowed).
    int shift(const SgdsMap& sys, int x, std::int64_t n) const;
};

/// Builds W as the cycles of the given orbit classes.
CycleSet cycle_set(const SgdsMap& sys, const std::vector<int>& points);

struct WitnessOutsideSupport {
    PointFn f;  // indicator of the target point
};

struct WitnessExactCoset {
    CycleSet W;
    std::vector<double> f0;           // on W points, sigma_W-invariant
    std::vector<Cplx> coeffs;         // q(z) = sum coeffs[k] z^k
    Cplx q_at_target;                 // q(gamma0), nonzero
};

struct WitnessArcApprox {
    CycleSet W;
    std::vector<double> f0;
    Turn center;                      // peak of the bump g
    Turn half_width;                  // tent half-width; g = 0 on the fiber
    std::vector<int> fejer_degrees;
};

struct WitnessProgram {
    std::variant<WitnessOutsideSupport, WitnessExactCoset, WitnessArcApprox> mode;
};

/// pi(t^n(f)) for integer n (negative via the adjoint convention) and f
/// supported on W: delta_y -> gamma^n f(sigma_W^{-n}(y)) delta_{sigma_W^{-n}(y)}.
ComplexMatrix rep_tn_signed(const RepBundle& b, const CycleSet& W, std::int64_t n,
                            const std::vector<double>& f);

/// The eigenvector xi_{y,k} = (1/sqrt p) sum_j zeta_p^{jk} delta_{sigma_W^j(y)}.
ComplexVector eigen_vector(const RepBundle& b, const CycleSet& W, int y, int k);

/// || t^n(f0) xi_{y,k} - (gamma zeta_p^k)^n f0(y) xi_{y,k} ||.
double eigencheck(const RepBundle& b, const CycleSet& W, int y, int k,
                  std::int64_t n, const std::vector<double>& f0);

/// sigma_W-invariant average (1/N) sum_k f(sigma_W^k(x)) of f on W.
std::vector<double> average_on_cycles(const SgdsMap& sys, const CycleSet& W,
                                      const std::vector<double>& f);

/// Fejer-weighted Fourier coefficients of the unit tent centered at
/// `center` with the given half width, degrees -N..N (index n+N).
std::vector<Cplx> fejer_tent_coeffs(const Turn& center, const Turn& half_width, int N);

/// Constructs a witness separating (x0, gamma0) from the admissible set y.
/// Throws when (x0, gamma0) lies in y or fiber(x0) is Full.
WitnessProgram build_witness(const SgdsMap& sys, const AdmissibleFamily& y, int x0,
                             const Turn& gamma0);

struct WitnessReport {
    bool pass = false;
    double target_norm = 0.0;
    double target_bound = 0.0;   // required lower bound
    double max_y_norm = 0.0;     // sup over sampled Y-representations
    double tolerance = 0.0;
    int sampled_reps = 0;
    std::string detail;
};

/// Evaluates the witness matrices: the target representation must not
/// annihilate it while every sampled representation of Y must (to the
/// mode's tolerance).
WitnessReport verify_witness(const SgdsMap& sys, const WitnessProgram& w,
                             const AdmissibleFamily& y, int x0, const Turn& gamma0,
                             std::int64_t sample_denominator_bound = 12);

/// Declared convergence schedule for ArcApprox verification.
inline double arc_epsilon(int fejer_degree) { return 2.56 / fejer_degree; }

}  // namespace sgds
