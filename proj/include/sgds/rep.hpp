#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "sgds/system.hpp"
#include "sgds/turn.hpp"

namespace sgds {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Cplx = std::complex<double>;

/// Function on X (or on a domain subset), complex-valued; indexed by point.
using PointFn = std::vector<Cplx>;

/// The finite-dimensional representation pi_{(x0,gamma0)} on l2(Orb(x0)),
/// or pi^(n) on l2(Orb(x0) x Z/nZ) when level > 1 (periodic x0 only).
/// Basis order: orbit points in canonical order, and for level n the pairs
/// (x, j) lexicographically by (position of x, j).
class RepBundle {
public:
    RepBundle(const SgdsMap& sys, int x0, Cplx gamma, int level = 1);
    RepBundle(const SgdsMap& sys, const std::string& x0, const Turn& gamma,
              int level = 1)
        : RepBundle(sys, sys.index(x0), gamma.unit(), level) {}

    const SgdsMap& sys() const { return sys_; }
    int base_point() const { return x0_; }
    Cplx gamma() const { return gamma_; }
    int level() const { return level_; }
    std::int64_t dim() const { return static_cast<std::int64_t>(orbit_.size()) * level_; }
    const std::vector<int>& orbit() const { return orbit_; }
    /// Position of point x within the orbit basis, -1 if outside.
    int orbit_pos(int x) const { return pos_.at(x); }
    int basis_index(int orbit_position, int j) const {
        return orbit_position * level_ + j;
    }
    /// Cycle-distance c(x) to the marked point y0 (periodic class only).
    std::int64_t c(int orbit_position) const { return c_.at(orbit_position); }
    int d(int orbit_position) const { return orbit_[orbit_position] == y0_ ? 1 : 0; }
    int marked_point() const { return y0_; }
    std::int64_t class_period() const { return period_.value(); }
    bool periodic_class() const { return period_.has_value(); }

    /// pi(t^0(f)): diagonal of f over the basis.
    ComplexMatrix rep_t0(const PointFn& f) const;
    /// pi(t^n(xi)) for n >= 0. xi must vanish off the domain of sigma^n.
    ComplexMatrix rep_tn(std::int64_t n, const PointFn& xi) const;

private:
    SgdsMap sys_;
    int x0_;
    Cplx gamma_;
    int level_;
    std::vector<int> orbit_;
    std::vector<int> pos_;
    std::optional<std::int64_t> period_;
    int y0_ = -1;
    std::vector<std::int64_t> c_;
};

/// <xi,eta>_n as a function on X: sum over sigma^n-preimages.
PointFn inner_product_n(const SgdsMap& sys, const PointFn& xi, const PointFn& eta,
                        std::int64_t n);

struct RelationReport {
    double max_residual = 0.0;
    int samples = 0;
};

/// Checks relations (i) and (ii) of the defining pair plus the
/// t^n adjoint/product identities on the given number of random samples.
RelationReport check_defining_relations(const RepBundle& b, int samples,
                                        std::uint64_t seed = 1);

/// Eigenvalues (with multiplicity) of a square complex matrix.
std::vector<Cplx> spectrum(const ComplexMatrix& m);

/// Dimension of the span of generator words up to the given length;
/// equals |Orb|^2 exactly when the representation is irreducible.
int irreducibility_span(const RepBundle& b, int max_word_len);

/// The intertwining isometry iota_k : H -> H^(n) of the level-n
/// decomposition (level-n bundle required).
ComplexMatrix iota_k(const RepBundle& b, int k);

struct DecompositionReport {
    double isometry_residual = 0.0;    // max over k of ||iota_k* iota_k - I||
    double conjugation_residual = 0.0; // block unitary vs generator samples
};

/// Verifies that the block unitary [iota_0 ... iota_{n-1}] conjugates the
/// direct sum of level-1 generator images at twisted parameters onto the
/// level-n images.
DecompositionReport check_decomposition(const RepBundle& b, int samples,
                                        std::uint64_t seed = 2);

struct CornerReport {
    ComplexMatrix p0;
    ComplexMatrix u0;
    double unitary_residual = 0.0;  // u0*u0 = u0u0* = p0
    double phase_residual = 0.0;    // pi(u0) = gamma^{n0} pi(p0)
    double table_residual = 0.0;    // t^n(f0) t^m(f0)* case table
};

/// Builds p0 = t^0(f0), u0 = t^{n0}(f0) for the indicator f0 of a cycle
/// point and verifies the corner identities.
CornerReport u0_p0(const RepBundle& b);

/// Gauge action as a parameter shift: images at (x0, gamma0) scaled by z
/// equal images at (x0, z*gamma0).
RelationReport gauge_shift_check(const RepBundle& b, Cplx z, int samples,
                                 std::uint64_t seed = 3);

double operator_norm(const ComplexMatrix& m);

}  // namespace sgds
