#include "sgds/rep.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace sgds {

RepBundle::RepBundle(const SgdsMap& sys, int x0, Cplx gamma, int level)
    : sys_(sys), x0_(x0), gamma_(gamma), level_(level) {
    if (level < 1) throw std::invalid_argument("RepBundle: level must be >= 1");
    orbit_ = ::sgds::orbit(sys_, x0);
    pos_.assign(sys_.size(), -1);
    for (std::size_t i = 0; i < orbit_.size(); ++i)
        pos_[orbit_[i]] = static_cast<int>(i);
    PointDynamics dyn = dynamics(sys_, x0);
    period_ = dyn.period;
    if (period_) {
        // y0 = sigma^{l(x0)+p-1}(x0), the last cycle point before the
        // orbit returns to sigma^{l(x0)}(x0).
        y0_ = *sys_.iterate(x0, *dyn.tail + *period_ - 1);
        c_.resize(orbit_.size());
        for (std::size_t i = 0; i < orbit_.size(); ++i) {
            int cur = orbit_[i];
            std::int64_t steps = 0;
            while (cur != y0_) {
                cur = sys_.successor(cur);
                ++steps;
            }
            c_[i] = steps;
        }
    } else if (level_ > 1) {
        throw std::invalid_argument("level-n representation needs a periodic base point");
    }
}

ComplexMatrix RepBundle::rep_t0(const PointFn& f) const {
    ComplexMatrix m = ComplexMatrix::Zero(dim(), dim());
    for (std::size_t i = 0; i < orbit_.size(); ++i)
        for (int j = 0; j < level_; ++j) {
            int b = basis_index(static_cast<int>(i), j);
            m(b, b) = f.at(orbit_[i]);
        }
    return m;
}

ComplexMatrix RepBundle::rep_tn(std::int64_t n, const PointFn& xi) const {
    for (std::size_t i = 0; i < sys_.size(); ++i)
        if (xi.at(i) != Cplx(0) && !sys_.iterate(static_cast<int>(i), n))
            throw std::invalid_argument("rep_tn: xi supported outside the domain of sigma^n");
    if (n == 0) return rep_t0(xi);
    ComplexMatrix m = ComplexMatrix::Zero(dim(), dim());
    Cplx phase = std::pow(gamma_, static_cast<double>(n));
    for (std::size_t i = 0; i < orbit_.size(); ++i) {
        int x = orbit_[i];
        for (int y : sys_.preimages_n(x, n)) {
            if (xi[y] == Cplx(0)) continue;
            int py = pos_[y];
            // Crossings of the marked point along y -> sigma^n(y) shift
            // the Z/level index: sigma_n^n(y, j') = (x, j' + D).
            std::int64_t D = 0;
            int cur = y;
            for (std::int64_t s = 0; s < n; ++s) {
                if (cur == y0_) ++D;
                cur = sys_.successor(cur);
            }
            for (int j = 0; j < level_; ++j) {
                std::int64_t jp = ((j - D) % level_ + level_) % level_;
                m(basis_index(py, static_cast<int>(jp)),
                  basis_index(static_cast<int>(i), j)) += phase * xi[y];
            }
        }
    }
    return m;
}

PointFn inner_product_n(const SgdsMap& sys, const PointFn& xi, const PointFn& eta,
                        std::int64_t n) {
    PointFn out(sys.size(), Cplx(0));
    for (std::size_t x = 0; x < sys.size(); ++x)
        for (int y : sys.preimages_n(static_cast<int>(x), n))
            out[x] += std::conj(xi.at(y)) * eta.at(y);
    return out;
}

namespace {

PointFn random_fn(const SgdsMap& sys, std::mt19937_64& rng,
                  bool domain_only = false, std::int64_t n = 1) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    PointFn f(sys.size(), Cplx(0));
    for (std::size_t i = 0; i < sys.size(); ++i) {
        if (domain_only && !sys.iterate(static_cast<int>(i), n)) continue;
        f[i] = Cplx(u(rng), u(rng));
    }
    return f;
}

}  // namespace

RelationReport check_defining_relations(const RepBundle& b, int samples,
                                        std::uint64_t seed) {
    const SgdsMap& sys = b.sys();
    std::mt19937_64 rng(seed);
    RelationReport rep;
    auto note = [&](double r) { rep.max_residual = std::max(rep.max_residual, r); };
    for (int s = 0; s < samples; ++s) {
        PointFn xi = random_fn(sys, rng, true);
        PointFn eta = random_fn(sys, rng, true);
        ComplexMatrix T1xi = b.rep_tn(1, xi);
        ComplexMatrix T1eta = b.rep_tn(1, eta);
        // (i) t1(xi)* t1(eta) = t0(<xi,eta>)
        note((T1xi.adjoint() * T1eta - b.rep_t0(inner_product_n(sys, xi, eta, 1)))
                 .norm());
        // (ii) with xi,eta supported on one domain point (sigma injective
        // on a singleton in the discrete topology)
        auto dom = sys.domain();
        if (!dom.empty()) {
            std::uniform_int_distribution<std::size_t> pick(0, dom.size() - 1);
            int u = dom[pick(rng)];
            PointFn xs(sys.size(), Cplx(0)), es(sys.size(), Cplx(0));
            xs[u] = xi[u];
            es[u] = eta[u];
            PointFn prod(sys.size(), Cplx(0));
            prod[u] = xs[u] * std::conj(es[u]);
            note((b.rep_tn(1, xs) * b.rep_tn(1, es).adjoint() - b.rep_t0(prod)).norm());
        }
        // t^n identities for a couple of exponents
        for (std::int64_t n = 1; n <= 3; ++n) {
            PointFn xn = random_fn(sys, rng, true, n);
            PointFn en = random_fn(sys, rng, true, n);
            // t*t: t^n(xi)* t^n(eta) = t0(<xi,eta>_n)
            note((b.rep_tn(n, xn).adjoint() * b.rep_tn(n, en) -
                  b.rep_t0(inner_product_n(sys, xn, en, n)))
                     .norm());
            // tt=t: t^n(xi) t^1(eta1) = t^{n+1}(x) with
            // x(z) = xi(z) * eta1(sigma^n(z))
            PointFn eta1 = random_fn(sys, rng, true);
            PointFn comb(sys.size(), Cplx(0));
            for (std::size_t z = 0; z < sys.size(); ++z)
                if (sys.iterate(static_cast<int>(z), n + 1))
                    comb[z] = xn[z] * eta1[*sys.iterate(static_cast<int>(z), n)];
            note((b.rep_tn(n, xn) * b.rep_tn(1, eta1) - b.rep_tn(n + 1, comb)).norm());
            // t^*t=t: t^n(xi)* t^{n+1}(eta) = t^1(<xi,eta>_n)
            PointFn en1 = random_fn(sys, rng, true, n + 1);
            note((b.rep_tn(n, xn).adjoint() * b.rep_tn(n + 1, en1) -
                  b.rep_tn(1, inner_product_n(sys, xn, en1, n)))
                     .norm());
        }
        ++rep.samples;
    }
    return rep;
}

std::vector<Cplx> spectrum(const ComplexMatrix& m) {
    Eigen::ComplexEigenSolver<ComplexMatrix> es(m, false);
    std::vector<Cplx> out(es.eigenvalues().data(),
                          es.eigenvalues().data() + es.eigenvalues().size());
    return out;
}

int irreducibility_span(const RepBundle& b, int max_word_len) {
    const SgdsMap& sys = b.sys();
    std::int64_t d = b.dim();
    // Generators: indicator diagonals and single-point t1 images, with
    // adjoints. Their words span the image algebra.
    std::vector<ComplexMatrix> gens;
    for (int x : b.orbit()) {
        PointFn f(sys.size(), Cplx(0));
        f[x] = 1.0;
        gens.push_back(b.rep_t0(f));
        if (sys.in_domain(x)) {
            ComplexMatrix t = b.rep_tn(1, f);
            gens.push_back(t);
            gens.push_back(t.adjoint());
        }
    }
    // Gram-Schmidt basis of vectorized words.
    std::vector<ComplexVector> basis;
    auto insert = [&](const ComplexMatrix& m) {
        ComplexVector v = Eigen::Map<const ComplexVector>(m.data(), d * d);
        for (const auto& bvec : basis) v -= bvec.dot(v) * bvec;
        double n = v.norm();
        if (n > 1e-9) {
            basis.push_back(v / n);
            return true;
        }
        return false;
    };
    std::vector<ComplexMatrix> frontier;
    for (const auto& g : gens)
        if (insert(g)) frontier.push_back(g);
    for (int len = 2; len <= max_word_len && !frontier.empty(); ++len) {
        std::vector<ComplexMatrix> next;
        for (const auto& w : frontier)
            for (const auto& g : gens) {
                ComplexMatrix m = w * g;
                if (insert(m)) next.push_back(std::move(m));
            }
        frontier = std::move(next);
        if (static_cast<std::int64_t>(basis.size()) == d * d) break;
    }
    return static_cast<int>(basis.size());
}

ComplexMatrix iota_k(const RepBundle& b, int k) {
    if (b.level() < 1 || !b.periodic_class())
        throw std::invalid_argument("iota_k: periodic level-n bundle required");
    int n = b.level();
    std::int64_t p = b.class_period();
    std::int64_t d = static_cast<std::int64_t>(b.orbit().size());
    ComplexMatrix m = ComplexMatrix::Zero(d * n, d);
    double norm = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::int64_t i = 0; i < d; ++i)
        for (int j = 0; j < n; ++j) {
            std::int64_t e = (static_cast<std::int64_t>(j) * p - b.c(static_cast<int>(i))) * k;
            m(b.basis_index(static_cast<int>(i), j), i) =
                norm * Turn(e, n * p).unit();
        }
    return m;
}

DecompositionReport check_decomposition(const RepBundle& b, int samples,
                                        std::uint64_t seed) {
    int n = b.level();
    std::int64_t p = b.class_period();
    std::int64_t d = static_cast<std::int64_t>(b.orbit().size());
    DecompositionReport rep;
    std::vector<ComplexMatrix> iotas;
    ComplexMatrix blockU = ComplexMatrix::Zero(d * n, d * n);
    for (int k = 0; k < n; ++k) {
        ComplexMatrix ik = iota_k(b, k);
        rep.isometry_residual = std::max(
            rep.isometry_residual,
            (ik.adjoint() * ik - ComplexMatrix::Identity(d, d)).norm());
        blockU.block(0, k * d, d * n, d) = ik;
        iotas.push_back(std::move(ik));
    }
    // Twisted level-1 bundles at zeta_{np}^k * gamma0.
    std::vector<RepBundle> twisted;
    for (int k = 0; k < n; ++k)
        twisted.emplace_back(b.sys(), b.base_point(),
                             Turn(k, n * p).unit() * b.gamma(), 1);
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        PointFn f = random_fn(b.sys(), rng);
        PointFn xi = random_fn(b.sys(), rng, true);
        for (int which = 0; which < 2; ++which) {
            ComplexMatrix big = which == 0 ? b.rep_t0(f) : b.rep_tn(1, xi);
            ComplexMatrix direct = ComplexMatrix::Zero(d * n, d * n);
            for (int k = 0; k < n; ++k)
                direct.block(k * d, k * d, d, d) =
                    which == 0 ? twisted[k].rep_t0(f) : twisted[k].rep_tn(1, xi);
            rep.conjugation_residual =
                std::max(rep.conjugation_residual,
                         (blockU * direct * blockU.adjoint() - big).norm());
        }
    }
    return rep;
}

CornerReport u0_p0(const RepBundle& b) {
    const SgdsMap& sys = b.sys();
    PointDynamics dyn = dynamics(sys, b.base_point());
    if (!dyn.periodic() || *dyn.tail != 0)
        throw std::invalid_argument("u0_p0: base point must lie on a cycle");
    std::int64_t n0 = *dyn.period;
    PointFn f0(sys.size(), Cplx(0));
    f0[b.base_point()] = 1.0;
    CornerReport rep;
    rep.p0 = b.rep_t0(f0);
    rep.u0 = b.rep_tn(n0, f0);
    rep.unitary_residual =
        std::max((rep.u0.adjoint() * rep.u0 - rep.p0).norm(),
                 (rep.u0 * rep.u0.adjoint() - rep.p0).norm());
    Cplx phase = std::pow(b.gamma(), static_cast<double>(n0));
    rep.phase_residual = (rep.u0 - phase * rep.p0).norm();
    // Case table of t^n(f0) t^m(f0)^* against p0 / powers of u0.
    for (std::int64_t n = 0; n <= 2 * n0 + 1; ++n)
        for (std::int64_t m = 0; m <= 2 * n0 + 1; ++m) {
            ComplexMatrix lhs = b.rep_tn(n, f0) * b.rep_tn(m, f0).adjoint();
            ComplexMatrix rhs;
            if (n == m) {
                rhs = rep.p0;
            } else if ((n - m) % n0 == 0 && n > m) {
                std::int64_t k = (n - m) / n0;
                rhs = rep.p0;
                for (std::int64_t i = 0; i < k; ++i) rhs = rhs * rep.u0;
            } else if ((m - n) % n0 == 0 && m > n) {
                std::int64_t k = (m - n) / n0;
                ComplexMatrix uk = rep.p0;
                for (std::int64_t i = 0; i < k; ++i) uk = uk * rep.u0;
                rhs = uk.adjoint();
            } else {
                rhs = ComplexMatrix::Zero(b.dim(), b.dim());
            }
            rep.table_residual = std::max(rep.table_residual, (lhs - rhs).norm());
        }
    return rep;
}

RelationReport gauge_shift_check(const RepBundle& b, Cplx z, int samples,
                                 std::uint64_t seed) {
    RepBundle shifted(b.sys(), b.base_point(), z * b.gamma(), b.level());
    std::mt19937_64 rng(seed);
    RelationReport rep;
    for (int s = 0; s < samples; ++s) {
        PointFn f = random_fn(b.sys(), rng);
        PointFn xi = random_fn(b.sys(), rng, true);
        double r0 = (b.rep_t0(f) - shifted.rep_t0(f)).norm();
        double r1 = (z * b.rep_tn(1, xi) - shifted.rep_tn(1, xi)).norm();
        rep.max_residual = std::max({rep.max_residual, r0, r1});
        ++rep.samples;
    }
    return rep;
}

double operator_norm(const ComplexMatrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues()(0);
}

}  // namespace sgds
