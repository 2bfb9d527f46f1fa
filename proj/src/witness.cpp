#include "sgds/witness.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sgds {

bool CycleSet::contains(int x) const {
    return std::find(points.begin(), points.end(), x) != points.end();
}

int CycleSet::shift(const SgdsMap& sys, int x, std::int64_t n) const {
    (void)sys;
    auto it = std::find(points.begin(), points.end(), x);
    if (it == points.end()) throw std::invalid_argument("shift: point not in W");
    std::size_t pos = static_cast<std::size_t>(it - points.begin());
    // Locate the cycle block containing pos.
    std::size_t c = 0;
    while (c + 1 < cycle_start.size() &&
           static_cast<std::size_t>(cycle_start[c + 1]) <= pos)
        ++c;
    std::size_t start = static_cast<std::size_t>(cycle_start[c]);
    std::size_t len = (c + 1 < cycle_start.size()
                           ? static_cast<std::size_t>(cycle_start[c + 1])
                           : points.size()) -
                      start;
    std::int64_t idx = static_cast<std::int64_t>(pos - start);
    std::int64_t j = ((idx + n) % static_cast<std::int64_t>(len) +
                      static_cast<std::int64_t>(len)) %
                     static_cast<std::int64_t>(len);
    return points[start + static_cast<std::size_t>(j)];
}

CycleSet cycle_set(const SgdsMap& sys, const std::vector<int>& pts) {
    CycleSet W;
    std::vector<char> placed(sys.size(), 0);
    for (int x : pts) {
        if (placed[x]) continue;
        PointDynamics d = dynamics(sys, x);
        if (!d.periodic() || *d.tail != 0) continue;
        W.cycle_start.push_back(static_cast<int>(W.points.size()));
        for (int y : d.eventual_cycle) {
            W.points.push_back(y);
            W.cycle_index.push_back(static_cast<int>(W.points.size()) - 1 -
                                    W.cycle_start.back());
            placed[y] = 1;
        }
        W.order = std::lcm(W.order, *d.period);
    }
    return W;
}

ComplexMatrix rep_tn_signed(const RepBundle& b, const CycleSet& W, std::int64_t n,
                            const std::vector<double>& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] != 0.0 && !W.contains(static_cast<int>(i)))
            throw std::invalid_argument("rep_tn_signed: f supported outside W");
    ComplexMatrix m = ComplexMatrix::Zero(b.dim(), b.dim());
    Cplx phase = std::pow(b.gamma(), static_cast<double>(n));
    for (std::size_t i = 0; i < b.orbit().size(); ++i) {
        int y = b.orbit()[i];
        if (!W.contains(y)) continue;
        int z = W.shift(b.sys(), y, -n);
        if (f.at(z) == 0.0) continue;
        m(b.orbit_pos(z), static_cast<int>(i)) = phase * f[z];
    }
    return m;
}

ComplexVector eigen_vector(const RepBundle& b, const CycleSet& W, int y, int k) {
    std::int64_t p = *dynamics(b.sys(), y).period;
    ComplexVector v = ComplexVector::Zero(b.dim());
    double norm = 1.0 / std::sqrt(static_cast<double>(p));
    for (std::int64_t j = 0; j < p; ++j) {
        int z = W.shift(b.sys(), y, j);
        v(b.orbit_pos(z)) += norm * Turn(j * k, p).unit();
    }
    return v;
}

double eigencheck(const RepBundle& b, const CycleSet& W, int y, int k,
                  std::int64_t n, const std::vector<double>& f0) {
    std::int64_t p = *dynamics(b.sys(), y).period;
    ComplexVector xi = eigen_vector(b, W, y, k);
    Cplx lambda = std::pow(b.gamma() * Turn(k, p).unit(), static_cast<double>(n)) *
                  f0.at(y);
    return (rep_tn_signed(b, W, n, f0) * xi - lambda * xi).norm();
}

std::vector<double> average_on_cycles(const SgdsMap& sys, const CycleSet& W,
                                      const std::vector<double>& f) {
    std::vector<double> out(f.size(), 0.0);
    for (int x : W.points) {
        double acc = 0.0;
        for (std::int64_t k = 0; k < W.order; ++k) acc += f.at(W.shift(sys, x, k));
        out[x] = acc / static_cast<double>(W.order);
    }
    return out;
}

std::vector<Cplx> fejer_tent_coeffs(const Turn& center, const Turn& half_width,
                                    int N) {
    const double pi = 3.14159265358979323846;
    double w = half_width.value();
    std::vector<Cplx> coeffs(2 * N + 1);
    for (int n = -N; n <= N; ++n) {
        double ghat;
        if (n == 0) {
            ghat = w;
        } else {
            double a = pi * n * w;
            double s = std::sin(a) / a;
            ghat = w * s * s;
        }
        double weight = 1.0 - std::abs(n) / static_cast<double>(N + 1);
        // e^{-2 pi i n c}
        Cplx shift = Turn(-static_cast<std::int64_t>(n) * center.num, center.den).unit();
        coeffs[n + N] = weight * ghat * shift;
    }
    return coeffs;
}

namespace {

// Circular distance between two turns, as an exact rational in [0,1/2].
Turn circ_dist(const Turn& a, const Turn& b) {
    Turn d = a - b;
    Turn e = -d;
    return d < e || d == e ? d : e;
}

Turn distance_to_fiber(const CircleSet& fiber, const Turn& g) {
    Turn best(1, 2);
    auto consider = [&](const Turn& t) {
        Turn d = circ_dist(g, t);
        if (d < best) best = d;
    };
    for (const auto& p : fiber.points()) consider(p);
    for (const auto& a : fiber.arcs()) {
        consider(a.lo);
        consider(a.hi);
    }
    return best;
}

}  // namespace

WitnessProgram build_witness(const SgdsMap& sys, const AdmissibleFamily& y, int x0,
                             const Turn& gamma0) {
    const CircleSet& fiber = y.fiber(x0);
    if (fiber.contains(gamma0))
        throw std::invalid_argument("build_witness: (x0,gamma0) lies in Y");
    if (fiber.is_full())
        throw std::invalid_argument("build_witness: fiber(x0) is Full, no witness exists");

    WitnessProgram w;
    if (fiber.is_empty()) {
        WitnessOutsideSupport m;
        m.f.assign(sys.size(), Cplx(0));
        m.f[x0] = 1.0;
        w.mode = std::move(m);
        return w;
    }
    // Proper fiber: admissibility makes x0 periodic; W is the cycle of
    // x0's class, f0 the constant 1 there.
    PointDynamics dyn = dynamics(sys, x0);
    if (!dyn.periodic())
        throw std::invalid_argument("build_witness: proper fiber over aperiodic point");
    std::int64_t p = *dyn.period;
    CycleSet W = cycle_set(sys, orbit(sys, x0));
    std::vector<double> f0(sys.size(), 0.0);
    for (int z : W.points) f0[z] = 1.0;

    if (fiber.is_finite_points()) {
        WitnessExactCoset m;
        m.W = std::move(W);
        m.f0 = std::move(f0);
        // q(z) = prod over distinct p-th powers w of the fiber of (z^p - w);
        // vanishes exactly on the zeta_p-cosets, q(gamma0) != 0.
        std::vector<Turn> powers;
        for (const Turn& t : fiber.points()) {
            Turn tp(t.num * p, t.den);
            if (std::find(powers.begin(), powers.end(), tp) == powers.end())
                powers.push_back(tp);
        }
        std::vector<Cplx> q{1.0};
        for (const Turn& tp : powers) {
            std::vector<Cplx> next(q.size() + static_cast<std::size_t>(p), Cplx(0));
            Cplx root = tp.unit();
            for (std::size_t i = 0; i < q.size(); ++i) {
                next[i + static_cast<std::size_t>(p)] += q[i];
                next[i] -= root * q[i];
            }
            q = std::move(next);
        }
        Cplx g = gamma0.unit();
        Cplx val = 0.0;
        for (std::size_t i = q.size(); i-- > 0;) val = val * g + q[i];
        m.coeffs = std::move(q);
        m.q_at_target = val;
        w.mode = std::move(m);
        return w;
    }

    WitnessArcApprox m;
    m.W = std::move(W);
    m.f0 = std::move(f0);
    m.center = gamma0;
    Turn dist = distance_to_fiber(fiber, gamma0);
    m.half_width = dist < Turn(1, 16) ? dist : Turn(1, 16);
    m.fejer_degrees = {64, 128, 256};
    w.mode = std::move(m);
    return w;
}

namespace {

ComplexMatrix witness_matrix(const RepBundle& b, const WitnessProgram& w) {
    if (const auto* o = std::get_if<WitnessOutsideSupport>(&w.mode))
        return b.rep_t0(o->f);
    if (const auto* e = std::get_if<WitnessExactCoset>(&w.mode)) {
        ComplexMatrix a = ComplexMatrix::Zero(b.dim(), b.dim());
        for (std::size_t k = 0; k < e->coeffs.size(); ++k)
            if (e->coeffs[k] != Cplx(0))
                a += e->coeffs[k] *
                     rep_tn_signed(b, e->W, static_cast<std::int64_t>(k), e->f0);
        return a;
    }
    const auto& arc = std::get<WitnessArcApprox>(w.mode);
    int N = arc.fejer_degrees.back();
    std::vector<Cplx> coeffs = fejer_tent_coeffs(arc.center, arc.half_width, N);
    ComplexMatrix a = ComplexMatrix::Zero(b.dim(), b.dim());
    for (int n = -N; n <= N; ++n)
        a += coeffs[n + N] * rep_tn_signed(b, arc.W, n, arc.f0);
    return a;
}

}  // namespace

WitnessReport verify_witness(const SgdsMap& sys, const WitnessProgram& w,
                             const AdmissibleFamily& y, int x0, const Turn& gamma0,
                             std::int64_t sample_denominator_bound) {
    WitnessReport r;
    RepBundle target(sys, x0, gamma0.unit());
    r.target_norm = operator_norm(witness_matrix(target, w));
    if (const auto* e = std::get_if<WitnessExactCoset>(&w.mode)) {
        PointDynamics dyn = dynamics(sys, x0);
        int x0p = *sys.iterate(x0, *dyn.tail);
        r.target_bound = std::abs(e->q_at_target) * e->f0.at(x0p) / 2.0;
        r.tolerance = 1e-10;
    } else if (std::holds_alternative<WitnessOutsideSupport>(w.mode)) {
        r.target_bound = 0.5;
        r.tolerance = 1e-10;
    } else {
        const auto& arc = std::get<WitnessArcApprox>(w.mode);
        r.target_bound = 0.5;
        r.tolerance = arc_epsilon(arc.fejer_degrees.back());
    }

    OrbitPartition part = orbit_partition(sys);
    std::vector<Turn> grid = rational_turns_below(Turn(1, 1), sample_denominator_bound);
    std::vector<char> in_support(sys.size(), 0);
    for (int s : support(y)) in_support[s] = 1;
    for (const auto& cls : part.classes) {
        int rep_pt = cls.members.front();
        if (!in_support[rep_pt]) continue;
        const CircleSet& fiber = y.fiber(rep_pt);
        for (const Turn& g : grid) {
            if (!fiber.contains(g)) continue;
            RepBundle bg(sys, rep_pt, g.unit());
            r.max_y_norm = std::max(r.max_y_norm, operator_norm(witness_matrix(bg, w)));
            ++r.sampled_reps;
        }
    }
    r.pass = r.target_norm >= r.target_bound && r.max_y_norm <= r.tolerance;
    if (!r.pass)
        r.detail = r.target_norm < r.target_bound ? "target norm below bound"
                                                  : "Y-representation residual too large";
    return r;
}

}  // namespace sgds
