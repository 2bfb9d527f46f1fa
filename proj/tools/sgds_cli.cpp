#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "sgds/io.hpp"
#include "sgds/oracle.hpp"
#include "sgds/witness.hpp"

using nlohmann::json;
using namespace sgds;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitBadInput = 2;

std::string turn_str(const Turn& t) { return t.str(); }

json circle_json(const CircleSet& s) {
    json j;
    if (s.is_empty()) {
        j["kind"] = "empty";
    } else if (s.is_full()) {
        j["kind"] = "full";
    } else {
        j["kind"] = "finite";
        j["points"] = json::array();
        for (const auto& p : s.points()) j["points"].push_back(turn_str(p));
        j["arcs"] = json::array();
        for (const auto& a : s.arcs())
            j["arcs"].push_back({turn_str(a.lo), turn_str(a.hi)});
    }
    return j;
}

json names_of(const SgdsMap& sys, const std::vector<int>& pts) {
    json j = json::array();
    for (int p : pts) j.push_back(sys.name(p));
    return j;
}

// Accepts only reduced integer fractions `p/q` (or a bare integer).
Turn parse_gamma(const std::string& text) {
    for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-')
            throw ParseError("--gamma takes an exact fraction p/q, not `" + text +
                             "`; decimals would break exact circle arithmetic");
    return Turn::parse(text);
}

int cmd_analyze(const std::string& path, bool as_json) {
    SgdsMap sys = parse_system(read_file(path));
    OrbitPartition part = orbit_partition(sys);
    auto inv = invariant_sets(sys);
    auto per = per_points(sys);
    auto aper = a_sets(sys);
    std::vector<int> all(sys.size());
    for (std::size_t i = 0; i < sys.size(); ++i) all[i] = static_cast<int>(i);
    bool free = is_essentially_free(sys, all);

    if (as_json) {
        json j;
        j["schema"] = 1;
        j["points"] = sys.names();
        json dyn = json::array();
        for (std::size_t i = 0; i < sys.size(); ++i) {
            PointDynamics d = dynamics(sys, static_cast<int>(i));
            json e;
            e["point"] = sys.name(static_cast<int>(i));
            e["period"] = d.period ? json(*d.period) : json("inf");
            e["tail"] = d.tail ? json(*d.tail) : json("inf");
            dyn.push_back(e);
        }
        j["dynamics"] = dyn;
        json cls = json::array();
        for (const auto& c : part.classes) {
            json e;
            e["members"] = names_of(sys, c.members);
            e["period"] = c.period ? json(*c.period) : json("inf");
            cls.push_back(e);
        }
        j["classes"] = cls;
        j["per"] = names_of(sys, per);
        j["aperiodic_irreducible"] = json::array();
        for (const auto& s : aper) j["aperiodic_irreducible"].push_back(names_of(sys, s));
        j["invariant_set_count"] = inv.size();
        j["essentially_free"] = free;
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }

    std::cout << "points: " << sys.size() << "\n";
    std::cout << "point  period  tail\n";
    for (std::size_t i = 0; i < sys.size(); ++i) {
        PointDynamics d = dynamics(sys, static_cast<int>(i));
        std::cout << sys.name(static_cast<int>(i)) << "  "
                  << (d.period ? std::to_string(*d.period) : "inf") << "  "
                  << (d.tail ? std::to_string(*d.tail) : "inf") << "\n";
    }
    std::cout << "orbit classes: " << part.classes.size() << "\n";
    for (const auto& c : part.classes) {
        std::cout << "  {";
        for (std::size_t k = 0; k < c.members.size(); ++k)
            std::cout << (k ? " " : "") << sys.name(c.members[k]);
        std::cout << "}" << (c.periodic() ? " period " + std::to_string(*c.period)
                                          : " aperiodic")
                  << "\n";
    }
    std::cout << "Per: {";
    for (std::size_t k = 0; k < per.size(); ++k)
        std::cout << (k ? " " : "") << sys.name(per[k]);
    std::cout << "}\n";
    std::cout << "aperiodic irreducible sets: " << aper.size() << "\n";
    std::cout << "invariant sets: " << inv.size() << "\n";
    std::cout << "essentially free: " << (free ? "yes" : "no") << "\n";
    return kExitOk;
}

int cmd_primes(const std::string& path, std::int64_t max_den, bool as_json) {
    SgdsMap sys = parse_system(read_file(path));
    OrbitPartition part = orbit_partition(sys);
    auto catalog = prime_catalog(sys, max_den);
    if (as_json) {
        json j;
        j["schema"] = 1;
        j["max_denominator"] = max_den;
        json entries = json::array();
        for (const auto& [key, fam] : catalog) {
            json e;
            e["class"] = names_of(sys, part.classes[key.class_id].members);
            if (key.variant == PrimeKey::Variant::AperiodicGauge) {
                e["variant"] = "aperiodic_gauge";
            } else {
                e["variant"] = "cycle_point";
                e["turn"] = turn_str(key.turn);
                e["turn_range"] = "[0, 1/" +
                                  std::to_string(*part.classes[key.class_id].period) +
                                  ")";
            }
            entries.push_back(e);
        }
        j["primes"] = entries;
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "prime ideals (rational turns, denominator <= " << max_den << "):\n";
    for (const auto& [key, fam] : catalog) {
        const auto& cls = part.classes[key.class_id];
        std::cout << "  class {";
        for (std::size_t k = 0; k < cls.members.size(); ++k)
            std::cout << (k ? " " : "") << sys.name(cls.members[k]);
        std::cout << "} ";
        if (key.variant == PrimeKey::Variant::AperiodicGauge)
            std::cout << "gauge prime\n";
        else
            std::cout << "cycle point, turn " << turn_str(key.turn) << " of [0, 1/"
                      << *cls.period << ")\n";
    }
    std::cout << "total: " << catalog.size() << "\n";
    return kExitOk;
}

int cmd_admissible(const std::string& sys_path, const std::string& fib_path,
                   bool as_json) {
    SgdsMap sys = parse_system(read_file(sys_path));
    AdmissibleFamily y = parse_fibers(sys, read_file(fib_path));
    AdmissibilityReport r = is_admissible(sys, y);
    if (as_json) {
        json j;
        j["schema"] = 1;
        j["admissible"] = r.admissible;
        if (!r.admissible) {
            j["clause"] = r.clause;
            j["point"] = r.point >= 0 ? json(sys.name(r.point)) : json();
            j["message"] = r.message;
        }
        std::cout << j.dump(2) << "\n";
    } else if (r.admissible) {
        std::cout << "admissible\n";
    } else {
        std::cout << "not admissible (clause " << r.clause << "): " << r.message << "\n";
    }
    return r.admissible ? kExitOk : kExitViolation;
}

json program_json(const SgdsMap& sys, const WitnessProgram& w) {
    json j;
    if (const auto* o = std::get_if<WitnessOutsideSupport>(&w.mode)) {
        j["mode"] = "outside_support";
        json f = json::array();
        for (std::size_t i = 0; i < o->f.size(); ++i)
            if (o->f[i] != Cplx(0)) f.push_back(sys.name(static_cast<int>(i)));
        j["support"] = f;
        return j;
    }
    auto cycle_json = [&](const CycleSet& W, const std::vector<double>& f0) {
        j["W"] = names_of(sys, W.points);
        j["order"] = W.order;
        json f = json::array();
        for (int x : W.points) f.push_back(f0.at(x));
        j["f0"] = f;
    };
    if (const auto* e = std::get_if<WitnessExactCoset>(&w.mode)) {
        j["mode"] = "exact_coset";
        cycle_json(e->W, e->f0);
        json coeffs = json::array();
        for (const auto& c : e->coeffs) coeffs.push_back({c.real(), c.imag()});
        j["q_coeffs"] = coeffs;
        j["q_at_target"] = {e->q_at_target.real(), e->q_at_target.imag()};
        return j;
    }
    const auto& a = std::get<WitnessArcApprox>(w.mode);
    j["mode"] = "arc_approx";
    cycle_json(a.W, a.f0);
    j["center"] = turn_str(a.center);
    j["half_width"] = turn_str(a.half_width);
    j["fejer_degrees"] = a.fejer_degrees;
    return j;
}

int cmd_witness(const std::string& sys_path, const std::string& fib_path,
                const std::string& point, const std::string& gamma_text, bool as_json) {
    SgdsMap sys = parse_system(read_file(sys_path));
    AdmissibleFamily y = parse_fibers(sys, read_file(fib_path));
    AdmissibilityReport adm = is_admissible(sys, y);
    if (!adm.admissible) {
        std::cerr << "fiber file is not admissible: " << adm.message << "\n";
        return kExitBadInput;
    }
    Turn gamma = parse_gamma(gamma_text);
    int x0 = sys.index(point);
    WitnessProgram w = build_witness(sys, y, x0, gamma);
    WitnessReport r = verify_witness(sys, w, y, x0, gamma);
    if (as_json) {
        json j;
        j["schema"] = 1;
        j["point"] = point;
        j["gamma"] = turn_str(gamma);
        j["program"] = program_json(sys, w);
        json rep;
        rep["pass"] = r.pass;
        rep["target_norm"] = r.target_norm;
        rep["target_bound"] = r.target_bound;
        rep["max_y_norm"] = r.max_y_norm;
        rep["tolerance"] = r.tolerance;
        rep["sampled_reps"] = r.sampled_reps;
        if (!r.detail.empty()) rep["detail"] = r.detail;
        j["report"] = rep;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "witness for (" << point << ", " << turn_str(gamma) << "): "
                  << (r.pass ? "pass" : "FAIL") << "\n";
        std::cout << "  target norm " << r.target_norm << " (bound " << r.target_bound
                  << ")\n";
        std::cout << "  max residual over " << r.sampled_reps << " Y-representations: "
                  << r.max_y_norm << " (tolerance " << r.tolerance << ")\n";
        if (!r.detail.empty()) std::cout << "  " << r.detail << "\n";
    }
    return r.pass ? kExitOk : kExitViolation;
}

int cmd_verify(std::uint64_t seed, int trials, int max_points, bool as_json) {
    oracle::FuzzConfig cfg;
    cfg.seed = seed;
    cfg.trials = trials;
    cfg.max_points = max_points;
    oracle::FuzzReport r = oracle::fuzz_suite(cfg);
    if (as_json) {
        json j;
        j["schema"] = 1;
        j["trials"] = r.trials;
        j["disagreements"] = r.disagreements;
        j["pass"] = r.pass();
        if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (r.pass() ? "pass" : "FAIL") << ": " << r.trials << " trials, "
                  << r.disagreements << " disagreements\n";
        if (!r.first_failure.empty()) std::cout << "first: " << r.first_failure << "\n";
    }
    return r.pass() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ideal-structure analysis of finite singly generated dynamical systems"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    std::string sys_path, fib_path, point, gamma;
    std::int64_t max_den = 12;
    std::uint64_t seed = 7;
    int trials = 100, max_points = 8;
    bool fuzz = false;

    auto* analyze = app.add_subcommand("analyze", "dynamics and orbit structure");
    analyze->add_option("system", sys_path, "system file")->required();

    auto* primes = app.add_subcommand("primes", "prime ideal catalog");
    primes->add_option("system", sys_path, "system file")->required();
    primes->add_option("--max-denominator", max_den, "rational turn denominator bound");

    auto* admissible = app.add_subcommand("admissible", "check a fiber file");
    admissible->add_option("system", sys_path, "system file")->required();
    admissible->add_option("fibers", fib_path, "fiber file")->required();

    auto* witness = app.add_subcommand("witness", "build and verify a separating witness");
    witness->add_option("system", sys_path, "system file")->required();
    witness->add_option("fibers", fib_path, "fiber file")->required();
    witness->add_option("--point", point, "target point")->required();
    witness->add_option("--gamma", gamma, "target turn, exact fraction p/q")->required();

    auto* verify = app.add_subcommand("verify", "run the invariant suite");
    verify->add_flag("--fuzz", fuzz, "randomized systems (always on; flag kept for scripts)");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--trials", trials, "number of systems");
    verify->add_option("--max-points", max_points, "points per system bound");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return cmd_analyze(sys_path, as_json);
        if (*primes) return cmd_primes(sys_path, max_den, as_json);
        if (*admissible) return cmd_admissible(sys_path, fib_path, as_json);
        if (*witness) return cmd_witness(sys_path, fib_path, point, gamma, as_json);
        if (*verify) return cmd_verify(seed, trials, max_points, as_json);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitBadInput;
}
