#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sgds/io.hpp"
#include "sgds/oracle.hpp"
#include "sgds/witness.hpp"

namespace py = pybind11;
using namespace sgds;

PYBIND11_MODULE(_sgds, m) {
    m.doc() = "ideal structure of C*-algebras of finite singly generated "
              "dynamical systems";

    py::class_<Turn>(m, "Turn")
        .def(py::init<std::int64_t, std::int64_t>(), py::arg("num"), py::arg("den"))
        .def_readonly("num", &Turn::num)
        .def_readonly("den", &Turn::den)
        .def("value", &Turn::value)
        .def("unit", &Turn::unit)
        .def("__str__", &Turn::str)
        .def("__repr__", [](const Turn& t) { return "Turn(" + t.str() + ")"; })
        .def("__eq__", [](const Turn& a, const Turn& b) { return a == b; })
        .def("__add__", [](const Turn& a, const Turn& b) { return a + b; })
        .def("__sub__", [](const Turn& a, const Turn& b) { return a - b; })
        .def_static("parse", &Turn::parse);

    py::class_<Arc>(m, "Arc")
        .def(py::init([](const Turn& lo, const Turn& hi) { return Arc{lo, hi}; }))
        .def_readonly("lo", &Arc::lo)
        .def_readonly("hi", &Arc::hi);

    py::class_<CircleSet>(m, "CircleSet")
        .def_static("empty", &CircleSet::empty)
        .def_static("full", &CircleSet::full)
        .def_static("finite", &CircleSet::finite)
        .def_static("point", &CircleSet::point)
        .def_static("arc", &CircleSet::arc)
        .def_static("parse", &CircleSet::parse)
        .def("is_empty", &CircleSet::is_empty)
        .def("is_full", &CircleSet::is_full)
        .def("is_finite_points", &CircleSet::is_finite_points)
        .def("points", &CircleSet::points)
        .def("arcs", &CircleSet::arcs)
        .def("contains", &CircleSet::contains)
        .def("rotate", &CircleSet::rotate)
        .def("is_rotation_invariant", &CircleSet::is_rotation_invariant)
        .def("zeta_saturate", &CircleSet::zeta_saturate)
        .def("__eq__", [](const CircleSet& a, const CircleSet& b) { return a == b; })
        .def("__str__", &CircleSet::str);
    m.def("set_union", &set_union);
    m.def("set_intersect", &set_intersect);
    m.def("set_subset", &set_subset);

    py::class_<SgdsMap>(m, "SgdsMap")
        .def(py::init<std::vector<std::string>,
                      std::vector<std::pair<std::string, std::string>>>(),
             py::arg("points"), py::arg("successor"))
        .def("size", &SgdsMap::size)
        .def("names", &SgdsMap::names)
        .def("index", &SgdsMap::index)
        .def("in_domain", &SgdsMap::in_domain)
        .def("step", &SgdsMap::step)
        .def("iterate", &SgdsMap::iterate)
        .def("preimages", &SgdsMap::preimages);

    py::class_<PointDynamics>(m, "PointDynamics")
        .def_readonly("point", &PointDynamics::point)
        .def_readonly("period", &PointDynamics::period)
        .def_readonly("tail", &PointDynamics::tail)
        .def_readonly("eventual_cycle", &PointDynamics::eventual_cycle);

    py::class_<OrbitClass>(m, "OrbitClass")
        .def_readonly("members", &OrbitClass::members)
        .def_readonly("period", &OrbitClass::period);

    py::class_<OrbitPartition>(m, "OrbitPartition")
        .def_readonly("classes", &OrbitPartition::classes)
        .def_readonly("class_of", &OrbitPartition::class_of);

    m.def("dynamics", py::overload_cast<const SgdsMap&, int>(&dynamics));
    m.def("orbit", &orbit);
    m.def("orbit_partition", &orbit_partition);
    m.def("per_points", &per_points);
    m.def("is_invariant", &is_invariant);
    m.def("invariant_sets", &invariant_sets, py::arg("sys"), py::arg("max_points") = 20);
    m.def("is_irreducible", &is_irreducible);
    m.def("a_sets", &a_sets);
    m.def("is_essentially_free", &is_essentially_free);
    m.def("restrict", &sgds::restrict);

    py::class_<AdmissibleFamily>(m, "AdmissibleFamily")
        .def(py::init<>())
        .def_readwrite("fibers", &AdmissibleFamily::fibers)
        .def("fiber", &AdmissibleFamily::fiber);
    py::class_<AdmissibilityReport>(m, "AdmissibilityReport")
        .def_readonly("admissible", &AdmissibilityReport::admissible)
        .def_readonly("clause", &AdmissibilityReport::clause)
        .def_readonly("point", &AdmissibilityReport::point)
        .def_readonly("message", &AdmissibilityReport::message);
    py::class_<PrimeKey> pk(m, "PrimeKey");
    py::enum_<PrimeKey::Variant>(pk, "Variant")
        .value("AperiodicGauge", PrimeKey::Variant::AperiodicGauge)
        .value("CyclePoint", PrimeKey::Variant::CyclePoint);
    pk.def_readonly("variant", &PrimeKey::variant)
        .def_readonly("class_id", &PrimeKey::class_id)
        .def_readonly("turn", &PrimeKey::turn);

    m.def("is_admissible", &is_admissible);
    m.def("from_invariant_set", &from_invariant_set);
    m.def("support", &support);
    m.def("meet", &meet);
    m.def("join", &join);
    m.def("leq", &leq);
    m.def("prime_catalog", &prime_catalog, py::arg("sys"),
          py::arg("max_denominator") = 12);
    m.def("canonical_prime_key", &canonical_prime_key);
    m.def("admissible_closure", &admissible_closure);
    m.def("rational_turns_below", &rational_turns_below);

    py::class_<RepBundle>(m, "RepBundle")
        .def(py::init<const SgdsMap&, int, Cplx, int>(), py::arg("sys"), py::arg("x0"),
             py::arg("gamma"), py::arg("level") = 1)
        .def("dim", &RepBundle::dim)
        .def("orbit", &RepBundle::orbit)
        .def("rep_t0", &RepBundle::rep_t0)
        .def("rep_tn", &RepBundle::rep_tn);
    py::class_<RelationReport>(m, "RelationReport")
        .def_readonly("max_residual", &RelationReport::max_residual)
        .def_readonly("samples", &RelationReport::samples);
    m.def("check_defining_relations", &check_defining_relations, py::arg("bundle"),
          py::arg("samples"), py::arg("seed") = 1);
    m.def("spectrum", &spectrum);
    m.def("irreducibility_span", &irreducibility_span);
    m.def("operator_norm", &operator_norm);

    py::class_<WitnessProgram>(m, "WitnessProgram");
    py::class_<WitnessReport>(m, "WitnessReport")
        .def_readonly("pass_", &WitnessReport::pass)
        .def_readonly("target_norm", &WitnessReport::target_norm)
        .def_readonly("target_bound", &WitnessReport::target_bound)
        .def_readonly("max_y_norm", &WitnessReport::max_y_norm)
        .def_readonly("tolerance", &WitnessReport::tolerance)
        .def_readonly("sampled_reps", &WitnessReport::sampled_reps)
        .def_readonly("detail", &WitnessReport::detail);
    m.def("build_witness", &build_witness);
    m.def("verify_witness", &verify_witness, py::arg("sys"), py::arg("program"),
          py::arg("y"), py::arg("x0"), py::arg("gamma0"),
          py::arg("sample_denominator_bound") = 12);

    m.def("parse_system", &parse_system);
    m.def("serialize_system", &serialize_system);
    m.def("parse_fibers", &parse_fibers);
    m.def("serialize_fibers", &serialize_fibers);

    m.def("fuzz_suite", [](std::uint64_t seed, int trials, int max_points) {
        oracle::FuzzConfig cfg;
        cfg.seed = seed;
        cfg.trials = trials;
        cfg.max_points = max_points;
        oracle::FuzzReport r = oracle::fuzz_suite(cfg);
        py::dict d;
        d["trials"] = r.trials;
        d["disagreements"] = r.disagreements;
        d["first_failure"] = r.first_failure;
        return d;
    }, py::arg("seed") = 1, py::arg("trials") = 100, py::arg("max_points") = 8);
}
