"""Smoke tests for the _sgds extension module."""

import math

import _sgds as sgds


def make_tail3():
    return sgds.SgdsMap(
        ["t", "a", "b", "c"],
        [("t", "a"), ("a", "b"), ("b", "c"), ("c", "a")],
    )


def test_dynamics():
    sys = make_tail3()
    d = sgds.dynamics(sys, sys.index("t"))
    assert d.tail == 1 and d.period == 3

    line = sgds.SgdsMap(["x1", "x2"], [("x1", "x2")])
    d = sgds.dynamics(line, 0)
    assert d.period is None and d.tail is None


def test_invariant_sets_and_primes():
    sys = make_tail3()
    inv = sgds.invariant_sets(sys)
    assert len(inv) == 2  # one orbit class

    catalog = sgds.prime_catalog(sys, 6)
    turns = {str(k.turn) for k, _ in catalog}
    assert "0/1" in turns and "1/6" in turns
    assert all(k.variant == sgds.PrimeKey.Variant.CyclePoint for k, _ in catalog)


def test_circle_sets():
    coset = sgds.CircleSet.point(sgds.Turn(0, 1)).zeta_saturate(3)
    assert coset.contains(sgds.Turn(2, 3))
    assert not coset.contains(sgds.Turn(1, 2))
    assert coset.is_rotation_invariant(3)
    assert sgds.CircleSet.parse(str(coset)) == coset


def test_representation():
    sys = make_tail3()
    b = sgds.RepBundle(sys, sys.index("a"), complex(1.0), 1)
    r = sgds.check_defining_relations(b, 10)
    assert r.max_residual <= 1e-10
    t1 = b.rep_tn(1, [1.0 + 0j] * sys.size())
    eig = sorted(abs(z) for z in sgds.spectrum(t1))
    # three unit eigenvalues from the cycle, one zero from the tail
    assert eig[0] <= 1e-8 and all(abs(e - 1) <= 1e-8 for e in eig[1:])


def test_witness_round_trip():
    sys = make_tail3()
    coset = sgds.CircleSet.point(sgds.Turn(0, 1)).zeta_saturate(3)
    fam = sgds.AdmissibleFamily()
    fam.fibers = [coset] * sys.size()
    assert sgds.is_admissible(sys, fam).admissible

    gamma = sgds.Turn(1, 6)
    prog = sgds.build_witness(sys, fam, sys.index("a"), gamma)
    report = sgds.verify_witness(sys, prog, fam, sys.index("a"), gamma)
    assert report.pass_
    assert report.target_norm >= report.target_bound > 0
    assert report.max_y_norm <= report.tolerance


def test_io_round_trip():
    text = "point p\nmap p p\n"
    sys = sgds.parse_system(text)
    assert sgds.serialize_system(sys) == text


def test_fuzz():
    r = sgds.fuzz_suite(seed=3, trials=30, max_points=6)
    assert r["disagreements"] == 0
