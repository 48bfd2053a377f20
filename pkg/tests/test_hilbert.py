"""Hilbert functions, Hilbert polynomials, and scheme reports."""

from fractions import Fraction

from scrollgeom.field import PrimeFieldConfig
from scrollgeom.groebner import Ideal
from scrollgeom.heisenberg import segre_scroll_ideal
from scrollgeom.hilbert import (hilbert_function, hilbert_function_series,
                                hilbert_polynomial, projective_dimension,
                                scheme_degree, scheme_report)
from scrollgeom.poly import PolyRing

P = 10009


def make_ring(n):
    return PolyRing(["x%d" % i for i in range(n)], PrimeFieldConfig(P))


def test_hilbert_function_free_ring():
    ring = make_ring(4)
    empty = Ideal(ring, [])
    for d in range(5):
        assert hilbert_function(empty, d) == ring.dim_degree(d)
    hp = hilbert_polynomial(empty)
    assert projective_dimension(hp) == 3
    assert scheme_degree(hp) == 1


def test_hypersurface():
    ring = make_ring(4)
    I = Ideal.from_strings(ring, ["x0^3 + x1^3 + x2^3 + x3^3"])
    hp = hilbert_polynomial(I)
    assert projective_dimension(hp) == 2
    assert scheme_degree(hp) == 3


def test_twisted_cubic():
    ring = make_ring(4)
    I = Ideal.from_strings(ring, ["x0*x2 - x1^2", "x0*x3 - x1*x2",
                                  "x1*x3 - x2^2"])
    hp = hilbert_polynomial(I)
    assert hp == [Fraction(1), Fraction(3)]
    assert projective_dimension(hp) == 1
    assert scheme_degree(hp) == 3


def test_zero_dimensional_scheme():
    ring = make_ring(3)
    # three coordinate points of the plane
    I = Ideal.from_strings(ring, ["x0*x1", "x0*x2", "x1*x2"])
    hp = hilbert_polynomial(I)
    assert projective_dimension(hp) == 0
    assert scheme_degree(hp) == 3


def test_unit_ideal_empty_scheme():
    ring = make_ring(3)
    I = Ideal.from_strings(ring, ["x0", "x1", "x2"])
    assert hilbert_polynomial(I) == []
    assert projective_dimension([]) == -1
    assert scheme_degree([]) == 0


def test_two_hf_paths_agree():
    """Series evaluation equals the direct graded-piece count."""
    six = make_ring(6)
    ideals = [
        segre_scroll_ideal(six),
        Ideal.from_strings(six, ["x0*x1 - x2^2", "x3^2 - x4*x5"]),
        Ideal.from_strings(six, ["x0^2", "x0*x1^2", "x2^3 - x3^3"]),
    ]
    for I in ideals:
        for d in range(7):
            assert hilbert_function(I, d) == hilbert_function_series(I, d)


def test_scheme_report_segre():
    six = make_ring(6)
    rep = scheme_report(segre_scroll_ideal(six), seed=0)
    assert (rep.dim, rep.degree, rep.sectional_genus) == (3, 3, 0)
    assert rep.gen_degrees == {2: 3}
    assert rep.hf[2] == 21 - 3
    d = rep.to_json_dict()
    assert d["dim"] == 3 and d["hf"]["2"] == 18
    assert d["gen_degrees"] == {"2": 3}


def test_scheme_report_curve_has_no_genus_field():
    ring = make_ring(4)
    I = Ideal.from_strings(ring, ["x0*x2 - x1^2", "x0*x3 - x1*x2",
                                  "x1*x3 - x2^2"])
    rep = scheme_report(I, seed=0)
    assert (rep.dim, rep.degree) == (1, 3)
    assert rep.sectional_genus is None
