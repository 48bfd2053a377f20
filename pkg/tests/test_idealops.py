"""Intersection, quotient, saturation, elimination, and linkage."""

import pytest

from scrollgeom.constructions import w_system
from scrollgeom.errors import NotContained, ZeroDivisorJ
from scrollgeom.field import PrimeFieldConfig
from scrollgeom.groebner import Ideal
from scrollgeom.hilbert import hilbert_polynomial, scheme_degree
from scrollgeom.idealops import (divide_exact, eliminate, image_ideal_graded,
                                 intersect, irrelevant, link, quotient,
                                 same_ideal, saturate, saturate_irrelevant)
from scrollgeom.poly import PolyRing, render_polynomial

P = 10009


def make_ring(n):
    return PolyRing(["x%d" % i for i in range(n)], PrimeFieldConfig(P))


def test_intersect_monomial_oracle():
    """Intersection of three coordinate line ideals: pure lcm combinatorics."""
    ring = make_ring(6)
    a = Ideal.from_strings(ring, ["x1", "x4"])
    b = Ideal.from_strings(ring, ["x2", "x5"])
    c = Ideal.from_strings(ring, ["x0", "x3"])
    got = intersect(intersect(a, b), c)
    expect = Ideal.from_strings(ring, [
        "%s*%s*%s" % (u, v, w)
        for u in ("x1", "x4") for v in ("x2", "x5") for w in ("x0", "x3")])
    assert same_ideal(got, expect)
    gb = got.groebner_basis()
    assert len(gb) == 8 and all(len(g.terms) == 1 for g in gb)


def test_intersect_with_zero_and_unit():
    ring = make_ring(3)
    I = Ideal.from_strings(ring, ["x0"])
    zero = Ideal(ring, [])
    assert same_ideal(intersect(I, zero), zero)
    unit = Ideal.from_strings(ring, ["1"])
    assert same_ideal(intersect(I, unit), I)


def test_divide_exact():
    ring = make_ring(3)
    f = ring.parse("x0^2 - x1*x2")
    g = ring.parse("3*x0 + x2")
    assert divide_exact(f * g, g) == f
    with pytest.raises(AssertionError):
        divide_exact(ring.parse("x0^2 + x1^2"), ring.parse("x0"))


def test_colon_by_polynomial():
    ring = make_ring(3)
    I = Ideal.from_strings(ring, ["x0^2", "x0*x1"])
    got = quotient(I, ring.parse("x0"))
    assert same_ideal(got, Ideal.from_strings(ring, ["x0", "x1"]))
    # colon by an element of I gives the unit ideal
    assert same_ideal(quotient(I, ring.parse("x0^2")),
                      Ideal.from_strings(ring, ["1"]))
    with pytest.raises(ZeroDivisorJ):
        quotient(I, ring.zero())


def test_quotient_by_zero_ideal_is_unit():
    ring = make_ring(3)
    I = Ideal.from_strings(ring, ["x0"])
    got = quotient(I, Ideal(ring, []))
    assert same_ideal(got, Ideal.from_strings(ring, ["1"]))


def test_certified_fast_quotient_matches_generator_loop():
    """The single-combination colon agrees with intersecting per-generator
    colons on a multi-generator homogeneous J."""
    ring = make_ring(4)
    I = Ideal.from_strings(ring, ["x0*x2 - x1^2", "x0*x3 - x1*x2",
                                  "x1*x3 - x2^2", "x0^2*x1 - x3^3"])
    J = Ideal.from_strings(ring, ["x0^2 - x1*x3", "x1^2 - x0*x2", "x2*x3"])
    fast = quotient(I, J)
    slow = None
    for g in J.generators:
        part = quotient(I, g)
        slow = part if slow is None else intersect(slow, part)
    assert same_ideal(fast, slow)


def test_quotient_inclusion_properties():
    ring = make_ring(4)
    I = Ideal.from_strings(ring, ["x0^2*x1", "x0*x2^2"])
    J = Ideal.from_strings(ring, ["x0"])
    Q = quotient(I, J)
    # I subset (I : J), and (I : J) * J subset I
    for g in I.generators:
        assert Q.contains(g)
    for a in Q.generators:
        for b in J.generators:
            assert I.contains(a * b)


def test_saturate_two_paths_agree():
    ring = make_ring(4)
    # the conic cone x1^2 - x0*x2 multiplied into the irrelevant ideal
    conic = ring.parse("x1^2 - x0*x2")
    I = Ideal(ring, [v * conic for v in ring.gens()])
    via_linear = saturate_irrelevant(I)
    via_quotient = saturate(I, irrelevant(ring))
    assert same_ideal(via_linear, via_quotient)
    assert same_ideal(via_linear,
                      Ideal.from_strings(ring, ["x1^2 - x0*x2"]))


def test_saturate_already_saturated_is_identity():
    ring = make_ring(4)
    I = Ideal.from_strings(ring, ["x0*x2 - x1^2"])
    assert same_ideal(saturate_irrelevant(I), I)


def test_eliminate_twisted_cubic():
    ring = make_ring(4)
    I = Ideal.from_strings(ring, ["x0*x2 - x1^2", "x0*x3 - x1*x2",
                                  "x1*x3 - x2^2"])
    E = eliminate(I, ["x3"])
    assert E.ring.names == ["x0", "x1", "x2"]
    assert [render_polynomial(g) for g in E.groebner_basis()] \
        == [render_polynomial(E.ring.parse("x1^2 - x0*x2").monic())]
    # eliminating by index builds a fresh ring but the same basis
    E2 = eliminate(I, [3])
    assert [render_polynomial(g) for g in E2.groebner_basis()] \
        == [render_polynomial(g) for g in E.groebner_basis()]


def test_image_ideal_graded_w5():
    forms = w_system(5)
    ker3 = image_ideal_graded(forms, 3)
    assert ker3.dim == 5
    assert image_ideal_graded(forms, 1).dim == 0


def test_link_twisted_cubic_to_line():
    """Residual of the twisted cubic in a (2,2) complete intersection is a
    line; degrees add up as 4 = 3 + 1."""
    ring = make_ring(4)
    I = Ideal.from_strings(ring, ["x0*x2 - x1^2", "x0*x3 - x1*x2",
                                  "x1*x3 - x2^2"])
    q1 = ring.parse("x0*x2 - x1^2")
    q2 = ring.parse("x1*x3 - x2^2")
    step = link([q1, q2], I)
    assert step.degree_check == (4, 3, 1)
    hp = hilbert_polynomial(step.residual)
    assert scheme_degree(hp) == 1
    # linking back recovers the original curve
    back = link([q1, q2], step.residual)
    assert same_ideal(back.residual, saturate_irrelevant(I))


def test_link_requires_containment():
    ring = make_ring(4)
    I = Ideal.from_strings(ring, ["x0*x2 - x1^2", "x0*x3 - x1*x2",
                                  "x1*x3 - x2^2"])
    with pytest.raises(NotContained):
        link([ring.parse("x0^2"), ring.parse("x1^2")], I)
