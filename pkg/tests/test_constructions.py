"""Polarization table, Del Pezzo images, scrolls, the union, the pipeline."""

import itertools

import numpy as np
import pytest

from scrollgeom.constructions import (PolarizationRow, bilink_pipeline,
                                      del_pezzo, elliptic_scroll,
                                      enumerate_polarizations, family_planes_in,
                                      general_w_system, scroll_meets_segre,
                                      scroll_singularity_check, scroll_union,
                                      segre_curve_decomposition, standard_ring,
                                      w_system)
from scrollgeom.errors import DegenerateParameter
from scrollgeom.groebner import graded_piece
from scrollgeom.heisenberg import line_orbit, line_restriction
from scrollgeom.linalg import rank

P = 10009


def test_polarization_rows():
    rows = enumerate_polarizations()
    assert len(rows) == 6
    tuples = [r.as_tuple() for r in rows]
    assert (12, 3, 1, 2, 0, 6) in tuples
    assert tuples == [
        (10, 1, 2, 1, 1, 2),
        (10, 4, 1, 2, -1, 7),
        (12, 3, 1, 2, 0, 6),
        (14, 2, 1, 2, 1, 5),
        (16, 1, 1, 2, 2, 4),
        (18, None, 0, 3, 3, None),
    ]
    for r in rows:
        if r.l is None:
            continue
        assert r.b + r.l * r.c == 3
        assert r.a + r.c == 3
        assert r.d == 2 * (9 - r.l * r.c * r.c)
        assert r.H_dot_Gamma == r.a * r.l + r.b >= 2
    d = rows[2].to_json_dict()
    assert d["d"] == 12 and d["l"] == 3


def test_polarization_row_validation():
    with pytest.raises(AssertionError):
        PolarizationRow(10, 1, 2, 1, 2, 2)  # b + l*c != 3


def test_w_systems_are_bases():
    for t in (5, 6, 7, 8):
        V = w_system(t)
        assert len(V) == 6
        ring = V[0].ring
        assert rank(ring.basis_matrix(V, 2), P) == 6
        W = general_w_system(t, seed=3)
        assert rank(ring.basis_matrix(W, 2), P) == 6


def test_del_pezzo_reports(del_pezzos):
    expect_gens = {5: {3: 5}, 6: {3: 1, 4: 7}, 7: {4: 5, 5: 5}}
    expect_bp = {5: 3, 6: 2, 7: 1, 8: 0}
    for t, scheme in del_pezzos.items():
        assert scheme.label == "W%d" % t
        rep = scheme.report
        assert (rep.dim, rep.degree) == (3, t)
        assert scheme.basepoints == expect_bp[t]
        if t in expect_gens:
            assert rep.gen_degrees == expect_gens[t]
        else:
            assert rep.gen_degrees[4] == 1 and rep.gen_degrees[5] == 10
            assert rep.gen_degrees.get(6, 0) >= 1
        payload = scheme.to_json_dict()
        assert payload["label"] == scheme.label
        assert payload["basepoints"] == expect_bp[t]


def test_del_pezzo_rejects_bad_index():
    with pytest.raises(ValueError):
        del_pezzo(4)


def test_scroll_invariants(scroll):
    rep = scroll.report
    assert (rep.dim, rep.degree, rep.sectional_genus) == (3, 6, 1)
    assert rep.gen_degrees == {3: 2, 4: 3}
    ring = scroll.ideal.ring
    for n in range(1, 7):
        assert rep.hf[n] == n * (n + 1) * (n + 2) - 3 * (n - 1)
    assert scroll.preset == 1 and scroll.coords == (0, 1, 0, 1)
    assert len(scroll.cubics) == 2
    for f in scroll.cubics:
        assert scroll.ideal.contains(f)
    assert graded_piece(scroll.ideal, 3).dim == 2
    assert graded_piece(scroll.ideal, 5).dim == 54


def test_scroll_singular_along_orbit(scroll):
    ring = scroll.ideal.ring
    orbit = line_orbit(scroll.preset, ring)
    check = scroll_singularity_check(scroll, orbit)
    assert check["ok"] and not check["failing"]
    assert len(check["lines"]) == 3 and check["lines_span_p5"]
    for entry in check["lines"]:
        assert entry["on_scroll"] and entry["singular"]


def test_degenerate_parameters_warn():
    with pytest.warns(DegenerateParameter):
        elliptic_scroll((0, 0, 0, 1))
    with pytest.warns(DegenerateParameter):
        elliptic_scroll((1, -3, 0, 0))


def test_invalid_pencil_coords_rejected():
    # neither a=c=0 nor 3a+b=c+d=0
    with pytest.raises(ValueError):
        elliptic_scroll((1, 1, 1, 1))


def test_segre_curve_bookkeeping(scroll):
    rep = scroll_meets_segre(scroll)
    assert rep.dim == 1
    dec = segre_curve_decomposition(scroll)
    assert dec["proper"]
    assert dec["cycle_degree"] == 18
    assert dec["scheme_degree"] == 21
    assert dec["lines_contained"]
    assert dec["line_lengths"] == [3, 3, 3]
    assert dec["residual_degree"] == 12
    assert dec["cycle_checks"]


def test_union_structure(union_y):
    assert union_y.label == "Y"
    rep = union_y.report
    assert (rep.dim, rep.degree) == (3, 12)
    assert graded_piece(union_y.ideal, 4).dim == 0
    assert graded_piece(union_y.ideal, 5).dim == 6
    p1, p2 = union_y.parts
    assert {p1.preset, p2.preset} == {1, 2}
    for part in (p1, p2):
        assert (part.report.dim, part.report.degree) == (3, 6)
        for f in union_y.ideal.generators:
            assert part.ideal.contains(f)


def test_union_requires_distinct_presets():
    with pytest.raises(AssertionError):
        scroll_union((0, 1, 0, 1), (0, 2, 0, 1))


def test_six_lines_singular_on_every_quintic(union_y):
    """Each quintic through the union is singular along all six orbit lines
    of the two pencil presets."""
    ring = union_y.ideal.ring
    spans = []
    for part in union_y.parts:
        spans.extend(line_orbit(part.preset, ring).spans)
    assert len(spans) == 6
    quintics = graded_piece(union_y.ideal, 5)
    basis = [ring.from_vec(v, 5) for v in quintics.matrix]
    assert len(basis) == 6
    for f in basis:
        for span in spans:
            for i in range(6):
                assert line_restriction(f.partial(i), span).is_zero()


def test_pipeline_numbers(pipeline0):
    assert pipeline0.integer_summary() == {
        "quintic_dim": 6,
        "z_degree": 13,
        "quartic_dim_of_Z": 1,
        "w_degree": 7,
        "w_genus": 1,
        "w_quartics": 5,
        "linear_syzygies": 4,
        "quartic_ideal_degree": 10,
        "quartic_ideal_genus": 11,
    }
    assert pipeline0.syzygy_counts == {"quartics_through_W": 5,
                                       "linear_syzygies": 4}
    z_deg = pipeline0.steps[0].degree_check
    w_deg = pipeline0.steps[1].degree_check
    # first link inside a (5,5) complete intersection, second inside (4,5)
    assert z_deg == (25, 12, 13)
    assert w_deg == (20, 13, 7)
    payload = pipeline0.to_json_dict()
    assert payload["quintic_dim"] == 6 and payload["seed"] == 0


def test_pipeline_first_residual_contains_scroll_planes(pipeline0):
    Z = pipeline0.steps[0].residual
    hits = family_planes_in(Z)
    assert hits
    for alpha, beta, label in hits:
        assert label in ("P0", "P1", "Q0", "Q1")
        assert (alpha, beta) != (0, 0)


def test_smooth_parameter_union_has_no_quintics():
    """For generic parameter pairs the union is cut only in degree 6 and up;
    the pipeline's quintic entry point does not exist."""
    y2 = scroll_union((0, 1, 0, 1), (1, -3, 1, -1))
    assert (y2.report.dim, y2.report.degree) == (3, 12)
    assert graded_piece(y2.ideal, 5).dim == 0
