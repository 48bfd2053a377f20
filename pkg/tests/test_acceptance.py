"""Acceptance suite: the eleven headline claims, one test and one ledger
line per claim.  Every comparison is exact integer equality."""

import conftest

from scrollgeom.claims import CLAIMS, run_claim
from scrollgeom.cli import RunConfig
from scrollgeom.constructions import (UNION_COORDS, bilink_pipeline,
                                      scroll_union)

CFG = RunConfig()
BY_ID = {c.id: c for c in CLAIMS}

PIPELINE_INTEGERS = ("quintic_dim", "z_degree", "quartic_dim_of_Z",
                     "w_degree", "w_genus", "w_quartics", "linear_syzygies",
                     "quartic_ideal_degree", "quartic_ideal_genus")


def run_criterion(num, cid):
    res = run_claim(BY_ID[cid], CFG)
    mark = "PASS" if res.ok else "FAIL"
    conftest.ACCEPTANCE_LINES.append(
        "[%s] criterion %2d  %-22s %6.1fs" % (mark, num, cid, res.seconds))
    assert res.ok, "criterion %d (%s) failed, ledger=%s" % (num, cid, res.ledger)
    return res


def test_criterion_01_polarization_table():
    res = run_criterion(1, "table1-rows")
    assert len(res.ledger) == 6
    assert res.ledger["row2"] == [12, 3, 1, 2, 0, 6]
    assert res.ledger["row5"] == [18, -1, 0, 3, 3, -1]


def test_criterion_02_rank_strata_and_base_loci():
    res = run_criterion(2, "table2-strata")
    expect = {5: (3, 1), 6: (2, 3), 7: (1, 6), 8: (0, 10)}
    for t, (r1, r2) in expect.items():
        for s in (0, 1):
            row = res.ledger["general_t%d_s%d" % (t, s)]
            assert row == [r1, r2, r1]


def test_criterion_03_image_generator_degrees():
    res = run_criterion(3, "table3-generators")
    assert res.ledger["t5_gens"] == [(3, 5)]
    assert res.ledger["t6_gens"] == [(3, 1), (4, 7)]
    assert res.ledger["t7_gens"] == [(4, 5), (5, 5)]
    t8 = dict(res.ledger["t8_gens"])
    assert t8[4] == 1 and t8[5] == 10 and t8.get(6, 0) >= 1


def test_criterion_04_image_graded_dimensions():
    res = run_criterion(4, "table4-h0")
    assert res.ledger == {"t5_d3": 5, "t6_d3": 1, "t6_d4": 13,
                          "t7_d4": 5, "t7_d5": 31, "t8_d4": 1, "t8_d5": 16}


def test_criterion_05_scroll_invariants():
    res = run_criterion(5, "scroll-invariants")
    assert res.ledger["degree"] == 6
    assert res.ledger["sectional_genus"] == 1
    assert res.ledger["dim_I3"] == 2
    assert res.ledger["dim_I5"] == 54
    assert res.ledger["hf_formula"] == 1
    assert res.ledger["singular_lines_ok"] == 1


def test_criterion_06_pencil_vanishing_grid():
    res = run_criterion(6, "pencil-vanishing-grid")
    assert res.ledger == {"grid_points": 25, "vanishing_points": 1}


def test_criterion_07_pencil_decomposition():
    res = run_criterion(7, "pencil-decomposition")
    assert res.ledger == {"pencils": 4, "stable": 1, "span_dim": 8,
                          "fixed_cubics_dim": 4}


def test_criterion_08_segre_scroll_and_plane_family():
    res = run_criterion(8, "segre-scroll")
    assert (res.ledger["dim"], res.ledger["degree"]) == (3, 3)
    assert res.ledger["lines_on_scroll"] == 12
    assert res.ledger["unit_pairs"] == 2
    assert res.ledger["imag_pairs"] == 2
    assert res.ledger["generic_pairs"] == 0
    assert res.ledger["generic_orbit"] == 4


def test_criterion_09_scroll_segre_curve():
    res = run_criterion(9, "scroll-segre-curve")
    assert res.ledger["dim"] == 1
    assert res.ledger["cycle_degree"] == 18
    assert res.ledger["lines_contained"] == 1
    assert res.ledger["residual_degree"] == 12
    assert res.ledger["scheme_degree"] == 21
    assert res.ledger["line_lengths"] == [3, 3, 3]


def test_criterion_10_bilinkage_pipeline():
    res = run_criterion(10, "bilink-pipeline")
    assert res.ledger["y_degree"] == 12
    assert res.ledger["y_quintics"] == 6
    assert res.ledger["y_quartics"] == 0
    assert res.ledger["seed_stable"] == 1
    assert res.ledger["planes_in_Z"] >= 1
    want = {"quintic_dim": 6, "z_degree": 13, "quartic_dim_of_Z": 1,
            "w_degree": 7, "w_genus": 1, "w_quartics": 5,
            "linear_syzygies": 4, "quartic_ideal_degree": 10,
            "quartic_ideal_genus": 11}
    assert {k: res.ledger[k] for k in PIPELINE_INTEGERS} == want


def test_criterion_10b_pipeline_integers_prime_independent():
    """The same nine integers come out over the second supported field."""
    p2 = CFG.secondary_prime
    c1 = tuple(v % p2 for v in UNION_COORDS[0])
    Y = scroll_union(c1, UNION_COORDS[1], p=p2, seed=CFG.seed)
    pr = bilink_pipeline(Y, seed=CFG.seed)
    got = pr.integer_summary()
    want = {"quintic_dim": 6, "z_degree": 13, "quartic_dim_of_Z": 1,
            "w_degree": 7, "w_genus": 1, "w_quartics": 5,
            "linear_syzygies": 4, "quartic_ideal_degree": 10,
            "quartic_ideal_genus": 11}
    mark = "PASS" if got == want else "FAIL"
    conftest.ACCEPTANCE_LINES.append(
        "[%s] criterion 10b bilink integers at p=%d" % (mark, p2))
    assert got == want


def test_criterion_11_property_suites():
    res = run_criterion(11, "property-suites")
    assert res.ledger["bases_checked"] == 5
    for key in ("buchberger_ok", "linkage_ok", "field_ok", "order_ok",
                "hf_two_path_ok"):
        assert res.ledger[key] == 1, "property block %s failed" % key
