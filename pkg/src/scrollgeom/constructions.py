"""Named geometry: polarization table, Del Pezzo images, elliptic scrolls by
linkage, the degree-12 union, and the quintic/quartic bilinkage pipeline."""

import random
import warnings

import numpy as np

from . import linalg
from .errors import DegenerateParameter, RetryExhausted
from .groebner import Ideal, GradedBasis, graded_piece, linear_multiples
from .heisenberg import (PencilCoords, cubic_pencil, line_orbit, three_p3s,
                         line_restriction, segre_scroll_ideal)
from .hilbert import (hilbert_polynomial, projective_dimension, scheme_degree,
                      scheme_report)
from .idealops import ImageMap, intersect, link, quotient, saturate, \
    saturate_irrelevant
from .poly import PolyRing

DEFAULT_PRIME = 10009
SECONDARY_PRIME = 31957
PIPELINE_RETRIES = 5

# pencil coordinates of the two special scrolls whose union starts the
# bilinkage run; one point on each of the two scroll pencil lines
UNION_COORDS = ((1, -3, 0, 0), (0, 0, 0, 1))

_ring_cache = {}


def standard_ring(p=DEFAULT_PRIME):
    """The shared six-variable ring x0..x5 over GF(p)."""
    got = _ring_cache.get(("P5", p))
    if got is None:
        got = PolyRing(["x%d" % i for i in range(6)], p)
        _ring_cache[("P5", p)] = got
    return got


def source_ring(p=DEFAULT_PRIME):
    """The four-variable ring x0..x3 over GF(p)."""
    got = _ring_cache.get(("P3", p))
    if got is None:
        got = PolyRing(["x%d" % i for i in range(4)], p)
        _ring_cache[("P3", p)] = got
    return got


W_SYSTEMS = {
    5: ["x1*x2+x0*x3", "x3^2+x2*x0", "x3^2+x1*x0", "x3^2+x2*x1",
        "x0*x1+x2*x3", "x0*x2+x1*x3"],
    6: ["x0^2+x1*x2", "x1^2+x2*x3", "x3*x0", "x0*x1",
        "x0*x1+x2*x3", "x0*x2+x1*x3"],
    7: ["x0^2+x1*x2", "x1^2+x2*x3", "x2^2+x3*x0", "x0*x1",
        "x0*x1+x2*x3", "x0*x2+x1*x3"],
    8: ["x0^2+x1*x2", "x1^2+x2*x3", "x2^2+x3*x0", "x3^2+x0*x1",
        "x0*x1+x2*x3", "x0*x2+x1*x3"],
}


def w_system(t, ring=None):
    """The fixed six-quadric system with 8-t basepoints."""
    if t not in W_SYSTEMS:
        raise ValueError("t must be one of 5..8, got %r" % (t,))
    ring = ring or source_ring()
    return [ring.parse(s) for s in W_SYSTEMS[t]]


def general_w_system(t, ring=None, seed=0):
    """A seeded-random 6-dim system of quadrics through 8-t random points."""
    ring = ring or source_ring()
    p = ring.p
    k = 8 - t
    rng = random.Random(777000 + 31 * seed + t)
    monos = [ring.from_terms({m: 1}) for m in ring.monomials(2)]
    while True:
        pts = [[rng.randrange(1, p) for _ in range(4)] for _ in range(k)]
        if k >= 2 and linalg.rank(np.array(pts, dtype=np.int64), p) < min(k, 4):
            continue
        if k:
            A = np.array([[m.evaluate(q) for m in monos] for q in pts],
                         dtype=np.int64)
            ker = linalg.nullspace(A, p)
            if ker.shape[0] != 10 - k:
                continue
        else:
            ker = np.eye(10, dtype=np.int64)
        C = np.array([[rng.randrange(p) for _ in range(ker.shape[0])]
                      for _ in range(6)], dtype=np.int64)
        B = C @ ker % p
        if linalg.rank(B, p) != 6:
            continue
        return [ring.from_vec(v, 2) for v in B]


class PolarizationRow:
    """One (1,6)-polarization type: degree and curve-class intersection data."""

    __slots__ = ("d", "l", "c", "a", "b", "H_dot_Gamma")

    def __init__(self, d, l, c, a, b, H_dot_Gamma):
        self.d = d
        self.l = l
        self.c = c
        self.a = a
        self.b = b
        self.H_dot_Gamma = H_dot_Gamma
        if l is not None:
            assert b + l * c == 3 and a + c == 3
            assert d == 2 * (9 - l * c * c)
            assert H_dot_Gamma == a * l + b and H_dot_Gamma >= 2
        else:
            assert c == 0 and a == 3 and b == 3 and d == 18

    def as_tuple(self):
        return (self.d, self.l, self.c, self.a, self.b, self.H_dot_Gamma)

    def to_json_dict(self):
        return {"d": self.d, "l": self.l, "c": self.c, "a": self.a,
                "b": self.b, "H_dot_Gamma": self.H_dot_Gamma}

    def __repr__(self):
        return "PolarizationRow%s" % (self.as_tuple(),)


def enumerate_polarizations():
    """All embedding types with very ample H: five (l,c) solutions plus c=0."""
    rows = []
    for c in range(1, 3):
        for l in range(1, 10):
            d = 2 * (9 - l * c * c)
            if d < 10:
                continue
            b = 3 - l * c
            a = 3 - c
            hg = a * l + b
            if hg < 2:
                continue
            rows.append(PolarizationRow(d, l, c, a, b, hg))
    rows.append(PolarizationRow(18, None, 0, 3, 3, None))
    rows.sort(key=lambda r: (r.d, r.l if r.l is not None else 99))
    return rows


class NamedScheme:
    """A labelled ideal with its computed report and construction context."""

    __slots__ = ("label", "ideal", "report", "basepoints", "cubics", "coords",
                 "preset", "parts")

    def __init__(self, label, ideal, report, basepoints=None, cubics=None,
                 coords=None, preset=None, parts=None):
        self.label = label
        self.ideal = ideal
        self.report = report
        self.basepoints = basepoints
        self.cubics = cubics
        self.coords = coords
        self.preset = preset
        self.parts = parts

    def to_json_dict(self):
        out = {"label": self.label, "report": self.report.to_json_dict()}
        if self.basepoints is not None:
            out["basepoints"] = self.basepoints
        return out

    def __repr__(self):
        return "NamedScheme(%s, %r)" % (self.label, self.report)


def del_pezzo(t, p=DEFAULT_PRIME, seed=0):
    """Image of P3 under the t-th quadric system, with ideal up to degree 6."""
    s_ring = source_ring(p)
    t_ring = standard_ring(p)
    forms = w_system(t, s_ring)
    fmap = ImageMap(forms, t_ring)
    gens = []
    for d in range(2, 7):
        gens.extend(fmap.graded_kernel(d).basis)
    ideal = Ideal(t_ring, gens)
    from .apolarity import base_locus
    bl = base_locus(forms)
    report = scheme_report(ideal, seed=seed)
    return NamedScheme("W%d" % t, ideal, report, basepoints=bl.degree)


def _pencil_preset(coords, p):
    a, b, c, d = (v % p for v in coords)
    if a == 0 and c == 0:
        return 1
    if (3 * a + b) % p == 0 and (c + d) % p == 0:
        return 2
    raise ValueError("coords %r lie on neither scroll pencil line" % (coords,))


def _normalized_coords(coords, p):
    vals = [v % p for v in coords]
    lead = next(v for v in vals if v)
    inv = pow(lead, -1, p)
    return tuple(v * inv % p for v in vals)


def _degenerate_coords(coords, p):
    a, b, c, d = (v % p for v in coords)
    if c == 0 and d == 0:
        # Hesse pencil member a*(sum of cubes) + b*(product): a triangle of
        # planes exactly when a = 0 or b^3 = -27 a^3
        if a == 0 or (pow(b, 3, p) + 27 * pow(a, 3, p)) % p == 0:
            return True
    norm = _normalized_coords(coords, p)
    return norm in ((0, 0, 0, 1), (0, 1, 0, 0))


def elliptic_scroll(coords, p=DEFAULT_PRIME, seed=0):
    """Degree-6 scroll linked (3,3) to three 3-spaces inside a cubic pencil."""
    if not isinstance(coords, PencilCoords):
        coords = PencilCoords(*coords)
    ring = standard_ring(p)
    preset = _pencil_preset(coords, p)
    if _degenerate_coords(coords, p):
        warnings.warn("scroll parameter %r gives a reducible scroll" % (coords,),
                      DegenerateParameter, stacklevel=2)
    f1, f2 = cubic_pencil(coords, ring)
    planes3 = three_p3s(preset, ring)
    step = link((f1, f2), planes3)
    report = scheme_report(step.residual, seed=seed)
    return NamedScheme("X_scroll", step.residual, report, cubics=(f1, f2),
                       coords=tuple(coords), preset=preset)


def scroll_singularity_check(scroll, orbit):
    """Containment and gradient vanishing of the defining cubics on each line."""
    ring = scroll.ideal.ring
    failing = []
    per_line = []
    for idx, span in enumerate(orbit.spans):
        on_scroll = all(line_restriction(g, span).is_zero()
                        for g in scroll.ideal.generators)
        singular = all(line_restriction(f.partial(i), span).is_zero()
                       for f in scroll.cubics for i in range(ring.nvars))
        per_line.append({"line": idx, "on_scroll": on_scroll,
                         "singular": singular})
        if not (on_scroll and singular):
            failing.append(idx)
    stacked = np.concatenate([np.asarray(s) for s in orbit.spans], axis=0)
    spans_p5 = linalg.rank(stacked, ring.p) == 6
    return {"lines": per_line, "failing": failing, "lines_span_p5": spans_p5,
            "ok": not failing and spans_p5}


def scroll_segre_curve(scroll):
    """Saturated ideal of the scroll's intersection with the Segre 3-fold."""
    ring = scroll.ideal.ring
    seg = segre_scroll_ideal(ring)
    raw = Ideal(ring, list(scroll.ideal.generators) + list(seg.generators))
    return saturate_irrelevant(raw)


def scroll_meets_segre(scroll, seed=0):
    """Report of the curve where the scroll meets the Segre 3-fold."""
    curve = scroll_segre_curve(scroll)
    report = scheme_report(curve, seed=seed)
    assert report.dim == 1, "scroll and Segre scroll should meet in a curve"
    return report


def segre_curve_decomposition(scroll, orbit=None):
    """Degree bookkeeping for the scroll's intersection curve with the Segre.

    The intersection is proper, so its cycle degree is deg(X) * deg(R) = 18,
    split as multiplicity 2 on each singular line plus 12 residual lines.  The
    saturated ideal sees length 3 along each singular line (two smooth sheets
    of the scroll cross there, and for such non-Cohen-Macaulay crossings the
    local length exceeds the intersection multiplicity by one), so its
    Hilbert-polynomial degree is 12 + 3*3 = 21.  Both numbers are returned.
    """
    from .heisenberg import _span_to_ideal
    from .groebner import groebner_basis, normal_form
    ring = scroll.ideal.ring
    if orbit is None:
        orbit = line_orbit(scroll.preset, ring)
    curve = scroll_segre_curve(scroll)
    hp = hilbert_polynomial(curve)
    assert projective_dimension(hp) == 1
    scheme_deg = scheme_degree(hp)
    line_ideals = [_span_to_ideal(ring, s) for s in orbit.spans]
    contained = []
    for li in line_ideals:
        gb = groebner_basis(li)
        contained.append(all(normal_form(g, gb).is_zero()
                             for g in curve.generators))
    lengths = []
    resid = curve
    deg_here = scheme_deg
    for li in line_ideals:
        resid = saturate(resid, li)
        nxt = scheme_degree(hilbert_polynomial(resid))
        lengths.append(deg_here - nxt)
        deg_here = nxt
    seg_deg = scheme_degree(hilbert_polynomial(segre_scroll_ideal(ring)))
    cycle_degree = scroll.report.degree * seg_deg
    return {
        "proper": True,
        "scheme_degree": scheme_deg,
        "cycle_degree": cycle_degree,
        "lines_contained": all(contained),
        "line_lengths": lengths,
        "residual_degree": deg_here,
        "cycle_checks": cycle_degree == deg_here + 2 * len(line_ideals),
    }


def scroll_union(c1, c2, p=DEFAULT_PRIME, seed=0):
    """The union of the two scrolls at c1 and c2, on distinct pencil lines."""
    if not isinstance(c1, PencilCoords):
        c1 = PencilCoords(*c1)
    if not isinstance(c2, PencilCoords):
        c2 = PencilCoords(*c2)
    pr1 = _pencil_preset(c1, p)
    pr2 = _pencil_preset(c2, p)
    assert pr1 != pr2, "union needs scrolls from the two distinct pencil lines"
    x1 = elliptic_scroll(c1, p=p, seed=seed)
    x2 = elliptic_scroll(c2, p=p, seed=seed)
    ideal = intersect(x1.ideal, x2.ideal)
    report = scheme_report(ideal, seed=seed)
    return NamedScheme("Y", ideal, report, parts=(x1, x2))


def family_planes_in(I, grid=10):
    """Planes of the Segre plane family contained in V(I), by grid scan.

    Returns (alpha, beta, label) triples over primitive parameter pairs with
    entries below grid.  A plane lies in V(I) exactly when every generator
    reduces to zero against the plane's linear forms.
    """
    from .heisenberg import planes_of_r
    from .groebner import groebner_basis, normal_form
    ring = I.ring
    found = []
    seen = set()
    pairs = []
    for alpha in range(grid):
        for beta in range(grid):
            if alpha == 0 and beta == 0:
                continue
            lead = alpha if alpha else beta
            inv = pow(lead, -1, ring.p)
            key = (alpha * inv % ring.p, beta * inv % ring.p)
            if key not in seen:
                seen.add(key)
                pairs.append((alpha, beta))
    for alpha, beta in pairs:
        fam = planes_of_r(alpha, beta, ring)
        for label, ideal in fam.ideals.items():
            gb = groebner_basis(ideal)
            if all(normal_form(g, gb).is_zero() for g in I.generators):
                found.append((alpha, beta, label))
    return found


class PipelineReport:
    """Recorded invariants of the quintic/quartic bilinkage run."""

    __slots__ = ("steps", "quintic_dim", "quartic_dim_of_Z", "final_report",
                 "syzygy_counts", "w_report", "quartic_ideal_report", "seed")

    def __init__(self, steps, quintic_dim, quartic_dim_of_Z, final_report,
                 syzygy_counts, w_report, quartic_ideal_report, seed):
        self.steps = steps
        self.quintic_dim = quintic_dim
        self.quartic_dim_of_Z = quartic_dim_of_Z
        self.final_report = final_report
        self.syzygy_counts = syzygy_counts
        self.w_report = w_report
        self.quartic_ideal_report = quartic_ideal_report
        self.seed = seed

    def integer_summary(self):
        """Every reported integer, for seed-stability comparison."""
        return {
            "quintic_dim": self.quintic_dim,
            "z_degree": self.steps[0].degree_check[2],
            "quartic_dim_of_Z": self.quartic_dim_of_Z,
            "w_degree": self.w_report.degree,
            "w_genus": self.w_report.sectional_genus,
            "w_quartics": self.syzygy_counts["quartics_through_W"],
            "linear_syzygies": self.syzygy_counts["linear_syzygies"],
            "quartic_ideal_degree": self.quartic_ideal_report.degree,
            "quartic_ideal_genus": self.quartic_ideal_report.sectional_genus,
        }

    def to_json_dict(self):
        return {
            "seed": self.seed,
            "degree_checks": [list(s.degree_check) for s in self.steps],
            "quintic_dim": self.quintic_dim,
            "quartic_dim_of_Z": self.quartic_dim_of_Z,
            "syzygy_counts": dict(self.syzygy_counts),
            "w_report": self.w_report.to_json_dict(),
            "quartic_ideal_report": self.quartic_ideal_report.to_json_dict(),
            "final_report": self.final_report.to_json_dict(),
        }

    def __repr__(self):
        return "PipelineReport(%s)" % (self.integer_summary(),)


def bilink_pipeline(Y, seed=0):
    """Two links: quintics carve Z out of Y, then a quartic and quintic carve W.

    Draws are seeded; a failed genericity check moves to the next attempt and
    RetryExhausted is raised after 5.
    """
    ring = Y.ideal.ring
    last_err = None
    for attempt in range(PIPELINE_RETRIES):
        rng = random.Random(5500087 * (seed + 1) + 7919 * attempt)
        try:
            return _bilink_once(ring, Y, rng, seed)
        except (AssertionError, ValueError) as err:
            last_err = err
    raise RetryExhausted(
        "no general enough quintic draws in %d attempts: %s"
        % (PIPELINE_RETRIES, last_err))


def _bilink_once(ring, Y, rng, seed):
    iy5 = graded_piece(Y.ideal, 5)
    quintic_dim = iy5.dim
    assert quintic_dim >= 2, "need at least a pencil of quintics"
    q1 = iy5.random_combination(rng)
    q2 = iy5.random_combination(rng)
    step1 = link((q1, q2), Y.ideal)
    Z = step1.residual
    hp_z = hilbert_polynomial(Z)
    assert projective_dimension(hp_z) == 3 and scheme_degree(hp_z) == \
        step1.degree_check[0] - step1.degree_check[1]
    iz4 = graded_piece(Z, 4)
    quartic_dim_of_Z = iz4.dim
    assert quartic_dim_of_Z >= 1, "no quartic through the first residual"
    f4 = iz4.random_combination(rng)
    iz5 = graded_piece(Z, 5)
    q5 = iz5.random_combination(rng)
    step2 = link((f4, q5), Z)
    W = step2.residual
    w_report = scheme_report(W, seed=seed)
    assert w_report.dim == 3
    iw4 = graded_piece(W, 4)
    mult = linear_multiples(iw4)
    syzygies = ring.nvars * iw4.dim - mult.dim
    quartic_ideal = Ideal(ring, list(iw4.basis))
    q_report = scheme_report(quartic_ideal, seed=seed)
    syzygy_counts = {"quartics_through_W": iw4.dim,
                     "linear_syzygies": syzygies}
    return PipelineReport([step1, step2], quintic_dim, quartic_dim_of_Z,
                          w_report, syzygy_counts, w_report, q_report, seed)
