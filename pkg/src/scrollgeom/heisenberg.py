"""Order-6 Heisenberg symmetry on P5: Schroedinger generators, invariant cubic
pencils, line and 3-space orbits, the Segre scroll, and its plane family."""

import numpy as np

from . import linalg
from .errors import InvarianceCheckFailed, RingMismatch
from .groebner import GradedBasis, Ideal
from .poly import PolyRing

_PRESET_ELEMENTS = {1: ("tau", 2), 2: ("sigma", 2), 3: ("sigma2tau2", 1),
                    4: ("sigma2tau4", 1)}


class LinearAction:
    """Invertible substitution x_i -> sum_j matrix[j][i] x_j on a fixed ring."""

    __slots__ = ("ring", "matrix", "name")

    def __init__(self, ring, matrix, name=None):
        self.ring = ring
        self.matrix = np.asarray(matrix, dtype=np.int64) % ring.p
        self.name = name

    def act(self, f):
        if f.ring is not self.ring:
            raise RingMismatch("action and polynomial live on different rings")
        return f.subs_linear(self.ring, self.matrix)

    def __mul__(self, other):
        assert self.ring is other.ring
        name = None
        if self.name and other.name:
            name = "%s*%s" % (self.name, other.name)
        return LinearAction(self.ring, self.matrix @ other.matrix % self.ring.p, name)

    def __pow__(self, e):
        n = self.ring.nvars
        out = LinearAction(self.ring, np.eye(n, dtype=np.int64),
                           "1" if e == 0 else None)
        base = self if e >= 0 else self.inverse()
        for _ in range(abs(e)):
            out = out * base
        if self.name:
            out.name = "%s^%d" % (self.name, e)
        return out

    def inverse(self):
        inv = linalg.inverse(self.matrix, self.ring.p)
        return LinearAction(self.ring, inv,
                            "%s^-1" % self.name if self.name else None)

    def point_matrix(self):
        """Matrix of the induced action on points of P5 (inverse transpose)."""
        return linalg.inverse(self.matrix, self.ring.p).T % self.ring.p

    def __eq__(self, other):
        return (isinstance(other, LinearAction) and self.ring is other.ring
                and bool((self.matrix == other.matrix).all()))

    def is_scalar_multiple(self, other, scalar):
        return bool((self.matrix == other.matrix * scalar % self.ring.p).all())

    def __repr__(self):
        return "LinearAction(%s)" % (self.name or "unnamed")


def act_on_form(g, f):
    return g.act(f)


def schrodinger_generators(ring):
    """(sigma, tau, iota) for the shift, diagonal, and index-negation actions."""
    assert ring.nvars == 6
    p = ring.p
    rho = ring.field.rho
    sigma = np.zeros((6, 6), dtype=np.int64)
    tau = np.zeros((6, 6), dtype=np.int64)
    iota = np.zeros((6, 6), dtype=np.int64)
    for i in range(6):
        sigma[(i + 1) % 6, i] = 1
        tau[i, i] = pow(rho, i, p)
        iota[(-i) % 6, i] = 1
    return (LinearAction(ring, sigma, "sigma"),
            LinearAction(ring, tau, "tau"),
            LinearAction(ring, iota, "iota"))


class PencilCoords:
    """Projective coordinates (a, b, c, d) selecting an invariant cubic pencil."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        assert any((a, b, c, d)), "pencil coordinates must not all vanish"
        self.a, self.b, self.c, self.d = a, b, c, d

    def __iter__(self):
        return iter((self.a, self.b, self.c, self.d))

    def __repr__(self):
        return "(%d,%d,%d,%d)" % (self.a, self.b, self.c, self.d)


def _pencil_polys(ring):
    P = ring.parse
    return [
        (P("x0^3+x2^3+x4^3"), P("x1^3+x3^3+x5^3")),
        (P("x0*x2*x4"), P("x1*x3*x5")),
        (P("x3^2*x0+x5^2*x2+x1^2*x4"), P("x4^2*x1+x0^2*x3+x2^2*x5")),
        (P("x1*x2*x3+x3*x4*x5+x5*x0*x1"), P("x2*x3*x4+x4*x5*x0+x0*x1*x2")),
    ]


def _span_stable(ring, pair, g):
    mat = ring.basis_matrix(list(pair) + [g.act(f) for f in pair], 3)
    return linalg.rank(mat, ring.p) == 2


def invariant_pencil_basis(ring):
    """The four symmetry-stable pencils of cubics, each verified stable."""
    sigma, tau, iota = schrodinger_generators(ring)
    pencils = _pencil_polys(ring)
    for k, pair in enumerate(pencils):
        for g in (sigma, tau, iota):
            if not _span_stable(ring, pair, g):
                raise InvarianceCheckFailed(
                    "pencil %d not stable under %s" % (k + 1, g.name))
    return pencils


def cubic_pencil(coords, ring):
    """The cubic pair selected by (a,b,c,d) inside the four stable pencils."""
    a, b, c, d = coords
    pencils = invariant_pencil_basis(ring)
    weights = (a, b, c, d)
    first = ring.zero()
    second = ring.zero()
    for w, (f1, f2) in zip(weights, pencils):
        first = first + w * f1
        second = second + w * f2
    return first, second


class LineOrbit:
    """Three pairwise disjoint lines permuted cyclically by a group element."""

    __slots__ = ("subgroup_id", "lines", "spans", "permuter")

    def __init__(self, subgroup_id, lines, spans, permuter):
        self.subgroup_id = subgroup_id
        self.lines = lines
        self.spans = spans
        self.permuter = permuter

    def __repr__(self):
        return "LineOrbit(preset %d)" % self.subgroup_id


def _span_to_ideal(ring, span):
    """Ideal of the projective span of the given row vectors."""
    forms = linalg.nullspace(np.asarray(span, dtype=np.int64), ring.p)
    gens = []
    for v in forms:
        gens.append(ring.from_terms(
            {ring.pack(tuple(1 if j == i else 0 for j in range(ring.nvars))): int(c)
             for i, c in enumerate(v) if c}))
    return Ideal(ring, gens)


def _ideal_of_line(ring, u, v):
    return _span_to_ideal(ring, [u, v])


def _same_span(ring, a, b):
    stack = np.concatenate([np.asarray(a), np.asarray(b)], axis=0)
    return linalg.rank(stack, ring.p) == linalg.rank(np.asarray(a), ring.p) \
        == linalg.rank(np.asarray(b), ring.p)


def _order3_element(ring, preset):
    sigma, tau, _ = schrodinger_generators(ring)
    if preset == 1:
        return tau * tau
    if preset == 2:
        return sigma * sigma
    if preset == 3:
        return sigma * sigma * tau * tau
    return sigma * sigma * (tau ** 4)


def line_orbit(subgroup_id, ring):
    """One of the four triples of lines stable under an index-3 subgroup."""
    assert subgroup_id in (1, 2, 3, 4)
    p = ring.p
    sigma, tau, _ = schrodinger_generators(ring)
    if subgroup_id == 1:
        e = np.eye(6, dtype=np.int64)
        spans = [np.array([e[0], e[3]]), np.array([e[1], e[4]]),
                 np.array([e[2], e[5]])]
        lines = [_span_to_ideal(ring, s) for s in spans]
        return LineOrbit(1, lines, spans, sigma)
    g = _order3_element(ring, subgroup_id)
    pm = g.point_matrix()
    assert ((np.linalg.matrix_power(pm, 3) % p) == np.eye(6, dtype=np.int64)).all()
    omega = ring.field.root_of_unity(3)
    spans = []
    for lam in (1, omega, omega * omega % p):
        ker = linalg.nullspace((pm - lam * np.eye(6, dtype=np.int64)) % p, p)
        assert ker.shape[0] == 2, "eigenplane of unexpected dimension"
        spans.append(ker)
    permuter = None
    for cand in (sigma, tau, sigma * tau):
        imgs = [(cand.point_matrix() @ s.T % p).T for s in spans]
        hits = []
        for im in imgs:
            hit = [k for k in range(3) if _same_span(ring, im, spans[k])]
            hits.append(hit[0] if len(hit) == 1 else None)
        if hits not in ([1, 2, 0], [2, 0, 1]):
            continue
        if hits == [2, 0, 1]:
            spans[1], spans[2] = spans[2], spans[1]
        permuter = cand
        break
    assert permuter is not None, "no cyclic permuter found for the orbit"
    lines = [_span_to_ideal(ring, s) for s in spans]
    return LineOrbit(subgroup_id, lines, spans, permuter)


def p3_orbit(subgroup_id, ring):
    """Ideals of the three 3-spaces spanned by pairs of orbit lines."""
    orbit = line_orbit(subgroup_id, ring)
    out = []
    for a, b in ((0, 1), (1, 2), (2, 0)):
        span = np.concatenate([orbit.spans[a], orbit.spans[b]], axis=0)
        out.append(_span_to_ideal(ring, span))
    return out


def three_p3s(subgroup_id, ring):
    """Ideal of the union of the three 3-spaces of an orbit."""
    from .idealops import intersect
    a, b, c = p3_orbit(subgroup_id, ring)
    return intersect(intersect(a, b), c)


def segre_scroll_ideal(ring):
    """The three 2x2 minors cutting the Segre P1 x P2 scroll."""
    P = ring.parse
    return Ideal(ring, [P("x0*x5-x2*x3"), P("x0*x1-x4*x3"), P("x2*x1-x4*x5")])


def line_restriction(f, span, st_ring=None):
    """Restrict a form to the line s*u + t*v; returns a binary form."""
    ring = f.ring
    if st_ring is None:
        st_ring = _st_ring(ring)
    u, v = np.asarray(span, dtype=np.int64) % ring.p
    mat = np.vstack([u, v])
    return f.subs_linear(st_ring, mat)


def _st_ring(ring):
    got = getattr(ring, "_st_ring", None)
    if got is None:
        got = PolyRing(["s", "t"], ring.field)
        ring._st_ring = got
    return got


def vanishes_on_line(f, span):
    return line_restriction(f, span).is_zero()


def invariant_cubics(ring, actions):
    """Echelon basis of cubics fixed by every listed action."""
    monos = ring.monomials(3)
    idx = ring.mono_index(3)
    n = len(monos)
    blocks = []
    for g in actions:
        A = np.zeros((n, n), dtype=np.int64)
        for c, m in enumerate(monos):
            img = g.act(ring.from_terms({m: 1}))
            for k, v in img.terms.items():
                A[idx[k], c] = v
        blocks.append((A - np.eye(n, dtype=np.int64)) % ring.p)
    stacked = np.concatenate(blocks, axis=0)
    fixed = linalg.nullspace(stacked, ring.p)
    return GradedBasis(ring, 3, fixed)


class PlanesOfR:
    """The four planes in the scroll attached to (alpha, beta), with coincidences."""

    __slots__ = ("ideals", "labels", "coincidences", "orbit_length")

    def __init__(self, ideals, labels, coincidences, orbit_length):
        self.ideals = ideals
        self.labels = labels
        self.coincidences = coincidences
        self.orbit_length = orbit_length

    def __repr__(self):
        return "PlanesOfR(orbit length %d, coincidences %s)" % (
            self.orbit_length, self.coincidences)


def planes_of_r(alpha, beta, ring):
    """P0, P1, Q0, Q1 and which of them coincide at this (alpha, beta)."""
    assert (alpha, beta) != (0, 0)
    p = ring.p
    a, b = alpha % p, beta % p

    def plane(u, w):
        rows = np.zeros((3, 6), dtype=np.int64)
        for r, (i, j) in enumerate(((0, 3), (2, 5), (4, 1))):
            rows[r, i] = u
            rows[r, j] = w
        return rows % p

    mats = {"P0": plane(a, b), "P1": plane(a, -b % p),
            "Q0": plane(b, a), "Q1": plane(b, -a % p)}
    labels = ["P0", "P1", "Q0", "Q1"]
    ideals = {}
    for lab in labels:
        rows = mats[lab]
        gens = [ring.from_terms(
            {ring.pack(tuple(1 if jj == i else 0 for jj in range(6))): int(c)
             for i, c in enumerate(v) if c}) for v in rows]
        ideals[lab] = Ideal(ring, gens)
    coincidences = []
    for i in range(4):
        for j in range(i + 1, 4):
            la, lb = labels[i], labels[j]
            if _same_span(ring, mats[la], mats[lb]):
                coincidences.append((la, lb))
    orbit_length = 4 - len(coincidences)
    return PlanesOfR(ideals, labels, coincidences, orbit_length)
