"""Apolarity of quadrics in dual rings and rank stratification of webs."""

import logging
import math
import random

import numpy as np

from . import linalg
from .errors import (DegreeMismatch, PositiveDimensionalStratum, RankDeficient,
                     RingMismatch)
from .groebner import GradedBasis, Ideal
from .hilbert import (hilbert_polynomial, projective_dimension, scheme_degree,
                      scheme_report)
from .idealops import saturate, saturate_irrelevant
from .poly import PolyRing, Polynomial

log = logging.getLogger("scrollgeom.apolarity")


class DualRingPair:
    """x-quadrics acting as differential operators on y-quadrics."""

    __slots__ = ("s_ring", "t_ring")

    def __init__(self, field):
        self.s_ring = PolyRing(["x%d" % i for i in range(4)], field)
        self.t_ring = PolyRing(["y%d" % i for i in range(4)], field)


def apolar_pair(f, g):
    """f(d/dy0..d/dy3) applied to g, for quadrics; pairs matching exponents."""
    if f.degree() != 2 or g.degree() != 2 or not f.is_homogeneous() \
            or not g.is_homogeneous():
        raise DegreeMismatch("apolarity pairing needs two homogeneous quadrics")
    rf, rg = f.ring, g.ring
    if rf.nvars != 4 or rg.nvars != 4 or rf.p != rg.p:
        raise RingMismatch("apolarity pairing needs dual rings in 4 variables")
    p = rf.p
    total = 0
    for k, c in f.terms.items():
        cg = g.terms.get(k)
        if cg is None:
            continue
        fact = 1
        for i in range(4):
            fact *= math.factorial((k >> (8 * i)) & 0xFF)
        total = (total + c * cg * fact) % p
    return total


def quadric_matrix(g):
    """Symmetric 4x4 scalar matrix of a quadric; off-diagonal entries halved."""
    ring = g.ring
    p = ring.p
    half = pow(2, -1, p)
    m = np.zeros((4, 4), dtype=np.int64)
    for k, c in g.terms.items():
        sup = [i for i in range(4) if (k >> (8 * i)) & 0xFF]
        if len(sup) == 1:
            m[sup[0], sup[0]] = c
        else:
            i, j = sup
            m[i, j] = m[j, i] = c * half % p
    return m


class QuadricWeb:
    """4-dim space of quadrics with its symmetric matrix pencil in u0..u3."""

    __slots__ = ("t_ring", "basis", "u_ring", "matrix_pencil")

    def __init__(self, basis):
        assert len(basis) == 4
        t_ring = basis[0].ring
        for b in basis:
            assert b.ring is t_ring and b.is_homogeneous() and b.degree() == 2
        coeffs = t_ring.basis_matrix(basis, 2)
        if linalg.rank(coeffs, t_ring.p) != 4:
            raise RankDeficient("web basis is linearly dependent")
        self.t_ring = t_ring
        self.basis = list(basis)
        self.u_ring = PolyRing(["u%d" % i for i in range(4)], t_ring.field)
        mats = [quadric_matrix(b) for b in basis]
        u = self.u_ring.gens()
        self.matrix_pencil = [
            [sum((int(mats[k][i, j]) * u[k] for k in range(4)),
                 self.u_ring.zero()) for j in range(4)] for i in range(4)]

    def member_matrix(self, point):
        """Scalar symmetric matrix of the web member at parameter point."""
        p = self.u_ring.p
        out = np.zeros((4, 4), dtype=np.int64)
        for i in range(4):
            for j in range(4):
                out[i, j] = self.matrix_pencil[i][j].evaluate(point)
        return out % p

    def determinant(self):
        """The quartic det of the pencil in the parameter ring."""
        m = self.matrix_pencil
        total = self.u_ring.zero()
        for perm, sign in _PERMS4:
            term = self.u_ring.one()
            for i in range(4):
                term = term * m[i][perm[i]]
            total = total + (term if sign > 0 else -term)
        return total


def _perms4():
    import itertools
    out = []
    for perm in itertools.permutations(range(4)):
        inv = sum(1 for a in range(4) for b in range(a + 1, 4)
                  if perm[a] > perm[b])
        out.append((perm, 1 if inv % 2 == 0 else -1))
    return out


_PERMS4 = _perms4()


def orthogonal_complement(V):
    """The web of quadrics apolar to a 6-dim system V."""
    if len(V) != 6:
        raise RankDeficient("expected 6 quadrics, got %d" % len(V))
    s_ring = V[0].ring
    for f in V:
        if f.ring is not s_ring:
            raise RingMismatch("system spans several rings")
        if not f.is_homogeneous() or f.degree() != 2:
            raise DegreeMismatch("system member is not a quadric")
    if linalg.rank(s_ring.basis_matrix(V, 2), s_ring.p) != 6:
        raise RankDeficient("quadric system has rank below 6")
    t_ring = PolyRing(["y%d" % i for i in range(4)], s_ring.field)
    monos = t_ring.monomials(2)
    gram = np.zeros((6, len(monos)), dtype=np.int64)
    for r, f in enumerate(V):
        for c, m in enumerate(monos):
            gram[r, c] = apolar_pair(f, t_ring.from_terms({m: 1}))
    ker = linalg.nullspace(gram, s_ring.p)
    assert ker.shape[0] == 4
    basis = [t_ring.from_vec(v, 2) for v in ker]
    return QuadricWeb(basis)


def _minor_ideal(web, size):
    import itertools
    m = web.matrix_pencil
    gens = []
    for rows in itertools.combinations(range(4), size):
        for cols in itertools.combinations(range(4), size):
            if size == 2:
                (a, b), (c, d) = rows, cols
                gens.append(m[a][c] * m[b][d] - m[a][d] * m[b][c])
            else:
                total = web.u_ring.zero()
                for k, sign in (((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1),
                                ((2, 1, 0), -1), ((1, 0, 2), -1), ((0, 2, 1), -1)):
                    term = web.u_ring.one()
                    for i in range(3):
                        term = term * m[rows[i]][cols[k[i]]]
                    total = total + (term if sign > 0 else -term)
                gens.append(total)
    return Ideal(web.u_ring, gens)


def rank_strata(web):
    """(number of rank-1 members, number of isolated rank-2 members).

    Two independent rank-1 quadrics l1^2, l2^2 span a whole line of rank-2
    members a*l1^2 + b*l2^2, so whenever the web has two or more rank-1
    members the rank <= 2 locus contains those parameter lines.  The counted
    rank-2 members are the isolated ones: the locus of 3x3 minors saturated
    by the 2x2 minors and by the lines joining pairs of rank-1 points.
    """
    S2, S3 = strata_ideals(web)
    return scheme_degree(hilbert_polynomial(S2)), \
        scheme_degree(hilbert_polynomial(S3))


def strata_ideals(web):
    """Saturated ideals of the rank-1 points and the isolated rank-2 points."""
    I2 = _minor_ideal(web, 2)
    S2 = saturate_irrelevant(I2)
    hp2 = hilbert_polynomial(S2)
    if projective_dimension(hp2) > 0:
        raise PositiveDimensionalStratum(
            "rank <= 1 locus has dimension %d" % projective_dimension(hp2))
    I3 = _minor_ideal(web, 3)
    S3 = saturate(I3, I2)
    hp3 = hilbert_polynomial(S3)
    if projective_dimension(hp3) > 0:
        S3 = _remove_rank1_secants(web.u_ring, S2, S3)
        hp3 = hilbert_polynomial(S3)
        if projective_dimension(hp3) > 0:
            raise PositiveDimensionalStratum(
                "rank <= 2 locus has dimension %d beyond the rank-1 secants"
                % projective_dimension(hp3))
    return S2, S3


def _remove_rank1_secants(u_ring, S2, S3):
    import itertools
    pts, complete = rational_projective_points(S2)
    if not complete or len(pts) < 2:
        raise PositiveDimensionalStratum(
            "rank <= 2 locus is positive-dimensional and the rank-1 points "
            "are not all rational, cannot isolate the finite part")
    uvars = u_ring.gens()
    for a, b in itertools.combinations(pts, 2):
        forms = linalg.nullspace(np.array([a, b], dtype=np.int64), u_ring.p)
        gens = [sum((int(c) * uvars[i] for i, c in enumerate(v) if c),
                    u_ring.zero()) for v in forms]
        S3 = saturate(S3, Ideal(u_ring, gens))
    return S3


def base_locus(V, ambient=None):
    """Report on the saturated common zero scheme of a system of forms."""
    assert V, "empty system"
    ambient = ambient or V[0].ring
    I = Ideal(ambient, list(V))
    sat = saturate_irrelevant(I)
    return scheme_report(sat, with_genus=False)


def rational_projective_points(I, seed=0):
    """(points, complete) for a saturated 0-dimensional ideal in 4 variables.

    Points are normalized projective coordinate tuples. complete is True when
    the count with multiplicity reaches the scheme degree, i.e. every point of
    the scheme is rational over GF(p).
    """
    ring = I.ring
    n = ring.nvars
    p = ring.p
    assert n == 4
    hp = hilbert_polynomial(I)
    if projective_dimension(hp) < 0:
        return [], True
    assert projective_dimension(hp) == 0
    degree = scheme_degree(hp)
    rng = random.Random(424243 + seed)
    best = ([], False)
    from .poly import LEX
    for _ in range(6):
        g = np.array([[rng.randrange(p) for _ in range(n)] for _ in range(n)],
                     dtype=np.int64)
        try:
            linalg.inverse(g, p)
        except AssertionError:
            continue
        J = Ideal(ring, [f.subs_linear(ring, g) for f in I.generators])
        gb = J.groebner_basis(LEX)
        pts, mult_total = _points_from_lex(ring, gb, p)
        if pts is None:
            continue
        back = [tuple(int(x) for x in (g.T @ np.array(pt, dtype=np.int64)) % p)
                for pt in pts]
        back = [_normalize_point(pt, p) for pt in back]
        for pt in back:
            assert all(f.evaluate(pt) == 0 for f in I.generators)
        if mult_total >= degree:
            return back, True
        if len(back) > len(best[0]):
            best = (back, False)
    log.info("only %d of degree-%d points are rational; partial check",
             len(best[0]), degree)
    return best


def vanishing_order_at_least(f, point, order):
    """True when every partial of f up to total order-1 vanishes at point."""
    layer = [f]
    for _ in range(order):
        for g in layer:
            if g.evaluate(point) != 0:
                return False
        layer = [g.partial(i) for g in layer for i in range(f.ring.nvars)]
    return True


def _normalize_point(pt, p):
    lead = next(x for x in pt if x)
    inv = pow(lead, -1, p)
    return tuple(x * inv % p for x in pt)


def _univariate_roots(coeffs, p):
    """Roots in GF(p) of sum coeffs[i] t^i, by vectorized evaluation."""
    xs = np.arange(p, dtype=np.int64)
    vals = np.zeros(p, dtype=np.int64)
    for c in reversed(coeffs):
        vals = (vals * xs + c) % p
    return [int(r) for r in np.nonzero(vals == 0)[0]]


def _as_univariate(f, var, fixed, p):
    """Coefficient list of f with all variables but var evaluated at fixed."""
    deg = f.degree()
    out = [0] * (deg + 1)
    ring = f.ring
    for k, c in f.terms.items():
        v = c
        e_var = 0
        for i in range(ring.nvars):
            e = (k >> (8 * i)) & 0xFF
            if not e:
                continue
            if i == var:
                e_var = e
            else:
                if fixed[i] is None:
                    return None
                v = v * pow(fixed[i], e, p) % p
        out[e_var] = (out[e_var] + v) % p
    return out


def _points_from_lex(ring, gb, p):
    """Solve a triangular-ish lex basis of a 1-dim cone over projective points."""
    n = ring.nvars
    last2 = [g for g in gb
             if all((k >> (8 * i)) & 0xFF == 0 for k in g.terms
                    for i in range(n - 2))]
    if not last2:
        return None, 0
    binary = min(last2, key=lambda g: g.degree())
    # dehomogenize at u_{n-1} = 1 and scan the last free ratio
    fixed = [None] * n
    fixed[n - 1] = 1
    co = _as_univariate(binary, n - 2, fixed, p)
    mult_total = 0
    pts = []
    dropped = False
    for r in _univariate_roots(co, p):
        mult = _root_multiplicity(co, r, p)
        sols = [{n - 1: 1, n - 2: r}]
        ok = True
        for var in range(n - 3, -1, -1):
            nxt = []
            for sol in sols:
                fixedv = [sol.get(i) for i in range(n)]
                cands = None
                for g in gb:
                    co_g = _as_univariate(g, var, fixedv, p)
                    if co_g is None or all(c == 0 for c in co_g):
                        continue
                    roots = set(_univariate_roots(co_g, p))
                    cands = roots if cands is None else cands & roots
                if cands is None:
                    ok = False
                    break
                for val in cands:
                    s2 = dict(sol)
                    s2[var] = val
                    nxt.append(s2)
            if not ok:
                break
            sols = nxt
        if not ok or len(sols) > 1:
            # ambiguous fiber over one root ratio: ask for a fresh draw
            return None, 0
        if not sols:
            dropped = True
            continue
        mult_total += mult
        pts.append(tuple(sols[0][i] for i in range(n)))
    if dropped:
        return None, 0
    # points with last coordinate zero in these coordinates are invisible
    # here; the caller treats an undercount as an incomplete answer
    return pts, mult_total


def _root_multiplicity(coeffs, r, p):
    desc = list(reversed(coeffs))
    m = 0
    while len(desc) > 1:
        out = [desc[0]]
        for c in desc[1:]:
            out.append((c + r * out[-1]) % p)
        if out[-1] % p:
            break
        m += 1
        desc = out[:-1]
    return m
