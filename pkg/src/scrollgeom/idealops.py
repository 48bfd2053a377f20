"""Ideal operations: intersection, quotient, saturation, elimination,
graded image ideals, and the linkage step."""

import random

import numpy as np

from . import linalg
from .errors import (NoConvergence, NotContained, RingMismatch, ZeroDivisorJ)
from .groebner import (GradedBasis, Ideal, graded_piece, minimal_generators,
                       normal_form)
from .hilbert import hilbert_polynomial, projective_dimension, scheme_degree
from .poly import GREVLEX, Polynomial, PolyRing, block_order

SATURATION_ROUNDS = 20


def _aux_ring(ring):
    """Ring with one elimination variable ahead of ring's variables, block order."""
    aux = getattr(ring, "_aux_ring", None)
    if aux is None:
        name = "t"
        k = 0
        while name in ring.names:
            name = "t%d" % k
            k += 1
        aux = PolyRing([name] + ring.names, ring.field, block_order(1))
        ring._aux_ring = aux
    return aux


def _embed(f, aux):
    return f.ring.map_poly(f, aux, var_map=list(range(1, aux.nvars)))


def _project(g, ring):
    # variable 0 of the aux ring never occurs in projected polynomials
    return g.ring.map_poly(g, ring, var_map=[0] + list(range(ring.nvars)))


def intersect(I, J):
    """I meet J via elimination of an auxiliary variable from t*I + (1-t)*J."""
    if I.ring is not J.ring:
        raise RingMismatch("intersection across rings")
    ring = I.ring
    if not I.generators or not J.generators:
        return I if not I.generators else J
    aux = _aux_ring(ring)
    t = aux.var(0)
    one = aux.one()
    gens = [t * _embed(g, aux) for g in I.generators]
    gens += [(one - t) * _embed(h, aux) for h in J.generators]
    gb = Ideal(aux, gens).groebner_basis()
    kept = [g for g in gb if all(k & 0xFF == 0 for k in g.terms)]
    return Ideal(ring, [_project(g, ring) for g in kept])


def divide_exact(g, f):
    """g / f when f divides g exactly; asserts zero remainder."""
    ring = g.ring
    p = ring.p
    lf = f.lead_key()
    lcinv = ring.field.inv(f.lead_coeff())
    q = {}
    r = g
    while r.terms:
        lr = r.lead_key()
        assert ring.key_divides(lf, lr), "inexact polynomial division"
        shift = lr - lf
        c = r.terms[lr] * lcinv % p
        q[shift] = c
        r = r - f.shift(shift, c)
    return Polynomial(ring, q)


def _colon_poly(I, f):
    """I : f via (I meet <f>) / f."""
    if f.is_zero():
        raise ZeroDivisorJ("ideal quotient by the zero polynomial")
    if not I.generators:
        return I
    inter = intersect(I, Ideal(I.ring, [f]))
    return Ideal(I.ring, [divide_exact(g, f) for g in inter.generators])


def _certified_colon(I, gens):
    """I : <gens> through a single generic combination, or None.

    (I : f) contains (I : J) for any f in J; when (I : f) * J lands in I the
    two agree, so a passing product check makes the one-colon answer exact.
    """
    ring = I.ring
    top = max(g.degree() for g in gens)
    rng = random.Random(49297)
    for _ in range(2):
        f = ring.zero()
        for g in gens:
            bump = top - g.degree()
            vec = [rng.randrange(ring.p) for _ in range(len(ring.monomials(bump)))]
            f = f + ring.from_vec(vec, bump) * g
        if f.is_zero():
            continue
        cand = _colon_poly(I, f)
        gb = I.groebner_basis()
        if all(normal_form(a * b, gb).is_zero()
               for a in cand.generators for b in gens):
            return cand
    return None


def quotient(I, J):
    """I : J over a minimal generating set of J, intersecting one-form colons."""
    if isinstance(J, Polynomial):
        return _colon_poly(I, J)
    if I.ring is not J.ring:
        raise RingMismatch("quotient across rings")
    ring = I.ring
    if not J.generators:
        return Ideal(ring, [ring.one()])
    gens = minimal_generators(J) if J.is_homogeneous() else list(J.generators)
    if len(gens) > 1 and I.generators and J.is_homogeneous():
        fast = _certified_colon(I, gens)
        if fast is not None:
            return fast
    acc = None
    for f in gens:
        part = _colon_poly(I, f)
        acc = part if acc is None else intersect(acc, part)
    return acc


def same_ideal(I, J):
    """Exact equality through canonical reduced bases."""
    return I.groebner_basis() == J.groebner_basis()


def saturate(I, J, max_rounds=SATURATION_ROUNDS):
    """I : J^infinity by iterated quotient to a fixed point."""
    cur = I
    for _ in range(max_rounds):
        nxt = quotient(cur, J)
        if same_ideal(nxt, cur):
            return cur
        cur = nxt
    raise NoConvergence("saturation did not stabilize in %d rounds" % max_rounds)


def irrelevant(ring):
    got = getattr(ring, "_irrelevant", None)
    if got is None:
        got = Ideal(ring, ring.gens())
        ring._irrelevant = got
    return got


def _strip_var(f, i):
    """Divide f by the largest power of variable i dividing it."""
    ring = f.ring
    e = min((k >> (8 * i)) & 0xFF for k in f.terms)
    if e == 0:
        return f
    dec = e * ((1 << (8 * i)) + (1 << ring.deg_shift))
    return Polynomial(ring, {k - dec: c for k, c in f.terms.items()})


def _linear_saturation(I, rng):
    """I : l^infinity for a random linear form l.

    Moves l to the least grevlex variable, takes a grevlex basis, and strips
    that variable from each element (which yields a basis of the saturation),
    then changes coordinates back.
    """
    ring = I.ring
    p = ring.p
    n = ring.nvars
    while True:
        c = [rng.randrange(p) for _ in range(n)]
        if any(c):
            break
    j = max(i for i in range(n) if c[i])
    T = np.zeros((n, n), dtype=np.int64)
    r = 0
    for i in range(n):
        if i != j:
            T[r, i] = 1
            r += 1
    T[n - 1] = c
    Tinv = linalg.inverse(T, p)
    fwd = [g.subs_linear(ring, Tinv.T) for g in I.generators]
    gb = Ideal(ring, fwd).groebner_basis(GREVLEX)
    stripped = [_strip_var(g, n - 1) for g in gb]
    back = [g.subs_linear(ring, T.T) for g in stripped]
    return Ideal(ring, back)


def saturate_irrelevant(I, seed=0):
    """Saturation by the irrelevant ideal.

    Fast path: saturate by a random linear form; two independent draws must
    produce the same ideal, otherwise fall back to iterated quotient.
    """
    if not I.generators:
        return I
    assert I.is_homogeneous()
    r1 = _linear_saturation(I, random.Random(900001 + 101 * seed))
    r2 = _linear_saturation(I, random.Random(900002 + 101 * seed))
    if same_ideal(r1, r2):
        return r1
    return saturate(I, irrelevant(I.ring))


def eliminate(I, drop_vars):
    """Ideal of relations among the remaining variables, in their own ring."""
    ring = I.ring
    drop = set()
    for v in drop_vars:
        drop.add(ring._name_index[v] if isinstance(v, str) else int(v))
    assert drop and all(0 <= i < ring.nvars for i in drop)
    dropped = sorted(drop)
    kept = [i for i in range(ring.nvars) if i not in drop]
    ering = PolyRing([ring.names[i] for i in dropped] + [ring.names[i] for i in kept],
                     ring.field, block_order(len(dropped)))
    var_map = [0] * ring.nvars
    for pos, i in enumerate(dropped + kept):
        var_map[i] = pos
    gb = Ideal(ering, [ring.map_poly(g, ering, var_map) for g in I.generators]
               ).groebner_basis()
    nd = len(dropped)
    mask = (1 << (8 * nd)) - 1
    keep_polys = [g for g in gb if all(k & mask == 0 for k in g.terms)]
    rring = PolyRing([ring.names[i] for i in kept], ring.field, GREVLEX)
    back_map = [0] * ering.nvars
    for q in range(nd, ering.nvars):
        back_map[q] = q - nd
    return Ideal(rring, [ering.map_poly(g, rring, back_map) for g in keep_polys])


class ImageMap:
    """Pullback of forms along a rational map P3 -> P5 given by six quadrics."""

    def __init__(self, source_forms, target_ring):
        assert len(source_forms) == target_ring.nvars == 6
        self.source = source_forms[0].ring
        assert self.source.nvars == 4
        for f in source_forms:
            assert f.ring is self.source and f.is_homogeneous() and f.degree() == 2
        self.forms = list(source_forms)
        self.target = target_ring
        self._prod = {0: self.source.one()}

    def _product(self, key):
        got = self._prod.get(key)
        if got is None:
            i = next(i for i in range(6) if (key >> (8 * i)) & 0xFF)
            dec = (1 << (8 * i)) + (1 << self.target.deg_shift)
            got = self._product(key - dec) * self.forms[i]
            self._prod[key] = got
        return got

    def graded_kernel(self, d):
        """GradedBasis of degree-d forms on P5 pulling back to zero."""
        monos = self.target.monomials(d)
        idx = self.source.mono_index(2 * d)
        mat = np.zeros((len(monos), len(idx)), dtype=np.int64)
        for r, m in enumerate(monos):
            for k, c in self._product(m).terms.items():
                mat[r, idx[k]] = c
        ker = linalg.nullspace(mat.T, self.source.p)
        return GradedBasis(self.target, d, ker)


def image_ideal_graded(source_forms, target_degree, target_ring=None):
    if target_ring is None:
        target_ring = PolyRing(["x%d" % i for i in range(6)],
                               source_forms[0].ring.field, GREVLEX)
    return ImageMap(source_forms, target_ring).graded_kernel(target_degree)


class LinkageStep:
    """One liaison step: residual of an ideal inside a complete intersection."""

    __slots__ = ("ci_forms", "input", "residual", "degree_check")

    def __init__(self, ci_forms, input_ideal, residual, degree_check):
        self.ci_forms = ci_forms
        self.input = input_ideal
        self.residual = residual
        self.degree_check = degree_check

    def __repr__(self):
        return "LinkageStep(ci degrees %s, degree check %s)" % (
            [f.degree() for f in self.ci_forms], (self.degree_check,))


def link(ci_forms, I):
    """Residual of I in the complete intersection cut by ci_forms."""
    ring = I.ring
    for f in ci_forms:
        if f.ring is not ring:
            raise RingMismatch("linkage forms from a different ring")
        if not I.contains(f):
            raise NotContained("linkage form of degree %d not in the ideal" % f.degree())
    ci = Ideal(ring, list(ci_forms))
    residual = saturate_irrelevant(quotient(ci, I))
    dci = 1
    for f in ci_forms:
        dci *= f.degree()
    hp_in = hilbert_polynomial(I)
    hp_res = hilbert_polynomial(residual)
    check = (dci, scheme_degree(hp_in), scheme_degree(hp_res))
    expected_dim = ring.nvars - 1 - len(ci_forms)
    if (projective_dimension(hp_in) == expected_dim
            and projective_dimension(hp_res) == expected_dim):
        assert check[0] == check[1] + check[2], \
            "linkage degree additivity failed: %s" % (check,)
    return LinkageStep(list(ci_forms), I, residual, check)
