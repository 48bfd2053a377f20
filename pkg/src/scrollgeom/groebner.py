"""Buchberger engine with reduced bases and graded-piece linear algebra."""

import threading
import warnings

import numpy as np

from . import kernels, linalg
from .errors import CeilingTooLow, ResourceExceeded, RingMismatch
from .poly import Polynomial

DEFAULT_MAX_PAIRS = 200_000
DEFAULT_OPCAP = 2_000_000_000
DEFAULT_GEN_CEILING = 6


def _to_arrays(f, order):
    """Polynomial -> (uint64 keys desc-sorted in order, int64 coeffs)."""
    ring = f.ring
    keys = np.fromiter(f.terms.keys(), dtype=np.uint64, count=len(f.terms))
    coeffs = np.fromiter(f.terms.values(), dtype=np.int64, count=len(f.terms))
    idx = np.argsort(ring.okey_array(keys, order))[::-1]
    return keys[idx], coeffs[idx]


def _from_arrays(ring, keys, coeffs):
    return Polynomial(ring, {int(k): int(c) for k, c in zip(keys, coeffs)})


class _Elem:
    __slots__ = ("poly", "lead", "keys", "coeffs")

    def __init__(self, poly, order, fast):
        self.poly = poly
        self.lead = poly.lead_key(order)
        if fast:
            self.keys, self.coeffs = _to_arrays(poly, order)
        else:
            self.keys = self.coeffs = None


class _Engine:
    """One Buchberger run; owns the working basis and pair queue."""

    def __init__(self, ring, order, max_pairs, opcap):
        self.ring = ring
        self.order = order
        self.code = order.fast_code(ring.nvars) if ring.fast else None
        self.fast = self.code is not None
        self.max_pairs = max_pairs
        self.opcap = opcap
        self.G = []
        self.P = []
        self._flat = None

    # pair bookkeeping (Gebauer-Moeller elimination)

    def _add_elem(self, fe):
        ring = self.ring
        m = fe.lead
        kept = []
        for (i, j, lij) in self.P:
            if (ring.key_divides(m, lij)
                    and ring.key_lcm(self.G[i].lead, m) != lij
                    and ring.key_lcm(self.G[j].lead, m) != lij):
                continue
            kept.append((i, j, lij))
        t = len(self.G)
        classes = {}
        for i in range(t):
            classes.setdefault(ring.key_lcm(self.G[i].lead, m), []).append(i)
        lcms = list(classes)
        for L in lcms:
            if any(L2 != L and ring.key_divides(L2, L) for L2 in lcms):
                continue
            members = classes[L]
            if any(ring.key_coprime(self.G[i].lead, m) for i in members):
                continue
            kept.append((members[0], t, L))
        self.P = kept
        self.G.append(fe)
        self._flat = None

    def _flatten(self):
        if self._flat is None:
            lens = np.array([len(e.keys) for e in self.G], dtype=np.int64)
            offs = np.zeros(len(self.G), dtype=np.int64)
            if len(self.G) > 1:
                offs[1:] = np.cumsum(lens)[:-1]
            bk = np.concatenate([e.keys for e in self.G]) if self.G else np.empty(0, np.uint64)
            bc = np.concatenate([e.coeffs for e in self.G]) if self.G else np.empty(0, np.int64)
            leads = np.array([e.lead for e in self.G], dtype=np.uint64)
            self._flat = (bk, bc, offs, lens, leads)
        return self._flat

    def _reduce_poly(self, f, skip=None):
        """Full normal form of f against the current basis (optionally minus one index)."""
        if self.fast:
            elems = self.G if skip is None else self.G[:skip] + self.G[skip + 1:]
            return _reduce_fast(f, elems, self.ring, self.order, self.code, self.opcap)
        basis = [(e.lead, e.poly.terms) for k, e in enumerate(self.G) if k != skip]
        terms = _reduce_dict(f.terms, basis, self.ring, self.order)
        return Polynomial(self.ring, terms)

    def _reduce_arrays(self, keys, coeffs):
        bk, bc, offs, lens, leads = self._flatten()
        rk, rc, st, _ = kernels.reduce_full(
            keys, coeffs, bk, bc, offs, lens, leads,
            np.int64(self.ring.p), np.int64(self.code),
            np.int64(self.ring.nvars), np.int64(self.opcap))
        if st == kernels.OVERFLOW:
            raise ResourceExceeded("monomial exponent overflow during reduction")
        if st == kernels.OPCAP:
            raise ResourceExceeded("reduction operation ceiling exceeded")
        return rk, rc

    def _spoly_reduced(self, i, j, lcm):
        ring = self.ring
        gi, gj = self.G[i], self.G[j]
        if self.fast:
            sk, sc, st = kernels.merge_sub(
                gi.keys, gi.coeffs, np.uint64(lcm - gi.lead),
                gj.keys, gj.coeffs, np.uint64(lcm - gj.lead),
                np.int64(1), np.int64(ring.p), np.int64(self.code),
                np.int64(ring.nvars))
            if st != kernels.OK:
                raise ResourceExceeded("monomial exponent overflow in S-polynomial")
            if len(sk) == 0:
                return ring.zero()
            rk, rc = self._reduce_arrays(sk, sc)
            return _from_arrays(ring, rk, rc)
        s = gi.poly.shift(lcm - gi.lead) - gj.poly.shift(lcm - gj.lead)
        return self._reduce_poly(s)

    def run(self, gens):
        ring, order = self.ring, self.order
        seen = set()
        start = []
        for g in gens:
            if g.is_zero():
                continue
            g = g.monic(order)
            fs = frozenset(g.terms.items())
            if fs in seen:
                continue
            seen.add(fs)
            start.append(g)
        start.sort(key=lambda f: _select_key(ring, order, f.lead_key(order)))
        for g in start:
            self._add_elem(_Elem(g, order, self.fast))
        pairs_done = 0
        while self.P:
            best = min(self.P, key=lambda pr: _select_key(ring, order, pr[2]) + (pr[0], pr[1]))
            self.P.remove(best)
            pairs_done += 1
            if pairs_done > self.max_pairs:
                raise ResourceExceeded("pair ceiling %d exceeded" % self.max_pairs)
            i, j, lcm = best
            r = self._spoly_reduced(i, j, lcm)
            if not r.is_zero():
                self._add_elem(_Elem(r.monic(order), order, self.fast))
        return self._finish()

    def _finish(self):
        ring, order = self.ring, self.order
        leads = [e.lead for e in self.G]
        keep = []
        for i, e in enumerate(self.G):
            li = e.lead
            redundant = any(
                k != i and ring.key_divides(leads[k], li)
                and (leads[k] != li or k < i)
                for k in range(len(leads)))
            if not redundant:
                keep.append(e)
        self.G = keep
        self._flat = None
        out = []
        for i in range(len(self.G)):
            r = self._reduce_poly(self.G[i].poly, skip=i)
            out.append(r.monic(order))
        out.sort(key=lambda f: _select_key(ring, order, f.lead_key(order)))
        return out


def _select_key(ring, order, key):
    return (ring.key_degree(key), ring.okey(key, order))


def _reduce_fast(f, elems, ring, order, code, opcap):
    if not elems or f.is_zero():
        return f
    keys, coeffs = _to_arrays(f, order)
    lens = np.array([len(e.keys) for e in elems], dtype=np.int64)
    offs = np.zeros(len(elems), dtype=np.int64)
    if len(elems) > 1:
        offs[1:] = np.cumsum(lens)[:-1]
    bk = np.concatenate([e.keys for e in elems])
    bc = np.concatenate([e.coeffs for e in elems])
    leads = np.array([e.lead for e in elems], dtype=np.uint64)
    rk, rc, st, _ = kernels.reduce_full(
        keys, coeffs, bk, bc, offs, lens, leads,
        np.int64(ring.p), np.int64(code), np.int64(ring.nvars), np.int64(opcap))
    if st == kernels.OVERFLOW:
        raise ResourceExceeded("monomial exponent overflow during reduction")
    if st == kernels.OPCAP:
        raise ResourceExceeded("reduction operation ceiling exceeded")
    return _from_arrays(ring, rk, rc)


def _reduce_dict(terms, basis, ring, order):
    """Generic full reduction on dict polynomials (wide rings, odd orders)."""
    p = ring.p
    work = dict(terms)
    rem = {}
    while work:
        top = max(work, key=lambda k: ring.okey(k, order))
        c = work.pop(top)
        hit = None
        for lk, lterms in basis:
            if ring.key_divides(lk, top):
                hit = (lk, lterms)
                break
        if hit is None:
            rem[top] = c
            continue
        lk, lterms = hit
        shift = top - lk
        for k, v in lterms.items():
            if k == lk:
                continue
            nk = k + shift
            nv = (work.get(nk, 0) - c * v) % p
            if nv:
                work[nk] = nv
            elif nk in work:
                del work[nk]
    return rem


def normal_form(f, basis, order=None):
    """Remainder of f on full reduction against the given polynomials."""
    ring = f.ring
    order = order or ring.order
    live = []
    for g in basis:
        if g.ring is not ring:
            raise RingMismatch("basis polynomial from a different ring")
        if not g.is_zero():
            live.append(g.monic(order))
    if not live or f.is_zero():
        return f
    code = order.fast_code(ring.nvars) if ring.fast else None
    if code is not None:
        elems = [_Elem(g, order, True) for g in live]
        return _reduce_fast(f, elems, ring, order, code, DEFAULT_OPCAP)
    terms = _reduce_dict(f.terms, [(g.lead_key(order), g.terms) for g in live],
                         ring, order)
    return Polynomial(ring, terms)


class GradedBasis:
    """Echelonized basis of the degree-d slice of an ideal."""

    __slots__ = ("ring", "degree", "matrix", "pivots", "basis")

    def __init__(self, ring, degree, rows):
        ncols = len(ring.monomials(degree))
        if len(rows) == 0:
            mat = np.zeros((0, ncols), dtype=np.int64)
        else:
            mat = np.asarray(rows, dtype=np.int64) % ring.p
        red, piv = linalg.rref(mat, ring.p)
        self.ring = ring
        self.degree = degree
        self.matrix = red[:len(piv)]
        self.pivots = piv
        self.basis = [ring.from_vec(r, degree) for r in self.matrix]

    @property
    def dim(self):
        return len(self.pivots)

    def contains(self, f):
        if f.is_zero():
            return True
        if not f.is_homogeneous() or f.degree() != self.degree:
            return False
        v = self.ring.to_vec(f, self.degree)
        return not linalg.residual(self.matrix, self.pivots, v, self.ring.p).any()

    def random_combination(self, rng):
        """Random field-coefficient combination of the basis rows."""
        assert self.dim > 0
        p = self.ring.p
        while True:
            co = [rng.randrange(p) for _ in range(self.dim)]
            if any(co):
                break
        v = np.zeros(self.matrix.shape[1], dtype=np.int64)
        for c, row in zip(co, self.matrix):
            v = (v + c * row) % p
        return self.ring.from_vec(v, self.degree)

    def __repr__(self):
        return "GradedBasis(degree=%d, dim=%d)" % (self.degree, self.dim)


class Ideal:
    """Ideal with a per-order cache of reduced Groebner bases."""

    __slots__ = ("ring", "generators", "_gb_cache", "_graded_cache", "_lock",
                 "_hs_cache")

    def __init__(self, ring, generators):
        gens = []
        for g in generators:
            if g.ring is not ring:
                raise RingMismatch("generator from a different ring")
            if not g.is_zero():
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._gb_cache = {}
        self._graded_cache = {}
        self._hs_cache = None
        self._lock = threading.Lock()

    @classmethod
    def from_strings(cls, ring, texts):
        return cls(ring, [ring.parse(t) for t in texts])

    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.generators)

    def groebner_basis(self, order=None, max_pairs=DEFAULT_MAX_PAIRS):
        order = order or self.ring.order
        with self._lock:
            got = self._gb_cache.get(order)
            if got is None:
                eng = _Engine(self.ring, order, max_pairs, DEFAULT_OPCAP)
                got = eng.run(list(self.generators))
                self._gb_cache[order] = got
            return got

    def contains(self, f):
        if f.ring is not self.ring:
            raise RingMismatch("membership test across rings")
        return normal_form(f, self.groebner_basis()).is_zero()

    def contains_ideal(self, other):
        return all(self.contains(g) for g in other.generators)

    def __repr__(self):
        return "Ideal(%d generators over GF(%d))" % (len(self.generators), self.ring.p)


def groebner_basis(I, order=None, max_pairs=DEFAULT_MAX_PAIRS):
    return I.groebner_basis(order, max_pairs)


def graded_piece(I, d):
    """Echelon basis of I_d, from monomial multiples of the reduced GB."""
    assert d >= 0
    with I._lock:
        got = I._graded_cache.get(d)
    if got is not None:
        return got
    ring = I.ring
    assert I.is_homogeneous(), "graded piece of an inhomogeneous ideal"
    gb = I.groebner_basis()
    idx = ring.mono_index(d)
    rows = []
    for g in gb:
        dg = g.degree()
        if dg > d:
            continue
        for m in ring.monomials(d - dg):
            row = np.zeros(len(idx), dtype=np.int64)
            for k, c in g.terms.items():
                row[idx[k + m]] = c
            rows.append(row)
    got = GradedBasis(ring, d, rows)
    with I._lock:
        I._graded_cache[d] = got
    return got


def linear_multiples(gb):
    """Span of {x_i * b} in degree d+1 for b in a degree-d GradedBasis."""
    ring = gb.ring
    d = gb.degree
    ncols = len(ring.monomials(d + 1))
    rows = np.zeros((ring.nvars * gb.dim, ncols), dtype=np.int64)
    r = 0
    for i in range(ring.nvars):
        mp = ring.mulvar_map(d, i)
        for b in gb.matrix:
            rows[r][mp] = b
            r += 1
    return GradedBasis(ring, d + 1, rows)


def minimal_generators(I, ceiling=None):
    """A minimal homogeneous generating set, degree by degree.

    With the default ceiling (the largest input-generator degree) the returned
    list generates exactly the same ideal.
    """
    assert I.is_homogeneous()
    ring = I.ring
    if not I.generators:
        return []
    if graded_piece(I, 0).dim:
        return [ring.one()]
    if ceiling is None:
        ceiling = max(g.degree() for g in I.generators)
    out = []
    prev = None
    for d in range(1, ceiling + 1):
        cur = graded_piece(I, d)
        if cur.dim == 0:
            prev = cur
            continue
        if prev is not None and prev.dim:
            lm = linear_multiples(prev)
            span = linalg.IncrementalSpan(cur.matrix.shape[1], ring.p,
                                          lm.matrix, lm.pivots)
        else:
            span = linalg.IncrementalSpan(cur.matrix.shape[1], ring.p)
        for i, row in enumerate(cur.matrix):
            if span.add(row):
                out.append(cur.basis[i])
        prev = cur
    return out


def minimal_generator_degrees(I, ceiling=DEFAULT_GEN_CEILING):
    """Counts of new ideal generators per degree, up to the ceiling."""
    assert I.is_homogeneous()
    out = {}
    prev = None
    for d in range(1, ceiling + 1):
        cur = graded_piece(I, d)
        old = linear_multiples(prev).dim if prev is not None and prev.dim else 0
        fresh = cur.dim - old
        assert fresh >= 0
        if fresh:
            out[d] = fresh
        prev = cur
    tail = max((g.degree() for g in I.generators), default=0)
    if out.get(ceiling) or tail > ceiling:
        warnings.warn(
            "generators may still appear beyond degree %d" % ceiling,
            CeilingTooLow, stacklevel=2)
    return out
