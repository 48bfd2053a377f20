"""Rings, monomial orders, and sparse polynomials over GF(p).

Monomials are packed integers: exponent of variable i in byte i, total degree
in the byte above the variables. Rings with at most 7 variables fit in 64 bits
(7-bit fields, guard bits free for the SWAR divisibility test) and feed the
numba kernel; wider rings use the same layout on Python ints.
"""

import itertools
import re

import numpy as np

from .errors import (DegreeMismatch, PolySyntaxError, RingMismatch,
                     UnknownVariable)
from .field import PrimeFieldConfig

FAST_MAXVARS = 7
FIELD_LIMIT = 127
DEG_SHIFT = 8 * FAST_MAXVARS
MASK56 = (1 << DEG_SHIFT) - 1
GUARD = 0x8080808080808080

GREVLEX_CODE, LEX_CODE, BLOCK1_CODE = 0, 1, 2


class MonomialOrder:
    """grevlex, lex, or a two-block order (first `split` variables dominate)."""

    __slots__ = ("kind", "split")

    def __init__(self, kind, split=0):
        assert kind in ("grevlex", "lex", "block")
        if kind == "block":
            assert split >= 1
        self.kind = kind
        self.split = split if kind == "block" else 0

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder)
                and other.kind == self.kind and other.split == self.split)

    def __hash__(self):
        return hash((self.kind, self.split))

    def __repr__(self):
        if self.kind == "block":
            return "block(%d)" % self.split
        return self.kind

    def fast_code(self, nvars):
        """Numba kernel code, or None when this order needs the generic path."""
        if nvars > FAST_MAXVARS:
            return None
        if self.kind == "grevlex":
            return GREVLEX_CODE
        if self.kind == "lex":
            return LEX_CODE
        if self.kind == "block" and self.split == 1:
            return BLOCK1_CODE
        return None


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def block_order(split):
    return MonomialOrder("block", split)


def _grevlex_tuple(exps):
    return (sum(exps),) + tuple(-e for e in reversed(exps))


class PolyRing:
    """Polynomial ring k[names] over a prime field with a default order."""

    def __init__(self, names, field, order=GREVLEX):
        if isinstance(field, int):
            field = PrimeFieldConfig(field)
        names = list(names)
        assert len(set(names)) == len(names), "duplicate variable names"
        self.names = names
        self.nvars = len(names)
        self.field = field
        self.p = field.p
        self.order = order
        self.fast = self.nvars <= FAST_MAXVARS
        self.deg_shift = DEG_SHIFT if self.fast else 8 * self.nvars
        self._name_index = {n: i for i, n in enumerate(names)}
        self._mono_cache = {}
        self._index_cache = {}
        self._mulvar_cache = {}

    # -- packed monomial helpers -------------------------------------------

    def pack(self, exps):
        assert len(exps) == self.nvars
        d = 0
        key = 0
        for i, e in enumerate(exps):
            assert 0 <= e
            key |= e << (8 * i)
            d += e
        if self.fast:
            assert all(e <= FIELD_LIMIT for e in exps) and d <= FIELD_LIMIT, \
                "exponent overflow in fast monomial packing"
        else:
            assert all(e <= 255 for e in exps) and d <= 255
        return key | (d << self.deg_shift)

    def unpack(self, key):
        return tuple((key >> (8 * i)) & 0xFF for i in range(self.nvars))

    def key_degree(self, key):
        return key >> self.deg_shift

    def mul_keys(self, a, b):
        k = a + b
        if self.fast and k & GUARD:
            raise OverflowError("monomial exponent overflow")
        return k

    def div_keys(self, a, b):
        """a / b; caller must know b divides a."""
        return a - b

    def key_divides(self, a, b):
        """True when monomial a divides monomial b."""
        if self.fast:
            return ((b | GUARD) - a) & GUARD == GUARD
        ta, tb = self.unpack(a), self.unpack(b)
        return all(x <= y for x, y in zip(ta, tb))

    def key_lcm(self, a, b):
        ta, tb = self.unpack(a), self.unpack(b)
        return self.pack(tuple(max(x, y) for x, y in zip(ta, tb)))

    def key_coprime(self, a, b):
        ta, tb = self.unpack(a), self.unpack(b)
        return all(x == 0 or y == 0 for x, y in zip(ta, tb))

    def okey(self, key, order=None):
        """Sort key: larger okey = larger monomial in the order."""
        order = order or self.order
        if self.fast:
            code = order.fast_code(self.nvars)
            if code == GREVLEX_CODE:
                return ((key >> DEG_SHIFT) << DEG_SHIFT) | (MASK56 - (key & MASK56))
            if code == LEX_CODE:
                ok = 0
                for i in range(self.nvars):
                    ok = (ok << 8) | ((key >> (8 * i)) & 0xFF)
                return ok
            if code == BLOCK1_CODE:
                et = key & 0xFF
                xdeg = (key >> DEG_SHIFT) - et
                xlow = (key >> 8) & ((1 << 48) - 1)
                return (et << 55) | (xdeg << 48) | (((1 << 48) - 1) - xlow)
        exps = self.unpack(key)
        if order.kind == "grevlex":
            return _grevlex_tuple(exps)
        if order.kind == "lex":
            return tuple(exps)
        s = order.split
        return (_grevlex_tuple(exps[:s]), _grevlex_tuple(exps[s:]))

    def okey_array(self, keys, order=None):
        """Vectorized okey for uint64 key arrays (fast rings only)."""
        order = order or self.order
        code = order.fast_code(self.nvars)
        assert code is not None
        k = keys.astype(np.uint64)
        if code == GREVLEX_CODE:
            m56 = np.uint64(MASK56)
            return ((k >> np.uint64(DEG_SHIFT)) << np.uint64(DEG_SHIFT)) | (m56 - (k & m56))
        if code == LEX_CODE:
            ok = np.zeros_like(k)
            for i in range(self.nvars):
                ok = (ok << np.uint64(8)) | ((k >> np.uint64(8 * i)) & np.uint64(0xFF))
            return ok
        et = k & np.uint64(0xFF)
        xdeg = (k >> np.uint64(DEG_SHIFT)) - et
        m48 = np.uint64((1 << 48) - 1)
        xlow = (k >> np.uint64(8)) & m48
        return (et << np.uint64(55)) | (xdeg << np.uint64(48)) | (m48 - xlow)

    # -- monomial enumeration ----------------------------------------------

    def monomials(self, d):
        """Packed monomials of total degree d, sorted descending in the default order."""
        got = self._mono_cache.get(d)
        if got is None:
            keys = [self.pack(e) for e in _exponents(self.nvars, d)]
            keys.sort(key=lambda k: self.okey(k), reverse=True)
            got = tuple(keys)
            self._mono_cache[d] = got
        return got

    def mono_index(self, d):
        got = self._index_cache.get(d)
        if got is None:
            got = {k: i for i, k in enumerate(self.monomials(d))}
            self._index_cache[d] = got
        return got

    def dim_degree(self, d):
        """dim of the space of degree-d forms."""
        if d < 0:
            return 0
        n = self.nvars
        num = 1
        for i in range(1, n):
            num = num * (d + i)
        den = 1
        for i in range(1, n):
            den *= i
        return num // den

    def mulvar_map(self, d, i):
        """Index map: position of m*x_i in monomials(d+1) for m in monomials(d)."""
        got = self._mulvar_cache.get((d, i))
        if got is None:
            idx = self.mono_index(d + 1)
            shift = self.pack(tuple(1 if j == i else 0 for j in range(self.nvars)))
            got = np.array([idx[k + shift] for k in self.monomials(d)], dtype=np.int64)
            self._mulvar_cache[(d, i)] = got
        return got

    # -- polynomial constructors -------------------------------------------

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, c):
        c %= self.p
        return Polynomial(self, {0: c} if c else {})

    def var(self, i):
        return self.monomial(tuple(1 if j == i else 0 for j in range(self.nvars)), 1)

    def gens(self):
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, exps, c=1):
        c %= self.p
        return Polynomial(self, {self.pack(exps): c} if c else {})

    def from_terms(self, terms):
        clean = {}
        for k, c in terms.items():
            c %= self.p
            if c:
                clean[k] = c
        return Polynomial(self, clean)

    def from_vec(self, vec, d):
        monos = self.monomials(d)
        terms = {}
        for i, c in enumerate(vec):
            c = int(c) % self.p
            if c:
                terms[monos[i]] = c
        return Polynomial(self, terms)

    def to_vec(self, f, d):
        assert f.ring is self
        idx = self.mono_index(d)
        v = np.zeros(len(idx), dtype=np.int64)
        for k, c in f.terms.items():
            assert self.key_degree(k) == d, "polynomial not homogeneous of degree %d" % d
            v[idx[k]] = c
        return v

    def basis_matrix(self, polys, d):
        """Stack to_vec rows for homogeneous degree-d polynomials."""
        m = np.zeros((len(polys), len(self.monomials(d))), dtype=np.int64)
        for r, f in enumerate(polys):
            idx = self.mono_index(d)
            for k, c in f.terms.items():
                m[r, idx[k]] = c
        return m

    def parse(self, text):
        return parse_polynomial(text, self)

    def map_poly(self, f, target, var_map=None):
        """Rename variable i of self to variable var_map[i] of target."""
        assert f.ring is self
        if var_map is None:
            var_map = [target._name_index[n] for n in self.names]
        terms = {}
        for k, c in f.terms.items():
            exps = self.unpack(k)
            tex = [0] * target.nvars
            for i, e in enumerate(exps):
                if e:
                    tex[var_map[i]] += e
            terms[target.pack(tuple(tex))] = c
        return Polynomial(target, terms)

    def __repr__(self):
        return "PolyRing(%s over %r, %r)" % (",".join(self.names), self.field, self.order)


def _exponents(n, d):
    if n == 1:
        yield (d,)
        return
    for e in range(d, -1, -1):
        for rest in _exponents(n - 1, d - e):
            yield (e,) + rest


class Polynomial:
    """Sparse polynomial: dict packed-monomial -> nonzero residue."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def is_zero(self):
        return not self.terms

    def degree(self):
        if not self.terms:
            return -1
        sh = self.ring.deg_shift
        return max(k >> sh for k in self.terms)

    def is_homogeneous(self):
        if not self.terms:
            return True
        sh = self.ring.deg_shift
        degs = {k >> sh for k in self.terms}
        return len(degs) == 1

    def _check(self, other):
        if self.ring is not other.ring:
            raise RingMismatch("polynomials from different rings")

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring is other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.ring), frozenset(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        self._check(other)
        p = self.ring.p
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = (out.get(k, 0) + c) % p
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return Polynomial(self.ring, out)

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, {k: p - c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            c = other % self.ring.p
            if c == 0:
                return self.ring.zero()
            p = self.ring.p
            return Polynomial(self.ring, {k: v * c % p for k, v in self.terms.items()})
        self._check(other)
        ring = self.ring
        p = ring.p
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for ka, ca in a.items():
            for kb, cb in b.items():
                k = ka + kb
                s = (out.get(k, 0) + ca * cb) % p
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        if ring.fast:
            for k in out:
                if k & GUARD:
                    raise OverflowError("monomial exponent overflow in product")
        return Polynomial(ring, out)

    __rmul__ = __mul__
    __radd__ = __add__

    def __rsub__(self, other):
        return (-self) + other

    def __pow__(self, e):
        assert e >= 0
        out = self.ring.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def lead_key(self, order=None):
        assert self.terms, "zero polynomial has no lead term"
        ring = self.ring
        return max(self.terms, key=lambda k: ring.okey(k, order))

    def lead_coeff(self, order=None):
        return self.terms[self.lead_key(order)]

    def monic(self, order=None):
        if not self.terms:
            return self
        inv = self.ring.field.inv(self.lead_coeff(order))
        return self * inv

    def coeff_of(self, exps):
        return self.terms.get(self.ring.pack(exps), 0)

    def shift(self, key, c=1):
        """Multiply by c * (monomial with packed key)."""
        p = self.ring.p
        c %= p
        out = {}
        for k, v in self.terms.items():
            out[k + key] = v * c % p
        if self.ring.fast:
            for k in out:
                if k & GUARD:
                    raise OverflowError("monomial exponent overflow")
        return Polynomial(self.ring, out)

    def partial(self, i):
        """Formal derivative with respect to variable i."""
        ring = self.ring
        p = ring.p
        out = {}
        step = 1 << (8 * i)
        dec = step | (1 << ring.deg_shift)
        for k, c in self.terms.items():
            e = (k >> (8 * i)) & 0xFF
            if e:
                nk = k - dec
                nc = c * e % p
                if nc:
                    out[nk] = nc
        return Polynomial(ring, out)

    def evaluate(self, point):
        ring = self.ring
        p = ring.p
        total = 0
        for k, c in self.terms.items():
            v = c
            for i in range(ring.nvars):
                e = (k >> (8 * i)) & 0xFF
                if e:
                    v = v * pow(point[i] % p, e, p) % p
            total = (total + v) % p
        return total

    def subs_linear(self, target, matrix):
        """Substitute x_i -> sum_j matrix[j][i] * y_j (y_j in target ring)."""
        ring = self.ring
        p = target.p
        mat = [[int(matrix[j][i]) % p for i in range(ring.nvars)]
               for j in range(target.nvars)]
        cols = []
        monomial_cols = True
        for i in range(ring.nvars):
            col = [(j, mat[j][i]) for j in range(target.nvars) if mat[j][i]]
            cols.append(col)
            if len(col) > 1:
                monomial_cols = False
        if monomial_cols:
            out = {}
            for k, c in self.terms.items():
                tex = [0] * target.nvars
                v = c
                ok = True
                for i in range(ring.nvars):
                    e = (k >> (8 * i)) & 0xFF
                    if not e:
                        continue
                    if not cols[i]:
                        ok = False
                        break
                    j, a = cols[i][0]
                    tex[j] += e
                    v = v * pow(a, e, p) % p
                if ok and v:
                    nk = target.pack(tuple(tex))
                    s = (out.get(nk, 0) + v) % p
                    if s:
                        out[nk] = s
                    elif nk in out:
                        del out[nk]
            return Polynomial(target, out)
        lin = [target.from_terms({target.pack(tuple(1 if jj == j else 0
                                                    for jj in range(target.nvars))): a
                                  for j, a in col})
               for col in cols]
        powers = [{0: target.one()} for _ in range(ring.nvars)]
        out = target.zero()
        for k, c in self.terms.items():
            prod = target.constant(c)
            for i in range(ring.nvars):
                e = (k >> (8 * i)) & 0xFF
                if not e:
                    continue
                cache = powers[i]
                if e not in cache:
                    q = cache[max(cache)]
                    for _ in range(max(cache), e):
                        q = q * lin[i]
                        cache[max(cache) + 1] = q
                prod = prod * cache[e]
            out = out + prod
        return out

    def __repr__(self):
        return render_polynomial(self)

    __str__ = __repr__


# -- text format -----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\^)|(\*)|(\+)|(-))")


def parse_polynomial(text, ring):
    """Parse the +/- separated term grammar; coefficients reduce mod p."""
    pos = 0
    n = len(text)
    tokens = []
    while pos < n:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            if text[pos:].strip():
                raise PolySyntaxError("unexpected character %r" % text[pos], pos)
            break
        tokens.append((m.lastindex, m.group(m.lastindex), m.start(m.lastindex)))
        pos = m.end()
    NUM, NAME, CARET, STAR, PLUS, MINUS = 1, 2, 3, 4, 5, 6

    result = ring.zero()
    i = 0
    first = True
    while i < len(tokens) or first:
        sign = 1
        if i < len(tokens) and tokens[i][0] in (PLUS, MINUS):
            if tokens[i][0] == MINUS:
                sign = -1
            i += 1
        elif not first:
            raise PolySyntaxError("expected + or - between terms",
                                  tokens[i][2] if i < len(tokens) else len(text))
        if i >= len(tokens):
            if first and not tokens:
                raise PolySyntaxError("empty polynomial text", 0)
            raise PolySyntaxError("dangling sign", len(text))
        first = False
        coeff = 1
        exps = [0] * ring.nvars
        expect_factor = True
        while True:
            kind, value, tpos = tokens[i]
            if kind == NUM:
                coeff *= int(value)
            elif kind == NAME:
                vi = ring._name_index.get(value)
                if vi is None:
                    raise UnknownVariable("unknown variable %r" % value, tpos)
                e = 1
                if i + 1 < len(tokens) and tokens[i + 1][0] == CARET:
                    if i + 2 >= len(tokens) or tokens[i + 2][0] != NUM:
                        raise PolySyntaxError("expected exponent after ^", tokens[i + 1][2])
                    e = int(tokens[i + 2][1])
                    i += 2
                exps[vi] += e
            else:
                raise PolySyntaxError("expected coefficient or variable", tpos)
            i += 1
            if i < len(tokens) and tokens[i][0] == STAR:
                i += 1
                if i >= len(tokens):
                    raise PolySyntaxError("dangling *", len(text))
                continue
            break
        result = result + ring.monomial(tuple(exps), sign * coeff)
        if i >= len(tokens):
            break
    return result


def render_polynomial(f):
    """Canonical text form; balanced signed coefficients, default-order sorted."""
    ring = f.ring
    if not f.terms:
        return "0"
    keys = sorted(f.terms, key=lambda k: ring.okey(k), reverse=True)
    p = ring.p
    parts = []
    for k in keys:
        c = f.terms[k]
        signed = c if c <= p // 2 else c - p
        neg = signed < 0
        a = abs(signed)
        exps = ring.unpack(k)
        factors = []
        for i, e in enumerate(exps):
            if e == 1:
                factors.append(ring.names[i])
            elif e > 1:
                factors.append("%s^%d" % (ring.names[i], e))
        if not factors:
            body = str(a)
        elif a == 1:
            body = "*".join(factors)
        else:
            body = "%d*%s" % (a, "*".join(factors))
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("-" if neg else "+") + body)
    return "".join(parts)


def require_same_ring(*polys):
    ring = polys[0].ring
    for f in polys[1:]:
        if f.ring is not ring:
            raise RingMismatch("polynomials from different rings")
    return ring


def require_equidegree(polys, degree=None):
    degs = {f.degree() for f in polys if not f.is_zero()}
    if len(degs) > 1 or (degree is not None and degs and degs != {degree}):
        raise DegreeMismatch("forms not homogeneous of one degree: %s" % sorted(degs))
