"""Hilbert series, Hilbert polynomials, and scheme invariant reports."""

import math
import random
import sys
from fractions import Fraction

from .errors import SliceDegenerate
from .groebner import graded_piece, minimal_generator_degrees
from .poly import Polynomial

sys.setrecursionlimit(20000)

REPORT_HF_CEILING = 6
SLICE_RETRIES = 5


def _minimalize_keys(ring, keys):
    keys = sorted(set(keys), key=ring.key_degree)
    out = []
    for k in keys:
        if not any(ring.key_divides(m, k) for m in out):
            out.append(k)
    return out


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_add(a, b, scale=1, shift=0):
    n = max(len(a), shift + len(b))
    out = list(a) + [0] * (n - len(a))
    for j, y in enumerate(b):
        out[shift + j] += scale * y
    return out


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _numerator(ring, keys, memo):
    """Hilbert series numerator of R/(monomial ideal) by pivot recursion."""
    if not keys:
        return [1]
    tag = frozenset(keys)
    got = memo.get(tag)
    if got is not None:
        return got
    n = ring.nvars
    counts = [0] * n
    for k in keys:
        for i in range(n):
            if (k >> (8 * i)) & 0xFF:
                counts[i] += 1
    pairwise_ok = True
    for a in range(len(keys)):
        for b in range(a + 1, len(keys)):
            if not ring.key_coprime(keys[a], keys[b]):
                pairwise_ok = False
                break
        if not pairwise_ok:
            break
    if pairwise_ok:
        out = [1]
        for k in keys:
            d = ring.key_degree(k)
            if d == 0:
                out = [0]
                break
            f = [0] * (d + 1)
            f[0], f[d] = 1, -1
            out = _poly_mul(out, f)
        out = _trim(out)
        memo[tag] = out
        return out
    piv = max(range(n), key=lambda i: counts[i])
    pk = ring.pack(tuple(1 if i == piv else 0 for i in range(n)))
    plus = _minimalize_keys(ring, [pk] + [k for k in keys if not (k >> (8 * piv)) & 0xFF])
    dec = (1 << (8 * piv)) | (1 << ring.deg_shift)
    colon = _minimalize_keys(
        ring, [k - dec if (k >> (8 * piv)) & 0xFF else k for k in keys])
    out = _poly_add(_numerator(ring, plus, memo), _numerator(ring, colon, memo),
                    shift=1)
    out = _trim(out)
    memo[tag] = out
    return out


def series_numerator(I):
    """Numerator of the Hilbert series of R/I over (1-t)^nvars, from GB leads."""
    with I._lock:
        if I._hs_cache is not None:
            return I._hs_cache
    gb = I.groebner_basis()
    ring = I.ring
    leads = [g.lead_key() for g in gb]
    num = _numerator(ring, _minimalize_keys(ring, leads), {})
    with I._lock:
        I._hs_cache = num
    return num


def _comb0(m, k):
    return math.comb(m, k) if m >= k else 0


def hilbert_function_series(I, d):
    """HF(R/I, d) evaluated from the lead-term Hilbert series."""
    num = series_numerator(I)
    n = I.ring.nvars
    return sum(a * _comb0(d - i + n - 1, n - 1) for i, a in enumerate(num) if a)


def hilbert_function(I, d):
    """HF(R/I, d) = dim R_d - dim I_d via graded pieces."""
    return I.ring.dim_degree(d) - graded_piece(I, d).dim


def _binom_poly(n, offset):
    """C(t + offset, n) as a coefficient list in t, exact rationals."""
    coeffs = [Fraction(1)]
    for j in range(n):
        # multiply by (t + offset - j)
        c = Fraction(offset - j)
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for i, a in enumerate(coeffs):
            nxt[i] += a * c
            nxt[i + 1] += a
        coeffs = nxt
    inv = Fraction(1, math.factorial(n))
    return [a * inv for a in coeffs]


def hilbert_polynomial(I):
    """Coefficients [c0, c1, ...] of the Hilbert polynomial of R/I."""
    num = series_numerator(I)
    n = I.ring.nvars
    hp = [Fraction(0)]
    for i, a in enumerate(num):
        if a:
            hp = _poly_add(hp, [Fraction(a) * c for c in _binom_poly(n - 1, n - 1 - i)])
    while len(hp) > 1 and hp[-1] == 0:
        hp.pop()
    if hp == [Fraction(0)]:
        return []
    start = max([g.degree() for g in I.generators] + [1])
    for d0 in range(start + 1, start + 60):
        if all(_eval_poly(hp, d) == hilbert_function_series(I, d)
               for d in (d0, d0 + 1, d0 + 2)):
            return hp
    raise AssertionError("Hilbert polynomial never matched the Hilbert function")


def _eval_poly(coeffs, x):
    v = Fraction(0)
    for c in reversed(coeffs):
        v = v * x + c
    return v


def projective_dimension(hp):
    return len(hp) - 1 if hp else -1


def scheme_degree(hp):
    if not hp:
        return 0
    dim = len(hp) - 1
    deg = hp[-1] * math.factorial(dim)
    assert deg.denominator == 1 and deg >= 1
    return int(deg)


class SchemeReport:
    """Dimension, degree, sectional genus, Hilbert data of a projective scheme."""

    __slots__ = ("dim", "degree", "sectional_genus", "hf", "gen_degrees")

    def __init__(self, dim, degree, sectional_genus, hf, gen_degrees):
        self.dim = dim
        self.degree = degree
        self.sectional_genus = sectional_genus
        self.hf = hf
        self.gen_degrees = gen_degrees

    def to_json_dict(self):
        return {
            "dim": self.dim,
            "degree": self.degree,
            "sectional_genus": self.sectional_genus,
            "hf": {str(d): v for d, v in sorted(self.hf.items())},
            "gen_degrees": {str(d): v for d, v in sorted(self.gen_degrees.items())},
        }

    def __repr__(self):
        bits = ["dim=%d" % self.dim, "degree=%d" % self.degree]
        if self.sectional_genus is not None:
            bits.append("genus=%d" % self.sectional_genus)
        return "SchemeReport(%s)" % ", ".join(bits)


def random_linear_form(ring, rng):
    while True:
        co = [rng.randrange(ring.p) for _ in range(ring.nvars)]
        if any(co):
            return ring.from_terms(
                {ring.pack(tuple(1 if j == i else 0 for j in range(ring.nvars))): c
                 for i, c in enumerate(co) if c})


def sectional_genus(I, degree, seed):
    """Arithmetic genus of the double generic hyperplane slice of a 3-fold in P5."""
    from .idealops import saturate_irrelevant
    from .groebner import Ideal
    ring = I.ring
    assert ring.nvars == 6
    last_err = None
    for attempt in range(SLICE_RETRIES):
        rng = random.Random(1000003 * seed + 7919 * attempt + 1)
        cuts = [random_linear_form(ring, rng), random_linear_form(ring, rng)]
        sliced = Ideal(ring, list(I.generators) + cuts)
        curve = saturate_irrelevant(sliced)
        hp = hilbert_polynomial(curve)
        if projective_dimension(hp) == 1 and scheme_degree(hp) == degree:
            g = 1 - hp[0]
            assert g.denominator == 1
            return int(g)
        last_err = SliceDegenerate(
            "random slice gave dim %d degree %d, wanted curve of degree %d"
            % (projective_dimension(hp), scheme_degree(hp), degree))
    raise last_err


def scheme_report(I, seed=0, hf_ceiling=REPORT_HF_CEILING,
                  gen_ceiling=REPORT_HF_CEILING, with_genus=True):
    """Full invariant report; sectional genus only for 3-folds in P5."""
    import warnings as _w
    hp = hilbert_polynomial(I)
    dim = projective_dimension(hp)
    deg = scheme_degree(hp)
    hf = {d: hilbert_function(I, d) for d in range(hf_ceiling + 1)}
    with _w.catch_warnings():
        _w.simplefilter("ignore")
        gens = minimal_generator_degrees(I, ceiling=gen_ceiling)
    genus = None
    if with_genus and dim == 3 and I.ring.nvars == 6:
        genus = sectional_genus(I, deg, seed)
    return SchemeReport(dim, deg, genus, hf, gens)
