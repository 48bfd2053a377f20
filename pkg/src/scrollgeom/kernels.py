"""Numba kernels for polynomial reduction on packed 64-bit monomials.

Polynomials enter as parallel arrays (uint64 keys sorted descending in the
active order, int64 coefficients). Status codes: 0 ok, 1 exponent overflow,
2 operation ceiling hit.
"""

import numpy as np
from numba import njit

U_GUARD = np.uint64(0x8080808080808080)
U_MASK56 = np.uint64((1 << 56) - 1)
U_MASK48 = np.uint64((1 << 48) - 1)
U8 = np.uint64(8)
U55 = np.uint64(55)
U48 = np.uint64(48)
U56 = np.uint64(56)
UFF = np.uint64(0xFF)

OK, OVERFLOW, OPCAP = 0, 1, 2


@njit(cache=True)
def okey_u64(k, code, nvars):
    """Order key; larger means larger monomial."""
    if code == 0:
        return ((k >> U56) << U56) | (U_MASK56 - (k & U_MASK56))
    if code == 1:
        ok = np.uint64(0)
        for i in range(nvars):
            ok = (ok << U8) | ((k >> np.uint64(8 * i)) & UFF)
        return ok
    et = k & UFF
    xdeg = (k >> U56) - et
    xlow = (k >> U8) & U_MASK48
    return (et << U55) | (xdeg << U48) | (U_MASK48 - xlow)


@njit(cache=True)
def divides_u64(a, b):
    """True when monomial a divides monomial b (per-byte <=)."""
    return ((b | U_GUARD) - a) & U_GUARD == U_GUARD


@njit(cache=True)
def merge_sub(ak, ac, ashift, bk, bc, bshift, mult, p, code, nvars):
    """a * x^ashift - mult * b * x^bshift, arrays sorted desc; returns packed result."""
    na, nb = len(ak), len(bk)
    ok_a = np.empty(na, dtype=np.uint64)
    key_a = np.empty(na, dtype=np.uint64)
    for i in range(na):
        k = ak[i] + ashift
        if k & U_GUARD:
            return np.empty(0, dtype=np.uint64), np.empty(0, dtype=np.int64), OVERFLOW
        key_a[i] = k
        ok_a[i] = okey_u64(k, code, nvars)
    ok_b = np.empty(nb, dtype=np.uint64)
    key_b = np.empty(nb, dtype=np.uint64)
    for j in range(nb):
        k = bk[j] + bshift
        if k & U_GUARD:
            return np.empty(0, dtype=np.uint64), np.empty(0, dtype=np.int64), OVERFLOW
        key_b[j] = k
        ok_b[j] = okey_u64(k, code, nvars)
    out_k = np.empty(na + nb, dtype=np.uint64)
    out_c = np.empty(na + nb, dtype=np.int64)
    i = 0
    j = 0
    t = 0
    while i < na and j < nb:
        if ok_a[i] > ok_b[j]:
            out_k[t] = key_a[i]
            out_c[t] = ac[i]
            i += 1
            t += 1
        elif ok_a[i] < ok_b[j]:
            out_k[t] = key_b[j]
            out_c[t] = (-mult * bc[j]) % p
            j += 1
            t += 1
        else:
            c = (ac[i] - mult * bc[j]) % p
            if c:
                out_k[t] = key_a[i]
                out_c[t] = c
                t += 1
            i += 1
            j += 1
    while i < na:
        out_k[t] = key_a[i]
        out_c[t] = ac[i]
        i += 1
        t += 1
    while j < nb:
        out_k[t] = key_b[j]
        out_c[t] = (-mult * bc[j]) % p
        j += 1
        t += 1
    return out_k[:t], out_c[:t], OK


@njit(cache=True)
def reduce_full(fk, fc, bk, bc, offs, lens, leads, p, code, nvars, opcap):
    """Fully reduce f against a monic basis (flattened arrays); tail-reduces too.

    Returns (keys, coeffs, status, ops). Every monomial of the remainder is
    divisible by no basis lead.
    """
    nb = len(leads)
    cur_k = fk.copy()
    cur_c = fc.copy()
    rem_cap = len(fk) + 16
    rem_k = np.empty(rem_cap, dtype=np.uint64)
    rem_c = np.empty(rem_cap, dtype=np.int64)
    nrem = 0
    s = 0
    ops = 0
    while s < len(cur_k):
        top = cur_k[s]
        red = -1
        for i in range(nb):
            if divides_u64(leads[i], top):
                red = i
                break
        if red < 0:
            if nrem == rem_cap:
                rem_cap *= 2
                nk = np.empty(rem_cap, dtype=np.uint64)
                nc = np.empty(rem_cap, dtype=np.int64)
                nk[:nrem] = rem_k[:nrem]
                nc[:nrem] = rem_c[:nrem]
                rem_k = nk
                rem_c = nc
            rem_k[nrem] = top
            rem_c[nrem] = cur_c[s]
            nrem += 1
            s += 1
            continue
        shift = top - leads[red]
        mult = cur_c[s]
        o = offs[red]
        ln = lens[red]
        gk = bk[o + 1:o + ln]
        gc = bc[o + 1:o + ln]
        ops += ln
        if ops > opcap:
            return rem_k[:nrem], rem_c[:nrem], OPCAP, ops
        zshift = np.uint64(0)
        nk2, nc2, st = merge_sub(cur_k[s + 1:], cur_c[s + 1:], zshift,
                                 gk, gc, shift, mult, p, code, nvars)
        if st != OK:
            return rem_k[:nrem], rem_c[:nrem], st, ops
        cur_k = nk2
        cur_c = nc2
        s = 0
    return rem_k[:nrem], rem_c[:nrem], OK, ops


@njit(cache=True)
def warmup_kernel():
    k = np.array([np.uint64(2 << 56 | 2)], dtype=np.uint64)
    c = np.array([1], dtype=np.int64)
    offs = np.array([0], dtype=np.int64)
    lens = np.array([1], dtype=np.int64)
    leads = np.array([np.uint64(1 << 56 | 1)], dtype=np.uint64)
    rk, rc, st, ops = reduce_full(k, c, leads, c, offs, lens, leads,
                                  np.int64(7), np.int64(0), np.int64(1),
                                  np.int64(10 ** 9))
    return st
