"""Double Grothendieck polynomials, stable limits and determinant formulas.

The window polynomial for the longest element is a product of linear factors;
everything else descends from it by isobaric divided differences.  Stable
limits are computed with a degree band: at each chain node only terms within
D - length(target) degrees above the node's own length can influence the
final degree-D truncation, and each divided difference consumes exactly one
degree of the band.
"""

import threading
from dataclasses import dataclass

from . import gamma, kernel
from .polyzx import MultiPoly, det, divided_difference, h_mod
from .shapes import (
    Partition,
    ascents,
    conjugate,
    longest_perm,
    partition,
    perm,
    perm_in_window,
    perm_length,
    perm_mul_s,
    shift_perm,
    subpartitions,
    weight,
)

_lock = threading.Lock()
_exact_memo: dict = {}  # (n, chain, window) -> MultiPoly
_band_memo: dict = {}  # (n, k_vars, window) -> (band, MultiPoly)


def clear_caches():
    with _lock:
        _exact_memo.clear()
        _band_memo.clear()


@dataclass(frozen=True)
class GrothPoly:
    w: tuple
    n: int
    value: MultiPoly


def _top_product(n: int, k_vars=None, cutoff=None) -> MultiPoly:
    """The longest element's polynomial: prod over i+j <= n of x_i + y_j - x_i y_j.

    Factors whose y-variable is beyond k_vars collapse to x_i (the variable is
    set to zero up front; divided differences never touch y, so this is exact).
    """
    # width n in x: the descent applies pi_{n-1}, which swaps x_{n-1} and x_n
    # even though neither the top product nor any result depends on x_n
    k = n - 1 if k_vars is None else k_vars
    acc = MultiPoly.const(1, n, k)
    for i in range(1, n):
        for j in range(1, n - i + 1):
            if j > k:
                f = MultiPoly.xvar(i, n, k)
            else:
                xi = MultiPoly.xvar(i, n, k)
                yj = MultiPoly.yvar(j, n, k)
                f = xi + yj - xi * yj
            acc = acc.mul(f, cutoff=cutoff)
    return acc


def _descend_exact(window, n: int, chain: str) -> MultiPoly:
    key = (n, chain, window)
    with _lock:
        if key in _exact_memo:
            return _exact_memo[key]
    asc = ascents(window)
    if not asc:
        value = _top_product(n)
    else:
        i = asc[0] if chain == "smallest" else asc[-1]
        parent = list(window)
        parent[i - 1], parent[i] = parent[i], parent[i - 1]
        value = divided_difference(_descend_exact(tuple(parent), n, chain), i)
    with _lock:
        _exact_memo[key] = value
    return value


def groth_in_window(w, n: int, chain: str = "smallest") -> MultiPoly:
    """The double Grothendieck polynomial of w presented in the window 1..n."""
    value = _descend_exact(perm_in_window(perm(w), n), n, chain)
    return value.restrict(n - 1, n - 1)


def groth_double(w, chain: str = "smallest") -> GrothPoly:
    w = perm(w)
    n = max(len(w), 1)
    return GrothPoly(w, n, groth_in_window(w, n, chain))


def _descend_band(window, n: int, k_vars: int, band: int) -> MultiPoly:
    """Window polynomial, correct up to total degree length(window) + band,
    with y-variables beyond k_vars set to zero."""
    key = (n, k_vars, window)
    with _lock:
        hit = _band_memo.get(key)
    if hit is not None and hit[0] >= band:
        return hit[1].truncate(perm_length(window) + band)
    asc = ascents(window)
    if not asc:
        value = _top_product(n, k_vars, cutoff=perm_length(window) + band)
    else:
        i = asc[0]
        parent = list(window)
        parent[i - 1], parent[i] = parent[i], parent[i - 1]
        cutoff = perm_length(window) + band
        value = divided_difference(
            _descend_band(tuple(parent), n, k_vars, band + 1), i, cutoff=cutoff
        )
    with _lock:
        hit = _band_memo.get(key)
        if hit is None or hit[0] < band:
            _band_memo[key] = (band, value)
    return value


def stable_truncation(w, m_vars: int, k_vars: int, D: int) -> MultiPoly:
    """Degree-<=D part of the stable limit G_w(x1..m_vars; y1..k_vars).

    Shifts w by 1^m for increasing m until two consecutive restricted
    truncations agree; the stability theorem guarantees termination, so the
    iteration cap only signals a bug.
    """
    w = perm(w)
    band = max(D - perm_length(w), 0)
    cap = D + perm_length(w) + len(w) + 1
    prev = None
    for m in range(cap + 1):
        u = shift_perm(w, m)
        n = max(len(u), m_vars + 1, 1)
        value = _descend_band(perm_in_window(u, n), n, k_vars, band)
        cur = value.truncate(D).restrict(m_vars, k_vars).widen(m_vars, k_vars)
        if prev is not None and cur == prev:
            return cur
        prev = cur
    raise RuntimeError(f"stabilization did not occur within {cap} shifts")


def eval_G_single(lam, n: int) -> MultiPoly:
    """G_lambda(x1..xn) as the signed sum over set-valued tableaux."""
    lam = partition(lam)
    counts = kernel.signed_monomial_counts(
        (0,) * len(lam), lam, n, weight(lam)
    )
    return MultiPoly(n, 0, dict(counts))


def eval_G_double(lam, m: int, k: int) -> MultiPoly:
    """G_lambda(x1..xm; y1..yk) = sum d^lambda_{sigma,tau} G_sigma(x) G_tau'(y)."""
    lam = partition(lam)
    acc = MultiPoly(m, k)
    for sigma in subpartitions(lam):
        fx = eval_G_single(sigma, m)
        if fx.is_zero():
            continue
        fx = fx.widen(m, k)
        for tau in subpartitions(lam):
            d = gamma.coprod_coeff(sigma, tau, lam)
            if not d:
                continue
            fy = eval_G_single(conjugate(tau), k)
            if fy.is_zero():
                continue
            fy = MultiPoly(m, k, {(0,) * m + e: c for e, c in fy.terms.items()})
            acc = acc + d * fx * fy
    return acc


def lenart_det(I, n: int) -> MultiPoly:
    """The determinant form: det(h_{I_i+j-1}(x1..xn / 1^(i-1)))_{n x n}."""
    I = tuple(int(x) for x in I)
    if n <= len(I):
        raise ValueError(f"need n > {len(I)} entries, got n = {n}")
    for i, part in enumerate(I, start=1):
        if n < i - part:
            raise ValueError(f"need n >= {i - part} for entry {i} of {I}")
    # rows are listed bottom-up: the row for I_i carries the modifier 1^(i-1),
    # and this ordering normalizes the overall sign so that partitions give
    # G_lambda itself rather than (-1)^(n(n-1)/2) times it
    matrix = [
        [h_mod((I[i] if i < len(I) else 0) + j, n, i) for j in range(n)]
        for i in reversed(range(n))
    ]
    return det(matrix)
