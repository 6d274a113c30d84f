"""The bialgebra spanned by the stable basis {G_lambda}.

Products come from counting lattice set-valued tableaux on two-corner skew
shapes, coproducts from the rectangle construction, and arbitrary integer
sequences are straightened into the basis.  All functions are pure; the memo
tables are concurrency-safe (identical-value overwrites are harmless).
"""

import threading
from math import comb

from . import kernel
from .shapes import (
    Partition,
    SkewShape,
    contains,
    partition,
    star,
    strip_kind,
    subpartitions,
    weight,
)

_lock = threading.Lock()
_lr_table_cache: dict = {}  # (lam, mu) -> {nu: coeff}
_straighten_cache: dict = {}  # sequence -> {partition: coeff}


def clear_caches():
    with _lock:
        _lr_table_cache.clear()
        _straighten_cache.clear()


# ---------------------------------------------------------------------------
# elements


class GammaElement:
    """Finitely supported integer combination of basis elements G_lambda."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {p: c for p, c in (coeffs or {}).items() if c}

    @staticmethod
    def basis(lam) -> "GammaElement":
        return GammaElement({partition(lam): 1})

    @staticmethod
    def one() -> "GammaElement":
        return GammaElement({(): 1})

    def __eq__(self, other):
        if not isinstance(other, GammaElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        raise TypeError("GammaElement is not hashable")

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            v = out.get(p, 0) + c
            if v:
                out[p] = v
            elif p in out:
                del out[p]
        return GammaElement(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c: int) -> "GammaElement":
        return GammaElement({p: c * v for p, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return product(self, other)

    __rmul__ = __mul__

    def max_weight(self) -> int:
        return max((weight(p) for p in self.coeffs), default=0)

    def truncate(self, cutoff: int) -> "GammaSeries":
        return GammaSeries(
            {p: c for p, c in self.coeffs.items() if weight(p) <= cutoff}, cutoff
        )

    def sorted_items(self):
        return sorted(self.coeffs.items(), key=lambda t: (weight(t[0]), t[0]))

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        chunks = []
        for p, c in self.sorted_items():
            body = "G[" + ",".join(str(x) for x in p) + "]"
            if abs(c) != 1:
                body = f"{abs(c)}*{body}"
            chunks.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(chunks)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self):
        return f"GammaElement({self.to_text()})"


class GammaSeries:
    """Element of the degree completion, known only up to weight `cutoff`.

    Arithmetic refuses mixed cutoffs; re_truncate explicitly before mixing.
    """

    __slots__ = ("coeffs", "cutoff")

    def __init__(self, coeffs, cutoff: int):
        self.coeffs = {p: c for p, c in coeffs.items() if c and weight(p) <= cutoff}
        self.cutoff = cutoff

    def _check(self, other):
        if self.cutoff != other.cutoff:
            raise ValueError(
                f"mixed cutoffs {self.cutoff} vs {other.cutoff}; re_truncate first"
            )

    def __eq__(self, other):
        if not isinstance(other, GammaSeries):
            return NotImplemented
        self._check(other)
        return self.coeffs == other.coeffs

    def __hash__(self):
        raise TypeError("GammaSeries is not hashable")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = out.get(p, 0) + c
        return GammaSeries(out, self.cutoff)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = out.get(p, 0) - c
        return GammaSeries(out, self.cutoff)

    def re_truncate(self, cutoff: int) -> "GammaSeries":
        if cutoff > self.cutoff:
            raise ValueError("cannot raise a cutoff")
        return GammaSeries(self.coeffs, cutoff)

    def __repr__(self):
        return f"GammaSeries(<={self.cutoff}: {GammaElement(self.coeffs).to_text()})"


# ---------------------------------------------------------------------------
# structure constants


def _shape_arrays(s):
    bounds = s.row_bounds()
    return tuple(a for a, _ in bounds), tuple(b - a for a, b in bounds)


def lr_table(lam: Partition, mu: Partition) -> dict:
    """Full product expansion {nu: c^nu_{lam,mu}} via one tableau enumeration."""
    lam, mu = partition(lam), partition(mu)
    key = (lam, mu)
    with _lock:
        if key in _lr_table_cache:
            return _lr_table_cache[key]
    if not lam or not mu:
        table = {(lam or mu): 1}
    else:
        offsets, widths = _shape_arrays(star(lam, mu))
        base = weight(lam) + weight(mu)
        counts = kernel.content_counts(offsets, widths, len(lam) + len(mu))
        table = {}
        for content, n in counts.items():
            sign = -1 if (sum(content) - base) % 2 else 1
            table[content] = sign * n
    with _lock:
        _lr_table_cache[key] = table
    return table


def lr_coeff(lam: Partition, mu: Partition, nu: Partition) -> int:
    """c^nu_{lam,mu}: signed count of lattice set-valued tableaux on lam*mu."""
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if weight(nu) < weight(lam) + weight(mu) or len(nu) > len(lam) + len(mu):
        return 0
    key = (lam, mu)
    with _lock:
        table = _lr_table_cache.get(key)
    if table is not None:
        return table.get(nu, 0)
    if not lam or not mu:
        return 1 if nu == (lam or mu) else 0
    offsets, widths = _shape_arrays(star(lam, mu))
    n = kernel.count_with_content(offsets, widths, nu)
    sign = -1 if (weight(nu) - weight(lam) - weight(mu)) % 2 else 1
    return sign * n


def product(a: GammaElement, b: GammaElement) -> GammaElement:
    out = GammaElement()
    for lam, ca in a.coeffs.items():
        for mu, cb in b.coeffs.items():
            out = out + GammaElement(lr_table(lam, mu)).scale(ca * cb)
    return out


def coprod_coeff(lam: Partition, mu: Partition, nu: Partition, rect=None) -> int:
    """d^nu_{lam,mu} = c^rho_{nu,R} for a rectangle R containing lam and mu.

    The minimal rectangle is used by default; any larger one gives the same
    value (tested), which is why `rect` is exposed.
    """
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if rect is None:
        p = max(lam[0] if lam else 0, mu[0] if mu else 0)
        q = max(len(lam), len(mu))
    else:
        p, q = _rect_dims(rect)
        if (lam and (lam[0] > p or len(lam) > q)) or (mu and (mu[0] > p or len(mu) > q)):
            raise ValueError(f"rectangle {p}x{q} does not contain {lam} and {mu}")
    rho = tuple(p + (lam[i] if i < len(lam) else 0) for i in range(q)) + mu
    return lr_coeff(nu, (p,) * q, rho)


def _rect_dims(rect):
    """Width and height of a rectangular partition (p,)*q."""
    rect = partition(rect)
    if rect and any(x != rect[0] for x in rect):
        raise ValueError(f"not a rectangle: {rect}")
    return (rect[0] if rect else 0), len(rect)


def rect_coprod(rect, sigma: Partition, tau: Partition) -> int:
    """d^R_{sigma,tau} for a rectangle R = (p,)*q by the closed rook-strip rule."""
    p, q = _rect_dims(rect)
    sigma, tau = partition(sigma), partition(tau)
    if (sigma and (sigma[0] > p or len(sigma) > q)) or (tau and (tau[0] > p or len(tau) > q)):
        raise ValueError(f"{sigma}, {tau} do not fit in the {p}x{q} rectangle")
    if p == 0 or q == 0:
        return 1 if not sigma and not tau else 0
    # row i of tau-hat (tau rotated into the bottom-right corner) has its
    # leftmost box at column p - tau_{q-1-i}
    overlap_cols = []
    for i in range(q):
        s = sigma[i] if i < len(sigma) else 0
        t = tau[q - 1 - i] if q - 1 - i < len(tau) else 0
        if s + t < p:  # union misses a box in this row
            return 0
        over = s + t - p
        if over > 1:  # two intersection boxes in one row: not a rook strip
            return 0
        if over == 1:
            overlap_cols.append(p - t)
    if len(overlap_cols) != len(set(overlap_cols)):
        return 0
    sign = -1 if (weight(sigma) + weight(tau) - p * q) % 2 else 1
    return sign


def coproduct(a: GammaElement) -> dict:
    """Delta(a) as a map (lam, mu) -> coefficient."""
    out: dict = {}
    for nu, c in a.coeffs.items():
        for lam in subpartitions(nu):
            for mu in subpartitions(nu):
                d = coprod_coeff(lam, mu, nu)
                if d:
                    key = (lam, mu)
                    v = out.get(key, 0) + c * d
                    if v:
                        out[key] = v
                    elif key in out:
                        del out[key]
    return out


# ---------------------------------------------------------------------------
# straightening


def _strip_tail(I):
    I = tuple(int(x) for x in I)
    while I and I[-1] <= 0:
        I = I[:-1]
    return I


def straighten(I) -> GammaElement:
    """Expand G_I for an arbitrary integer sequence into the {G_lambda} basis.

    Rewrites at the leftmost adjacent ascent via
    G_{..,p,q,..} = sum_{k=p+1}^{q} G_{..,q,k,..} - sum_{k=p+1}^{q-1} G_{..,q-1,k,..}
    and drops trailing non-positive entries.
    """
    return GammaElement(_straighten_map(_strip_tail(I)))


def _straighten_map(I) -> dict:
    with _lock:
        cached = _straighten_cache.get(I)
    if cached is not None:
        return cached
    asc = next((j for j in range(len(I) - 1) if I[j] < I[j + 1]), None)
    if asc is None:
        out = {I: 1}  # weakly decreasing and positive: already a partition
    else:
        p, q = I[asc], I[asc + 1]
        head, tail = I[:asc], I[asc + 2 :]
        out = {}
        for k in range(p + 1, q + 1):
            for lam, c in _straighten_map(_strip_tail(head + (q, k) + tail)).items():
                out[lam] = out.get(lam, 0) + c
        for k in range(p + 1, q):
            for lam, c in _straighten_map(_strip_tail(head + (q - 1, k) + tail)).items():
                out[lam] = out.get(lam, 0) - c
        out = {lam: c for lam, c in out.items() if c}
    with _lock:
        _straighten_cache[I] = out
    return out


def skew(I, lam) -> GammaElement:
    """G_{I // lam} = sum_{nu,mu} delta_{I,nu} d^nu_{lam,mu} G_mu."""
    lam = partition(lam)
    out = GammaElement()
    for nu, c in straighten(I).coeffs.items():
        if not contains(nu, lam):
            continue
        terms = {}
        for mu in subpartitions(nu):
            d = coprod_coeff(lam, mu, nu)
            if d:
                terms[mu] = c * d
        out = out + GammaElement(terms)
    return out


# ---------------------------------------------------------------------------
# Jacobi-Trudi


def bbn(n: int, m: int) -> int:
    """Binomial coefficient, modified so that bbn(-1, 0) = 1."""
    if 0 <= m <= n:
        return comb(n, m)
    if n == -1 and m == 0:
        return 1
    return 0


def g_int(s: int) -> GammaElement:
    """G_s for an integer s: G_(s) when s > 0, the unit otherwise."""
    return GammaElement.basis((s,)) if s > 0 else GammaElement.one()


def jacobi_trudi_check(a: int, I, D: int) -> bool:
    """Check G_{a,I} = sum_{q,t>=0} (-1)^q bbn(q-1+t, t) G_{a+q+t} G_{I//(1^q)}
    up to weight D."""
    I = tuple(int(x) for x in I)
    lhs = straighten((a,) + I).truncate(D)
    support = straighten(I).coeffs
    max_len = max((len(nu) for nu in support), default=0)
    rhs = GammaElement()
    for q in range(0, max_len + 1):
        skew_part = skew(I, (1,) * q)
        if skew_part.is_zero():
            continue
        t = 0
        while a + q + t <= D:
            coeff = (-1) ** q * bbn(q - 1 + t, t)
            if coeff:
                rhs = rhs + (g_int(a + q + t) * skew_part).scale(coeff)
            t += 1
    return lhs == rhs.truncate(D)


# ---------------------------------------------------------------------------
# colored and marked Young diagrams


class CMYD:
    """Quadruple lam0 <= lam <= nu0 <= nu satisfying the five axioms."""

    __slots__ = ("lam0", "lam", "nu0", "nu")

    def __init__(self, lam0, lam, nu0, nu):
        self.lam0 = lam0
        self.lam = lam
        self.nu0 = nu0
        self.nu = nu

    def g(self) -> int:
        return weight(self.nu0) - weight(self.lam)

    def w(self) -> int:
        return weight(self.lam0)

    def u(self) -> int:
        return self.g() + self.w()

    def m(self) -> int:
        return (weight(self.lam) - weight(self.lam0)) + (weight(self.nu) - weight(self.nu0))

    def __repr__(self):
        return f"CMYD({self.lam0} <= {self.lam} <= {self.nu0} <= {self.nu})"


def _is_vertical_strip(outer, inner):
    return strip_kind(SkewShape(outer, inner)) in ("vertical", "rook")


def _is_rook_strip(outer, inner):
    return strip_kind(SkewShape(outer, inner)) == "rook"


def enumerate_cmyd(mu: Partition, g: int, w: int):
    """All CMYDs relative to mu with g unmarked gray and w unmarked white boxes."""
    mu = partition(mu)
    for lam in subpartitions(mu):
        if weight(lam) < w:
            continue
        lam0s = [
            lam0
            for lam0 in subpartitions(lam)
            if weight(lam0) == w
            and _is_rook_strip(lam, lam0)
            and _is_vertical_strip(mu, lam0)
        ]
        if not lam0s:
            continue
        # nu/lam a horizontal strip; its rook-strip marked part has at most
        # one box per row, so |nu| <= |lam| + g + len(lam) + 1
        for nu in _horizontal_extensions(lam, g + len(lam) + 1):
            extra = weight(nu) - weight(lam)
            if extra < g:
                continue
            top_gray = next(
                (i for i in range(len(nu)) if nu[i] > (lam[i] if i < len(lam) else 0)),
                None,
            )
            for nu0 in _between(lam, nu, weight(lam) + g):
                if not _is_rook_strip(nu, nu0):
                    continue
                if top_gray is not None and nu[top_gray] > (
                    nu0[top_gray] if top_gray < len(nu0) else 0
                ):
                    continue  # axiom (v): marked box in the top gray row
                for lam0 in lam0s:
                    yield CMYD(lam0, lam, nu0, nu)


def _horizontal_extensions(lam, max_extra):
    """All nu >= lam with nu/lam a horizontal strip and at most max_extra added boxes."""

    def rec(i, budget):
        if i == len(lam) + 1:
            yield ()
            return
        cur = lam[i] if i < len(lam) else 0
        cap = lam[i - 1] if i >= 1 else cur + budget  # no two strip boxes per column
        for v in range(min(cap, cur + budget), cur - 1, -1):
            if v == 0:
                yield ()
                continue
            for tail in rec(i + 1, budget - (v - cur)):
                yield (v,) + tail

    yield from rec(0, max_extra)


def _between(inner, outer, target_weight):
    """Partitions kappa with inner <= kappa <= outer and |kappa| = target_weight."""

    def rec(i, prev, budget):
        if i == len(outer):
            if budget == 0:
                yield ()
            return
        lo = inner[i] if i < len(inner) else 0
        hi = min(outer[i], prev)
        for v in range(min(hi, lo + budget), lo - 1, -1):
            for tail in rec(i + 1, v, budget - (v - lo)):
                yield (v,) + tail

    budget = target_weight - weight(inner)
    if budget < 0:
        return
    for kappa in rec(0, outer[0] if outer else 0, budget):
        while kappa and kappa[-1] == 0:
            kappa = kappa[:-1]
        yield kappa


def cmyd_product(mu: Partition, p: int, q: int) -> GammaElement:
    """G_p * G_{mu // (1^q)} via the signed CMYD sum."""
    mu = partition(mu)
    out: dict = {}
    for d in enumerate_cmyd(mu, p, weight(mu) - q):
        sign = -1 if d.m() % 2 else 1
        out[d.nu] = out.get(d.nu, 0) + sign
    return GammaElement(out)


# ---------------------------------------------------------------------------
# column removal and series identities


def remove_columns(a: GammaElement, d: int) -> GammaElement:
    """Linear map G_nu -> G_nu-tilde dropping the first d columns of each shape."""
    if d < 0:
        raise ValueError("d must be non-negative")
    out = GammaElement()
    for nu, c in a.coeffs.items():
        tilde = partition(tuple(max(x - d, 0) for x in nu))
        out = out + GammaElement({tilde: c})
    return out


def series_identities_check(kind: str, *, k=None, m=None, i=None, n_x=0, n_y=0, D=5) -> bool:
    """Truncated checks of the symmetric-function lemmas.

    kind='gtos':  G_k(x) = (1 - G_1(x)) * sum_{j>=0} h_{k+j}(x), x = x1..n_x.
    kind='gysin': sum_{t>=0} G_{m+t}(F) G_{i//t}(-E) = G_{m+i}(F-E), with F
    the x-family (n_x variables) and E the y-family (n_y variables); requires
    i >= n_y.
    """
    from . import grothpoly
    from .polyzx import MultiPoly, h_complete

    def g_int_x(s, n):
        return grothpoly.eval_G_single((s,), n) if s > 0 else MultiPoly.const(1, n, 0)

    if kind == "gtos":
        if k is None:
            raise ValueError("gtos needs k")
        lhs = g_int_x(k, n_x).truncate(D)
        tail = MultiPoly(n_x, 0)
        for j in range(max(k, 0), D + 1):
            tail = tail + h_complete(j, n_x)
        rhs = (1 - grothpoly.eval_G_single((1,), n_x)).mul(tail, cutoff=D)
        return lhs == rhs.truncate(D)

    if kind == "gysin":
        if m is None or i is None:
            raise ValueError("gysin needs m and i")
        if i < n_y:
            raise ValueError(f"requires i >= rank(E) = {n_y}")

        def eval_y(elem):
            acc = MultiPoly(n_x, n_y)
            for mu, c in elem.coeffs.items():
                f = grothpoly.eval_G_double(mu, 0, n_y).widen(n_x, n_y)
                acc = acc + c * f
            return acc

        lhs = MultiPoly(n_x, n_y)
        for t in range(0, max(i, 0) + 1):
            sk = skew((i,), (t,) if t else ())
            if sk.is_zero():
                continue
            f = g_int_x(m + t, n_x).widen(n_x, n_y)
            lhs = lhs + f.mul(eval_y(sk), cutoff=D)
        s = m + i
        if s > 0:
            rhs = grothpoly.eval_G_double((s,), n_x, n_y)
        else:
            rhs = MultiPoly.const(1, n_x, n_y)
        return lhs.truncate(D) == rhs.truncate(D)

    raise ValueError(f"unknown kind {kind!r}")


# ---------------------------------------------------------------------------
# basis expansion oracles


def expand_in_basis(poly, n: int, max_weight=None) -> dict:
    """Write a symmetric polynomial as sum c_nu G_nu(x1..xn).

    Candidates run in weight-ascending, lex-descending order; the coefficient
    of the monomial x^nu is then untouched by later candidates, so integer
    back-substitution is exact.  The residual is required to vanish (up to
    max_weight when given), which fully verifies the expansion.
    """
    from . import grothpoly
    from .shapes import partitions_of

    residual = poly
    out = {}
    top = poly.degree() if max_weight is None else max_weight
    for wt in range(0, top + 1):
        for nu in partitions_of(wt, max_len=n):
            key = tuple(nu) + (0,) * (n - len(nu))
            c = residual.terms.get(key, 0)
            if c:
                out[nu] = c
                residual = residual - c * grothpoly.eval_G_single(nu, n)
    if max_weight is not None:
        residual = residual.truncate(max_weight)
    if not residual.is_zero():
        raise ValueError("polynomial is not in the span of the candidate basis")
    return out


def expand_in_basis_double(poly, m: int, k: int, max_weight: int) -> dict:
    """Like expand_in_basis but over the double basis {G_nu(x1..xm; y1..yk)}.

    Extraction uses the pure-x monomial x^nu (the y-free part of G_kappa(x;y)
    is G_kappa(x), so the same triangularity applies); candidates are limited
    to len(nu) <= m, and the verified zero residual certifies that no other
    shape was needed.
    """
    from . import grothpoly

    residual = poly
    out = {}
    from .shapes import partitions_of

    for wt in range(0, max_weight + 1):
        for nu in partitions_of(wt, max_len=m):
            key = tuple(nu) + (0,) * (m - len(nu) + k)
            c = residual.terms.get(key, 0)
            if c:
                out[nu] = c
                residual = residual - c * grothpoly.eval_G_double(nu, m, k)
    if not residual.truncate(max_weight).is_zero():
        raise ValueError("polynomial is not in the span of the candidate basis")
    return out
