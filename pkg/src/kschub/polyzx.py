"""Sparse exact-integer polynomials in two variable families x1..xm, y1..yk.

Keys are dense exponent tuples of length m + k (x exponents first).  All
arithmetic is exact over the integers; degree truncation is always an
explicit argument, never ambient state.
"""

from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb


class MultiPoly:
    __slots__ = ("m", "k", "terms")

    def __init__(self, m, k, terms=None):
        self.m = m
        self.k = k
        self.terms = terms if terms is not None else {}

    # -- constructors -------------------------------------------------------

    @staticmethod
    def const(c, m=0, k=0):
        return MultiPoly(m, k, {(0,) * (m + k): c} if c else {})

    @staticmethod
    def xvar(i, m, k=0):
        key = tuple(1 if t == i - 1 else 0 for t in range(m + k))
        return MultiPoly(m, k, {key: 1})

    @staticmethod
    def yvar(j, m, k):
        key = tuple(1 if t == m + j - 1 else 0 for t in range(m + k))
        return MultiPoly(m, k, {key: 1})

    # -- basics -------------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        m = max(self.m, other.m)
        k = max(self.k, other.k)
        return self.widen(m, k).terms == other.widen(m, k).terms

    def __hash__(self):
        raise TypeError("MultiPoly is not hashable")

    def __repr__(self):
        return f"MultiPoly({self.m},{self.k}: {self.to_text()})"

    def degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def widen(self, m, k):
        """Embed into a ring with at least as many variables in each family."""
        if m < self.m or k < self.k:
            raise ValueError("cannot narrow; use restrict()")
        if m == self.m and k == self.k:
            return self
        pad = (0,) * (k - self.k)
        out = {}
        for e, c in self.terms.items():
            out[e[: self.m] + (0,) * (m - self.m) + e[self.m :] + pad] = c
        return MultiPoly(m, k, out)

    def restrict(self, m_vars, k_vars):
        """Set x_j = 0 for j > m_vars and y_j = 0 for j > k_vars."""
        m2, k2 = min(self.m, m_vars), min(self.k, k_vars)
        out = {}
        for e, c in self.terms.items():
            if any(e[m2 : self.m]) or any(e[self.m + k2 :]):
                continue
            out[e[:m2] + e[self.m : self.m + k2]] = c
        return MultiPoly(m2, k2, out)

    def substitute_zero(self, x_vars=(), y_vars=()):
        """Drop every term that uses any of the named variables (1-based)."""
        xs = {i - 1 for i in x_vars}
        ys = {self.m + j - 1 for j in y_vars}
        dead = xs | ys
        out = {e: c for e, c in self.terms.items() if not any(e[i] for i in dead)}
        return MultiPoly(self.m, self.k, out)

    def truncate(self, cutoff):
        """Keep terms of total degree <= cutoff."""
        if cutoff is None:
            return self
        return MultiPoly(self.m, self.k, {e: c for e, c in self.terms.items() if sum(e) <= cutoff})

    def truncate_y(self, cutoff):
        """Keep terms of y-degree <= cutoff (exact: no operation raises it back)."""
        if cutoff is None:
            return self
        return MultiPoly(
            self.m, self.k, {e: c for e, c in self.terms.items() if sum(e[self.m :]) <= cutoff}
        )

    # -- arithmetic ---------------------------------------------------------

    def _pair(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(other)
        m = max(self.m, other.m)
        k = max(self.k, other.k)
        return self.widen(m, k), other.widen(m, k)

    def __add__(self, other):
        a, b = self._pair(other)
        out = dict(a.terms)
        for e, c in b.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            elif e in out:
                del out[e]
        return MultiPoly(a.m, a.k, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.m, self.k, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        a, b = self._pair(other)
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        return self.mul(other)

    __rmul__ = __mul__

    def mul(self, other, cutoff=None, y_cutoff=None):
        a, b = self._pair(other)
        if len(a.terms) < len(b.terms):
            a, b = b, a
        out = {}
        m = a.m
        bterms = list(b.terms.items())
        for e1, c1 in a.terms.items():
            d1 = sum(e1)
            y1 = sum(e1[m:])
            for e2, c2 in bterms:
                if cutoff is not None and d1 + sum(e2) > cutoff:
                    continue
                if y_cutoff is not None and y1 + sum(e2[m:]) > y_cutoff:
                    continue
                key = tuple(u + v for u, v in zip(e1, e2))
                v = out.get(key, 0) + c1 * c2
                if v:
                    out[key] = v
                elif key in out:
                    del out[key]
        return MultiPoly(a.m, a.k, out)

    def swap_x(self, i):
        """Exchange x_i and x_{i+1}."""
        a, b = i - 1, i
        out = {}
        for e, c in self.terms.items():
            if e[a] != e[b]:
                le = list(e)
                le[a], le[b] = le[b], le[a]
                e = tuple(le)
            out[e] = c
        return MultiPoly(self.m, self.k, out)

    # -- rendering ----------------------------------------------------------

    def to_text(self):
        """Canonical text like '3*x1^2*y2 - x3'; zero renders as '0'."""
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))
        chunks = []
        for e, c in items:
            factors = []
            for i in range(self.m):
                if e[i] == 1:
                    factors.append(f"x{i + 1}")
                elif e[i] > 1:
                    factors.append(f"x{i + 1}^{e[i]}")
            for j in range(self.k):
                if e[self.m + j] == 1:
                    factors.append(f"y{j + 1}")
                elif e[self.m + j] > 1:
                    factors.append(f"y{j + 1}^{e[self.m + j]}")
            mag = abs(c)
            body = "*".join(factors)
            if not factors:
                body = str(mag)
            elif mag != 1:
                body = f"{mag}*{body}"
            chunks.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(chunks)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


# ---------------------------------------------------------------------------
# divided differences


def divided_difference(f: MultiPoly, i: int, cutoff=None) -> MultiPoly:
    """Isobaric operator: ((1-x_{i+1}) f - (1-x_i) f^{s_i}) / (x_i - x_{i+1}).

    With a cutoff, f need only be correct up to degree cutoff + 1 and the
    result is correct up to degree cutoff: the quotient recurrence is graded,
    so each output term depends only on numerator terms one degree higher.
    The numerator is always divisible; a nonzero remainder means a bug and
    raises RuntimeError.
    """
    if i + 1 > f.m:
        raise ValueError(f"need x-width >= {i + 1}, have {f.m}")
    xi = MultiPoly.xvar(i, f.m, f.k)
    xi1 = MultiPoly.xvar(i + 1, f.m, f.k)
    num = (1 - xi1) * f - (1 - xi) * f.swap_x(i)
    if cutoff is not None:
        num = num.truncate(cutoff + 1)

    a_pos, b_pos = i - 1, i
    groups = {}
    for e, c in num.terms.items():
        rest = e[:a_pos] + (0,) + e[a_pos + 1 : b_pos] + (0,) + e[b_pos + 1 :]
        groups.setdefault(rest, {})[(e[a_pos], e[b_pos])] = c
    out = {}
    for rest, grid in groups.items():
        max_a = max(a for a, _ in grid)
        max_b = max(b for _, b in grid)
        q = {}
        for a in range(max_a - 1, -1, -1):
            for b in range(max_b + 1):
                v = grid.get((a + 1, b), 0) + q.get((a + 1, b - 1), 0)
                if v:
                    q[a, b] = v
        for (a, b), c in q.items():
            e = list(rest)
            e[a_pos], e[b_pos] = a, b
            out[tuple(e)] = c
    result = MultiPoly(f.m, f.k, out)
    check = (xi - xi1) * result
    if cutoff is not None:
        check = check.truncate(cutoff + 1)
    if check != num:
        raise RuntimeError("divided difference division was not exact")
    return result


# ---------------------------------------------------------------------------
# modified complete homogeneous functions


@lru_cache(maxsize=None)
def h_complete(d: int, n: int) -> MultiPoly:
    """Complete homogeneous h_d(x1..xn)."""
    if d < 0:
        return MultiPoly(n, 0)
    if d == 0:
        return MultiPoly.const(1, n, 0)
    out = {}
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for v in combo:
            e[v] += 1
        out[tuple(e)] = 1
    return MultiPoly(n, 0, out)


def h_mod(kdeg: int, n: int, i: int) -> MultiPoly:
    """h_k(x1..xn / 1^i): coefficient of t^k in (1-t)^i / prod(1 - x_j t)."""
    if kdeg < 0:
        return MultiPoly(n, 0)
    acc = MultiPoly(n, 0)
    for j in range(0, min(i, kdeg) + 1):
        acc = acc + (-1) ** j * comb(i, j) * h_complete(kdeg - j, n)
    return acc


# ---------------------------------------------------------------------------
# determinants


def det(matrix) -> MultiPoly:
    """Exact determinant by Laplace expansion, memoized on column subsets."""
    n = len(matrix)
    if n == 0:
        return MultiPoly.const(1)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    memo = {}

    def minor(r, mask):
        if r == n:
            return MultiPoly.const(1)
        if mask in memo:
            return memo[mask]
        acc = MultiPoly(0, 0)
        sign = 1
        rem = mask
        while rem:
            low = rem & -rem
            j = low.bit_length() - 1
            entry = matrix[r][j]
            if entry.terms:
                acc = acc + sign * entry * minor(r + 1, mask & ~low)
            sign = -sign
            rem &= rem - 1
        memo[mask] = acc
        return acc

    return minor(0, (1 << n) - 1)


def divide_exact(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Exact division f / g w.r.t. lex leading terms; raises if not exact."""
    f, g = f._pair(g)
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    glead = max(g.terms)
    gc = g.terms[glead]
    rem = MultiPoly(f.m, f.k, dict(f.terms))
    quo = {}
    while rem.terms:
        e = max(rem.terms)
        c = rem.terms[e]
        if c % gc or any(a < b for a, b in zip(e, glead)):
            raise ValueError("division is not exact")
        qe = tuple(a - b for a, b in zip(e, glead))
        qc = c // gc
        quo[qe] = qc
        rem = rem - MultiPoly(f.m, f.k, {qe: qc}) * g
    return MultiPoly(f.m, f.k, quo)
