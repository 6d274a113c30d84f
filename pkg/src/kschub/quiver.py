"""Rank conditions, rectangle diagrams and the inductive quiver coefficients.

P_r lives in the n-fold tensor power of the stable basis; the recursion peels
off the top row of the rank diagram, splitting each factor with coproduct
coefficients and straightening the glued diagrams.  Everything is memoized on
the rectangle diagram, which determines the coefficients.
"""

import os
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product as iproduct

from . import gamma
from .shapes import partition, perm, perm_in_window, perm_length, rank_fn, weight

_lock = threading.Lock()
_pr_memo: dict = {}  # rectangle-diagram key -> coeffs dict
_pair_memo: dict = {}  # (mu, max_rows) -> tuple of (sigma, tau, d)


def clear_caches():
    with _lock:
        _pr_memo.clear()
        _pair_memo.clear()


@dataclass(frozen=True)
class RankConditions:
    """Triangular array r_ij for 0 <= i <= j <= n; r_ii are the bundle ranks."""

    n: int
    r: tuple  # mapping (i, j) -> value, stored as a sorted tuple of items

    @staticmethod
    def make(ranks, off_diag) -> "RankConditions":
        n = len(ranks) - 1
        table = {(i, i): int(ranks[i]) for i in range(n + 1)}
        for (i, j), v in off_diag.items():
            if not 0 <= i < j <= n:
                raise ValueError(f"bad index pair ({i},{j})")
            table[i, j] = int(v)
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                if (i, j) not in table:
                    raise ValueError(f"missing rank r_{i}{j}")
        return RankConditions(n, tuple(sorted(table.items())))

    def rank(self, i: int, j: int) -> int:
        return dict(self.r)[i, j]

    def to_json(self) -> dict:
        table = dict(self.r)
        return {
            "ranks": [table[i, i] for i in range(self.n + 1)],
            "r": {f"{i},{j}": table[i, j] for i in range(self.n + 1) for j in range(i + 1, self.n + 1)},
        }

    @staticmethod
    def from_json(data) -> "RankConditions":
        off = {}
        for key, v in data.get("r", {}).items():
            i, j = (int(t) for t in key.split(","))
            off[i, j] = v
        return RankConditions.make(data["ranks"], off)


def validate(rc: RankConditions) -> bool:
    """The occurrence inequalities for a nonempty quiver variety."""
    r = dict(rc.r)
    if any(v < 0 for v in r.values()):
        return False
    for i in range(rc.n + 1):
        for j in range(i + 1, rc.n + 1):
            if r[i, j] > min(r[i, j - 1], r[i + 1, j]):
                return False
            if j - i >= 2 and r[i + 1, j - 1] - r[i, j - 1] - r[i + 1, j] + r[i, j] < 0:
                return False
    return True


def rectangle_diagram(rc: RankConditions) -> dict:
    """(i, j) -> (rows, cols) of the rectangle R_ij."""
    r = dict(rc.r)
    return {
        (i, j): (r[i + 1, j] - r[i, j], r[i, j - 1] - r[i, j])
        for i in range(rc.n + 1)
        for j in range(i + 1, rc.n + 1)
    }


def diagram_key(rc: RankConditions) -> tuple:
    d = rectangle_diagram(rc)
    return (rc.n,) + tuple(d[key] for key in sorted(d))


def expected_codim(rc: RankConditions) -> int:
    if not validate(rc):
        raise ValueError("rank conditions cannot occur")
    return sum(rows * cols for rows, cols in rectangle_diagram(rc).values())


@dataclass(frozen=True)
class QuiverElement:
    """P_r as a map from n-tuples of partitions to nonzero integers."""

    n: int
    coeffs: tuple  # sorted tuple of (mu-tuple, coeff) items

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    def sorted_items(self):
        return sorted(
            self.coeffs, key=lambda t: (sum(weight(p) for p in t[0]), t[0])
        )


def _rect_partition(rows: int, cols: int):
    return (cols,) * rows if rows and cols else ()


def _coprod_pairs(mu, max_rows: int):
    """All (sigma, tau, d^mu_{sigma,tau}) with d nonzero and len(sigma) <= max_rows."""
    key = (mu, max_rows)
    with _lock:
        hit = _pair_memo.get(key)
    if hit is not None:
        return hit
    out = []
    from .shapes import subpartitions

    for sigma in subpartitions(mu):
        if len(sigma) > max_rows:
            continue
        for tau in subpartitions(mu):
            d = gamma.coprod_coeff(sigma, tau, mu)
            if d:
                out.append((sigma, tau, d))
    out = tuple(out)
    with _lock:
        _pair_memo[key] = out
    return out


def _glued_sequence(rect, sigma, tau):
    """Row lengths of: rectangle, sigma attached to its right, tau beneath."""
    a, b = rect
    if a == 0:
        return tau
    return tuple(b + (sigma[j] if j < len(sigma) else 0) for j in range(a)) + tau


def _replace_step(first_row_rects, prev_coeffs, pair_fn):
    """One induction step: split each factor of the previous element and glue
    the pieces onto the first-row rectangles."""
    n = len(first_row_rects)
    out: dict = {}
    for mubar, c in prev_coeffs.items():
        choices = [pair_fn(mubar[i - 1], first_row_rects[i - 1][0]) for i in range(1, n)]
        for combo in iproduct(*choices):
            coeff = c
            for _, _, d in combo:
                coeff *= d
            factors = []
            for i in range(1, n + 1):
                sigma = combo[i - 1][0] if i <= n - 1 else ()
                tau = combo[i - 2][1] if i >= 2 else ()
                expansion = gamma.straighten(_glued_sequence(first_row_rects[i - 1], sigma, tau))
                factors.append(list(expansion.coeffs.items()))
            for lam_combo in iproduct(*factors):
                key = tuple(lam for lam, _ in lam_combo)
                v = coeff
                for _, dl in lam_combo:
                    v *= dl
                total = out.get(key, 0) + v
                if total:
                    out[key] = total
                elif key in out:
                    del out[key]
    return out


def _first_row_rects(rc: RankConditions):
    diagram = rectangle_diagram(rc)
    return [diagram[i - 1, i] for i in range(1, rc.n + 1)]


def _bar(rc: RankConditions) -> RankConditions:
    """Bottom n rows of the rank diagram: slot ranks r_{i,i+1}, bar r_ij = r_{i,j+1}."""
    r = dict(rc.r)
    ranks = [r[i, i + 1] for i in range(rc.n)]
    off = {
        (i, j): r[i, j + 1] for i in range(rc.n) for j in range(i + 1, rc.n)
    }
    return RankConditions.make(ranks, off)


def quiver_coeffs(rc: RankConditions) -> QuiverElement:
    if not validate(rc):
        raise ValueError("rank conditions cannot occur")
    key = diagram_key(rc)
    with _lock:
        hit = _pr_memo.get(key)
    if hit is None:
        if rc.n == 0:
            hit = {(): 1}
        elif rc.n == 1:
            rows, cols = rectangle_diagram(rc)[0, 1]
            hit = {(_rect_partition(rows, cols),): 1}
        else:
            prev = quiver_coeffs(_bar(rc)).as_dict()
            hit = _replace_step(_first_row_rects(rc), prev, _coprod_pairs)
        with _lock:
            _pr_memo[key] = hit
    return QuiverElement(rc.n, tuple(sorted(hit.items())))


def complexes_coeffs(rc: RankConditions) -> QuiverElement:
    """Fast path when all rectangles below the second row are empty: the
    inductive element is the product of second-row rectangles and the
    coproduct coefficients follow the closed rook-strip rule."""
    if not validate(rc):
        raise ValueError("rank conditions cannot occur")
    diagram = rectangle_diagram(rc)
    for (i, j), (rows, cols) in diagram.items():
        if j - i > 2 and rows and cols:
            raise ValueError(f"rectangle R_{i}{j} is not empty")
    if rc.n <= 1:
        return quiver_coeffs(rc)
    rects2 = [diagram[i, i + 2] for i in range(rc.n - 1)]
    prev = {tuple(_rect_partition(a, b) for a, b in rects2): 1}

    def pair_fn(mu, max_rows):
        # mu is a rectangle from the second row; use the closed rule
        if not mu:
            return (((), (), 1),)
        q, p = len(mu), mu[0]
        out = []
        from .shapes import subpartitions

        for sigma in subpartitions(mu):
            if len(sigma) > max_rows:
                continue
            for tau in subpartitions(mu):
                d = gamma.rect_coprod((p,) * q, sigma, tau)
                if d:
                    out.append((sigma, tau, d))
        return tuple(out)

    coeffs = _replace_step(_first_row_rects(rc), prev, pair_fn)
    return QuiverElement(rc.n, tuple(sorted(coeffs.items())))


# ---------------------------------------------------------------------------
# conjecture sweep


def _enumerate_rank_conditions(slots: int, max_rank: int):
    """All valid rank conditions with the given number of bundle slots and
    ranks at most max_rank."""
    n = slots - 1

    def rec(table, d):
        if d > n:
            yield dict(table)
            return
        pairs = [(i, i + d) for i in range(n - d + 1)]

        def fill(idx):
            if idx == len(pairs):
                yield from rec(table, d + 1)
                return
            i, j = pairs[idx]
            hi = min(table[i, j - 1], table[i + 1, j])
            lo = 0
            if d >= 2:
                lo = max(lo, table[i, j - 1] + table[i + 1, j] - table[i + 1, j - 1])
            for v in range(hi, lo - 1, -1):
                table[i, j] = v
                yield from fill(idx + 1)
                del table[i, j]

        yield from fill(0)

    for ranks in iproduct(range(max_rank, -1, -1), repeat=slots):
        table = {(i, i): ranks[i] for i in range(slots)}
        for full in rec(table, 1):
            off = {(i, j): v for (i, j), v in full.items() if i != j}
            yield RankConditions.make(ranks, off)


def conjecture_sweep(bundles: int, max_rank: int, threads=None) -> dict:
    """Check the alternating-sign conjecture over all rank conditions with the
    given number of bundles and ranks bounded by max_rank, deduplicated by
    rectangle diagram."""
    if bundles < 2 or max_rank < 1:
        raise ValueError("need at least 2 bundles and max_rank >= 1")
    start = time.time()
    reps = {}
    total = 0
    for rc in _enumerate_rank_conditions(bundles, max_rank):
        total += 1
        reps.setdefault(diagram_key(rc), rc)
    violations = []
    vlock = threading.Lock()
    max_mu_weight = 0

    def check(rc):
        nonlocal max_mu_weight
        d = expected_codim(rc)
        element = quiver_coeffs(rc)
        local = []
        top = 0
        for mu, c in element.coeffs:
            wt = sum(weight(p) for p in mu)
            top = max(top, wt)
            if (-1) ** (wt - d) * c < 0:
                local.append(
                    {
                        "ranks": rc.to_json(),
                        "mu": [list(p) for p in mu],
                        "coeff": c,
                        "codim": d,
                    }
                )
        with vlock:
            max_mu_weight = max(max_mu_weight, top)
            violations.extend(local)

    workers = threads or os.cpu_count() or 1
    items = [reps[key] for key in sorted(reps)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(check, items))
    else:
        for rc in items:
            check(rc)
    violations.sort(key=lambda v: (v["ranks"]["ranks"], sorted(v["ranks"]["r"].items()), v["mu"]))
    return {
        "bundles": bundles,
        "max_rank": max_rank,
        "rank_conditions": total,
        "distinct_diagrams": len(reps),
        "max_mu_weight": max_mu_weight,
        "violations": violations,
        "wall_time_seconds": round(time.time() - start, 3),
    }


# ---------------------------------------------------------------------------
# expansion of stable Grothendieck polynomials of permutations


def flag_rank_conditions(w, n: int) -> RankConditions:
    """Rank conditions of the sequence F_1 c ... c F_n -> H_n ->> ... ->> H_1
    attached to a permutation w in S_{n+1}."""
    w = perm(w)
    if len(w) > n + 1:
        raise ValueError(f"{w} is not in S_{n + 1}")
    window = perm_in_window(w, n + 1)
    slots = 2 * n
    ranks = list(range(1, n + 1)) + list(range(n, 0, -1))

    def rank_of(a, b):
        # slot a among 0..2n-1: F_{a+1} for a < n, H_{2n-a} otherwise
        if b < n:  # both in the F chain: composite is the inclusion of F_{a+1}
            return a + 1
        if a >= n:  # both in the H chain: composite surjects onto H_{2n-b}
            return 2 * n - b
        return rank_fn(window, 2 * n - b, a + 1)

    off = {(a, b): rank_of(a, b) for a in range(slots) for b in range(a + 1, slots)}
    return RankConditions.make(ranks, off)


def expand_gw(w) -> gamma.GammaElement:
    """Coefficients c_w(0,0,lambda) of G_w = sum c_w(0,0,lambda) G_lambda."""
    w = perm(w)
    if len(w) <= 1:
        return gamma.GammaElement.one()
    n = len(w) - 1
    element = quiver_coeffs(flag_rank_conditions(w, n))
    middle = n - 1  # index of the middle factor among 2n-1
    out = {}
    for mu, c in element.coeffs:
        # c_w(0,0,lambda): the F and H slots are specialized at rank-one
        # differences, so only terms with those slots empty survive at a=b=0
        if all(not p for k, p in enumerate(mu) if k != middle):
            out[mu[middle]] = c
    return gamma.GammaElement(out)
