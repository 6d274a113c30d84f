"""Pure-Python set-valued tableau counting kernels.

Same contract as the compiled module `_svt_core`; used when the extension is
unavailable or when KSCHUB_PURE is set.  Cells are filled in reverse reading
order (top row first, right to left) so the reverse-lattice condition is
checked letter by letter while backtracking.
"""


def _prepare(offsets, widths):
    """Flatten the shape into traversal-ordered cells with above/right links."""
    cells = []  # (row, col)
    for r, (off, w) in enumerate(zip(offsets, widths)):
        for c in range(off + w - 1, off - 1, -1):
            cells.append((r, c))
    index = {rc: k for k, rc in enumerate(cells)}
    above = [index.get((r - 1, c), -1) for r, c in cells]
    right = [index.get((r, c + 1), -1) for r, c in cells]
    return cells, above, right


def count_with_content(offsets, widths, content):
    """Count lattice set-valued tableaux with word content exactly `content`."""
    content = tuple(content)
    max_entry = len(content)
    cells, above, right = _prepare(offsets, widths)
    ncells = len(cells)
    total = sum(content)
    if ncells == 0:
        return 1 if total == 0 else 0
    if total < ncells or max_entry == 0:
        return 0
    cnt = [0] * (max_entry + 1)
    box_max = [0] * ncells
    box_min = [0] * ncells
    result = 0

    def rec(k, placed):
        nonlocal result
        if k == ncells:
            if placed == total:
                result += 1
            return
        remaining = total - placed
        left = ncells - k
        if remaining < left or remaining > left * max_entry:
            return
        lo = box_max[above[k]] + 1 if above[k] >= 0 else 1
        hi = box_min[right[k]] if right[k] >= 0 else max_entry
        if lo > hi:
            return
        full = ((1 << hi) - 1) & ~((1 << (lo - 1)) - 1)
        s = full
        while s:
            # letters of the box, largest first, with lattice + content checks
            ok = True
            added = []
            t = s
            while t:
                v = t.bit_length()
                if cnt[v] >= content[v - 1] or (v > 1 and cnt[v] + 1 > cnt[v - 1]):
                    ok = False
                    break
                cnt[v] += 1
                added.append(v)
                t &= ~(1 << (v - 1))
            if ok:
                box_min[k] = (s & -s).bit_length()
                box_max[k] = s.bit_length()
                rec(k + 1, placed + len(added))
            for v in added:
                cnt[v] -= 1
            s = (s - 1) & full
        return

    rec(0, 0)
    return result


def content_counts(offsets, widths, max_entry):
    """Counts of lattice set-valued tableaux per word content.

    Returns a dict mapping content tuples (trailing zeros trimmed) to counts.
    """
    cells, above, right = _prepare(offsets, widths)
    ncells = len(cells)
    if ncells == 0:
        return {(): 1}
    if max_entry == 0:
        return {}
    cnt = [0] * (max_entry + 1)
    box_max = [0] * ncells
    box_min = [0] * ncells
    out = {}

    def rec(k):
        if k == ncells:
            c = cnt[1:]
            while c and c[-1] == 0:
                c = c[:-1]
            key = tuple(c)
            out[key] = out.get(key, 0) + 1
            return
        lo = box_max[above[k]] + 1 if above[k] >= 0 else 1
        hi = box_min[right[k]] if right[k] >= 0 else max_entry
        if lo > hi:
            return
        full = ((1 << hi) - 1) & ~((1 << (lo - 1)) - 1)
        s = full
        while s:
            ok = True
            added = []
            t = s
            while t:
                v = t.bit_length()
                if v > 1 and cnt[v] + 1 > cnt[v - 1]:
                    ok = False
                    break
                cnt[v] += 1
                added.append(v)
                t &= ~(1 << (v - 1))
            if ok:
                box_min[k] = (s & -s).bit_length()
                box_max[k] = s.bit_length()
                rec(k + 1)
            for v in added:
                cnt[v] -= 1
            s = (s - 1) & full
        return

    rec(0)
    return out


def signed_monomial_counts(offsets, widths, max_entry, base_size):
    """Signed monomial accumulation over all set-valued tableaux (no lattice
    condition): exponent vector -> sum of (-1)^(boxes - base_size)."""
    cells, above, right = _prepare(offsets, widths)
    ncells = len(cells)
    if ncells == 0:
        return {(0,) * max_entry: 1}
    if max_entry == 0:
        return {}
    exps = [0] * (max_entry + 1)
    box_max = [0] * ncells
    box_min = [0] * ncells
    out = {}

    def rec(k, placed):
        if k == ncells:
            key = tuple(exps[1:])
            sign = -1 if (placed - base_size) % 2 else 1
            val = out.get(key, 0) + sign
            if val:
                out[key] = val
            elif key in out:
                del out[key]
            return
        lo = box_max[above[k]] + 1 if above[k] >= 0 else 1
        hi = box_min[right[k]] if right[k] >= 0 else max_entry
        if lo > hi:
            return
        full = ((1 << hi) - 1) & ~((1 << (lo - 1)) - 1)
        s = full
        while s:
            size = 0
            t = s
            while t:
                v = t.bit_length()
                exps[v] += 1
                size += 1
                t &= ~(1 << (v - 1))
            box_min[k] = (s & -s).bit_length()
            box_max[k] = s.bit_length()
            rec(k + 1, placed + size)
            t = s
            while t:
                v = t.bit_length()
                exps[v] -= 1
                t &= ~(1 << (v - 1))
            s = (s - 1) & full
        return

    rec(0, 0)
    return out
