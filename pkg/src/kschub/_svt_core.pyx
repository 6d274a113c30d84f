# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled set-valued tableau counting kernels.

Same contract as the pure twin `_svt_py`; cells traverse in reverse reading
order so the reverse-lattice condition prunes letter by letter.  The exact
counting routine releases the GIL so sweeps can fan out across threads.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memset


cdef inline int _bitlen(unsigned long long x) noexcept nogil:
    cdef int n = 0
    while x:
        x >>= 1
        n += 1
    return n


cdef int _fill_links(object offsets, object widths, int** above_out, int** right_out) except -2:
    """Build traversal links; returns the number of cells (arrays via malloc)."""
    cdef list cells = []
    cdef int r, c, off, w, k
    for r in range(len(offsets)):
        off = offsets[r]
        w = widths[r]
        for c in range(off + w - 1, off - 1, -1):
            cells.append((r, c))
    cdef int ncells = len(cells)
    index = {rc: k for k, rc in enumerate(cells)}
    cdef int* above = <int*> malloc(max(ncells, 1) * sizeof(int))
    cdef int* right = <int*> malloc(max(ncells, 1) * sizeof(int))
    if above == NULL or right == NULL:
        free(above)
        free(right)
        raise MemoryError()
    for k in range(ncells):
        r, c = cells[k]
        above[k] = index.get((r - 1, c), -1)
        right[k] = index.get((r, c + 1), -1)
    above_out[0] = above
    right_out[0] = right
    return ncells


cdef long long _cwc_rec(int k, int placed, int ncells, int total, int max_entry,
                        int* above, int* right, int* box_min, int* box_max,
                        int* cnt, int* content) noexcept nogil:
    if k == ncells:
        return 1 if placed == total else 0
    cdef int remaining = total - placed
    cdef int left = ncells - k
    if remaining < left or remaining > left * max_entry:
        return 0
    cdef int lo = box_max[above[k]] + 1 if above[k] >= 0 else 1
    cdef int hi = box_min[right[k]] if right[k] >= 0 else max_entry
    if lo > hi:
        return 0
    cdef unsigned long long full = ((<unsigned long long> 1 << hi) - 1) & ~((<unsigned long long> 1 << (lo - 1)) - 1)
    cdef unsigned long long s = full, t
    cdef long long result = 0
    cdef int ok, size, v, u
    while s:
        ok = 1
        size = 0
        t = s
        while t:
            v = _bitlen(t)
            if cnt[v] >= content[v - 1] or (v > 1 and cnt[v] + 1 > cnt[v - 1]):
                ok = 0
                break
            cnt[v] += 1
            size += 1
            t &= ~(<unsigned long long> 1 << (v - 1))
        if ok:
            box_min[k] = _bitlen(s & (~s + 1))
            box_max[k] = _bitlen(s)
            result += _cwc_rec(k + 1, placed + size, ncells, total, max_entry,
                               above, right, box_min, box_max, cnt, content)
        # undo the counts that were actually incremented
        t = s
        u = 0
        while t and u < size:
            v = _bitlen(t)
            cnt[v] -= 1
            u += 1
            t &= ~(<unsigned long long> 1 << (v - 1))
        s = (s - 1) & full
    return result


def count_with_content(offsets, widths, content):
    """Count lattice set-valued tableaux with word content exactly `content`."""
    content = tuple(content)
    cdef int max_entry = len(content)
    if max_entry > 64:
        raise ValueError("at most 64 distinct letters supported")
    cdef int* above = NULL
    cdef int* right = NULL
    cdef int ncells = _fill_links(offsets, widths, &above, &right)
    cdef int total = sum(content)
    if ncells == 0:
        free(above)
        free(right)
        return 1 if total == 0 else 0
    if total < ncells or max_entry == 0:
        free(above)
        free(right)
        return 0
    cdef int* box_min = <int*> malloc(ncells * sizeof(int))
    cdef int* box_max = <int*> malloc(ncells * sizeof(int))
    cdef int* cnt = <int*> malloc((max_entry + 1) * sizeof(int))
    cdef int* ctn = <int*> malloc(max_entry * sizeof(int))
    if box_min == NULL or box_max == NULL or cnt == NULL or ctn == NULL:
        free(above); free(right); free(box_min); free(box_max); free(cnt); free(ctn)
        raise MemoryError()
    memset(cnt, 0, (max_entry + 1) * sizeof(int))
    cdef int i
    for i in range(max_entry):
        ctn[i] = content[i]
    cdef long long result
    with nogil:
        result = _cwc_rec(0, 0, ncells, total, max_entry,
                          above, right, box_min, box_max, cnt, ctn)
    free(above); free(right); free(box_min); free(box_max); free(cnt); free(ctn)
    return result


cdef void _cc_rec(int k, int ncells, int max_entry,
                  int* above, int* right, int* box_min, int* box_max,
                  int* cnt, dict out):
    cdef int last, v, u, size, ok
    cdef tuple key
    if k == ncells:
        last = max_entry
        while last > 0 and cnt[last] == 0:
            last -= 1
        key = tuple([cnt[v] for v in range(1, last + 1)])
        out[key] = out.get(key, 0) + 1
        return
    cdef int lo = box_max[above[k]] + 1 if above[k] >= 0 else 1
    cdef int hi = box_min[right[k]] if right[k] >= 0 else max_entry
    if lo > hi:
        return
    cdef unsigned long long full = ((<unsigned long long> 1 << hi) - 1) & ~((<unsigned long long> 1 << (lo - 1)) - 1)
    cdef unsigned long long s = full, t
    while s:
        ok = 1
        size = 0
        t = s
        while t:
            v = _bitlen(t)
            if v > 1 and cnt[v] + 1 > cnt[v - 1]:
                ok = 0
                break
            cnt[v] += 1
            size += 1
            t &= ~(<unsigned long long> 1 << (v - 1))
        if ok:
            box_min[k] = _bitlen(s & (~s + 1))
            box_max[k] = _bitlen(s)
            _cc_rec(k + 1, ncells, max_entry, above, right, box_min, box_max, cnt, out)
        t = s
        u = 0
        while t and u < size:
            v = _bitlen(t)
            cnt[v] -= 1
            u += 1
            t &= ~(<unsigned long long> 1 << (v - 1))
        s = (s - 1) & full


def content_counts(offsets, widths, max_entry):
    """Counts of lattice set-valued tableaux per word content.

    Returns a dict mapping content tuples (trailing zeros trimmed) to counts.
    """
    if max_entry > 64:
        raise ValueError("at most 64 distinct letters supported")
    cdef int* above = NULL
    cdef int* right = NULL
    cdef int ncells = _fill_links(offsets, widths, &above, &right)
    if ncells == 0:
        free(above)
        free(right)
        return {(): 1}
    if max_entry == 0:
        free(above)
        free(right)
        return {}
    cdef int* box_min = <int*> malloc(ncells * sizeof(int))
    cdef int* box_max = <int*> malloc(ncells * sizeof(int))
    cdef int* cnt = <int*> malloc((max_entry + 1) * sizeof(int))
    if box_min == NULL or box_max == NULL or cnt == NULL:
        free(above); free(right); free(box_min); free(box_max); free(cnt)
        raise MemoryError()
    memset(cnt, 0, (max_entry + 1) * sizeof(int))
    cdef dict out = {}
    _cc_rec(0, ncells, <int> max_entry, above, right, box_min, box_max, cnt, out)
    free(above); free(right); free(box_min); free(box_max); free(cnt)
    return out


cdef void _smc_rec(int k, int placed, int base_size, int ncells, int max_entry,
                   int* above, int* right, int* box_min, int* box_max,
                   int* exps, dict out):
    cdef int v, size, val
    cdef tuple key
    if k == ncells:
        key = tuple([exps[v] for v in range(1, max_entry + 1)])
        val = out.get(key, 0) + (-1 if (placed - base_size) % 2 else 1)
        if val:
            out[key] = val
        elif key in out:
            del out[key]
        return
    cdef int lo = box_max[above[k]] + 1 if above[k] >= 0 else 1
    cdef int hi = box_min[right[k]] if right[k] >= 0 else max_entry
    if lo > hi:
        return
    cdef unsigned long long full = ((<unsigned long long> 1 << hi) - 1) & ~((<unsigned long long> 1 << (lo - 1)) - 1)
    cdef unsigned long long s = full, t
    while s:
        size = 0
        t = s
        while t:
            v = _bitlen(t)
            exps[v] += 1
            size += 1
            t &= ~(<unsigned long long> 1 << (v - 1))
        box_min[k] = _bitlen(s & (~s + 1))
        box_max[k] = _bitlen(s)
        _smc_rec(k + 1, placed + size, base_size, ncells, max_entry,
                 above, right, box_min, box_max, exps, out)
        t = s
        while t:
            v = _bitlen(t)
            exps[v] -= 1
            t &= ~(<unsigned long long> 1 << (v - 1))
        s = (s - 1) & full


def signed_monomial_counts(offsets, widths, max_entry, base_size):
    """Signed monomial accumulation over all set-valued tableaux (no lattice
    condition): exponent vector -> sum of (-1)^(boxes - base_size)."""
    if max_entry > 64:
        raise ValueError("at most 64 distinct letters supported")
    cdef int* above = NULL
    cdef int* right = NULL
    cdef int ncells = _fill_links(offsets, widths, &above, &right)
    if ncells == 0:
        free(above)
        free(right)
        return {(0,) * max_entry: 1}
    if max_entry == 0:
        free(above)
        free(right)
        return {}
    cdef int* box_min = <int*> malloc(ncells * sizeof(int))
    cdef int* box_max = <int*> malloc(ncells * sizeof(int))
    cdef int* exps = <int*> malloc((max_entry + 1) * sizeof(int))
    if box_min == NULL or box_max == NULL or exps == NULL:
        free(above); free(right); free(box_min); free(box_max); free(exps)
        raise MemoryError()
    memset(exps, 0, (max_entry + 1) * sizeof(int))
    cdef dict out = {}
    _smc_rec(0, 0, <int> base_size, ncells, <int> max_entry,
             above, right, box_min, box_max, exps, out)
    free(above); free(right); free(box_min); free(box_max); free(exps)
    return out
