# cython: language_level=3
"""Compiled kernels for the hot inner loops.

Behavioural twin of ``weylchar._core_py``; see that module for the
documented reference semantics.  Matrix entries and counters stay
arbitrary-precision Python integers; only loop indices are C-typed.
"""

STRIDE = 1024

cdef int _STRIDE = 1024


def encode_pair(i, j):
    return i * STRIDE + j


def decode_pair(p):
    return divmod(p, STRIDE)


def column_ideal(col):
    """All columns below ``col``, sorted by increasing invlex weight."""
    cdef int k = len(col)
    if k == 0:
        return ((),)
    out = []
    s = [0] * k
    _ideal_walk(tuple(col), k, 0, 1, s, out)
    out.sort(key=_revkey)
    return tuple(out)


def _revkey(c):
    return c[::-1]


cdef void _ideal_walk(tuple col, int k, int t, int lo, list s, list out):
    cdef int v
    cdef int top = col[t]
    for v in range(lo, top + 1):
        s[t] = v
        if t + 1 == k:
            out.append(tuple(s))
        else:
            _ideal_walk(col, k, t + 1, v + 1, s, out)


def count_column_ideal(col):
    """Number of columns below ``col``, by prefix-sum DP (no enumeration)."""
    cdef int k = len(col)
    if k == 0:
        return 1
    cdef int top = col[-1]
    cdef int v, t, bound
    ways = [0] * (top + 1)
    bound = col[0]
    for v in range(1, bound + 1):
        ways[v] = 1
    for t in range(1, k):
        new = [0] * (top + 1)
        run = 0
        bound = col[t]
        for v in range(1, bound + 1):
            run = run + ways[v - 1]
            new[v] = run
        ways = new
    return sum(ways)


def rank_columns(columns):
    """Total number of vacant rows weakly above the boxes, column by column."""
    cdef int m
    total = 0
    for col in columns:
        m = len(col)
        total += sum(col) - m * (m + 1) // 2
    return total


def weight_of_columns(columns, n):
    """Exponent vector: entry ``i-1`` counts the columns containing row ``i``."""
    cdef int i
    w = [0] * n
    for col in columns:
        for i in col:
            w[i - 1] += 1
    return tuple(w)


def weight_support(columns, n, cap):
    """Set of weights of the diagrams below ``columns``, as length-``n`` tuples."""
    cdef int i
    acc = {(0,) * n}
    for col in columns:
        if not col:
            continue
        choices = column_ideal(col)
        new = set()
        for w in acc:
            for ch in choices:
                w2 = list(w)
                for i in ch:
                    w2[i - 1] += 1
                new.add(tuple(w2))
            if len(new) > cap:
                raise ValueError(f"weight support exceeds cap={cap}")
        acc = new
    return acc


def group_by_weight(columns, n, cap):
    """Group the diagrams below ``columns`` by weight, in enumeration order."""
    ideals = [column_ideal(c) for c in columns]
    cdef int ncols = len(ideals)
    out = {}
    w = [0] * n
    chosen = [()] * ncols
    counter = [0]
    _group_walk(ideals, ncols, 0, w, chosen, out, counter, cap)
    return out


cdef void _group_walk(list ideals, int ncols, int j, list w, list chosen,
                      dict out, list counter, cap) except *:
    cdef int i
    if j == ncols:
        counter[0] += 1
        if counter[0] > cap:
            raise ValueError(f"enumeration exceeds cap={cap}")
        key = tuple(w)
        members = out.get(key)
        if members is None:
            out[key] = members = []
        members.append(tuple(chosen))
        return
    for ch in ideals[j]:
        chosen[j] = ch
        for i in ch:
            w[i - 1] += 1
        _group_walk(ideals, ncols, j + 1, w, chosen, out, counter, cap)
        for i in ch:
            w[i - 1] -= 1


def column_det(dcol, ccol):
    """Signed permutation expansion of an upper-triangular submatrix minor."""
    cdef int k = len(dcol)
    if len(ccol) != k:
        raise ValueError(f"submatrix is not square: {len(ccol)} rows, {k} columns")
    if k == 0:
        return {(): 1}
    terms = {}
    used = [False] * k
    pairs = [0] * k
    _det_assign(tuple(dcol), tuple(ccol), k, 0, 1, used, pairs, terms)
    return {key: v for key, v in terms.items() if v}


cdef void _det_assign(tuple dcol, tuple ccol, int k, int a, int sign,
                      list used, list pairs, dict terms):
    cdef int b, b2, swaps, i
    if a == k:
        key = tuple(pairs)
        terms[key] = terms.get(key, 0) + sign
        return
    i = ccol[a]
    for b in range(k):
        if used[b] or i > <int> dcol[b]:
            continue
        swaps = 0
        for b2 in range(b + 1, k):
            if used[b2]:
                swaps += 1
        used[b] = True
        pairs[a] = i * _STRIDE + <int> dcol[b]
        _det_assign(dcol, ccol, k, a + 1, -sign if swaps & 1 else sign,
                    used, pairs, terms)
        used[b] = False


def ymul(a, b):
    """Product of two polynomials in the matrix indeterminates."""
    out = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            key = tuple(sorted(ka + kb))
            c = out.get(key, 0) + va * vb
            out[key] = c
    return {key: v for key, v in out.items() if v}


def bareiss_rank(rows):
    """Exact rank of an integer matrix by fraction-free elimination."""
    cdef int nr = len(rows)
    if nr == 0:
        return 0
    cdef int nc = len(rows[0])
    m = [list(row) for row in rows]
    cdef int rank = 0
    cdef int pr = 0
    cdef int pc, r, c, piv
    prev = 1
    for pc in range(nc):
        piv = -1
        for r in range(pr, nr):
            if m[r][pc]:
                piv = r
                break
        if piv < 0:
            continue
        if piv != pr:
            m[pr], m[piv] = m[piv], m[pr]
        mp = m[pr]
        p = mp[pc]
        for r in range(pr + 1, nr):
            mr = m[r]
            c0 = mr[pc]
            for c in range(pc + 1, nc):
                q, rem = divmod(p * mr[c] - c0 * mp[c], prev)
                if rem:
                    raise ArithmeticError("fraction-free elimination produced a non-exact division")
                mr[c] = q
            mr[pc] = 0
        prev = p
        pr += 1
        rank += 1
        if pr == nr:
            break
    return rank
