# cython: language_level=3
"""Compiled wedge normal-ordering kernel.

Behavioural twin of fockdec._straighten_py (see that module for the rewrite
rules); coefficients stay arbitrary-precision Python integers, the win comes
from compiling the scan/rewrite/accumulate loops.
"""

from fockdec.errors import StepBudgetExceeded

KERNEL_NAME = "cython"

DEFAULT_STEP_BUDGET = 1_000_000

_CACHE = {}


def clear_cache():
    _CACHE.clear()


def cache_size():
    return len(_CACHE)


cdef dict _poly_mul(dict f, dict g):
    cdef dict out = {}
    cdef object e1, c1, e2, c2, e, c
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = e1 + e2
            c = out.get(e, 0) + c1 * c2
            if c:
                out[e] = c
            else:
                del out[e]
    return out


cdef list _expand(tuple head, Py_ssize_t j, long n):
    cdef long a = head[j]
    cdef long b = head[j + 1]
    cdef tuple prefix = head[:j]
    cdef tuple suffix = head[j + 2:]
    cdef tuple swapped = prefix + (b, a) + suffix
    cdef long i = (b - a) % n
    cdef list children
    cdef long t, delta, first, second, sign
    if i == 0:
        return [({0: -1}, swapped)]
    children = [({-1: -1}, swapped)]
    t = 0
    while True:
        if t % 2 == 0:
            delta = (t // 2) * n + i
        else:
            delta = ((t + 1) // 2) * n
        first = b - delta
        second = a + delta
        if first <= second:
            break
        sign = -1 if t % 2 else 1
        children.append(({-t - 2: sign, -t: -sign}, prefix + (first, second) + suffix))
        t += 1
    return children


def straighten_raw(tuple head, long n, long budget=DEFAULT_STEP_BUDGET):
    """Expand a head into normalized wedges: {head: {exponent: coefficient}}.

    Results are memoized per (n, head); callers must treat the returned
    mapping and its values as read-only.
    """
    cdef tuple key = (n, head)
    cached = _CACHE.get(key)
    if cached is not None:
        return cached
    cdef long steps = 0
    cdef list stack = [head]
    cdef tuple h, child, child_head
    cdef Py_ssize_t pos, j
    cdef dict out, coeff, term, acc, child_coeff
    cdef list children, missing
    cdef object e, c, new
    while stack:
        h = stack[-1]
        if (n, h) in _CACHE:
            stack.pop()
            continue
        j = -1
        for pos in range(len(h) - 1):
            if h[pos] <= h[pos + 1]:
                j = pos
                break
        if j < 0:
            _CACHE[(n, h)] = {h: {0: 1}}
            stack.pop()
            continue
        if h[j] == h[j + 1]:
            _CACHE[(n, h)] = {}
            stack.pop()
            continue
        children = _expand(h, j, n)
        missing = [pair[1] for pair in children if (n, pair[1]) not in _CACHE]
        if missing:
            stack.extend(missing)
            continue
        steps += 1
        if steps > budget:
            raise StepBudgetExceeded(
                f"straightening of {head} (n={n}) exceeded {budget} rewrite steps"
            )
        out = {}
        for coeff, child in children:
            child_result = _CACHE[(n, child)]
            for child_head, child_coeff in (<dict>child_result).items():
                term = _poly_mul(coeff, child_coeff)
                acc = out.get(child_head)
                if acc is None:
                    out[child_head] = term
                else:
                    for e, c in term.items():
                        new = acc.get(e, 0) + c
                        if new:
                            acc[e] = new
                        else:
                            del acc[e]
                    if not acc:
                        del out[child_head]
        _CACHE[(n, h)] = out
        stack.pop()
    return _CACHE[key]
