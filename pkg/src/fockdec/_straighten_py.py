"""Pure-Python wedge normal-ordering kernel.

Heads are tuples of integers; a head of length k stands for the wedge word
whose implicit tail continues with -k, -k-1, ...  Coefficients are raw
exponent->coefficient dicts so the compiled twin can share the exact same
data layout.  `fockdec.kernel` selects between this module and the compiled
`_straighten_cy` at import time; both must stay behaviourally identical.

Rewriting an adjacent out-of-order pair (a, b) with a < b and i = (b-a) mod n:

  i == 0:  -> -(b, a)
  i != 0:  -> -q^{-1} (b, a)
            + (q^{-2}-1) * sum over t >= 0 of (-1)^t q^{-t} (b-d_t, a+d_t)
  where d_t alternates i, n, n+i, 2n, 2n+i, ... and the series keeps a term
  only while its first index strictly exceeds its second.

All indices generated lie strictly inside the interval spanned by the pair
they replace, so a head whose entries exceed -len(head) stays that way.
"""

from __future__ import annotations

from fockdec.errors import StepBudgetExceeded

KERNEL_NAME = "pure"

DEFAULT_STEP_BUDGET = 1_000_000

# (n, head) -> {normalized_head: {exponent: coefficient}}
_CACHE: dict = {}


def clear_cache() -> None:
    _CACHE.clear()


def cache_size() -> int:
    return len(_CACHE)


def _poly_mul(f: dict, g: dict) -> dict:
    out: dict = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = e1 + e2
            c = out.get(e, 0) + c1 * c2
            if c:
                out[e] = c
            else:
                del out[e]
    return out


def _expand(head: tuple, j: int, n: int) -> list:
    """Rewrite the ascending adjacent pair at positions j, j+1.

    Returns a list of (coefficient_dict, new_head) pairs.
    """
    a = head[j]
    b = head[j + 1]
    prefix = head[:j]
    suffix = head[j + 2 :]
    swapped = prefix + (b, a) + suffix
    i = (b - a) % n
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
        # (q^{-2} - 1) * (+-q^{-t})
        coeff = {-t - 2: sign, -t: -sign}
        children.append((coeff, prefix + (first, second) + suffix))
        t += 1
    return children


def straighten_raw(head: tuple, n: int, budget: int = DEFAULT_STEP_BUDGET) -> dict:
    """Expand a head into normalized wedges: {head: {exponent: coefficient}}.

    Results are memoized per (n, head); callers must treat the returned
    mapping and its values as read-only.
    """
    key = (n, head)
    cached = _CACHE.get(key)
    if cached is not None:
        return cached
    steps = 0
    stack = [head]
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
        missing = [child for _, child in children if (n, child) not in _CACHE]
        if missing:
            stack.extend(missing)
            continue
        steps += 1
        if steps > budget:
            raise StepBudgetExceeded(
                f"straightening of {head} (n={n}) exceeded {budget} rewrite steps"
            )
        out: dict = {}
        for coeff, child in children:
            for child_head, child_coeff in _CACHE[(n, child)].items():
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
