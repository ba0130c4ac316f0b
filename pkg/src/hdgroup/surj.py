"""Degeneracy words and the ordered sets S(n), P(n).

A tuple alpha = (i_r, ..., i_1) with i_r > ... > i_1 stands for the
composite s_{i_r} ... s_{i_1} (s_{i_1} applied first).
"""

from __future__ import annotations

from functools import cmp_to_key, lru_cache
from typing import Sequence, Tuple

SurjTuple = Tuple[int, ...]


def normalize_degeneracies(word: Sequence[int]) -> SurjTuple:
    """Rewrite s_{w0} s_{w1} ... (w0 outermost) into strictly decreasing form.

    Uses s_i s_j = s_{j+1} s_i for i <= j.
    """
    w = list(word)
    changed = True
    while changed:
        changed = False
        for k in range(len(w) - 1):
            a, b = w[k], w[k + 1]
            if a <= b:
                w[k], w[k + 1] = b + 1, a
                changed = True
    return tuple(w)


def face_through_degeneracies(i: int, alpha: Sequence[int]):
    """Push d_i through s_alpha.

    Returns (beta, k): d_i s_alpha = s_beta d_k, with k = None when the face
    is absorbed (d_i s_alpha = s_beta).
    """
    word = list(alpha)  # outermost first
    out = []
    pos = 0
    while pos < len(word):
        j = word[pos]
        if i < j:
            out.append(j - 1)
        elif i == j or i == j + 1:
            out.extend(word[pos + 1:])
            return normalize_degeneracies(out), None
        else:
            out.append(j)
            i -= 1
        pos += 1
    return normalize_degeneracies(out), i


def _cmp(a: SurjTuple, b: SurjTuple) -> int:
    # compare from the smallest index i_1 upward
    ra, rb = a[::-1], b[::-1]
    for x, y in zip(ra, rb):
        if x != y:
            return -1 if x > y else 1
    if len(ra) == len(rb):
        return 0
    return -1 if len(ra) < len(rb) else 1


def s_less(a: SurjTuple, b: SurjTuple) -> bool:
    """The order on S(n): a < b."""
    return _cmp(tuple(a), tuple(b)) < 0


@lru_cache(maxsize=None)
def gen_S(n: int) -> Tuple[SurjTuple, ...]:
    """All 2^n strictly decreasing tuples over 0..n-1 in increasing order."""
    tuples = []
    for mask in range(1 << n):
        tuples.append(tuple(i for i in range(n - 1, -1, -1) if mask >> i & 1))
    return tuple(sorted(tuples, key=cmp_to_key(_cmp)))


@lru_cache(maxsize=None)
def gen_P(n: int) -> Tuple[Tuple[SurjTuple, SurjTuple], ...]:
    """Pairs (alpha, beta) of nonempty disjoint tuples with beta < alpha."""
    S = [a for a in gen_S(n) if a]
    out = []
    for a in S:
        for b in S:
            if set(a) & set(b):
                continue
            if s_less(b, a):
                out.append((a, b))
    return tuple(out)


def fmt_tuple(a: SurjTuple, n: int = None) -> str:
    if not a:
        return "∅" if n is None else f"∅{n}"
    return "(" + ",".join(map(str, a)) + ")"


def fmt_pair(p) -> str:
    return fmt_tuple(p[0]) + fmt_tuple(p[1])
