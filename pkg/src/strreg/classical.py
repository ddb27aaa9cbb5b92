"""Border-array algorithms for periods and covers, plus brute-force oracles.

``border_array`` is generic over the symbol domain: it accepts bytes as well
as integer sequences, because the same routine is reapplied to distance
sequences produced by the sampling module.

The ``naive_*`` functions check the definitions directly and serve as ground
truth in the test suites; quadratic behavior is acceptable there.
"""

from __future__ import annotations

from typing import Sequence

from .text import EmptyInputError, Text

# values[i] = longest proper border of the length-i prefix; values[0] = -1.
BorderArray = list[int]
# Strictly decreasing border lengths surviving the periodicity reduction.
BorderChain = list[int]


def border_array(s: Sequence[int]) -> BorderArray:
    """Longest-proper-border length of every prefix of ``s``.

    Runs in O(len(s)) symbol comparisons.
    """
    n = len(s)
    if n == 0:
        raise EmptyInputError("border_array: empty sequence")
    values = [0] * (n + 1)
    values[0] = -1
    k = -1
    for j in range(n):
        c = s[j]
        while k >= 0 and s[k] != c:
            k = values[k]
        k += 1
        values[j + 1] = k
    return values


def period_classical(x: Text) -> int:
    """Smallest period of ``x``, via the period/border length duality."""
    if not x:
        raise EmptyInputError("period_classical: empty text")
    return len(x) - border_array(x)[len(x)]


def naive_period(x: Text) -> int:
    """Smallest p such that x[i] == x[i+p] for every valid i (oracle).

    Each candidate p is checked directly against the definition with one
    shifted-slice comparison.
    """
    if not x:
        raise EmptyInputError("naive_period: empty text")
    m = len(x)
    for p in range(1, m):
        if x[: m - p] == x[p:]:
            return p
    return m


def occurrences(pattern: Text, x: Text) -> list[int]:
    """Ascending start positions of ``pattern`` in ``x``, overlaps included."""
    if len(pattern) == 0:
        raise ValueError("occurrences: empty pattern")
    out = []
    i = x.find(pattern)
    while i != -1:
        out.append(i)
        i = x.find(pattern, i + 1)
    return out


def is_covering(occ: Sequence[int], b: int, m: int) -> bool:
    """Whether occurrences ``occ`` of a length-``b`` string cover a length-``m`` string.

    Equivalent to the positional definition: first occurrence at 0, last at
    ``m - b``, and no gap between consecutive starts exceeding ``b``.
    """
    if not 1 <= b <= m:
        raise ValueError(f"is_covering: b must lie in [1, {m}], got {b}")
    for j in range(len(occ) - 1):
        if occ[j] > occ[j + 1]:
            raise ValueError("is_covering: positions not ascending")
    if not occ or occ[0] != 0 or occ[-1] != m - b:
        return False
    return all(occ[j + 1] - occ[j] <= b for j in range(len(occ) - 1))


def border_chain(x: Text) -> BorderChain:
    """Decreasing non-periodic border lengths of ``x``.

    Iterates the border function starting from the whole text; whenever the
    current subject of length n has a border of length l > n/2, l is replaced
    by (n - l) + n % (n - l) before recursing. That collapses a border of the
    shape u^r u' down to uu', which is still a border of the subject.
    """
    if not x:
        raise EmptyInputError("border_chain: empty text")
    values = border_array(x)
    chain: BorderChain = []
    n = len(x)
    l = values[n]
    while l > 0:
        if 2 * l > n:
            p = n - l
            l = p + n % p
        chain.append(l)
        n = l
        l = values[n]
    return chain


def shortest_cover_classical(x: Text) -> int:
    """Length of the shortest cover of ``x``; equals len(x) iff superprimitive.

    Candidates are the chain borders in ascending order; each is tested
    against the full text with the occurrence gap criterion.
    """
    if not x:
        raise EmptyInputError("shortest_cover_classical: empty text")
    m = len(x)
    for b in reversed(border_chain(x)):
        if is_covering(occurrences(x[:b], x), b, m):
            return b
    return m


def naive_shortest_cover(x: Text) -> int:
    """Smallest prefix length whose occurrences cover ``x`` (oracle).

    Tries every prefix length in turn; O(m^2) is fine in the oracle role.
    """
    if not x:
        raise EmptyInputError("naive_shortest_cover: empty text")
    m = len(x)
    for b in range(1, m):
        if is_covering(occurrences(x[:b], x), b, m):
            return b
    return m
