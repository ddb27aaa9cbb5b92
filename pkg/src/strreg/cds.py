"""Regularity queries answered from the distance-sampled view.

The central routine walks the border chain of the distance sequence from
longest to shortest. Each surviving index yields one candidate border of the
text; a candidate whose distance entry does not clear the pivot-free tail is
skipped outright (a pivot would intrude where the suffix has none), and the
rest are confirmed with a direct prefix/suffix comparison. On a binary
alphabet the comparison is redundant -- two symbols leave no freedom outside
the pivot layout -- so it is skipped.

A failed comparison moves on to the next shorter candidate rather than giving
up; candidates shrink strictly along the walk, so the first confirmed one is
the longest border.
"""

from __future__ import annotations

from bisect import bisect_right
from typing import NamedTuple

from .classical import BorderChain, border_array, is_covering
from .sampling import CdsView
from .text import Text


class CdsBorderResult(NamedTuple):
    """Longest-border answer: length in the text and the distance-border index."""

    b: int      # border length in the text; 0 if borderless
    i_bar: int  # distance-sequence border length that produced it; -1 if borderless


def _is_binary(x: Text) -> bool:
    # Cheap reject first: three distinct bytes in any window settle it.
    if len(set(x[:4096])) > 2:
        return False
    return len(set(x)) <= 2


def _borders_match(x: Text, n: int, b: int) -> bool:
    """Character-level check that x[:n] has a border of length b."""
    return x[:b] == x[n - b : n]


def _longest_border(
    x: Text,
    distances: list[int],
    prefix_sums: list[int],
    dist_border: list[int] | None,
    n: int,
    t: int,
    k: int,
    check_chars: bool,
) -> CdsBorderResult:
    """Longest border of x[:n], whose view holds t pivots and tail gap k.

    ``distances``, ``prefix_sums`` and ``dist_border`` belong to the full
    text; entries up to index t-1 are exactly those of the prefix, so the
    arrays are shared across prefix subjects.
    """
    m_bar = t - 1
    if m_bar < 1:
        # A border would repeat the pivot somewhere past position 0.
        return CdsBorderResult(0, -1)
    assert dist_border is not None
    i = dist_border[m_bar]
    while i >= 0:
        if distances[i] <= k:
            # The prefix copy of the border would contain one pivot too many.
            i = dist_border[i]
            continue
        b = n - prefix_sums[m_bar - i - 1]
        assert 0 < b < n
        if not check_chars or _borders_match(x, n, b):
            return CdsBorderResult(b, i)
        i = dist_border[i]
    return CdsBorderResult(0, -1)


def _require_match(v: CdsView, x: Text) -> None:
    if v.m != len(x):
        raise ValueError(f"view was built for length {v.m}, text has length {len(x)}")
    if x and v.pivot != x[0]:
        raise ValueError("view pivot does not match the text's first byte")


def border_cds(v: CdsView, x: Text, check_chars: bool | None = None) -> CdsBorderResult:
    """Longest border of ``x`` plus the distance-border length that produced it.

    With ``check_chars=None`` candidates are verified character-wise unless
    the text is binary; pass True or False to force either mode (forcing
    False is only sound on binary texts).
    """
    _require_match(v, x)
    if v.m_bar < 1:
        return CdsBorderResult(0, -1)
    if check_chars is None:
        check_chars = not _is_binary(x)
    dist_border = border_array(v.distances)
    return _longest_border(
        x, v.distances, v.prefix_sums, dist_border, v.m, len(v.positions), v.k, check_chars
    )


def period_cds(v: CdsView, x: Text) -> int:
    """Smallest period of ``x``, from the sampled view."""
    _require_match(v, x)
    return v.m - border_cds(v, x).b


def borders_cds(v: CdsView, x: Text) -> BorderChain:
    """Non-periodic border chain of ``x`` from the sampled view.

    Matches the classical chain element for element: each step takes the
    longest border of the current prefix subject, applies the periodicity
    reduction when it exceeds half the subject, and recurses into that
    prefix. The view of each shorter prefix is obtained by locating the cut
    in the cumulative sums, not by resampling.
    """
    _require_match(v, x)
    positions, distances, prefix_sums = v.positions, v.distances, v.prefix_sums
    dist_border = border_array(distances) if distances else None
    check_chars = not _is_binary(x)
    chain: BorderChain = []
    n = v.m
    t = len(positions)
    while t > 1:
        k = n - 1 - positions[t - 1]
        b = _longest_border(x, distances, prefix_sums, dist_border, n, t, k, check_chars).b
        if b == 0:
            break
        if 2 * b > n:
            p = n - b
            b = p + n % p
        chain.append(b)
        n = b
        t = bisect_right(positions, n - 1)
    return chain


def occurrences_via_cds(v: CdsView, x: Text, b: int) -> list[int]:
    """Ascending start positions of the length-``b`` prefix of ``x`` inside ``x``.

    The prefix begins with the pivot, so only pivot positions can start an
    occurrence; each candidate is confirmed with one slice comparison.
    """
    _require_match(v, x)
    if not 1 <= b <= v.m:
        raise ValueError(f"prefix length must lie in [1, {v.m}], got {b}")
    prefix = x[:b]
    limit = v.m - b
    out = []
    for q in v.positions:
        if q > limit:
            break
        if x[q : q + b] == prefix:
            out.append(q)
    return out


def shortest_cover_cds(v: CdsView, x: Text) -> int:
    """Length of the shortest cover of ``x``, from the sampled view.

    Candidates are the chain borders ascending, then the text itself; each is
    tested against the full text with the occurrence gap criterion.
    """
    _require_match(v, x)
    m = v.m
    for b in reversed(borders_cds(v, x)):
        if is_covering(occurrences_via_cds(v, x, b), b, m):
            return b
    return m
