"""Pivot-distance sampling of a text.

The first byte of the text is the pivot. A view records where the pivot
occurs, the gaps between consecutive occurrences, the length of the
pivot-free tail, and cumulative gap sums for constant-time range arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .text import EmptyInputError, Text


@dataclass(frozen=True)
class CdsView:
    """Distance-sampled view of a text of length ``m``.

    ``positions`` lists the pivot occurrence positions (ascending, first is
    always 0), ``distances`` the gaps between consecutive occurrences, ``k``
    the length of the longest pivot-free suffix, and ``prefix_sums[i]`` the
    sum of ``distances[:i+1]`` -- which equals ``positions[i+1]`` because the
    first occurrence sits at 0.

    Contents are never mutated after construction; views are safe to share.
    """

    pivot: int
    positions: list[int]
    distances: list[int]
    k: int
    prefix_sums: list[int]
    m: int

    @property
    def m_bar(self) -> int:
        """Number of sampled distances (one less than pivot occurrences)."""
        return len(self.distances)


def build_cds(x: Text) -> CdsView:
    """Sample ``x`` with its first byte as the pivot.

    One left-to-right scan; a text whose pivot never reoccurs yields a legal
    view with empty ``distances``.
    """
    if not x:
        raise EmptyInputError("build_cds: empty text")
    needle = x[:1]
    positions = []
    pos = 0
    while pos != -1:
        positions.append(pos)
        pos = x.find(needle, pos + 1)
    prefix_sums = positions[1:]
    distances = [positions[j + 1] - positions[j] for j in range(len(positions) - 1)]
    return CdsView(
        pivot=x[0],
        positions=positions,
        distances=distances,
        k=len(x) - 1 - positions[-1],
        prefix_sums=prefix_sums,
        m=len(x),
    )


@dataclass(frozen=True)
class SamplingStats:
    ratio: Fraction
    entries: int
    text_len: int


def sampling_stats(v: CdsView) -> SamplingStats:
    """Exact entry-count ratio of a view against its text length.

    The ratio also equals the byte-level overhead under a one-byte-per-entry
    encoding of the distances.
    """
    return SamplingStats(ratio=Fraction(v.m_bar, v.m), entries=v.m_bar, text_len=v.m)


def reconstruct_binary(v: CdsView, filler: int | None = None) -> Text:
    """Rebuild a two-letter text from its view.

    Over a binary alphabet the pivot layout pins every byte: pivot positions
    carry the pivot, everything else carries the single other letter. The
    filler byte defaults to 'b' (or 'a' when the pivot itself is 'b').
    """
    if filler is None:
        filler = 98 if v.pivot != 98 else 97
    if filler == v.pivot:
        raise ValueError("filler byte must differ from the pivot")
    out = bytearray(bytes([filler]) * v.m)
    for p in v.positions:
        out[p] = v.pivot
    return bytes(out)
