"""Independent verification oracles.

Three routes to the same numbers, none sharing logic with the polynomial
iteration they check: explicit tableau enumeration, the charge statistic on
reading words, and a strip-peeling count that never materializes a tableau.
"""

from __future__ import annotations

from bisect import bisect_right
from functools import lru_cache

from .partitions import Partition, dominates, weight
from .polynomials import TPoly


class ContentMismatch(ValueError):
    """Word letter multiplicities disagree with the stated content."""


class Tableau:
    """Semistandard filling stored as a tuple of rows."""

    __slots__ = ("rows",)

    def __init__(self, rows) -> None:
        self.rows = tuple(tuple(r) for r in rows)

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def content(self) -> Partition:
        counts: dict[int, int] = {}
        for row in self.rows:
            for v in row:
                counts[v] = counts.get(v, 0) + 1
        if not counts:
            return ()
        return tuple(counts.get(v, 0) for v in range(1, max(counts) + 1))

    def to_json_obj(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(r) for r in self.rows]}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tableau):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Tableau({[list(r) for r in self.rows]!r})"


def is_semistandard(t: Tableau) -> bool:
    """Rows weakly increase, columns strictly increase, row lengths weakly decrease."""
    rows = t.rows
    for r, row in enumerate(rows):
        if any(row[c] < row[c - 1] for c in range(1, len(row))):
            return False
        if r:
            if len(row) > len(rows[r - 1]):
                return False
            if any(row[c] <= rows[r - 1][c] for c in range(len(row))):
                return False
    return True


def enumerate_ssyt(shape: Partition, content: Partition) -> list[Tableau]:
    """All semistandard tableaux of the given shape and content.

    Row-by-row backtracking with column-strictness pruning; results come out
    in row-major lexicographic order.  Empty when the weights differ or the
    shape does not dominate the content.
    """
    if weight(shape) != weight(content) or not dominates(shape, content):
        return []
    letters = len(content)
    remaining = list(content)
    rows = [[0] * r for r in shape]
    nrows = len(shape)
    out: list[Tableau] = []

    def fill(r: int, c: int) -> None:
        if r == nrows:
            out.append(Tableau(rows))
            return
        if c + 1 < shape[r]:
            nr, nc = r, c + 1
        else:
            nr, nc = r + 1, 0
        lo = rows[r][c - 1] if c else 1
        if r:
            above = rows[r - 1][c] + 1
            if above > lo:
                lo = above
        for v in range(lo, letters + 1):
            if remaining[v - 1]:
                remaining[v - 1] -= 1
                rows[r][c] = v
                fill(nr, nc)
                remaining[v - 1] += 1

    fill(0, 0)
    return out


def reading_word(t: Tableau) -> tuple[int, ...]:
    """Rows top to bottom, each read right to left."""
    out: list[int] = []
    for row in t.rows:
        out.extend(reversed(row))
    return tuple(out)


def charge(word: tuple[int, ...], content: Partition) -> int:
    """Charge of a word whose letter multiplicities form the given partition.

    Repeatedly extract a standard subword: take the leftmost 1, then for
    each next letter the leftmost occurrence strictly right of the previous
    pick, wrapping cyclically to the leftmost occurrence overall when none
    exists; stop at the first absent letter and delete the picks.  Each
    extracted subword, read in original left-to-right order, contributes
    the sum of its letter indices: letter 1 has index 0 and the index grows
    by one exactly when a letter sits left of its predecessor.
    """
    counts: dict[int, int] = {}
    for v in word:
        counts[v] = counts.get(v, 0) + 1
    expected = {i: m for i, m in enumerate(content, 1)}
    if counts != expected:
        raise ContentMismatch(f"word multiplicities {counts} != content {expected}")

    positions: dict[int, list[int]] = {}
    for i, v in enumerate(word):
        positions.setdefault(v, []).append(i)

    total = 0
    while positions.get(1):
        cur = positions[1].pop(0)
        pos_of = {1: cur}
        v = 2
        while positions.get(v):
            plist = positions[v]
            j = bisect_right(plist, cur)
            cur = plist.pop(j) if j < len(plist) else plist.pop(0)
            pos_of[v] = cur
            v += 1
        idx = 0
        for r in range(2, v):
            if pos_of[r] < pos_of[r - 1]:
                idx += 1
            total += idx
    return total


def kostka_via_charge(shape: Partition, content: Partition) -> TPoly:
    """Charge generating function over all tableaux of the pair."""
    coeffs: dict[int, int] = {}
    for t in enumerate_ssyt(shape, content):
        e = charge(reading_word(t), content)
        coeffs[e] = coeffs.get(e, 0) + 1
    return TPoly(coeffs)


def kostka_number(shape: Partition, content: Partition) -> int:
    """Tableau count by peeling one letter at a time; no tableau is built."""
    if weight(shape) != weight(content):
        return 0
    return _peel_count(shape, content)


@lru_cache(maxsize=None)
def _peel_count(shape: Partition, content: Partition) -> int:
    if not content:
        return 1 if not shape else 0
    size = content[-1]
    rest = content[:-1]
    return sum(_peel_count(inner, rest) for inner in _strip_removals(shape, size))


def _strip_removals(shape: Partition, m: int) -> list[Partition]:
    # all sigma with shape/sigma a horizontal m-strip: shape_j >= sigma_j >= shape_{j+1}
    l = len(shape)
    out: list[Partition] = []
    row = [0] * l

    def fill(j: int, left: int) -> None:
        if left < 0:
            return
        if j == l:
            if left == 0:
                out.append(tuple(row[:l]) if not l or row[l - 1] else tuple(row[: l - 1]))
            return
        lo = shape[j + 1] if j + 1 < l else 0
        for v in range(shape[j], lo - 1, -1):
            row[j] = v
            fill(j + 1, left - (shape[j] - v))

    fill(0, m)
    return out
