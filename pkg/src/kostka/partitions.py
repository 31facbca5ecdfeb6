"""Integer partitions: statistics, dominance order, conjugation, strip enumeration.

Partitions are plain tuples of weakly decreasing positive ints with no trailing
zeros, so they hash and compare structurally and can key memo tables directly.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator

Partition = tuple[int, ...]


class PartitionParseError(ValueError):
    """A partition string could not be parsed; the message names the bad token."""


def partition(parts: Iterable[int]) -> Partition:
    """Normalize an iterable of parts: drop trailing zeros, check the invariants."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    for j, x in enumerate(p):
        if x <= 0:
            raise ValueError(f"part {x} at index {j} is not positive")
        if j and p[j - 1] < x:
            raise ValueError(f"parts not weakly decreasing at index {j}: {p[j - 1]} < {x}")
    return p


_TOKEN = re.compile(r"(\d+)(?:\^(\d+))?\Z")


def parse_partition(text: str) -> Partition:
    """Parse "3,2,1" or exponential shorthand "2^2,1^2"; "-" or "" is empty."""
    s = text.strip()
    if s in ("", "-"):
        return ()
    parts: list[int] = []
    prev: int | None = None
    for raw in s.split(","):
        tok = raw.strip()
        m = _TOKEN.match(tok)
        if m is None:
            raise PartitionParseError(f"bad partition token {tok!r}")
        value = int(m.group(1))
        count = int(m.group(2)) if m.group(2) is not None else 1
        if value == 0:
            raise PartitionParseError(f"zero part in token {tok!r}")
        if count == 0:
            continue
        if prev is not None and value > prev:
            raise PartitionParseError(f"parts not weakly decreasing at token {tok!r}")
        parts.extend((value,) * count)
        prev = value
    return tuple(parts)


def format_partition(p: Partition) -> str:
    """Comma-separated parts; the empty partition renders as "-"."""
    return ",".join(map(str, p)) if p else "-"


def weight(p: Partition) -> int:
    """Sum of the parts."""
    return sum(p)


def weighted_size(p: Partition) -> int:
    """Sum of (i - 1) * p_i over 1-based rows i."""
    return sum(i * x for i, x in enumerate(p))


def conjugate(p: Partition) -> Partition:
    """Transpose of the Young diagram along the main diagonal."""
    if not p:
        return ()
    cols = [0] * p[0]
    for x in p:
        for j in range(x):
            cols[j] += 1
    return tuple(cols)


def dominates(a: Partition, b: Partition) -> bool:
    """Dominance order at equal weight: every prefix sum of a is >= that of b."""
    if sum(a) != sum(b):
        return False
    pa = pb = 0
    for i in range(max(len(a), len(b))):
        pa += a[i] if i < len(a) else 0
        pb += b[i] if i < len(b) else 0
        if pa < pb:
            return False
    return True


def multiplicity(p: Partition, i: int) -> int:
    """Number of parts equal to i."""
    return sum(1 for x in p if x == i)


def hook_lengths(p: Partition) -> list[int]:
    """Hook length of every cell: arm plus leg plus one, row-major order."""
    conj = conjugate(p)
    out = []
    for i, row in enumerate(p, 1):
        for j in range(1, row + 1):
            out.append(row + conj[j - 1] - i - j + 1)
    return out


def branch_shape(p: Partition, i: int) -> Partition:
    """Drop the i-th part (1-based) and add one box to each earlier part.

    Always a valid partition: p[i-2] + 1 > p[i-1] >= p[i].
    """
    if not 1 <= i <= len(p):
        raise IndexError(f"part index {i} out of range for length {len(p)}")
    return tuple(x + 1 for x in p[: i - 1]) + p[i:]


def tail(p: Partition, i: int) -> Partition:
    """The partition left after removing the first i parts."""
    if not 0 <= i <= len(p):
        raise IndexError(f"tail index {i} out of range for length {len(p)}")
    return p[i:]


def horizontal_strip_additions(p: Partition, m: int) -> list[Partition]:
    """All shapes obtained from p by adding m boxes, no two in the same column.

    Equivalently all tau with tau_j >= p_j >= tau_{j+1} and weight(p) + m.
    Returned in decreasing lexicographic order; m = 0 yields exactly [p].
    """
    if m < 0:
        raise ValueError("strip size must be nonnegative")
    l = len(p)
    out: list[Partition] = []
    row = [0] * (l + 1)

    def fill(j: int, left: int) -> None:
        if j == l:
            cap = p[l - 1] if l else left
            if left <= cap:
                row[l] = left
                out.append(tuple(row[: l + 1]) if left else tuple(row[:l]))
            return
        lo = p[j]
        hi = min(p[j - 1], lo + left) if j else lo + left
        for v in range(hi, lo - 1, -1):
            row[j] = v
            fill(j + 1, left - (v - lo))

    fill(0, m)
    return out


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n, each once, in decreasing lexicographic order."""
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest
