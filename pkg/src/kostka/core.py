"""Kostka-Foulkes polynomials.

The general routine iterates on the content partition: consuming its first
part splits the computation into at most length(shape) signed branches, one
per row of the shape.  Branch i drops row i, adds a box to each earlier row,
and then grows the result by a horizontal strip whose size equals the power
of t carried by the branch (Pieri rule); branches whose size would be
negative vanish.  Intermediate signed sums may go negative, but every value
returned for a valid pair is a polynomial with nonnegative coefficients.

Closed forms cover one-row shapes, hook shapes and single-column contents;
`kostka_auto` dispatches between them and the general iteration, and a
common leading run of equal parts in shape and content can always be chopped
off first (`prefix_reduce`).
"""

from __future__ import annotations

import json

from .partitions import (
    Partition,
    PartitionParseError,
    branch_shape,
    conjugate,
    dominates,
    format_partition,
    hook_lengths,
    horizontal_strip_additions,
    parse_partition,
    weight,
    weighted_size,
)
from .polynomials import ONE, TPoly, ZERO, exact_divide, t_binomial, t_factorial, t_integer


class PreconditionViolated(ValueError):
    """A closed-form formula was invoked outside its domain."""


class CacheConflictError(RuntimeError):
    """A cache key was written twice with different values."""


class CacheFormatError(ValueError):
    """A persisted cache file is corrupt; the message carries line and key."""


FAST_PATH_NAMES = ("one-row", "hook", "column")
ALL_FAST_PATHS = frozenset(FAST_PATH_NAMES)

KostkaKey = tuple[Partition, Partition]


class KostkaCache:
    """Memo table keyed by prefix-reduced (shape, content) pairs.

    Entries are write-once: a second put with a different value is an
    invariant violation.  Sharing between threads is by cloning before and
    merging after; correctness never depends on a hit.
    """

    def __init__(self) -> None:
        self._entries: dict[KostkaKey, TPoly] = {}
        self.hits = 0
        self.misses = 0

    def __len__(self) -> int:
        return len(self._entries)

    def get(self, shape: Partition, content: Partition) -> TPoly | None:
        value = self._entries.get((shape, content))
        if value is None:
            self.misses += 1
        else:
            self.hits += 1
        return value

    def put(self, shape: Partition, content: Partition, value: TPoly) -> None:
        key = (shape, content)
        old = self._entries.get(key)
        if old is not None and old != value:
            raise CacheConflictError(
                f"conflicting values for key {format_partition(shape)} / {format_partition(content)}"
            )
        self._entries[key] = value

    def items(self) -> list[tuple[KostkaKey, TPoly]]:
        return sorted(self._entries.items())

    def clone(self) -> "KostkaCache":
        twin = KostkaCache()
        twin._entries = dict(self._entries)
        return twin

    def merge(self, other: "KostkaCache") -> None:
        for (shape, content), value in other._entries.items():
            self.put(shape, content, value)

    def save(self, path: str) -> None:
        """One record per line: shape TAB content TAB polynomial JSON."""
        with open(path, "w", encoding="utf-8") as fh:
            for (shape, content), value in self.items():
                fh.write(
                    f"{format_partition(shape)}\t{format_partition(content)}\t"
                    f"{json.dumps(value.to_json_obj())}\n"
                )

    @classmethod
    def load(cls, path: str) -> "KostkaCache":
        """Read a persisted cache, validating every record.

        Rejects malformed lines and any nonzero entry whose shape does not
        dominate its content, naming the line and the offending key.
        """
        cache = cls()
        with open(path, encoding="utf-8") as fh:
            for line_no, line in enumerate(fh, 1):
                line = line.rstrip("\n")
                if not line:
                    continue
                fields = line.split("\t")
                if len(fields) != 3:
                    raise CacheFormatError(
                        f"line {line_no}: expected 3 tab-separated fields, got {len(fields)}"
                    )
                key_text = f"{fields[0]} / {fields[1]}"
                try:
                    shape = parse_partition(fields[0])
                    content = parse_partition(fields[1])
                except PartitionParseError as exc:
                    raise CacheFormatError(f"line {line_no}: key {key_text}: {exc}") from exc
                try:
                    value = TPoly.from_json_obj(json.loads(fields[2]))
                except (ValueError, TypeError) as exc:
                    raise CacheFormatError(f"line {line_no}: key {key_text}: {exc}") from exc
                if value and not dominates(shape, content):
                    raise CacheFormatError(
                        f"line {line_no}: key {key_text}: nonzero value for non-dominating pair"
                    )
                try:
                    cache.put(shape, content, value)
                except CacheConflictError as exc:
                    raise CacheFormatError(f"line {line_no}: {exc}") from exc
        return cache


def prefix_reduce(shape: Partition, content: Partition) -> tuple[Partition, Partition]:
    """Strip the longest common run of leading equal parts; the value is unchanged."""
    r = 0
    for a, b in zip(shape, content):
        if a != b:
            break
        r += 1
    return shape[r:], content[r:]


def recursion_children(
    shape: Partition, head: int
) -> list[tuple[int, int, list[Partition]]]:
    """Signed branches taken when a leading content part `head` is consumed.

    Returns (i, size, taus) triples: the 1-based branch index (sign is
    (-1)**(i-1)), the strip size (also the power of t the branch carries),
    and the shapes reached by adding a horizontal strip of that size to
    branch i of the shape.  Branches with negative size are dropped, so the
    branch structure depends on the content only through its first part.
    """
    out = []
    for i in range(1, len(shape) + 1):
        size = shape[i - 1] - head - i + 1
        if size >= 0:
            out.append((i, size, horizontal_strip_additions(branch_shape(shape, i), size)))
    return out


def kostka(shape: Partition, content: Partition, cache: KostkaCache | None = None) -> TPoly:
    """Kostka-Foulkes polynomial of the pair by the signed strip iteration.

    Zero unless the weights agree and shape dominates content; one when both
    are empty.  `cache`, when given, memoizes every computed pair.
    """
    shape, content = prefix_reduce(shape, content)
    if not content and not shape:
        return ONE
    if not dominates(shape, content):
        return ZERO
    if cache is not None:
        hit = cache.get(shape, content)
        if hit is not None:
            return hit
    rest = content[1:]
    total = ZERO
    for i, size, taus in recursion_children(shape, content[0]):
        branch = ZERO
        for tau in taus:
            branch = branch + kostka(tau, rest, cache)
        branch = branch.shift(size)
        total = total + branch if i % 2 else total - branch
    if cache is not None:
        cache.put(shape, content, total)
    return total


def kostka_one_row(content: Partition) -> TPoly:
    """Closed form for a one-row shape: a single power of t."""
    return TPoly.term(1, weighted_size(content))


def kostka_hook(n: int, k: int, content: Partition) -> TPoly:
    """Closed form for the hook shape (n-k, 1^k): a shifted Gaussian binomial."""
    if n <= 0 or not 0 <= k <= n - 1:
        raise PreconditionViolated(f"invalid hook: n={n}, k={k}")
    if weight(content) != n:
        raise PreconditionViolated(f"content weight {weight(content)} != {n}")
    hook = (n - k,) + (1,) * k
    if not dominates(hook, content):
        raise PreconditionViolated(
            f"content {format_partition(content)} not dominated by hook {format_partition(hook)}"
        )
    l = len(content)
    e = weighted_size(content) - k * l + k * (k + 1) // 2
    return t_binomial(l - 1, k).shift(e)


def kostka_column(shape: Partition) -> TPoly:
    """Closed form for single-column content: shifted hook-product quotient.

    The quotient is provably exact; NotDivisible escaping here means a bug.
    """
    n = weight(shape)
    denom = ONE
    for h in hook_lengths(shape):
        denom = denom * t_integer(h)
    return exact_divide(t_factorial(n), denom).shift(weighted_size(conjugate(shape)))


def kostka_auto(
    shape: Partition,
    content: Partition,
    cache: KostkaCache | None = None,
    fast_paths: frozenset[str] = ALL_FAST_PATHS,
    audit: dict | None = None,
) -> TPoly:
    """Dispatch to an applicable closed form, else the general iteration.

    The value never depends on `fast_paths`; `audit`, when given, records
    which route produced the result plus the prefix-reduced pair.
    """
    fp = frozenset(fast_paths)
    s, c = prefix_reduce(shape, content)
    if not dominates(s, c):
        path, value = "vanishing", ZERO
    elif not c:
        path, value = "empty", ONE
    elif len(s) == 1 and "one-row" in fp:
        path, value = "one-row", kostka_one_row(c)
    elif all(x == 1 for x in c) and "column" in fp:
        path, value = "column", kostka_column(s)
    elif len(s) >= 2 and all(x == 1 for x in s[1:]) and "hook" in fp:
        path, value = "hook", kostka_hook(weight(s), len(s) - 1, c)
    else:
        path, value = "recursion", kostka(s, c, cache)
    if audit is not None:
        audit["path"] = path
        audit["shape"] = s
        audit["content"] = c
    return value
