"""Exact polynomials in t over Python's big integers, plus the t-analog tower.

Sparse representation: exponent -> nonzero coefficient.  Negative exponents are
rejected outright; the strip iteration only ever multiplies by nonnegative
powers of t, so a negative shift anywhere is a bug, not a value.
"""

from __future__ import annotations

from collections.abc import Iterable
from functools import lru_cache

from .partitions import Partition, multiplicity


class NotDivisible(ArithmeticError):
    """Polynomial division left a remainder where an exact quotient was required."""


_not_divisible_count = 0


def not_divisible_count() -> int:
    """How many times NotDivisible has fired since import (tripwire counter)."""
    return _not_divisible_count


class TPoly:
    """Immutable polynomial in t with integer coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: dict[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, dict) else coeffs
        d: dict[int, int] = {}
        for e, c in items:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if c:
                d[e] = d.get(e, 0) + c
        self._coeffs = {e: c for e, c in d.items() if c}

    @classmethod
    def _raw(cls, coeffs: dict[int, int]) -> "TPoly":
        # internal: coeffs already normalized (no zeros, no negative exponents)
        poly = cls.__new__(cls)
        poly._coeffs = coeffs
        return poly

    @classmethod
    def term(cls, coefficient: int, exponent: int) -> "TPoly":
        """The monomial coefficient * t**exponent."""
        if exponent < 0:
            raise ValueError(f"negative exponent {exponent}")
        return cls._raw({exponent: coefficient} if coefficient else {})

    def coeff(self, e: int) -> int:
        return self._coeffs.get(e, 0)

    def degree(self) -> int:
        """Largest stored exponent; -1 for the zero polynomial."""
        return max(self._coeffs) if self._coeffs else -1

    def items(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._coeffs.items())

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(self.items()))

    def __repr__(self) -> str:
        return f"TPoly({self.items()!r})"

    def __str__(self) -> str:
        return self.plain_str()

    def __add__(self, other: "TPoly") -> "TPoly":
        d = dict(self._coeffs)
        for e, c in other._coeffs.items():
            nc = d.get(e, 0) + c
            if nc:
                d[e] = nc
            else:
                d.pop(e, None)
        return TPoly._raw(d)

    def __sub__(self, other: "TPoly") -> "TPoly":
        d = dict(self._coeffs)
        for e, c in other._coeffs.items():
            nc = d.get(e, 0) - c
            if nc:
                d[e] = nc
            else:
                d.pop(e, None)
        return TPoly._raw(d)

    def __neg__(self) -> "TPoly":
        return TPoly._raw({e: -c for e, c in self._coeffs.items()})

    def __mul__(self, other: "TPoly | int") -> "TPoly":
        if isinstance(other, int):
            if not other:
                return ZERO
            return TPoly._raw({e: c * other for e, c in self._coeffs.items()})
        d: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                nc = d.get(e, 0) + c1 * c2
                if nc:
                    d[e] = nc
                else:
                    d.pop(e, None)
        return TPoly._raw(d)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TPoly":
        if n < 0:
            raise ValueError("negative power")
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def shift(self, e: int) -> "TPoly":
        """Multiply by t**e; e must be nonnegative."""
        if e < 0:
            raise ValueError(f"negative shift {e}")
        if not e:
            return self
        return TPoly._raw({k + e: v for k, v in self._coeffs.items()})

    def evaluate(self, x: int) -> int:
        """Exact integer value at t = x."""
        return sum(c * x**e for e, c in self._coeffs.items())

    def plain_str(self) -> str:
        """Human form, e.g. "t + 2t^2 + t^3"; the zero polynomial is "0"."""
        if not self._coeffs:
            return "0"
        pieces: list[str] = []
        for e, c in self.items():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def latex_str(self) -> str:
        """LaTeX form, e.g. "t^{3}+t^{4}+2t^{5}"; exponents in braces, no spaces."""
        if not self._coeffs:
            return "0"
        pieces: list[str] = []
        for e, c in self.items():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{{{e}}}"
                body = var if mag == 1 else f"{mag}{var}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+{body}" if c > 0 else f"-{body}")
        return "".join(pieces)

    def to_json_obj(self) -> list[list]:
        """JSON form: [exponent, coefficient-as-decimal-string] pairs, ascending."""
        return [[e, str(c)] for e, c in self.items()]

    @classmethod
    def from_json_obj(cls, obj: object) -> "TPoly":
        """Strictly validated inverse of to_json_obj."""
        if not isinstance(obj, list):
            raise ValueError("TPoly JSON must be a list of [exponent, coefficient] pairs")
        coeffs: dict[int, int] = {}
        last = -1
        for entry in obj:
            if not isinstance(entry, list) or len(entry) != 2:
                raise ValueError(f"bad TPoly JSON entry {entry!r}")
            e, c = entry
            if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                raise ValueError(f"bad exponent {e!r}")
            if e <= last:
                raise ValueError(f"exponents not strictly ascending at {e}")
            last = e
            if not isinstance(c, str):
                raise ValueError(f"coefficient must be a decimal string, got {c!r}")
            try:
                ci = int(c)
            except ValueError:
                raise ValueError(f"bad coefficient string {c!r}") from None
            if ci == 0:
                raise ValueError(f"zero coefficient stored at exponent {e}")
            coeffs[e] = ci
        return cls._raw(coeffs)


ZERO = TPoly._raw({})
ONE = TPoly._raw({0: 1})
T = TPoly._raw({1: 1})


def t_integer(n: int) -> TPoly:
    """[n] = 1 + t + ... + t^(n-1); by convention [0] = 1."""
    if n < 0:
        raise ValueError("t-integer of a negative integer")
    if n == 0:
        return ONE
    return TPoly._raw({k: 1 for k in range(n)})


@lru_cache(maxsize=None)
def t_factorial(n: int) -> TPoly:
    """[n]! = [n][n-1]...[1], with [0]! = 1."""
    if n < 0:
        raise ValueError("t-factorial of a negative integer")
    if n == 0:
        return ONE
    return t_factorial(n - 1) * t_integer(n)


@lru_cache(maxsize=None)
def t_binomial(n: int, k: int) -> TPoly:
    """Gaussian binomial [n]! / ([k]! [n-k]!); zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError("negative argument to t-binomial")
    if k > n:
        return ZERO
    return exact_divide(t_factorial(n), t_factorial(k) * t_factorial(n - k))


def exact_divide(a: TPoly, b: TPoly) -> TPoly:
    """The quotient q with q * b == a exactly; raises NotDivisible otherwise."""
    global _not_divisible_count
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return ZERO
    rem = dict(a._coeffs)
    db = b.degree()
    lead = b.coeff(db)
    bitems = b.items()
    q: dict[int, int] = {}
    while rem:
        dr = max(rem)
        cr = rem[dr]
        if dr < db or cr % lead:
            _not_divisible_count += 1
            raise NotDivisible(f"({a}) is not divisible by ({b})")
        qc = cr // lead
        qe = dr - db
        q[qe] = qc
        for e, c in bitems:
            e2 = e + qe
            nc = rem.get(e2, 0) - qc * c
            if nc:
                rem[e2] = nc
            else:
                rem.pop(e2, None)
    return TPoly._raw(q)


def norm_factor(p: Partition) -> TPoly:
    """Hall-Littlewood norm factor: (1 - t)^length * product of [multiplicity]!."""
    out = TPoly._raw({0: 1, 1: -1}) ** len(p)
    for v in sorted(set(p)):
        out = out * t_factorial(multiplicity(p, v))
    return out
