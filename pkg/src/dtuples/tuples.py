"""The D(n) data model: tuples, exact verification, pairwise compatibility."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from .arith import square_witness
from .errors import IncompatibleError, InputError


@dataclass(frozen=True)
class SquareWitness:
    """elements[i] * elements[j] + n == root**2."""

    i: int
    j: int
    root: int


@dataclass(frozen=True)
class DTuple:
    n: int
    elements: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        check_elements(self.n, self.elements, require_sorted=True)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @classmethod
    def of(cls, n: int, elements: Iterable[int]) -> "DTuple":
        """Build from an unsorted collection (still rejecting duplicates)."""
        elems = list(elements)
        check_elements(n, elems)
        return cls(n, tuple(sorted(elems)))

    def to_json(self) -> dict:
        return {"n": self.n, "elements": list(self.elements)}

    @classmethod
    def from_json(cls, obj: dict) -> "DTuple":
        try:
            return cls.of(int(obj["n"]), [int(v) for v in obj["elements"]])
        except (KeyError, TypeError) as exc:
            raise InputError(f"not a DTuple object: {obj!r}") from exc

    def verify(self) -> "VerifyReport":
        return verify(self.n, self.elements)


@dataclass
class VerifyReport:
    n: int
    elements: tuple[int, ...]
    valid: bool
    witnesses: list[SquareWitness] = field(default_factory=list)
    failing_pair: Optional[tuple[int, int]] = None

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "elements": list(self.elements),
            "valid": self.valid,
            "witnesses": [[w.i, w.j, w.root] for w in self.witnesses],
        }
        out["failing_pair"] = list(self.failing_pair) if self.failing_pair else None
        return out


def check_elements(n: int, elements, require_sorted: bool = False) -> None:
    if n == 0:
        raise InputError("n must be nonzero")
    if len(elements) == 0:
        raise InputError("empty element list")
    for v in elements:
        if isinstance(v, bool) or not isinstance(v, int):
            raise InputError(f"element {v!r} is not an integer")
        if v < 1:
            raise InputError(f"element {v} is not positive")
    if len(set(elements)) != len(elements):
        raise InputError("duplicate elements")
    if require_sorted and list(elements) != sorted(elements):
        raise InputError("elements must be strictly increasing")


def verify(n: int, elements: Iterable[int]) -> VerifyReport:
    """Check every pair of ``elements`` under D(n).

    Elements are sorted first, so the result does not depend on input order.
    Witnesses are collected for every passing pair in lexicographic order;
    ``failing_pair`` holds the values of the first pair that fails.
    """
    elems = list(elements)
    check_elements(n, elems)
    elems.sort()
    witnesses = []
    failing = None
    for i, j in combinations(range(len(elems)), 2):
        root = square_witness(elems[i] * elems[j] + n)
        if root is None:
            if failing is None:
                failing = (elems[i], elems[j])
        else:
            witnesses.append(SquareWitness(i, j, root))
    return VerifyReport(n, tuple(elems), failing is None, witnesses, failing)


def is_dn_set(n: int, elements: Iterable[int]) -> bool:
    return verify(n, elements).valid


def compatible(a: int, b: int, n: int) -> Optional[int]:
    """Root r with a*b + n == r**2, or None."""
    if n == 0:
        raise InputError("n must be nonzero")
    if a < 1 or b < 1:
        raise InputError("elements must be positive")
    if a == b:
        raise InputError("elements must be distinct")
    return square_witness(a * b + n)


def require_root(a: int, b: int, n: int) -> int:
    """Like compatible() but raises IncompatibleError instead of returning None."""
    r = compatible(a, b, n)
    if r is None:
        raise IncompatibleError(f"{a}*{b}{n:+d} is not a perfect square")
    return r


@dataclass(frozen=True)
class PairExtension:
    a: int
    c: int
    s: int
    d: int

    @property
    def root_a(self) -> int:
        """a*d + n == root_a**2."""
        return self.a + self.s

    @property
    def root_c(self) -> int:
        return self.c + self.s

    @property
    def exceeds(self) -> bool:
        """False when d <= c, which can only happen for negative n."""
        return self.d > self.c


def pair_regular_extension(a: int, c: int, n: int) -> PairExtension:
    """d = a + c + 2s where a*c + n = s**2.

    Then a*d + n = (a + s)**2 and c*d + n = (c + s)**2. A result with d <= c
    is returned as is; ``exceeds`` tells the caller.
    """
    if not a < c:
        raise InputError(f"need a < c, got {a}, {c}")
    s = require_root(a, c, n)
    return PairExtension(a, c, s, a + c + 2 * s)
