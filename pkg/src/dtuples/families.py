"""Parametric D(n) families and the fixture catalog used across the tests."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InputError
from .tuples import DTuple, verify


@dataclass(frozen=True)
class Fixture:
    name: str
    tuple: DTuple
    source: str

    def to_json(self) -> dict:
        return {"name": self.name, "source": self.source, **self.tuple.to_json()}


def _checked(n: int, elements) -> DTuple:
    t = DTuple.of(n, elements)
    if not verify(n, t.elements).valid:
        raise AssertionError(f"family member {t.elements} fails D({n})")
    return t


def d1_quadruple(k: int) -> DTuple:
    """{k, k+2, 4k+4, 16k^3+48k^2+44k+12}, a D(1) quadruple for every k >= 1."""
    if k < 1:
        raise InputError("k must be >= 1")
    return _checked(1, (k, k + 2, 4 * k + 4, 16 * k**3 + 48 * k**2 + 44 * k + 12))


def dsq_triple(a: int) -> DTuple:
    """{a^2+1, a^2+2a+1, 4a^2+4a+4} with the property D(a^2), a >= 5."""
    if a < 5:
        raise InputError("a must be >= 5")
    return _checked(a * a, (a * a + 1, a * a + 2 * a + 1, 4 * a * a + 4 * a + 4))


GENERATORS = {"d1": d1_quadruple, "dsq": dsq_triple}

_CATALOG = (
    ("diophantus", 256, (1, 33, 68, 105), "Diophantus; D(256) quadruple"),
    ("fermat", 1, (1, 3, 8, 120), "Fermat; first D(1) quadruple"),
    ("d256-quintuple", 256, (1, 33, 105, 320, 18240), "regular extension chain from {1, 33, 105}; D(256) quintuple"),
    ("gibbs-sextuple", 2985984, (99, 315, 9920, 32768, 44460, 19534284), "Gibbs; D(2985984) sextuple"),
    ("d2-triple", 2, (1, 2, 7), "D(2) triple; n = 2 (mod 4) allows at most three elements"),
)


@lru_cache(maxsize=None)
def _load() -> tuple[Fixture, ...]:
    return tuple(Fixture(name, _checked(n, elems), src) for name, n, elems, src in _CATALOG)


def catalog() -> list[Fixture]:
    return list(_load())


def fixture(name: str) -> Fixture:
    for f in _load():
        if f.name == name:
            return f
    raise KeyError(name)
