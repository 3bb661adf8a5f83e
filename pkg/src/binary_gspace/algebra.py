"""Binary operations on a finite carrier and the monoid they form.

A binary operation ``f`` on ``X = {0, ..., n-1}`` is stored as a row-major
table with ``table[x][y] == f(x, y)``.  Operations compose by

    (f g)(x, y) = f(x, g(x, y)),

which makes the set of all tables a monoid with unit ``e(x, y) = y``.
Its group of units is enumerated by :func:`enumerate_h2`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import factorial
from typing import Iterator, Union

from .errors import BoundExceededError, CarrierMismatchError, InputError, NotInvertibleError

DEFAULT_MAX_N = 3


@dataclass(frozen=True)
class FinSet:
    """The finite set ``{0, ..., size-1}``."""

    size: int

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 1:
            raise InputError(f"carrier size must be a positive integer, got {self.size!r}")

    @property
    def elements(self) -> range:
        return range(self.size)

    def __len__(self):
        return self.size

    def __contains__(self, x):
        return isinstance(x, int) and 0 <= x < self.size


Carrier = Union[FinSet, int]


def as_finset(carrier: Carrier) -> FinSet:
    return carrier if isinstance(carrier, FinSet) else FinSet(carrier)


@dataclass(frozen=True)
class UnaryMap:
    """A self-map of a finite carrier, ``images[y]`` is the image of ``y``."""

    images: tuple

    def __post_init__(self):
        images = tuple(self.images)
        n = len(images)
        if n == 0 or any(not isinstance(v, int) or not 0 <= v < n for v in images):
            raise InputError(f"map images must lie in 0..{n - 1}: {images}")
        object.__setattr__(self, "images", images)

    def __call__(self, y: int) -> int:
        return self.images[y]

    def __len__(self):
        return len(self.images)

    @property
    def is_bijective(self) -> bool:
        return len(set(self.images)) == len(self.images)

    def __matmul__(self, other: "UnaryMap") -> "UnaryMap":
        # (p @ q)(y) = p(q(y))
        if len(other) != len(self):
            raise CarrierMismatchError("cannot compose maps on different carriers")
        cls = Perm if isinstance(self, Perm) and isinstance(other, Perm) else UnaryMap
        return cls(tuple(self.images[v] for v in other.images))


@dataclass(frozen=True)
class Perm(UnaryMap):
    """A bijective :class:`UnaryMap`."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_bijective:
            raise InputError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(tuple(range(n)))

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for y, v in enumerate(self.images):
            inv[v] = y
        return Perm(tuple(inv))


@dataclass(frozen=True)
class BinOp:
    """A binary operation ``X^2 -> X`` given by its table.

    Tables passed as nested lists are frozen into tuples, so ``BinOp`` values
    are hashable and compare by table equality.
    """

    table: tuple

    def __post_init__(self):
        try:
            table = tuple(tuple(row) for row in self.table)
        except TypeError:
            raise InputError("table must be a sequence of rows") from None
        n = len(table)
        if n == 0:
            raise InputError("table must be non-empty")
        for x, row in enumerate(table):
            if len(row) != n:
                raise InputError(f"table must be {n}x{n}; row {x} has length {len(row)}")
            for y, v in enumerate(row):
                if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < n:
                    raise InputError(f"entry table[{x}][{y}] = {v!r} is outside 0..{n - 1}")
        object.__setattr__(self, "table", table)

    @property
    def n(self) -> int:
        return len(self.table)

    @property
    def carrier(self) -> FinSet:
        return FinSet(self.n)

    def __call__(self, x: int, y: int) -> int:
        return self.table[x][y]

    @classmethod
    def _trusted(cls, table: tuple) -> "BinOp":
        # skips validation; table must already be a square tuple-of-tuples
        op = object.__new__(cls)
        object.__setattr__(op, "table", table)
        return op

    def to_list(self) -> list:
        return [list(row) for row in self.table]

    def __repr__(self):
        return f"BinOp({self.to_list()})"


def identity_op(carrier: Carrier) -> BinOp:
    """The unit ``e(x, y) = y``."""
    n = as_finset(carrier).size
    row = tuple(range(n))
    return BinOp((row,) * n)


def _check_same_carrier(f: BinOp, g: BinOp) -> None:
    if f.n != g.n:
        raise CarrierMismatchError(f"carrier sizes differ: {f.n} != {g.n}")


def compose_ops(f: BinOp, g: BinOp) -> BinOp:
    """Monoid product: ``(f g)(x, y) = f(x, g(x, y))``."""
    _check_same_carrier(f, g)
    return BinOp._trusted(tuple(
        tuple([frow[v] for v in grow]) for frow, grow in zip(f.table, g.table)
    ))


def section(f: BinOp, x: int) -> UnaryMap:
    """The map ``y -> f(x, y)``; returned as a :class:`Perm` when bijective."""
    if not isinstance(x, int) or not 0 <= x < f.n:
        raise IndexError(f"point {x!r} outside carrier of size {f.n}")
    row = f.table[x]
    if len(set(row)) == len(row):
        return Perm(row)
    return UnaryMap(row)


def first_non_bijective_section(f: BinOp):
    for x, row in enumerate(f.table):
        if len(set(row)) != len(row):
            return x
    return None


def is_invertible(f: BinOp) -> bool:
    """True iff ``f`` is a unit of the monoid, i.e. every section is bijective."""
    return first_non_bijective_section(f) is None


def invert_op(f: BinOp) -> BinOp:
    """Two-sided inverse; row ``x`` is the inverse permutation of the section at ``x``."""
    x = first_non_bijective_section(f)
    if x is not None:
        raise NotInvertibleError(f"section at x={x} is not a bijection: {list(f.table[x])}",
                                 witness=x)
    rows = []
    for row in f.table:
        inv = [0] * len(row)
        for y, v in enumerate(row):
            inv[v] = y
        rows.append(tuple(inv))
    return BinOp._trusted(tuple(rows))


def h2_count(carrier: Carrier) -> int:
    n = as_finset(carrier).size
    return factorial(n) ** n


def iter_h2(carrier: Carrier) -> Iterator[BinOp]:
    """Lazily yield every invertible operation in lexicographic table order."""
    n = as_finset(carrier).size
    for rows in product(permutations(range(n)), repeat=n):
        yield BinOp._trusted(rows)


def enumerate_h2(carrier: Carrier, max_n: int = DEFAULT_MAX_N) -> list:
    """All invertible operations on the carrier, lexicographically ordered.

    ``max_n`` guards against accidental blow-up; ``n = 4`` already yields
    331,776 tables.
    """
    n = as_finset(carrier).size
    if n > max_n:
        raise BoundExceededError(
            f"enumerating H2 for n={n} would produce {h2_count(n)} operations; "
            f"raise max_n (currently {max_n}) to allow it")
    return list(iter_h2(n))


def all_sections(f: BinOp) -> list:
    return [section(f, x) for x in range(f.n)]
