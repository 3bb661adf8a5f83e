"""Finite groups as Cayley tables.

Elements are the integers ``0..m-1`` and the identity is always ``0``.
Named groups built by :func:`make_named_group` double as test fixtures.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterable, Optional

from .errors import (
    InputError,
    MissingInverseError,
    NoIdentityError,
    NonAssociativeError,
    NotNormalError,
    NotSubgroupError,
    UnknownGroupError,
)


@dataclass(frozen=True)
class FiniteGroup:
    """A validated Cayley table.

    Build instances with :func:`validate_group` or :func:`make_named_group`;
    the constructor itself does not check the axioms.
    """

    cayley: tuple
    inverse: tuple
    name: str = ""
    labels: Optional[tuple] = field(default=None, compare=False)
    # old index -> new index, set when ingestion moved the identity to 0
    renumbering: Optional[tuple] = field(default=None, compare=False)

    identity = 0

    @property
    def order(self) -> int:
        return len(self.cayley)

    def __len__(self):
        return len(self.cayley)

    @property
    def elements(self) -> range:
        return range(len(self.cayley))

    def mul(self, a: int, b: int) -> int:
        return self.cayley[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, g: int, h: int) -> int:
        """``g h g^-1``."""
        c = self.cayley
        return c[c[g][h]][self.inverse[g]]

    def product(self, *elems: int) -> int:
        acc = 0
        for a in elems:
            acc = self.cayley[acc][a]
        return acc

    def is_abelian(self) -> bool:
        c = self.cayley
        return all(c[a][b] == c[b][a] for a in self.elements for b in self.elements)

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    def to_dict(self) -> dict:
        return {"order": self.order, "cayley": [list(r) for r in self.cayley]}

    def __repr__(self):
        return f"FiniteGroup({self.name or 'order ' + str(self.order)})"


def validate_group(cayley, name: str = "", labels=None) -> FiniteGroup:
    """Check the group axioms on a square table and return a canonical group.

    If the identity is not at index 0 it is swapped with element 0 and the
    resulting relabeling is stored on ``renumbering``.
    """
    try:
        table = [list(row) for row in cayley]
    except TypeError:
        raise InputError("cayley table must be a sequence of rows") from None
    m = len(table)
    if m == 0:
        raise InputError("cayley table must be non-empty")
    for a, row in enumerate(table):
        if len(row) != m:
            raise InputError(f"cayley table must be square; row {a} has length {len(row)}")
        for b, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < m:
                raise InputError(f"cayley[{a}][{b}] = {v!r} is outside 0..{m - 1}")

    for a, b, c in product(range(m), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise NonAssociativeError(f"(a*b)*c != a*(b*c) for a={a}, b={b}, c={c}",
                                      witness=(a, b, c))

    ident = None
    for e in range(m):
        if all(table[e][a] == a and table[a][e] == a for a in range(m)):
            ident = e
            break
    if ident is None:
        raise NoIdentityError("no two-sided identity element")

    inverse = [None] * m
    for a in range(m):
        for b in range(m):
            if table[a][b] == ident and table[b][a] == ident:
                inverse[a] = b
                break
        if inverse[a] is None:
            raise MissingInverseError(f"element {a} has no inverse", witness=a)

    renumbering = None
    if ident != 0:
        p = list(range(m))
        p[0], p[ident] = ident, 0
        new = [[0] * m for _ in range(m)]
        for a in range(m):
            for b in range(m):
                new[p[a]][p[b]] = p[table[a][b]]
        table = new
        inv = [0] * m
        for a in range(m):
            inv[p[a]] = p[inverse[a]]
        inverse = inv
        if labels is not None:
            labels = [labels[p[i]] for i in range(m)]
        renumbering = tuple(p)

    return FiniteGroup(
        cayley=tuple(tuple(r) for r in table),
        inverse=tuple(inverse),
        name=name,
        labels=tuple(labels) if labels is not None else None,
        renumbering=renumbering,
    )


# -- named groups -------------------------------------------------------------

def _perm_group(perms, name):
    """Group of permutations in one-line notation, sorted lexicographically.

    Product is composition of functions: ``(p*q)(i) = p(q(i))``.
    """
    perms = sorted(set(perms))
    index = {p: i for i, p in enumerate(perms)}
    cayley = [[index[tuple(p[i] for i in q)] for q in perms] for p in perms]
    labels = ["".join(map(str, p)) for p in perms]
    return validate_group(cayley, name=name, labels=labels)


def _perm_closure(gens):
    n = len(gens[0])
    seen = {tuple(range(n))}
    frontier = list(seen)
    while frontier:
        p = frontier.pop()
        for g in gens:
            q = tuple(p[i] for i in g)
            if q not in seen:
                seen.add(q)
                frontier.append(q)
    return seen


def cyclic_group(k: int) -> FiniteGroup:
    if k < 1:
        raise UnknownGroupError(f"cyclic group order must be >= 1, got {k}")
    return validate_group([[(a + b) % k for b in range(k)] for a in range(k)], name=f"Z{k}")


def _quaternion_group():
    # units encoded as (sign, axis) with axis in 1, i, j, k
    axes = "1ijk"
    mult = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elems = [(s, a) for a in axes for s in (1, -1)]
    index = {e: i for i, e in enumerate(elems)}

    def times(p, q):
        s, a = mult[(p[1], q[1])]
        return (p[0] * q[0] * s, a)

    cayley = [[index[times(p, q)] for q in elems] for p in elems]
    labels = [("" if s > 0 else "-") + a for s, a in elems]
    return validate_group(cayley, name="Q8", labels=labels)


NAMED_GROUPS = ("Z<k>", "V4", "S3", "S4", "D4", "Q8")


def make_named_group(name: str) -> FiniteGroup:
    """Build one of ``Z<k>`` (k >= 1), ``V4``, ``S3``, ``S4``, ``D4``, ``Q8``."""
    key = name.strip().upper()
    m = re.fullmatch(r"Z_?(\d+)", key)
    if m:
        return cyclic_group(int(m.group(1)))
    if key == "V4":
        return validate_group([[a ^ b for b in range(4)] for a in range(4)], name="V4")
    if key in ("S3", "S4"):
        n = int(key[1])
        return _perm_group(permutations(range(n)), key)
    if key == "D4":
        rotation, reflection = (1, 2, 3, 0), (0, 3, 2, 1)
        return _perm_group(_perm_closure([rotation, reflection]), "D4")
    if key == "Q8":
        return _quaternion_group()
    raise UnknownGroupError(f"unknown group {name!r}; expected one of {', '.join(NAMED_GROUPS)}")


# -- subgroups ----------------------------------------------------------------

@dataclass(frozen=True)
class SubgroupElems:
    """A subgroup stored as its sorted member indices."""

    parent: FiniteGroup = field(repr=False)
    members: tuple

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, a):
        return a in self.member_set

    def __iter__(self):
        return iter(self.members)

    @property
    def member_set(self) -> frozenset:
        return frozenset(self.members)

    def is_trivial(self) -> bool:
        return self.members == (0,)


def subgroup_violation(G: FiniteGroup, members: Iterable[int]):
    """First reason ``members`` fails to be a subgroup, or None."""
    s = set(members)
    if 0 not in s:
        return ("missing identity",)
    for a in sorted(s):
        if G.inverse[a] not in s:
            return ("not closed under inverse", a)
    for a in sorted(s):
        for b in sorted(s):
            if G.cayley[a][b] not in s:
                return ("not closed under product", a, b)
    return None


def make_subgroup(G: FiniteGroup, members: Iterable[int]) -> SubgroupElems:
    """Wrap an element set, checking it is a subgroup of ``G``."""
    members = list(members)
    for a in members:
        if isinstance(a, bool) or not isinstance(a, int) or not 0 <= a < G.order:
            raise InputError(f"{a!r} is not an element of a group of order {G.order}")
    bad = subgroup_violation(G, members)
    if bad is not None:
        raise NotSubgroupError(f"{sorted(set(members))} is not a subgroup: {bad[0]}", witness=bad)
    return SubgroupElems(G, tuple(sorted(set(members))))


def subgroup_generated(G: FiniteGroup, seed: Iterable[int]) -> SubgroupElems:
    """Smallest subgroup containing ``seed`` (worklist closure)."""
    gens = sorted(set(seed))
    for a in gens:
        if not 0 <= a < G.order:
            raise InputError(f"{a} is not an element of a group of order {G.order}")
    gens = sorted(set(gens) | {G.inverse[a] for a in gens})
    found = {0}
    work = [0]
    while work:
        a = work.pop()
        for g in gens:
            b = G.cayley[a][g]
            if b not in found:
                found.add(b)
                work.append(b)
    return SubgroupElems(G, tuple(sorted(found)))


def trivial_subgroup(G: FiniteGroup) -> SubgroupElems:
    return SubgroupElems(G, (0,))


def whole_group(G: FiniteGroup) -> SubgroupElems:
    return SubgroupElems(G, tuple(G.elements))


def all_subgroups(G: FiniteGroup) -> list:
    """Every subgroup, as joins of cyclic subgroups, sorted by (order, members)."""
    cyclic = {subgroup_generated(G, [a]).members for a in G.elements}
    found = set(cyclic)
    frontier = set(cyclic)
    while frontier:
        new = set()
        for A in frontier:
            for C in cyclic:
                if not set(C) <= set(A):
                    J = subgroup_generated(G, A + C).members
                    if J not in found:
                        new.add(J)
        found |= new
        frontier = new
    return [SubgroupElems(G, m) for m in sorted(found, key=lambda s: (len(s), s))]


def normality_witness(G: FiniteGroup, H: SubgroupElems):
    """First ``(g, h)`` with ``g h g^-1`` outside ``H``, or None."""
    hs = H.member_set
    for g in G.elements:
        for h in H.members:
            if G.conj(g, h) not in hs:
                return (g, h)
    return None


def is_normal(G: FiniteGroup, H: SubgroupElems) -> bool:
    return normality_witness(G, H) is None


def normal_subgroups(G: FiniteGroup) -> list:
    return [H for H in all_subgroups(G) if is_normal(G, H)]


def conjugate_subgroup(G: FiniteGroup, g: int, H: SubgroupElems) -> SubgroupElems:
    """``g H g^-1``."""
    return SubgroupElems(G, tuple(sorted({G.conj(g, h) for h in H.members})))


# -- cosets -------------------------------------------------------------------

@dataclass(frozen=True)
class CosetSpace:
    """Left cosets ``kH``, indexed in order of their minimal representative."""

    parent: FiniteGroup = field(repr=False)
    subgroup: SubgroupElems
    coset_of: tuple
    reps: tuple

    @property
    def size(self) -> int:
        return len(self.reps)

    def __len__(self):
        return len(self.reps)

    def members(self, c: int) -> tuple:
        return tuple(a for a in self.parent.elements if self.coset_of[a] == c)

    @property
    def cosets(self) -> list:
        return [self.members(c) for c in range(self.size)]


def coset_space(G: FiniteGroup, H: SubgroupElems) -> CosetSpace:
    coset_of = [None] * G.order
    reps = []
    for k in G.elements:
        if coset_of[k] is None:
            c = len(reps)
            reps.append(k)
            for h in H.members:
                coset_of[G.cayley[k][h]] = c
    return CosetSpace(G, H, tuple(coset_of), tuple(reps))


def quotient_group(G: FiniteGroup, H: SubgroupElems) -> FiniteGroup:
    """``G/H`` as a group on coset indices; ``H`` must be normal."""
    w = normality_witness(G, H)
    if w is not None:
        raise NotNormalError(f"subgroup {list(H.members)} is not normal: "
                             f"conjugating {w[1]} by {w[0]} leaves it", witness=w)
    cs = coset_space(G, H)
    table = [[cs.coset_of[G.cayley[a][b]] for b in cs.reps] for a in cs.reps]
    return validate_group(table, name=f"{G.name or 'G'}/{list(H.members)}")
