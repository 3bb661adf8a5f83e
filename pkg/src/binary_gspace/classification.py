"""Recover the coset model of a transitive distributive binary G-space.

Given such an action and a basepoint ``x0``, the point stabilizer
``H = G_(x0,x0)`` is normal, and ``gH -> g(x0, x0)`` is a biequivariant
bijection from the coset action on ``G/H`` onto the space.  Every step is
checked rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .actions import (
    BinaryAction,
    Check,
    coset_action,
    conjugate_translation_action,
    is_biequivariant,
    is_distributive,
    is_transitive,
    kernel,
    stabilizer_pair,
)
from .errors import (
    BinarySpaceError,
    NotDistributiveError,
    NotEffectiveError,
    NotTransitiveError,
    RepresentativeError,
)
from .groups import CosetSpace, SubgroupElems, coset_space, is_normal


@dataclass(frozen=True)
class ClassificationResult:
    basepoint: int
    subgroup: SubgroupElems
    cosets: CosetSpace = field(repr=False)
    model: BinaryAction = field(repr=False)
    iso: tuple
    checks: dict

    def to_dict(self) -> dict:
        return {
            "basepoint": self.basepoint,
            "subgroup": list(self.subgroup.members),
            "coset_count": self.cosets.size,
            "coset_representatives": list(self.cosets.reps),
            "iso": list(self.iso),
            "checks": dict(self.checks),
            "model": self.model.to_dict()["table"],
        }


def _require(a: BinaryAction, x0: int) -> None:
    if x0 not in a.carrier:
        raise IndexError(f"basepoint {x0} outside carrier of size {a.size}")
    dist = is_distributive(a)
    if not dist:
        raise NotDistributiveError(f"action is not distributive, witness (g,h,x,y,z)={dist.witness}",
                                   witness=dist.witness)
    trans = is_transitive(a)
    if not trans:
        x, orb = trans.witness
        raise NotTransitiveError(f"action is not transitive: orbit of ({x},{x}) is {list(orb)}",
                                 witness=trans.witness)


def classify(a: BinaryAction, x0: int = 0) -> ClassificationResult:
    _require(a, x0)
    G = a.group
    H = stabilizer_pair(a, x0, x0)
    normal = is_normal(G, H)
    if not normal:
        raise BinarySpaceError(f"point stabilizer {list(H.members)} is not normal")
    model = coset_action(G, H)
    cs = coset_space(G, H)

    iso = [None] * cs.size
    for g in G.elements:
        c, v = cs.coset_of[g], a.table[g][x0][x0]
        if iso[c] is None:
            iso[c] = v
        elif iso[c] != v:
            raise RepresentativeError(
                f"coset {c} maps to both {iso[c]} and {v} (representative {g})",
                witness=(c, g))
    iso = tuple(iso)

    bijective = len(iso) == a.size and len(set(iso)) == a.size
    equivariant = is_biequivariant(model, a, iso)
    checks = {"bijective": bijective, "biequivariant": equivariant.holds, "subgroup_normal": normal}
    if not bijective:
        raise BinarySpaceError(f"coset map {list(iso)} is not a bijection onto {a.size} points")
    if not equivariant:
        raise BinarySpaceError(f"coset map is not biequivariant at (g,u,v)={equivariant.witness}",
                               witness=equivariant.witness)
    return ClassificationResult(x0, H, cs, model, iso, checks)


def classify_effective(a: BinaryAction, x0: int = 0) -> ClassificationResult:
    """:func:`classify` for effective actions; the model is conjugate translation."""
    _require(a, x0)
    ker = kernel(a)
    if not ker.is_trivial():
        raise NotEffectiveError(f"action is not effective, kernel {list(ker.members)}",
                                witness=tuple(ker.members))
    result = classify(a, x0)
    if not result.subgroup.is_trivial():
        raise BinarySpaceError(f"effective action recovered non-trivial {result.subgroup.members}")
    # singleton cosets are indexed by their only element
    if result.cosets.reps != tuple(a.group.elements):
        raise BinarySpaceError("singleton cosets are not indexed by their elements")
    if result.model.table != conjugate_translation_action(a.group).table:
        raise BinarySpaceError("coset model differs from conjugate translation")
    return result


def verify_kernel_stabilizer(a: BinaryAction) -> Check:
    """Every pair stabilizer equals the kernel; witness ``(y, z)``.

    For transitive distributive actions this holds for all points.
    """
    _require(a, 0)
    ker = kernel(a)
    for y in range(a.size):
        for z in range(a.size):
            if stabilizer_pair(a, y, z).members != ker.members:
                return Check.fail((y, z), f"stabilizer of ({y},{z}) differs from kernel "
                                          f"{list(ker.members)}")
    return Check.ok()
