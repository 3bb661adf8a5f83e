"""Binary actions ``G x X^2 -> X`` and the checks performed on them.

An action is stored as ``table[g][x][y] == g(x, y)`` and must satisfy

    e(x, y) = y            and            (gh)(x, y) = g(x, h(x, y)).

Distributivity is the identity ``g(x, h(y, z)) == h(g(x, y), g(x, z))``.
It is never required for an action to be valid; checks report the first
violating index tuple instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Optional, Sequence

from .algebra import (
    BinOp,
    FinSet,
    UnaryMap,
    as_finset,
    first_non_bijective_section,
    identity_op,
    section,
)
from .errors import (
    BinarySpaceError,
    CarrierMismatchError,
    CocycleError,
    GroupMismatchError,
    IdentityAxiomError,
    InputError,
    NonInvertibleLayerError,
    NotInvertibleError,
    NotSubgroupError,
    NotWellDefinedError,
)
from .groups import (
    FiniteGroup,
    SubgroupElems,
    coset_space,
    is_normal,
    make_subgroup,
    subgroup_violation,
)


@dataclass(frozen=True)
class Check:
    """Outcome of an exhaustive check: ``holds`` plus the first counterexample."""

    holds: bool
    witness: Optional[tuple] = None
    detail: str = ""

    def __bool__(self):
        return self.holds

    @classmethod
    def ok(cls, detail=""):
        return cls(True, None, detail)

    @classmethod
    def fail(cls, witness, detail=""):
        return cls(False, tuple(witness) if witness is not None else None, detail)


DistributivityReport = Check


@dataclass(frozen=True)
class BinaryAction:
    """A validated binary action; build with :func:`validate_action`."""

    group: FiniteGroup = field(repr=False)
    carrier: FinSet
    table: tuple = field(repr=False)

    @property
    def size(self) -> int:
        return self.carrier.size

    def __call__(self, g: int, x: int, y: int) -> int:
        return self.table[g][x][y]

    def to_dict(self) -> dict:
        return {
            "group": self.group.to_dict(),
            "space_size": self.size,
            "table": [[list(row) for row in layer] for layer in self.table],
        }


def validate_action(group: FiniteGroup, carrier, table) -> BinaryAction:
    """Check both action axioms and layer invertibility exhaustively."""
    carrier = as_finset(carrier)
    n, m = carrier.size, group.order
    try:
        t = tuple(tuple(tuple(row) for row in layer) for layer in table)
    except TypeError:
        raise InputError("action table must be an m x n x n nested sequence") from None
    if len(t) != m:
        raise InputError(f"action table has {len(t)} layers, group has order {m}")
    for g, layer in enumerate(t):
        if len(layer) != n or any(len(row) != n for row in layer):
            raise InputError(f"layer {g} is not {n}x{n}")
        for x, row in enumerate(layer):
            for y, v in enumerate(row):
                if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < n:
                    raise InputError(f"table[{g}][{x}][{y}] = {v!r} is outside 0..{n - 1}")

    for x, y in product(range(n), repeat=2):
        if t[0][x][y] != y:
            raise IdentityAxiomError(
                f"identity layer moves y: e({x},{y}) = {t[0][x][y]}", witness=(x, y))

    cay = group.cayley
    for g, h in product(range(m), repeat=2):
        tg, th, tgh = t[g], t[h], t[cay[g][h]]
        for x in range(n):
            gx, hx, ghx = tg[x], th[x], tgh[x]
            for y in range(n):
                if ghx[y] != gx[hx[y]]:
                    raise CocycleError(
                        f"(gh)(x,y) != g(x,h(x,y)) for g={g}, h={h}, x={x}, y={y}",
                        witness=(g, h, x, y))

    for g in range(m):
        for x in range(n):
            if len(set(t[g][x])) != n:
                raise NonInvertibleLayerError(
                    f"layer {g} has a non-bijective section at x={x}", witness=(g, x))

    return BinaryAction(group, carrier, t)


def action_op(a: BinaryAction, g: int) -> BinOp:
    """The operation ``(x, y) -> g(x, y)``."""
    if not 0 <= g < a.group.order:
        raise IndexError(f"group element {g} out of range")
    return BinOp(a.table[g])


def action_ops(a: BinaryAction) -> list:
    """Image of the homomorphism ``g -> alpha_g`` in the group of invertible operations."""
    return [action_op(a, g) for g in a.group.elements]


def kernel(a: BinaryAction) -> SubgroupElems:
    e = identity_op(a.size).table
    members = [g for g in a.group.elements if a.table[g] == e]
    bad = subgroup_violation(a.group, members)
    if bad is not None or not is_normal(a.group, SubgroupElems(a.group, tuple(members))):
        raise BinarySpaceError(f"kernel {members} is not a normal subgroup; action is invalid")
    return SubgroupElems(a.group, tuple(members))


def is_effective(a: BinaryAction) -> bool:
    return kernel(a).is_trivial()


# -- distributivity -------------------------------------------------------------

def distributive_pair_ops(g: BinOp, h: BinOp) -> Check:
    """Check ``g(x, h(y, z)) == h(g(x, y), g(x, z))``; witness ``(x, y, z)``."""
    if g.n != h.n:
        raise CarrierMismatchError(f"carrier sizes differ: {g.n} != {h.n}")
    gt, ht = g.table, h.table
    n = g.n
    for x in range(n):
        gx = gt[x]
        for y in range(n):
            hy, hgy = ht[y], ht[gx[y]]
            for z in range(n):
                if gx[hy[z]] != hgy[gx[z]]:
                    return Check.fail((x, y, z))
    return Check.ok()


def distributive_pair_sections(g: BinOp, h: BinOp) -> Check:
    """Check ``g_x o h_y == h_{g(x,y)} o g_x`` as maps; witness ``(x, y)``."""
    if g.n != h.n:
        raise CarrierMismatchError(f"carrier sizes differ: {g.n} != {h.n}")
    for op in (g, h):
        x = first_non_bijective_section(op)
        if x is not None:
            raise NotInvertibleError(f"{op!r} is not invertible", witness=x)
    # rows of the tables are the sections; compose them as tuples
    gt, ht = g.table, h.table
    n = g.n
    for x in range(n):
        gx = gt[x]
        for y in range(n):
            left = tuple([gx[v] for v in ht[y]])
            right_outer = ht[gx[y]]
            if left != tuple([right_outer[v] for v in gx]):
                return Check.fail((x, y))
    return Check.ok()


def mixed_section_pair(g: BinOp, h: BinOp) -> Check:
    """Check ``g_x(h(y, z)) == h(g_x(y), g_y(z))``; witness ``(x, y, z)``.

    This variant uses the section at ``y`` on the last argument.  It is kept
    so its agreement with :func:`distributive_pair_ops` can be measured; it is
    not used to decide distributivity.
    """
    if g.n != h.n:
        raise CarrierMismatchError(f"carrier sizes differ: {g.n} != {h.n}")
    n = g.n
    for x, y, z in product(range(n), repeat=3):
        if g(x, h(y, z)) != h(g(x, y), g(y, z)):
            return Check.fail((x, y, z))
    return Check.ok()


def is_distributive(a: BinaryAction) -> Check:
    """Distributivity over all ``g, h`` and points; witness ``(g, h, x, y, z)``."""
    t, n = a.table, a.size
    for g, h in product(a.group.elements, repeat=2):
        tg, th = t[g], t[h]
        for x in range(n):
            gx = tg[x]
            for y in range(n):
                hy, hgy = th[y], th[gx[y]]
                for z in range(n):
                    if gx[hy[z]] != hgy[gx[z]]:
                        return Check.fail((g, h, x, y, z))
    return Check.ok()


def sections_biequivariant_check(a: BinaryAction) -> Check:
    """Each section ``g_x`` must be a biequivariant bijection of the space.

    Witness ``(g, h, x, y, z)`` for a failing equation
    ``g_x(h(y, z)) == h(g_x(y), g_x(z))``, or ``(g, x)`` when ``g_x`` is not
    bijective.
    """
    m = a.group.order
    secs = [[section(action_op(a, g), x) for x in range(a.size)] for g in range(m)]
    for g in range(m):
        for x in range(a.size):
            if not secs[g][x].is_bijective:
                return Check.fail((g, x), "section is not a bijection")
    for g in range(m):
        for h in range(m):
            for x in range(a.size):
                check = is_biequivariant_single(a, h, secs[g][x])
                if not check:
                    y, z = check.witness
                    return Check.fail((g, h, x, y, z))
    return Check.ok()


def is_biequivariant_single(a: BinaryAction, h: int, f) -> Check:
    """``f(h(y, z)) == h(f(y), f(z))`` for one group element; witness ``(y, z)``."""
    th = a.table[h]
    for y, z in product(range(a.size), repeat=2):
        if f(th[y][z]) != th[f(y)][f(z)]:
            return Check.fail((y, z))
    return Check.ok()


def section_commutation_check(a: BinaryAction) -> Check:
    """``g_x h_y == h_{g(x,y)} g_x`` for all ``g, h, x, y``; witness ``(g, h, x, y)``."""
    m, n = a.group.order, a.size
    secs = [[section(action_op(a, g), x) for x in range(n)] for g in range(m)]
    for g, h in product(range(m), repeat=2):
        for x, y in product(range(n), repeat=2):
            gx = secs[g][x]
            if gx @ secs[h][y] != secs[h][gx(y)] @ gx:
                return Check.fail((g, h, x, y))
    return Check.ok()


# -- stabilizers and transitivity -----------------------------------------------

def stabilizer_pair(a: BinaryAction, x: int, y: int) -> SubgroupElems:
    """``{g : g(x, y) == y}``, checked to be a subgroup."""
    if x not in a.carrier or y not in a.carrier:
        raise IndexError(f"points ({x}, {y}) outside carrier of size {a.size}")
    members = [g for g in a.group.elements if a.table[g][x][y] == y]
    try:
        return make_subgroup(a.group, members)
    except NotSubgroupError as exc:
        raise BinarySpaceError(f"stabilizer of ({x},{y}) is not a subgroup; action is invalid") \
            from exc


def stabilizers(a: BinaryAction) -> dict:
    """All pair stabilizers keyed by ``(x, y)``."""
    return {(x, y): stabilizer_pair(a, x, y) for x, y in product(range(a.size), repeat=2)}


def orbit(a: BinaryAction, x: int) -> tuple:
    """``{g(x, x) : g in G}``, sorted."""
    return tuple(sorted({a.table[g][x][x] for g in a.group.elements}))


def is_transitive(a: BinaryAction) -> Check:
    """Every ``orbit(a, x)`` is the whole carrier; witness ``(x, orbit)``."""
    for x in range(a.size):
        orb = orbit(a, x)
        if len(orb) != a.size:
            return Check.fail((x, orb), f"orbit of ({x},{x}) misses {a.size - len(orb)} points")
    return Check.ok()


def is_biequivariant(src: BinaryAction, dst: BinaryAction, f: Sequence[int]) -> Check:
    """``f(g(x, y)) == g(f(x), f(y))`` for all ``g, x, y``; witness ``(g, x, y)``."""
    if src.group.cayley != dst.group.cayley:
        raise GroupMismatchError("actions are over different groups")
    images = f.images if isinstance(f, UnaryMap) else tuple(f)
    if len(images) != src.size or any(not 0 <= v < dst.size for v in images):
        raise InputError(f"map must send 0..{src.size - 1} into 0..{dst.size - 1}: {images}")
    ts, td = src.table, dst.table
    for g in src.group.elements:
        for x, y in product(range(src.size), repeat=2):
            if images[ts[g][x][y]] != td[g][images[x]][images[y]]:
                return Check.fail((g, x, y))
    return Check.ok()


# -- standard actions -----------------------------------------------------------

def _group_action(G: FiniteGroup, entry) -> BinaryAction:
    m = G.order
    table = [[[entry(g, x, y) for y in range(m)] for x in range(m)] for g in range(m)]
    return validate_action(G, m, table)


def conjugate_translation_action(G: FiniteGroup) -> BinaryAction:
    """``g(x, y) = x g x^-1 y`` on the group itself."""
    c, inv = G.cayley, G.inverse
    return _group_action(G, lambda g, x, y: c[c[c[x][g]][inv[x]]][y])


def inverse_conjugation_action(G: FiniteGroup) -> BinaryAction:
    """``g(x, y) = x^-1 g x y``; an action, distributive only in special cases."""
    c, inv = G.cayley, G.inverse
    return _group_action(G, lambda g, x, y: c[c[c[inv[x]][g]][x]][y])


def left_translation_action(G: FiniteGroup) -> BinaryAction:
    """``g(x, y) = g y``, ignoring the first argument."""
    c = G.cayley
    return _group_action(G, lambda g, x, y: c[g][y])


def trivial_action(G: FiniteGroup, carrier) -> BinaryAction:
    n = as_finset(carrier).size
    e = identity_op(n).table
    return validate_action(G, n, [e] * G.order)


def coset_action(G: FiniteGroup, H: SubgroupElems) -> BinaryAction:
    """``g(kH, lH) = (k g k^-1 l) H`` on left cosets of ``H``.

    Independence of the representatives ``k`` and ``l`` is swept over every
    pair of coset members before the table is built, so a non-normal ``H``
    raises :class:`NotWellDefinedError` with witness ``(g, k, m, l, n)``:
    ``k, m`` lie in one coset, ``l, n`` in one coset, and the two formulas
    land in different cosets.
    """
    if H.parent.cayley != G.cayley:
        raise NotSubgroupError("subgroup belongs to a different group")
    H = make_subgroup(G, H.members)
    cs = coset_space(G, H)
    c, inv, coset_of = G.cayley, G.inverse, cs.coset_of
    blocks = cs.cosets
    for g in G.elements:
        val = [[coset_of[c[c[c[k][g]][inv[k]]][l]] for l in G.elements] for k in G.elements]
        for k in G.elements:
            for m_ in blocks[coset_of[k]]:
                for l in G.elements:
                    for n_ in blocks[coset_of[l]]:
                        if val[k][l] != val[m_][n_]:
                            raise NotWellDefinedError(
                                f"coset formula depends on representatives: g={g}, "
                                f"k={k} vs {m_}, l={l} vs {n_}",
                                witness=(g, k, m_, l, n_))
    reps = cs.reps
    table = [[[coset_of[c[c[c[k][g]][inv[k]]][l]] for l in reps] for k in reps]
             for g in G.elements]
    a = validate_action(G, cs.size, table)
    check = is_distributive(a)
    if not check:
        raise BinarySpaceError(f"coset action is not distributive: {check.witness}")
    return a
