"""Distributive subsets of the group of invertible operations.

A subset ``D`` is distributive when every ordered pair ``(g, h)`` of its
members, ``g == h`` included, satisfies ``g(x, h(y, z)) == h(g(x, y), g(x, z))``.
The relation is not symmetric, so both orders are always checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Union

import numpy as np

from .actions import Check, distributive_pair_ops
from .algebra import BinOp, FinSet, compose_ops, identity_op, invert_op, is_invertible
from .errors import (
    BinarySpaceError,
    BoundExceededError,
    CarrierMismatchError,
    InputError,
    NotDistributiveError,
    NotInvertibleError,
)

DEFAULT_CLOSURE_CAP = 10_000


def pair_matrix_numpy(ops: Sequence[BinOp]) -> np.ndarray:
    """Boolean matrix ``M[i, j]`` = ``(ops[i], ops[j])`` is distributive, vectorized."""
    n = ops[0].n
    T = np.array([op.table for op in ops], dtype=np.intp).reshape(len(ops), n, n)
    N = len(ops)
    xs = np.arange(n)[None, :, None, None]
    js = np.arange(N)[:, None, None, None]
    out = np.empty((N, N), dtype=bool)
    for i in range(N):
        g = T[i]
        lhs = g[xs, T[:, None, :, :]]                      # g(x, h(y, z))
        rhs = T[js, g[None, :, :, None], g[None, :, None, :]]  # h(g(x, y), g(x, z))
        out[i] = (lhs == rhs).reshape(N, -1).all(axis=1)
    return out


@dataclass(frozen=True)
class DistributiveCatalog:
    carrier: FinSet
    ops: tuple
    pair_matrix: np.ndarray = field(repr=False, compare=False)
    index: dict = field(repr=False, compare=False)

    def __len__(self):
        return len(self.ops)

    def lookup(self, op: BinOp) -> int:
        """Index of ``op``, or -1 when it is not in the catalog."""
        return self.index.get(op.table, -1)

    def distributive(self, i: int, j: int) -> bool:
        return bool(self.pair_matrix[i, j])

    def to_dict(self) -> dict:
        return {
            "size": self.carrier.size,
            "ops": [op.to_list() for op in self.ops],
            "matrix": self.pair_matrix.astype(int).tolist(),
        }


def build_catalog(ops: Iterable[BinOp]) -> DistributiveCatalog:
    """Compute the ordered-pair distributivity matrix for invertible ``ops``."""
    unique, index = [], {}
    for op in ops:
        if op.table not in index:
            index[op.table] = len(unique)
            unique.append(op)
    if not unique:
        raise InputError("catalog needs at least one operation")
    n = unique[0].n
    for op in unique:
        if op.n != n:
            raise CarrierMismatchError(f"carrier sizes differ: {n} != {op.n}")
        if not is_invertible(op):
            raise NotInvertibleError(f"{op!r} is not invertible")
    return DistributiveCatalog(FinSet(n), tuple(unique), pair_matrix_numpy(unique), index)


def is_distributive_subset(catalog: DistributiveCatalog, indices: Iterable[int]) -> Check:
    """All ordered pairs, diagonal included; witness is the first failing ``(i, j)``."""
    idx = sorted(set(indices))
    for i in idx:
        if not 0 <= i < len(catalog):
            raise IndexError(f"catalog index {i} out of range")
    M = catalog.pair_matrix
    for i in idx:
        for j in idx:
            if not M[i, j]:
                return Check.fail((i, j))
    return Check.ok()


def _pairwise_check(ops: Sequence[BinOp], catalog=None) -> Check:
    """Pairwise distributivity of a list of ops; witness is a pair of list positions."""
    if catalog is not None:
        pos = [catalog.lookup(op) for op in ops]
        if all(p >= 0 for p in pos):
            M = catalog.pair_matrix
            sub = M[np.ix_(pos, pos)]
            if sub.all():
                return Check.ok()
            i, j = np.argwhere(~sub)[0]
            return Check.fail((int(i), int(j)))
    for i, g in enumerate(ops):
        for j, h in enumerate(ops):
            if not distributive_pair_ops(g, h):
                return Check.fail((i, j))
    return Check.ok()


def _resolve_seed(source, D) -> tuple:
    catalog = source if isinstance(source, DistributiveCatalog) else None
    pool = catalog.ops if catalog is not None else list(source)
    seed = []
    for d in D:
        if isinstance(d, BinOp):
            seed.append(d)
        else:
            seed.append(pool[d])
    return catalog, seed


def generate_subgroup_closure(source: Union[DistributiveCatalog, Sequence[BinOp]], D,
                              cap: int = DEFAULT_CLOSURE_CAP) -> list:
    """Subgroup generated by a distributive seed, verified to be distributive.

    ``D`` holds indices into ``source`` or :class:`BinOp` values.  The result
    lists the identity first, then elements in discovery order.
    """
    catalog, seed = _resolve_seed(source, D)
    for op in seed:
        if not is_invertible(op):
            raise NotInvertibleError(f"seed member {op!r} is not invertible")
    if seed and len({op.n for op in seed}) != 1:
        raise CarrierMismatchError("seed operations live on different carriers")
    check = _pairwise_check(seed, catalog)
    if not check:
        i, j = check.witness
        raise NotDistributiveError(
            f"seed is not distributive: pair ({seed[i]!r}, {seed[j]!r}) fails",
            witness=(D[i], D[j]))

    if not seed:
        if catalog is None:
            raise InputError("empty seed needs a catalog to fix the carrier")
        n = catalog.carrier.size
    else:
        n = seed[0].n
    e = identity_op(n)
    gens = []
    for op in seed:
        for g in (op, invert_op(op)):
            if g not in gens:
                gens.append(g)
    found = {e.table: e}
    order = [e]
    work = [e]
    while work:
        a = work.pop(0)
        for g in gens:
            b = compose_ops(a, g)
            if b.table not in found:
                if len(order) >= cap:
                    raise BoundExceededError(f"closure exceeded the cap of {cap} elements")
                found[b.table] = b
                order.append(b)
                work.append(b)

    verify = closure_violation(order)
    if verify is not None:
        raise BinarySpaceError(f"generated set is not a group: {verify}")
    dist = _pairwise_check(order, catalog)
    if not dist:
        i, j = dist.witness
        raise BinarySpaceError(
            f"generated subgroup is not distributive: ({order[i]!r}, {order[j]!r})")
    return order


def closure_violation(ops: Sequence[BinOp]):
    """Reason ``ops`` fails to be a group under composition, or None."""
    if not ops:
        return "empty"
    tables = {op.table for op in ops}
    if identity_op(ops[0].n).table not in tables:
        return "identity missing"
    for f in ops:
        if invert_op(f).table not in tables:
            return f"inverse of {f!r} missing"
        for g in ops:
            if compose_ops(f, g).table not in tables:
                return f"product of {f!r} and {g!r} missing"
    return None


def iter_maximal_distributive_subsets(catalog: DistributiveCatalog) -> Iterator[tuple]:
    """Inclusion-maximal distributive subsets in lexicographic order.

    Members must be self-distributive and pairwise distributive in both
    orders; maximal subsets are the maximal cliques of that graph, found by
    Bron-Kerbosch without pivoting, which visits candidates in index order.
    """
    M = catalog.pair_matrix
    ok = np.diag(M).copy()
    adj = M & M.T
    nbrs = [frozenset(int(j) for j in np.flatnonzero(adj[i] & ok) if j != i)
            for i in range(len(catalog))]
    start = [i for i in range(len(catalog)) if ok[i]]

    def expand(clique, P, X):
        if not P:
            if not X:
                yield tuple(clique)
            return
        Pset = set(P)
        if any(Pset <= nbrs[x] for x in X):
            return
        P = list(P)
        while P:
            v = P.pop(0)
            yield from expand(clique + [v], [u for u in P if u in nbrs[v]],
                              [u for u in X if u in nbrs[v]])
            X = X + [v]

    yield from expand([], start, [])


def maximal_distributive_subsets(catalog: DistributiveCatalog, limit: int = 100) -> list:
    out = []
    for s in iter_maximal_distributive_subsets(catalog):
        if len(out) >= limit:
            break
        out.append(s)
    return out
