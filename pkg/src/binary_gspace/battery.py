"""The full battery of exhaustive checks run by ``binary-gspace paper-check``.

Each check returns a :class:`~binary_gspace.actions.Check`; a failing check
names the fixture and the offending index tuple in its witness.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Callable, Optional

import numpy as np

from .actions import (
    Check,
    action_ops,
    conjugate_translation_action,
    coset_action,
    distributive_pair_ops,
    distributive_pair_sections,
    inverse_conjugation_action,
    is_biequivariant,
    is_distributive,
    is_effective,
    is_transitive,
    kernel,
    mixed_section_pair,
    section_commutation_check,
    sections_biequivariant_check,
    stabilizers,
)
from .algebra import BinOp, compose_ops, enumerate_h2, identity_op, invert_op, is_invertible, section
from .classification import classify, classify_effective, verify_kernel_stabilizer
from .errors import NotWellDefinedError
from .fixtures import fixture_actions, fixture_groups, fixture_maps
from .groups import all_subgroups, conjugate_subgroup, is_normal, make_named_group, normal_subgroups
from .search import (
    DEFAULT_CLOSURE_CAP,
    DistributiveCatalog,
    build_catalog,
    generate_subgroup_closure,
    is_distributive_subset,
    iter_maximal_distributive_subsets,
)

SEED_SAMPLE_SIZE = 100
SAMPLE_RNG_SEED = 0


@lru_cache(maxsize=None)
def h2(n: int) -> tuple:
    return tuple(enumerate_h2(n))


@lru_cache(maxsize=None)
def catalog(n: int) -> DistributiveCatalog:
    return build_catalog(h2(n))


@lru_cache(maxsize=None)
def _fixture_actions() -> tuple:
    return tuple(fixture_actions())


def _distributive_fixtures():
    return [(label, a) for label, a in _fixture_actions() if is_distributive(a)]


def inverse_indices(cat: DistributiveCatalog) -> np.ndarray:
    return np.array([cat.lookup(invert_op(op)) for op in cat.ops], dtype=np.intp)


def product_indices(cat: DistributiveCatalog) -> np.ndarray:
    N = len(cat)
    out = np.empty((N, N), dtype=np.intp)
    for i, f in enumerate(cat.ops):
        for j, g in enumerate(cat.ops):
            out[i, j] = cat.lookup(compose_ops(f, g))
    return out


# -- operations -----------------------------------------------------------------

def check_h2_counts() -> Check:
    expected = {1: 1, 2: 4, 3: 216}
    for n, count in expected.items():
        if len(h2(n)) != count:
            return Check.fail((n, len(h2(n))), f"expected {count}")
    # brute force at n = 2: keep tables that have a two-sided inverse among all 16
    every = [BinOp([[a, b], [c, d]]) for a, b, c, d in product(range(2), repeat=4)]
    e = identity_op(2)
    units = [f for f in every
             if any(compose_ops(f, g) == e and compose_ops(g, f) == e for g in every)]
    if units != list(h2(2)):
        return Check.fail(tuple(u.to_list() for u in units), "brute-force units differ")
    if [is_invertible(f) for f in every] != [f in units for f in every]:
        return Check.fail((), "section criterion disagrees with inverse search")
    return Check.ok("1, 4, 216")


def check_monoid_laws() -> Check:
    every = [BinOp([[a, b], [c, d]]) for a, b, c, d in product(range(2), repeat=4)]
    e = identity_op(2)
    for f in every:
        if compose_ops(e, f) != f or compose_ops(f, e) != f:
            return Check.fail((f.to_list(),), "unit law")
    for f, g, k in product(every, repeat=3):
        if compose_ops(compose_ops(f, g), k) != compose_ops(f, compose_ops(g, k)):
            return Check.fail((f.to_list(), g.to_list(), k.to_list()), "associativity")
    return Check.ok()


def check_section_homomorphism() -> Check:
    for n in (1, 2, 3):
        ops = h2(n)
        for f, g in product(ops, repeat=2):
            fg = compose_ops(f, g)
            for x in range(n):
                if section(fg, x) != section(f, x) @ section(g, x):
                    return Check.fail((f.to_list(), g.to_list(), x))
    return Check.ok()


def check_inverses() -> Check:
    for n in (1, 2, 3):
        e = identity_op(n)
        for f in h2(n):
            inv = invert_op(f)
            if compose_ops(f, inv) != e or compose_ops(inv, f) != e:
                return Check.fail((f.to_list(),))
    return Check.ok()


def check_h2_is_group() -> Check:
    for n in (1, 2, 3):
        cat = catalog(n)
        if (inverse_indices(cat) < 0).any() or (product_indices(cat) < 0).any():
            return Check.fail((n,))
    return Check.ok()


# -- distributive pairs ---------------------------------------------------------

def check_pair_criteria() -> Check:
    for n in (2, 3):
        ops = h2(n)
        for i, g in enumerate(ops):
            for j, h in enumerate(ops):
                if bool(distributive_pair_ops(g, h)) != bool(distributive_pair_sections(g, h)):
                    return Check.fail((n, i, j))
    return Check.ok("16 + 46656 ordered pairs")


def check_mixed_variant() -> Check:
    """How often ``g(x,h(y,z)) == h(g(x,y), g(y,z))`` matches distributivity."""
    parts, holds = [], True
    for n in (2, 3):
        ops = h2(n)
        agree = sum(bool(mixed_section_pair(g, h)) == bool(distributive_pair_ops(g, h))
                    for g in ops for h in ops)
        holds = holds and agree == len(ops) ** 2
        parts.append(f"n={n}: {agree}/{len(ops) ** 2}")
    return Check(holds, None, "agreement " + ", ".join(parts))


def check_catalog_matrix() -> Check:
    for n in (2, 3):
        cat = catalog(n)
        for i, g in enumerate(cat.ops):
            for j, h in enumerate(cat.ops):
                if cat.distributive(i, j) != bool(distributive_pair_ops(g, h)):
                    return Check.fail((n, i, j))
    return Check.ok()


def inverse_closure_violation(cat: DistributiveCatalog):
    M = cat.pair_matrix
    inv = inverse_indices(cat)
    ok = M[:, inv] & M[inv, :] & M[np.ix_(inv, inv)]
    bad = np.argwhere(M & ~ok)
    return None if len(bad) == 0 else tuple(int(v) for v in bad[0])


def product_closure_violation(cat: DistributiveCatalog):
    M = cat.pair_matrix
    prod = product_indices(cat)
    for g in range(len(cat)):
        R = np.flatnonzero(M[g])
        sub = M[g, prod[np.ix_(R, R)]]
        if not sub.all():
            h, k = np.argwhere(~sub)[0]
            return (g, int(R[h]), int(R[k]))
    return None


def check_inverse_closure() -> Check:
    for n in (2, 3):
        w = inverse_closure_violation(catalog(n))
        if w is not None:
            return Check.fail((n,) + w)
    return Check.ok()


def check_product_closure() -> Check:
    for n in (2, 3):
        w = product_closure_violation(catalog(n))
        if w is not None:
            return Check.fail((n,) + w)
    return Check.ok()


def distributive_seeds(cat: DistributiveCatalog, max_size: Optional[int] = None) -> list:
    """Every distributive subset (up to ``max_size`` members), sorted."""
    seeds = {()}
    for maximal in iter_maximal_distributive_subsets(cat):
        top = len(maximal) if max_size is None else min(max_size, len(maximal))
        for r in range(1, top + 1):
            seeds.update(combinations(maximal, r))
    return sorted(seeds, key=lambda s: (len(s), s))


def sampled_seeds(cat: DistributiveCatalog, count: int = SEED_SAMPLE_SIZE,
                  max_size: int = 3, rng_seed: int = SAMPLE_RNG_SEED) -> list:
    """``count`` random generator lists drawn from the distributive seeds."""
    pool = [s for s in distributive_seeds(cat, max_size) if s]
    rng = random.Random(rng_seed)
    out = []
    for _ in range(count):
        s = list(rng.choice(pool))
        rng.shuffle(s)
        out.append(tuple(s))
    return out


def _closure_ok(cat, seed, cap):
    group = generate_subgroup_closure(cat, list(seed), cap=cap)
    idx = [cat.lookup(op) for op in group]
    if min(idx) < 0:
        return False
    return bool(is_distributive_subset(cat, idx))


def check_generated_subgroups(cap: int = DEFAULT_CLOSURE_CAP) -> Check:
    cat2 = catalog(2)
    seeds2 = [s for r in range(len(cat2) + 1) for s in combinations(range(len(cat2)), r)
              if is_distributive_subset(cat2, s)]
    for s in seeds2:
        if not _closure_ok(cat2, s, cap):
            return Check.fail((2, s))
    cat3 = catalog(3)
    exhaustive = distributive_seeds(cat3, 3)
    sampled = sampled_seeds(cat3)
    for s in exhaustive + sampled:
        if not _closure_ok(cat3, s, cap):
            return Check.fail((3, s))
    return Check.ok(f"{len(seeds2)} seeds in H2(2); {len(exhaustive)} exhaustive and "
                    f"{len(sampled)} sampled seeds in H2(3)")


def check_action_images() -> Check:
    for label, a in _distributive_fixtures():
        cat = build_catalog(action_ops(a))
        w = is_distributive_subset(cat, range(len(cat)))
        if not w:
            return Check.fail((label,) + w.witness)
    return Check.ok()


# -- canonical actions ----------------------------------------------------------

def check_conjugate_translation() -> Check:
    for name in ("Z2", "Z6", "Z8", "V4", "S3", "D4", "Q8"):
        a = conjugate_translation_action(make_named_group(name))
        for what, result in (("distributive", bool(is_distributive(a))),
                             ("transitive", bool(is_transitive(a))),
                             ("effective", is_effective(a))):
            if not result:
                return Check.fail((name, what))
    return Check.ok()


def check_inverse_conjugation_fails(names=("S3",)) -> Check:
    witnesses = []
    for name in names:
        a = inverse_conjugation_action(make_named_group(name))
        result = is_distributive(a)
        if result or result.witness is None:
            return Check.fail((name,), "unexpectedly distributive")
        g, h, x, y, z = result.witness
        t = a.table
        if t[g][x][t[h][y][z]] == t[h][t[g][x][y]][t[g][x][z]]:
            return Check.fail((name,) + result.witness, "reported witness does not violate")
        witnesses.append(f"{name}: (g,h,x,y,z)={result.witness}")
    return Check.ok("; ".join(witnesses))


def check_inverse_conjugation_survey() -> Check:
    """Which nonabelian fixtures make ``x^-1 g x y`` distributive anyway."""
    parts = []
    for name in ("S3", "D4", "Q8"):
        result = is_distributive(inverse_conjugation_action(make_named_group(name)))
        parts.append(f"{name}: {'distributive' if result else 'not distributive'}")
    return Check(True, None, "; ".join(parts))


def check_action_criteria() -> Check:
    for label, a in _fixture_actions():
        results = (bool(is_distributive(a)), bool(sections_biequivariant_check(a)),
                   bool(section_commutation_check(a)))
        if len(set(results)) != 1:
            return Check.fail((label,) + results)
    return Check.ok()


# -- stationary subgroups ---------------------------------------------------------

def check_stabilizer_conjugation() -> Check:
    for label, a in _fixture_actions():
        G, S = a.group, stabilizers(a)
        for g in G.elements:
            for x, y in product(range(a.size), repeat=2):
                rhs = conjugate_subgroup(G, g, S[(x, y)])
                if S[(x, a.table[g][x][y])].members != rhs.members:
                    return Check.fail((label, g, x, y))
    return Check.ok()


def check_point_stabilizer_normal() -> Check:
    for label, a in _distributive_fixtures():
        S = stabilizers(a)
        for x in range(a.size):
            if not is_normal(a.group, S[(x, x)]):
                return Check.fail((label, x))
    return Check.ok()


def check_stabilizer_equalities() -> Check:
    for label, a in _distributive_fixtures():
        t, S = a.table, stabilizers(a)
        n = a.size
        for g in a.group.elements:
            for x in range(n):
                point = S[(x, x)].members
                gxx = t[g][x][x]
                if S[(x, gxx)].members != point:
                    return Check.fail((label, "G_(x,g(x,x))", g, x))
                if S[(gxx, x)].members != point:
                    return Check.fail((label, "G_(g(x,x),x)", g, x))
                for y, z in product(range(n), repeat=2):
                    if S[(t[g][x][y], t[g][x][z])].members != S[(y, z)].members:
                        return Check.fail((label, "G_(g(x,y),g(x,z))", g, x, y, z))
    return Check.ok()


def _all_fixture_maps():
    maps = list(fixture_maps())
    for label, a in _distributive_fixtures():
        if is_transitive(a):
            r = classify(a, 0)
            maps.append((f"classify {label}", r.model, a, r.iso))
    return maps


def check_biequivariant_inclusion() -> Check:
    for label, src, dst, f in _all_fixture_maps():
        eq = is_biequivariant(src, dst, f)
        if not eq:
            return Check.fail((label, "not biequivariant") + eq.witness)
        Ss, Sd = stabilizers(src), stabilizers(dst)
        for x, y in product(range(src.size), repeat=2):
            if not Ss[(x, y)].member_set <= Sd[(f[x], f[y])].member_set:
                return Check.fail((label, x, y))
    return Check.ok()


def check_kernel_normal() -> Check:
    for label, a in _fixture_actions():
        if not is_normal(a.group, kernel(a)):
            return Check.fail((label,))
    return Check.ok()


# -- coset spaces and classification ----------------------------------------------

def check_coset_actions() -> Check:
    non_normal = 0
    for G in fixture_groups():
        for H in all_subgroups(G):
            if is_normal(G, H):
                a = coset_action(G, H)
                if not (is_distributive(a) and is_transitive(a)):
                    return Check.fail((G.name, H.members, "not distributive/transitive"))
                if kernel(a).members != H.members:
                    return Check.fail((G.name, H.members, "kernel", kernel(a).members))
            else:
                try:
                    coset_action(G, H)
                except NotWellDefinedError as exc:
                    if exc.witness is None:
                        return Check.fail((G.name, H.members, "no witness"))
                    non_normal += 1
                else:
                    return Check.fail((G.name, H.members, "non-normal subgroup accepted"))
    return Check.ok(f"{non_normal} non-normal subgroups rejected")


def check_classification_round_trip() -> Check:
    runs = 0
    for G in fixture_groups():
        for H in normal_subgroups(G):
            a = coset_action(G, H)
            for x0 in range(a.size):
                r = classify(a, x0)
                if r.subgroup.members != H.members or not all(r.checks.values()):
                    return Check.fail((G.name, H.members, x0))
                runs += 1
    for label, a in _distributive_fixtures():
        if is_transitive(a):
            subgroups = {classify(a, x0).subgroup.members for x0 in range(a.size)}
            if len(subgroups) != 1:
                return Check.fail((label, "basepoint dependence"))
    return Check.ok(f"{runs} (subgroup, basepoint) runs")


def check_effective_case() -> Check:
    for G in fixture_groups():
        a = conjugate_translation_action(G)
        for x0 in range(a.size):
            r = classify_effective(a, x0)
            if r.model.table != a.table:
                return Check.fail((G.name, x0))
    return Check.ok()


def check_kernel_stabilizer() -> Check:
    for label, a in _distributive_fixtures():
        if is_transitive(a):
            r = verify_kernel_stabilizer(a)
            if not r:
                return Check.fail((label,) + r.witness)
    return Check.ok()


# -- report -----------------------------------------------------------------------

@dataclass
class Entry:
    name: str
    anchor: str
    passed: bool
    witness: Optional[tuple] = None
    detail: str = ""
    elapsed: float = 0.0
    informational: bool = False

    def to_dict(self, timings: bool = False) -> dict:
        d = {"name": self.name, "anchor": self.anchor, "passed": self.passed,
             "witness": list(self.witness) if self.witness is not None else None,
             "detail": self.detail, "informational": self.informational}
        if timings:
            d["elapsed"] = round(self.elapsed, 3)
        return d


@dataclass
class VerificationReport:
    entries: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries if not e.informational)

    def to_dict(self, timings: bool = False) -> dict:
        return {"status": "pass" if self.passed else "fail",
                "entries": [e.to_dict(timings) for e in self.entries]}

    def render(self, timings: bool = False) -> str:
        lines = []
        for e in self.entries:
            mark = "INFO" if e.informational else ("PASS" if e.passed else "FAIL")
            line = f"[{mark}] {e.name}  ({e.anchor})"
            if e.detail:
                line += f"  {e.detail}"
            if e.witness is not None:
                line += f"  witness={e.witness}"
            if timings:
                line += f"  [{e.elapsed:.2f}s]"
            lines.append(line)
        lines.append(f"overall: {'pass' if self.passed else 'fail'}")
        return "\n".join(lines)


def battery(closure_cap: int = DEFAULT_CLOSURE_CAP) -> list:
    """``(name, anchor, check, informational)`` rows in report order."""
    return [
        ("invertible operations counted, n = 1, 2, 3", "(n!)^n", check_h2_counts, False),
        ("monoid laws on all operations, n = 2", "(f phi)(x,y) = f(x, phi(x,y)), e(x,y) = y",
         check_monoid_laws, False),
        ("section homomorphism, n <= 3", "(gh)_x = g_x h_x", check_section_homomorphism, False),
        ("two-sided inverses, n <= 3", "g g^-1 = g^-1 g = e", check_inverses, False),
        ("invertible operations form a group, n <= 3", "H2(X)", check_h2_is_group, False),
        ("pair criteria agree on H2(2) and H2(3)", "g_x h_y = h_{g_x(y)} g_x",
         check_pair_criteria, False),
        ("mixed-section variant versus distributivity", "g_x(h(y,z)) = h(g_x(y), g_y(z))",
         check_mixed_variant, True),
        ("catalog matrix matches scalar check", "g(x,h(y,z)) = h(g(x,y),g(x,z))",
         check_catalog_matrix, False),
        ("inverse closure of distributive pairs", "(g,h) => (g,h^-1), (g^-1,h), (g^-1,h^-1)",
         check_inverse_closure, False),
        ("product closure of distributive pairs", "(g,h), (g,k) => (g,hk)",
         check_product_closure, False),
        ("generated subgroups are distributive", "<D> distributive",
         lambda: check_generated_subgroups(closure_cap), False),
        ("action images are distributive subsets", "{alpha_g : g in G}", check_action_images,
         False),
        ("conjugate left translation", "g(x,y) = x g x^-1 y", check_conjugate_translation, False),
        ("inverse conjugation is not distributive on S3", "g(x,y) = x^-1 g x y",
         check_inverse_conjugation_fails, False),
        ("inverse conjugation on nonabelian fixtures", "g(x,y) = x^-1 g x y",
         check_inverse_conjugation_survey, True),
        ("action distributivity criteria agree", "g_x h_y = h_{g_x(y)} g_x",
         check_action_criteria, False),
        ("stabilizer conjugation", "G_(x,g(x,y)) = g G_(x,y) g^-1",
         check_stabilizer_conjugation, False),
        ("point stabilizers are normal", "g G_(x,x) g^-1 = G_(x,x)",
         check_point_stabilizer_normal, False),
        ("stabilizer equalities", "G_(g(x,y),g(x,z)) = G_(y,z); G_(x,g(x,x)) = G_(g(x,x),x) = G_(x,x)",
         check_stabilizer_equalities, False),
        ("biequivariant maps enlarge stabilizers", "G_(x,y) <= G_(f(x),f(y))",
         check_biequivariant_inclusion, False),
        ("kernels are normal", "ker alpha", check_kernel_normal, False),
        ("coset actions", "g(kH,lH) = (k g k^-1 l)H", check_coset_actions, False),
        ("classification round trip", "f(gH) = g(x0,x0)", check_classification_round_trip,
         False),
        ("effective case is conjugate translation", "ker alpha = e", check_effective_case,
         False),
        ("kernel equals every pair stabilizer", "ker alpha = G_(x,x)", check_kernel_stabilizer,
         False),
    ]


def run_battery(closure_cap: int = DEFAULT_CLOSURE_CAP,
                progress: Optional[Callable[[Entry], None]] = None) -> VerificationReport:
    report = VerificationReport()
    for name, anchor, fn, informational in battery(closure_cap):
        start = time.perf_counter()
        try:
            result = fn()
            entry = Entry(name, anchor, result.holds, result.witness, result.detail,
                          informational=informational)
        except Exception as exc:  # a crash is a failed entry, not a crashed report
            entry = Entry(name, anchor, False, None, f"{type(exc).__name__}: {exc}",
                          informational=informational)
        entry.elapsed = time.perf_counter() - start
        report.entries.append(entry)
        if progress is not None:
            progress(entry)
    return report
