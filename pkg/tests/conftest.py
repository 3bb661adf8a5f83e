"""Shared fixtures and independent brute-force oracles.

The oracles here deliberately avoid the package's own machinery: they work on
plain nested lists, raw permutation tuples and exhaustive subset search.
"""

from itertools import combinations, product

import pytest

from binary_gspace import BinOp, enumerate_h2, make_named_group


# -- oracles -------------------------------------------------------------------

def all_tables(n):
    """Every n x n table over 0..n-1 as nested lists."""
    for flat in product(range(n), repeat=n * n):
        yield [list(flat[i * n:(i + 1) * n]) for i in range(n)]


def naive_compose(f, g):
    n = len(f)
    return [[f[x][g[x][y]] for y in range(n)] for x in range(n)]


def naive_identity(n):
    return [list(range(n)) for _ in range(n)]


def units_by_search(n):
    """Tables with a two-sided inverse, found by trying every candidate."""
    tables = list(all_tables(n))
    e = naive_identity(n)
    return [f for f in tables
            if any(naive_compose(f, g) == e and naive_compose(g, f) == e for g in tables)]


def naive_distributive(g, h):
    n = len(g)
    return all(g[x][h[y][z]] == h[g[x][y]][g[x][z]] for x, y, z in product(range(n), repeat=3))


def perm_mul(p, q):
    """(p q)(i) = p(q(i))."""
    return tuple(p[i] for i in q)


def perm_inv(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def subgroups_by_subset_search(G):
    """All subgroups of a small group, by testing every subset containing 0."""
    others = range(1, G.order)
    found = []
    for r in range(G.order):
        for rest in combinations(others, r):
            s = {0, *rest}
            if all(G.cayley[a][b] in s for a in s for b in s):
                found.append(tuple(sorted(s)))
    return found


# -- fixtures --------------------------------------------------------------------

SMALL_GROUPS = ("Z1", "Z2", "Z3", "Z4", "Z6", "Z8", "V4", "S3", "D4", "Q8")


@pytest.fixture(scope="session")
def h2_2():
    return enumerate_h2(2)


@pytest.fixture(scope="session")
def h2_3():
    return enumerate_h2(3)


@pytest.fixture(scope="session")
def named_ops():
    """The four invertible operations on two points."""
    return {
        "e": BinOp([[0, 1], [0, 1]]),
        "f": BinOp([[0, 1], [1, 0]]),
        "u": BinOp([[1, 0], [0, 1]]),
        "s": BinOp([[1, 0], [1, 0]]),
    }


@pytest.fixture(scope="session")
def S3():
    return make_named_group("S3")


# -- acceptance summary ------------------------------------------------------------

_acceptance = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{mark}  {name}")
