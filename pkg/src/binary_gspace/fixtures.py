"""Built-in groups, actions and biequivariant maps used by the check battery."""

from __future__ import annotations

from .actions import (
    BinaryAction,
    conjugate_translation_action,
    coset_action,
    inverse_conjugation_action,
    left_translation_action,
    trivial_action,
    validate_action,
)
from .groups import coset_space, make_named_group, normal_subgroups

FIXTURE_GROUP_NAMES = ("Z1", "Z2", "Z3", "Z4", "Z6", "Z8", "V4", "S3", "D4", "Q8")
NONABELIAN_NAMES = ("S3", "D4", "Q8")


def fixture_groups() -> list:
    return [make_named_group(name) for name in FIXTURE_GROUP_NAMES]


def involution_family_action() -> BinaryAction:
    """``Z2`` on three points with a different involution per first argument."""
    Z2 = make_named_group("Z2")
    ident = (0, 1, 2)
    flips = ((1, 0, 2), (0, 2, 1), (0, 1, 2))
    return validate_action(Z2, 3, [[ident] * 3, list(flips)])


def fixture_actions() -> list:
    """``(label, action)`` pairs, distributive and non-distributive alike."""
    out = []
    for G in fixture_groups():
        name = G.name
        out.append((f"conj({name})", conjugate_translation_action(G)))
        out.append((f"invconj({name})", inverse_conjugation_action(G)))
        out.append((f"left({name})", left_translation_action(G)))
        out.append((f"trivial({name},1)", trivial_action(G, 1)))
        out.append((f"trivial({name},2)", trivial_action(G, 2)))
        for H in normal_subgroups(G):
            out.append((f"coset({name},{list(H.members)})", coset_action(G, H)))
    out.append(("involutions(Z2,3)", involution_family_action()))
    return out


def fixture_maps() -> list:
    """``(label, src, dst, images)`` biequivariant maps between fixture actions."""
    out = []
    for G in fixture_groups():
        conj = conjugate_translation_action(G)
        out.append((f"id conj({G.name})", conj, conj, tuple(G.elements)))
        out.append((f"const conj({G.name})->trivial", conj, trivial_action(G, 1),
                    (0,) * G.order))
        for H in normal_subgroups(G):
            cs = coset_space(G, H)
            out.append((f"quotient conj({G.name})->coset {list(H.members)}", conj,
                        coset_action(G, H), cs.coset_of))
    return out
