"""JSON formats for operations, groups, actions and results.

* operation: ``[[...], ...]`` with row ``x``, column ``y``
* group:     ``{"order": m, "cayley": [[...]]}``
* action:    ``{"group": {...}, "space_size": n, "table": [[[...]]]}``
"""

from __future__ import annotations

import json
from pathlib import Path

from .actions import BinaryAction, validate_action
from .algebra import BinOp
from .errors import InputError
from .groups import FiniteGroup, validate_group


def dumps(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def load_json(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None


def binop_from_json(data) -> BinOp:
    if not isinstance(data, list):
        raise InputError("operation must be a JSON array of rows")
    return BinOp(data)


def binop_to_json(op: BinOp) -> list:
    return op.to_list()


def _require_keys(data, keys, what):
    if not isinstance(data, dict):
        raise InputError(f"{what} must be a JSON object")
    missing = [k for k in keys if k not in data]
    if missing:
        raise InputError(f"{what} is missing keys: {', '.join(missing)}")


def group_from_json(data, name: str = "") -> FiniteGroup:
    _require_keys(data, ("order", "cayley"), "group")
    cayley = data["cayley"]
    if not isinstance(cayley, list) or len(cayley) != data["order"]:
        raise InputError(f"group order {data['order']!r} does not match the cayley table")
    return validate_group(cayley, name=name or data.get("name", ""))


def group_to_json(G: FiniteGroup) -> dict:
    return G.to_dict()


def action_from_json(data) -> BinaryAction:
    """Parse and validate an action; layer ``g`` follows the file's group numbering.

    When the file's group has its identity away from index 0, the group is
    renumbered and the layers are permuted to match.
    """
    _require_keys(data, ("group", "space_size", "table"), "action")
    G = group_from_json(data["group"])
    table = data["table"]
    n = data["space_size"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InputError(f"space_size must be a positive integer, got {n!r}")
    if not isinstance(table, list) or len(table) != G.order:
        raise InputError(f"action table must have one layer per group element ({G.order})")
    if G.renumbering is not None:
        p = G.renumbering
        moved = [None] * G.order
        for old, layer in enumerate(table):
            moved[p[old]] = layer
        table = moved
    return validate_action(G, n, table)


def action_to_json(a: BinaryAction) -> dict:
    return a.to_dict()
