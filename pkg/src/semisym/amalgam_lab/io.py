"""JSON format for amalgams.

An amalgam file names its completion and lists member generators by index
into a shared element pool::

    {"parent": "g.json" | {group object} | {"named": "PSL2(11)"},
     "elements": [[image_0, ...], ...],
     "g1": [0, 1], "g2": [2, 3],
     "type": "G1^3", "name": "..."}

G12 is always recomputed as G1 ∩ G2. A string parent is a path to a group
file, resolved relative to the amalgam file's directory.
"""

from __future__ import annotations

import json
from pathlib import Path

from ..group_forge import named_group
from ..perm_core import GeneratedGroup, Permutation
from ..perm_core.io import GroupFileError, group_from_dict, group_to_dict, read_group
from .amalgam import Amalgam


class AmalgamFileError(ValueError):
    """Raised for a malformed amalgam file."""


def amalgam_to_dict(a: Amalgam, parent_ref: str | None = None) -> dict:
    """Serialize ``a``; the parent is inlined unless ``parent_ref`` is given."""
    pool: list[tuple[int, ...]] = []
    index: dict[tuple[int, ...], int] = {}

    def ids(h) -> list[int]:
        out = []
        for x in h.generators:
            if x.images not in index:
                index[x.images] = len(pool)
                pool.append(x.images)
            out.append(index[x.images])
        return out

    g1, g2 = ids(a.g1), ids(a.g2)
    parent: str | dict = parent_ref if parent_ref is not None else group_to_dict(a.parent, order=a.parent.order)
    out = {"parent": parent, "elements": [list(x) for x in pool], "g1": g1, "g2": g2}
    if a.type_label:
        out["type"] = a.type_label
    if a.name:
        out["name"] = a.name
    return out


def _parent(spec, base: Path | None) -> GeneratedGroup:
    if isinstance(spec, str):
        path = Path(spec)
        if base is not None and not path.is_absolute():
            path = base / path
        return read_group(path)
    if isinstance(spec, dict) and "named" in spec:
        return named_group(spec["named"])
    if isinstance(spec, dict):
        return group_from_dict(spec)
    raise AmalgamFileError("parent must be a path, a group object or {'named': ...}")


def amalgam_from_dict(data: dict, base: Path | None = None) -> Amalgam:
    try:
        parent = _parent(data["parent"], base)
        pool = [Permutation(x) for x in data["elements"]]
        g1 = [pool[i] for i in data["g1"]]
        g2 = [pool[i] for i in data["g2"]]
    except (KeyError, IndexError, TypeError, ValueError, GroupFileError, OSError) as exc:
        raise AmalgamFileError(f"malformed amalgam description: {exc}") from exc
    for x in g1 + g2:
        if x.degree != parent.degree or not parent.contains(x):
            raise AmalgamFileError("member generator is not an element of the parent")
    return Amalgam.from_generators(parent, g1, g2, data.get("type"), data.get("name"))


def dumps_amalgam(a: Amalgam, parent_ref: str | None = None) -> str:
    return json.dumps(amalgam_to_dict(a, parent_ref), separators=(",", ":"))


def loads_amalgam(text: str, base: Path | None = None) -> Amalgam:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AmalgamFileError(f"not JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise AmalgamFileError("amalgam file must hold a JSON object")
    return amalgam_from_dict(data, base)


def read_amalgam(path) -> Amalgam:
    path = Path(path)
    return loads_amalgam(path.read_text(), path.parent)
