"""JSON wire format for permutation groups.

``{"name": str, "degree": n, "generators": [[image_0, ..., image_{n-1}], ...]}``
with 0-based images. Extra keys (such as ``"order"``) are kept as metadata.
"""

from __future__ import annotations

import json
from typing import Any

from .group import GeneratedGroup
from .permutation import Permutation


class GroupFileError(ValueError):
    """Raised for a malformed group file."""


def group_to_dict(g: GeneratedGroup, **metadata: Any) -> dict:
    out = {
        "name": g.name or "",
        "degree": g.degree,
        "generators": [list(x.images) for x in g.generators],
    }
    out.update(metadata)
    return out


def group_from_dict(data: dict) -> GeneratedGroup:
    try:
        degree = int(data["degree"])
        gens = [Permutation(imgs) for imgs in data["generators"]]
        name = data.get("name") or None
    except (KeyError, TypeError, ValueError) as exc:
        raise GroupFileError(f"malformed group description: {exc}") from exc
    if any(x.degree != degree for x in gens):
        raise GroupFileError("generator length does not match degree")
    return GeneratedGroup(degree, gens, name=name)


def dumps_group(g: GeneratedGroup, **metadata: Any) -> str:
    return json.dumps(group_to_dict(g, **metadata), indent=None, separators=(",", ":"))


def loads_group(text: str) -> GeneratedGroup:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GroupFileError(f"not JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise GroupFileError("group file must hold a JSON object")
    return group_from_dict(data)


def read_group(path) -> GeneratedGroup:
    with open(path) as fh:
        return loads_group(fh.read())
