"""JSON Schemas for every CLI report."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

REPORTS = ("graph", "gamma_result", "certificate", "grid_classify", "tree_check",
           "caterpillar_search", "sweep")


@lru_cache(maxsize=None)
def load_schema(name: str) -> dict:
    if name not in REPORTS:
        raise KeyError(f"no schema named {name!r}")
    text = resources.files(__name__).joinpath(f"{name}.schema.json").read_text(encoding="utf-8")
    return json.loads(text)
