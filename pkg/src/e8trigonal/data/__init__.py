"""Bundled sample characters, verified regular semisimple over Q."""

from __future__ import annotations

import json
from functools import cache
from importlib import resources


@cache
def _library() -> dict:
    text = resources.files(__package__).joinpath("characters.json").read_text()
    return json.loads(text)


def stored_character_names() -> list[str]:
    lib = _library()
    return sorted(
        entry["name"] for group in lib.values() for entry in group
    )


def stored_character(name: str) -> dict:
    for group in _library().values():
        for entry in group:
            if entry["name"] == name:
                return entry
    raise KeyError(f"no stored character named {name!r}")


def stored_characters(mode: str | None = None) -> list[dict]:
    lib = _library()
    if mode == "mult":
        return list(lib["multiplicative"])
    if mode == "add":
        return list(lib["additive"])
    return list(lib["multiplicative"]) + list(lib["additive"])
