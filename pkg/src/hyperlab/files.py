"""JSON (de)serialization of structures.

Document shape: ``{"name", "m", "n", "carrier", "zero", "one"?, "f", "g"}``
where f maps comma-joined element names to arrays of names and g maps them
to a single name.  Keys may be written in any argument order; the loader
folds them by commutativity and rejects two permutations of the same
multiset carrying different values.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .core import HyperStructure
from .errors import LoadError


def structure_to_document(a: HyperStructure) -> dict:
    doc: dict = {
        "name": a.label,
        "m": a.m,
        "n": a.n,
        "carrier": list(a.names),
        "zero": a.names[a.zero],
    }
    if a.one is not None:
        doc["one"] = a.names[a.one]
    doc["f"] = {
        ",".join(a.names[i] for i in ms): [a.names[v] for v in value]
        for ms, value in sorted(a.f_table.items())
    }
    doc["g"] = {
        ",".join(a.names[i] for i in ms): a.names[value]
        for ms, value in sorted(a.g_table.items())
    }
    return doc


def document_to_structure(doc: object) -> HyperStructure:
    if not isinstance(doc, dict):
        raise LoadError("document must be a JSON object")
    try:
        m = int(doc["m"])
        n = int(doc["n"])
        carrier = doc["carrier"]
        zero_name = doc["zero"]
    except (KeyError, TypeError, ValueError) as exc:
        raise LoadError(f"malformed document header: {exc}") from exc
    if (not isinstance(carrier, list)
            or not all(isinstance(x, str) for x in carrier)):
        raise LoadError("carrier must be a list of element names")
    index = {name: i for i, name in enumerate(carrier)}
    if len(index) != len(carrier):
        raise LoadError("carrier contains duplicate names")

    def resolve(name: object, where: str) -> int:
        if not isinstance(name, str) or name not in index:
            raise LoadError(f"unknown element name {name!r} in {where}")
        return index[name]

    zero = resolve(zero_name, "zero")
    one = None
    if doc.get("one") is not None:
        one = resolve(doc["one"], "one")

    f_doc, g_doc = doc.get("f"), doc.get("g")
    if not isinstance(f_doc, dict) or not isinstance(g_doc, dict):
        raise LoadError("document must carry f and g tables")
    f_entries = {}
    for key, value in f_doc.items():
        args = tuple(resolve(p, f"f key {key!r}") for p in key.split(","))
        if not isinstance(value, list):
            raise LoadError(f"f value for {key!r} must be an array of names")
        f_entries[args] = tuple(resolve(v, f"f value for {key!r}") for v in value)
    g_entries = {}
    for key, value in g_doc.items():
        args = tuple(resolve(p, f"g key {key!r}") for p in key.split(","))
        g_entries[args] = resolve(value, f"g value for {key!r}")

    try:
        return HyperStructure.from_tables(
            m, n, tuple(carrier), f_entries, g_entries, zero, one,
            label=str(doc.get("name", "")))
    except ValueError as exc:
        raise LoadError(str(exc)) from exc


def serialize(a: HyperStructure) -> str:
    return json.dumps(structure_to_document(a), indent=2, sort_keys=True) + "\n"


def deserialize(text: str) -> HyperStructure:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LoadError(f"not valid JSON: {exc}") from exc
    return document_to_structure(doc)


def load_structure(path: str | Path) -> HyperStructure:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise LoadError(f"cannot read {path}: {exc}") from exc
    return deserialize(text)


def dump_structure(a: HyperStructure, path: str | Path) -> None:
    Path(path).write_text(serialize(a), encoding="utf-8")


def load_packaged(name: str) -> HyperStructure:
    """Load one of the JSON documents shipped inside the package."""
    ref = resources.files("hyperlab").joinpath("data", f"{name}.json")
    try:
        text = ref.read_text(encoding="utf-8")
    except (FileNotFoundError, OSError) as exc:
        raise LoadError(f"no packaged structure {name!r}") from exc
    return deserialize(text)
