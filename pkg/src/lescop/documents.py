"""Presentation file format: strict JSON with exact rational strings.

Presentations encode exact mathematical objects, so the schema is strict:
unknown fields are errors, every rational number is a string "a" or "a/b"
with b > 0, and floating-point literals are rejected anywhere in the
document.  serialize() is canonical, so serialize(parse(text)) is
byte-stable under further round trips.

Document shape::

    {
      "format_version": 1,
      "base_order": 1,
      "components": [
        {"name": "l1",
         "seifert": [["-1", "1"], ["0", "-1"]],
         "linking": {"l2": ["0", "0"]}}
      ],
      "bundle_w2": [1, 1],            // optional
      "normalization": "derived"      // optional
    }

Chain files are a JSON list of {"seifert": [[...]], "sign": -1 | 1}.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .invariants import NORMALIZATION_MODES, SurgeryChain
from .presentation import Component, SurgeryPresentation

FORMAT_VERSION = 1


class DocumentError(Exception):
    """Base of all input-document failures (exit code 2 in the CLI)."""


class DocumentSyntaxError(DocumentError):
    """The text is not well-formed JSON."""


class DocumentSchemaError(DocumentError):
    """Unknown, missing, or ill-typed fields."""


class DocumentValueError(DocumentError, ValueError):
    """A rational string is malformed, e.g. "1/0" or "0.5"."""


_RATIONAL_RE = re.compile(r"-?\d+(/\d+)?")


def parse_rational(s, where="value"):
    if not isinstance(s, str):
        raise DocumentSchemaError(
            f"{where}: rationals must be strings like \"a\" or \"a/b\", got {s!r}"
        )
    if not _RATIONAL_RE.fullmatch(s):
        raise DocumentValueError(f"{where}: malformed rational {s!r}")
    if "/" in s and int(s.split("/")[1]) == 0:
        raise DocumentValueError(f"{where}: zero denominator in {s!r}")
    return Fraction(s)


def _no_float(text):
    raise DocumentValueError(
        f"floating-point literal {text!r}; write rationals as strings"
    )


def _loads(text):
    try:
        return json.loads(text, parse_float=_no_float, parse_constant=_no_float)
    except json.JSONDecodeError as e:
        raise DocumentSyntaxError(f"line {e.lineno}, column {e.colno}: {e.msg}") from None


def _require_keys(obj, required, optional, where):
    if not isinstance(obj, dict):
        raise DocumentSchemaError(f"{where}: expected an object, got {type(obj).__name__}")
    unknown = sorted(set(obj) - set(required) - set(optional))
    if unknown:
        raise DocumentSchemaError(f"{where}: unknown fields {unknown}")
    missing = sorted(set(required) - set(obj))
    if missing:
        raise DocumentSchemaError(f"{where}: missing fields {missing}")


def _strict_int(x, where):
    if type(x) is not int:
        raise DocumentSchemaError(f"{where}: expected an integer, got {x!r}")
    return x


@dataclass(frozen=True)
class PresentationDocument:
    presentation: SurgeryPresentation
    bundle_w2: tuple = None
    normalization: str = None
    format_version: int = FORMAT_VERSION


def _parse_component(obj, i):
    where = f"components[{i}]"
    _require_keys(obj, ("name", "seifert", "linking"), (), where)
    name = obj["name"]
    if not isinstance(name, str) or not name:
        raise DocumentSchemaError(f"{where}.name: expected a non-empty string")
    seifert = obj["seifert"]
    if not isinstance(seifert, list):
        raise DocumentSchemaError(f"{where}.seifert: expected a list of rows")
    n = len(seifert)
    if n % 2 != 0:
        raise DocumentSchemaError(
            f"{where}.seifert: component {name!r} has odd size {n}; "
            "Seifert matrices have even size"
        )
    rows = []
    for r, row in enumerate(seifert):
        if not isinstance(row, list) or len(row) != n:
            raise DocumentSchemaError(
                f"{where}.seifert: component {name!r} matrix is not square"
            )
        rows.append(
            tuple(
                parse_rational(x, f"{where}.seifert[{r}][{c}]")
                for c, x in enumerate(row)
            )
        )
    linking_obj = obj["linking"]
    if not isinstance(linking_obj, dict):
        raise DocumentSchemaError(f"{where}.linking: expected an object")
    linking = {}
    for other, vec in linking_obj.items():
        if not isinstance(vec, list):
            raise DocumentSchemaError(f"{where}.linking[{other!r}]: expected a list")
        linking[other] = tuple(
            parse_rational(x, f"{where}.linking[{other!r}][{k}]")
            for k, x in enumerate(vec)
        )
    return Component(name=name, seifert=tuple(rows), linking=linking)


def parse(text):
    """Parse a presentation document; errors carry line/field context."""
    data = _loads(text)
    _require_keys(
        data,
        ("format_version", "base_order", "components"),
        ("bundle_w2", "normalization"),
        "document",
    )
    version = _strict_int(data["format_version"], "format_version")
    if version != FORMAT_VERSION:
        raise DocumentSchemaError(
            f"format_version: unsupported version {version}, expected {FORMAT_VERSION}"
        )
    base_order = _strict_int(data["base_order"], "base_order")
    if base_order < 1:
        raise DocumentSchemaError(f"base_order: must be positive, got {base_order}")
    if not isinstance(data["components"], list):
        raise DocumentSchemaError("components: expected a list")
    components = tuple(
        _parse_component(obj, i) for i, obj in enumerate(data["components"])
    )
    bundle_w2 = None
    if "bundle_w2" in data:
        raw = data["bundle_w2"]
        if not isinstance(raw, list) or any(
            type(b) is not int or b not in (0, 1) for b in raw
        ):
            raise DocumentSchemaError("bundle_w2: expected a list of 0/1 bits")
        if len(raw) != len(components):
            raise DocumentSchemaError(
                f"bundle_w2: has {len(raw)} bits for {len(components)} components"
            )
        bundle_w2 = tuple(raw)
    normalization = None
    if "normalization" in data:
        normalization = data["normalization"]
        if normalization not in NORMALIZATION_MODES:
            raise DocumentSchemaError(
                f"normalization: expected one of {list(NORMALIZATION_MODES)}, "
                f"got {normalization!r}"
            )
    return PresentationDocument(
        presentation=SurgeryPresentation(base_order=base_order, components=components),
        bundle_w2=bundle_w2,
        normalization=normalization,
    )


def serialize(doc):
    """Canonical text form of a document (stable under round trips)."""
    p = doc.presentation
    components = []
    for c in p.components:
        components.append(
            {
                "name": c.name,
                "seifert": [[str(x) for x in row] for row in c.seifert],
                "linking": {
                    other: [str(x) for x in vec]
                    for other, vec in sorted(c.linking.items())
                },
            }
        )
    obj = {
        "format_version": FORMAT_VERSION,
        "base_order": p.base_order,
        "components": components,
    }
    if doc.bundle_w2 is not None:
        obj["bundle_w2"] = list(doc.bundle_w2)
    if doc.normalization is not None:
        obj["normalization"] = doc.normalization
    return json.dumps(obj, indent=2) + "\n"


def parse_chain(text):
    """Parse a surgery-chain file: a JSON list of {seifert, sign} steps."""
    data = _loads(text)
    if not isinstance(data, list):
        raise DocumentSchemaError("chain: expected a top-level list of steps")
    steps = []
    for i, obj in enumerate(data):
        where = f"steps[{i}]"
        _require_keys(obj, ("seifert", "sign"), (), where)
        sign = obj["sign"]
        if type(sign) is not int or sign not in (-1, 1):
            raise DocumentSchemaError(f"{where}.sign: expected -1 or 1, got {sign!r}")
        seifert = obj["seifert"]
        if not isinstance(seifert, list) or any(
            not isinstance(row, list) or len(row) != len(seifert) for row in seifert
        ):
            raise DocumentSchemaError(f"{where}.seifert: expected a square matrix")
        rows = tuple(
            tuple(
                parse_rational(x, f"{where}.seifert[{r}][{c}]")
                for c, x in enumerate(row)
            )
            for r, row in enumerate(seifert)
        )
        steps.append((rows, sign))
    return SurgeryChain(steps=tuple(steps))


def serialize_chain(chain):
    obj = [
        {"seifert": [[str(x) for x in row] for row in v], "sign": sign}
        for v, sign in chain.steps
    ]
    return json.dumps(obj, indent=2) + "\n"
