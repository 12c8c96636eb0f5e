"""Algebra JSON files: ``{"field": ..., "dim": n, "constants": [[i, j, k, s], ...]}``."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .algebra import Algebra
from .errors import LeibnizKitError
from .field import FieldSpec

SAMPLES = (
    "lei4_gf2.json",
    "lei4_gf3.json",
    "lei4_gf5_l1.json",
    "lei4_gf5_l2.json",
    "lei4_rationals.json",
    "heisenberg.json",
    "abelian_2d.json",
    "cyclic_2d.json",
    "broken_table.json",
)


class AlgebraFileError(LeibnizKitError):
    """Malformed algebra file; the message names the offending location."""


def parse_algebra(obj, source: str = "<input>", check: bool = True) -> Algebra:
    if not isinstance(obj, dict):
        raise AlgebraFileError(f"{source}: top level must be an object")
    for key in ("field", "dim", "constants"):
        if key not in obj:
            raise AlgebraFileError(f"{source}: missing field {key!r}")
    try:
        F = FieldSpec.from_json(obj["field"])
    except ValueError as e:
        raise AlgebraFileError(f"{source}: field: {e}") from None
    n = obj["dim"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise AlgebraFileError(f"{source}: dim: expected a positive integer, got {n!r}")
    entries = []
    for t, e in enumerate(obj["constants"]):
        where = f"{source}: constants[{t}]"
        if not isinstance(e, list) or len(e) != 4:
            raise AlgebraFileError(f"{where}: expected [i, j, k, scalar]")
        i, j, k, s = e
        for name, idx in zip("ijk", (i, j, k)):
            if not isinstance(idx, int) or not 1 <= idx <= n:
                raise AlgebraFileError(f"{where}: index {name}={idx!r} outside 1..{n}")
        if F.is_finite and not isinstance(s, int):
            raise AlgebraFileError(f"{where}: scalar {s!r} must be an integer over {F}")
        try:
            F.normalize(s)
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise AlgebraFileError(f"{where}: bad scalar {s!r} ({exc})") from None
        entries.append((i, j, k, s))
    labels = obj.get("labels") or ()
    if labels and len(labels) != n:
        raise AlgebraFileError(f"{source}: labels: expected {n} names")
    return Algebra.from_sparse(F, n, entries, labels=tuple(labels), check=check)


def load_algebra(path, check: bool = True) -> Algebra:
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise AlgebraFileError(f"{path}:{e.lineno}:{e.colno}: invalid JSON ({e.msg})") from None
    return parse_algebra(obj, str(path), check=check)


def dump_algebra(A: Algebra) -> str:
    return json.dumps(A.to_json(), indent=2) + "\n"


def sample_path(name: str) -> Path:
    return Path(str(resources.files("leibniz_kit") / "data" / name))
