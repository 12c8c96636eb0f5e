"""``leibniz-kit`` command line.

Exit codes: 0 success, 1 Leibniz identity violations, 2 usage or parse
error, 3 infinite field, 4 enumeration guard exceeded, 5 algebra not
extraspecial.
"""

from __future__ import annotations

import argparse
import json
import shutil
import sys
import time
from importlib.metadata import PackageNotFoundError, version
from pathlib import Path
from typing import Optional, Sequence

from .algebra import (
    Algebra,
    build_lei4,
    centers,
    check_left_leibniz,
    derived_ideal,
    is_extraspecial,
    leibniz_kernel,
    lower_central_series,
    nilpotency_class,
    upper_central_series,
)
from .autgroup import quotient_blocks, scan_automorphisms
from .errors import GuardExceeded, InfiniteField, NotExtraspecial, NotLeibniz
from .field import FieldSpec
from .forms import induced_form, preserves_form, similitude_factor
from .io import SAMPLES, AlgebraFileError, load_algebra, sample_path
from .linalg import Subspace
from .theorem1 import verify_theorem1

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_INFINITE, EXIT_GUARD, EXIT_NOT_EXTRASPECIAL = range(6)


def tool_version() -> str:
    try:
        return version("artifact")
    except PackageNotFoundError:
        return "0.0.0"


class UsageError(Exception):
    pass


def _load(path: str, unchecked: bool) -> Algebra:
    return load_algebra(path, check=not unchecked)


def cmd_check(args) -> tuple[dict, int]:
    A = _load(args.path, unchecked=True)
    bad = check_left_leibniz(A)
    results = {
        "dim": A.dim,
        "field": A.field.to_json(),
        "leibniz": not bad,
        "violations": [v.to_json(A.field) for v in bad],
    }
    return results, EXIT_VIOLATION if bad else EXIT_OK


def _series_json(chain) -> list:
    return [t.to_json() for t in chain.terms]


def cmd_invariants(args) -> tuple[dict, int]:
    A = _load(args.path, args.unchecked)
    left, right, two = centers(A)
    results = {
        "dim": A.dim,
        "field": A.field.to_json(),
        "labels": list(A.labels),
        "leibniz_kernel": leibniz_kernel(A).to_json(),
        "derived_ideal": derived_ideal(A).to_json(),
        "left_center": left.to_json(),
        "right_center": right.to_json(),
        "center": two.to_json(),
        "upper_central_series": _series_json(upper_central_series(A)),
        "lower_central_series": _series_json(lower_central_series(A)),
        "nilpotency_class": nilpotency_class(A),
        "extraspecial": is_extraspecial(A),
    }
    return results, EXIT_OK


def _lambda_of(A: Algebra, given: Optional[str]) -> object:
    """Lambda for a file holding Lei4(3,F); errors out if it is not of that type."""
    F = A.field
    if A.dim != 3:
        raise UsageError("verify-theorem1 needs a 3-dimensional algebra of type Lei4(3,F)")
    lam = F.normalize(given) if given is not None else A.constants[1][1][2]
    try:
        ref = build_lei4(F, lam)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if ref != A:
        raise UsageError("verify-theorem1 needs an algebra of type Lei4(3,F) in the a1,a2,a3 basis")
    return lam


AUT_ACTIONS = ("enumerate", "verify-theorem1")


def cmd_aut(args) -> tuple[dict, int]:
    words = list(args.words)
    action = words.pop(0) if words and words[0] in AUT_ACTIONS else None
    flagged = [a for a, on in (("enumerate", args.enumerate), ("verify-theorem1", args.verify_theorem1)) if on]
    if action and flagged and flagged != [action]:
        raise UsageError("conflicting aut actions")
    action = action or (flagged[0] if len(flagged) == 1 else None)
    if action is None:
        raise UsageError("aut needs exactly one of: enumerate, verify-theorem1")
    if len(words) > 1:
        raise UsageError(f"unexpected arguments: {words[1:]}")
    path = words[0] if words else None

    if action == "verify-theorem1":
        if path is not None:
            A = _load(path, args.unchecked)
            F = A.field
            if not F.is_finite:
                raise InfiniteField("verification enumerates automorphisms; the field must be finite")
            lam = _lambda_of(A, args.lam)
        elif args.field is not None:
            F = FieldSpec.prime(args.field)
            lam = F.normalize(args.lam if args.lam is not None else 1)
        else:
            raise UsageError("verify-theorem1 needs an algebra file or --field p")
        report = verify_theorem1(F, lam, seed=args.seed, jobs=args.jobs)
        if not args.list_elements:
            report.pop("missing")
            report.pop("extra")
        return report, EXIT_OK

    if path is None:
        raise UsageError("aut enumerate needs an algebra file")
    A = _load(path, args.unchecked)
    G, stats = scan_automorphisms(A, prune=not args.no_prune, jobs=args.jobs)
    results = {
        "order": len(G),
        "candidates": stats.candidates,
        "pruned": stats.pruned,
        "free_columns": stats.free_columns,
        "forced_columns": stats.forced_columns,
    }
    if args.list_elements:
        results["elements"] = [f.to_json() for f in G]
    if args.timing:
        results["scan_seconds"] = round(stats.seconds, 6)
    return results, EXIT_OK


def cmd_form(args) -> tuple[dict, int]:
    A = _load(args.path, args.unchecked)
    gen = None
    if args.generator:
        gen = [s.strip() for s in args.generator.split(",")]
    phi = induced_form(A, gen)
    results = phi.to_json()
    if A.field.is_finite:
        Z = Subspace.span(A.field, A.dim, [phi.generator])
        G, _ = scan_automorphisms(A, jobs=args.jobs)
        blocks = quotient_blocks(G, Z)
        results["automorphism_order"] = len(G)
        results["induced_maps"] = len(blocks)
        results["induced_maps_preserving_form"] = sum(preserves_form(g, phi) for g in blocks)
        results["induced_maps_scaling_form"] = sum(similitude_factor(g, phi) is not None for g in blocks)
    return results, EXIT_OK


def cmd_samples(args) -> tuple[dict, int]:
    out = Path(args.directory)
    out.mkdir(parents=True, exist_ok=True)
    for name in SAMPLES:
        shutil.copyfile(sample_path(name), out / name)
    return {"directory": str(out), "files": list(SAMPLES)}, EXIT_OK


def _table(command: str, results: dict) -> str:
    lines = [f"leibniz-kit {command}"]
    for key, val in results.items():
        if isinstance(val, list) and val and isinstance(val[0], list):
            lines.append(f"  {key}:")
            for row in val:
                lines.append(f"    {json.dumps(row)}")
        elif isinstance(val, dict):
            lines.append(f"  {key}:")
            for k2, v2 in val.items():
                lines.append(f"    {k2}: {json.dumps(v2)}")
        else:
            lines.append(f"  {key}: {json.dumps(val)}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="leibniz-kit", description="Exact invariants and automorphism groups of Leibniz algebras.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "table"), default="json")
        p.add_argument("--output", "-o", help="write the report here instead of stdout")
        p.add_argument("--unchecked", action="store_true", help="skip the Leibniz identity check on load")
        p.add_argument("--timing", action="store_true", help="include wall-clock timing (breaks byte-identical reports)")
        p.add_argument("--jobs", type=int, default=1, help="worker processes for enumeration")

    p = sub.add_parser("check", help="verify the left Leibniz identity")
    p.add_argument("path")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("invariants", help="kernel, centers, central series, nilpotency class")
    p.add_argument("path")
    common(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("aut", help="enumerate Aut(L) or verify the Lei4 closed form")
    p.add_argument("words", nargs="*", metavar="[enumerate|verify-theorem1] [PATH]")
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--verify-theorem1", action="store_true")
    p.add_argument("--field", type=int, help="prime p, for verify-theorem1 without a file")
    p.add_argument("--lambda", dest="lam", help="lambda for verify-theorem1")
    p.add_argument("--list-elements", action="store_true")
    p.add_argument("--no-prune", action="store_true", help="scan all p^(n^2) matrices")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled pair checks")
    common(p)
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("form", help="bilinear form on L/Z(L) of an extraspecial algebra")
    p.add_argument("path")
    p.add_argument("--generator", help="comma-separated coordinates of the central generator")
    common(p)
    p.set_defaults(func=cmd_form)

    p = sub.add_parser("samples", help="copy the bundled sample algebra files")
    p.add_argument("directory", nargs="?", default=".")
    common(p)
    p.set_defaults(func=cmd_samples)
    return ap


def _echo(args) -> dict:
    # jobs is left out so reports are identical across worker counts
    skip = {"func", "format", "output", "timing", "jobs"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    t0 = time.perf_counter()
    error = None
    try:
        results, code = args.func(args)
    except NotLeibniz as e:
        results, code = {"violations": [v.to_json(e.field) for v in e.violations]}, EXIT_VIOLATION
        error = str(e)
    except InfiniteField as e:
        results, code, error = None, EXIT_INFINITE, str(e)
    except GuardExceeded as e:
        results, code, error = None, EXIT_GUARD, str(e)
    except NotExtraspecial as e:
        results, code, error = None, EXIT_NOT_EXTRASPECIAL, str(e)
    except (AlgebraFileError, UsageError, FileNotFoundError, ValueError) as e:
        results, code, error = None, EXIT_USAGE, str(e)

    report = {"command": args.command, "args": _echo(args), "version": tool_version(), "exit_code": code}
    if error is not None:
        report["error"] = error
    report["results"] = results
    if args.timing:
        report["timing"] = {"seconds": round(time.perf_counter() - t0, 6)}

    if args.format == "json":
        text = json.dumps(report, indent=2) + "\n"
    else:
        text = _table(args.command, results or {"error": error}) + "\n"
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if error is not None:
        print(f"leibniz-kit: {error}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
