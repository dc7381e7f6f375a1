"""Command-line surface: validate, canon, replay, ldi, bounds, distance, scan."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .bounds import compute_bounds
from .codefile import (
    CodeFileError,
    bounds_to_dict,
    canonical_to_dict,
    distance_to_dict,
    emit_report,
    ldi_to_dict,
    parse_code,
    parse_script,
    scan_to_dict,
    serialize_script,
)
from .distance import distance_search, enumeration_oracle, scan_primes
from .ldi import LVariant, ldi_transform, max_entry, working_ldi_tableau
from .linalg import CodeValidationError, apply_script, canonical_form
from .pauli import Tableau
from .primes import is_prime

_VARIANTS = {"full": LVariant.FULL, "plus": LVariant.PLUS, "minus": LVariant.MINUS}


def _format_tableau(t: Tableau) -> str:
    n = t.n
    width = max((len(str(v)) for row in t.rows for v in row), default=1)
    lines = []
    for row in t.rows:
        xs = " ".join(f"{v:>{width}}" for v in row[:n])
        zs = " ".join(f"{v:>{width}}" for v in row[n:])
        lines.append(f"[ {xs} | {zs} ]")
    return "\n".join(lines)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qldi",
        description=(
            "Local-dimension-invariant forms, distance cutoff bounds, and "
            "exact distance checks for qudit stabilizer codes."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check a code file")
    p.add_argument("file")

    p = sub.add_parser("canon", parents=[common], help="compute the canonical form")
    p.add_argument("file")
    p.add_argument("--script", metavar="OUT", help="write the op script to a file")

    p = sub.add_parser("replay", parents=[common], help="replay an op script on a code")
    p.add_argument("file")
    p.add_argument("script")

    p = sub.add_parser("ldi", parents=[common], help="compute an LDI form")
    p.add_argument("file")
    p.add_argument("--variant", choices=sorted(_VARIANTS), default="full")

    p = sub.add_parser("bounds", parents=[common], help="evaluate all cutoff bounds")
    p.add_argument("file")
    p.add_argument(
        "--strict-reading",
        action="store_true",
        help="use the alternate reading of the degenerate cutoff expression",
    )

    p = sub.add_parser("distance", parents=[common], help="verify distance at a prime")
    p.add_argument("file")
    p.add_argument("-p", "--prime", type=int, required=True)
    p.add_argument("-w", "--weight", type=int, default=None, help="max weight searched")
    p.add_argument("--classify", action="store_true", help="show witness details")
    p.add_argument("--oracle", action="store_true", help="use the brute-force oracle")

    p = sub.add_parser("scan", parents=[common], help="scan a prime range")
    p.add_argument("file")
    p.add_argument("--primes", required=True, metavar="LO..HI")
    p.add_argument("-w", "--weight", type=int, default=None)

    return parser


def _load(path: str):
    return parse_code(Path(path).read_text())


def _require_d(code) -> int:
    if code.d is None:
        raise CodeFileError("this command needs a declared distance d in the header")
    return code.d


def _cmd_validate(args) -> int:
    code = _load(args.file)
    if args.json:
        print(
            emit_report(
                {
                    "schema": 1,
                    "type": "validate",
                    "n": code.n,
                    "k": code.k,
                    "q": code.q,
                    "d": code.d,
                    "valid": True,
                }
            ),
            end="",
        )
    else:
        d = code.d if code.d is not None else "?"
        print(f"OK [[{code.n},{code.k},{d}]]_{code.q}: {code.n - code.k} generators")
    return 0


def _cmd_canon(args) -> int:
    code = _load(args.file)
    canon = canonical_form(code)
    if args.script:
        Path(args.script).write_text(serialize_script(canon.script))
    if args.json:
        print(emit_report(canonical_to_dict(canon)), end="")
    else:
        print(_format_tableau(canon.tableau))
        print(f"registers (canonical -> source): {[r + 1 for r in canon.register_map]}")
        if canon.hadamards:
            print(f"hadamard on canonical registers: {[r + 1 for r in canon.hadamards]}")
    return 0


def _cmd_replay(args) -> int:
    code = _load(args.file)
    script = parse_script(Path(args.script).read_text())
    result = apply_script(code.tableau, script)
    if args.json:
        print(
            emit_report(
                {
                    "schema": 1,
                    "type": "replay",
                    "n": result.n,
                    "q": result.modulus,
                    "tableau": [list(r) for r in result.rows],
                }
            ),
            end="",
        )
    else:
        print(_format_tableau(result))
    return 0


def _cmd_ldi(args) -> int:
    code = _load(args.file)
    form = ldi_transform(code, _VARIANTS[args.variant])
    if args.json:
        print(emit_report(ldi_to_dict(form)), end="")
    else:
        print(_format_tableau(form.tableau))
        print(f"variant={form.variant.value} B={form.B} source_q={form.source_q}")
    return 0


def _cmd_bounds(args) -> int:
    code = _load(args.file)
    d = _require_d(code)
    tableau = working_ldi_tableau(code)
    base = distance_search(tableau, code.q, min(d, code.n))
    report = compute_bounds(
        B=max_entry(tableau),
        q=code.q,
        n=code.n,
        k=code.k,
        d=d,
        degenerate=base.degenerate,
        alternate_reading=args.strict_reading,
    )
    if args.json:
        print(emit_report(bounds_to_dict(report)), end="")
    else:
        print(f"[[{code.n},{code.k},{d}]]_{code.q}  B={report.B}  reading={report.reading}")
        print(f"p* original    = {report.p_star_original}")
        print(f"p* alternative = {report.p_star_alternative}")
        print(f"p* effective   = {report.p_star_effective}")
        if report.p_d_star is not None:
            print(f"p_D* (degenerate) = {report.p_d_star}")
        if report.p_double_star is not None:
            print(f"p** = {report.p_double_star}")
        elif not report.hamming_applicable:
            print("p** not applicable (degenerate code)")
        print(f"first safe prime = {report.first_safe_prime}")
    return 0


def _cmd_distance(args) -> int:
    code = _load(args.file)
    if not is_prime(args.prime):
        raise CodeFileError(f"{args.prime} is not prime")
    w_max = args.weight if args.weight is not None else min(_require_d(code), code.n)
    tableau = working_ldi_tableau(code)
    search = enumeration_oracle if args.oracle else distance_search
    report = search(tableau, args.prime, w_max)
    if args.json:
        print(emit_report(distance_to_dict(report)), end="")
    else:
        print(
            f"p={report.prime}: distance {report.distance_label()}, "
            f"degenerate={report.degenerate}, "
            f"min stabilizer weight {report.min_stabilizer_weight_label()} "
            f"({report.elapsed_ms:.1f} ms)"
        )
        if args.classify and report.witness is not None:
            w = report.witness
            print(f"witness: {w.word} (weight {w.weight}, {w.classification.value})")
            print(f"  integer syndrome: {list(w.syndrome_int)}")
            print(f"  mod-{report.prime} syndrome: {list(w.syndrome_mod)}")
    return 0


def _cmd_scan(args) -> int:
    code = _load(args.file)
    d = _require_d(code)
    try:
        lo_text, hi_text = args.primes.split("..")
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise CodeFileError(f"bad prime range {args.primes!r}, expected LO..HI") from None
    primes = [p for p in range(max(lo, 2), hi + 1) if is_prime(p)]
    w_max = args.weight if args.weight is not None else min(d, code.n)
    reports = scan_primes(working_ldi_tableau(code), primes, w_max)
    if args.json:
        print(emit_report(scan_to_dict(reports, d)), end="")
    else:
        for r in reports:
            verdict = "preserving" if r.distance is None or r.distance >= d else "VIOLATION"
            print(
                f"p={r.prime}: distance {r.distance_label()}, "
                f"degenerate={r.degenerate} [{verdict}]"
            )
    return 0


_COMMANDS = {
    "validate": _cmd_validate,
    "canon": _cmd_canon,
    "replay": _cmd_replay,
    "ldi": _cmd_ldi,
    "bounds": _cmd_bounds,
    "distance": _cmd_distance,
    "scan": _cmd_scan,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (CodeFileError, CodeValidationError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
