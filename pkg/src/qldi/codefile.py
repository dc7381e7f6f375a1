"""Text formats for codes and op scripts, and JSON report emission.

Code files are line oriented: a header ``n=6 k=1 q=2 d=3`` (``d`` optional)
followed by one generator per line, either a Pauli letter string (q=2 only)
or an explicit symplectic row ``x: a1 ... an ; z: b1 ... bn``.  ``#`` starts
a comment.  Scripts are one operation per line with 1-based indices.
"""

from __future__ import annotations

import json
from decimal import Decimal
from typing import Any, Sequence

from .bounds import BoundsReport
from .distance import Classification, DistanceReport, ErrorWitness
from .ldi import LdiForm, LVariant
from .linalg import (
    CanonicalForm,
    HadamardSwap,
    Op,
    OpScript,
    RegisterSwap,
    RowAdd,
    RowScale,
    RowSwap,
    StabilizerCode,
)
from .pauli import Tableau, phi_decode, phi_encode

SCHEMA_VERSION = 1

_LETTER_XZ = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}


class CodeFileError(ValueError):
    """Malformed code or script text."""


# --- code files ---

def parse_code(text: str) -> StabilizerCode:
    """Parse and validate a code file; errors name the offending line or pair."""
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines:
        raise CodeFileError("empty code file")
    header: dict[str, int] = {}
    for tok in lines[0].split():
        if "=" not in tok:
            raise CodeFileError(f"bad header token {tok!r}")
        key, _, val = tok.partition("=")
        try:
            header[key] = int(val)
        except ValueError:
            raise CodeFileError(f"bad header value {tok!r}") from None
    for key in ("n", "k", "q"):
        if key not in header:
            raise CodeFileError(f"header is missing {key}")
    n, k, q = header["n"], header["k"], header["q"]
    d = header.get("d")

    gen_lines = lines[1:]
    if len(gen_lines) != n - k:
        raise CodeFileError(
            f"expected n-k={n - k} generator lines, found {len(gen_lines)}"
        )
    symplectic = [("x:" in ln) for ln in gen_lines]
    if any(symplectic) and not all(symplectic):
        raise CodeFileError("mixed letter and symplectic generator lines")

    rows = []
    for idx, ln in enumerate(gen_lines):
        if symplectic and symplectic[0]:
            rows.append(_parse_symplectic_line(ln, n, idx))
        else:
            rows.append(_parse_letter_line(ln, n, q, idx))
    tableau = Tableau(tuple(rows), n, None).reduce_mod(q) if rows else Tableau((), n, q)
    return StabilizerCode(tableau=tableau, n=n, k=k, q=q, d=d)


def _parse_letter_line(ln: str, n: int, q: int, idx: int) -> tuple[int, ...]:
    if q != 2:
        raise CodeFileError(f"generator {idx + 1}: letter strings require q=2")
    if len(ln) != n:
        raise CodeFileError(
            f"generator {idx + 1} has length {len(ln)}, expected {n}"
        )
    xs, zs = [], []
    for ch in ln:
        if ch not in _LETTER_XZ:
            raise CodeFileError(f"generator {idx + 1}: unknown letter {ch!r}")
        x, z = _LETTER_XZ[ch]
        xs.append(x)
        zs.append(z)
    return tuple(xs + zs)


def _parse_symplectic_line(ln: str, n: int, idx: int) -> tuple[int, ...]:
    try:
        xpart, zpart = ln.split(";")
        xs = [int(v) for v in xpart.split(":", 1)[1].split()]
        zs = [int(v) for v in zpart.split(":", 1)[1].split()]
    except (ValueError, IndexError):
        raise CodeFileError(f"generator {idx + 1}: malformed symplectic row") from None
    if len(xs) != n or len(zs) != n:
        raise CodeFileError(
            f"generator {idx + 1} has {len(xs)}+{len(zs)} entries, expected {n}+{n}"
        )
    return tuple(xs + zs)


def serialize_code(code: StabilizerCode, fmt: str = "symplectic") -> str:
    """Render a code back to file text in either generator format."""
    header = f"n={code.n} k={code.k} q={code.q}"
    if code.d is not None:
        header += f" d={code.d}"
    lines = [header]
    for row in code.tableau.rows:
        if fmt == "letters":
            if code.q != 2:
                raise CodeFileError("letter output requires q=2")
            lines.append(str(phi_decode(row, 2)))
        elif fmt == "symplectic":
            xs = " ".join(str(v) for v in row[: code.n])
            zs = " ".join(str(v) for v in row[code.n :])
            lines.append(f"x: {xs} ; z: {zs}")
        else:
            raise CodeFileError(f"unknown format {fmt!r}")
    return "\n".join(lines) + "\n"


# --- op scripts ---

def parse_script(text: str) -> OpScript:
    """Parse the one-op-per-line script grammar (1-based indices)."""
    ops: list[Op] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        ln = raw.strip()
        if not ln or ln.startswith("#"):
            continue
        fields = ln.split()
        name, args = fields[0].lower(), fields[1:]
        try:
            if name == "rowswap":
                (i, j) = map(int, args)
                ops.append(RowSwap(i - 1, j - 1))
            elif name == "rowadd":
                (dst, src, coeff) = map(int, args)
                ops.append(RowAdd(dst - 1, src - 1, coeff))
            elif name == "rowscale":
                (i, coeff) = map(int, args)
                ops.append(RowScale(i - 1, coeff))
            elif name == "regswap":
                (i, j) = map(int, args)
                ops.append(RegisterSwap(i - 1, j - 1))
            elif name == "hadamard":
                (i,) = map(int, args)
                ops.append(HadamardSwap(i - 1))
            else:
                raise CodeFileError(f"line {lineno}: unknown operation {name!r}")
        except (TypeError, ValueError):
            raise CodeFileError(f"line {lineno}: bad arguments for {name!r}") from None
    return tuple(ops)


def serialize_script(script: Sequence[Op]) -> str:
    lines = []
    for op in script:
        if isinstance(op, RowSwap):
            lines.append(f"rowswap {op.i + 1} {op.j + 1}")
        elif isinstance(op, RowAdd):
            lines.append(f"rowadd {op.dst + 1} {op.src + 1} {op.scalar}")
        elif isinstance(op, RowScale):
            lines.append(f"rowscale {op.i + 1} {op.scalar}")
        elif isinstance(op, RegisterSwap):
            lines.append(f"regswap {op.i + 1} {op.j + 1}")
        elif isinstance(op, HadamardSwap):
            lines.append(f"hadamard {op.i + 1}")
        else:
            raise CodeFileError(f"cannot serialize {op!r}")
    return "\n".join(lines) + ("\n" if lines else "")


# --- JSON reports ---

def _tableau_rows(t: Tableau) -> list[list[int]]:
    return [list(row) for row in t.rows]


def canonical_to_dict(canon: CanonicalForm) -> dict[str, Any]:
    return {
        "schema": SCHEMA_VERSION,
        "type": "canonical",
        "n": canon.tableau.n,
        "q": canon.tableau.modulus,
        "tableau": _tableau_rows(canon.tableau),
        "register_map": [r + 1 for r in canon.register_map],
        "hadamards": [r + 1 for r in canon.hadamards],
        "script": serialize_script(canon.script).splitlines(),
    }


def ldi_to_dict(form: LdiForm) -> dict[str, Any]:
    return {
        "schema": SCHEMA_VERSION,
        "type": "ldi",
        "variant": form.variant.value,
        "source_q": form.source_q,
        "B": str(form.B),
        "tableau": _tableau_rows(form.tableau),
        "register_map": [r + 1 for r in form.canonical.register_map],
    }


def witness_to_dict(w: ErrorWitness) -> dict[str, Any]:
    return {
        "word": str(w.word),
        "vector": [int(v) for v in phi_encode(w.word)],
        "weight": w.weight,
        "syndrome_int": list(w.syndrome_int),
        "syndrome_mod": list(w.syndrome_mod),
        "classification": w.classification.value,
        "in_group": w.in_group,
    }


def witness_from_dict(data: dict[str, Any], p: int) -> ErrorWitness:
    return ErrorWitness(
        word=phi_decode(data["vector"], p),
        weight=int(data["weight"]),
        syndrome_int=tuple(int(v) for v in data["syndrome_int"]),
        syndrome_mod=tuple(int(v) for v in data["syndrome_mod"]),
        classification=Classification(data["classification"]),
        in_group=bool(data["in_group"]),
    )


def distance_to_dict(report: DistanceReport) -> dict[str, Any]:
    # elapsed_ms is deliberately dropped: JSON output must be run-to-run stable.
    return {
        "schema": SCHEMA_VERSION,
        "type": "distance",
        "prime": report.prime,
        "w_max": report.w_max,
        "distance": report.distance if report.distance is not None else report.distance_label(),
        "min_stabilizer_weight": (
            report.min_stabilizer_weight
            if report.min_stabilizer_weight is not None
            else report.min_stabilizer_weight_label()
        ),
        "degenerate": report.degenerate,
        "witness": witness_to_dict(report.witness) if report.witness else None,
    }


def distance_from_dict(data: dict[str, Any]) -> DistanceReport:
    p = int(data["prime"])

    def undo(v: Any) -> int | None:
        return None if isinstance(v, str) else int(v)

    return DistanceReport(
        prime=p,
        w_max=int(data["w_max"]),
        distance=undo(data["distance"]),
        witness=witness_from_dict(data["witness"], p) if data["witness"] else None,
        degenerate=bool(data["degenerate"]),
        min_stabilizer_weight=undo(data["min_stabilizer_weight"]),
        elapsed_ms=0.0,
    )


def bounds_to_dict(report: BoundsReport) -> dict[str, Any]:
    return {
        "schema": SCHEMA_VERSION,
        "type": "bounds",
        "reading": report.reading,
        "n": report.n,
        "k": report.k,
        "q": report.q,
        "d": report.d,
        "B": str(report.B),
        "degenerate": report.degenerate,
        "p_star_original": str(report.p_star_original),
        "p_star_alternative": str(report.p_star_alternative),
        "p_star_effective": str(report.p_star_effective),
        "p_d_star": str(report.p_d_star) if report.p_d_star is not None else None,
        "p_double_star": (
            str(report.p_double_star) if report.p_double_star is not None else None
        ),
        "hamming_applicable": report.hamming_applicable,
        "first_safe_prime": str(report.first_safe_prime),
    }


def bounds_from_dict(data: dict[str, Any]) -> BoundsReport:
    return BoundsReport(
        B=int(data["B"]),
        q=int(data["q"]),
        n=int(data["n"]),
        k=int(data["k"]),
        d=int(data["d"]),
        degenerate=bool(data["degenerate"]),
        p_star_original=int(data["p_star_original"]),
        p_star_alternative=int(data["p_star_alternative"]),
        p_star_effective=int(data["p_star_effective"]),
        p_d_star=int(data["p_d_star"]) if data["p_d_star"] is not None else None,
        p_double_star=(
            Decimal(data["p_double_star"]) if data["p_double_star"] is not None else None
        ),
        hamming_applicable=bool(data["hamming_applicable"]),
        first_safe_prime=int(data["first_safe_prime"]),
        reading=data["reading"],
    )


def scan_to_dict(reports: Sequence[DistanceReport], declared_d: int) -> dict[str, Any]:
    return {
        "schema": SCHEMA_VERSION,
        "type": "scan",
        "declared_d": declared_d,
        "reports": [
            {
                **distance_to_dict(r),
                "preserving": r.distance is None or r.distance >= declared_d,
            }
            for r in reports
        ],
    }


def emit_report(data: dict[str, Any]) -> str:
    """Stable, byte-identical JSON rendering of a report dictionary."""
    return json.dumps(data, indent=2) + "\n"


def parse_report(text: str) -> BoundsReport | DistanceReport:
    data = json.loads(text)
    kind = data.get("type")
    if kind == "bounds":
        return bounds_from_dict(data)
    if kind == "distance":
        return distance_from_dict(data)
    raise CodeFileError(f"cannot parse report of type {kind!r}")
