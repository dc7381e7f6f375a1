"""Exact linear algebra over Z_p, the allowed code operations, and canonical form.

Everything here is pure Python over plain integer lists: row reduction records
an operation script so any result can be replayed and audited.  The compiled
kernels in ``qldi._kernels`` exist only for the distance search hot path; this
module stays independent of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence, Union

from .pauli import Tableau, symplectic_product
from .primes import is_prime

__all__ = [
    "RowSwap",
    "RowAdd",
    "RowScale",
    "RegisterSwap",
    "HadamardSwap",
    "Op",
    "OpScript",
    "StabilizerCode",
    "CanonicalForm",
    "CodeValidationError",
    "apply_script",
    "rref_mod",
    "kernel_mod",
    "in_rowspace",
    "canonical_form",
]


class CodeValidationError(ValueError):
    """A generator set fails the stabilizer-code contract."""


# --- allowed operations (indices are 0-based; the textual form is 1-based) ---

@dataclass(frozen=True)
class RowSwap:
    i: int
    j: int


@dataclass(frozen=True)
class RowAdd:
    """dst <- dst + scalar * src."""

    dst: int
    src: int
    scalar: int


@dataclass(frozen=True)
class RowScale:
    """Scale a row by a unit of Z_q."""

    i: int
    scalar: int


@dataclass(frozen=True)
class RegisterSwap:
    """Swap column pairs (i, i+n) <-> (j, j+n): relabel two registers."""

    i: int
    j: int


@dataclass(frozen=True)
class HadamardSwap:
    """Swap X and Z roles on one register: new x = -old z, new z = old x."""

    i: int


Op = Union[RowSwap, RowAdd, RowScale, RegisterSwap, HadamardSwap]
OpScript = tuple[Op, ...]


def apply_script(t: Tableau, script: Sequence[Op]) -> Tableau:
    """Replay an operation script on a tableau, preserving its context.

    In a modular context entries are re-reduced after every operation; in the
    integer context the Hadamard negation is kept signed.
    """
    n, q = t.n, t.modulus
    rows = [list(r) for r in t.rows]
    m = len(rows)

    def check_row(i: int) -> None:
        if not 0 <= i < m:
            raise IndexError(f"row index {i} out of range for {m} rows")

    def check_reg(i: int) -> None:
        if not 0 <= i < n:
            raise IndexError(f"register index {i} out of range for {n} registers")

    for op in script:
        if isinstance(op, RowSwap):
            check_row(op.i), check_row(op.j)
            rows[op.i], rows[op.j] = rows[op.j], rows[op.i]
        elif isinstance(op, RowAdd):
            check_row(op.dst), check_row(op.src)
            src = rows[op.src]
            dst = rows[op.dst]
            for c in range(2 * n):
                dst[c] += op.scalar * src[c]
        elif isinstance(op, RowScale):
            check_row(op.i)
            if q is not None and op.scalar % q == 0:
                raise ValueError(f"RowScale by non-unit {op.scalar} mod {q}")
            rows[op.i] = [op.scalar * v for v in rows[op.i]]
        elif isinstance(op, RegisterSwap):
            check_reg(op.i), check_reg(op.j)
            for r in rows:
                r[op.i], r[op.j] = r[op.j], r[op.i]
                r[n + op.i], r[n + op.j] = r[n + op.j], r[n + op.i]
        elif isinstance(op, HadamardSwap):
            check_reg(op.i)
            for r in rows:
                r[op.i], r[n + op.i] = -r[n + op.i], r[op.i]
        else:
            raise TypeError(f"unknown operation {op!r}")
        if q is not None:
            for r in rows:
                for c in range(2 * n):
                    r[c] %= q
    return Tableau(tuple(tuple(r) for r in rows), n, q)


# --- row reduction over Z_p ---

def _rref_rows(rows: list[list[int]], p: int) -> tuple[int, list[int], list[Op]]:
    """In-place reduced row echelon form mod p; returns (rank, pivots, script)."""
    m = len(rows)
    cols = len(rows[0]) if m else 0
    script: list[Op] = []
    r = 0
    pivots: list[int] = []
    for c in range(cols):
        if r == m:
            break
        piv = next((i for i in range(r, m) if rows[i][c] % p != 0), None)
        if piv is None:
            continue
        if piv != r:
            rows[piv], rows[r] = rows[r], rows[piv]
            script.append(RowSwap(r, piv))
        inv = pow(rows[r][c] % p, p - 2, p)
        if inv != 1:
            rows[r] = [(inv * v) % p for v in rows[r]]
            script.append(RowScale(r, inv))
        for i in range(m):
            if i != r and rows[i][c] % p != 0:
                f = (-rows[i][c]) % p
                rows[i] = [(rows[i][k] + f * rows[r][k]) % p for k in range(cols)]
                script.append(RowAdd(i, r, f))
        pivots.append(c)
        r += 1
    return r, pivots, script


def rref_mod(t: Tableau, p: int) -> tuple[Tableau, int, OpScript]:
    """Reduced row echelon form of a tableau over Z_p with its row-op script."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    rows = [[v % p for v in row] for row in t.rows]
    rank, _, script = _rref_rows(rows, p)
    return Tableau(tuple(tuple(r) for r in rows), t.n, p), rank, tuple(script)


def kernel_mod(matrix: Sequence[Sequence[int]], p: int) -> list[tuple[int, ...]]:
    """Basis of the right null space of ``matrix`` over Z_p.

    The basis comes from the standard free-variable parametrization of the
    reduced echelon form, so its order is deterministic.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    rows = [[v % p for v in row] for row in matrix]
    if not rows:
        return []
    cols = len(rows[0])
    rank, pivots, _ = _rref_rows(rows, p)
    pivot_set = set(pivots)
    basis = []
    for free in range(cols):
        if free in pivot_set:
            continue
        vec = [0] * cols
        vec[free] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = (-rows[r][free]) % p
        basis.append(tuple(vec))
    return basis


def in_rowspace(
    v: Sequence[int], t: Tableau, p: int
) -> tuple[bool, tuple[int, ...] | None]:
    """Is ``v`` a Z_p-combination of the tableau rows?

    Returns (True, coefficients) with ``sum c_i * row_i = v (mod p)`` or
    (False, None).  Solved by reducing the transposed system with ``v`` as an
    augmented column.
    """
    if len(v) != 2 * t.n:
        raise ValueError("vector length does not match tableau width")
    m = t.m
    aug = [[t.rows[i][c] % p for i in range(m)] + [v[c] % p] for c in range(2 * t.n)]
    rank, pivots, _ = _rref_rows(aug, p)
    if m in pivots:
        return False, None
    coeffs = [0] * m
    for r, pc in enumerate(pivots):
        coeffs[pc] = aug[r][m]
    return True, tuple(coeffs)


# --- stabilizer codes and canonical form ---

@dataclass(frozen=True)
class StabilizerCode:
    """Validated generator tableau with declared parameters [[n, k, d]]_q."""

    tableau: Tableau
    n: int
    k: int
    q: int
    d: int | None = None

    def __post_init__(self) -> None:
        if not is_prime(self.q):
            raise CodeValidationError(f"local dimension q={self.q} is not prime")
        t = self.tableau
        if t.modulus != self.q:
            object.__setattr__(self, "tableau", t.reduce_mod(self.q))
            t = self.tableau
        if t.n != self.n:
            raise CodeValidationError(f"tableau has {t.n} registers, declared n={self.n}")
        if t.m != self.n - self.k:
            raise CodeValidationError(
                f"expected n-k={self.n - self.k} generators, got {t.m}"
            )
        for i in range(t.m):
            for j in range(i + 1, t.m):
                prod = symplectic_product(t.rows[i], t.rows[j], self.q)
                if prod != 0:
                    raise CodeValidationError(
                        f"generators {i + 1} and {j + 1} do not commute: "
                        f"symplectic product {prod} mod {self.q}"
                    )
        rows = [[v % self.q for v in row] for row in t.rows]
        rank, _, _ = _rref_rows(rows, self.q)
        if rank != t.m:
            bad = next(i for i, row in enumerate(rows) if all(v == 0 for v in row))
            raise CodeValidationError(
                f"generators are dependent mod {self.q} (row {bad + 1} is redundant)"
            )


@dataclass(frozen=True)
class CanonicalForm:
    """Tableau in [I X2 | Z1 Z2] block layout plus how it was reached.

    ``register_map[c]`` names the source register now sitting at canonical
    position ``c``; ``hadamards`` lists canonical positions whose X and Z
    roles were swapped.
    """

    tableau: Tableau
    script: OpScript
    register_map: tuple[int, ...]
    hadamards: tuple[int, ...]


def canonical_form(code: StabilizerCode) -> CanonicalForm:
    """Deterministic canonical form [I_{n-k} X2 | Z1 Z2] of a validated code.

    Pivot rule: for each pivot position, scan registers left to right; use the
    first whose X column has a nonzero entry among unused rows, falling back
    to its Z column via a Hadamard swap.  Pivot rows are chosen by smallest
    index and scaled to 1.
    """
    q = code.q
    n = code.n
    m = code.tableau.m
    rows = [list(r) for r in code.tableau.rows]
    script: list[Op] = []
    register_map = list(range(n))
    hadamards: list[int] = []

    def emit(op: Op) -> None:
        script.append(op)

    for r in range(m):
        found = None
        for c in range(r, n):
            if any(rows[i][c] % q != 0 for i in range(r, m)):
                found = (c, False)
                break
            if any(rows[i][n + c] % q != 0 for i in range(r, m)):
                found = (c, True)
                break
        if found is None:
            raise CodeValidationError(
                f"cannot place pivot {r + 1}: remaining generators are dependent"
            )
        c, use_z = found
        if c != r:
            emit(RegisterSwap(r, c))
            for row in rows:
                row[r], row[c] = row[c], row[r]
                row[n + r], row[n + c] = row[n + c], row[n + r]
            register_map[r], register_map[c] = register_map[c], register_map[r]
        if use_z:
            emit(HadamardSwap(r))
            for row in rows:
                row[r], row[n + r] = (-row[n + r]) % q, row[r]
            hadamards.append(r)
        piv = next(i for i in range(r, m) if rows[i][r] % q != 0)
        if piv != r:
            emit(RowSwap(r, piv))
            rows[piv], rows[r] = rows[r], rows[piv]
        inv = pow(rows[r][r] % q, q - 2, q)
        if inv != 1:
            emit(RowScale(r, inv))
            rows[r] = [(inv * v) % q for v in rows[r]]
        for i in range(m):
            if i != r and rows[i][r] % q != 0:
                f = (-rows[i][r]) % q
                emit(RowAdd(i, r, f))
                rows[i] = [(rows[i][k] + f * rows[r][k]) % q for k in range(2 * n)]

    tab = Tableau(tuple(tuple(v % q for v in row) for row in rows), n, q)
    return CanonicalForm(tab, tuple(script), tuple(register_map), tuple(hadamards))
