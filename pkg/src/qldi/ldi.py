"""Local-dimension-invariant forms: the L matrix, the transform, and B.

An LDI tableau has every pairwise symplectic product equal to zero over the
integers, so its rows are valid commuting generators at every prime local
dimension.  The transform adds a correction matrix L to the Z1 block of the
canonical form; three variants of L are supported.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .linalg import CanonicalForm, StabilizerCode, canonical_form
from .pauli import GramMatrix, Tableau, gram

__all__ = [
    "LVariant",
    "LdiForm",
    "build_L",
    "ldi_transform",
    "is_ldi",
    "max_entry",
    "working_ldi_tableau",
]


class LVariant(enum.Enum):
    """Which pairwise products are folded into the correction matrix L."""

    FULL = "full"      # every product, lower triangle
    PLUS = "plus"      # only positive products, wherever they sit
    MINUS = "minus"    # only negative products, wherever they sit


@dataclass(frozen=True)
class LdiForm:
    """Integer tableau with all pairwise products zero over Z, plus provenance."""

    tableau: Tableau
    variant: LVariant
    B: int
    source_q: int
    canonical: CanonicalForm

    def __post_init__(self) -> None:
        if self.tableau.modulus is not None:
            raise ValueError("an LDI tableau lives in the integer context")
        if not is_ldi(self.tableau):
            raise ValueError("tableau rows are not pairwise orthogonal over Z")
        if self.B != max_entry(self.tableau):
            raise ValueError("recorded B does not match the tableau")
        reduced = self.tableau.reduce_mod(self.source_q)
        if reduced.rows != self.canonical.tableau.rows:
            raise ValueError("tableau mod q does not match its canonical form")


def build_L(g: GramMatrix, variant: LVariant) -> tuple[tuple[int, ...], ...]:
    """Correction matrix from a Gram matrix of pairwise products.

    FULL keeps every product in the strict lower triangle; PLUS keeps the
    positive products and MINUS the negative ones, in whichever triangle
    they appear.
    """
    m = g.m
    L = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(m):
            v = g.entries[i][j]
            if v == 0:
                continue
            if variant is LVariant.FULL:
                if i > j:
                    L[i][j] = v
            elif variant is LVariant.PLUS:
                if v > 0:
                    L[i][j] = v
            else:
                if v < 0:
                    L[i][j] = v
    return tuple(tuple(r) for r in L)


def is_ldi(t: Tableau) -> bool:
    """True iff every pairwise symplectic product vanishes over the integers."""
    return gram(t.lift() if t.modulus is not None else t).max_abs() == 0


def max_entry(t: Tableau) -> int:
    """B: the maximum absolute entry of a tableau."""
    return max((abs(v) for row in t.rows for v in row), default=0)


def _add_L(rows: list[list[int]], L, n: int) -> None:
    # Z1 block = Z columns of the pivot registers, i.e. columns n .. n+m-1.
    for i in range(len(rows)):
        for j in range(len(rows)):
            rows[i][n + j] += L[i][j]


def ldi_transform(code: StabilizerCode, variant: LVariant = LVariant.FULL) -> LdiForm:
    """Turn a validated code into an LDI form via its canonical form.

    The canonical tableau is lifted to the integers, the variant's L matrix is
    added to the Z1 block, and any residual nonzero products (possible only
    for the PLUS/MINUS heuristics) are cancelled by the full rule.  The result
    reduces mod q back to the canonical tableau entrywise.
    """
    canon = canonical_form(code)
    n, m = code.n, canon.tableau.m
    rows = [list(r) for r in canon.tableau.rows]
    g = gram(Tableau(tuple(tuple(r) for r in rows), n, None))
    _add_L(rows, build_L(g, variant), n)

    # Residual cleanup: adding g_ij at Z1[i][j] shifts product (i, j) by -g_ij
    # and touches no other pair, so one pass suffices.
    residual = gram(Tableau(tuple(tuple(r) for r in rows), n, None))
    for i in range(m):
        for j in range(i):
            if residual.entries[i][j] != 0:
                rows[i][n + j] += residual.entries[i][j]

    tab = Tableau(tuple(tuple(r) for r in rows), n, None)
    return LdiForm(tab, variant, max_entry(tab), code.q, canon)


def working_ldi_tableau(code: StabilizerCode, variant: LVariant = LVariant.FULL) -> Tableau:
    """Integer LDI tableau to analyze a code at other local dimensions.

    A code whose generators are already pairwise orthogonal over Z (the five
    qubit code, for instance) is used verbatim: canonicalizing it first would
    generally introduce nonzero integer products and a worse B.  Anything
    else goes through ``ldi_transform``.
    """
    lifted = code.tableau.lift()
    if is_ldi(lifted):
        return lifted
    return ldi_transform(code, variant).tableau
