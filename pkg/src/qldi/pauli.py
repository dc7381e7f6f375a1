"""Generalized Pauli words, their symplectic vector form, and pairwise products.

A Pauli word over ``n`` registers is stored as per-register ``(x, z)`` exponent
pairs; scalar phases are discarded everywhere.  Words and tableaus carry an
arithmetic context: ``modulus=q`` means exponents are residues in
``{0, ..., q-1}``, ``modulus=None`` means plain signed integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .primes import is_prime

__all__ = [
    "PauliWord",
    "Tableau",
    "GramMatrix",
    "phi_encode",
    "phi_decode",
    "symplectic_product",
    "weight",
    "gram",
]


def _check_modulus(modulus: int | None) -> None:
    if modulus is not None and not is_prime(modulus):
        raise ValueError(f"modulus must be a prime or None, got {modulus}")


@dataclass(frozen=True)
class PauliWord:
    """An n-register generalized Pauli stored as (x, z) exponent pairs."""

    sites: tuple[tuple[int, int], ...]
    modulus: int | None = None

    def __post_init__(self) -> None:
        _check_modulus(self.modulus)
        object.__setattr__(self, "sites", tuple((int(x), int(z)) for x, z in self.sites))
        if len(self.sites) < 1:
            raise ValueError("a Pauli word needs at least one register")
        if self.modulus is not None:
            q = self.modulus
            for x, z in self.sites:
                if not (0 <= x < q and 0 <= z < q):
                    raise ValueError(f"exponent ({x},{z}) outside residue range of mod {q}")

    @property
    def n(self) -> int:
        return len(self.sites)

    def __str__(self) -> str:
        if self.modulus == 2:
            letters = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}
            return "".join(letters[s] for s in self.sites)
        parts = []
        for x, z in self.sites:
            if (x, z) == (0, 0):
                parts.append("I")
                continue
            term = ""
            if x != 0:
                term += "X" if x == 1 else f"X^{x}"
            if z != 0:
                term += "Z" if z == 1 else f"Z^{z}"
            parts.append(term)
        return " ".join(parts)


@dataclass(frozen=True)
class Tableau:
    """An m x 2n integer matrix of generator rows in phi layout.

    Column ``j`` (0-based, ``j < n``) holds X exponents and column ``n + j``
    holds Z exponents of register ``j``.
    """

    rows: tuple[tuple[int, ...], ...]
    n: int
    modulus: int | None = None

    def __post_init__(self) -> None:
        _check_modulus(self.modulus)
        object.__setattr__(
            self, "rows", tuple(tuple(int(v) for v in row) for row in self.rows)
        )
        if self.n < 1:
            raise ValueError("tableau needs at least one register")
        for i, row in enumerate(self.rows):
            if len(row) != 2 * self.n:
                raise ValueError(f"row {i} has length {len(row)}, expected {2 * self.n}")
        if self.modulus is not None:
            q = self.modulus
            for i, row in enumerate(self.rows):
                if any(not (0 <= v < q) for v in row):
                    raise ValueError(f"row {i} has entries outside residues mod {q}")

    @property
    def m(self) -> int:
        return len(self.rows)

    @classmethod
    def from_words(cls, words: Sequence[PauliWord], modulus: int | None) -> "Tableau":
        if not words:
            raise ValueError("need at least one word")
        n = words[0].n
        return cls(tuple(phi_encode(w) for w in words), n, modulus)

    def words(self) -> tuple[PauliWord, ...]:
        """Decode every row; requires a modular context."""
        if self.modulus is None:
            raise ValueError("cannot decode rows without a modulus")
        return tuple(phi_decode(row, self.modulus) for row in self.rows)

    def lift(self) -> "Tableau":
        """Reinterpret stored residues verbatim as signed integers."""
        return Tableau(self.rows, self.n, None)

    def reduce_mod(self, p: int) -> "Tableau":
        return Tableau(
            tuple(tuple(v % p for v in row) for row in self.rows), self.n, p
        )


@dataclass(frozen=True)
class GramMatrix:
    """Antisymmetric matrix of pairwise symplectic products over the integers."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        m = len(self.entries)
        for i in range(m):
            if len(self.entries[i]) != m:
                raise ValueError("Gram matrix must be square")
            for j in range(m):
                if self.entries[i][j] != -self.entries[j][i]:
                    raise ValueError(f"Gram matrix not antisymmetric at ({i},{j})")

    @property
    def m(self) -> int:
        return len(self.entries)

    def max_abs(self) -> int:
        return max((abs(v) for row in self.entries for v in row), default=0)


def phi_encode(word: PauliWord) -> tuple[int, ...]:
    """Map a Pauli word to its 2n-vector: X exponents first, then Z exponents."""
    return tuple(x for x, _ in word.sites) + tuple(z for _, z in word.sites)


def phi_decode(v: Sequence[int], q: int) -> PauliWord:
    """Invert the phi map modulo ``q`` (global phase is undetermined)."""
    v = tuple(int(c) for c in v)
    if len(v) % 2 != 0:
        raise ValueError(f"phi vector must have even length, got {len(v)}")
    n = len(v) // 2
    sites = tuple((v[i] % q, v[n + i] % q) for i in range(n))
    return PauliWord(sites, q)


def symplectic_product(u: Sequence[int], v: Sequence[int], modulus: int | None = None) -> int:
    """Symplectic product sum_k [u_x(k) * v_z(k) - u_z(k) * v_x(k)].

    Zero (in the declared context) exactly when the two operators commute.
    """
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    if len(u) % 2 != 0:
        raise ValueError("phi vectors must have even length")
    n = len(u) // 2
    total = sum(u[k] * v[n + k] - u[n + k] * v[k] for k in range(n))
    return total % modulus if modulus is not None else total


def weight(word: PauliWord) -> int:
    """Number of registers on which the word acts nontrivially."""
    return sum(1 for s in word.sites if s != (0, 0))


def gram(t: Tableau) -> GramMatrix:
    """All pairwise symplectic products over the integers.

    Modular entries are lifted verbatim as their stored residues before
    multiplying, so the result is exact regardless of the tableau's context.
    """
    rows = t.rows
    m = len(rows)
    entries = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            p = symplectic_product(rows[i], rows[j], None)
            entries[i][j] = p
            entries[j][i] = -p
    return GramMatrix(tuple(tuple(r) for r in entries))
