"""Distance verification over a chosen prime and error classification.

The search is rank-based: for each candidate support it compares the dimension
of the commuting errors living there against the dimension of stabilizer-group
elements living there, so it never enumerates values of Z_p and stays fast at
primes like 4099.  A direct enumeration oracle exists solely to validate it.
"""

from __future__ import annotations

import enum
import itertools
import time
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .ldi import LdiForm
from .linalg import in_rowspace
from .pauli import PauliWord, Tableau, phi_decode, symplectic_product
from .primes import is_prime

__all__ = [
    "Classification",
    "ErrorWitness",
    "DistanceReport",
    "syndrome",
    "classify",
    "support_logical_dims",
    "distance_search",
    "scan_primes",
    "enumeration_oracle",
]


class Classification(enum.Enum):
    UNAVOIDABLE = "unavoidable"
    ARTIFACT = "artifact"


@dataclass(frozen=True)
class ErrorWitness:
    """An undetectable non-group error found at some prime."""

    word: PauliWord
    weight: int
    syndrome_int: tuple[int, ...]
    syndrome_mod: tuple[int, ...]
    classification: Classification
    in_group: bool = False


@dataclass(frozen=True)
class DistanceReport:
    """Outcome of one distance search; ``distance=None`` means "> w_max"."""

    prime: int
    w_max: int
    distance: int | None
    witness: ErrorWitness | None
    degenerate: bool
    min_stabilizer_weight: int | None
    elapsed_ms: float

    def distance_label(self) -> str:
        return str(self.distance) if self.distance is not None else f">{self.w_max}"

    def min_stabilizer_weight_label(self) -> str:
        msw = self.min_stabilizer_weight
        return str(msw) if msw is not None else f">{self.w_max}"


def _integer_rows(source: LdiForm | Tableau) -> Tableau:
    t = source.tableau if isinstance(source, LdiForm) else source
    return t.lift() if t.modulus is not None else t


def syndrome(
    t: Tableau, e: Sequence[int], p: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Symplectic product of each tableau row against ``e``, over Z and mod p."""
    if len(e) != 2 * t.n:
        raise ValueError("error vector length does not match tableau width")
    ints = tuple(symplectic_product(row, e, None) for row in t.rows)
    return ints, tuple(v % p for v in ints)


def classify(syndrome_int: Sequence[int], p: int) -> Classification:
    """Unavoidable if the integer syndrome is exactly zero, else artifact.

    May only be called on an undetectable error (every component a multiple
    of p).
    """
    if any(v % p != 0 for v in syndrome_int):
        raise ValueError("classify called on a detectable error")
    if all(v == 0 for v in syndrome_int):
        return Classification.UNAVOIDABLE
    return Classification.ARTIFACT


class _SupportAnalyzer:
    """Shared rank machinery for one (tableau, prime) pair."""

    def __init__(self, tableau: Tableau, p: int):
        self.n = tableau.n
        self.m = tableau.m
        self.p = p
        self.int_rows = np.array(tableau.rows, dtype=np.int64).reshape(self.m, 2 * self.n)
        self.mod_rows = self.int_rows % p
        self.x = self.mod_rows[:, : self.n]
        self.z = self.mod_rows[:, self.n :]
        # row_i (.) e  ==  dot(h_i, e)  with h_i = (-z_i | x_i)
        self.h = np.concatenate([(-self.z) % p, self.x], axis=1)
        self.full_coeff_nullity = self.m - _kernels.rank_mod(self.mod_rows, p)

    def commutant_matrix(self, T: Sequence[int]) -> np.ndarray:
        """(n-k) x 2|T| system whose null space is the commuting errors on T.

        Column ``a`` weights e_x at register T[a], column ``|T|+a`` weights
        e_z there.
        """
        T = list(T)
        return np.concatenate([(-self.z[:, T]) % self.p, self.x[:, T]], axis=1)

    def outside_matrix(self, T: Sequence[int]) -> np.ndarray:
        keep = [c for c in range(self.n) if c not in set(T)]
        return np.concatenate([self.mod_rows[:, keep], self.mod_rows[:, [self.n + c for c in keep]]], axis=1)

    def dims(self, T: Sequence[int]) -> tuple[int, int]:
        """(kernel_dim, group_dim) for one support."""
        w = len(T)
        kernel_dim = 2 * w - _kernels.rank_mod(self.commutant_matrix(T), self.p)
        group_dim = (
            self.m - _kernels.rank_mod(self.outside_matrix(T), self.p)
        ) - self.full_coeff_nullity
        return kernel_dim, group_dim

    def group_vectors_on(self, T: Sequence[int]) -> np.ndarray:
        """Restrictions to T of all group elements supported within T."""
        # Coefficient vectors annihilating the outside columns: the left null
        # space of the restriction, i.e. the null space of its transpose.
        coeffs = _kernels.nullspace_mod(self.outside_matrix(T).T, self.p)
        if coeffs.shape[0] == 0:
            return np.zeros((0, 2 * len(T)), dtype=np.int64)
        full = coeffs @ self.mod_rows % self.p
        T = list(T)
        return np.concatenate([full[:, T], full[:, [self.n + c for c in T]]], axis=1)

    def witness_vector(self, T: Sequence[int]) -> np.ndarray | None:
        """First kernel vector on T outside the group subspace, or None.

        Deterministic: the kernel basis order is fixed and each vector is
        reduced against the echelonized group restriction; the first nonzero
        residual wins.
        """
        p = self.p
        kernel = _kernels.nullspace_mod(self.commutant_matrix(T), p)
        gvecs = self.group_vectors_on(T)
        work = np.ascontiguousarray(gvecs % p)
        if work.size:
            _, pivots = _kernels.rref_mod_inplace(work, p)
            work = np.asarray(work)
        else:
            pivots = []
        for vec in kernel:
            residual = vec % p
            for r, pc in enumerate(pivots):
                if residual[pc] != 0:
                    residual = (residual - residual[pc] * work[r]) % p
            if np.any(residual):
                return residual
        return None

    def lift(self, T: Sequence[int], vec_on_T: np.ndarray) -> tuple[int, ...]:
        e = [0] * (2 * self.n)
        w = len(T)
        for a, t in enumerate(T):
            e[t] = int(vec_on_T[a])
            e[self.n + t] = int(vec_on_T[w + a])
        return tuple(e)


def support_logical_dims(
    source: LdiForm | Tableau, p: int, T: Sequence[int]
) -> tuple[int, int]:
    """Dimensions over Z_p of (commuting errors on T, group elements on T).

    ``kernel_dim >= group_dim`` always; a strict gap means an undetectable
    non-group error lives within the support.
    """
    if len(T) < 1:
        raise ValueError("support must contain at least one register")
    return _SupportAnalyzer(_integer_rows(source), p).dims(T)


def _make_witness(
    analyzer: _SupportAnalyzer, tableau_int: Tableau, T: Sequence[int], vec
) -> ErrorWitness | None:
    e = analyzer.lift(T, vec)
    n = analyzer.n
    wt = sum(1 for t in range(n) if (e[t], e[n + t]) != (0, 0))
    if wt < len(T):
        # Already reachable at a smaller support; that weight was scanned first.
        return None
    syn_int, syn_mod = syndrome(tableau_int, e, analyzer.p)
    return ErrorWitness(
        word=phi_decode(e, analyzer.p),
        weight=wt,
        syndrome_int=syn_int,
        syndrome_mod=syn_mod,
        classification=classify(syn_int, analyzer.p),
    )


def distance_search(
    source: LdiForm | Tableau, p: int, w_max: int
) -> DistanceReport:
    """Smallest weight of an undetectable non-group error, up to ``w_max``.

    Supports are enumerated in lexicographic order by increasing size; the
    same pass tracks the minimum weight of a nonzero stabilizer-group element
    for the degeneracy verdict.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    tableau = _integer_rows(source)
    if w_max > tableau.n:
        raise ValueError("w_max cannot exceed the register count")
    start = time.perf_counter()
    analyzer = _SupportAnalyzer(tableau, p)

    distance: int | None = None
    witness: ErrorWitness | None = None
    msw: int | None = None
    for w in range(1, w_max + 1):
        for T in itertools.combinations(range(tableau.n), w):
            kernel_dim, group_dim = analyzer.dims(T)
            if msw is None and group_dim > 0:
                msw = w
            if distance is None and kernel_dim > group_dim:
                vec = analyzer.witness_vector(T)
                if vec is not None:
                    wit = _make_witness(analyzer, tableau, T, vec)
                    if wit is not None:
                        distance = w
                        witness = wit
        if distance is not None and msw is not None:
            break

    degenerate = msw is not None and (distance is None or msw < distance)
    elapsed = (time.perf_counter() - start) * 1000.0
    return DistanceReport(
        prime=p,
        w_max=w_max,
        distance=distance,
        witness=witness,
        degenerate=degenerate,
        min_stabilizer_weight=msw,
        elapsed_ms=elapsed,
    )


def scan_primes(
    source: LdiForm | Tableau, primes: Iterable[int], w_max: int
) -> list[DistanceReport]:
    """One independent distance search per prime."""
    primes = list(primes)
    for p in primes:
        if not is_prime(p):
            raise ValueError(f"scan list contains non-prime {p}")
    return [distance_search(source, p, w_max) for p in primes]


def _site_assignments(p: int) -> list[tuple[int, int]]:
    return [(x, z) for x in range(p) for z in range(p) if (x, z) != (0, 0)]


def enumeration_oracle(
    source: LdiForm | Tableau, p: int, w_max: int, budget: int = 10_000_000
) -> DistanceReport:
    """Brute-force reference: enumerate every error of weight <= w_max.

    Checks undetectability by direct products and group membership by solving
    the coefficient system; exists solely to validate ``distance_search``.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    tableau = _integer_rows(source)
    n, m = tableau.n, tableau.m
    if w_max > n:
        raise ValueError("w_max cannot exceed the register count")
    cost = p ** (2 * w_max) * comb(n, w_max)
    if cost > budget:
        raise ValueError(f"enumeration cost {cost} exceeds budget {budget}")
    start = time.perf_counter()

    mod_rows = np.array(tableau.rows, dtype=np.int64) % p
    h = np.concatenate([(-mod_rows[:, n:]) % p, mod_rows[:, :n]], axis=1)
    mod_tab = Tableau(tuple(tuple(int(v) for v in r) for r in mod_rows), n, p)

    sites = _site_assignments(p)
    distance: int | None = None
    witness: ErrorWitness | None = None
    for w in range(1, w_max + 1):
        for T in itertools.combinations(range(n), w):
            block = np.array(
                list(itertools.product(sites, repeat=w)), dtype=np.int64
            )  # (count, w, 2)
            E = np.zeros((block.shape[0], 2 * n), dtype=np.int64)
            for a, t in enumerate(T):
                E[:, t] = block[:, a, 0]
                E[:, n + t] = block[:, a, 1]
            syndromes = E @ h.T % p
            undetectable = np.nonzero(~syndromes.any(axis=1))[0]
            for idx in undetectable:
                e = tuple(int(v) for v in E[idx])
                member, _ = in_rowspace(e, mod_tab, p)
                if member:
                    continue
                syn_int, syn_mod = syndrome(tableau, e, p)
                distance = w
                witness = ErrorWitness(
                    word=phi_decode(e, p),
                    weight=w,
                    syndrome_int=syn_int,
                    syndrome_mod=syn_mod,
                    classification=classify(syn_int, p),
                )
                break
            if distance is not None:
                break
        if distance is not None:
            break

    # Minimum stabilizer weight by enumerating the whole group mod p.
    msw: int | None = None
    best = None
    for coeffs in itertools.product(range(p), repeat=m):
        if not any(coeffs):
            continue
        vec = np.array(coeffs, dtype=np.int64) @ mod_rows % p
        wt = int(np.count_nonzero(vec[:n] | vec[n:]))
        if wt > 0 and (best is None or wt < best):
            best = wt
    if best is not None and best <= w_max:
        msw = best

    degenerate = msw is not None and (distance is None or msw < distance)
    elapsed = (time.perf_counter() - start) * 1000.0
    return DistanceReport(
        prime=p,
        w_max=w_max,
        distance=distance,
        witness=witness,
        degenerate=degenerate,
        min_stabilizer_weight=msw,
        elapsed_ms=elapsed,
    )
