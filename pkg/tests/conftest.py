from __future__ import annotations

import random
from pathlib import Path

import pytest

from qldi import StabilizerCode, Tableau, parse_code, rref_mod, symplectic_product

FIXTURES = Path(__file__).resolve().parent.parent / "src" / "qldi" / "fixtures"

# Paper worked example: phi_2 tableau of {YIZXYI, ZXIZYI, ZIXYZI, IIIIIX, IZZZZI}.
SIX_QUBIT_PHI2 = (
    (1, 0, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0),
    (0, 1, 0, 0, 1, 0, 1, 0, 0, 1, 1, 0),
    (0, 0, 1, 1, 0, 0, 1, 0, 0, 1, 1, 0),
    (0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0),
)

# ... its canonical form after: swap rows (4,5), H on register 4,
# swap registers (5,6), add row 4 to rows 2 and 3.
SIX_QUBIT_CANONICAL = (
    (1, 0, 0, 0, 0, 1, 1, 0, 1, 1, 0, 1),
    (0, 1, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0),
    (0, 0, 1, 0, 0, 0, 1, 1, 1, 1, 0, 0),
    (0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 1),
    (0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0),
)

# ... and its full-variant LDI form: -2 added at the Z1 entry (row 4, col 2).
SIX_QUBIT_LDI = (
    (1, 0, 0, 0, 0, 1, 1, 0, 1, 1, 0, 1),
    (0, 1, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0),
    (0, 0, 1, 0, 0, 0, 1, 1, 1, 1, 0, 0),
    (0, 0, 0, 1, 0, 0, 0, -1, 1, 0, 0, 1),
    (0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0),
)


@pytest.fixture(scope="session")
def six_qubit() -> StabilizerCode:
    return parse_code((FIXTURES / "six_qubit.code").read_text())


@pytest.fixture(scope="session")
def five_qubit() -> StabilizerCode:
    return parse_code((FIXTURES / "five_qubit.code").read_text())


def random_code(rng: random.Random, n: int, q: int, m: int) -> StabilizerCode:
    """Random valid stabilizer code by rejection sampling.

    Candidate rows must commute mod q with everything accepted so far and
    keep the set independent.
    """
    rows: list[tuple[int, ...]] = []
    attempts = 0
    while len(rows) < m:
        attempts += 1
        if attempts > 200_000:
            raise RuntimeError("rejection sampling stalled")
        cand = tuple(rng.randrange(q) for _ in range(2 * n))
        if not any(cand):
            continue
        if any(symplectic_product(r, cand, q) != 0 for r in rows):
            continue
        trial = Tableau(tuple(rows) + (cand,), n, q)
        _, rank, _ = rref_mod(trial, q)
        if rank != len(rows) + 1:
            continue
        rows.append(cand)
    return StabilizerCode(Tableau(tuple(rows), n, q), n, n - m, q)


@pytest.fixture(scope="session")
def corpus() -> list[StabilizerCode]:
    """Deterministic corpus of 56 random valid codes with n <= 5, q in {2, 3}."""
    rng = random.Random(20240817)
    codes = []
    for q in (2, 3):
        for n in (2, 3, 4, 5):
            for m in range(1, n):
                codes.append(random_code(rng, n, q, m))
    while len(codes) < 56:
        n = rng.choice((3, 4, 5))
        q = rng.choice((2, 3))
        codes.append(random_code(rng, n, q, rng.randrange(1, n)))
    return codes
